//! The ten acceptance criteria, runnable from tests and from the CLI.

use std::fmt;
use std::time::{Duration, Instant};

use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bounds::{classify, rho_e, rho_s, CurveKind};
use crate::catalog::{conic_fiber, extract, extremal_like_ideal, limit_ideal, verify_specialization};
use crate::cohomology::{h0_ic, h1_ic, rao_function};
use crate::foundations::half_product;
use crate::liaison::{bilink, liaison_invariants, link};
use crate::polyoracle::{default_guard, GradedIdeal, Quotient, Rational};
use crate::profiles::{gamma_c, gamma_c_direct, tail_from_gamma, z_from_gamma, CurveModel, ProfileKind};
use crate::scheme::{components, is_connected, nonempty};
use crate::triples::{component_dim, curve_class, flag_dim, section_space_dim, Triple};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Config {
    /// Doubles the genus depth of the `(d, g)` scans.
    pub deep: bool,
}

impl Config {
    fn depth(&self) -> i64 {
        if self.deep {
            80
        } else {
            40
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub correct: bool,
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn passed(&self) -> bool {
        self.correct && self.within_budget()
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = match (self.correct, self.within_budget()) {
            (true, true) => "PASS",
            (true, false) => "FAIL (over budget)",
            (false, _) => "FAIL",
        };
        write!(
            f,
            "criterion {:>2} {:<28} {verdict:<18} {:>8.3}s / {:>3}s  {}",
            self.id,
            self.name,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str, u64); 10] = [
    (1, "component census", 1),
    (2, "dimension identity", 1),
    (3, "connectedness", 1),
    (4, "rao bounds", 10),
    (5, "duality", 5),
    (6, "character cross-check", 5),
    (7, "oracle vs formulas", 120),
    (8, "specialization", 120),
    (9, "conic family", 1),
    (10, "liaison algebra", 1),
];

/// Nonempty `(d, g)` with `d ≤ max_d` and `g ≥ ½(d−2)(d−3) − depth`.
pub fn scan_classes(max_d: i64, depth: i64) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for d in 1..=max_d {
        let lo = half_product(d - 2, d - 3) - depth;
        for g in lo..=half_product(d - 1, d - 2) {
            if nonempty(d, g) {
                out.push((d, g));
            }
        }
    }
    out
}

/// Every component of the scan with each profile constructor that fits.
pub fn model_pool(max_d: i64, depth: i64) -> Vec<CurveModel> {
    let mut out = Vec::new();
    for (d, g) in scan_classes(max_d, depth) {
        for t in components(d, g) {
            for kind in [ProfileKind::Collinear, ProfileKind::Generic] {
                if let Ok(m) = CurveModel::with_kind(t, kind) {
                    if !out.contains(&m) {
                        out.push(m);
                    }
                }
            }
        }
    }
    out
}

type Check = std::result::Result<String, String>;

fn census() -> Check {
    let two: Vec<Triple> = components(2, 0);
    let expect = vec![Triple::new(0, 1, 1).unwrap(), Triple::new(0, 0, 2).unwrap()];
    if two != expect {
        return Err(format!("components(2,0) = {two:?}"));
    }
    for d in 3..=12 {
        let c = components(d, half_product(d - 1, d - 2));
        if c != vec![Triple::new(0, 0, d).unwrap()] {
            return Err(format!("plane curves of degree {d}: {c:?}"));
        }
    }
    Ok("H_{2,0} has 2 components; plane genus has only (0,0,d) for d in 3..=12".into())
}

fn dimensions(cfg: Config) -> Check {
    let mut n = 0;
    for (d, g) in scan_classes(12, cfg.depth()) {
        for t in components(d, g) {
            if component_dim(&t) != flag_dim(&t) + section_space_dim(&t) {
                return Err(format!("{t}: {} != {} + {}", component_dim(&t), flag_dim(&t), section_space_dim(&t)));
            }
            n += 1;
        }
    }
    Ok(format!("{n} components"))
}

fn connectedness(cfg: Config) -> Check {
    let classes = scan_classes(12, cfg.depth());
    for &(d, g) in &classes {
        if !is_connected(d, g).map_err(|e| e.to_string())? {
            return Err(format!("H_{{{d},{g}}} is disconnected"));
        }
    }
    Ok(format!("{} classes connected", classes.len()))
}

fn rao_bounds(cfg: Config) -> Check {
    let (mut tested, mut extremal, mut sub) = (0, 0, 0);
    for m in model_pool(10, cfg.depth()) {
        let kind = classify(&m);
        if kind == CurveKind::Planar {
            continue;
        }
        let c = curve_class(m.triple());
        let rao = rao_function(&m).map_err(|e| e.to_string())?;
        let e = rho_e(c.d, c.g).map_err(|e| e.to_string())?;
        if !rao.le_pointwise(&e) {
            return Err(format!("{m}: rao {rao} exceeds extremal bound {e}"));
        }
        if (rao == e) != (kind == CurveKind::Extremal) {
            return Err(format!("{m}: rao {rao}, bound {e}, kind {kind}"));
        }
        if kind != CurveKind::Extremal {
            let s = rho_s(c.d, c.g).map_err(|e| e.to_string())?;
            if !rao.le_pointwise(&s) {
                return Err(format!("{m}: rao {rao} exceeds subextremal bound {s}"));
            }
            if (rao == s) != (kind == CurveKind::Subextremal) {
                return Err(format!("{m}: rao {rao}, bound {s}, kind {kind}"));
            }
        }
        tested += 1;
        extremal += (kind == CurveKind::Extremal) as usize;
        sub += (kind == CurveKind::Subextremal) as usize;
    }
    Ok(format!("{tested} non-planar models ({extremal} extremal, {sub} subextremal)"))
}

fn duality(cfg: Config) -> Check {
    let pool = model_pool(10, cfg.depth());
    for m in &pool {
        let d = m.degree();
        for n in -6..=d + 6 {
            if h1_ic(m, n) != h1_ic(m, d - 2 - n) {
                return Err(format!("{m}: h1({n}) != h1({})", d - 2 - n));
            }
        }
    }
    Ok(format!("{} models", pool.len()))
}

fn characters(cfg: Config) -> Check {
    let pool = model_pool(10, cfg.depth());
    for m in &pool {
        let g = gamma_c(m);
        if g != gamma_c_direct(m) {
            return Err(format!("{m}: structural {g} vs direct {}", gamma_c_direct(m)));
        }
        let t = m.triple();
        let s = m.profile().s();
        let z = z_from_gamma(&tail_from_gamma(&g, t.y(), t.p(), s), t.p(), s).map_err(|e| format!("{m}: {e}"))?;
        if z != t.z() {
            return Err(format!("{m}: recovered z = {z}"));
        }
    }
    Ok(format!("{} models", pool.len()))
}

const ORACLE_DEGREE: u32 = 8;

fn oracle_case(ideal: &GradedIdeal, expect: Triple) -> std::result::Result<usize, String> {
    let mut q = Quotient::<Rational>::new(ideal);
    let fit = (expect.degree() + expect.z() + 2).max(8) as u32;
    let ex = extract(&mut q, fit).map_err(|e| format!("{expect}: {e}"))?;
    if ex.class != curve_class(&expect) {
        return Err(format!("{expect}: fitted {} expected {}", ex.class, curve_class(&expect)));
    }
    if ex.triple != expect {
        return Err(format!("extracted {} expected {expect}", ex.triple));
    }
    let model = CurveModel::with_kind(expect, ProfileKind::Collinear).map_err(|e| e.to_string())?;
    let top = ORACLE_DEGREE.max(ideal.max_degree());
    let sat = q.saturate(top, default_guard(ideal)).map_err(|e| e.to_string())?;
    for n in 0..=ORACLE_DEGREE {
        let formula = h0_ic(&model, n as i64);
        if sat.dims[n as usize] as i64 != formula {
            return Err(format!("{expect} degree {n}: oracle {} formula {formula}", sat.dims[n as usize]));
        }
    }
    Ok(sat.level)
}

fn oracle() -> Check {
    let (mut n, mut level) = (0, 0);
    for r in 0..=3 {
        for p in 2..=4 {
            let a = extremal_like_ideal(r, p).map_err(|e| e.to_string())?;
            level = level.max(oracle_case(&a, Triple::new(r, 2, p).unwrap())?);
            let b = limit_ideal(r, p).map_err(|e| e.to_string())?;
            level = level.max(oracle_case(&b, Triple::new(r + p - 2, 1, p + 1).unwrap())?);
            n += 2;
        }
    }
    Ok(format!("{n} ideals, degrees 0..={ORACLE_DEGREE}, saturation level <= {level}"))
}

fn specialization() -> Check {
    let mut max_level = 0;
    for r in 0..=3 {
        for p in 2..=4 {
            let report = verify_specialization(r, p).map_err(|e| e.to_string())?;
            if !report.passed() {
                return Err(report.to_string());
            }
            max_level = max_level.max(report.saturation_levels.iter().copied().max().unwrap_or(0));
        }
    }
    Ok(format!("12 cases; sat(J) settles by level {max_level}"))
}

fn conics() -> Check {
    for (t, expect) in [(1, Triple::new(0, 1, 1).unwrap()), (0, Triple::new(0, 0, 2).unwrap())] {
        let ideal = conic_fiber(&BigRational::from_integer(t.into()));
        let mut q = Quotient::<Rational>::new(&ideal);
        let ex = extract(&mut q, 8).map_err(|e| e.to_string())?;
        if ex.class.d != 2 || ex.class.g != 0 {
            return Err(format!("t={t}: Hilbert polynomial {}n + {}", ex.class.d, 1 - ex.class.g));
        }
        if ex.triple != expect {
            return Err(format!("t={t}: triple {} expected {expect}", ex.triple));
        }
    }
    Ok("both fibres 2n+1; triples (0,1,1) and (0,0,2)".into())
}

/// Seed of the liaison run.
pub const LIAISON_SEED: u64 = 0x2a;
pub const LIAISON_APPLICATIONS: usize = 200;

fn liaison_algebra(cfg: Config) -> Check {
    let pool = model_pool(10, cfg.depth());
    let mut rng = ChaCha8Rng::seed_from_u64(LIAISON_SEED);
    let (mut links, mut bilinks, mut attempts) = (0, 0, 0);
    while links + bilinks < LIAISON_APPLICATIONS {
        attempts += 1;
        if attempts > 100 * LIAISON_APPLICATIONS {
            return Err("could not find enough admissible applications".into());
        }
        let m = &pool[rng.random_range(0..pool.len())];
        let s = m.profile().s();
        if rng.random_bool(0.5) {
            let q = m.triple().p() + s + rng.random_range(0..6);
            let Ok(linked) = link(m, q) else { continue };
            if link(&linked, q).ok().as_ref() != Some(m) {
                return Err(format!("link by {q} is not an involution on {m}"));
            }
            if liaison_invariants(&linked) != liaison_invariants(m) {
                return Err(format!("link by {q} moved the invariants of {m}"));
            }
            if linked.degree() != 2 * q - m.degree() {
                return Err(format!("link by {q} of {m} has degree {}", linked.degree()));
            }
            links += 1;
        } else {
            let y_new = s + rng.random_range(0..6);
            let Ok((moved, h)) = bilink(m, y_new) else { continue };
            let back = bilink(&moved, m.triple().y()).map_err(|e| e.to_string())?;
            if back != (m.clone(), -h) {
                return Err(format!("bilink to {y_new} and back does not return {m}"));
            }
            if liaison_invariants(&moved) != liaison_invariants(m) {
                return Err(format!("bilink to {y_new} moved the invariants of {m}"));
            }
            bilinks += 1;
        }
    }
    Ok(format!("{links} links, {bilinks} bilinks, seed {LIAISON_SEED}"))
}

pub fn run_criterion(id: u8, cfg: Config) -> Option<Outcome> {
    let &(_, name, budget) = CRITERIA.iter().find(|c| c.0 == id)?;
    let start = Instant::now();
    let result = match id {
        1 => census(),
        2 => dimensions(cfg),
        3 => connectedness(cfg),
        4 => rao_bounds(cfg),
        5 => duality(cfg),
        6 => characters(cfg),
        7 => oracle(),
        8 => specialization(),
        9 => conics(),
        10 => liaison_algebra(cfg),
        _ => unreachable!("ids come from CRITERIA"),
    };
    let elapsed = start.elapsed();
    let (correct, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Some(Outcome {
        id,
        name,
        correct,
        detail,
        elapsed,
        budget: Duration::from_secs(budget),
    })
}

pub fn run_all(cfg: Config) -> Vec<Outcome> {
    CRITERIA
        .iter()
        .filter_map(|c| run_criterion(c.0, cfg))
        .collect()
}
