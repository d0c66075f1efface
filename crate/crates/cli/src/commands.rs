//! Verb implementations. Each returns the full stdout text; failures carry
//! whatever was printed before the failing step.

use std::fmt::Write;

use dplane_core::catalog::{self, by_name, extract, verify_specialization, EntryKind, Forms, SpecializationReport};
use dplane_core::cohomology::{h0_ic, h1_ic, h2_ic, rao_function};
use dplane_core::liaison::{self, is_minimal, liaison_invariants, LiaisonInvariants};
use dplane_core::polyoracle::{default_guard, Field, GradedIdeal, Poly, PrimeField, Quotient, Rational};
use dplane_core::profiles::{gamma_c, gamma_c_direct, tail_from_gamma, z_from_gamma, CurveModel, ProfileKind};
use dplane_core::scheme::{component_graph, components as list_components, nonempty, GraphNode};
use dplane_core::selftest::{run_all, Config};
use dplane_core::triples::{component_dim, curve_class};
use dplane_core::{classify, rho_e, rho_s, CurveClass, CurveKind, Error, IntFn, Triple};
use serde::Serialize;

pub struct Failure {
    pub message: String,
    pub output: String,
}

impl Failure {
    fn new(message: impl Into<String>, output: String) -> Self {
        Failure {
            message: message.into(),
            output,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::new(e.to_string(), String::new())
    }
}

pub type Outcome = Result<String, Failure>;

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn model(z: i64, y: i64, p: i64, kind: ProfileKind) -> Result<CurveModel, Error> {
    CurveModel::with_kind(Triple::new(z, y, p)?, kind)
}

fn node(t: &Triple) -> GraphNode {
    GraphNode {
        z: t.z(),
        y: t.y(),
        p: t.p(),
        dim: component_dim(t),
    }
}

#[derive(Serialize)]
struct ComponentsJson {
    d: i64,
    g: i64,
    components: Vec<GraphNode>,
}

fn component_listing(d: i64, g: i64, out: &mut String) {
    let comps = list_components(d, g);
    let _ = writeln!(out, "H_{{{d},{g}}}: {} component(s)", comps.len());
    let _ = writeln!(out, "{:>5} {:>5} {:>5} {:>6}  class", "z", "y", "p", "dim");
    for t in &comps {
        let ok = curve_class(t) == CurveClass { d, g };
        let _ = writeln!(
            out,
            "{:>5} {:>5} {:>5} {:>6}  {}",
            t.z(),
            t.y(),
            t.p(),
            component_dim(t),
            if ok { "ok" } else { "MISMATCH" }
        );
    }
}

fn components_json(d: i64, g: i64) -> ComponentsJson {
    ComponentsJson {
        d,
        g,
        components: list_components(d, g).iter().map(node).collect(),
    }
}

pub fn components(d: i64, g: Option<i64>, min_genus: Option<i64>, json: bool) -> Outcome {
    let genera: Vec<i64> = match (g, min_genus) {
        (Some(g), _) => {
            if !nonempty(d, g) {
                return Err(Error::EmptyScheme { d, g }.into());
            }
            vec![g]
        }
        (None, Some(lo)) => {
            let top = (d - 1) * (d - 2) / 2;
            (lo..=top).rev().filter(|&g| nonempty(d, g)).collect()
        }
        (None, None) => unreachable!("clap requires G or --min-genus"),
    };
    if json {
        return Ok(match g {
            Some(g) => to_json(&components_json(d, g)),
            None => to_json(&genera.iter().map(|&g| components_json(d, g)).collect::<Vec<_>>()),
        });
    }
    let mut out = String::new();
    if genera.is_empty() {
        let _ = writeln!(out, "no nonempty H_{{{d},g}} with g >= {}", min_genus.unwrap_or(0));
    }
    for g in genera {
        component_listing(d, g, &mut out);
    }
    Ok(out)
}

pub fn connect(d: i64, g: i64, dot: bool, json: bool) -> Outcome {
    if !nonempty(d, g) {
        return Err(Error::EmptyScheme { d, g }.into());
    }
    let graph = component_graph(d, g);
    let connected = graph.is_connected();
    if json {
        return Ok(to_json(&graph.to_json()));
    }
    let mut out = String::new();
    if dot {
        out.push_str(&graph.to_dot());
        let _ = writeln!(out, "// connected: {connected}");
        return Ok(out);
    }
    let _ = writeln!(
        out,
        "H_{{{d},{g}}}: {} component(s), {} edge(s)",
        graph.nodes().len(),
        graph.edge_count()
    );
    for (a, b) in graph.edges() {
        let _ = writeln!(out, "  {a} -> {b}");
    }
    let _ = writeln!(out, "connected: {connected}");
    Ok(out)
}

#[derive(Serialize)]
struct RaoRow {
    n: i64,
    h0: i64,
    h1: i64,
    h2: i64,
    rho_e: Option<i64>,
    rho_s: Option<i64>,
}

#[derive(Serialize)]
struct RaoJson {
    model: CurveModel,
    class: CurveClass,
    table: Vec<RaoRow>,
    rao: IntFn,
    rho_e: Option<IntFn>,
    rho_s: Option<IntFn>,
    verdict: CurveKind,
}

fn cell(v: Option<i64>) -> String {
    v.map_or_else(|| "-".into(), |v| v.to_string())
}

pub fn rao(z: i64, y: i64, p: i64, kind: ProfileKind, json: bool) -> Outcome {
    let m = model(z, y, p, kind)?;
    let class = curve_class(m.triple());
    let rao = rao_function(&m)?;
    let (e, s) = (rho_e(class.d, class.g).ok(), rho_s(class.d, class.g).ok());
    let verdict = classify(&m);
    let (lo, hi) = match rao.support() {
        Some((a, b)) => (a.min(0) - 1, b.max(class.d) + 1),
        None => (-1, class.d + 1),
    };
    let table: Vec<RaoRow> = (lo..=hi)
        .map(|n| RaoRow {
            n,
            h0: h0_ic(&m, n),
            h1: h1_ic(&m, n),
            h2: h2_ic(&m, n),
            rho_e: e.as_ref().map(|f| f.get(n)),
            rho_s: s.as_ref().map(|f| f.get(n)),
        })
        .collect();
    if json {
        return Ok(to_json(&RaoJson {
            model: m,
            class,
            table,
            rao,
            rho_e: e,
            rho_s: s,
            verdict,
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "curve {m}  d={} g={}", class.d, class.g);
    let _ = writeln!(out, "{:>5} {:>6} {:>6} {:>6} {:>6} {:>6}", "n", "h0", "h1", "h2", "rhoE", "rhoS");
    for r in &table {
        let _ = writeln!(
            out,
            "{:>5} {:>6} {:>6} {:>6} {:>6} {:>6}",
            r.n,
            r.h0,
            r.h1,
            r.h2,
            cell(r.rho_e),
            cell(r.rho_s)
        );
    }
    let show = |f: &Option<IntFn>| f.as_ref().map_or_else(|| "undefined".into(), |f| f.to_string());
    let _ = writeln!(out, "h1   = {rao}");
    let _ = writeln!(out, "rhoE = {}", show(&e));
    let _ = writeln!(out, "rhoS = {}", show(&s));
    let _ = writeln!(out, "verdict: {verdict}");
    Ok(out)
}

#[derive(Serialize)]
struct CharacterJson {
    model: CurveModel,
    structural: IntFn,
    direct: IntFn,
    equal: bool,
    z_recovered: i64,
}

pub fn character(z: i64, y: i64, p: i64, kind: ProfileKind, json: bool) -> Outcome {
    let m = model(z, y, p, kind)?;
    let structural = gamma_c(&m);
    let direct = gamma_c_direct(&m);
    let equal = structural == direct;
    let s = m.profile().s();
    let z_recovered = z_from_gamma(&tail_from_gamma(&structural, y, p, s), p, s)?;
    let mut out = String::new();
    if json {
        out = to_json(&CharacterJson {
            model: m,
            structural,
            direct,
            equal,
            z_recovered,
        });
    } else {
        let _ = writeln!(out, "curve {m}");
        let _ = writeln!(out, "gamma (structural) = {structural}");
        let _ = writeln!(out, "gamma (direct)     = {direct}");
        let _ = writeln!(out, "equal: {equal}");
        let _ = writeln!(out, "z recovered: {z_recovered}");
    }
    if !equal {
        return Err(Failure::new("structural and direct characters differ", out));
    }
    if z_recovered != z {
        return Err(Failure::new(format!("recovered z = {z_recovered}, expected {z}"), out));
    }
    Ok(out)
}

#[derive(Serialize)]
struct LinkJson {
    source: CurveModel,
    source_class: CurveClass,
    target: CurveModel,
    target_class: CurveClass,
    /// `q` for a link, the height for a biliaison.
    parameter: i64,
    invariants: LiaisonInvariants,
    minimal: Option<bool>,
}

fn linkage_report(verb: &str, label: &str, m: CurveModel, target: CurveModel, parameter: i64, json: bool) -> Outcome {
    let minimal = is_minimal(&m);
    let inv = liaison_invariants(&m);
    let (sc, tc) = (curve_class(m.triple()), curve_class(target.triple()));
    if json {
        return Ok(to_json(&LinkJson {
            source: m,
            source_class: sc,
            target,
            target_class: tc,
            parameter,
            invariants: inv,
            minimal: minimal.ok(),
        }));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{verb}");
    let _ = writeln!(out, "  source {m}  d={} g={}", sc.d, sc.g);
    let _ = writeln!(out, "  target {target}  d={} g={}", tc.d, tc.g);
    let _ = writeln!(out, "  {label} = {parameter}");
    let _ = writeln!(out, "  invariants: z={} p-y={}", inv.z, inv.p_minus_y);
    let _ = match minimal {
        Ok(b) => writeln!(out, "  source minimal: {b}"),
        Err(e) => writeln!(out, "  source minimal: n/a ({e})"),
    };
    Ok(out)
}

pub fn liaison(z: i64, y: i64, p: i64, q: i64, kind: ProfileKind, json: bool) -> Outcome {
    let m = model(z, y, p, kind)?;
    let target = liaison::link(&m, q)?;
    linkage_report("link", "q", m, target, q, json)
}

pub fn bilink(z: i64, y: i64, p: i64, y_new: i64, kind: ProfileKind, json: bool) -> Outcome {
    let m = model(z, y, p, kind)?;
    let (target, height) = liaison::bilink(&m, y_new)?;
    linkage_report("elementary biliaison", "height", m, target, height, json)
}

const DESCRIPTIONS: [&str; 5] = [
    "curve with triple (r,2,p); forms overridable with --form-s/--form-g/--form-f",
    "limit of the family, triple (r+p-2,1,p+1)",
    "unsaturated presentation J of the limit",
    "fibre of the specializing family at t (integer or a/b); t=0 is the limit",
    "line pair specializing to a plane conic; t=0 is the conic",
];

pub fn catalog(name: Option<&str>, overrides: [Option<String>; 3]) -> Outcome {
    let Some(name) = name else {
        let mut out = String::new();
        for (form, desc) in catalog::NAME_FORMS.iter().zip(DESCRIPTIONS) {
            let _ = writeln!(out, "{form:<20} {desc}");
        }
        return Ok(out);
    };
    let entry = by_name(name)?;
    let ideal = if overrides.iter().any(Option::is_some) {
        let EntryKind::ExtremalLike { r, p } = entry.kind else {
            return Err(Failure::new("form overrides apply only to extremal-like entries", String::new()));
        };
        let mut forms = Forms::standard(r, p)?;
        let [s, g, f] = overrides;
        for (slot, text) in [(&mut forms.s, s), (&mut forms.g, g), (&mut forms.f, f)] {
            if let Some(text) = text {
                *slot = Poly::parse(&text)?;
            }
        }
        catalog::extremal_like_with(r, p, &forms)?
    } else {
        entry.ideal
    };
    Ok(format!("# {name}: triple {}\n{ideal}", entry.expected))
}

/// Input to `verify`.
#[derive(Clone, Debug)]
pub enum Source {
    Catalog(String),
    File(String),
}

pub fn parse_source(s: &str) -> Result<Source, String> {
    if let Some(name) = s.strip_prefix("catalog:") {
        Ok(Source::Catalog(name.to_string()))
    } else if let Some(path) = s.strip_prefix("file:") {
        Ok(Source::File(path.to_string()))
    } else {
        Err(format!("expected catalog:NAME or file:PATH, got {s:?}"))
    }
}

#[derive(Serialize)]
struct DegreeRow {
    n: u32,
    formula: i64,
    oracle: usize,
    level: usize,
    agree: bool,
}

#[derive(Serialize)]
struct VerifyJson {
    source: String,
    triple: Triple,
    class: CurveClass,
    expected: Option<Triple>,
    window: (u32, u32),
    profile: String,
    saturation_level: usize,
    degrees: Vec<DegreeRow>,
    specialization: Option<SpecializationReport>,
    passed: bool,
}

const FILE_MAX_DEGREE: u32 = 12;

pub fn verify(source: &str, max_degree: Option<u32>, kind: ProfileKind, prime: bool, json: bool) -> Outcome {
    let parsed = parse_source(source).map_err(|e| Failure::new(e, String::new()))?;
    let (ideal, expected, family, default_degree) = match &parsed {
        Source::Catalog(name) => {
            let entry = by_name(name)?;
            let family = match entry.kind {
                EntryKind::Family { r, p, .. } => Some((r, p)),
                _ => None,
            };
            let fit = entry.fit_degree();
            (entry.ideal, Some(entry.expected), family, fit)
        }
        Source::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| Failure::new(format!("{path}: {e}"), String::new()))?;
            let ideal: GradedIdeal = text.parse()?;
            (ideal, None, None, FILE_MAX_DEGREE)
        }
    };
    let max_degree = max_degree.unwrap_or(default_degree);
    let report = if prime {
        oracle_report::<PrimeField>(&ideal, max_degree, kind)?
    } else {
        oracle_report::<Rational>(&ideal, max_degree, kind)?
    };
    let specialization = family.map(|(r, p)| verify_specialization(r, p)).transpose()?;
    let expected_ok = expected.is_none_or(|t| t == report.triple);
    let agree = report.degrees.iter().all(|r| r.agree);
    let spec_ok = specialization.as_ref().is_none_or(SpecializationReport::passed);
    let passed = expected_ok && agree && spec_ok;
    let out = if json {
        to_json(&VerifyJson {
            source: source.to_string(),
            triple: report.triple,
            class: report.class,
            expected,
            window: report.window,
            profile: report.profile.clone(),
            saturation_level: report.level,
            degrees: report.degrees,
            specialization,
            passed,
        })
    } else {
        let mut out = String::new();
        let _ = writeln!(out, "source: {source}");
        let _ = match expected {
            Some(e) => writeln!(out, "triple: {}  expected {e}", report.triple),
            None => writeln!(out, "triple: {}", report.triple),
        };
        let _ = writeln!(
            out,
            "class: d={} g={}  (Hilbert polynomial fit on degrees {}..={})",
            report.class.d, report.class.g, report.window.0, report.window.1
        );
        let _ = writeln!(out, "profile: {}", report.profile);
        let _ = writeln!(out, "{:>5} {:>8} {:>8} {:>6}  agree", "n", "formula", "oracle", "level");
        for r in &report.degrees {
            let _ = writeln!(
                out,
                "{:>5} {:>8} {:>8} {:>6}  {}",
                r.n,
                r.formula,
                r.oracle,
                r.level,
                if r.agree { "yes" } else { "NO" }
            );
        }
        let _ = writeln!(out, "saturation stabilized at level {}", report.level);
        let _ = writeln!(out, "{}", if agree { "all degrees agree" } else { "degrees disagree" });
        if let Some(s) = &specialization {
            out.push_str(&s.to_string());
        }
        out
    };
    if !expected_ok {
        return Err(Failure::new(
            format!("extracted {} but the entry has {}", report.triple, expected.unwrap()),
            out,
        ));
    }
    if !agree {
        return Err(Failure::new("oracle and formula disagree", out));
    }
    if !spec_ok {
        return Err(Failure::new("specialization report failed", out));
    }
    Ok(out)
}

struct OracleReport {
    triple: Triple,
    class: CurveClass,
    window: (u32, u32),
    profile: String,
    level: usize,
    degrees: Vec<DegreeRow>,
}

fn oracle_report<F: Field>(ideal: &GradedIdeal, max_degree: u32, kind: ProfileKind) -> Result<OracleReport, Error> {
    let mut q = Quotient::<F>::new(ideal);
    let ex = extract(&mut q, max_degree)?;
    let m = CurveModel::with_kind(ex.triple, kind)?;
    let sat = q.saturate(max_degree.max(ideal.max_degree()), default_guard(ideal))?;
    let degrees = (0..=max_degree)
        .map(|n| {
            let formula = h0_ic(&m, n as i64);
            let oracle = sat.dims[n as usize];
            DegreeRow {
                n,
                formula,
                oracle,
                level: sat.stabilized_at[n as usize],
                agree: formula == oracle as i64,
            }
        })
        .collect();
    Ok(OracleReport {
        triple: ex.triple,
        class: ex.class,
        window: ex.window,
        profile: format!("{kind} [{}]", m.profile()),
        level: sat.level,
        degrees,
    })
}

pub fn selftest(deep: bool, json: bool) -> Outcome {
    let outcomes = run_all(Config { deep });
    let passed = outcomes.iter().filter(|o| o.passed()).count();
    let out = if json {
        to_json(&outcomes)
    } else {
        let mut out = String::new();
        for o in &outcomes {
            let _ = writeln!(out, "{o}");
        }
        let _ = writeln!(out, "{passed}/{} criteria passed", outcomes.len());
        out
    };
    if passed == outcomes.len() {
        Ok(out)
    } else {
        Err(Failure::new(format!("{} criteria failed", outcomes.len() - passed), out))
    }
}
