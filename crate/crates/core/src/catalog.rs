//! Explicit curves in `2H = {x² = 0}`: the extremal-like family, its limit,
//! the one-parameter degeneration between them and the conic family.
//! Triples are recovered from ideals with the oracle.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::foundations::half_product;
use crate::polyoracle::{default_guard, GradedIdeal, Monomial, Poly, Quotient, Rational};
use crate::triples::{curve_class, CurveClass, Triple};
use crate::{Error, Result};

fn mono(coef: impl Into<BigInt>, e: [u32; 4]) -> Poly {
    Poly::monomial(coef, Monomial::new(e))
}

fn sum(parts: &[Poly]) -> Poly {
    parts
        .iter()
        .try_fold(Poly::zero(), |acc, p| acc.add(p))
        .expect("catalog forms are homogeneous")
}

fn ideal(gens: Vec<Poly>) -> GradedIdeal {
    GradedIdeal::new(gens).expect("catalog generators are nonzero")
}

fn check_rp(r: i64, p: i64) -> Result<(u32, u32)> {
    if p < 2 || r < 0 {
        return Err(Error::OutOfRange(format!("need p >= 2 and r >= 0, got r={r} p={p}")));
    }
    Ok((r as u32, p as u32))
}

/// The forms `s`, `g`, `f` in `z, w` of degrees `p−1`, `r+p−2`, `r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forms {
    pub s: Poly,
    pub g: Poly,
    pub f: Poly,
}

impl Forms {
    /// `s = z^{p−1}`, `g = w^{r+p−2}`, `f = z^r`.
    pub fn standard(r: i64, p: i64) -> Result<Forms> {
        let (r, p) = check_rp(r, p)?;
        Ok(Forms {
            s: mono(1, [0, 0, p - 1, 0]),
            g: mono(1, [0, 0, 0, r + p - 2]),
            f: mono(1, [0, 0, r, 0]),
        })
    }

    /// Checks degrees, that the forms only involve `z, w`, and that `f` and
    /// `g` have no common zero on the line `x = y = 0`.
    pub fn validate(&self, r: i64, p: i64) -> Result<()> {
        let (r, p) = check_rp(r, p)?;
        for (name, form, deg) in [("s", &self.s, p - 1), ("g", &self.g, r + p - 2), ("f", &self.f, r)] {
            if form.degree() != Some(deg) {
                return Err(Error::NotAdmissible(format!(
                    "form {name} = {form} must be a nonzero form of degree {deg}"
                )));
            }
            if form.terms().any(|(m, _)| m.exponents()[0] + m.exponents()[1] > 0) {
                return Err(Error::NotAdmissible(format!("form {name} = {form} must only involve z and w")));
            }
        }
        if binary_resultant(&self.f, &self.g).is_zero() {
            return Err(Error::NotAdmissible(format!(
                "f = {} and g = {} share a zero on the line x = y = 0",
                self.f, self.g
            )));
        }
        Ok(())
    }
}

/// Coefficients of a binary form in `z, w`, from `z^d` down to `w^d`.
fn binary_coefficients(f: &Poly, d: u32) -> Vec<BigInt> {
    let mut c = vec![BigInt::zero(); d as usize + 1];
    for (m, v) in f.terms() {
        c[m.exponents()[3] as usize] = v.clone();
    }
    c
}

/// Sylvester resultant of two binary forms; zero iff they share a root on ℙ¹.
pub fn binary_resultant(f: &Poly, g: &Poly) -> BigInt {
    let (m, n) = (f.degree().unwrap_or(0), g.degree().unwrap_or(0));
    if f.is_zero() || g.is_zero() {
        return BigInt::zero();
    }
    let (a, b) = (binary_coefficients(f, m), binary_coefficients(g, n));
    let size = (m + n) as usize;
    if size == 0 {
        return BigInt::one();
    }
    let mut mat = vec![vec![Rational::zero(); size]; size];
    for i in 0..n as usize {
        for (j, v) in a.iter().enumerate() {
            mat[i][i + j] = Rational::from_integer(v.clone());
        }
    }
    for i in 0..m as usize {
        for (j, v) in b.iter().enumerate() {
            mat[n as usize + i][i + j] = Rational::from_integer(v.clone());
        }
    }
    determinant(mat).to_integer()
}

fn determinant(mut mat: Vec<Vec<Rational>>) -> Rational {
    let n = mat.len();
    let mut det = Rational::one();
    for c in 0..n {
        let Some(piv) = (c..n).find(|&i| !mat[i][c].is_zero()) else {
            return Rational::zero();
        };
        if piv != c {
            mat.swap(piv, c);
            det = -det;
        }
        det *= &mat[c][c];
        for i in c + 1..n {
            if !mat[i][c].is_zero() {
                let f = &mat[i][c] / &mat[c][c];
                let pivot = mat[c].clone();
                for (x, y) in mat[i].iter_mut().zip(pivot) {
                    *x -= &f * y;
                }
            }
        }
    }
    det
}

/// `⟨x², xy², y^{p+1} + xys, xfs + xyg + y^p f⟩`, a curve with triple `(r,2,p)`.
pub fn extremal_like_ideal(r: i64, p: i64) -> Result<GradedIdeal> {
    extremal_like_with(r, p, &Forms::standard(r, p)?)
}

pub fn extremal_like_with(r: i64, p: i64, forms: &Forms) -> Result<GradedIdeal> {
    forms.validate(r, p)?;
    let pu = p as u32;
    let x = mono(1, [1, 0, 0, 0]);
    let xy = mono(1, [1, 1, 0, 0]);
    let yp = mono(1, [0, pu, 0, 0]);
    Ok(ideal(vec![
        mono(1, [2, 0, 0, 0]),
        mono(1, [1, 2, 0, 0]),
        sum(&[mono(1, [0, pu + 1, 0, 0]), xy.mul(&forms.s)]),
        sum(&[x.mul(&forms.f).mul(&forms.s), xy.mul(&forms.g), yp.mul(&forms.f)]),
    ]))
}

/// `⟨x², xy, y^{p+2}, y^{p+1}w^{r+p−2} + xz^{r+2p−2}⟩`, triple `(r+p−2, 1, p+1)`.
pub fn limit_ideal(r: i64, p: i64) -> Result<GradedIdeal> {
    let (r, p) = check_rp(r, p)?;
    let b = r + p - 2;
    Ok(ideal(vec![
        mono(1, [2, 0, 0, 0]),
        mono(1, [1, 1, 0, 0]),
        mono(1, [0, p + 2, 0, 0]),
        sum(&[mono(1, [0, p + 1, 0, b]), mono(1, [1, 0, r + 2 * p - 2, 0])]),
    ]))
}

/// The unsaturated limit presentation
/// `J = ⟨x², xy², xyz^{p−1}, xyw^{r+p−2}, y^{p+2}, y^{p+1}w^{r+p−2} + xz^{r+2p−2}⟩`.
pub fn limit_presentation(r: i64, p: i64) -> Result<GradedIdeal> {
    let (r, p) = check_rp(r, p)?;
    let b = r + p - 2;
    Ok(ideal(vec![
        mono(1, [2, 0, 0, 0]),
        mono(1, [1, 2, 0, 0]),
        mono(1, [1, 1, p - 1, 0]),
        mono(1, [1, 1, 0, b]),
        mono(1, [0, p + 2, 0, 0]),
        sum(&[mono(1, [0, p + 1, 0, b]), mono(1, [1, 0, r + 2 * p - 2, 0])]),
    ]))
}

/// Fibre at `t` of the degeneration: `⟨x², xy², B, C⟩` with
/// `B = ty^{p+1} − xyz^{p−1}` and `C = xyw^{r+p−2} − tz^r(ty^p − xz^{p−1})`,
/// denominators cleared; `t = 0` gives [`limit_ideal`].
pub fn family_fiber(r: i64, p: i64, t: &BigRational) -> Result<GradedIdeal> {
    let (ru, pu) = check_rp(r, p)?;
    if t.is_zero() {
        return limit_ideal(r, p);
    }
    let (a, den) = (t.numer().clone(), t.denom().clone());
    let b = ru + pu - 2;
    Ok(ideal(vec![
        mono(1, [2, 0, 0, 0]),
        mono(1, [1, 2, 0, 0]),
        sum(&[mono(a.clone(), [0, pu + 1, 0, 0]), mono(-&den, [1, 1, pu - 1, 0])]),
        sum(&[
            mono(&den * &den, [1, 1, 0, b]),
            mono(-(&a * &a), [0, pu, ru, 0]),
            mono(&a * &den, [1, 0, ru + pu - 1, 0]),
        ]),
    ]))
}

/// The elements `D = y^{p+1}w^{r+p−2} + xz^{r+2p−2} − ty^p z^{r+p−1}` and
/// `E = y^{p+2}` of the fibre at `t ≠ 0` (denominators cleared).
pub fn family_members(r: i64, p: i64, t: &BigRational) -> Result<[Poly; 2]> {
    let (ru, pu) = check_rp(r, p)?;
    let (a, den) = (t.numer().clone(), t.denom().clone());
    let b = ru + pu - 2;
    let d = sum(&[
        mono(den.clone(), [0, pu + 1, 0, b]),
        mono(den, [1, 0, ru + 2 * pu - 2, 0]),
        mono(-a, [0, pu, ru + pu - 1, 0]),
    ]);
    Ok([d, mono(1, [0, pu + 2, 0, 0])])
}

/// `⟨x², xy, y², x + ty⟩` for `t ≠ 0`, and `⟨x, y²⟩` at `t = 0`.
pub fn conic_fiber(t: &BigRational) -> GradedIdeal {
    if t.is_zero() {
        return ideal(vec![mono(1, [1, 0, 0, 0]), mono(1, [0, 2, 0, 0])]);
    }
    ideal(vec![
        mono(1, [2, 0, 0, 0]),
        mono(1, [1, 1, 0, 0]),
        mono(1, [0, 2, 0, 0]),
        sum(&[mono(t.denom().clone(), [1, 0, 0, 0]), mono(t.numer().clone(), [0, 1, 0, 0])]),
    ])
}

/// Result of reading a triple off an ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Extraction {
    pub triple: Triple,
    pub class: CurveClass,
    /// Degrees used for the Hilbert polynomial fit.
    pub window: (u32, u32),
    /// Saturation level at which `x²` was tested.
    pub saturation_level: usize,
}

/// Reads `(z, y, p)` from an ideal of a curve in `2H`.
///
/// `d, g` come from the Hilbert polynomial on `[max_degree−3, max_degree]`,
/// `y` from the residual `(I : x)`, `z` from the genus formula.
pub fn extract_triple(ideal: &GradedIdeal, max_degree: u32) -> Result<Triple> {
    Ok(extract(&mut Quotient::<Rational>::new(ideal), max_degree)?.triple)
}

pub fn extract<F: crate::polyoracle::Field>(q: &mut Quotient<F>, max_degree: u32) -> Result<Extraction> {
    if max_degree < 5 {
        return Err(Error::OutOfRange(format!("max degree {max_degree} leaves no fitting window")));
    }
    let ideal = q.ideal().clone();
    let top = ideal.max_degree().max(2);
    let sat = q.saturate(top, default_guard(&ideal))?;
    let x = mono(1, [1, 0, 0, 0]);
    if !q.saturation_contains(&sat, &x.pow(2))? {
        return Err(Error::NotInDoublePlane("x^2 is not in the saturation".into()));
    }
    let window = (max_degree - 3, max_degree);
    let class = q.hp_fit(window.0..=window.1)?;
    let y = if q.saturation_contains(&sat, &x)? {
        0
    } else {
        // Residual R/(I : x): agrees with the saturated colon in high degree.
        let values: Vec<(i64, i64)> = (window.0 - 1..window.1)
            .map(|n| {
                let all = crate::foundations::h0_space(n as i64);
                (n as i64, all - q.colon_var_dim(0, n) as i64)
            })
            .collect();
        let (slope, _) = crate::polyoracle::linear_tail(&values)?;
        if slope < 1 {
            return Err(Error::Inconsistent(format!(
                "residual to the plane has Hilbert function {values:?}, not that of a curve"
            )));
        }
        slope
    };
    let (d, g) = (class.d, class.g);
    let z = half_product(d - 2, d - 3) - g - (y - 1) * (d - y - 2);
    let triple = Triple::new(z, y, d - y).map_err(|e| {
        Error::Inconsistent(format!("d={d} g={g} y={y} give no valid triple: {e}"))
    })?;
    Ok(Extraction {
        triple,
        class,
        window,
        saturation_level: sat.level,
    })
}

/// One named check in a [`SpecializationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecializationReport {
    pub r: i64,
    pub p: i64,
    pub source: Option<Triple>,
    pub target: Option<Triple>,
    pub checks: Vec<Check>,
    /// Per degree, the level at which the saturation of `J` settled.
    pub saturation_levels: Vec<usize>,
}

impl SpecializationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn into_result(self) -> Result<Self> {
        match self.checks.iter().find(|c| !c.passed) {
            Some(c) => Err(Error::CheckFailed(format!("{}: {}", c.name, c.detail))),
            None => Ok(self),
        }
    }
}

impl fmt::Display for SpecializationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "specialization r={} p={}", self.r, self.p)?;
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "  [{mark}] {}: {}", c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Degree bound for the degreewise saturation identities.
pub const SPECIALIZATION_DEGREE: u32 = 10;

fn fit_degree(r: i64, p: i64) -> u32 {
    // Past the Rao module of the limit curve, whose last nonzero degree is
    // d − 2 + z = 2p + r − 2.
    (2 * p + r + 2).max(8) as u32
}

pub fn verify_specialization(r: i64, p: i64) -> Result<SpecializationReport> {
    check_rp(r, p)?;
    let top = fit_degree(r, p);
    let mut checks = Vec::new();
    let mut push = |name: &str, passed: bool, detail: String| {
        checks.push(Check {
            name: name.into(),
            passed,
            detail,
        })
    };

    let one = BigRational::one();
    let fiber = family_fiber(r, p, &one)?;
    let source = extract_triple(&fiber, top);
    let expect_src = Triple::new(r, 2, p)?;
    push(
        "source triple",
        source.as_ref().ok() == Some(&expect_src),
        format!("extracted {} expected {expect_src}", show(&source)),
    );

    let limit = family_fiber(r, p, &BigRational::zero())?;
    let target = extract_triple(&limit, top);
    let expect_tgt = Triple::new(r + p - 2, 1, p + 1)?;
    push(
        "target triple",
        target.as_ref().ok() == Some(&expect_tgt),
        format!("extracted {} expected {expect_tgt}", show(&target)),
    );

    let classes = match (&source, &target) {
        (Ok(a), Ok(b)) => Some((curve_class(a), curve_class(b))),
        _ => None,
    };
    push(
        "curve class",
        classes.is_some_and(|(a, b)| a == b),
        match classes {
            Some((a, b)) => format!("source {a} target {b}"),
            None => "unavailable".into(),
        },
    );

    let j = limit_presentation(r, p)?;
    let max_n = SPECIALIZATION_DEGREE;
    let mut ql = Quotient::<Rational>::new(&limit);
    let mut qj = Quotient::<Rational>::new(&j);
    let sat_i = ql.saturate(max_n.max(limit.max_degree()), default_guard(&limit))?;
    let sat_j = qj.saturate(max_n.max(j.max_degree()), default_guard(&j))?;

    let mut outside = Vec::new();
    for g in j.generators() {
        if !ql.saturation_contains(&sat_i, g)? {
            outside.push(g.to_string());
        }
    }
    push(
        "J inside sat(I)",
        outside.is_empty(),
        if outside.is_empty() {
            format!("all {} generators", j.generators().len())
        } else {
            format!("not members: {}", outside.join(", "))
        },
    );

    let mut bad = Vec::new();
    for n in 0..=max_n {
        let i_n = ql.ideal_dim(n);
        let (si, sj) = (sat_i.dims[n as usize], sat_j.dims[n as usize]);
        if si != i_n || sj != i_n {
            bad.push(format!("n={n}: dim I={i_n} sat(I)={si} sat(J)={sj}"));
        }
    }
    push(
        "sat(J) = sat(I) = I",
        bad.is_empty(),
        if bad.is_empty() {
            format!("degrees 0..={max_n}")
        } else {
            bad.join("; ")
        },
    );

    let [d, e] = family_members(r, p, &one)?;
    let mut qf = Quotient::<Rational>::new(&fiber);
    let (din, ein) = (qf.member(&d), qf.member(&e));
    push(
        "D, E in fibre t=1",
        din && ein,
        format!("D {} E {}", if din { "in" } else { "out" }, if ein { "in" } else { "out" }),
    );

    Ok(SpecializationReport {
        r,
        p,
        source: source.ok(),
        target: target.ok(),
        checks,
        saturation_levels: sat_j.stabilized_at.clone(),
    })
}

fn show(t: &Result<Triple>) -> String {
    match t {
        Ok(t) => t.to_string(),
        Err(e) => format!("error ({e})"),
    }
}

/// What a catalog name refers to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EntryKind {
    ExtremalLike { r: i64, p: i64 },
    Limit { r: i64, p: i64 },
    Presentation { r: i64, p: i64 },
    Family { r: i64, p: i64, t: BigRational },
    Conic { t: BigRational },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub kind: EntryKind,
    pub ideal: GradedIdeal,
    /// Triple the construction is designed to have.
    pub expected: Triple,
}

impl CatalogEntry {
    /// Hilbert polynomial fitting degree that clears the entry's Rao module.
    pub fn fit_degree(&self) -> u32 {
        let t = self.expected;
        // The Rao module of a curve in 2H vanishes beyond d − 2 + z.
        (t.degree() + t.z() + 2).max(8) as u32
    }
}

/// Names accepted by [`by_name`].
pub const NAME_FORMS: [&str; 5] = [
    "extremal-like:r,p",
    "limit:r,p",
    "presentation:r,p",
    "family:r,p,t",
    "conic:t",
];

fn parse_ints(args: &str, n: usize, name: &str) -> Result<Vec<i64>> {
    let parts: Vec<&str> = args.split(',').map(str::trim).collect();
    if parts.len() != n {
        return Err(Error::Parse {
            line: 0,
            message: format!("{name} takes {n} comma-separated parameters, got {args:?}"),
        });
    }
    parts
        .iter()
        .map(|s| {
            s.parse().map_err(|_| Error::Parse {
                line: 0,
                message: format!("bad integer {s:?} in {name}"),
            })
        })
        .collect()
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let parsed = match s.split_once('/') {
        Some((a, b)) => a.trim().parse::<BigInt>().ok().zip(b.trim().parse::<BigInt>().ok()),
        None => s.parse::<BigInt>().ok().map(|a| (a, BigInt::one())),
    };
    match parsed {
        Some((_, b)) if b.is_zero() => Err(Error::Parse {
            line: 0,
            message: format!("zero denominator in {s:?}"),
        }),
        Some((a, b)) => Ok(BigRational::new(a, b)),
        None => Err(Error::Parse {
            line: 0,
            message: format!("bad rational {s:?}"),
        }),
    }
}

/// Looks up `extremal-like:r,p`, `limit:r,p`, `presentation:r,p`,
/// `family:r,p,t` or `conic:t`; `t` is an integer or `a/b`.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let (head, args) = name.split_once(':').ok_or_else(|| Error::Parse {
        line: 0,
        message: format!("catalog name {name:?} has no ':' (expected one of {})", NAME_FORMS.join(", ")),
    })?;
    let (kind, ideal, expected) = match head {
        "extremal-like" => {
            let v = parse_ints(args, 2, head)?;
            let (r, p) = (v[0], v[1]);
            (EntryKind::ExtremalLike { r, p }, extremal_like_ideal(r, p)?, Triple::new(r, 2, p)?)
        }
        "limit" | "presentation" => {
            let v = parse_ints(args, 2, head)?;
            let (r, p) = (v[0], v[1]);
            let expected = Triple::new(r + p - 2, 1, p + 1).ok();
            let (kind, ideal) = if head == "limit" {
                (EntryKind::Limit { r, p }, limit_ideal(r, p)?)
            } else {
                (EntryKind::Presentation { r, p }, limit_presentation(r, p)?)
            };
            (kind, ideal, expected.expect("checked parameters"))
        }
        "family" => {
            let parts: Vec<&str> = args.splitn(3, ',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse {
                    line: 0,
                    message: format!("family takes r,p,t, got {args:?}"),
                });
            }
            let v = parse_ints(&parts[..2].join(","), 2, head)?;
            let (r, p) = (v[0], v[1]);
            let t = parse_rational(parts[2])?;
            let ideal = family_fiber(r, p, &t)?;
            let expected = if t.is_zero() {
                Triple::new(r + p - 2, 1, p + 1)?
            } else {
                Triple::new(r, 2, p)?
            };
            (EntryKind::Family { r, p, t }, ideal, expected)
        }
        "conic" => {
            let t = parse_rational(args)?;
            let expected = if t.is_zero() { Triple::new(0, 0, 2)? } else { Triple::new(0, 1, 1)? };
            (EntryKind::Conic { t: t.clone() }, conic_fiber(&t), expected)
        }
        other => {
            return Err(Error::Parse {
                line: 0,
                message: format!("unknown catalog entry {other:?} (expected one of {})", NAME_FORMS.join(", ")),
            })
        }
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        kind,
        ideal,
        expected,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyoracle::{hp_fit, member};

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn extremal_like_generators() {
        let i = extremal_like_ideal(1, 2).unwrap();
        assert_eq!(i.to_string(), "x^2\nx*y^2\nx*y*z + y^3\nx*y*w + x*z^2 + y^2*z\n");
        let i0 = extremal_like_ideal(0, 2).unwrap();
        assert_eq!(i0.to_string(), "x^2\nx*y^2\nx*y*z + y^3\nx*y + x*z + y^2\n");
        assert!(extremal_like_ideal(1, 1).is_err());
    }

    #[test]
    fn limit_and_family_generators() {
        assert_eq!(limit_ideal(1, 2).unwrap().to_string(), "x^2\nx*y\ny^4\nx*z^3 + y^3*w\n");
        let f = family_fiber(1, 2, &q(1)).unwrap();
        assert_eq!(f.to_string(), "x^2\nx*y^2\n-x*y*z + y^3\nx*y*w + x*z^2 - y^2*z\n");
        assert_eq!(family_fiber(1, 2, &q(0)).unwrap(), limit_ideal(1, 2).unwrap());
        let half = family_fiber(1, 2, &BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half.to_string(), "x^2\nx*y^2\n-2*x*y*z + y^3\n4*x*y*w + 2*x*z^2 - y^2*z\n");
    }

    #[test]
    fn conic_generators() {
        assert_eq!(conic_fiber(&q(0)).to_string(), "x\ny^2\n");
        assert_eq!(conic_fiber(&q(1)).generators().len(), 4);
    }

    #[test]
    fn resultant_examples() {
        let p = |s: &str| Poly::parse(s).unwrap();
        assert_eq!(binary_resultant(&p("z"), &p("w")), BigInt::from(1));
        assert!(binary_resultant(&p("z^2 - w^2"), &p("z*w - w^2")).is_zero());
        assert!(!binary_resultant(&p("z^2 + w^2"), &p("z*w")).is_zero());
        assert_eq!(binary_resultant(&p("3"), &p("z^2")), BigInt::from(9));
    }

    #[test]
    fn overrides_are_checked() {
        let p = |s: &str| Poly::parse(s).unwrap();
        let bad = Forms {
            s: p("z + w"),
            g: p("z*w"),
            f: p("z"),
        };
        assert!(matches!(extremal_like_with(1, 2, &bad), Err(Error::NotAdmissible(_))));
        let good = Forms {
            s: p("z + w"),
            g: p("w^2 + z*w"),
            f: p("z^2 - 2*w^2"),
        };
        let i = extremal_like_with(2, 2, &good).unwrap();
        assert_eq!(extract_triple(&i, 10).unwrap(), Triple::new(2, 2, 2).unwrap());
        let wrong_degree = Forms {
            s: p("z^2"),
            g: p("w"),
            f: p("z"),
        };
        assert!(extremal_like_with(1, 2, &wrong_degree).is_err());
    }

    #[test]
    fn hp_fit_examples() {
        let i = extremal_like_ideal(2, 3).unwrap();
        assert_eq!(hp_fit(&i, 8..=12).unwrap(), CurveClass { d: 5, g: 0 });
        assert_eq!(hp_fit(&limit_ideal(1, 2).unwrap(), 4..=10).unwrap(), CurveClass { d: 4, g: 0 });
    }

    #[test]
    fn extraction_examples() {
        assert_eq!(extract_triple(&extremal_like_ideal(1, 2).unwrap(), 8).unwrap(), Triple::new(1, 2, 2).unwrap());
        assert_eq!(extract_triple(&limit_ideal(1, 2).unwrap(), 8).unwrap(), Triple::new(1, 1, 3).unwrap());
        let plane = GradedIdeal::parse_list(&["x", "y^2"]).unwrap();
        assert_eq!(extract_triple(&plane, 8).unwrap(), Triple::new(0, 0, 2).unwrap());
    }

    #[test]
    fn twisted_cubic_is_not_in_the_double_plane() {
        let cubic = GradedIdeal::parse_list(&["x*z - y^2", "x*w - y*z", "y*w - z^2"]).unwrap();
        assert!(matches!(extract_triple(&cubic, 8), Err(Error::NotInDoublePlane(_))));
    }

    #[test]
    fn conic_family() {
        for (t, expect) in [(1, (0, 1, 1)), (0, (0, 0, 2)), (-3, (0, 1, 1))] {
            let i = conic_fiber(&q(t));
            assert_eq!(hp_fit(&i, 2..=8).unwrap(), CurveClass { d: 2, g: 0 });
            let (z, y, p) = expect;
            assert_eq!(extract_triple(&i, 8).unwrap(), Triple::new(z, y, p).unwrap());
        }
    }

    #[test]
    fn family_members_lie_in_fibres() {
        for t in [q(1), q(2), q(-1), BigRational::new(2.into(), 3.into())] {
            let fiber = family_fiber(1, 3, &t).unwrap();
            for m in family_members(1, 3, &t).unwrap() {
                assert!(member(&m, &fiber), "{m} at t={t}");
            }
        }
    }

    #[test]
    fn specialization_small_case() {
        let report = verify_specialization(1, 2).unwrap();
        assert!(report.passed(), "{report}");
        let report = verify_specialization(0, 2).unwrap();
        assert!(report.passed(), "{report}");
    }

    #[test]
    fn names() {
        let e = by_name("family:1,2,1/2").unwrap();
        assert_eq!(e.expected, Triple::new(1, 2, 2).unwrap());
        assert_eq!(by_name("limit:1,2").unwrap().expected, Triple::new(1, 1, 3).unwrap());
        assert_eq!(by_name("conic:0").unwrap().expected, Triple::new(0, 0, 2).unwrap());
        assert_eq!(by_name("presentation:1,2").unwrap().ideal.generators().len(), 6);
        assert!(by_name("limit:1").is_err());
        assert!(by_name("conic:1/0").is_err());
        assert!(by_name("nonsense:1,2").is_err());
        assert!(by_name("extremal-like:1,1").is_err());
    }
}
