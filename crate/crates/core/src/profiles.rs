//! Postulation characters of the zero-dimensional scheme `Z ⊂ H` and of the
//! curve `C ⊂ 2H`.
//!
//! A [`ZProfile`] records `s`, the least degree of a plane curve through `Z`,
//! and the tail `a_n` (`n ≥ s`) of the character
//! `γ_Z = ∂²(h⁰(I_Z(n)) − h⁰(O_H(n)))`, which equals `−1` on `0 ≤ n < s`.
//! That data determines `h⁰(I_{Z,H}(m))` for every `m`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::cohomology::h0_ic;
use crate::foundations::{difference, h0_plane, h0_space, half_product, IntFn};
use crate::triples::Triple;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ZProfile {
    s: i64,
    a: IntFn,
}

impl ZProfile {
    /// Checks `a_n ≥ 0`, support in `n ≥ s` and `Σ a_n = s`.
    pub fn new(s: i64, a: IntFn) -> Result<Self> {
        if s < 0 {
            return Err(Error::InvalidProfile(format!("s = {s} is negative")));
        }
        if let Some((n, v)) = a.iter().find(|&(n, v)| n < s || v < 0) {
            return Err(Error::InvalidProfile(format!(
                "coefficient a_{n} = {v} is not allowed (need n >= s = {s} and a_n >= 0)"
            )));
        }
        if a.total() != s {
            return Err(Error::InvalidProfile(format!(
                "coefficients sum to {} but s = {s}",
                a.total()
            )));
        }
        Ok(ZProfile { s, a })
    }

    pub fn empty() -> Self {
        ZProfile { s: 0, a: IntFn::new() }
    }

    pub fn s(&self) -> i64 {
        self.s
    }

    pub fn a(&self) -> &IntFn {
        &self.a
    }

    pub fn is_empty_scheme(&self) -> bool {
        self.s == 0
    }

    /// `γ_Z` as a function on ℤ.
    pub fn gamma(&self) -> IntFn {
        let mut g = self.a.clone();
        for n in 0..self.s {
            g.add_at(n, -1);
        }
        g
    }

    /// Length of `Z`.
    pub fn z(&self) -> i64 {
        z_of_profile(self)
    }
}

impl<'de> Deserialize<'de> for ZProfile {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            s: i64,
            a: IntFn,
        }
        let raw = Raw::deserialize(deserializer)?;
        ZProfile::new(raw.s, raw.a).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for ZProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s={}, a={}", self.s, self.a)
    }
}

/// `z = Σ n a_n − ½ s(s−1)`.
pub fn z_of_profile(prof: &ZProfile) -> i64 {
    prof.a.iter().map(|(n, v)| n * v).sum::<i64>() - half_product(prof.s, prof.s - 1)
}

/// `z` points on a line: `s = 1`, `a_z = 1`.
pub fn collinear_profile(z: i64) -> Result<ZProfile> {
    if z < 1 {
        return Err(Error::InvalidProfile(
            "collinear profile needs z >= 1; use the empty profile for z = 0".into(),
        ));
    }
    ZProfile::new(1, IntFn::delta(z, 1))
}

/// `z` general points: `h⁰(I_Z(m)) = max(0, h⁰(O_H(m)) − z)`.
pub fn generic_profile(z: i64) -> Result<ZProfile> {
    if z < 0 {
        return Err(Error::InvalidProfile(format!("negative length {z}")));
    }
    if z == 0 {
        return Ok(ZProfile::empty());
    }
    let s = (0..).find(|&t| h0_plane(t) > z).expect("h0_plane is unbounded");
    // Defect −min(z, h⁰(O_H(m))) is constant from m = s on.
    let defect = IntFn::from_fn(0, s + 2, |m| -z.min(h0_plane(m)));
    let mut gamma = difference(&defect, 2);
    for n in s + 3..=s + 4 {
        gamma.set(n, 0);
    }
    let tail: IntFn = gamma.iter().filter(|&(n, _)| n >= s).collect();
    ZProfile::new(s, tail)
}

/// `h⁰(I_{Z,H}(m)) = h⁰(O_H(m)) + Σ_{n≤m} (m−n+1) γ_Z(n)`.
pub fn h0_iz(prof: &ZProfile, m: i64) -> i64 {
    if m < 0 {
        return 0;
    }
    let mut total = h0_plane(m);
    for n in 0..prof.s.min(m + 1) {
        total -= m - n + 1;
    }
    for (n, v) in prof.a.iter() {
        if n <= m {
            total += (m - n + 1) * v;
        }
    }
    total
}

/// All profiles of length `z` with `s ≤ s_max`: for each `s`, the ways of
/// writing `z + ½s(s−1)` as a sum of exactly `s` parts, each at least `s`.
pub fn enumerate_profiles(z: i64, s_max: i64) -> Vec<ZProfile> {
    let mut out = Vec::new();
    if z < 0 {
        return out;
    }
    if z == 0 {
        out.push(ZProfile::empty());
        return out;
    }
    for s in 1..=s_max {
        let target = z + half_product(s, s - 1);
        let mut parts = Vec::with_capacity(s as usize);
        partitions(target, s, s, &mut parts, &mut |parts| {
            let a: IntFn = parts.iter().map(|&n| (n, 1)).collect();
            out.push(ZProfile::new(s, a).expect("partition yields a valid profile"));
        });
    }
    out
}

// Nondecreasing sequences of `count` parts, each part ≥ `min`, summing to `left`.
fn partitions(left: i64, count: i64, min: i64, parts: &mut Vec<i64>, emit: &mut impl FnMut(&[i64])) {
    if count == 0 {
        if left == 0 {
            emit(parts);
        }
        return;
    }
    let mut part = min;
    while part * count <= left {
        parts.push(part);
        partitions(left - part, count - 1, part, parts, emit);
        parts.pop();
        part += 1;
    }
}

/// The two named profile constructors.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProfileKind {
    #[default]
    Collinear,
    Generic,
}

impl ProfileKind {
    pub fn build(self, z: i64) -> Result<ZProfile> {
        match (self, z) {
            (_, 0) => Ok(ZProfile::empty()),
            (ProfileKind::Collinear, z) => collinear_profile(z),
            (ProfileKind::Generic, z) => generic_profile(z),
        }
    }
}

impl FromStr for ProfileKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "collinear" => Ok(ProfileKind::Collinear),
            "generic" => Ok(ProfileKind::Generic),
            other => Err(Error::InvalidProfile(format!(
                "unknown profile {other:?} (expected collinear or generic)"
            ))),
        }
    }
}

impl fmt::Display for ProfileKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProfileKind::Collinear => "collinear",
            ProfileKind::Generic => "generic",
        })
    }
}

/// A triple together with the character of its `Z`; enough to compute
/// every cohomology formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CurveModel {
    triple: Triple,
    profile: ZProfile,
}

impl CurveModel {
    pub fn new(triple: Triple, profile: ZProfile) -> Result<Self> {
        if profile.z() != triple.z() {
            return Err(Error::ProfileMismatch {
                triple,
                reason: format!("profile has length {} but z = {}", profile.z(), triple.z()),
            });
        }
        if profile.s() > triple.y() {
            return Err(Error::ProfileMismatch {
                triple,
                reason: format!(
                    "Z must lie on Y, but its least containing degree s = {} exceeds y = {}",
                    profile.s(),
                    triple.y()
                ),
            });
        }
        Ok(CurveModel { triple, profile })
    }

    pub fn with_kind(triple: Triple, kind: ProfileKind) -> Result<Self> {
        CurveModel::new(triple, kind.build(triple.z())?)
    }

    pub fn triple(&self) -> &Triple {
        &self.triple
    }

    pub fn profile(&self) -> &ZProfile {
        &self.profile
    }

    pub fn degree(&self) -> i64 {
        self.triple.degree()
    }
}

impl<'de> Deserialize<'de> for CurveModel {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            triple: Triple,
            profile: ZProfile,
        }
        let raw = Raw::deserialize(deserializer)?;
        CurveModel::new(raw.triple, raw.profile).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for CurveModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.triple, self.profile)
    }
}

/// Structural form of `γ_C`: `−1` at 0 and 1, `+1` at `y+1` and `p+s`, plus
/// `∂β` where `β(n) = b_n = a_{n−p}` on `n ≥ p+s`.
pub fn gamma_c(model: &CurveModel) -> IntFn {
    let (y, p) = (model.triple.y(), model.triple.p());
    let s = model.profile.s();
    let mut g = IntFn::new();
    g.add_at(0, -1);
    g.add_at(1, -1);
    g.add_at(y + 1, 1);
    g.add_at(p + s, 1);
    let beta = model.profile.a().shifted(p);
    &g + &difference(&beta, 1)
}

/// `γ_C = ∂³(h⁰(I_C(n)) − h⁰(O(n)))` from the cohomology formulas, on the
/// window `[−1, p+s+z+3]`.
pub fn gamma_c_direct(model: &CurveModel) -> IntFn {
    let t = model.triple;
    let hi = t.p() + model.profile.s() + t.z() + 3;
    let defect = |n: i64| h0_ic(model, n) - h0_space(n);
    IntFn::from_fn(-1, hi, |n| {
        defect(n) - 3 * defect(n - 1) + 3 * defect(n - 2) - defect(n - 3)
    })
}

/// Recovers the tail `b_n` from a curve character, given `y`, `p`, `s`.
pub fn tail_from_gamma(gamma: &IntFn, y: i64, p: i64, s: i64) -> IntFn {
    let mut rest = gamma.clone();
    rest.add_at(0, 1);
    rest.add_at(1, 1);
    rest.add_at(y + 1, -1);
    rest.add_at(p + s, -1);
    let mut running = 0;
    let mut b = IntFn::new();
    if let Some((lo, hi)) = rest.support() {
        for n in lo..=hi {
            running += rest.get(n);
            b.set(n, running);
        }
    }
    b
}

/// `z = Σ_{n≥p+s} (n−p) b_n − ½ s(s−1)`.
pub fn z_from_gamma(b: &IntFn, p: i64, s: i64) -> Result<i64> {
    if let Some((n, v)) = b.iter().find(|&(n, v)| n < p + s || v < 0) {
        return Err(Error::InvalidProfile(format!(
            "tail coefficient b_{n} = {v} not allowed (need n >= p+s = {} and b_n >= 0)",
            p + s
        )));
    }
    if b.total() != s {
        return Err(Error::InvalidProfile(format!(
            "tail coefficients sum to {} but s = {s}",
            b.total()
        )));
    }
    Ok(b.iter().map(|(n, v)| (n - p) * v).sum::<i64>() - half_product(s, s - 1))
}
