//! `h^i(I_C(n))` for a curve `C ⊂ 2H`, from its [`CurveModel`] alone.
//!
//! `h⁰` and `h²` come from closed formulas in `y`, `p` and the postulation of
//! `Z`; `h³` is `h⁰(O(−n−4))`; `h¹` is whatever the Euler characteristic
//! `χ(I_C(n)) = χ(O(n)) − (dn + 1 − g)` leaves over.

use crate::foundations::{chi_poly_space, h0_plane, h0_space, IntFn};
use crate::profiles::{h0_iz, CurveModel};
use crate::triples::curve_class;
use crate::{Error, Result};

pub fn h0_ic(model: &CurveModel, n: i64) -> i64 {
    let t = model.triple();
    h0_space(n - 2) + h0_plane(n - t.y() - 1) + h0_iz(model.profile(), n - t.p())
}

pub fn h2_ic(model: &CurveModel, n: i64) -> i64 {
    let t = model.triple();
    h0_space(-n - 4) - h0_space(-n - 2)
        + h0_plane(t.p() - 3 - n)
        + h0_iz(model.profile(), t.y() - 2 - n)
}

pub fn h3_ic(n: i64) -> i64 {
    h0_space(-n - 4)
}

/// Euler characteristic of `I_C(n)`; uses the untruncated polynomial.
pub fn chi_ic(model: &CurveModel, n: i64) -> i64 {
    let c = curve_class(model.triple());
    chi_poly_space(n) - (c.d * n + 1 - c.g)
}

pub fn h1_ic(model: &CurveModel, n: i64) -> i64 {
    let h1 = h0_ic(model, n) + h2_ic(model, n) - h3_ic(n) - chi_ic(model, n);
    assert!(h1 >= 0, "negative h1 = {h1} at n = {n} for {model}");
    h1
}

/// Hilbert function of the Rao module, `n ↦ h¹(I_C(n))`.
pub fn rao_function(model: &CurveModel) -> Result<IntFn> {
    let t = model.triple();
    let d = t.degree();
    let limit = 10 * (d + t.z() + 4);
    let (mut lo, mut hi) = (-t.z() - 2, d + t.z() + 2);
    while h1_ic(model, lo) != 0 || h1_ic(model, hi) != 0 {
        lo -= 1;
        hi += 1;
        if hi - lo > limit {
            return Err(Error::WindowExceeded(limit));
        }
    }
    Ok(IntFn::from_fn(lo, hi, |n| h1_ic(model, n)))
}

pub fn is_acm(model: &CurveModel) -> bool {
    model.triple().z() == 0
}
