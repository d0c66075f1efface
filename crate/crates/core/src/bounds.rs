//! Extremal and subextremal Rao bounds, and the classification of curves in
//! `2H` and on the smooth quadric against them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::foundations::{half_product, IntFn};
use crate::profiles::CurveModel;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CurveKind {
    Planar,
    Extremal,
    Subextremal,
    Other,
}

impl fmt::Display for CurveKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CurveKind::Planar => "Planar",
            CurveKind::Extremal => "Extremal",
            CurveKind::Subextremal => "Subextremal",
            CurveKind::Other => "Other",
        })
    }
}

// Symmetric triangle: `height` on [lo, hi], dropping by one per step outside.
fn plateau(height: i64, lo: i64, hi: i64) -> IntFn {
    IntFn::from_fn(lo - height, hi + height, |n| {
        (height + (n - lo).min(0) + (hi - n).min(0)).max(0)
    })
}

/// `ρᴱ_{d,g}`: plateau `½(d−2)(d−3) − g` on `[0, d−2]`.
pub fn rho_e(d: i64, g: i64) -> Result<IntFn> {
    if d < 2 || g > half_product(d - 2, d - 3) {
        return Err(Error::OutOfRange(format!(
            "extremal bound needs d >= 2 and g <= (d-2)(d-3)/2, got d={d} g={g}"
        )));
    }
    Ok(plateau(half_product(d - 2, d - 3) - g, 0, d - 2))
}

/// `ρˢ_{d,g}`: plateau `½(d−3)(d−4) + 1 − g` on `[1, d−3]`.
pub fn rho_s(d: i64, g: i64) -> Result<IntFn> {
    if d < 4 || g > half_product(d - 3, d - 4) + 1 {
        return Err(Error::OutOfRange(format!(
            "subextremal bound needs d >= 4 and g <= (d-3)(d-4)/2 + 1, got d={d} g={g}"
        )));
    }
    Ok(plateau(half_product(d - 3, d - 4) + 1 - g, 1, d - 3))
}

/// Kind of a curve in `2H`, read off `(z, y, p)` and whether `Z` lies on a
/// line (`s ≤ 1`). Planar takes priority over extremal over subextremal.
pub fn classify(model: &CurveModel) -> CurveKind {
    let t = model.triple();
    let (z, y, p) = (t.z(), t.y(), t.p());
    let on_line = model.profile().s() <= 1;
    if y == 0 || (p == 1 && y == 1 && z == 0) {
        CurveKind::Planar
    } else if (y == 1 && p >= 2) || (y == 1 && p == 1 && z >= 1) || (y == 2 && p == 2 && z == 0) {
        CurveKind::Extremal
    } else if on_line
        && ((y == 2 && p >= 3) || (y == 2 && p == 2 && z >= 1) || (y == 3 && p == 3 && z == 0))
    {
        CurveKind::Subextremal
    } else {
        CurveKind::Other
    }
}

/// Kind of an effective divisor of type `(a, b)`, `a ≤ b`, on a smooth quadric.
pub fn classify_quadric_divisor(a: i64, b: i64) -> Result<CurveKind> {
    if a < 0 || a > b || (a, b) == (0, 0) {
        return Err(Error::OutOfRange(format!(
            "divisor type needs 0 <= a <= b and (a,b) != (0,0), got ({a},{b})"
        )));
    }
    Ok(match (a, b) {
        (0, 1) | (1, 1) => CurveKind::Planar,
        (0, 2) | (1, 2) | (2, 2) => CurveKind::Extremal,
        (1, 3) | (2, 3) | (3, 3) => CurveKind::Subextremal,
        _ => CurveKind::Other,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenusCeilings {
    /// Genus of a plane curve of degree `d`.
    pub planar_g: i64,
    /// Largest genus of a non-planar curve (`d ≥ 2`).
    pub nonplanar_max_g: Option<i64>,
    /// Largest genus of a curve neither planar nor extremal (`d ≥ 3`).
    pub nonextremal_max_g: Option<i64>,
}

pub fn genus_ceilings(d: i64) -> GenusCeilings {
    GenusCeilings {
        planar_g: half_product(d - 1, d - 2),
        nonplanar_max_g: (d >= 2).then(|| half_product(d - 2, d - 3)),
        nonextremal_max_g: (d >= 3).then(|| half_product(d - 3, d - 4) + 1),
    }
}
