//! The numerical triple `(z, y, p)` of a curve in `2H` and the dimension
//! counts attached to it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::foundations::half_product;
use crate::{Error, Result};

/// `(z, y, p)`: length of `Z`, degree of `Y`, degree of `P`.
///
/// Valid triples satisfy `p ≥ 1`, `p ≥ y ≥ 0`, `z ≥ 0` and `z = 0` whenever
/// `y = 0`. Construction rejects anything else.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Triple {
    z: i64,
    y: i64,
    p: i64,
}

impl Triple {
    pub fn new(z: i64, y: i64, p: i64) -> Result<Self> {
        let reason = if z < 0 {
            Some("z must be nonnegative")
        } else if y < 0 {
            Some("y must be nonnegative")
        } else if p < 1 {
            Some("p must be at least 1")
        } else if p < y {
            Some("p must be at least y")
        } else if y == 0 && z != 0 {
            Some("z must vanish when y = 0")
        } else {
            None
        };
        match reason {
            Some(reason) => Err(Error::InvalidTriple { z, y, p, reason }),
            None => Ok(Triple { z, y, p }),
        }
    }

    pub fn z(&self) -> i64 {
        self.z
    }

    pub fn y(&self) -> i64 {
        self.y
    }

    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn degree(&self) -> i64 {
        self.y + self.p
    }
}

impl<'de> Deserialize<'de> for Triple {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            z: i64,
            y: i64,
            p: i64,
        }
        let raw = Raw::deserialize(deserializer)?;
        Triple::new(raw.z, raw.y, raw.p).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Triple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.z, self.y, self.p)
    }
}

/// Degree and arithmetic genus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CurveClass {
    pub d: i64,
    pub g: i64,
}

impl fmt::Display for CurveClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, g={})", self.d, self.g)
    }
}

pub fn curve_class(t: &Triple) -> CurveClass {
    let (z, y, p) = (t.z, t.y, t.p);
    CurveClass {
        d: y + p,
        g: half_product(y - 1, y - 2) + half_product(p - 1, p - 2) + y - z - 1,
    }
}

/// The unique triple with residual degree `y` and class `(d, g)`, if valid.
pub fn triple_from_class(d: i64, g: i64, y: i64) -> Option<Triple> {
    if d < 1 {
        return None;
    }
    let z = half_product(d - 2, d - 3) - g - (y - 1) * (d - y - 2);
    Triple::new(z, y, d - y).ok()
}

/// `h⁰(L(p)) = z + (p−1)y + 1 − ½(y−1)(y−2)`, the fibre dimension over the
/// flag scheme. Zero for planar triples.
pub fn section_space_dim(t: &Triple) -> i64 {
    t.z + (t.p - 1) * t.y + 1 - half_product(t.y - 1, t.y - 2)
}

/// Dimension of the flag scheme of `Z ⊆ Y ⊆ P` in `H`.
pub fn flag_dim(t: &Triple) -> i64 {
    let w = t.p - t.y;
    t.z + half_product(t.y, t.y + 3) + half_product(w, w + 3)
}

/// Dimension of the stratum `H_{z,y,p}(2H)`.
pub fn component_dim(t: &Triple) -> i64 {
    2 * t.z + half_product(t.y, t.y + 1) + half_product(t.p, t.p + 3)
}
