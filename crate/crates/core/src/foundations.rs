//! Integer combinatorics shared by the formula layer.
//!
//! Two families of binomials live here and are deliberately kept apart:
//! the truncated ones ([`h0_space`], [`h0_plane`]) count forms and vanish in
//! negative degree, while [`chi_poly_space`] is the untruncated polynomial
//! used for Euler characteristics.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use serde::de::{self, MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Dimension of the space of degree-`n` forms in four variables.
pub fn h0_space(n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        (n + 1) * (n + 2) * (n + 3) / 6
    }
}

/// Dimension of the space of degree-`n` forms in three variables.
pub fn h0_plane(n: i64) -> i64 {
    if n < 0 {
        0
    } else {
        (n + 1) * (n + 2) / 2
    }
}

/// `χ(O_{P³}(n))`, the polynomial `(n+1)(n+2)(n+3)/6` on all of ℤ.
pub fn chi_poly_space(n: i64) -> i64 {
    (n + 1) * (n + 2) * (n + 3) / 6
}

/// `½ (a)(b)` for integers whose product is even.
pub(crate) fn half_product(a: i64, b: i64) -> i64 {
    debug_assert!((a * b) % 2 == 0);
    a * b / 2
}

/// Finite-support function `ℤ → ℤ`.
///
/// Zero values are never stored, so structural equality is value-wise
/// equality on all of ℤ.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct IntFn {
    entries: BTreeMap<i64, i64>,
}

impl IntFn {
    pub fn new() -> Self {
        Self::default()
    }

    /// A function equal to `value` at `n` and zero elsewhere.
    pub fn delta(n: i64, value: i64) -> Self {
        let mut f = Self::new();
        f.set(n, value);
        f
    }

    /// Tabulates `eval` on the inclusive range `lo..=hi`.
    pub fn from_fn(lo: i64, hi: i64, mut eval: impl FnMut(i64) -> i64) -> Self {
        let mut f = Self::new();
        for n in lo..=hi {
            f.set(n, eval(n));
        }
        f
    }

    pub fn get(&self, n: i64) -> i64 {
        self.entries.get(&n).copied().unwrap_or(0)
    }

    pub fn set(&mut self, n: i64, value: i64) {
        if value == 0 {
            self.entries.remove(&n);
        } else {
            self.entries.insert(n, value);
        }
    }

    pub fn add_at(&mut self, n: i64, value: i64) {
        let v = self.get(n) + value;
        self.set(n, v);
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Smallest and largest points of the support.
    pub fn support(&self) -> Option<(i64, i64)> {
        let lo = *self.entries.keys().next()?;
        let hi = *self.entries.keys().next_back()?;
        Some((lo, hi))
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.entries.iter().map(|(&n, &v)| (n, v))
    }

    pub fn total(&self) -> i64 {
        self.entries.values().sum()
    }

    /// Pointwise `self ≤ other` on all of ℤ.
    pub fn le_pointwise(&self, other: &IntFn) -> bool {
        self.entries
            .keys()
            .chain(other.entries.keys())
            .all(|&n| self.get(n) <= other.get(n))
    }

    /// `n ↦ f(n - shift)`.
    pub fn shifted(&self, shift: i64) -> IntFn {
        IntFn {
            entries: self.entries.iter().map(|(&n, &v)| (n + shift, v)).collect(),
        }
    }
}

/// `k`-fold difference `∂f(n) = f(n) − f(n−1)`.
pub fn difference(f: &IntFn, k: u32) -> IntFn {
    assert!(k >= 1, "difference order must be at least 1");
    let mut cur = f.clone();
    for _ in 0..k {
        let mut next = IntFn::new();
        for (n, v) in cur.iter() {
            next.add_at(n, v);
            next.add_at(n + 1, -v);
        }
        cur = next;
    }
    cur
}

impl Add for &IntFn {
    type Output = IntFn;
    fn add(self, rhs: &IntFn) -> IntFn {
        let mut out = self.clone();
        for (n, v) in rhs.iter() {
            out.add_at(n, v);
        }
        out
    }
}

impl Sub for &IntFn {
    type Output = IntFn;
    fn sub(self, rhs: &IntFn) -> IntFn {
        self + &(-rhs)
    }
}

impl Neg for &IntFn {
    type Output = IntFn;
    fn neg(self) -> IntFn {
        IntFn {
            entries: self.entries.iter().map(|(&n, &v)| (n, -v)).collect(),
        }
    }
}

impl FromIterator<(i64, i64)> for IntFn {
    fn from_iter<I: IntoIterator<Item = (i64, i64)>>(iter: I) -> Self {
        let mut f = IntFn::new();
        for (n, v) in iter {
            f.add_at(n, v);
        }
        f
    }
}

impl fmt::Debug for IntFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for IntFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (n, v)) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{n}:{v}")?;
        }
        f.write_str("}")
    }
}

// Serialized as a JSON object {"n": value} in increasing order of n.
impl Serialize for IntFn {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.entries.len()))?;
        for (n, v) in self.iter() {
            map.serialize_entry(&n.to_string(), &v)?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for IntFn {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct IntFnVisitor;

        impl<'de> Visitor<'de> for IntFnVisitor {
            type Value = IntFn;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a map from decimal integer keys to integers")
            }

            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<IntFn, A::Error> {
                let mut out = IntFn::new();
                while let Some((key, value)) = access.next_entry::<String, i64>()? {
                    let n: i64 = key
                        .parse()
                        .map_err(|_| de::Error::custom(format!("bad degree key {key:?}")))?;
                    out.add_at(n, value);
                }
                Ok(out)
            }
        }

        deserializer.deserialize_map(IntFnVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    // Monomials x^a y^b z^c w^e with a+b+c+e = n, counted by brute force.
    fn count_monomials(vars: usize, n: i64) -> i64 {
        if n < 0 {
            return 0;
        }
        fn go(vars: usize, left: i64) -> i64 {
            if vars == 1 {
                return 1;
            }
            (0..=left).map(|k| go(vars - 1, left - k)).sum()
        }
        go(vars, n)
    }

    #[test]
    fn form_counts_match_brute_force() {
        assert_eq!(h0_space(0), 1);
        assert_eq!(h0_space(-1), 0);
        assert_eq!(h0_space(3), 20);
        assert_eq!(h0_plane(0), 1);
        assert_eq!(h0_plane(2), 6);
        assert_eq!(h0_plane(-3), 0);
        for n in -3..15 {
            assert_eq!(h0_space(n), count_monomials(4, n));
            assert_eq!(h0_plane(n), count_monomials(3, n));
        }
    }

    #[test]
    fn euler_polynomial_values() {
        assert_eq!(chi_poly_space(0), 1);
        assert_eq!(chi_poly_space(-4), -1);
        assert_eq!(chi_poly_space(-2), 0);
        for n in -3..=-1 {
            assert_eq!(chi_poly_space(n), 0);
        }
        for n in 0..20 {
            assert_eq!(chi_poly_space(n), h0_space(n));
        }
        for n in -30..=-4 {
            assert_eq!(chi_poly_space(n), -h0_space(-n - 4));
        }
    }

    #[test]
    fn difference_examples() {
        let delta = IntFn::delta(0, 1);
        let expect: IntFn = [(0, 1), (1, -1)].into_iter().collect();
        assert_eq!(difference(&delta, 1), expect);

        let f: IntFn = [(0, -1), (1, -1)].into_iter().collect();
        let expect: IntFn = [(0, -1), (2, 1)].into_iter().collect();
        assert_eq!(difference(&f, 1), expect);
    }

    #[test]
    fn zero_entries_are_not_stored() {
        let mut f = IntFn::delta(3, 2);
        f.add_at(3, -2);
        assert!(f.is_zero());
        assert_eq!(f, IntFn::new());
    }

    #[test]
    fn json_is_ordered_numerically() {
        let f: IntFn = [(10, 1), (-1, 2), (2, -3)].into_iter().collect();
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(s, r#"{"-1":2,"2":-3,"10":1}"#);
        let back: IntFn = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
    }

    proptest! {
        #[test]
        fn plane_is_first_difference_of_space(n in 0i64..500) {
            prop_assert_eq!(h0_space(n) - h0_space(n - 1), h0_plane(n));
        }

        #[test]
        fn first_difference_telescopes(vals in proptest::collection::btree_map(-50i64..50, -20i64..20, 0..12)) {
            let f: IntFn = vals.into_iter().collect();
            prop_assert_eq!(difference(&f, 1).total(), 0);
        }

        #[test]
        fn json_round_trip(vals in proptest::collection::btree_map(-50i64..50, -20i64..20, 0..12)) {
            let f: IntFn = vals.into_iter().collect();
            let s = serde_json::to_string(&f).unwrap();
            let back: IntFn = serde_json::from_str(&s).unwrap();
            prop_assert_eq!(serde_json::to_string(&back).unwrap(), s);
        }
    }
}
