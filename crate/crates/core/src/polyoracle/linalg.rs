//! Sparse row echelon forms over an exact field.
//!
//! Rows are combined fraction-free (`a·row − b·pivot`) and then normalized:
//! to a primitive integer vector over ℚ, to a monic vector over `F_p`.

use std::collections::BTreeMap;
use std::fmt::Debug;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub trait Field: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    /// `self / other`, `other` nonzero.
    fn div(&self, other: &Self) -> Self;
    fn from_bigint(c: &BigInt) -> Self;
    /// Rescales a nonzero row to its canonical representative.
    fn normalize(row: &mut Row<Self>);
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn div(&self, other: &Self) -> Self {
        self / other
    }
    fn from_bigint(c: &BigInt) -> Self {
        BigRational::from_integer(c.clone())
    }
    fn normalize(row: &mut Row<Self>) {
        let Some((_, lead)) = row.first() else { return };
        let lead_negative = lead.is_negative();
        let mut den = BigInt::one();
        let mut num = BigInt::zero();
        for (_, v) in row.iter() {
            den = den.lcm(v.denom());
        }
        for (_, v) in row.iter() {
            num = num.gcd(&(v.numer() * (&den / v.denom())));
        }
        let mut scale = BigRational::new(den, num);
        if lead_negative {
            scale = -scale;
        }
        if scale.is_one() {
            return;
        }
        for (_, v) in row.iter_mut() {
            *v = &*v * &scale;
        }
    }
}

/// Integers modulo the prime `P` (below 2³²).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let (mut base, mut acc) = (self.0, 1u64);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P;
            }
            base = base * base % P;
            e >>= 1;
        }
        Fp(acc)
    }

    fn inv(self) -> Self {
        assert!(self.0 != 0, "inverse of zero in F_p");
        self.pow(P - 2)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn one() -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, other: &Self) -> Self {
        Fp((self.0 + other.0) % P)
    }
    fn sub(&self, other: &Self) -> Self {
        Fp((self.0 + P - other.0) % P)
    }
    fn mul(&self, other: &Self) -> Self {
        Fp(self.0 * other.0 % P)
    }
    fn div(&self, other: &Self) -> Self {
        self.mul(&other.inv())
    }
    fn from_bigint(c: &BigInt) -> Self {
        let r = c.mod_floor(&BigInt::from(P));
        Fp(r.try_into().expect("reduced below P"))
    }
    fn normalize(row: &mut Row<Self>) {
        let Some(&(_, lead)) = row.first() else { return };
        let inv = lead.inv();
        for (_, v) in row.iter_mut() {
            *v = v.mul(&inv);
        }
    }
}

/// Sparse vector: `(column, value)` pairs, strictly increasing columns,
/// no zero values.
pub type Row<F> = Vec<(usize, F)>;

/// `a·r − b·s`.
pub fn combine<F: Field>(a: &F, r: &Row<F>, b: &F, s: &Row<F>) -> Row<F> {
    let mut out = Vec::with_capacity(r.len() + s.len());
    let (mut i, mut j) = (0, 0);
    let a_one = a == &F::one();
    let scaled_r = |v: &F| if a_one { v.clone() } else { a.mul(v) };
    while i < r.len() || j < s.len() {
        let ci = r.get(i).map_or(usize::MAX, |e| e.0);
        let cj = s.get(j).map_or(usize::MAX, |e| e.0);
        let (col, v) = if ci < cj {
            i += 1;
            (ci, scaled_r(&r[i - 1].1))
        } else if cj < ci {
            j += 1;
            (cj, F::zero().sub(&b.mul(&s[j - 1].1)))
        } else {
            i += 1;
            j += 1;
            (ci, scaled_r(&r[i - 1].1).sub(&b.mul(&s[j - 1].1)))
        };
        if !v.is_zero() {
            out.push((col, v));
        }
    }
    out
}

/// Echelon basis of a subspace of `F^ncols`, one row per pivot column.
#[derive(Clone, Debug)]
pub struct Echelon<F: Field> {
    ncols: usize,
    pivots: BTreeMap<usize, Row<F>>,
}

impl<F: Field> Echelon<F> {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            pivots: BTreeMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivots.contains_key(&col)
    }

    /// Columns without a pivot, increasing.
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| !self.pivots.contains_key(c)).collect()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Row<F>> {
        self.pivots.values()
    }

    fn next_pivot_entry(&self, row: &Row<F>, from: usize) -> Option<usize> {
        row.iter()
            .position(|(c, _)| *c >= from && self.pivots.contains_key(c))
    }

    /// Fraction-free reduction; the result spans the same line modulo the
    /// echelon space and has no entry in a pivot column.
    fn reduce_scaled(&self, mut row: Row<F>) -> Row<F> {
        let mut from = 0;
        while let Some(k) = self.next_pivot_entry(&row, from) {
            let (col, v) = row[k].clone();
            let pivot = &self.pivots[&col];
            row = combine(&pivot[0].1, &row, &v, pivot);
            if !row.is_empty() {
                F::normalize(&mut row);
            }
            from = col + 1;
        }
        row
    }

    /// Adds a vector; returns whether the rank grew.
    pub fn insert(&mut self, row: Row<F>) -> bool {
        let row = self.reduce_scaled(row);
        match row.first() {
            None => false,
            Some(&(col, _)) => {
                self.pivots.insert(col, row);
                true
            }
        }
    }

    /// Remainder of `row` modulo the span, supported on free columns. Exact:
    /// `row − remainder` lies in the span.
    pub fn normal_form(&self, mut row: Row<F>) -> Row<F> {
        let mut from = 0;
        while let Some(k) = self.next_pivot_entry(&row, from) {
            let (col, v) = row[k].clone();
            let pivot = &self.pivots[&col];
            let factor = v.div(&pivot[0].1);
            row = combine(&F::one(), &row, &factor, pivot);
            from = col + 1;
        }
        row
    }

    pub fn contains(&self, row: Row<F>) -> bool {
        self.normal_form(row).is_empty()
    }
}

/// Basis of `{c : Σ c_j v_j = 0}` for vectors `v_j ∈ F^m`.
pub fn kernel<F: Field>(vectors: &[Row<F>], m: usize) -> Vec<Row<F>> {
    let k = vectors.len();
    let mut ech = Echelon::new(m + k);
    let mut rows: Vec<Row<F>> = vectors
        .iter()
        .enumerate()
        .map(|(j, v)| {
            let mut r = v.clone();
            r.push((m + j, F::one()));
            r
        })
        .collect();
    rows.sort_by_key(Vec::len);
    for r in rows {
        ech.insert(r);
    }
    ech.pivots
        .range(m..)
        .map(|(_, r)| r.iter().map(|(c, v)| (c - m, v.clone())).collect())
        .collect()
}
