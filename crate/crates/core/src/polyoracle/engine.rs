//! Degreewise linear algebra on `R/I`.
//!
//! The piece `I_n` is an echelon form over the monomials of degree `n`; its
//! free columns are a basis of `Q_n = R_n/I_n`, and multiplication by a
//! variable is the matrix of normal forms `Q_n → Q_{n+1}`.
//!
//! Saturation works inside `Q`: `T_0(n) = 0` and
//! `T_k(n) = {q ∈ Q_n : x_i q ∈ T_{k−1}(n+1) for all i}`, so `T_k(n)` is
//! `{f : every degree-k monomial multiple of f lies in I}` modulo `I_n`. The
//! levels grow with `k`; iteration stops at the first `k` where no degree in
//! the window `[0, top]` changes. A single degree can sit on a plateau while
//! its neighbours are still moving, so the test is taken over the whole
//! window at once.

use std::collections::HashMap;
use std::ops::RangeInclusive;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::ideal::GradedIdeal;
use super::linalg::{kernel, Echelon, Field, Fp, Row};
use super::monomial::{Monomial, MonomialBasis};
use super::poly::Poly;
use crate::foundations::h0_space;
use crate::triples::CurveClass;
use crate::{Error, Result};

/// Prime used by [`Arithmetic::Prime`].
pub const PRIME: u64 = 2_147_483_647;

pub type Rational = BigRational;
pub type PrimeField = Fp<PRIME>;

/// Coefficient field for the oracle. Only `Exact` is a proof; `Prime` can
/// disagree with it at unlucky primes.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Arithmetic {
    #[default]
    Exact,
    Prime,
}

/// Default saturation guard `2·(max generator degree) + 4`.
pub fn default_guard(ideal: &GradedIdeal) -> usize {
    2 * ideal.max_degree() as usize + 4
}

struct Piece<F: Field> {
    basis: MonomialBasis,
    echelon: Echelon<F>,
    standard: Vec<usize>,
    position: HashMap<usize, usize>,
}

/// Cached graded pieces of `R/I` over the field `F`.
pub struct Quotient<F: Field> {
    ideal: GradedIdeal,
    gens: Vec<(u32, Vec<(Monomial, F)>)>,
    pieces: Vec<Option<Piece<F>>>,
    mult: HashMap<(u32, usize), Vec<Row<F>>>,
    levels: HashMap<(usize, u32), Echelon<F>>,
}

impl<F: Field> Quotient<F> {
    pub fn new(ideal: &GradedIdeal) -> Self {
        let gens = ideal
            .generators()
            .iter()
            .map(|g| {
                let terms = g.terms().map(|(m, c)| (*m, F::from_bigint(c))).collect();
                (g.degree().expect("generators are nonzero"), terms)
            })
            .collect();
        Quotient {
            ideal: ideal.clone(),
            gens,
            pieces: Vec::new(),
            mult: HashMap::new(),
            levels: HashMap::new(),
        }
    }

    pub fn ideal(&self) -> &GradedIdeal {
        &self.ideal
    }

    fn piece(&mut self, n: u32) -> &Piece<F> {
        let k = n as usize;
        if self.pieces.len() <= k {
            self.pieces.resize_with(k + 1, || None);
        }
        if self.pieces[k].is_none() {
            let built = self.build_piece(n);
            self.pieces[k] = Some(built);
        }
        self.pieces[k].as_ref().expect("just built")
    }

    fn build_piece(&self, n: u32) -> Piece<F> {
        let basis = MonomialBasis::new(n);
        let mut rows: Vec<Row<F>> = Vec::new();
        for (deg, terms) in &self.gens {
            if *deg > n {
                continue;
            }
            for m in MonomialBasis::new(n - deg).monomials() {
                let mut row: Row<F> = terms
                    .iter()
                    .map(|(t, c)| (basis.index_of(&t.mul(m)), c.clone()))
                    .collect();
                row.sort_by_key(|e| e.0);
                rows.push(row);
            }
        }
        // Short rows first: monomial generators become pivots that clear
        // their columns from everything after.
        rows.sort_by_key(Vec::len);
        let mut echelon = Echelon::new(basis.len());
        for row in rows {
            echelon.insert(row);
        }
        let standard = echelon.free_columns();
        let position = standard.iter().enumerate().map(|(i, c)| (*c, i)).collect();
        Piece {
            basis,
            echelon,
            standard,
            position,
        }
    }

    /// `dim I_n`.
    pub fn ideal_dim(&mut self, n: u32) -> usize {
        self.piece(n).echelon.rank()
    }

    /// `dim Q_n`.
    pub fn quotient_dim(&mut self, n: u32) -> usize {
        self.piece(n).standard.len()
    }

    /// Monomials whose classes form the basis of `Q_n`.
    pub fn standard_monomials(&mut self, n: u32) -> Vec<Monomial> {
        let p = self.piece(n);
        p.standard.iter().map(|&c| p.basis.monomial(c)).collect()
    }

    fn row_of(&mut self, f: &[(Monomial, F)], n: u32) -> Row<F> {
        let p = self.piece(n);
        let mut row: Row<F> = f.iter().map(|(m, c)| (p.basis.index_of(m), c.clone())).collect();
        row.sort_by_key(|e| e.0);
        row
    }

    /// Coordinates in `Q_n` of a degree-`n` form.
    fn coords(&mut self, f: &[(Monomial, F)], n: u32) -> Row<F> {
        let row = self.row_of(f, n);
        let p = self.piece(n);
        p.echelon
            .normal_form(row)
            .into_iter()
            .map(|(c, v)| (p.position[&c], v))
            .collect()
    }

    fn poly_terms(f: &Poly) -> Vec<(Monomial, F)> {
        f.terms().map(|(m, c)| (*m, F::from_bigint(c))).collect()
    }

    /// `f ∈ I`, for homogeneous `f`.
    pub fn member(&mut self, f: &Poly) -> bool {
        match f.degree() {
            None => true,
            Some(n) => self.coords(&Self::poly_terms(f), n).is_empty(),
        }
    }

    /// Matrix of `x_i : Q_n → Q_{n+1}`, one image row per basis vector.
    fn mult(&mut self, n: u32, var: usize) -> &Vec<Row<F>> {
        if !self.mult.contains_key(&(n, var)) {
            let v = Monomial::var(var);
            let images = self
                .standard_monomials(n)
                .into_iter()
                .map(|u| self.coords(&[(u.mul(&v), F::one())], n + 1))
                .collect();
            self.mult.insert((n, var), images);
        }
        &self.mult[&(n, var)]
    }

    /// `dim (I : x_var)_n`.
    pub fn colon_var_dim(&mut self, var: usize, n: u32) -> usize {
        let images = self.mult(n, var).clone();
        let target = self.quotient_dim(n + 1);
        self.ideal_dim(n) + kernel(&images, target).len()
    }

    /// Basis of `{v ∈ R_n : f·v ∈ I}` as coefficient rows over the monomials
    /// of degree `n`.
    fn colon_rows(&mut self, f: &Poly, n: u32) -> Vec<Row<F>> {
        let Some(df) = f.degree() else {
            return (0..h0_space(n as i64) as usize).map(|j| vec![(j, F::one())]).collect();
        };
        let fterms = Self::poly_terms(f);
        let monos = MonomialBasis::new(n).monomials().to_vec();
        let images: Vec<Row<F>> = monos
            .iter()
            .map(|m| {
                let shifted: Vec<_> = fterms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect();
                self.coords(&shifted, n + df)
            })
            .collect();
        let target = self.quotient_dim(n + df);
        kernel(&images, target)
    }

    pub fn colon_dim(&mut self, f: &Poly, n: u32) -> usize {
        self.colon_rows(f, n).len()
    }

    fn level_dim(&mut self, k: usize, e: u32) -> usize {
        self.level(k, e).rank()
    }

    /// `T_k(e)` as a subspace of `Q_e`.
    fn level(&mut self, k: usize, e: u32) -> &Echelon<F> {
        for j in 0..=k {
            let deg = e + (k - j) as u32;
            if !self.levels.contains_key(&(j, deg)) {
                let built = self.build_level(j, deg);
                self.levels.insert((j, deg), built);
            }
        }
        &self.levels[&(k, e)]
    }

    fn build_level(&mut self, k: usize, e: u32) -> Echelon<F> {
        let qe = self.quotient_dim(e);
        if k == 0 {
            return Echelon::new(qe);
        }
        let next = self.quotient_dim(e + 1);
        let mut images: Vec<Row<F>> = vec![Vec::new(); qe];
        for var in 0..4 {
            let block = self.mult(e, var).clone();
            let below = &self.levels[&(k - 1, e + 1)];
            for (j, img) in block.into_iter().enumerate() {
                let off = var * next;
                images[j].extend(below.normal_form(img).into_iter().map(|(c, v)| (c + off, v)));
            }
        }
        let mut ech = Echelon::new(qe);
        for row in kernel(&images, 4 * next) {
            ech.insert(row);
        }
        ech
    }

    /// Runs the saturation levels until they are stable on `[0, top]`.
    pub fn saturate(&mut self, top: u32, guard: usize) -> Result<Saturation> {
        if guard < 1 {
            return Err(Error::OutOfRange("saturation guard must be at least 1".into()));
        }
        for k in 0..guard {
            let stable = (0..=top).all(|e| self.level_dim(k, e) == self.level_dim(k + 1, e));
            if stable {
                let mut dims = Vec::new();
                let mut levels = Vec::new();
                for e in 0..=top {
                    let full = self.level_dim(k, e);
                    dims.push(self.ideal_dim(e) + full);
                    levels.push((0..=k).find(|&j| self.level_dim(j, e) == full).unwrap_or(k));
                }
                return Ok(Saturation {
                    top,
                    level: k,
                    dims,
                    stabilized_at: levels,
                });
            }
        }
        Err(Error::NotStabilized {
            guard,
            top: top as usize,
        })
    }

    /// `f ∈ I^sat`, given a [`Saturation`] from this quotient covering `deg f`.
    pub fn saturation_contains(&mut self, sat: &Saturation, f: &Poly) -> Result<bool> {
        let Some(n) = f.degree() else { return Ok(true) };
        if n > sat.top {
            return Err(Error::OutOfRange(format!(
                "degree {n} is above the saturation window top {}",
                sat.top
            )));
        }
        let c = self.coords(&Self::poly_terms(f), n);
        Ok(self.level(sat.level, n).contains(c))
    }

    /// `dim (I^sat : x_var)_n`, for `n < sat.top`.
    pub fn saturation_colon_var_dim(&mut self, sat: &Saturation, var: usize, n: u32) -> Result<usize> {
        if n >= sat.top {
            return Err(Error::OutOfRange(format!(
                "colon at degree {n} needs the saturation above top {}",
                sat.top
            )));
        }
        let k = sat.level;
        let next = self.quotient_dim(n + 1);
        let block = self.mult(n, var).clone();
        let upper = self.level(k, n + 1).clone();
        let images: Vec<Row<F>> = block.into_iter().map(|img| upper.normal_form(img)).collect();
        let pre = kernel(&images, next).len();
        Ok(sat.dims[n as usize] + pre - self.level_dim(k, n))
    }
}

impl Quotient<BigRational> {
    /// Exact basis of `(I : f)_n`.
    pub fn colon_basis(&mut self, f: &Poly, n: u32) -> Vec<Poly> {
        let monos = MonomialBasis::new(n);
        self.colon_rows(f, n)
            .into_iter()
            .map(|row| {
                let terms = row.into_iter().map(|(j, v)| {
                    debug_assert!(v.is_integer());
                    (monos.monomial(j), v.to_integer())
                });
                Poly::from_terms(terms).expect("homogeneous by construction")
            })
            .collect()
    }
}

/// Saturated dimensions on `[0, top]` and the level at which each degree
/// stopped moving.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Saturation {
    pub top: u32,
    /// Least `k` with `T_k = T_{k+1}` on the whole window.
    pub level: usize,
    /// `dim (I^sat)_n` for `n = 0..=top`.
    pub dims: Vec<usize>,
    /// Per degree, least `k` with `T_k(n)` equal to its final value.
    pub stabilized_at: Vec<usize>,
}

impl Saturation {
    pub fn dim(&self, n: u32) -> Option<usize> {
        self.dims.get(n as usize).copied()
    }
}

/// Values of the Hilbert function of `R/I` and the curve class it fits, if
/// the tail is linear.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertData {
    pub dims: Vec<(i64, i64)>,
    pub fitted: Option<CurveClass>,
}

/// `(slope, value at 0)` of a function known on consecutive degrees, if the
/// last three steps agree. Needs at least four values.
pub fn linear_tail(values: &[(i64, i64)]) -> Result<(i64, i64)> {
    let k = values.len();
    let not_linear = || Error::NotLinear {
        lo: values.first().map_or(0, |v| v.0),
        hi: values.last().map_or(0, |v| v.0),
        values: values.iter().map(|v| v.1).collect(),
    };
    if k < 4 || values.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(not_linear());
    }
    let tail = &values[k - 4..];
    let slope = tail[1].1 - tail[0].1;
    if tail.windows(2).any(|w| w[1].1 - w[0].1 != slope) {
        return Err(not_linear());
    }
    let (n, h) = tail[3];
    Ok((slope, h - slope * n))
}

fn fit_class(values: &[(i64, i64)]) -> Result<CurveClass> {
    let (slope, intercept) = linear_tail(values)?;
    if slope <= 0 {
        return Err(Error::NotLinear {
            lo: values[0].0,
            hi: values[values.len() - 1].0,
            values: values.iter().map(|v| v.1).collect(),
        });
    }
    Ok(CurveClass {
        d: slope,
        g: 1 - intercept,
    })
}

impl<F: Field> Quotient<F> {
    pub fn hilbert_values(&mut self, window: RangeInclusive<u32>) -> Vec<(i64, i64)> {
        window.map(|n| (n as i64, self.quotient_dim(n) as i64)).collect()
    }

    /// `(d, g)` read off `h(n) = dn + 1 − g` at the end of the window.
    pub fn hp_fit(&mut self, window: RangeInclusive<u32>) -> Result<CurveClass> {
        fit_class(&self.hilbert_values(window))
    }

    pub fn hilbert_data(&mut self, window: RangeInclusive<u32>) -> HilbertData {
        let dims = self.hilbert_values(window);
        let fitted = fit_class(&dims).ok();
        HilbertData { dims, fitted }
    }
}

pub fn graded_piece_dim(ideal: &GradedIdeal, n: u32) -> usize {
    Quotient::<Rational>::new(ideal).ideal_dim(n)
}

pub fn hf_quotient(ideal: &GradedIdeal, n: u32) -> usize {
    Quotient::<Rational>::new(ideal).quotient_dim(n)
}

/// Basis of `{v ∈ R_n : f·v ∈ I}`.
pub fn colon_piece(ideal: &GradedIdeal, f: &Poly, n: u32) -> Vec<Poly> {
    Quotient::<Rational>::new(ideal).colon_basis(f, n)
}

pub fn saturation_piece_dim(ideal: &GradedIdeal, n: u32, guard: usize) -> Result<usize> {
    let top = n.max(ideal.max_degree());
    let sat = Quotient::<Rational>::new(ideal).saturate(top, guard)?;
    Ok(sat.dims[n as usize])
}

pub fn hp_fit(ideal: &GradedIdeal, window: RangeInclusive<u32>) -> Result<CurveClass> {
    Quotient::<Rational>::new(ideal).hp_fit(window)
}

pub fn member(f: &Poly, ideal: &GradedIdeal) -> bool {
    Quotient::<Rational>::new(ideal).member(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(gens: &[&str]) -> GradedIdeal {
        GradedIdeal::parse_list(gens).unwrap()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(s).unwrap()
    }

    // Span of all m·g by brute force: a dense rational rank over every
    // monomial product, independent of the sparse echelon code.
    fn brute_piece_dim(gens: &[Poly], n: u32) -> usize {
        let basis = MonomialBasis::new(n);
        let mut rows: Vec<Vec<BigRational>> = Vec::new();
        for g in gens {
            let dg = g.degree().unwrap();
            if dg > n {
                continue;
            }
            for m in MonomialBasis::new(n - dg).monomials() {
                let mut row = vec![BigRational::from_integer(0.into()); basis.len()];
                for (t, c) in g.terms() {
                    row[basis.index_of(&t.mul(m))] = BigRational::from_integer(c.clone());
                }
                rows.push(row);
            }
        }
        let mut rank = 0;
        for c in 0..basis.len() {
            let Some(piv) = (rank..rows.len()).find(|&i| !num_traits::Zero::is_zero(&rows[i][c])) else {
                continue;
            };
            rows.swap(rank, piv);
            for i in rank + 1..rows.len() {
                if !num_traits::Zero::is_zero(&rows[i][c]) {
                    let f = &rows[i][c] / &rows[rank][c];
                    let pr = rows[rank].clone();
                    for (x, y) in rows[i].iter_mut().zip(pr) {
                        *x -= &f * y;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    // T_k by its definition: f with every degree-k monomial multiple in I.
    fn brute_saturation_dim(gens: &[Poly], n: u32, k: u32) -> usize {
        let mut q = Quotient::<Rational>::new(&GradedIdeal::new(gens.to_vec()).unwrap());
        let monos = MonomialBasis::new(n).monomials().to_vec();
        let mults = MonomialBasis::new(k).monomials().to_vec();
        let target = q.quotient_dim(n + k);
        // v ↦ (NF(m·v))_m over all multipliers m; the kernel is T_k + I_n.
        let mut images: Vec<Row<Rational>> = vec![Vec::new(); monos.len()];
        for (b, m) in mults.iter().enumerate() {
            for (j, u) in monos.iter().enumerate() {
                let c = q.coords(&[(u.mul(m), Rational::from_integer(1.into()))], n + k);
                images[j].extend(c.into_iter().map(|(col, v)| (col + b * target, v)));
            }
        }
        kernel(&images, mults.len() * target).len()
    }

    #[test]
    fn piece_examples() {
        assert_eq!(graded_piece_dim(&ideal(&["x"]), 1), 1);
        assert_eq!(graded_piece_dim(&ideal(&["x", "y^2"]), 2), 5);
        assert_eq!(graded_piece_dim(&ideal(&["x^2", "x*y", "y^2", "x + y"]), 1), 1);
        assert_eq!(graded_piece_dim(&GradedIdeal::zero(), 3), 0);
    }

    #[test]
    fn pieces_match_brute_force() {
        let cases = [
            ideal(&["x^2", "x*y^2", "y^3 + x*y*z", "x*z^2 + x*y*w + y^2*z"]),
            ideal(&["x*z - y^2", "x*w - y*z", "y*w - z^2"]),
            ideal(&["x^2", "x*y", "y^4", "y^3*w + x*z^3"]),
            ideal(&["3*x^2 - 2*y*z", "6*x*y + 4*z*w", "z^2 - w^2"]),
        ];
        for i in &cases {
            for n in 0..7 {
                assert_eq!(graded_piece_dim(i, n), brute_piece_dim(i.generators(), n), "{i} n={n}");
            }
        }
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(hf_quotient(&ideal(&["x", "y^2"]), 3), 7);
        for n in 0..6 {
            assert_eq!(hf_quotient(&GradedIdeal::zero(), n) as i64, h0_space(n as i64));
        }
        let c = ideal(&["x^2", "x*y^2", "y^3 + x*y*z", "x*z^2 + x*y*w + y^2*z"]);
        assert_eq!(hf_quotient(&c, 6), 25);
    }

    #[test]
    fn colon_examples() {
        let b = colon_piece(&ideal(&["x^2", "x*y"]), &p("x"), 1);
        assert_eq!(b.len(), 2);
        assert_eq!(colon_piece(&ideal(&["x"]), &p("x"), 0).len(), 1);
        assert_eq!(colon_piece(&ideal(&["x", "y^2"]), &p("x"), 0).len(), 1);
        let i = ideal(&["x^2", "x*y"]);
        for v in &b {
            assert!(member(&v.mul(&p("x")), &i));
        }
        let mut q = Quotient::<Rational>::new(&i);
        assert_eq!(q.colon_var_dim(0, 1), 2);
        assert_eq!(q.colon_dim(&p("x"), 2), 7);
    }

    #[test]
    fn saturation_examples() {
        // (x, y)² is the saturated ideal of a double line in four variables:
        // x·z^k never enters, so nothing new appears in degree 1.
        let a = ideal(&["x^2", "x*y", "y^2"]);
        assert_eq!(saturation_piece_dim(&a, 1, 8).unwrap(), 0);
        assert_eq!(brute_saturation_dim(a.generators(), 1, 5), 0);
        // With an irrelevant component the degree-1 forms do enter.
        let m2 = ideal(&["x^2", "x*y", "x*z", "x*w", "y^2", "y*z", "y*w"]);
        assert_eq!(saturation_piece_dim(&m2, 1, 8).unwrap(), 2);
        let b = ideal(&["x", "y^2"]);
        for n in 0..6 {
            assert_eq!(saturation_piece_dim(&b, n, 6).unwrap(), graded_piece_dim(&b, n));
        }
        let j = ideal(&["x^2", "x*y^2", "x*y*z", "x*y*w", "y^4", "y^3*w + x*z^3"]);
        let i = ideal(&["x^2", "x*y", "y^4", "y^3*w + x*z^3"]);
        let sat = Quotient::<Rational>::new(&j).saturate(8, default_guard(&j)).unwrap();
        for n in 0..=8 {
            assert_eq!(sat.dims[n as usize], graded_piece_dim(&i, n), "n={n}");
        }
    }

    #[test]
    fn saturation_levels_match_definition() {
        let gens = ideal(&["x^2", "x*y^2", "x*y*z", "x*y*w", "y^4", "y^3*w + x*z^3"]);
        let mut q = Quotient::<Rational>::new(&gens);
        for n in 0..4 {
            for k in 0..4usize {
                let ours = q.ideal_dim(n) + q.level_dim(k, n);
                assert_eq!(ours, brute_saturation_dim(gens.generators(), n, k as u32), "n={n} k={k}");
            }
        }
    }

    #[test]
    fn guard_exhaustion_is_reported() {
        let j = ideal(&["x^2", "x*y^2", "x*y*z^3", "x*y*w^3", "y^6", "y^5*w^3 + x*z^7"]);
        let err = Quotient::<Rational>::new(&j).saturate(8, 1).unwrap_err();
        assert!(matches!(err, Error::NotStabilized { guard: 1, .. }));
    }

    #[test]
    fn hp_fit_examples() {
        assert_eq!(hp_fit(&ideal(&["x", "y^2"]), 2..=8).unwrap(), CurveClass { d: 2, g: 0 });
        let c = ideal(&["x^2", "x*y^2", "y^3 + x*y*z", "x*z^2 + x*y*w + y^2*z"]);
        assert_eq!(hp_fit(&c, 4..=10).unwrap(), CurveClass { d: 4, g: 0 });
        assert!(hp_fit(&GradedIdeal::zero(), 2..=8).is_err());
        assert!(hp_fit(&ideal(&["x", "y^2"]), 2..=4).is_err());
    }

    #[test]
    fn member_examples() {
        assert!(member(&p("x^2"), &ideal(&["x"])));
        let j = ideal(&["x^2", "x*y^2", "x*y*z", "x*y*w", "y^4", "y^3*w + x*z^3"]);
        assert!(!member(&p("x*y"), &j));
        let mut q = Quotient::<Rational>::new(&j);
        let sat = q.saturate(4, default_guard(&j)).unwrap();
        assert!(q.saturation_contains(&sat, &p("x*y")).unwrap());
        assert!(member(&p("y^3*w + x*z^3"), &ideal(&["x^2", "x*y", "y^4", "y^3*w + x*z^3"])));
    }

    #[test]
    fn residual_of_plane_curve() {
        let b = ideal(&["x", "y^2"]);
        let mut q = Quotient::<Rational>::new(&b);
        let sat = q.saturate(3, 6).unwrap();
        assert_eq!(q.saturation_colon_var_dim(&sat, 0, 0).unwrap(), 1);
    }

    #[test]
    fn prime_mode_agrees_on_catalog_examples() {
        let c = ideal(&["x^2", "x*y^2", "y^3 + x*y*z", "x*z^2 + x*y*w + y^2*z"]);
        let mut exact = Quotient::<Rational>::new(&c);
        let mut prime = Quotient::<PrimeField>::new(&c);
        for n in 0..8 {
            assert_eq!(exact.quotient_dim(n), prime.quotient_dim(n));
        }
    }
}
