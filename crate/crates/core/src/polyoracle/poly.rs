use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, VARS};
use crate::{Error, Result};

/// Homogeneous polynomial in `x, y, z, w` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn monomial(coef: impl Into<BigInt>, m: Monomial) -> Self {
        let mut p = Poly::zero();
        p.add_term(m, coef.into());
        p
    }

    /// Builds from terms, merging repeats; rejects mixed degrees.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Result<Self> {
        let mut p = Poly::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        if !p.is_homogeneous() {
            return Err(Error::Parse {
                line: 0,
                message: format!("polynomial {p} is not homogeneous"),
            });
        }
        Ok(p)
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        let entry = self.terms.entry(m).or_insert_with(BigInt::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            Some(d) => degs.all(|e| e == d),
            None => true,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next().map(Monomial::degree)
    }

    /// Terms from the largest monomial down.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            terms: self.terms.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Sum; fails when both are nonzero of different degrees.
    pub fn add(&self, other: &Poly) -> Result<Poly> {
        Poly::from_terms(self.terms.iter().chain(&other.terms).map(|(m, c)| (*m, c.clone())))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.scale(&-BigInt::one()))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                p.add_term(a.mul(b), ca * cb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut acc = Poly::monomial(1, Monomial::ONE);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Parses `3*x^2*y - w^3`. Coefficients may precede a monomial as
    /// `c*m` or stand alone.
    pub fn parse(text: &str) -> Result<Poly> {
        let err = |message: String| Error::Parse { line: 0, message };
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(err("empty polynomial".into()));
        }
        let mut terms = Vec::new();
        let mut rest = s.as_str();
        let mut first = true;
        while !rest.is_empty() {
            let mut negative = false;
            if let Some(r) = rest.strip_prefix('+') {
                if first {
                    return Err(err(format!("leading '+' in {text:?}")));
                }
                rest = r;
            } else if let Some(r) = rest.strip_prefix('-') {
                negative = true;
                rest = r;
            } else if !first {
                return Err(err(format!("expected '+' or '-' in {text:?}")));
            }
            first = false;
            let end = rest.find(['+', '-']).unwrap_or(rest.len());
            let (term, tail) = rest.split_at(end);
            rest = tail;
            let (m, mut c) = parse_term(term).map_err(err)?;
            if negative {
                c = -c;
            }
            terms.push((m, c));
        }
        Poly::from_terms(terms)
    }
}

fn parse_term(term: &str) -> std::result::Result<(Monomial, BigInt), String> {
    if term.is_empty() {
        return Err("empty term".into());
    }
    let mut coef = BigInt::one();
    let mut exps = [0u32; 4];
    let mut saw_coef = false;
    for (k, factor) in term.split('*').enumerate() {
        if factor.is_empty() {
            return Err(format!("empty factor in term {term:?}"));
        }
        if factor.chars().all(|c| c.is_ascii_digit()) {
            if k != 0 || saw_coef {
                return Err(format!("coefficient must lead term {term:?}"));
            }
            coef = factor.parse().map_err(|e| format!("bad coefficient {factor:?}: {e}"))?;
            saw_coef = true;
            continue;
        }
        let mut chars = factor.chars();
        let v = chars.next().expect("nonempty");
        let Some(i) = VARS.iter().position(|&c| c == v) else {
            return Err(format!("unknown variable {v:?} (expected x, y, z or w)"));
        };
        let rest = chars.as_str();
        let e: u32 = if rest.is_empty() {
            1
        } else if let Some(digits) = rest.strip_prefix('^') {
            digits.parse().map_err(|_| format!("bad exponent in {factor:?}"))?
        } else {
            return Err(format!("bad factor {factor:?}"));
        };
        exps[i] += e;
    }
    Ok((Monomial::new(exps), coef))
}

impl fmt::Display for Poly {
    /// Canonical form: terms by decreasing monomial, ` + ` / ` - ` between
    /// them, unit coefficients omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = c.is_negative();
            match (k, sign) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if *m == Monomial::ONE {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}
