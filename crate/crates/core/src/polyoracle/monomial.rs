use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

/// Variable names, in monomial-order priority.
pub const VARS: [char; 4] = ['x', 'y', 'z', 'w'];

/// `x^a y^b z^c w^e`. Ordered graded-lexicographically with `x > y > z > w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: [u32; 4],
}

impl Monomial {
    pub const ONE: Monomial = Monomial { exps: [0; 4] };

    pub fn new(exps: [u32; 4]) -> Self {
        Monomial { exps }
    }

    pub fn var(i: usize) -> Self {
        let mut exps = [0; 4];
        exps[i] = 1;
        Monomial { exps }
    }

    pub fn exponents(&self) -> [u32; 4] {
        self.exps
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Monomial { exps }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    /// `x^2*y`; the unit monomial prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (v, &e) in VARS.iter().zip(&self.exps) {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All monomials of one degree, largest first, with a reverse index.
#[derive(Clone, Debug)]
pub struct MonomialBasis {
    degree: u32,
    monos: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBasis {
    pub fn new(degree: u32) -> Self {
        let mut monos = Vec::new();
        for a in (0..=degree).rev() {
            for b in (0..=degree - a).rev() {
                for c in (0..=degree - a - b).rev() {
                    monos.push(Monomial::new([a, b, c, degree - a - b - c]));
                }
            }
        }
        let index = monos.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        MonomialBasis { degree, monos, index }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.monos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monos.is_empty()
    }

    pub fn monomial(&self, i: usize) -> Monomial {
        self.monos[i]
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monos
    }

    pub fn index_of(&self, m: &Monomial) -> usize {
        self.index[m]
    }
}
