use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::grading::{Grade, GradingStructure};

/// The commuting variable `y_{h,i}^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CommutingVariable {
    pub grade: Grade,
    pub index: u64,
    pub row: usize,
}

/// A commutative monomial: sorted `(variable, exponent)` pairs with positive exponents.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CommutativeMonomial(Vec<(CommutingVariable, u32)>);

impl CommutativeMonomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// Collects a product of variables into canonical form.
    pub fn from_factors(factors: impl IntoIterator<Item = CommutingVariable>) -> Self {
        let mut vs: Vec<CommutingVariable> = factors.into_iter().collect();
        vs.sort_unstable();
        let mut out: Vec<(CommutingVariable, u32)> = Vec::with_capacity(vs.len());
        for v in vs {
            match out.last_mut() {
                Some((last, e)) if *last == v => *e += 1,
                _ => out.push((v, 1)),
            }
        }
        CommutativeMonomial(out)
    }

    pub fn factors(&self) -> &[(CommutingVariable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|(_, e)| u64::from(*e)).sum()
    }

    pub fn mul(&self, other: &CommutativeMonomial) -> CommutativeMonomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        CommutativeMonomial(out)
    }

    pub fn to_text(&self, structure: &GradingStructure) -> String {
        if self.0.is_empty() {
            return "1".into();
        }
        self.0
            .iter()
            .map(|(v, e)| {
                let base = format!(
                    "y[{},{},{}]",
                    structure.format_grade(&v.grade),
                    v.index,
                    v.row
                );
                if *e > 1 {
                    format!("{base}^{e}")
                } else {
                    base
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// Exact polynomial over the commuting variables `y_{h,i}^k` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SparsePolynomial {
    terms: BTreeMap<CommutativeMonomial, BigInt>,
}

impl SparsePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(BigInt::one(), CommutativeMonomial::one())
    }

    pub fn term(c: BigInt, m: CommutativeMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(c, m);
        p
    }

    pub fn variable(v: CommutingVariable) -> Self {
        Self::term(BigInt::one(), CommutativeMonomial(vec![(v, 1)]))
    }

    pub fn add_term(&mut self, c: BigInt, m: CommutativeMonomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&CommutativeMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        SparsePolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn to_text(&self, structure: &GradingStructure) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => out.push('-'),
                (0, false) => {}
                (_, true) => out.push_str(" - "),
                (_, false) => out.push_str(" + "),
            }
            let abs = c.abs();
            if m.0.is_empty() {
                out.push_str(&abs.to_string());
            } else {
                if !abs.is_one() {
                    out.push_str(&format!("{abs}*"));
                }
                out.push_str(&m.to_text(structure));
            }
        }
        out
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let (big, small) = if self.len() >= rhs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = SparsePolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(ca * cb, a.mul(b));
            }
        }
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-BigInt::one())
    }
}
