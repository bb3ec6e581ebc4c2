use std::ops::{Add, Mul};

use num_bigint::BigInt;

use super::sparse::SparsePolynomial;
use crate::grading::GradingStructure;

/// An `n × n` matrix over the commuting polynomial ring. Indices are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<SparsePolynomial>,
}

impl PolyMatrix {
    pub fn zero(n: usize) -> Self {
        PolyMatrix {
            n,
            entries: vec![SparsePolynomial::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for k in 1..=n {
            m.set(k, k, SparsePolynomial::one());
        }
        m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &SparsePolynomial {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, p: SparsePolynomial) {
        self.entries[(i - 1) * self.n + (j - 1)] = p;
    }

    pub fn add_to(&mut self, i: usize, j: usize, p: &SparsePolynomial) {
        let slot = &mut self.entries[(i - 1) * self.n + (j - 1)];
        *slot = &*slot + p;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(SparsePolynomial::is_zero)
    }

    /// Positions of nonzero entries, row-major.
    pub fn nonzero_positions(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..=self.n)
            .flat_map(move |i| (1..=self.n).map(move |j| (i, j)))
            .filter(|&(i, j)| !self.get(i, j).is_zero())
    }

    /// Off-diagonal entries vanish and the diagonal entries coincide.
    pub fn is_scalar(&self) -> bool {
        self.nonzero_positions().all(|(i, j)| i == j)
            && (2..=self.n).all(|k| self.get(k, k) == self.get(1, 1))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        PolyMatrix {
            n: self.n,
            entries: self.entries.iter().map(|p| p.scale(c)).collect(),
        }
    }

    pub fn to_text(&self, structure: &GradingStructure) -> String {
        (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| self.get(i, j).to_text(structure))
                    .collect::<Vec<_>>()
                    .join(" | ")
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

impl Add for &PolyMatrix {
    type Output = PolyMatrix;
    fn add(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        PolyMatrix {
            n: self.n,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Mul for &PolyMatrix {
    type Output = PolyMatrix;
    fn mul(self, rhs: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.n, rhs.n, "matrix sizes differ");
        let n = self.n;
        let mut out = PolyMatrix::zero(n);
        for i in 1..=n {
            for k in 1..=n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 1..=n {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        out.add_to(i, j, &(a * b));
                    }
                }
            }
        }
        out
    }
}
