use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::grading::{ElementaryGrading, Grade, GradingStructure};

/// A free variable `x[grade, index]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedVariable {
    pub grade: Grade,
    pub index: u64,
}

impl GradedVariable {
    pub fn new(grade: Grade, index: u64) -> Self {
        GradedVariable { grade, index }
    }
}

/// A word in graded variables; the empty word is the unit monomial.
///
/// Ordered length-first, then lexicographically by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedMonomial {
    vars: Vec<GradedVariable>,
}

impl Ord for GradedMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .len()
            .cmp(&other.vars.len())
            .then_with(|| self.vars.cmp(&other.vars))
    }
}

impl PartialOrd for GradedMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<GradedVariable>> for GradedMonomial {
    fn from(vars: Vec<GradedVariable>) -> Self {
        GradedMonomial { vars }
    }
}

impl FromIterator<GradedVariable> for GradedMonomial {
    fn from_iter<I: IntoIterator<Item = GradedVariable>>(iter: I) -> Self {
        GradedMonomial {
            vars: iter.into_iter().collect(),
        }
    }
}

impl GradedMonomial {
    pub fn unit() -> Self {
        GradedMonomial::default()
    }

    pub fn variable(v: GradedVariable) -> Self {
        GradedMonomial { vars: vec![v] }
    }

    pub fn vars(&self) -> &[GradedVariable] {
        &self.vars
    }

    pub fn len(&self) -> usize {
        self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn concat(&self, other: &GradedMonomial) -> GradedMonomial {
        let mut vars = Vec::with_capacity(self.len() + other.len());
        vars.extend_from_slice(&self.vars);
        vars.extend_from_slice(&other.vars);
        GradedMonomial { vars }
    }

    /// `h(m)`: the grades of the variables in order.
    pub fn degree_tuple(&self) -> Vec<Grade> {
        self.vars.iter().map(|v| v.grade.clone()).collect()
    }

    /// Ordered product of the variable grades; `None` only for the unit
    /// monomial in a structure without identity.
    pub fn degree_in(&self, structure: &GradingStructure) -> Option<Grade> {
        structure.product(self.vars.iter().map(|v| &v.grade))
    }

    /// Each variable occurs at most once.
    pub fn is_multilinear(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        self.vars.iter().all(|v| seen.insert(v))
    }

    /// The sorted multiset of variables.
    pub fn variable_multiset(&self) -> Vec<GradedVariable> {
        let mut vs = self.vars.clone();
        vs.sort();
        vs
    }

    /// Variables `k..=l` (1-based, inclusive).
    pub fn window(&self, k: usize, l: usize) -> Result<GradedMonomial> {
        if k == 0 || k > l || l > self.len() {
            return Err(Error::WindowOutOfRange {
                k,
                l,
                len: self.len(),
            });
        }
        Ok(GradedMonomial {
            vars: self.vars[k - 1..l].to_vec(),
        })
    }

    /// Zero-based half-open slice; used internally by the rewriting code.
    pub(crate) fn slice(&self, range: std::ops::Range<usize>) -> GradedMonomial {
        GradedMonomial {
            vars: self.vars[range].to_vec(),
        }
    }

    /// The same word with variables renamed to `x[h, 1], x[h, 2], ...` per grade,
    /// numbered by first occurrence. Distinct variables stay distinct.
    pub fn canonical_renaming(&self) -> GradedMonomial {
        let mut names = std::collections::HashMap::new();
        let mut next = std::collections::HashMap::<Grade, u64>::new();
        self.vars
            .iter()
            .map(|v| {
                names
                    .entry(v.clone())
                    .or_insert_with(|| {
                        let c = next.entry(v.grade.clone()).or_insert(0);
                        *c += 1;
                        GradedVariable::new(v.grade.clone(), *c)
                    })
                    .clone()
            })
            .collect()
    }

    /// The multilinear monomial `x[h_1, 1] x[h_2, 2] ...` with the given degree tuple.
    pub fn multilinear_from_tuple(tuple: &[Grade]) -> GradedMonomial {
        tuple
            .iter()
            .enumerate()
            .map(|(k, h)| GradedVariable::new(h.clone(), k as u64 + 1))
            .collect()
    }
}

/// `α(m)`; for `MU_n` this may be the absorbing zero.
pub fn degree(m: &GradedMonomial, grading: &ElementaryGrading) -> Option<Grade> {
    m.degree_in(grading.structure())
}

pub fn window(m: &GradedMonomial, k: usize, l: usize) -> Result<GradedMonomial> {
    m.window(k, l)
}
