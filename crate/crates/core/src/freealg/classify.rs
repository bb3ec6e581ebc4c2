//! Subword-degree taxonomy of monomials (Types 1 to 4) and the λ bound.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use super::monomial::GradedMonomial;
use crate::error::{Error, Result};
use crate::grading::{ElementaryGrading, Grade};

/// Positions `(a, p1, p2)` of two equal-shape neutral blocks
/// `x_{p1} .. x_{p1+a}` and `x_{p2} .. x_{p2+a}` separated by a neutral
/// (possibly empty) middle block. All positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Type2Witness {
    pub a: usize,
    pub p1: usize,
    pub p2: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialClass {
    pub is_type1: bool,
    pub is_type2: bool,
    pub is_type3: bool,
    pub is_type4: bool,
    pub type2_witness: Option<Type2Witness>,
}

/// Degrees of all windows `[k, l]`, zero-based, `k <= l`.
struct SubwordDegrees {
    rows: Vec<Vec<Grade>>,
}

impl SubwordDegrees {
    fn new(m: &GradedMonomial, grading: &ElementaryGrading) -> Self {
        let vars = m.vars();
        let rows = (0..vars.len())
            .map(|k| {
                let mut row = Vec::with_capacity(vars.len() - k);
                let mut acc = vars[k].grade.clone();
                row.push(acc.clone());
                for v in &vars[k + 1..] {
                    acc = grading.mul(&acc, &v.grade);
                    row.push(acc.clone());
                }
                row
            })
            .collect();
        SubwordDegrees { rows }
    }

    fn get(&self, k: usize, l: usize) -> &Grade {
        &self.rows[k][l - k]
    }
}

pub fn classify(m: &GradedMonomial, grading: &ElementaryGrading) -> MonomialClass {
    let len = m.len();
    let table = SubwordDegrees::new(m, grading);
    let is_type1 = (0..len).all(|k| (k..len).all(|l| grading.in_support(table.get(k, l))));
    let has_proper_neutral = (0..len)
        .any(|k| (k..len).any(|l| (k, l) != (0, len - 1) && grading.is_neutral(table.get(k, l))));
    let type2_witness = find_type2(m, grading, &table);
    MonomialClass {
        is_type1,
        is_type2: type2_witness.is_some(),
        is_type3: !has_proper_neutral,
        is_type4: has_proper_neutral,
        type2_witness,
    }
}

fn find_type2(
    m: &GradedMonomial,
    grading: &ElementaryGrading,
    table: &SubwordDegrees,
) -> Option<Type2Witness> {
    let len = m.len();
    let vars = m.vars();
    let neutral = |k: usize, l: usize| grading.is_neutral(table.get(k, l));
    // Zero-based: block one is [q1, q1 + a], block two is [q2, q2 + a],
    // the middle is [q1 + a + 1, q2 - 1] and may be empty.
    for a in 1..len {
        for q1 in 0..len {
            if q1 + a >= len || !neutral(q1, q1 + a) {
                continue;
            }
            for q2 in q1 + a + 1..len {
                if q2 + a >= len {
                    break;
                }
                if q2 > q1 + a + 1 && !neutral(q1 + a + 1, q2 - 1) {
                    continue;
                }
                if !neutral(q2, q2 + a) {
                    continue;
                }
                let same_shape = (0..=a).all(|t| vars[q1 + t].grade == vars[q2 + t].grade);
                if same_shape {
                    return Some(Type2Witness {
                        a,
                        p1: q1 + 1,
                        p2: q2 + 1,
                    });
                }
            }
        }
    }
    None
}

/// Checks a Type-2 witness directly against the definition.
pub fn is_type2_witness(m: &GradedMonomial, grading: &ElementaryGrading, w: Type2Witness) -> bool {
    let Type2Witness { a, p1, p2 } = w;
    let l = m.len();
    if !(a >= 1 && p1 >= 1 && p1 + a < p2 && p2 + a <= l) {
        return false;
    }
    let s = grading.structure();
    let deg = |k: usize, l: usize| -> Option<Grade> {
        if k > l {
            s.identity()
        } else {
            m.window(k, l).ok()?.degree_in(s)
        }
    };
    let neutral = |g: Option<Grade>| g.is_some_and(|g| grading.is_neutral(&g));
    neutral(deg(p1, p1 + a))
        && neutral(deg(p1 + a + 1, p2 - 1))
        && neutral(deg(p2, p2 + a))
        && m.window(p1, p1 + a).unwrap().degree_tuple()
            == m.window(p2, p2 + a).unwrap().degree_tuple()
}

/// `λ = (s+1)·((s+1)·Σ_{i=1}^{s} (s-1)^i + 1)` for a support of size `s`.
pub fn lambda_bound(s: usize) -> Result<BigUint> {
    if s == 0 {
        return Err(Error::Precondition(
            "support size must be at least 1".into(),
        ));
    }
    let base = BigUint::from(s - 1);
    let mut power = BigUint::one();
    let mut sum = BigUint::zero();
    for _ in 0..s {
        power *= &base;
        sum += &power;
    }
    let s1 = BigUint::from(s + 1);
    Ok(&s1 * (&s1 * sum + 1u32))
}

/// Removes every variable whose grade is the neutral element.
pub fn delete_neutral_variables(m: &GradedMonomial, grading: &ElementaryGrading) -> GradedMonomial {
    m.vars()
        .iter()
        .filter(|v| !grading.is_neutral(&v.grade))
        .cloned()
        .collect()
}
