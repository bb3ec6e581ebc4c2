//! Seeded generators for the randomized batteries.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::freealg::{GradedMonomial, GradedPolynomial, GradedVariable};
use crate::grading::{ElementaryGrading, Grade, StructureKind};

pub type SuiteRng = ChaCha8Rng;

/// Grades worth sampling: the support, plus a few grades outside it.
pub fn grade_pool(grading: &ElementaryGrading) -> Vec<Grade> {
    let s = grading.structure();
    match s.kind() {
        StructureKind::Integers => {
            let n = grading.n() as i64;
            (-n..=n).map(Grade::int).collect()
        }
        _ => s.carrier().expect("finite structure"),
    }
}

pub fn nonzero_coefficient(rng: &mut SuiteRng) -> BigInt {
    let c: i64 = rng.gen_range(1..=3);
    BigInt::from(if rng.gen_bool(0.5) { c } else { -c })
}

/// A monomial of degree `h` with 1 to `max_len` variables drawn from
/// `x[g, 1..=vars]`.
pub fn monomial_of_degree(
    rng: &mut SuiteRng,
    grading: &ElementaryGrading,
    h: &Grade,
    max_len: usize,
    vars: u64,
) -> GradedMonomial {
    let s = grading.structure();
    let pool = grade_pool(grading);
    let len = rng.gen_range(1..=max_len);
    let mut grades: Vec<Grade> = Vec::with_capacity(len);
    if s.is_group() {
        for _ in 1..len {
            grades.push(pool.choose(rng).unwrap().clone());
        }
        let prefix = s.product(grades.iter()).expect("groups have an identity");
        let last = s.mul(&s.inverse(&prefix).expect("groups have inverses"), h);
        grades.push(last);
    } else {
        let n = grading.n();
        match h {
            Grade::Unit(i, j) => {
                let mut row = *i;
                for _ in 1..len {
                    let next = rng.gen_range(1..=n);
                    grades.push(Grade::Unit(row, next));
                    row = next;
                }
                grades.push(Grade::Unit(row, *j));
            }
            _ if n == 1 || len == 1 => grades.push(Grade::Zero),
            _ => {
                // Two units that do not chain, then anything.
                let (a, b) = (rng.gen_range(1..=n), rng.gen_range(1..=n));
                let c = (b % n) + 1;
                grades.push(Grade::Unit(a, b));
                grades.push(Grade::Unit(c, rng.gen_range(1..=n)));
                for _ in 2..len {
                    grades.push(pool.choose(rng).unwrap().clone());
                }
            }
        }
    }
    grades
        .into_iter()
        .map(|g| GradedVariable::new(g, rng.gen_range(1..=vars)))
        .collect()
}

/// A sum of one or two monomials of degree `h` with small coefficients.
pub fn homogeneous_polynomial(
    rng: &mut SuiteRng,
    grading: &ElementaryGrading,
    h: &Grade,
) -> GradedPolynomial {
    let mut out = GradedPolynomial::zero();
    for _ in 0..rng.gen_range(1..=2) {
        out.add_term(
            nonzero_coefficient(rng),
            monomial_of_degree(rng, grading, h, 3, 4),
        );
    }
    out
}

/// A graded-endomorphism image of `f` or a two-sided multiple `z_1 f z_2`.
pub fn consequence(
    rng: &mut SuiteRng,
    f: &GradedPolynomial,
    grading: &ElementaryGrading,
) -> Result<GradedPolynomial> {
    if rng.gen_bool(0.5) {
        let map: BTreeMap<GradedVariable, GradedPolynomial> = f
            .variables()
            .into_iter()
            .map(|v| {
                let image = homogeneous_polynomial(rng, grading, &v.grade);
                (v, image)
            })
            .collect();
        f.substitute(&map, grading)
    } else {
        let pool = grade_pool(grading);
        let side = |rng: &mut SuiteRng| {
            if rng.gen_bool(0.2) {
                GradedMonomial::unit()
            } else {
                let g = pool.choose(rng).unwrap().clone();
                monomial_of_degree(rng, grading, &g, 2, 6)
            }
        };
        let left = side(rng);
        let right = side(rng);
        Ok(f.flank(&left, &right))
    }
}

/// Random word of length `1..=max_len` over `vars` variables with random
/// grades from the pool; a variable keeps its grade at every occurrence.
pub fn random_word(
    rng: &mut SuiteRng,
    pool: &[Grade],
    max_len: usize,
    vars: u64,
) -> GradedMonomial {
    let grades: Vec<Grade> = (0..vars)
        .map(|_| pool.choose(rng).unwrap().clone())
        .collect();
    let len = rng.gen_range(1..=max_len);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(0..vars);
            GradedVariable::new(grades[i as usize].clone(), i + 1)
        })
        .collect()
}
