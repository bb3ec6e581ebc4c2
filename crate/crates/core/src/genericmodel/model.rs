use rayon::prelude::*;

use super::matrix::PolyMatrix;
use super::sparse::{CommutativeMonomial, CommutingVariable, SparsePolynomial};
use crate::freealg::{GradedMonomial, GradedPolynomial};
use crate::grading::{ElementaryGrading, Grade};

/// `A_i^h = Σ_{k ∈ L_h} y_{h,i}^k e_{k, s_h^k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericMatrix {
    pub grade: Grade,
    pub index: u64,
    pub matrix: PolyMatrix,
}

/// Image of a polynomial under the canonical generic assignment.
pub type Evaluation = PolyMatrix;

pub fn make_generic(grading: &ElementaryGrading, h: &Grade, i: u64) -> GenericMatrix {
    let mut matrix = PolyMatrix::zero(grading.n());
    let data = grading.indices_for_degree(h);
    for (k, path) in data.paths() {
        let y = CommutingVariable {
            grade: h.clone(),
            index: i,
            row: k,
        };
        matrix.set(k, path[1], SparsePolynomial::variable(y));
    }
    GenericMatrix {
        grade: h.clone(),
        index: i,
        matrix,
    }
}

/// The diagonal-walk entries of a monomial's generic image: one
/// `(row, column, w_k)` per admissible starting row `k`.
pub(crate) fn product_entries(
    grading: &ElementaryGrading,
    m: &GradedMonomial,
) -> Vec<(usize, usize, CommutativeMonomial)> {
    let data = grading.indices_for_tuple(&m.degree_tuple());
    data.paths()
        .map(|(k, path)| {
            let w =
                CommutativeMonomial::from_factors(m.vars().iter().zip(path).map(|(v, &row)| {
                    CommutingVariable {
                        grade: v.grade.clone(),
                        index: v.index,
                        row,
                    }
                }));
            (k, *path.last().expect("path is nonempty"), w)
        })
        .collect()
}

/// Closed-form product `A_{i_1}^{h_1} ⋯ A_{i_q}^{h_q} = Σ_{k ∈ L} w_k e_{s_1^k, s_{q+1}^k}`.
pub fn monomial_product(grading: &ElementaryGrading, m: &GradedMonomial) -> Evaluation {
    let mut out = PolyMatrix::zero(grading.n());
    for (i, j, w) in product_entries(grading, m) {
        out.set(i, j, SparsePolynomial::term(1.into(), w));
    }
    out
}

/// Iterated multiplication of the generic matrices, for cross-checking
/// [`monomial_product`].
pub fn naive_monomial_product(grading: &ElementaryGrading, m: &GradedMonomial) -> Evaluation {
    m.vars()
        .iter()
        .fold(PolyMatrix::identity(grading.n()), |acc, v| {
            &acc * &make_generic(grading, &v.grade, v.index).matrix
        })
}

/// Substitutes `A_i^h` for every `x[h, i]` and expands exactly.
///
/// Terms are evaluated in parallel; matrix addition is exact and
/// commutative, so the result does not depend on scheduling.
pub fn evaluate(f: &GradedPolynomial, grading: &ElementaryGrading) -> Evaluation {
    let n = grading.n();
    let terms: Vec<_> = f.terms().collect();
    terms
        .par_iter()
        .map(|(m, c)| {
            let mut part = PolyMatrix::zero(n);
            for (i, j, w) in product_entries(grading, m) {
                part.set(i, j, SparsePolynomial::term((*c).clone(), w));
            }
            part
        })
        .reduce(|| PolyMatrix::zero(n), |a, b| &a + &b)
}
