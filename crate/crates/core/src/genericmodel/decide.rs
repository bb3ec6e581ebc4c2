use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::matrix::PolyMatrix;
use super::model::{evaluate, product_entries};
use crate::error::{Error, Result};
use crate::freealg::{GradedMonomial, GradedPolynomial, GradedVariable};
use crate::grading::ElementaryGrading;

/// Evidence for a verdict, in the JSON shape of the reports.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    Verified,
    NonzeroEntry {
        position: [usize; 2],
        entry: String,
    },
    Offdiag {
        position: [usize; 2],
        entry: String,
    },
    DiagMismatch {
        position: [usize; 2],
        entry: String,
        reference: String,
    },
}

impl Witness {
    pub fn is_verified(&self) -> bool {
        matches!(self, Witness::Verified)
    }
}

pub fn is_identity(f: &GradedPolynomial, grading: &ElementaryGrading) -> bool {
    evaluate(f, grading).is_zero()
}

/// Central means the generic evaluation is scalar. The constant term must vanish.
pub fn is_central(f: &GradedPolynomial, grading: &ElementaryGrading) -> Result<bool> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(evaluate(f, grading).is_scalar())
}

pub fn identity_witness(f: &GradedPolynomial, grading: &ElementaryGrading) -> Witness {
    let e = evaluate(f, grading);
    let first = e.nonzero_positions().next();
    match first {
        None => Witness::Verified,
        Some((i, j)) => Witness::NonzeroEntry {
            position: [i, j],
            entry: e.get(i, j).to_text(grading.structure()),
        },
    }
}

pub fn central_witness(f: &GradedPolynomial, grading: &ElementaryGrading) -> Result<Witness> {
    if !f.constant_term().is_zero() {
        return Err(Error::NonzeroConstantTerm);
    }
    Ok(scalar_witness(&evaluate(f, grading), grading))
}

fn scalar_witness(e: &PolyMatrix, grading: &ElementaryGrading) -> Witness {
    let s = grading.structure();
    if let Some((i, j)) = e.nonzero_positions().find(|&(i, j)| i != j) {
        return Witness::Offdiag {
            position: [i, j],
            entry: e.get(i, j).to_text(s),
        };
    }
    match (2..=e.n()).find(|&k| e.get(k, k) != e.get(1, 1)) {
        None => Witness::Verified,
        Some(k) => Witness::DiagMismatch {
            position: [k, k],
            entry: e.get(k, k).to_text(s),
            reference: e.get(1, 1).to_text(s),
        },
    }
}

/// First position, row-major, where both generic images carry the same
/// nonzero entry.
pub fn entry_match(
    m1: &GradedMonomial,
    m2: &GradedMonomial,
    grading: &ElementaryGrading,
) -> Option<(usize, usize)> {
    let other: HashMap<_, _> = product_entries(grading, m2)
        .into_iter()
        .map(|(i, j, w)| ((i, j), w))
        .collect();
    product_entries(grading, m1)
        .into_iter()
        .find(|(i, j, w)| other.get(&(*i, *j)) == Some(w))
        .map(|(i, j, _)| (i, j))
}

/// Brute-force identity test for multilinear `f`: substitutes graded matrix
/// units in every possible way and checks that each result vanishes.
pub fn matrix_unit_oracle(f: &GradedPolynomial, grading: &ElementaryGrading) -> Result<bool> {
    if !f.is_multilinear() {
        return Err(Error::NotMultilinear);
    }
    let vars = f.variables();
    let n = grading.n();
    let choices: Vec<Vec<(usize, usize)>> = vars
        .iter()
        .map(|v| {
            (1..=n)
                .flat_map(|i| (1..=n).map(move |j| (i, j)))
                .filter(|&(i, j)| grading.degree_of_unit(i, j).ok().as_ref() == Some(&v.grade))
                .collect()
        })
        .collect();
    if choices.iter().any(Vec::is_empty) {
        return Ok(true);
    }
    let slot: HashMap<&GradedVariable, usize> =
        vars.iter().enumerate().map(|(k, v)| (v, k)).collect();
    let terms: Vec<(Vec<usize>, &BigInt)> = f
        .terms()
        .map(|(m, c)| (m.vars().iter().map(|v| slot[v]).collect(), c))
        .collect();
    let mut pick = vec![0usize; vars.len()];
    loop {
        let mut sum: HashMap<(usize, usize), BigInt> = HashMap::new();
        for (order, c) in &terms {
            if let Some(pos) = unit_product(order.iter().map(|&k| choices[k][pick[k]])) {
                *sum.entry(pos).or_default() += *c;
            }
        }
        if sum.values().any(|c| !c.is_zero()) {
            return Ok(false);
        }
        // Odometer over the choice lists.
        let mut k = 0;
        loop {
            if k == pick.len() {
                return Ok(true);
            }
            pick[k] += 1;
            if pick[k] < choices[k].len() {
                break;
            }
            pick[k] = 0;
            k += 1;
        }
    }
}

fn unit_product(units: impl Iterator<Item = (usize, usize)>) -> Option<(usize, usize)> {
    let mut acc: Option<(usize, usize)> = None;
    for (i, j) in units {
        acc = match acc {
            None => Some((i, j)),
            Some((a, b)) if b == i => Some((a, j)),
            Some(_) => return None,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_polynomial;
    use crate::grading::Grade;

    fn poly(text: &str, g: &ElementaryGrading) -> GradedPolynomial {
        parse_polynomial(text, g.structure()).unwrap()
    }

    #[test]
    fn identities() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        assert!(is_identity(
            &poly("x[0,1]*x[0,2] - x[0,2]*x[0,1]", &z2),
            &z2
        ));
        assert!(!is_identity(
            &poly("x[1,1]*x[1,2] - x[1,2]*x[1,1]", &z2),
            &z2
        ));
        assert!(is_identity(
            &poly("x[1,1]*x[1,2]*x[1,3] - x[1,3]*x[1,2]*x[1,1]", &z2),
            &z2
        ));
        assert!(!is_identity(&poly("x[1,1]", &z2), &z2));
        assert!(is_identity(&GradedPolynomial::zero(), &z2));

        let z3 = ElementaryGrading::integers(3).unwrap();
        assert!(is_identity(&poly("x[5,1]", &z3), &z3));
    }

    #[test]
    fn central() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        assert!(is_central(&poly("x[1,1]^2", &z2), &z2).unwrap());
        assert!(!is_central(&poly("x[0,1]", &z2), &z2).unwrap());
        assert!(is_central(&poly("x[1,1]*x[1,2] + x[1,2]*x[1,1]", &z2), &z2).unwrap());
        assert!(is_central(&GradedPolynomial::zero(), &z2).unwrap());
        assert_eq!(
            is_central(&poly("1 + x[1,1]^2", &z2), &z2),
            Err(Error::NonzeroConstantTerm)
        );
    }

    #[test]
    fn witnesses() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let w = identity_witness(&poly("x[1,1]", &z2), &z2);
        assert_eq!(
            serde_json::to_string(&w).unwrap(),
            r#"{"kind":"nonzero_entry","position":[1,2],"entry":"y[1,1,1]"}"#
        );
        let w = central_witness(&poly("x[0,1]", &z2), &z2).unwrap();
        assert!(matches!(
            w,
            Witness::DiagMismatch {
                position: [2, 2],
                ..
            }
        ));
        let w = central_witness(&poly("x[1,1]", &z2), &z2).unwrap();
        assert!(matches!(
            w,
            Witness::Offdiag {
                position: [1, 2],
                ..
            }
        ));
        assert_eq!(
            serde_json::to_string(&central_witness(&poly("x[1,1]^2", &z2), &z2).unwrap()).unwrap(),
            r#"{"kind":"verified"}"#
        );
    }

    #[test]
    fn oracle() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        assert!(matrix_unit_oracle(&poly("x[0,1]*x[0,2] - x[0,2]*x[0,1]", &z2), &z2).unwrap());
        assert!(!matrix_unit_oracle(&poly("x[1,1]*x[1,2]", &z2), &z2).unwrap());
        let z = ElementaryGrading::integers(2).unwrap();
        assert!(matrix_unit_oracle(&poly("x[4,1]", &z), &z).unwrap());
        assert_eq!(
            matrix_unit_oracle(&poly("x[1,1]^2", &z2), &z2),
            Err(Error::NotMultilinear)
        );
        assert_eq!(
            matrix_unit_oracle(&poly("x[1,1] + x[1,1]*x[1,2]", &z2), &z2),
            Err(Error::NotMultilinear)
        );
    }

    #[test]
    fn entry_matches() {
        let z3 = ElementaryGrading::zn(3).unwrap();
        let m = GradedMonomial::multilinear_from_tuple(&[
            Grade::Elem(1),
            Grade::Elem(2),
            Grade::Elem(1),
        ]);
        let rev: GradedMonomial = m.vars().iter().rev().cloned().collect();
        let (i, j) = entry_match(&m, &rev, &z3).unwrap();
        assert_ne!(i, j);
        assert_eq!(entry_match(&m, &m, &z3), Some((1, 2)));

        let z = ElementaryGrading::integers(2).unwrap();
        let dead = GradedMonomial::multilinear_from_tuple(&[Grade::int(2)]);
        assert_eq!(entry_match(&dead, &dead, &z), None);
    }
}
