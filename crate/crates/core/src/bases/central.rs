use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::freealg::{GradedMonomial, GradedPolynomial, GradedVariable};
use crate::genericmodel::{evaluate, is_central, is_identity};
use crate::grading::{is_complete_sequence, is_prime, ElementaryGrading};

fn residues(grading: &ElementaryGrading, vars: &[GradedVariable]) -> Result<Vec<usize>> {
    vars.iter()
        .map(|v| {
            grading.residue(&v.grade).ok_or_else(|| {
                Error::Unsupported("complete sequences need the canonical Z_n or Z grading".into())
            })
        })
        .collect()
}

/// `Σ_{σ ∈ H_n} x_{σ(1)} ⋯ x_{σ(n)}` over the cyclic group generated by
/// `(1 2 ⋯ n)`: the sum of the `n` cyclic rotations of `vars`.
pub fn h_n_symmetrization(
    grading: &ElementaryGrading,
    vars: &[GradedVariable],
) -> Result<GradedPolynomial> {
    let n = grading.n();
    let seq = residues(grading, vars)?;
    if !is_complete_sequence(n, &seq)? {
        return Err(Error::Precondition(format!(
            "degree sequence {seq:?} is not complete"
        )));
    }
    let mut out = GradedPolynomial::zero();
    for shift in 0..n {
        let m: GradedMonomial = (0..n).map(|k| vars[(k + shift) % n].clone()).collect();
        out.add_term(1.into(), m);
    }
    Ok(out)
}

/// Splits a degree-zero monomial as `m_1 ⋯ m_n` with a complete degree sequence.
///
/// Tries the diagonal rows in order; a row qualifies when its walk visits
/// every row before the final return. Cuts are made where each row is first
/// reached.
pub fn factor_complete(
    m: &GradedMonomial,
    grading: &ElementaryGrading,
) -> Result<Option<Vec<GradedMonomial>>> {
    let n = grading.n();
    residues(grading, m.vars())?;
    let neutral = m
        .degree_in(grading.structure())
        .is_some_and(|g| grading.is_neutral(&g));
    if !neutral {
        return Err(Error::Precondition("monomial must have degree 0".into()));
    }
    let data = grading.indices_for_tuple(&m.degree_tuple());
    if data.is_empty() {
        return Err(Error::Precondition("monomial is a graded identity".into()));
    }
    for (_, path) in data.paths() {
        let walk = &path[..m.len()];
        let mut cuts = Vec::with_capacity(n);
        let mut seen = vec![false; n + 1];
        for (p, &row) in walk.iter().enumerate() {
            if !seen[row] {
                seen[row] = true;
                cuts.push(p);
            }
        }
        if cuts.len() < n {
            continue;
        }
        cuts.push(m.len());
        let factors = cuts.windows(2).map(|w| m.slice(w[0]..w[1])).collect();
        return Ok(Some(factors));
    }
    Ok(None)
}

/// For a central non-identity monomial over `Z_p`, the element of the
/// central T-space spanned by the power monomials that agrees with `m`
/// modulo the graded identities.
pub fn check_v1_reduction(
    m: &GradedMonomial,
    grading: &ElementaryGrading,
) -> Result<GradedPolynomial> {
    let p = grading
        .zn_canonical_modulus()
        .filter(|&p| is_prime(p))
        .ok_or_else(|| Error::Unsupported("needs the canonical Z_p grading, p prime".into()))?;
    let f: GradedPolynomial = m.clone().into();
    if m.is_empty() || is_identity(&f, grading) || !is_central(&f, grading)? {
        return Err(Error::Precondition(
            "monomial must be central and not a graded identity".into(),
        ));
    }
    let mut order: Vec<GradedVariable> = Vec::new();
    let mut count: HashMap<&GradedVariable, usize> = HashMap::new();
    for v in m.vars() {
        let c = count.entry(v).or_insert(0);
        if *c == 0 {
            order.push(v.clone());
        }
        *c += 1;
    }
    let power = |v: &GradedVariable, k: usize| std::iter::repeat_n(v.clone(), k);
    let (zero, nonzero): (Vec<_>, Vec<_>) = order
        .iter()
        .cloned()
        .partition(|v| grading.is_neutral(&v.grade));
    let out: GradedMonomial = if zero.is_empty() {
        order
            .iter()
            .rev()
            .flat_map(|v| power(v, count[v]))
            .collect()
    } else {
        let lead = &nonzero[0];
        let block: Vec<GradedVariable> = std::iter::once(lead.clone())
            .chain(zero.iter().flat_map(|v| power(v, count[v] / p)))
            .collect();
        (0..p)
            .flat_map(|_| block.iter().cloned())
            .chain(power(lead, count[lead] - p))
            .chain(nonzero[1..].iter().flat_map(|v| power(v, count[v])))
            .collect()
    };
    debug_assert!(evaluate(&(&f - &GradedPolynomial::from(out.clone())), grading).is_zero());
    Ok(out.into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::{format_polynomial, parse_monomial};
    use crate::grading::{is_complete_sequence, Grade};

    fn mono(text: &str, g: &ElementaryGrading) -> GradedMonomial {
        parse_monomial(text, g.structure()).unwrap()
    }

    #[test]
    fn symmetrizations() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let vars = mono("x[1,1]*x[1,2]", &z2).vars().to_vec();
        let f = h_n_symmetrization(&z2, &vars).unwrap();
        assert_eq!(
            format_polynomial(&f, z2.structure()),
            "x[1,1]*x[1,2] + x[1,2]*x[1,1]"
        );

        let z3 = ElementaryGrading::zn(3).unwrap();
        let vars = mono("x[1,1]*x[1,2]*x[1,3]", &z3).vars().to_vec();
        let f = h_n_symmetrization(&z3, &vars).unwrap();
        assert_eq!(
            format_polynomial(&f, z3.structure()),
            "x[1,1]*x[1,2]*x[1,3] + x[1,2]*x[1,3]*x[1,1] + x[1,3]*x[1,1]*x[1,2]"
        );

        let z1 = ElementaryGrading::zn(1).unwrap();
        let f = h_n_symmetrization(&z1, &[GradedVariable::new(Grade::Elem(0), 1)]).unwrap();
        assert_eq!(format_polynomial(&f, z1.structure()), "x[0,1]");

        let bad = mono("x[0,1]*x[0,2]", &z2).vars().to_vec();
        assert!(h_n_symmetrization(&z2, &bad).is_err());
    }

    #[test]
    fn complete_factorizations() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]", &z2);
        let f = factor_complete(&m, &z2).unwrap().unwrap();
        assert_eq!(f, vec![mono("x[1,1]", &z2), mono("x[1,2]", &z2)]);

        let z3 = ElementaryGrading::zn(3).unwrap();
        let m = mono("x[1,1]*x[1,2]*x[1,3]", &z3);
        let f = factor_complete(&m, &z3).unwrap().unwrap();
        assert_eq!(f.len(), 3);
        assert!(f.iter().all(|x| x.len() == 1));

        assert_eq!(
            factor_complete(&mono("x[0,1]*x[0,2]", &z2), &z2).unwrap(),
            None
        );
        assert!(factor_complete(&mono("x[1,1]", &z2), &z2).is_err());

        let m = mono("x[2,1]*x[0,2]*x[2,3]*x[1,4]*x[1,5]", &z3);
        let f = factor_complete(&m, &z3).unwrap().unwrap();
        let seq: Vec<usize> = f
            .iter()
            .map(|x| z3.residue(&x.degree_in(z3.structure()).unwrap()).unwrap())
            .collect();
        assert!(is_complete_sequence(3, &seq).unwrap());
        assert_eq!(f.iter().fold(GradedMonomial::unit(), |a, b| a.concat(b)), m);
    }

    #[test]
    fn v1_reductions() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]^2*x[1,1]", &z2);
        let r = check_v1_reduction(&m, &z2).unwrap();
        assert!(is_identity(&(&GradedPolynomial::from(m) - &r), &z2));
        assert!(matches!(
            check_v1_reduction(&mono("x[1,1]*x[1,2]*x[1,1]*x[1,2]", &z2), &z2),
            Err(Error::Precondition(_))
        ));

        let z3 = ElementaryGrading::zn(3).unwrap();
        let m = mono("x[1,1]*x[1,2]*x[1,1]*x[1,2]*x[1,1]*x[1,2]", &z3);
        let r = check_v1_reduction(&m, &z3).unwrap();
        assert_eq!(format_polynomial(&r, z3.structure()), "x[1,2]^3*x[1,1]^3");

        let m = mono("x[1,1]^3", &z3);
        assert_eq!(
            check_v1_reduction(&m, &z3).unwrap(),
            GradedPolynomial::from(m)
        );

        let m = mono("x[0,1]*x[1,2]*x[0,1]*x[1,2]*x[0,1]*x[1,2]", &z3);
        let r = check_v1_reduction(&m, &z3).unwrap();
        assert!(is_identity(&(&GradedPolynomial::from(m) - &r), &z3));
    }
}
