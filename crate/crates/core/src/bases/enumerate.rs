use crate::error::{Error, Result};
use crate::freealg::{classify, GradedMonomial};
use crate::genericmodel::is_identity;
use crate::grading::{ElementaryGrading, Grade};

/// Largest number of degree tuples an enumeration may visit.
pub const MAX_TUPLES: usize = 1 << 20;

/// All tuples over the support of lengths `1..=max_degree`, shortest first,
/// each length in lexicographic order.
pub(crate) fn support_tuples(
    grading: &ElementaryGrading,
    max_degree: usize,
) -> Result<Vec<Vec<Grade>>> {
    let supp: Vec<Grade> = grading.support().iter().cloned().collect();
    let mut total: usize = 0;
    let mut layer: usize = 1;
    for _ in 0..max_degree {
        layer = layer.saturating_mul(supp.len());
        total = total.saturating_add(layer);
    }
    if total > MAX_TUPLES {
        return Err(Error::BoundExceeded(format!(
            "{total} degree tuples up to length {max_degree} (limit {MAX_TUPLES})"
        )));
    }
    let mut out = Vec::with_capacity(total);
    let mut frontier: Vec<Vec<Grade>> = vec![Vec::new()];
    for _ in 0..max_degree {
        frontier = frontier
            .iter()
            .flat_map(|t| {
                supp.iter().map(move |g| {
                    let mut next = t.clone();
                    next.push(g.clone());
                    next
                })
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    Ok(out)
}

/// Multilinear monomials `x[h_1,1] ⋯ x[h_d,d]`, `d ≤ max_degree`, over the
/// support, that are graded identities. One representative per degree tuple.
pub fn enumerate_monomial_identities(
    grading: &ElementaryGrading,
    max_degree: usize,
) -> Result<Vec<GradedMonomial>> {
    Ok(support_tuples(grading, max_degree)?
        .iter()
        .map(|t| GradedMonomial::multilinear_from_tuple(t))
        .filter(|m| is_identity(&m.clone().into(), grading))
        .collect())
}

/// Type 1 multilinear monomial identities up to `max_degree`.
pub(crate) fn type1_monomial_identities(
    grading: &ElementaryGrading,
    max_degree: usize,
) -> Result<Vec<GradedMonomial>> {
    Ok(enumerate_monomial_identities(grading, max_degree)?
        .into_iter()
        .filter(|m| classify(m, grading).is_type1)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_gradings_have_no_monomial_identities() {
        for n in [2, 3] {
            let g = ElementaryGrading::zn(n).unwrap();
            assert!(enumerate_monomial_identities(&g, 5).unwrap().is_empty());
        }
    }

    #[test]
    fn integer_grading_degree_two() {
        let z = ElementaryGrading::integers(2).unwrap();
        let ids = enumerate_monomial_identities(&z, 2).unwrap();
        let tuples: Vec<Vec<Grade>> = ids.iter().map(|m| m.degree_tuple()).collect();
        assert_eq!(
            tuples,
            vec![
                vec![Grade::int(-1), Grade::int(-1)],
                vec![Grade::int(1), Grade::int(1)],
            ]
        );
    }

    #[test]
    fn matrix_units_degree_two() {
        let mu = ElementaryGrading::matrix_units(2).unwrap();
        let ids = enumerate_monomial_identities(&mu, 2).unwrap();
        assert!(ids.contains(&GradedMonomial::multilinear_from_tuple(&[
            Grade::Unit(1, 2),
            Grade::Unit(1, 2)
        ])));
        assert_eq!(ids.len(), 8);
        for m in &ids {
            assert_eq!(m.degree_in(mu.structure()), Some(Grade::Zero));
        }
    }

    #[test]
    fn bound() {
        let z = ElementaryGrading::integers(4).unwrap();
        assert!(matches!(
            enumerate_monomial_identities(&z, 12),
            Err(Error::BoundExceeded(_))
        ));
    }
}
