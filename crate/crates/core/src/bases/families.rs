use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use super::central::h_n_symmetrization;
use super::enumerate::type1_monomial_identities;
use crate::error::{Error, Result};
use crate::freealg::{
    format_polynomial, lambda_bound, GradedMonomial, GradedPolynomial, GradedVariable,
};
use crate::genericmodel::{central_witness, identity_witness, Witness};
use crate::grading::{
    enumerate_complete_sequences, is_prime, ElementaryGrading, Grade, StructureKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BasisKind {
    Identities,
    Central,
}

impl FromStr for BasisKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "identities" => Ok(BasisKind::Identities),
            "central" => Ok(BasisKind::Central),
            _ => Err(Error::Unsupported(format!("basis kind {s}"))),
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BasisKind::Identities => "identities",
            BasisKind::Central => "central",
        })
    }
}

/// What an emitted instance must satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    Identity,
    IdentityAndCentral,
    CentralNotIdentity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub poly: GradedPolynomial,
    pub expect: Expectation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Family {
    /// `"(1)"` through `"(15)"`.
    pub id: String,
    pub instances: Vec<Instance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basis {
    pub grading: String,
    pub kind: BasisKind,
    pub families: Vec<Family>,
    /// Family (4) was cut off below its length bound.
    pub truncated: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisOptions {
    /// Longest monomial enumerated for family (4).
    pub cutoff: usize,
}

impl Default for BasisOptions {
    fn default() -> Self {
        BasisOptions { cutoff: 6 }
    }
}

fn x(g: &Grade, i: u64) -> GradedVariable {
    GradedVariable::new(g.clone(), i)
}

fn word(vars: &[&GradedVariable]) -> GradedMonomial {
    vars.iter().map(|v| (*v).clone()).collect()
}

/// `x_1 x_2 − x_2 x_1`.
fn commutator(a: &GradedVariable, b: &GradedVariable) -> GradedPolynomial {
    &GradedPolynomial::from(word(&[a, b])) - &GradedPolynomial::from(word(&[b, a]))
}

/// `x_1 x_2 x_3 − x_3 x_2 x_1`.
fn reversal(a: &GradedVariable, b: &GradedVariable, c: &GradedVariable) -> GradedPolynomial {
    &GradedPolynomial::from(word(&[a, b, c])) - &GradedPolynomial::from(word(&[c, b, a]))
}

/// `f` itself, then `z_1 f z_2` for every pair of flank grades.
fn flanked(f: &GradedPolynomial, grades: &[Grade], first_free: u64) -> Vec<GradedPolynomial> {
    let mut out = vec![f.clone()];
    for a in grades {
        for b in grades {
            let left = GradedMonomial::variable(x(a, first_free));
            let right = GradedMonomial::variable(x(b, first_free + 1));
            out.push(f.flank(&left, &right));
        }
    }
    out
}

fn family(id: &str, expect: Expectation, polys: Vec<GradedPolynomial>) -> Family {
    Family {
        id: id.into(),
        instances: polys
            .into_iter()
            .map(|poly| Instance { poly, expect })
            .collect(),
    }
}

fn ints(range: impl IntoIterator<Item = i64>) -> Vec<Grade> {
    range.into_iter().map(Grade::int).collect()
}

/// The generator families for `grading` and `kind`, instantiated.
pub fn build_basis(
    grading: &ElementaryGrading,
    kind: BasisKind,
    options: &BasisOptions,
) -> Result<Basis> {
    let (families, truncated) = match kind {
        BasisKind::Identities => identity_families(grading, options)?,
        BasisKind::Central => (central_families(grading)?, false),
    };
    Ok(Basis {
        grading: grading.descriptor().into(),
        kind,
        families,
        truncated,
    })
}

fn identity_families(
    grading: &ElementaryGrading,
    options: &BasisOptions,
) -> Result<(Vec<Family>, bool)> {
    use Expectation::Identity;
    let n = grading.n();
    let s = grading.structure();
    if grading.is_matrix_unit_grading() {
        let mut f5 = Vec::new();
        let mut f6 = Vec::new();
        for i in 1..=n {
            for j in 1..=n {
                f5.push(commutator(
                    &x(&Grade::Unit(i, i), 1),
                    &x(&Grade::Unit(j, j), 2),
                ));
                if i != j {
                    f6.push(reversal(
                        &x(&Grade::Unit(i, j), 1),
                        &x(&Grade::Unit(j, i), 2),
                        &x(&Grade::Unit(i, j), 3),
                    ));
                }
            }
        }
        let f7 = vec![GradedPolynomial::variable(x(&Grade::Zero, 1))];
        return Ok((
            vec![
                family("(5)", Identity, f5),
                family("(6)", Identity, f6),
                family("(7)", Identity, f7),
            ],
            false,
        ));
    }

    let e = s.identity().expect("groups have an identity");
    let (nonneutral, outside): (Vec<Grade>, Vec<Grade>) = match s.kind() {
        StructureKind::Integers => {
            let m = n as i64;
            (
                grading
                    .support()
                    .iter()
                    .filter(|g| **g != e)
                    .cloned()
                    .collect(),
                ints([-m - 1, -m, m, m + 1]),
            )
        }
        _ => {
            let all = s.carrier().expect("finite group");
            (
                all.iter().filter(|g| **g != e).cloned().collect(),
                all.iter()
                    .filter(|g| !grading.in_support(g))
                    .cloned()
                    .collect(),
            )
        }
    };
    let mut families = vec![family(
        "(1)",
        Identity,
        vec![commutator(&x(&e, 1), &x(&e, 2))],
    )];
    let f2 = nonneutral
        .iter()
        .map(|g| {
            let inv = s.inverse(g).expect("groups have inverses");
            reversal(&x(g, 1), &x(&inv, 2), &x(g, 3))
        })
        .collect();
    families.push(family("(2)", Identity, f2));
    if !outside.is_empty() {
        let f3 = outside
            .iter()
            .map(|g| GradedPolynomial::variable(x(g, 1)))
            .collect();
        families.push(family("(3)", Identity, f3));
    }
    let mut truncated = false;
    if grading.zn_canonical_modulus().is_none() && !grading.is_integer_canonical() {
        let lambda = lambda_bound(grading.support().len())?;
        let limit = if lambda > BigUint::from(options.cutoff) {
            truncated = true;
            options.cutoff
        } else {
            usize::try_from(&lambda).expect("λ fits below the cutoff")
        };
        let f4 = type1_monomial_identities(grading, limit)?
            .into_iter()
            .map(GradedPolynomial::from)
            .collect();
        families.push(family("(4)", Identity, f4));
    }
    Ok((families, truncated))
}

fn central_families(grading: &ElementaryGrading) -> Result<Vec<Family>> {
    use Expectation::{CentralNotIdentity, IdentityAndCentral};
    if let Some(p) = grading.zn_canonical_modulus().filter(|&p| is_prime(p)) {
        let grades: Vec<Grade> = (0..p).map(Grade::Elem).collect();
        let zero = Grade::Elem(0);
        let f8 = flanked(&commutator(&x(&zero, 1), &x(&zero, 2)), &grades, 3);
        let f9 = (1..p)
            .flat_map(|g| {
                let r = reversal(
                    &x(&Grade::Elem(g), 1),
                    &x(&Grade::Elem(p - g), 2),
                    &x(&Grade::Elem(g), 3),
                );
                flanked(&r, &grades, 4)
            })
            .collect();
        let f10 = if p == 2 {
            let z1 = x(&Grade::Elem(1), 1);
            let z2 = x(&Grade::Elem(1), 2);
            vec![
                GradedPolynomial::from(word(&[&z1, &z1])),
                GradedPolynomial::from(word(&[&z1, &z1, &z2, &z2])),
            ]
        } else {
            distinct_sequences(&(1..p).collect::<Vec<_>>(), p - 1)
                .into_iter()
                .map(|seq| {
                    let m: GradedMonomial = seq
                        .iter()
                        .enumerate()
                        .flat_map(|(k, &g)| {
                            std::iter::repeat_n(x(&Grade::Elem(g), k as u64 + 1), p)
                        })
                        .collect();
                    GradedPolynomial::from(m)
                })
                .collect()
        };
        let f11 = enumerate_complete_sequences(p)?
            .iter()
            .map(|c| {
                let vars: Vec<GradedVariable> = c
                    .as_slice()
                    .iter()
                    .enumerate()
                    .map(|(k, &g)| x(&Grade::Elem(g), k as u64 + 1))
                    .collect();
                h_n_symmetrization(grading, &vars)
            })
            .collect::<Result<_>>()?;
        return Ok(vec![
            family("(8)", IdentityAndCentral, f8),
            family("(9)", IdentityAndCentral, f9),
            family("(10)", CentralNotIdentity, f10),
            family("(11)", CentralNotIdentity, f11),
        ]);
    }
    if grading.is_integer_canonical() {
        let n = grading.n() as i64;
        let flanks = ints(-n..=n);
        let zero = Grade::int(0);
        let f12 = flanked(&commutator(&x(&zero, 1), &x(&zero, 2)), &flanks, 3);
        let f13 = (-n..=n)
            .filter(|&g| g != 0)
            .flat_map(|g| {
                let r = reversal(
                    &x(&Grade::int(g), 1),
                    &x(&Grade::int(-g), 2),
                    &x(&Grade::int(g), 3),
                );
                flanked(&r, &flanks, 4)
            })
            .collect();
        let f14 = [-n - 1, -n, n, n + 1]
            .into_iter()
            .flat_map(|g| {
                flanked(
                    &GradedPolynomial::variable(x(&Grade::int(g), 1)),
                    &flanks,
                    2,
                )
            })
            .collect();
        let mut f15 = Vec::new();
        for c in enumerate_complete_sequences(grading.n())? {
            for lift in integer_lifts(c.as_slice(), n) {
                let vars: Vec<GradedVariable> = lift
                    .iter()
                    .enumerate()
                    .map(|(k, &g)| x(&Grade::int(g), k as u64 + 1))
                    .collect();
                f15.push(h_n_symmetrization(grading, &vars)?);
            }
        }
        return Ok(vec![
            family("(12)", IdentityAndCentral, f12),
            family("(13)", IdentityAndCentral, f13),
            family("(14)", IdentityAndCentral, f14),
            family("(15)", CentralNotIdentity, f15),
        ]);
    }
    Err(Error::Unsupported(format!(
        "central basis for grading {}; only Z_p (p prime) and Z canonical gradings are covered",
        grading.descriptor()
    )))
}

/// Ordered sequences of distinct elements of `items`, lengths `1..=max_len`.
fn distinct_sequences(items: &[usize], max_len: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..max_len {
        frontier = frontier
            .iter()
            .flat_map(|s| {
                items
                    .iter()
                    .filter(|g| !s.contains(g))
                    .map(move |&g| [s.as_slice(), &[g]].concat())
            })
            .collect();
        out.extend(frontier.iter().cloned());
    }
    out
}

/// Integer lifts `α_i ≡ γ_i (mod n)` with `|α_i| < n` whose generic
/// symmetrization is not a graded identity: the lift sums to zero and its
/// partial sums stay within a window of width `n − 1`.
fn integer_lifts(seq: &[usize], n: i64) -> Vec<Vec<i64>> {
    let mut lifts: Vec<Vec<i64>> = vec![Vec::new()];
    for &g in seq {
        let g = g as i64;
        let options: Vec<i64> = if g == 0 { vec![0] } else { vec![g - n, g] };
        lifts = lifts
            .iter()
            .flat_map(|l| options.iter().map(move |&a| [l.as_slice(), &[a]].concat()))
            .collect();
    }
    lifts.retain(|l| {
        let mut partial = 0;
        let (mut lo, mut hi) = (0, 0);
        for a in l {
            partial += a;
            lo = lo.min(partial);
            hi = hi.max(partial);
        }
        partial == 0 && hi - lo < n
    });
    lifts
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub instance: String,
    pub expected: Expectation,
    pub reason: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub id: String,
    pub instances: usize,
    pub verified: usize,
    pub failures: Vec<Failure>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BasisReport {
    pub grading: String,
    pub kind: BasisKind,
    pub families: Vec<FamilyReport>,
    pub truncated: bool,
}

impl BasisReport {
    pub fn all_verified(&self) -> bool {
        self.families.iter().all(|f| f.failures.is_empty())
    }
}

/// Checks one instance against its expectation. `Ok(None)` means it holds.
pub fn verify_instance(
    instance: &Instance,
    grading: &ElementaryGrading,
) -> Result<Option<Failure>> {
    let fail = |reason: &str, witness: Option<Witness>| Failure {
        instance: format_polynomial(&instance.poly, grading.structure()),
        expected: instance.expect,
        reason: reason.into(),
        witness,
    };
    let id = identity_witness(&instance.poly, grading);
    let wants_identity = instance.expect != Expectation::CentralNotIdentity;
    if wants_identity && !id.is_verified() {
        return Ok(Some(fail("not a graded identity", Some(id))));
    }
    if !wants_identity && id.is_verified() {
        return Ok(Some(fail("is a graded identity", None)));
    }
    if instance.expect != Expectation::Identity {
        let c = central_witness(&instance.poly, grading)?;
        if !c.is_verified() {
            return Ok(Some(fail("not central", Some(c))));
        }
    }
    Ok(None)
}

/// Verifies every instance, in parallel, and reports per family.
pub fn verify_basis(basis: &Basis, grading: &ElementaryGrading) -> Result<BasisReport> {
    let families = basis
        .families
        .iter()
        .map(|fam| {
            let results: Vec<Option<Failure>> = fam
                .instances
                .par_iter()
                .map(|inst| verify_instance(inst, grading))
                .collect::<Result<_>>()?;
            let failures: Vec<Failure> = results.into_iter().flatten().collect();
            Ok(FamilyReport {
                id: fam.id.clone(),
                instances: fam.instances.len(),
                verified: fam.instances.len() - failures.len(),
                failures,
            })
        })
        .collect::<Result<_>>()?;
    Ok(BasisReport {
        grading: basis.grading.clone(),
        kind: basis.kind,
        families,
        truncated: basis.truncated,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(b: &Basis) -> Vec<&str> {
        b.families.iter().map(|f| f.id.as_str()).collect()
    }

    fn check(grading: &ElementaryGrading, kind: BasisKind) -> BasisReport {
        let basis = build_basis(grading, kind, &BasisOptions::default()).unwrap();
        let report = verify_basis(&basis, grading).unwrap();
        assert!(report.all_verified(), "{report:?}");
        report
    }

    #[test]
    fn cyclic_identities() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let b = build_basis(&z2, BasisKind::Identities, &BasisOptions::default()).unwrap();
        assert_eq!(ids(&b), ["(1)", "(2)"]);
        check(&z2, BasisKind::Identities);
    }

    #[test]
    fn integer_identities() {
        let z3 = ElementaryGrading::integers(3).unwrap();
        let b = build_basis(&z3, BasisKind::Identities, &BasisOptions::default()).unwrap();
        assert_eq!(ids(&b), ["(1)", "(2)", "(3)"]);
        check(&z3, BasisKind::Identities);
    }

    #[test]
    fn matrix_unit_identities() {
        let mu = ElementaryGrading::matrix_units(3).unwrap();
        let b = build_basis(&mu, BasisKind::Identities, &BasisOptions::default()).unwrap();
        assert_eq!(ids(&b), ["(5)", "(6)", "(7)"]);
        check(&mu, BasisKind::Identities);
    }

    #[test]
    fn central_zp() {
        let z3 = ElementaryGrading::zp(3).unwrap();
        let r = check(&z3, BasisKind::Central);
        let got: Vec<&str> = r.families.iter().map(|f| f.id.as_str()).collect();
        assert_eq!(got, ["(8)", "(9)", "(10)", "(11)"]);
        assert_eq!(r.families[3].instances, 2);
        assert_eq!(
            serde_json::to_value(&r).unwrap()["families"][3],
            serde_json::json!({"id":"(11)","instances":2,"verified":2,"failures":[]})
        );
    }

    #[test]
    fn central_z() {
        check(&ElementaryGrading::integers(2).unwrap(), BasisKind::Central);
    }

    #[test]
    fn unsupported_central() {
        let z4 = ElementaryGrading::zn(4).unwrap();
        assert!(matches!(
            build_basis(&z4, BasisKind::Central, &BasisOptions::default()),
            Err(Error::Unsupported(_))
        ));
        let mu = ElementaryGrading::matrix_units(2).unwrap();
        assert!(build_basis(&mu, BasisKind::Central, &BasisOptions::default()).is_err());
    }

    #[test]
    fn lifts() {
        assert_eq!(integer_lifts(&[1, 1], 2), vec![vec![-1, 1], vec![1, -1]]);
        let l = integer_lifts(&[1, 1, 1], 3);
        assert!(l.contains(&vec![1, 1, -2]));
        assert!(!l.contains(&vec![1, 1, 1]));
    }

    #[test]
    fn failures_are_reported() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let bad = Instance {
            poly: GradedPolynomial::variable(x(&Grade::Elem(1), 1)),
            expect: Expectation::Identity,
        };
        let f = verify_instance(&bad, &z2).unwrap().unwrap();
        assert_eq!(f.reason, "not a graded identity");
    }
}
