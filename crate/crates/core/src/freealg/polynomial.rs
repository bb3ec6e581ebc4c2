use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::monomial::{GradedMonomial, GradedVariable};
use crate::error::{Error, Result};
use crate::grading::{ElementaryGrading, Grade};

/// An integer combination of graded monomials in the free algebra.
///
/// Zero coefficients are never stored, so the zero polynomial is the empty map.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct GradedPolynomial {
    terms: BTreeMap<GradedMonomial, BigInt>,
}

impl GradedPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, GradedMonomial::unit())
    }

    pub fn monomial(m: GradedMonomial) -> Self {
        Self::term(1, m)
    }

    pub fn variable(v: GradedVariable) -> Self {
        Self::monomial(GradedMonomial::variable(v))
    }

    pub fn term(c: impl Into<BigInt>, m: GradedMonomial) -> Self {
        let mut p = Self::zero();
        p.add_term(c.into(), m);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (BigInt, GradedMonomial)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn add_term(&mut self, c: BigInt, m: GradedMonomial) {
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

    /// Terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&GradedMonomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &GradedMonomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&GradedMonomial::unit())
    }

    /// All variables occurring, ascending.
    pub fn variables(&self) -> Vec<GradedVariable> {
        let mut vs: Vec<GradedVariable> = self
            .terms
            .keys()
            .flat_map(|m| m.vars().iter().cloned())
            .collect();
        vs.sort();
        vs.dedup();
        vs
    }

    /// Every monomial contains each variable of the polynomial exactly once.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms
            .keys()
            .all(|m| m.is_multilinear() && m.len() == vars.len())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        GradedPolynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Left and right multiplication by monomials: `left · self · right`.
    pub fn flank(&self, left: &GradedMonomial, right: &GradedMonomial) -> Self {
        GradedPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (left.concat(m).concat(right), c.clone()))
                .collect(),
        }
    }

    /// Every monomial has degree `g`.
    pub fn is_homogeneous_of(&self, g: &Grade, grading: &ElementaryGrading) -> bool {
        self.terms
            .keys()
            .all(|m| m.degree_in(grading.structure()).as_ref() == Some(g))
    }

    /// Partition of the terms by variable multiset, in canonical order of the multisets.
    pub fn multihomogeneous_components(&self) -> Vec<GradedPolynomial> {
        let mut groups: BTreeMap<Vec<GradedVariable>, GradedPolynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups
                .entry(m.variable_multiset())
                .or_default()
                .terms
                .insert(m.clone(), c.clone());
        }
        groups.into_values().collect()
    }

    /// Graded-endomorphism image: each mapped variable is replaced by its image.
    pub fn substitute(
        &self,
        map: &BTreeMap<GradedVariable, GradedPolynomial>,
        grading: &ElementaryGrading,
    ) -> Result<GradedPolynomial> {
        for (v, image) in map {
            if !image.is_homogeneous_of(&v.grade, grading) {
                return Err(Error::GradeMismatch {
                    variable: format!(
                        "x[{},{}]",
                        grading.structure().format_grade(&v.grade),
                        v.index
                    ),
                });
            }
        }
        let mut out = GradedPolynomial::zero();
        for (m, c) in &self.terms {
            let mut acc = GradedPolynomial::constant(c.clone());
            for v in m.vars() {
                acc = match map.get(v) {
                    Some(image) => &acc * image,
                    None => acc.flank(
                        &GradedMonomial::unit(),
                        &GradedMonomial::variable(v.clone()),
                    ),
                };
                if acc.is_zero() {
                    break;
                }
            }
            out = &out + &acc;
        }
        Ok(out)
    }
}

pub fn multihomogeneous_components(f: &GradedPolynomial) -> Vec<GradedPolynomial> {
    f.multihomogeneous_components()
}

pub fn apply_substitution(
    f: &GradedPolynomial,
    map: &BTreeMap<GradedVariable, GradedPolynomial>,
    grading: &ElementaryGrading,
) -> Result<GradedPolynomial> {
    f.substitute(map, grading)
}

impl From<GradedMonomial> for GradedPolynomial {
    fn from(m: GradedMonomial) -> Self {
        GradedPolynomial::monomial(m)
    }
}

impl Add for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }
}

impl Sub for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(-c, m.clone());
        }
        out
    }
}

impl Mul for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: &GradedPolynomial) -> GradedPolynomial {
        let mut out = GradedPolynomial::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                out.add_term(ca * cb, a.concat(b));
            }
        }
        out
    }
}

impl Neg for &GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        self.scale(&-BigInt::one())
    }
}

impl Add for GradedPolynomial {
    type Output = GradedPolynomial;
    fn add(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self + &rhs
    }
}

impl Sub for GradedPolynomial {
    type Output = GradedPolynomial;
    fn sub(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self - &rhs
    }
}

impl Mul for GradedPolynomial {
    type Output = GradedPolynomial;
    fn mul(self, rhs: GradedPolynomial) -> GradedPolynomial {
        &self * &rhs
    }
}

impl Neg for GradedPolynomial {
    type Output = GradedPolynomial;
    fn neg(self) -> GradedPolynomial {
        -&self
    }
}
