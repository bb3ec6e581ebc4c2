use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::freealg::GradedMonomial;
use crate::grading::{ElementaryGrading, Grade};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RuleId {
    /// `ab -> ba` for neutral blocks `a`, `b`.
    CommuteE,
    /// `abc -> cba` when `α(a) = α(c) = α(b)^{-1}` is not neutral.
    ReverseConjugate,
    /// A block whose degree lies outside the support kills the monomial.
    KillEmptySupport,
    /// `ab -> ba` for blocks of `MU_n` degrees `(i,i)` and `(j,j)`.
    MuCommute,
    /// `abc -> cba` for blocks of `MU_n` degrees `(i,j)`, `(j,i)`, `(i,j)`, `i ≠ j`.
    MuReverse,
    /// A block of `MU_n` degree `0` kills the monomial.
    MuZero,
}

impl RuleId {
    pub const ALL: [RuleId; 6] = [
        RuleId::CommuteE,
        RuleId::ReverseConjugate,
        RuleId::KillEmptySupport,
        RuleId::MuCommute,
        RuleId::MuReverse,
        RuleId::MuZero,
    ];

    pub fn name(self) -> &'static str {
        match self {
            RuleId::CommuteE => "commute-e",
            RuleId::ReverseConjugate => "reverse-conjugate",
            RuleId::KillEmptySupport => "kill-empty-support",
            RuleId::MuCommute => "mu-commute",
            RuleId::MuReverse => "mu-reverse",
            RuleId::MuZero => "mu-zero",
        }
    }

    /// Number of 1-based positions in the rule's window.
    pub fn arity(self) -> usize {
        match self {
            RuleId::CommuteE | RuleId::MuCommute => 3,
            RuleId::ReverseConjugate | RuleId::MuReverse => 4,
            RuleId::KillEmptySupport | RuleId::MuZero => 2,
        }
    }

    pub fn is_kill(self) -> bool {
        matches!(self, RuleId::KillEmptySupport | RuleId::MuZero)
    }

    fn for_matrix_units(self) -> bool {
        matches!(self, RuleId::MuCommute | RuleId::MuReverse | RuleId::MuZero)
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for RuleId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        RuleId::ALL
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unsupported(format!("unknown rule {s}")))
    }
}

/// Applies `rule` at `window`; `Ok(None)` is the zero polynomial.
///
/// Windows are 1-based. Commutations take `[p, q, r]` with blocks
/// `x_p..x_{q-1}` and `x_q..x_r`; reversals take `[p, q, r, s]` with blocks
/// `x_p..x_{q-1}`, `x_q..x_{r-1}`, `x_r..x_s`; kill rules take `[p, q]`.
pub fn apply_rule(
    m: &GradedMonomial,
    rule: RuleId,
    window: &[usize],
    grading: &ElementaryGrading,
) -> Result<Option<GradedMonomial>> {
    let fail = |reason: String| Error::RuleNotApplicable {
        rule: rule.name().into(),
        window: window.to_vec(),
        reason,
    };
    if window.len() != rule.arity() {
        return Err(fail(format!("expected {} positions", rule.arity())));
    }
    if rule.for_matrix_units() != grading.is_matrix_unit_grading() {
        return Err(fail("rule does not belong to this grading".into()));
    }
    let increasing = window[0] >= 1
        && window.windows(2).enumerate().all(|(k, w)| {
            // The last block may be a single variable, so its end may equal its start.
            if k + 2 == window.len() {
                w[0] <= w[1]
            } else {
                w[0] < w[1]
            }
        })
        && *window.last().unwrap() <= m.len();
    if !increasing {
        return Err(fail(format!(
            "bad window for a monomial of length {}",
            m.len()
        )));
    }
    let s = grading.structure();
    let block = |a: usize, b: usize| m.window(a, b).expect("window checked");
    let deg = |a: usize, b: usize| block(a, b).degree_in(s).expect("nonempty block");
    let show = |g: &Grade| s.format_grade(g);
    let (p, last) = (window[0], *window.last().unwrap());
    let prefix = m.window(1, p - 1).unwrap_or_default();
    let suffix = m.window(last + 1, m.len()).unwrap_or_default();

    let blocks = match rule {
        RuleId::CommuteE | RuleId::MuCommute => {
            let (q, r) = (window[1], window[2]);
            let (da, db) = (deg(p, q - 1), deg(q, r));
            let ok = match rule {
                RuleId::CommuteE => grading.is_neutral(&da) && grading.is_neutral(&db),
                _ => is_diagonal_unit(&da) && is_diagonal_unit(&db),
            };
            if !ok {
                return Err(fail(format!(
                    "block degrees {} and {}",
                    show(&da),
                    show(&db)
                )));
            }
            vec![block(q, r), block(p, q - 1)]
        }
        RuleId::ReverseConjugate | RuleId::MuReverse => {
            let (q, r, t) = (window[1], window[2], window[3]);
            let (da, db, dc) = (deg(p, q - 1), deg(q, r - 1), deg(r, t));
            let ok = match rule {
                RuleId::ReverseConjugate => {
                    da == dc && !grading.is_neutral(&da) && s.inverse(&db).as_ref() == Some(&da)
                }
                _ => match (&da, &db) {
                    (Grade::Unit(i, j), Grade::Unit(k, l)) => {
                        da == dc && i != j && i == l && j == k
                    }
                    _ => false,
                },
            };
            if !ok {
                return Err(fail(format!(
                    "block degrees {}, {}, {}",
                    show(&da),
                    show(&db),
                    show(&dc)
                )));
            }
            vec![block(r, t), block(q, r - 1), block(p, q - 1)]
        }
        RuleId::KillEmptySupport | RuleId::MuZero => {
            let d = deg(p, window[1]);
            let ok = match rule {
                RuleId::KillEmptySupport => !grading.in_support(&d),
                _ => d == Grade::Zero,
            };
            if !ok {
                return Err(fail(format!("block degree {} is not killed", show(&d))));
            }
            return Ok(None);
        }
    };
    let out = blocks
        .iter()
        .fold(prefix, |acc, b| acc.concat(b))
        .concat(&suffix);
    Ok(Some(out))
}

fn is_diagonal_unit(g: &Grade) -> bool {
    matches!(g, Grade::Unit(i, j) if i == j)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freealg::parse_monomial;

    fn mono(text: &str, g: &ElementaryGrading) -> GradedMonomial {
        parse_monomial(text, g.structure()).unwrap()
    }

    #[test]
    fn reverse_whole_monomial() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]*x[1,3]", &z2);
        let out = apply_rule(&m, RuleId::ReverseConjugate, &[1, 2, 3, 3], &z2).unwrap();
        assert_eq!(out, Some(mono("x[1,3]*x[1,2]*x[1,1]", &z2)));
    }

    #[test]
    fn commute_neutral_blocks() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]*x[0,3]*x[0,4]", &z2);
        let out = apply_rule(&m, RuleId::CommuteE, &[1, 3, 4], &z2).unwrap();
        assert_eq!(out, Some(mono("x[0,3]*x[0,4]*x[1,1]*x[1,2]", &z2)));
        let err = apply_rule(&m, RuleId::CommuteE, &[1, 2, 4], &z2).unwrap_err();
        assert!(matches!(err, Error::RuleNotApplicable { .. }));
    }

    #[test]
    fn kill_outside_support() {
        let z = ElementaryGrading::integers(2).unwrap();
        let m = mono("x[2,1]", &z);
        assert_eq!(
            apply_rule(&m, RuleId::KillEmptySupport, &[1, 1], &z).unwrap(),
            None
        );
        let m = mono("x[1,1]", &z);
        assert!(apply_rule(&m, RuleId::KillEmptySupport, &[1, 1], &z).is_err());
    }

    #[test]
    fn matrix_unit_rules() {
        let mu = ElementaryGrading::matrix_units(2).unwrap();
        let m = mono("x[(1,2),1]*x[(2,1),2]*x[(1,2),3]", &mu);
        let out = apply_rule(&m, RuleId::MuReverse, &[1, 2, 3, 3], &mu).unwrap();
        assert_eq!(out, Some(mono("x[(1,2),3]*x[(2,1),2]*x[(1,2),1]", &mu)));
        let m = mono("x[(1,1),1]*x[(2,2),2]", &mu);
        assert_eq!(
            apply_rule(&m, RuleId::MuCommute, &[1, 2, 2], &mu).unwrap(),
            Some(mono("x[(2,2),2]*x[(1,1),1]", &mu))
        );
        assert_eq!(apply_rule(&m, RuleId::MuZero, &[1, 2], &mu).unwrap(), None);
        assert!(apply_rule(&m, RuleId::CommuteE, &[1, 2, 2], &mu).is_err());
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[0,1]*x[0,2]", &z2);
        assert!(apply_rule(&m, RuleId::MuCommute, &[1, 2, 2], &z2).is_err());
    }

    #[test]
    fn rule_names_round_trip() {
        for r in RuleId::ALL {
            assert_eq!(r.name().parse::<RuleId>().unwrap(), r);
            assert_eq!(
                serde_json::to_string(&r).unwrap(),
                format!("\"{}\"", r.name())
            );
        }
    }

    #[test]
    fn malformed_windows() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[0,1]*x[0,2]", &z2);
        assert!(apply_rule(&m, RuleId::CommuteE, &[1, 2], &z2).is_err());
        assert!(apply_rule(&m, RuleId::CommuteE, &[1, 2, 3], &z2).is_err());
        assert!(apply_rule(&m, RuleId::CommuteE, &[2, 2, 2], &z2).is_err());
        assert!(apply_rule(&m, RuleId::CommuteE, &[0, 1, 2], &z2).is_err());
    }
}
