use std::collections::{HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use super::rules::{apply_rule, RuleId};
use crate::error::{Error, Result};
use crate::freealg::{classify, format_monomial, parse_monomial, GradedMonomial, GradedVariable};
use crate::genericmodel::{entry_match, is_identity};
use crate::grading::{ElementaryGrading, GradingStructure};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Step {
    pub rule: RuleId,
    pub window: Vec<usize>,
}

/// A replayable chain of rule applications from `start` to `end`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceProof {
    pub start: GradedMonomial,
    pub end: GradedMonomial,
    pub steps: Vec<Step>,
}

#[derive(Serialize, Deserialize)]
struct ProofText {
    start: String,
    end: String,
    steps: Vec<Step>,
}

impl CongruenceProof {
    pub fn to_json(&self, structure: &GradingStructure) -> serde_json::Value {
        serde_json::to_value(ProofText {
            start: format_monomial(&self.start, structure),
            end: format_monomial(&self.end, structure),
            steps: self.steps.clone(),
        })
        .expect("proof serializes")
    }

    pub fn from_json(text: &str, structure: &GradingStructure) -> Result<Self> {
        let raw: ProofText =
            serde_json::from_str(text).map_err(|e| Error::MalformedProof(e.to_string()))?;
        Ok(CongruenceProof {
            start: parse_monomial(&raw.start, structure)?,
            end: parse_monomial(&raw.end, structure)?,
            steps: raw.steps,
        })
    }
}

/// Replays every step from `start`, checking each rule's precondition, and
/// returns the final monomial. Fails if it differs from `end`.
pub fn replay(proof: &CongruenceProof, grading: &ElementaryGrading) -> Result<GradedMonomial> {
    let mut cur = proof.start.clone();
    for (k, step) in proof.steps.iter().enumerate() {
        if step.rule.is_kill() {
            return Err(Error::MalformedProof(format!(
                "step {} uses {}, which does not preserve the monomial",
                k + 1,
                step.rule
            )));
        }
        cur = apply_rule(&cur, step.rule, &step.window, grading)?
            .expect("non-kill rules return a monomial");
    }
    if cur != proof.end {
        return Err(Error::MalformedProof(format!(
            "replay ends at {}, not at {}",
            format_monomial(&cur, grading.structure()),
            format_monomial(&proof.end, grading.structure())
        )));
    }
    Ok(cur)
}

type Token = (GradedVariable, usize);

fn tokens(m: &GradedMonomial, grading: &ElementaryGrading, row: usize) -> Vec<Token> {
    let data = grading.indices_for_tuple(&m.degree_tuple());
    let path = data.path(row).expect("row admits a path");
    m.vars().iter().cloned().zip(path.iter().copied()).collect()
}

/// Builds a proof that `m ≡ n` modulo the ideal generated by the commuting
/// and reversal rules, or returns `None` when the generic images of `m` and
/// `n` share no nonzero entry.
pub fn congruent_mod_j1(
    m: &GradedMonomial,
    n: &GradedMonomial,
    grading: &ElementaryGrading,
) -> Result<Option<CongruenceProof>> {
    if m.variable_multiset() != n.variable_multiset() {
        return Err(Error::Precondition(
            "monomials must have the same variables with the same multiplicities".into(),
        ));
    }
    let Some((row, _)) = entry_match(m, n, grading) else {
        return Ok(None);
    };
    let (commute, reverse) = if grading.is_matrix_unit_grading() {
        (RuleId::MuCommute, RuleId::MuReverse)
    } else {
        (RuleId::CommuteE, RuleId::ReverseConjugate)
    };
    let mut cur = tokens(m, grading, row);
    let target = tokens(n, grading, row);
    let mut monomial = m.clone();
    let mut steps = Vec::new();

    for off in 0..cur.len() {
        if cur[off] == target[off] {
            continue;
        }
        // pos[t] is the 1-based position, within the unsettled suffix of
        // `cur`, of the token that the target has at suffix position t + 1.
        let mut slots: HashMap<&Token, VecDeque<usize>> = HashMap::new();
        for (p, tok) in cur[off..].iter().enumerate() {
            slots.entry(tok).or_default().push_back(p + 1);
        }
        let pos: Vec<usize> = target[off..]
            .iter()
            .map(|tok| {
                slots
                    .get_mut(tok)
                    .and_then(VecDeque::pop_front)
                    .expect("matching entries pair up the tokens")
            })
            .collect();
        let lead = pos[0];
        let t = (1..pos.len())
            .find(|&t| pos[t] < lead && lead <= pos[t - 1])
            .expect("some target token precedes the leading one");
        let (k1, k2, k3) = (pos[t], lead, pos[t - 1]);
        let g = |k: usize| off + k;

        let mut local: Vec<Step> = Vec::new();
        if k1 == 1 {
            local.push(Step {
                rule: commute,
                window: vec![g(k1), g(k2), g(k3)],
            });
        } else if cur[off].1 != cur[off + k1 - 1].1 {
            local.push(Step {
                rule: reverse,
                window: vec![g(1), g(k1), g(k2), g(k3)],
            });
        } else {
            local.push(Step {
                rule: commute,
                window: vec![g(1), g(k1), g(k3)],
            });
            local.push(Step {
                rule: commute,
                window: vec![g(1), g(k2 - k1 + 1), g(k3 - k1 + 1)],
            });
        }
        // Blocks A = [1, k1-1], B = [k1, k2-1], C = [k2, k3] become C B A.
        let seg = |a: usize, b: usize| cur[off + a - 1..off + b].to_vec();
        let rearranged: Vec<Token> = [seg(k2, k3), seg(k1, k2 - 1), seg(1, k1 - 1)].concat();
        cur.splice(off..off + k3, rearranged);
        for step in local {
            monomial = apply_rule(&monomial, step.rule, &step.window, grading)?
                .expect("non-kill rules return a monomial");
            steps.push(step);
        }
        debug_assert!(monomial.vars().iter().eq(cur.iter().map(|(v, _)| v)));
        debug_assert_eq!(cur[off], target[off]);
    }
    debug_assert_eq!(&monomial, n);
    Ok(Some(CongruenceProof {
        start: m.clone(),
        end: monomial,
        steps,
    }))
}

/// For a monomial identity, reports whether it follows from the kill rule,
/// i.e. whether some subword has degree outside the support.
pub fn follows_from_kill(m: &GradedMonomial, grading: &ElementaryGrading) -> Result<bool> {
    if !is_identity(&m.clone().into(), grading) {
        return Err(Error::Precondition(
            "monomial is not a graded identity".into(),
        ));
    }
    Ok(!classify(m, grading).is_type1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genericmodel::monomial_product;

    fn mono(text: &str, g: &ElementaryGrading) -> GradedMonomial {
        parse_monomial(text, g.structure()).unwrap()
    }

    #[test]
    fn equal_monomials_need_no_steps() {
        let z3 = ElementaryGrading::zn(3).unwrap();
        let m = mono("x[1,1]*x[2,1]*x[1,2]", &z3);
        let p = congruent_mod_j1(&m, &m, &z3).unwrap().unwrap();
        assert!(p.steps.is_empty());
        assert_eq!(replay(&p, &z3).unwrap(), m);
    }

    #[test]
    fn single_reversal() {
        let z3 = ElementaryGrading::zn(3).unwrap();
        let m = mono("x[1,1]*x[2,2]*x[1,3]", &z3);
        let n = mono("x[1,3]*x[2,2]*x[1,1]", &z3);
        let p = congruent_mod_j1(&m, &n, &z3).unwrap().unwrap();
        assert_eq!(
            p.steps,
            vec![Step {
                rule: RuleId::ReverseConjugate,
                window: vec![1, 2, 3, 3]
            }]
        );
        assert_eq!(replay(&p, &z3).unwrap(), n);
        let json = p.to_json(z3.structure());
        assert_eq!(
            json.to_string(),
            r#"{"end":"x[1,3]*x[2,2]*x[1,1]","start":"x[1,1]*x[2,2]*x[1,3]","steps":[{"rule":"reverse-conjugate","window":[1,2,3,3]}]}"#
        );
        assert_eq!(
            CongruenceProof::from_json(&json.to_string(), z3.structure()).unwrap(),
            p
        );
    }

    #[test]
    fn no_common_entry() {
        let z = ElementaryGrading::integers(2).unwrap();
        let m = mono("x[1,1]*x[1,2]", &z);
        let n = mono("x[1,2]*x[1,1]", &z);
        assert_eq!(congruent_mod_j1(&m, &n, &z).unwrap(), None);

        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]", &z2);
        let n = mono("x[1,2]*x[1,1]", &z2);
        assert_eq!(congruent_mod_j1(&m, &n, &z2).unwrap(), None);
    }

    #[test]
    fn different_variables_are_rejected() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[1,1]*x[1,2]", &z2);
        let n = mono("x[1,1]*x[1,3]", &z2);
        assert!(matches!(
            congruent_mod_j1(&m, &n, &z2),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn two_step_proof_matches_sequential_application() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[0,1]*x[0,2]*x[1,3]*x[1,4]*x[1,5]", &z2);
        let after_commute = apply_rule(&m, RuleId::CommuteE, &[1, 2, 2], &z2)
            .unwrap()
            .unwrap();
        let end = apply_rule(&after_commute, RuleId::ReverseConjugate, &[3, 4, 5, 5], &z2)
            .unwrap()
            .unwrap();
        let proof = CongruenceProof {
            start: m.clone(),
            end: end.clone(),
            steps: vec![
                Step {
                    rule: RuleId::CommuteE,
                    window: vec![1, 2, 2],
                },
                Step {
                    rule: RuleId::ReverseConjugate,
                    window: vec![3, 4, 5, 5],
                },
            ],
        };
        assert_eq!(replay(&proof, &z2).unwrap(), end);
        assert_eq!(monomial_product(&z2, &m), monomial_product(&z2, &end));
    }

    #[test]
    fn corrupt_proofs_fail() {
        let z2 = ElementaryGrading::zn(2).unwrap();
        let m = mono("x[0,1]*x[1,2]", &z2);
        let proof = CongruenceProof {
            start: m.clone(),
            end: m.clone(),
            steps: vec![Step {
                rule: RuleId::CommuteE,
                window: vec![1, 2, 2],
            }],
        };
        assert!(matches!(
            replay(&proof, &z2),
            Err(Error::RuleNotApplicable { .. })
        ));
        let proof = CongruenceProof {
            start: m.clone(),
            end: mono("x[1,2]*x[0,1]", &z2),
            steps: vec![],
        };
        assert!(matches!(replay(&proof, &z2), Err(Error::MalformedProof(_))));
        let proof = CongruenceProof {
            start: m.clone(),
            end: m,
            steps: vec![Step {
                rule: RuleId::KillEmptySupport,
                window: vec![1, 1],
            }],
        };
        assert!(matches!(replay(&proof, &z2), Err(Error::MalformedProof(_))));
    }

    #[test]
    fn matrix_unit_congruence() {
        let mu = ElementaryGrading::matrix_units(2).unwrap();
        let m = mono("x[(1,1),1]*x[(1,2),2]*x[(2,1),3]*x[(1,2),4]", &mu);
        let n = mono("x[(1,2),4]*x[(2,1),3]*x[(1,1),1]*x[(1,2),2]", &mu);
        let p = congruent_mod_j1(&m, &n, &mu).unwrap().unwrap();
        assert_eq!(replay(&p, &mu).unwrap(), n);
        assert!(p
            .steps
            .iter()
            .all(|s| matches!(s.rule, RuleId::MuCommute | RuleId::MuReverse)));
    }

    #[test]
    fn kill_consequences() {
        let z = ElementaryGrading::integers(2).unwrap();
        assert!(follows_from_kill(&mono("x[1,1]*x[1,2]", &z), &z).unwrap());
        let z3 = ElementaryGrading::integers(3).unwrap();
        assert!(follows_from_kill(&mono("x[3,1]*x[-2,1]", &z3), &z3).unwrap());
        let z2 = ElementaryGrading::zn(2).unwrap();
        assert!(follows_from_kill(&mono("x[1,1]", &z2), &z2).is_err());
    }
}
