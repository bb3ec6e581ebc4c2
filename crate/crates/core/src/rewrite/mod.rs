//! Rewriting rules for graded monomials and constructive congruence proofs.

mod congruence;
mod rules;

pub use congruence::{congruent_mod_j1, follows_from_kill, replay, CongruenceProof, Step};
pub use rules::{apply_rule, RuleId};
