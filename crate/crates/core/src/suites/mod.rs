//! Verification batteries, runnable from the CLI and from the acceptance tests.

mod batteries;
pub mod random;

use serde::Serialize;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 20_240_917;

/// Suite names, in the order `all` runs them.
pub const SUITES: [&str; 14] = [
    "lemma-luis1",
    "vasilovsky-zn",
    "vasilovsky-z",
    "mun-basis",
    "silva2",
    "z-classification",
    "oracle-equivalence",
    "fast-product",
    "central-zp",
    "central-z",
    "complete-seq",
    "congruence",
    "lambda-type2",
    "distinct-diagonal",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Item {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

impl Item {
    pub fn new(id: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Item {
            id: id.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub passed: bool,
    pub items: Vec<Item>,
}

pub fn run_suite(name: &str, seed: u64) -> Result<SuiteReport> {
    use batteries::*;
    let items = match name {
        "lemma-luis1" => identity_generators()?,
        "vasilovsky-zn" => consequence_closure(false, seed)?,
        "vasilovsky-z" => consequence_closure(true, seed)?,
        "silva2" => no_monomial_identities()?,
        "z-classification" => z_classification()?,
        "oracle-equivalence" => oracle_equivalence(seed)?,
        "fast-product" => fast_product(seed)?,
        "central-zp" => central_zp()?,
        "central-z" => central_z()?,
        "complete-seq" => complete_seq()?,
        "congruence" => congruence(seed)?,
        "lambda-type2" => lambda_type2(seed)?,
        "distinct-diagonal" => distinct_diagonal()?,
        "mun-basis" => mun_basis(seed)?,
        _ => {
            return Err(Error::Unsupported(format!(
                "unknown suite {name}; expected one of {}",
                SUITES.join(", ")
            )))
        }
    };
    Ok(SuiteReport {
        suite: name.into(),
        seed,
        passed: items.iter().all(|i| i.passed),
        items,
    })
}
