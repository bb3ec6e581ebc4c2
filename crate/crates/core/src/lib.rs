//! Graded polynomial identities and graded central polynomials of `M_n(K)`
//! under elementary gradings, decided exactly through generic matrices.

pub mod bases;
pub mod cli;
pub mod error;
pub mod freealg;
pub mod genericmodel;
pub mod grading;
pub mod rewrite;
pub mod suites;

pub use error::{Error, ParseError, Result};
