//! Generic matrices over a commutative polynomial ring and the exact
//! identity and centrality tests they give.

mod decide;
mod matrix;
mod model;
mod sparse;

pub use decide::{
    central_witness, entry_match, identity_witness, is_central, is_identity, matrix_unit_oracle,
    Witness,
};
pub use matrix::PolyMatrix;
pub use model::{
    evaluate, make_generic, monomial_product, naive_monomial_product, Evaluation, GenericMatrix,
};
pub use sparse::{CommutativeMonomial, CommutingVariable, SparsePolynomial};
