//! The graded free algebra `K<X>` with integer coefficients.

mod classify;
mod monomial;
mod parse;
mod polynomial;

pub use classify::{
    classify, delete_neutral_variables, is_type2_witness, lambda_bound, MonomialClass, Type2Witness,
};
pub use monomial::{degree, window, GradedMonomial, GradedVariable};
pub use parse::{
    format_monomial, format_polynomial, format_variable, parse_monomial, parse_polynomial,
};
pub use polynomial::{apply_substitution, multihomogeneous_components, GradedPolynomial};
