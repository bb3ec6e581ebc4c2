//! Generator families for graded identities and graded central polynomials.

mod central;
mod enumerate;
mod families;

pub use central::{check_v1_reduction, factor_complete, h_n_symmetrization};
pub(crate) use enumerate::support_tuples;
pub use enumerate::{enumerate_monomial_identities, MAX_TUPLES};
pub use families::{
    build_basis, verify_basis, verify_instance, Basis, BasisKind, BasisOptions, BasisReport,
    Expectation, Failure, Family, FamilyReport, Instance,
};
