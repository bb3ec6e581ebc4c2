//! Grading structures, elementary gradings of `M_n`, and their index data.

mod elementary;
mod sequences;
mod structure;

pub(crate) use elementary::is_prime;
pub use elementary::{ElementaryGrading, IndexData};
pub use sequences::{
    complete_sequence_unit_witness, enumerate_complete_sequences, is_complete_sequence,
    CompleteSequence, MAX_COMPLETE_SEQUENCE_LEN,
};
pub use structure::{CayleyTable, Grade, GradingStructure, StructureKind};
