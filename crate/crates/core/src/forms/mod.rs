//! Unimodular symmetric bilinear forms over the integers.
//!
//! Rank, signature and parity are the classical invariants. The isometry
//! search in [`isometry`] is deliberately three-valued: it either exhibits an
//! explicit isometry, separates by a computable invariant, or gives up.

pub mod catalog;
mod definite;
mod form;
mod invariants;
pub mod isometry;

pub use catalog::{named_form, FORM_CATALOG};
pub use definite::is_standard_diagonal;
pub use form::{LatticeVector, Parity, UnimodularForm};
pub use invariants::{rokhlin_admissible, signature, vector_invariants, VectorInvariants};
pub use isometry::{
    bounded_isometry_orbit, form_mismatch, is_isometry_witness, InvariantMismatch, OrbitSearch,
    DEFAULT_DEPTH,
};
