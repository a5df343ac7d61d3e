//! Exact arithmetic on finitely generated abelian groups.
//!
//! Everything is arbitrary precision. Groups are normalized on construction so
//! isomorphism is structural equality.

mod group;
mod matrix;
mod snf;

pub use group::{cokernel, split_extension, split_kernel, FgAbGroup};
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithForm};
