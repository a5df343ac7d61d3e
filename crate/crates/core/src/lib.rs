//! Semi-free circle actions on simply connected 5-manifolds and semi-free
//! S3 actions on simply connected 8-manifolds, as decision procedures over
//! integer invariants.
//!
//! The layers build on each other: [`abelian`] (Smith normal form and finitely
//! generated abelian groups), [`forms`] (unimodular forms and bounded isometry
//! search), [`manifolds`] (invariant records), then [`actions5`],
//! [`actions8`] and [`constructions`]. [`cli`] drives them from the command line.

pub mod abelian;
pub mod actions5;
pub mod actions8;
pub mod anchors;
mod bigint_serde;
pub mod cli;
pub mod constructions;
pub mod error;
pub mod forms;
pub mod manifolds;

pub use error::{Error, Result};
