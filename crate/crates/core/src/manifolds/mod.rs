//! Invariant-level records of the 4-, 5- and 8-manifolds involved.
//!
//! A manifold is identified with its invariant tuple. 4-dimensional labels are
//! up to homeomorphism, 5-dimensional ones up to diffeomorphism.

mod eight;
mod five;
mod four;

pub use eight::{catalog_8manifold, euler_from_betti, EightManifoldDesc, EIGHT_CATALOG};
pub use five::{classify_5manifold, FiveManifoldDesc, FiveOrbitDesc};
pub use four::{classify_4manifold, FourManifoldDesc};
