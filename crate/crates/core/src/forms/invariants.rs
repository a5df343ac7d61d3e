use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::Serialize;

use super::form::{LatticeVector, UnimodularForm};
use crate::error::Result;

pub fn signature(f: &UnimodularForm) -> i64 {
    f.signature()
}

/// Rokhlin filter: an even form is the intersection form of a smooth closed
/// spin 4-manifold only if its signature is divisible by 16. Odd forms pass.
pub fn rokhlin_admissible(f: &UnimodularForm) -> bool {
    !f.is_even() || f.signature() % 16 == 0
}

/// Isometry invariants of a single class `v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct VectorInvariants {
    /// `v·v`
    #[serde(serialize_with = "crate::bigint_serde::serialize")]
    pub square: BigInt,
    /// gcd of `v·x` over the basis, 0 for `v = 0`.
    #[serde(serialize_with = "crate::bigint_serde::serialize")]
    pub divisibility: BigInt,
    /// `v·x ≡ x·x (mod 2)` for every basis vector `x`.
    pub characteristic: bool,
}

pub fn vector_invariants(f: &UnimodularForm, v: &LatticeVector) -> Result<VectorInvariants> {
    v.check_len(f)?;
    let image = f.matrix().mul_vec(v.coords())?;
    let square: BigInt = v.coords().iter().zip(&image).map(|(a, b)| a * b).sum();
    let divisibility = image.iter().fold(BigInt::zero(), |g, x| g.gcd(x)).abs();
    let characteristic = image
        .iter()
        .enumerate()
        .all(|(i, fx)| (fx - f.matrix().get(i, i)).is_even());
    Ok(VectorInvariants {
        square,
        divisibility,
        characteristic,
    })
}
