//! Building new actions from old ones.
//!
//! Everything here works on invariant descriptors. The gluing maps of the
//! underlying geometric constructions only show up through the arithmetic
//! they induce on `(M*, n, ē)`.

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::actions5::{make_action, ActionDescriptor5, ResolvedAction};
use crate::error::{Error, Result};
use crate::forms::LatticeVector;
use crate::manifolds::FourManifoldDesc;

/// Equivariant connected sum at points of two fixed circles.
///
/// The fixed circles glue into one, so `n = n₁ + n₂ − 1`; the orbit spaces add
/// and so do the classes `ē`.
pub fn equivariant_connected_sum(
    a1: &ActionDescriptor5,
    a2: &ActionDescriptor5,
) -> Result<ResolvedAction> {
    let orbit = a1.orbit().connected_sum(a2.orbit());
    let ebar = a1.ebar().concat(a2.ebar());
    let resolved = make_action(orbit, ebar, a1.n() + a2.n() - 1)?;
    let expected = a1.total_space()?.connected_sum(&a2.total_space()?);
    debug_assert_eq!(resolved.total_space, expected);
    if resolved.total_space != expected {
        return Err(Error::Indeterminate(
            "total space of the sum disagrees with the sum of total spaces",
        ));
    }
    Ok(resolved)
}

/// Equivariant fibre sum of `a` with a free circle action over `base`.
///
/// The orbit space becomes `M* # B` and `n` is unchanged. `base_ebar` is the
/// Euler class of the free action restricted to `H²(B)`; it defaults to zero.
pub fn equivariant_fibre_sum(
    base: &FourManifoldDesc,
    a: &ActionDescriptor5,
    base_ebar: Option<LatticeVector>,
) -> Result<ResolvedAction> {
    let base_ebar = base_ebar.unwrap_or_else(|| LatticeVector::zero(base.b2()));
    base_ebar.check_len(base.form())?;
    let orbit = a.orbit().connected_sum(base);
    make_action(orbit, a.ebar().concat(&base_ebar), a.n())
}

/// The two torus-action families on `S³ × S³`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Family {
    /// Quotient `S³ × S²`, orbit space homeomorphic to `S⁴`.
    SpinFamily,
    /// Quotient the non-trivial bundle, orbit space homeomorphic to `CP²`.
    NonspinFamily,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::SpinFamily => "SPIN_FAMILY",
            Family::NonspinFamily => "NONSPIN_FAMILY",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TorusCircleParams {
    pub family: Family,
    /// `(a, b)` for the circle `z ↦ (z^a, z^b)` in `T²`.
    pub subcircle: (i64, i64),
}

impl TorusCircleParams {
    pub fn new(family: Family, a: i64, b: i64) -> Self {
        Self {
            family,
            subcircle: (a, b),
        }
    }

    /// Subcircles of the spin family that act freely (up to conjugacy).
    pub const SPIN_FREE: [(i64, i64); 4] = [(0, 1), (0, -1), (-2, 1), (2, -1)];

    fn check(&self) -> Result<()> {
        let (a, b) = self.subcircle;
        if a.gcd(&b) != 1 {
            return Err(Error::NotACircleSubgroup { a, b });
        }
        let free = match self.family {
            Family::SpinFamily => Self::SPIN_FREE.contains(&(a, b)),
            Family::NonspinFamily => b.abs() == 1,
        };
        if free {
            Ok(())
        } else {
            Err(Error::NotFree {
                family: match self.family {
                    Family::SpinFamily => "SPIN_FAMILY",
                    Family::NonspinFamily => "NONSPIN_FAMILY",
                },
                a,
                b,
            })
        }
    }

    /// Exponents of `z` on the four quaternionic coordinates.
    pub fn exponents(&self) -> ExponentVector {
        let (a, b) = self.subcircle;
        let first = match self.family {
            Family::SpinFamily => 0,
            Family::NonspinFamily => b,
        };
        ExponentVector {
            exponents: [first, a, b, a + b],
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ExponentVector {
    pub exponents: [i64; 4],
}

impl ExponentVector {
    pub fn sum(&self) -> i64 {
        self.exponents.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TorusQuotient {
    pub params: TorusCircleParams,
    pub exponents: ExponentVector,
    pub exponent_sum: i64,
    /// Mod-2 reduction of the exponent sum.
    pub w2: u8,
    pub quotient_label: &'static str,
    /// Orbit space of the induced circle action, up to homeomorphism.
    pub orbit_label: &'static str,
}

/// Free quotient of `S³ × S³` by a subcircle of the torus and the induced
/// semi-free circle action on it.
pub fn torus_quotient(params: TorusCircleParams) -> Result<TorusQuotient> {
    params.check()?;
    let exponents = params.exponents();
    let exponent_sum = exponents.sum();
    let w2 = exponent_sum.rem_euclid(2) as u8;
    Ok(TorusQuotient {
        params,
        exponents,
        exponent_sum,
        w2,
        quotient_label: if w2 == 0 { "S3xS2" } else { "S3x~S2" },
        orbit_label: match params.family {
            Family::SpinFamily => "S4",
            Family::NonspinFamily => "CP2",
        },
    })
}

/// Fixed points of an equivariant connected sum of two semi-free S³ actions
/// on 8-manifolds: one fixed point is removed from each summand.
pub fn connected_sum_8(n1: u32, n2: u32) -> Result<u32> {
    for n in [n1, n2] {
        if n < 2 {
            return Err(Error::TooFewFixedPoints { n, min: 2 });
        }
    }
    Ok(n1 + n2 - 2)
}
