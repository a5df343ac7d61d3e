//! Semi-free circle actions on simply connected 5-manifolds whose fixed set
//! is a union of `n` circles.
//!
//! An action is recorded by its orbit 4-manifold, the number of fixed circles
//! and a class `ē` in H² of the orbit space; this triple is the complete
//! invariant up to equivariant diffeomorphism.

use std::collections::BTreeSet;

use serde::{Deserialize, Deserializer, Serialize};

use crate::abelian::{split_extension, split_kernel, FgAbGroup, IntMatrix};
use crate::error::{Error, Result};
use crate::forms::{
    bounded_isometry_orbit, form_mismatch, rokhlin_admissible, vector_invariants,
    InvariantMismatch, LatticeVector, OrbitSearch,
};
use crate::manifolds::{classify_5manifold, FiveManifoldDesc, FourManifoldDesc};

/// Attached to every witnessed equivalence: the search works with
/// intersection-form isometries and cannot check realizability by a
/// diffeomorphism of the orbit space.
pub const REALIZABILITY_CAVEAT: &str = "form-isometry level; diffeomorphism realizability assumed";

/// `(M*, n, ē)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct ActionDescriptor5 {
    orbit: FourManifoldDesc,
    n: u32,
    ebar: LatticeVector,
}

impl ActionDescriptor5 {
    pub fn new(orbit: FourManifoldDesc, n: u32, ebar: LatticeVector) -> Result<Self> {
        if n == 0 {
            return Err(Error::TooFewFixedPoints { n, min: 1 });
        }
        ebar.check_len(orbit.form())?;
        Ok(Self { orbit, n, ebar })
    }

    pub fn orbit(&self) -> &FourManifoldDesc {
        &self.orbit
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn ebar(&self) -> &LatticeVector {
        &self.ebar
    }

    pub fn total_space(&self) -> Result<FiveManifoldDesc> {
        total_space(&self.orbit, self.n)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAction {
    orbit: FourManifoldDesc,
    n: u32,
    #[serde(default)]
    ebar: Option<LatticeVector>,
}

impl<'de> Deserialize<'de> for ActionDescriptor5 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawAction::deserialize(d)?;
        let ebar = raw
            .ebar
            .unwrap_or_else(|| LatticeVector::zero(raw.orbit.b2()));
        ActionDescriptor5::new(raw.orbit, raw.n, ebar).map_err(|e| match e {
            Error::TooFewFixedPoints { .. } => D::Error::custom(format!("n: {e}")),
            other => D::Error::custom(format!("ebar: {other}")),
        })
    }
}

/// A descriptor together with its resolved total space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvedAction {
    pub descriptor: ActionDescriptor5,
    pub total_space: FiveManifoldDesc,
}

/// Total space of a semi-free circle action with orbit space `orbit` and `n`
/// fixed circles: the 5-manifold with `b2 = n + b2(orbit) − 1`, spin exactly
/// when the orbit space is.
///
/// A spin orbit space must satisfy Rokhlin's constraint.
pub fn total_space(orbit: &FourManifoldDesc, n: u32) -> Result<FiveManifoldDesc> {
    if n == 0 {
        return Err(Error::TooFewFixedPoints { n, min: 1 });
    }
    let form = orbit.form();
    if form.is_even() && !rokhlin_admissible(form) {
        return Err(Error::RokhlinViolation {
            signature: form.signature(),
        });
    }
    classify_5manifold(n as usize + form.rank() - 1, form.is_even())
}

/// The groups in the Mayer–Vietoris chain computing `H³(M)` from an orbit
/// space with `b2 = k` and `n` fixed circles.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyChain5 {
    /// H²(M* \ F)
    pub h2_orbit_complement: FgAbGroup,
    /// H³(M* \ F)
    pub h3_orbit_complement: FgAbGroup,
    /// H³(M \ F)
    pub h3_complement: FgAbGroup,
    /// H³(M) ≅ H₂(M)
    pub h3_total: FgAbGroup,
}

/// Closed forms `Z^{n+k}`, `Z^{n−1}`, `Z^{2n+k−1}`, `Z^{n+k−1}`, checked
/// against [`cohomology_chain_from_sequences`].
pub fn cohomology_chain(k: usize, n: u32) -> Result<CohomologyChain5> {
    if n == 0 {
        return Err(Error::TooFewFixedPoints { n, min: 1 });
    }
    let n = n as usize;
    let closed = CohomologyChain5 {
        h2_orbit_complement: FgAbGroup::free(n + k),
        h3_orbit_complement: FgAbGroup::free(n - 1),
        h3_complement: FgAbGroup::free(2 * n + k - 1),
        h3_total: FgAbGroup::free(n + k - 1),
    };
    let chased = cohomology_chain_from_sequences(k, n as u32)?;
    assert_eq!(
        closed, chased,
        "closed forms disagree with the exact-sequence chase"
    );
    Ok(closed)
}

/// The same chain derived by splitting the short exact sequences one at a
/// time. The neighbourhood boundary of `F` in the orbit space is `n` copies
/// of `S¹ × S²`, and that of `F` in `M` is `n` copies of `S¹ × S³`.
pub fn cohomology_chain_from_sequences(k: usize, n: u32) -> Result<CohomologyChain5> {
    if n == 0 {
        return Err(Error::TooFewFixedPoints { n, min: 1 });
    }
    let n = n as usize;
    let h2_orbit = FgAbGroup::free(k);
    let boundary_h2 = FgAbGroup::free(n); // H²(⊔ S¹×S²)
    let boundary_h3 = FgAbGroup::free(n); // H³(⊔ S¹×S²)
    let orbit_h4 = FgAbGroup::free(1); // H⁴(M*)

    // 0 → H²(M*) → H²(M*\F) → H²(∂) → 0
    let h2_orbit_complement = split_extension(&h2_orbit, &boundary_h2)?;
    // 0 → H³(M*\F) → H³(∂) → H⁴(M*) → 0
    let h3_orbit_complement = split_kernel(&boundary_h3, &orbit_h4)?;
    // Gysin: 0 → H³(M*\F) → H³(M\F) → H²(M*\F) → 0
    let h3_complement = split_extension(&h3_orbit_complement, &h2_orbit_complement)?;
    // 0 → H³(M) → H³(M\F) → H³(⊔ S¹×S³) = Z^n → 0
    let h3_total = split_kernel(&h3_complement, &FgAbGroup::free(n))?;

    Ok(CohomologyChain5 {
        h2_orbit_complement,
        h3_orbit_complement,
        h3_complement,
        h3_total,
    })
}

/// The possible numbers of fixed circles of a semi-free circle action with
/// codimension-four fixed set on `m`: `{b2 + 1 − 2j : 0 ≤ j ≤ ⌊b2/2⌋}` when
/// `m` is spin, `{1, …, b2}` otherwise.
pub fn allowed_fixed_point_counts(m: &FiveManifoldDesc) -> BTreeSet<u32> {
    let b2 = m.b2() as u32;
    if m.is_spin() {
        (0..=b2 / 2).map(|j| b2 + 1 - 2 * j).collect()
    } else {
        (1..=b2).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum EquivalenceStatus {
    NotEquivalent,
    EquivalentWitnessed,
    Undetermined,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EquivalenceVerdict {
    pub status: EquivalenceStatus,
    /// `T` with `T ē₁ = ē₂` and `Tᵀ Q₂ T = Q₁`.
    #[serde(serialize_with = "serialize_witness")]
    pub witness: Option<IntMatrix>,
    pub caveat: Option<String>,
    /// What separated the two actions, for `NotEquivalent`.
    pub reason: Option<String>,
}

fn serialize_witness<S: serde::Serializer>(
    w: &Option<IntMatrix>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::Error as _;
    match w {
        None => s.serialize_none(),
        Some(m) => m
            .to_i64_rows()
            .ok_or_else(|| S::Error::custom("witness entry exceeds 64 bits"))?
            .serialize(s),
    }
}

impl EquivalenceVerdict {
    fn not_equivalent(reason: String) -> Self {
        Self {
            status: EquivalenceStatus::NotEquivalent,
            witness: None,
            caveat: None,
            reason: Some(reason),
        }
    }
}

/// Decides equivariant equivalence of two actions as far as the intersection
/// form allows: equal fixed-circle counts and an isometry of orbit forms
/// carrying `ē₁` to `ē₂`.
pub fn actions_equivalent(
    a1: &ActionDescriptor5,
    a2: &ActionDescriptor5,
    depth: usize,
) -> Result<EquivalenceVerdict> {
    if a1.n != a2.n {
        return Ok(EquivalenceVerdict::not_equivalent(format!(
            "fixed-circle counts differ: {} vs {}",
            a1.n, a2.n
        )));
    }
    let (f1, f2) = (a1.orbit.form(), a2.orbit.form());
    if let Some(m) = form_mismatch(f1, f2) {
        return Ok(EquivalenceVerdict::not_equivalent(format!(
            "orbit forms differ: {m}"
        )));
    }
    let (i1, i2) = (
        vector_invariants(f1, &a1.ebar)?,
        vector_invariants(f2, &a2.ebar)?,
    );
    if i1 != i2 {
        let m = InvariantMismatch::Vector {
            left: i1,
            right: i2,
        };
        return Ok(EquivalenceVerdict::not_equivalent(format!(
            "ē invariants differ: {m}"
        )));
    }
    Ok(
        match bounded_isometry_orbit(f1, &a1.ebar, f2, &a2.ebar, depth)? {
            OrbitSearch::SameOrbit { witness } => EquivalenceVerdict {
                status: EquivalenceStatus::EquivalentWitnessed,
                witness: Some(witness),
                caveat: Some(REALIZABILITY_CAVEAT.to_string()),
                reason: None,
            },
            OrbitSearch::DifferentOrbit(m) => {
                EquivalenceVerdict::not_equivalent(format!("ē invariants differ: {m}"))
            }
            OrbitSearch::Undetermined => EquivalenceVerdict {
                status: EquivalenceStatus::Undetermined,
                witness: None,
                caveat: Some(format!(
                    "invariants agree but no isometry found within depth {depth}"
                )),
                reason: None,
            },
        },
    )
}

/// Every triple `(M*, ē, n)` is realized by some action; this records it and
/// resolves the total space.
pub fn make_action(orbit: FourManifoldDesc, ebar: LatticeVector, n: u32) -> Result<ResolvedAction> {
    let descriptor = ActionDescriptor5::new(orbit, n, ebar)?;
    let total_space = descriptor.total_space()?;
    Ok(ResolvedAction {
        descriptor,
        total_space,
    })
}

/// Sign choice `ε ∈ {±1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }
}

/// Euler class `(εa − m, 1)` in `H²(M* \ F) ≅ H²(M*) ⊕ Z` of the `m`-th action
/// on the non-trivial bundle with orbit space CP2. The first coordinate is the
/// orbit-space component.
pub fn euler_class_nonspin_family(m: i64, a: i64, eps: Sign) -> LatticeVector {
    LatticeVector::new([eps.value() * a - m, 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn orbit(name: &str) -> FourManifoldDesc {
        FourManifoldDesc::from_catalog(name).unwrap()
    }

    #[test]
    fn total_space_examples() {
        assert_eq!(total_space(&orbit("S4"), 1).unwrap().label(), "S5");
        assert_eq!(total_space(&orbit("CP2"), 1).unwrap().label(), "S3x~S2");
        assert_eq!(
            total_space(&orbit("S2xS2"), 3).unwrap().label(),
            "#4(S3xS2)"
        );
        assert!(matches!(
            total_space(&orbit("E8"), 1),
            Err(Error::RokhlinViolation { signature: 8 })
        ));
        assert!(total_space(&orbit("E8#E8"), 1).is_ok());
        assert!(matches!(
            total_space(&orbit("S4"), 0),
            Err(Error::TooFewFixedPoints { .. })
        ));
    }

    #[test]
    fn chain_examples() {
        let c = cohomology_chain(0, 1).unwrap();
        assert_eq!(
            (
                c.h2_orbit_complement,
                c.h3_orbit_complement,
                c.h3_complement,
                c.h3_total
            ),
            (
                FgAbGroup::free(1),
                FgAbGroup::trivial(),
                FgAbGroup::free(1),
                FgAbGroup::trivial()
            )
        );
        let c = cohomology_chain(1, 1).unwrap();
        assert_eq!(c.h3_total, FgAbGroup::free(1));
        assert_eq!(c.h2_orbit_complement, FgAbGroup::free(2));
        let c = cohomology_chain(2, 3).unwrap();
        assert_eq!(
            (
                c.h2_orbit_complement,
                c.h3_orbit_complement,
                c.h3_complement,
                c.h3_total
            ),
            (
                FgAbGroup::free(5),
                FgAbGroup::free(2),
                FgAbGroup::free(7),
                FgAbGroup::free(4)
            )
        );
    }

    #[test]
    fn counts_examples() {
        let s5 = classify_5manifold(0, true).unwrap();
        assert_eq!(allowed_fixed_point_counts(&s5), BTreeSet::from([1]));
        let m = classify_5manifold(3, true).unwrap();
        assert_eq!(allowed_fixed_point_counts(&m), BTreeSet::from([2, 4]));
        let m = classify_5manifold(2, false).unwrap();
        assert_eq!(allowed_fixed_point_counts(&m), BTreeSet::from([1, 2]));
    }

    fn cp2_action(e: i64, n: u32) -> ActionDescriptor5 {
        ActionDescriptor5::new(orbit("CP2"), n, LatticeVector::new([e])).unwrap()
    }

    #[test]
    fn equivalence_examples() {
        let v = actions_equivalent(&cp2_action(3, 1), &cp2_action(-3, 1), 6).unwrap();
        assert_eq!(v.status, EquivalenceStatus::EquivalentWitnessed);
        assert_eq!(v.witness, Some(IntMatrix::from_rows(&[[-1]]).unwrap()));
        assert_eq!(v.caveat.as_deref(), Some(REALIZABILITY_CAVEAT));

        let v = actions_equivalent(&cp2_action(3, 1), &cp2_action(5, 1), 6).unwrap();
        assert_eq!(v.status, EquivalenceStatus::NotEquivalent);

        let v = actions_equivalent(&cp2_action(0, 1), &cp2_action(0, 2), 6).unwrap();
        assert_eq!(v.status, EquivalenceStatus::NotEquivalent);
        assert!(v.reason.unwrap().contains("fixed-circle"));
    }

    #[test]
    fn make_action_examples() {
        let r = make_action(orbit("S4"), LatticeVector::zero(0), 1).unwrap();
        assert_eq!(r.total_space.label(), "S5");
        let r = make_action(orbit("CP2"), LatticeVector::new([0]), 5).unwrap();
        assert_eq!(r.total_space.label(), "(S3x~S2)##4(S3xS2)");
        let r = make_action(orbit("S2xS2"), LatticeVector::new([1, 1]), 1).unwrap();
        assert_eq!(r.total_space.label(), "#2(S3xS2)");
        assert!(make_action(orbit("CP2"), LatticeVector::new([0, 1]), 1).is_err());
        assert!(matches!(
            make_action(orbit("E8"), LatticeVector::zero(8), 1),
            Err(Error::RokhlinViolation { .. })
        ));
    }

    #[test]
    fn nonspin_family() {
        assert_eq!(
            euler_class_nonspin_family(0, 0, Sign::Plus),
            LatticeVector::new([0, 1])
        );
        assert_eq!(
            euler_class_nonspin_family(2, 1, Sign::Plus),
            LatticeVector::new([-1, 1])
        );
        for m in -5..5 {
            let a = euler_class_nonspin_family(m, 3, Sign::Minus);
            let b = euler_class_nonspin_family(m + 1, 3, Sign::Minus);
            assert_eq!(&a.coords()[0] - &b.coords()[0], BigInt::from(1));
        }
    }

    #[test]
    fn descriptor_json() {
        let a: ActionDescriptor5 =
            serde_json::from_str(r#"{"orbit": "CP2", "n": 1, "ebar": [3]}"#).unwrap();
        assert_eq!(a, cp2_action(3, 1));
        let text = serde_json::to_string(&a).unwrap();
        assert_eq!(serde_json::from_str::<ActionDescriptor5>(&text).unwrap(), a);
        let err = serde_json::from_str::<ActionDescriptor5>(
            r#"{"orbit": "CP2", "n": 1, "ebar": [3, 4]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("ebar"));
        let err =
            serde_json::from_str::<ActionDescriptor5>(r#"{"orbit": "CP2", "n": 0, "ebar": [3]}"#)
                .unwrap_err();
        assert!(err.to_string().contains("n:"));
    }
}
