//! Semi-free S3 actions on simply connected 8-manifolds with `n` isolated
//! fixed points.
//!
//! The conditions checked here are necessary only. A manifold that passes all
//! of them is reported as admissible at this level, never as admitting an
//! action.

use std::fmt;

use serde::Serialize;

use crate::abelian::FgAbGroup;
use crate::anchors;
use crate::error::{Error, Result};
use crate::manifolds::{EightManifoldDesc, FiveOrbitDesc};

/// `H⁰..H⁵(M* \ F)`: `Z, 0, H²(M*), H³(M*), Z^{n−1}, 0`.
pub fn orbit_complement_cohomology(orbit: &FiveOrbitDesc, n: u32) -> Result<[FgAbGroup; 6]> {
    if n == 0 {
        return Err(Error::TooFewFixedPoints { n, min: 1 });
    }
    Ok([
        FgAbGroup::free(1),
        FgAbGroup::trivial(),
        orbit.h2().clone(),
        orbit.h3().clone(),
        FgAbGroup::free(n as usize - 1),
        FgAbGroup::trivial(),
    ])
}

/// Cohomology of the total space of an action with orbit space `orbit` and
/// `n` fixed points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TotalCohomology8 {
    /// `H⁰ … H⁸`
    pub groups: [FgAbGroup; 9],
    pub euler_char: i64,
}

impl TotalCohomology8 {
    /// Alternating sum of free ranks.
    pub fn alternating_rank_sum(&self) -> i64 {
        self.groups
            .iter()
            .enumerate()
            .map(|(j, g)| if j % 2 == 0 { 1 } else { -1 } * g.free_rank() as i64)
            .sum()
    }
}

/// `H⁰ = H⁸ = Z`, `H¹ = H⁷ = 0`, `H² = H⁵ = H²(M*)`, `H³ = H⁶ = H³(M*)`,
/// `H⁴ = Z^{n−2}`, and `χ = n`.
pub fn total_space_cohomology(orbit: &FiveOrbitDesc, n: u32) -> Result<TotalCohomology8> {
    if n < 2 {
        return Err(Error::TooFewFixedPoints { n, min: 2 });
    }
    let z = FgAbGroup::free(1);
    let zero = FgAbGroup::trivial();
    let h2 = orbit.h2().clone();
    let h3 = orbit.h3().clone();
    Ok(TotalCohomology8 {
        groups: [
            z.clone(),
            zero.clone(),
            h2.clone(),
            h3.clone(),
            FgAbGroup::free(n as usize - 2),
            h2,
            h3,
            zero,
            z,
        ],
        euler_char: i64::from(n),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum ConditionId {
    C1,
    C2,
    C3,
    C4,
    C5,
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConditionResult {
    pub id: ConditionId,
    pub description: &'static str,
    pub passed: bool,
    /// The value that decided the condition.
    pub witness: String,
    pub anchor: &'static str,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    AdmissibleAtThisLevel,
    Obstructed,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::AdmissibleAtThisLevel => "ADMISSIBLE_AT_THIS_LEVEL",
            Verdict::Obstructed => "OBSTRUCTED",
        })
    }
}

/// Orbit-space invariants forced on any realizing action.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForcedOrbit {
    pub orbit: FiveOrbitDesc,
    /// Number of fixed points, equal to `χ(M)`.
    pub n: u32,
    pub anchor: &'static str,
    /// Source of `spin(M*) = spin(M)`.
    pub spin_anchor: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Annotation {
    pub text: String,
    pub anchor: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub manifold: Option<String>,
    pub conditions: Vec<ConditionResult>,
    pub verdict: Verdict,
    pub forced: Option<ForcedOrbit>,
    pub annotations: Vec<Annotation>,
}

impl ObstructionReport {
    pub fn failed(&self) -> impl Iterator<Item = ConditionId> + '_ {
        self.conditions.iter().filter(|c| !c.passed).map(|c| c.id)
    }

    pub fn condition(&self, id: ConditionId) -> Option<&ConditionResult> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

/// Runs conditions C1–C5 in order.
///
/// * C1 `b2 = b3`
/// * C2 `χ` even and `χ ≥ 2`
/// * C3 `p1 = p2 = 0`
/// * C4 signature and Â-genus vanish
/// * C5 `H⁴ ≅ Z^{χ−2}`
pub fn check_obstructions(m: &EightManifoldDesc) -> ObstructionReport {
    let chi = m.euler_char;
    let mut conditions = Vec::with_capacity(5);

    conditions.push(ConditionResult {
        id: ConditionId::C1,
        description: "b2(M) = b3(M)",
        passed: m.b2() == m.b3(),
        witness: format!("b2={}, b3={}", m.b2(), m.b3()),
        anchor: anchors::BETTI_8,
    });
    conditions.push(ConditionResult {
        id: ConditionId::C2,
        description: "χ(M) even and ≥ 2",
        passed: chi % 2 == 0 && chi >= 2,
        witness: format!("χ={chi}"),
        anchor: anchors::EULER_8,
    });
    conditions.push(ConditionResult {
        id: ConditionId::C3,
        description: "p1(M) = p2(M) = 0",
        passed: m.p1_zero && m.p2_zero,
        witness: format!("p1{}, p2{}", eq_word(m.p1_zero), eq_word(m.p2_zero)),
        anchor: anchors::PONTRJAGIN_8,
    });
    conditions.push(ConditionResult {
        id: ConditionId::C4,
        description: "signature(M) = 0 and Â(M) = 0",
        passed: m.signature == 0 && m.a_hat_zero,
        witness: format!("signature={}, Â{}", m.signature, eq_word(m.a_hat_zero)),
        anchor: anchors::AHAT_SIGNATURE_8,
    });
    let expected_h4 = (chi >= 2).then(|| FgAbGroup::free((chi - 2) as usize));
    conditions.push(ConditionResult {
        id: ConditionId::C5,
        description: "H4(M) ≅ Z^(χ−2)",
        passed: expected_h4.as_ref() == Some(&m.h4),
        witness: match &expected_h4 {
            Some(g) => format!("H4={}, expected {}", m.h4, g),
            None => format!("H4={}, χ−2={} < 0", m.h4, chi - 2),
        },
        anchor: anchors::TOTAL_COHOMOLOGY_8,
    });

    let obstructed = conditions.iter().any(|c| !c.passed);
    let forced = (!obstructed).then(|| {
        let orbit = FiveOrbitDesc::new(m.h2.clone(), m.h3.clone(), m.spin)
            .expect("C1 guarantees equal Betti numbers");
        ForcedOrbit {
            orbit,
            n: chi as u32,
            anchor: anchors::BETTI_8,
            spin_anchor: anchors::SPIN_8,
        }
    });

    let mut annotations = Vec::new();
    if m.is_open_case() {
        annotations.push(Annotation {
            text: "existence of such an action on this manifold is an open problem".to_string(),
            anchor: anchors::OPEN_CASE_8,
        });
    }

    ObstructionReport {
        manifold: m.name.clone(),
        conditions,
        verdict: if obstructed {
            Verdict::Obstructed
        } else {
            Verdict::AdmissibleAtThisLevel
        },
        forced,
        annotations,
    }
}

fn eq_word(zero: bool) -> &'static str {
    if zero {
        "=0"
    } else {
        "≠0"
    }
}

/// Appends the Euler class condition on the principal S3-bundle over the
/// complement of the fixed points. It constrains bundle data that invariant
/// records do not carry, so it is informational only.
pub fn euler_class_generator_note(report: &ObstructionReport) -> Result<ObstructionReport> {
    let forced = match (&report.verdict, &report.forced) {
        (Verdict::AdmissibleAtThisLevel, Some(f)) => f,
        _ => return Err(Error::InapplicableOnObstructed),
    };
    let h4 = FgAbGroup::free(forced.n as usize - 1);
    let mut out = report.clone();
    out.annotations.push(Annotation {
        text: format!(
            "Euler class generator in H⁴(M*\\F) ≅ {h4}, restricting to a Hopf generator at each of the {} fixed points",
            forced.n
        ),
        anchor: anchors::EULER_GENERATOR,
    });
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::manifolds::catalog_8manifold;

    fn trivial_orbit() -> FiveOrbitDesc {
        FiveOrbitDesc::new(FgAbGroup::trivial(), FgAbGroup::trivial(), true).unwrap()
    }

    #[test]
    fn orbit_complement_examples() {
        let g = orbit_complement_cohomology(&trivial_orbit(), 2).unwrap();
        assert_eq!(g[4], FgAbGroup::free(1));
        assert!(g[1].is_trivial() && g[2].is_trivial() && g[3].is_trivial() && g[5].is_trivial());
        let o = FiveOrbitDesc::new(FgAbGroup::free(1), FgAbGroup::free(1), true).unwrap();
        assert!(orbit_complement_cohomology(&o, 1).unwrap()[4].is_trivial());
        let g = orbit_complement_cohomology(&o, 3).unwrap();
        assert_eq!(
            (&g[2], &g[3], &g[4]),
            (
                &FgAbGroup::free(1),
                &FgAbGroup::free(1),
                &FgAbGroup::free(2)
            )
        );
    }

    #[test]
    fn total_cohomology_examples() {
        let t = total_space_cohomology(&trivial_orbit(), 2).unwrap();
        assert_eq!(t.euler_char, 2);
        assert!(t.groups[4].is_trivial());
        let t = total_space_cohomology(&trivial_orbit(), 4).unwrap();
        assert_eq!((t.groups[4].clone(), t.euler_char), (FgAbGroup::free(2), 4));
        let o = FiveOrbitDesc::new(FgAbGroup::free(1), FgAbGroup::free(1), true).unwrap();
        let t = total_space_cohomology(&o, 2).unwrap();
        assert_eq!(t.groups[2], FgAbGroup::free(1));
        assert_eq!(t.groups[5], FgAbGroup::free(1));
        assert_eq!(t.groups[6], FgAbGroup::free(1));
        assert!(t.groups[4].is_trivial());
        assert!(matches!(
            total_space_cohomology(&o, 1),
            Err(Error::TooFewFixedPoints { n: 1, min: 2 })
        ));
    }

    #[test]
    fn corollary_examples() {
        let r = check_obstructions(&catalog_8manifold("CP4").unwrap());
        assert_eq!(r.verdict, Verdict::Obstructed);
        let failed: Vec<_> = r.failed().collect();
        assert!(failed.contains(&ConditionId::C2));
        assert!(failed.contains(&ConditionId::C3));
        assert!(failed.contains(&ConditionId::C4));
        assert_eq!(r.condition(ConditionId::C2).unwrap().witness, "χ=5");

        let r = check_obstructions(&catalog_8manifold("SU3").unwrap());
        assert!(r.failed().any(|c| c == ConditionId::C1));

        let r = check_obstructions(&catalog_8manifold("S8").unwrap());
        assert_eq!(r.verdict, Verdict::AdmissibleAtThisLevel);
        let forced = r.forced.unwrap();
        assert_eq!(forced.n, 2);
        assert!(forced.orbit.h2().is_trivial() && forced.orbit.h3().is_trivial());
    }

    #[test]
    fn open_case_is_flagged() {
        let r = check_obstructions(&catalog_8manifold("S2xS6#S3xS5").unwrap());
        assert_eq!(r.verdict, Verdict::AdmissibleAtThisLevel);
        assert!(r
            .annotations
            .iter()
            .any(|a| a.text.contains("open problem")));
    }

    #[test]
    fn euler_note() {
        let r = check_obstructions(&catalog_8manifold("S8").unwrap());
        let r = euler_class_generator_note(&r).unwrap();
        assert!(r.annotations.last().unwrap().text.contains("≅ Z,"));
        let r = check_obstructions(&catalog_8manifold("S4xS4").unwrap());
        let r = euler_class_generator_note(&r).unwrap();
        assert!(r.annotations.last().unwrap().text.contains("≅ Z^3"));
        let r = check_obstructions(&catalog_8manifold("CP4").unwrap());
        assert_eq!(
            euler_class_generator_note(&r),
            Err(Error::InapplicableOnObstructed)
        );
    }
}
