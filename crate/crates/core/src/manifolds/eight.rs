use serde::{Deserialize, Deserializer, Serialize};

use crate::abelian::FgAbGroup;
use crate::error::{Error, Result};

/// Catalog names accepted by [`catalog_8manifold`]. `#m(S4xS4)` stands for
/// any `m >= 1`.
pub const EIGHT_CATALOG: &[&str] = &[
    "S8",
    "S4xS4",
    "CP4",
    "HP2",
    "S2xS6",
    "S3xS5",
    "SU3",
    "#m(S4xS4)",
    "S2xS6#S3xS5",
];

/// Catalog entries for which existence of a semi-free S3 action with isolated
/// fixed points is an open problem.
const OPEN_CASES: &[&str] = &["S2xS6#S3xS5"];

/// Invariants of a closed simply connected 8-manifold: cohomology in degrees
/// 2..4 (the rest follows by duality), Euler characteristic, signature, and
/// vanishing flags for characteristic classes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct EightManifoldDesc {
    #[serde(rename = "H2")]
    pub h2: FgAbGroup,
    #[serde(rename = "H3")]
    pub h3: FgAbGroup,
    #[serde(rename = "H4")]
    pub h4: FgAbGroup,
    pub euler_char: i64,
    pub signature: i64,
    pub p1_zero: bool,
    pub p2_zero: bool,
    pub a_hat_zero: bool,
    pub spin: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

/// `χ = 2 + 2·b2 − 2·b3 + b4` for a closed simply connected 8-manifold.
pub fn euler_from_betti(h2: &FgAbGroup, h3: &FgAbGroup, h4: &FgAbGroup) -> i64 {
    2 + 2 * h2.free_rank() as i64 - 2 * h3.free_rank() as i64 + h4.free_rank() as i64
}

impl EightManifoldDesc {
    /// Checks the Euler characteristic against the Betti numbers.
    pub fn validate(self) -> Result<Self> {
        let expected = euler_from_betti(&self.h2, &self.h3, &self.h4);
        if expected != self.euler_char {
            return Err(Error::EulerCharacteristicMismatch {
                stated: self.euler_char,
                expected,
            });
        }
        Ok(self)
    }

    pub fn b2(&self) -> usize {
        self.h2.free_rank()
    }

    pub fn b3(&self) -> usize {
        self.h3.free_rank()
    }

    /// Whether the catalog marks this manifold as an open case.
    pub fn is_open_case(&self) -> bool {
        self.name
            .as_deref()
            .is_some_and(|n| OPEN_CASES.contains(&n))
    }

    /// Connected sum. `p2`, the Â-genus and the signature are additive
    /// numbers, so a sum of two nonzero values is not decided by flags alone.
    pub fn connected_sum(&self, other: &Self) -> Result<Self> {
        let additive = |a: bool, b: bool, what: &'static str| match (a, b) {
            (true, true) => Ok(true),
            (true, false) | (false, true) => Ok(false),
            (false, false) => Err(Error::Indeterminate(what)),
        };
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}#{b}")),
            _ => None,
        };
        Ok(Self {
            h2: self.h2.direct_sum(&other.h2),
            h3: self.h3.direct_sum(&other.h3),
            h4: self.h4.direct_sum(&other.h4),
            euler_char: self.euler_char + other.euler_char - 2,
            signature: self.signature + other.signature,
            p1_zero: self.p1_zero && other.p1_zero,
            p2_zero: additive(self.p2_zero, other.p2_zero, "p2 of a connected sum")?,
            a_hat_zero: additive(
                self.a_hat_zero,
                other.a_hat_zero,
                "Â-genus of a connected sum",
            )?,
            spin: self.spin && other.spin,
            name,
        })
    }
}

#[allow(clippy::too_many_arguments)]
fn record(
    name: &str,
    b2: usize,
    b3: usize,
    b4: usize,
    euler_char: i64,
    signature: i64,
    p_zero: (bool, bool),
    a_hat_zero: bool,
    spin: bool,
) -> EightManifoldDesc {
    EightManifoldDesc {
        h2: FgAbGroup::free(b2),
        h3: FgAbGroup::free(b3),
        h4: FgAbGroup::free(b4),
        euler_char,
        signature,
        p1_zero: p_zero.0,
        p2_zero: p_zero.1,
        a_hat_zero,
        spin,
        name: Some(name.to_string()),
    }
}

fn sum_of_s4xs4(m: usize) -> EightManifoldDesc {
    // H4 = Z^{2m} with hyperbolic intersection form; stably parallelizable.
    let name = if m == 1 {
        "S4xS4".to_string()
    } else {
        format!("#{m}(S4xS4)")
    };
    record(
        &name,
        0,
        0,
        2 * m,
        2 + 2 * m as i64,
        0,
        (true, true),
        true,
        true,
    )
}

/// Standard invariant records of the 8-manifolds used as test cases.
pub fn catalog_8manifold(name: &str) -> Result<EightManifoldDesc> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let desc = match name {
        "S8" => record(name, 0, 0, 0, 2, 0, (true, true), true, true),
        "S4xS4" => sum_of_s4xs4(1),
        // H* = Z[x]/x^5, p = (1+x²)^5 so p1 = 5x², p2 = 10x⁴; w2 = x ≠ 0;
        // Â[CP4] = (7p1² − 4p2)/5760 = 135/5760.
        "CP4" => record(name, 1, 0, 1, 5, 1, (false, false), false, false),
        // H* = Z[u]/u³ with |u| = 4; p1 = 2u, p2 = 7u²; spin, Â = 0.
        "HP2" => record(name, 0, 0, 1, 3, 1, (false, false), true, true),
        // Products of spheres are stably parallelizable.
        "S2xS6" => record(name, 1, 0, 0, 4, 0, (true, true), true, true),
        "S3xS5" => record(name, 0, 1, 0, 0, 0, (true, true), true, true),
        // Exterior algebra on generators of degree 3 and 5; a parallelizable Lie group.
        "SU3" => record(name, 0, 1, 0, 0, 0, (true, true), true, true),
        "S2xS6#S3xS5" => record(name, 1, 1, 0, 2, 0, (true, true), true, true),
        other => {
            let m: usize = other
                .strip_prefix('#')
                .and_then(|s| s.strip_suffix("(S4xS4)"))
                .and_then(|s| s.parse().ok())
                .filter(|&m| m >= 1)
                .ok_or_else(unknown)?;
            sum_of_s4xs4(m)
        }
    };
    desc.validate()
}

const FIELDS: &[&str] = &[
    "dim",
    "H2",
    "H3",
    "H4",
    "euler_char",
    "signature",
    "p1_zero",
    "p2_zero",
    "a_hat_zero",
    "spin",
    "name",
];

impl<'de> Deserialize<'de> for EightManifoldDesc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        use serde_json::{Map, Value};

        let mut map: Map<String, Value> = match Value::deserialize(d)? {
            Value::String(n) => return catalog_8manifold(&n).map_err(D::Error::custom),
            Value::Object(m) => m,
            other => {
                return Err(D::Error::custom(format!(
                    "expected a catalog name or an object, got {other}"
                )))
            }
        };
        if let Some(k) = map.keys().find(|k| !FIELDS.contains(&k.as_str())) {
            return Err(D::Error::unknown_field(k, FIELDS));
        }
        // Each field is parsed on its own so errors name it.
        fn take<T: serde::de::DeserializeOwned, E: serde::de::Error>(
            map: &mut Map<String, Value>,
            key: &'static str,
        ) -> std::result::Result<T, E> {
            let v = map.remove(key).ok_or_else(|| E::missing_field(key))?;
            serde_json::from_value(v).map_err(|e| E::custom(format!("{key}: {e}")))
        }
        if let Some(dim) = map.remove("dim") {
            if dim != Value::from(8) {
                return Err(D::Error::custom(format!("dim: expected 8, got {dim}")));
            }
        }
        let name = match map.remove("name") {
            None | Some(Value::Null) => None,
            Some(v) => Some(
                serde_json::from_value(v).map_err(|e| D::Error::custom(format!("name: {e}")))?,
            ),
        };
        EightManifoldDesc {
            h2: take::<_, D::Error>(&mut map, "H2")?,
            h3: take::<_, D::Error>(&mut map, "H3")?,
            h4: take::<_, D::Error>(&mut map, "H4")?,
            euler_char: take::<_, D::Error>(&mut map, "euler_char")?,
            signature: take::<_, D::Error>(&mut map, "signature")?,
            p1_zero: take::<_, D::Error>(&mut map, "p1_zero")?,
            p2_zero: take::<_, D::Error>(&mut map, "p2_zero")?,
            a_hat_zero: take::<_, D::Error>(&mut map, "a_hat_zero")?,
            spin: take::<_, D::Error>(&mut map, "spin")?,
            name,
        }
        .validate()
        .map_err(|e| D::Error::custom(format!("euler_char: {e}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sphere_record() {
        let s8 = catalog_8manifold("S8").unwrap();
        assert!(s8.h2.is_trivial() && s8.h3.is_trivial() && s8.h4.is_trivial());
        assert_eq!((s8.euler_char, s8.signature), (2, 0));
        assert!(s8.p1_zero && s8.p2_zero && s8.spin);
    }

    #[test]
    fn su3_and_hp2() {
        let su3 = catalog_8manifold("SU3").unwrap();
        assert_eq!(
            (su3.b2(), su3.b3(), su3.h4.free_rank(), su3.euler_char),
            (0, 1, 0, 0)
        );
        assert_eq!(su3.signature, 0);
        let hp2 = catalog_8manifold("HP2").unwrap();
        assert_eq!(
            (hp2.b2(), hp2.b3(), hp2.h4.free_rank(), hp2.euler_char),
            (0, 0, 1, 3)
        );
        assert_eq!(hp2.signature, 1);
        assert!(!hp2.p1_zero && hp2.spin);
    }

    #[test]
    fn every_catalog_entry_satisfies_euler_identity() {
        let mut names: Vec<String> = EIGHT_CATALOG
            .iter()
            .filter(|n| !n.contains("#m"))
            .map(|n| n.to_string())
            .collect();
        names.extend((1..=8).map(|m| format!("#{m}(S4xS4)")));
        for n in names {
            let d = catalog_8manifold(&n).unwrap();
            assert_eq!(d.euler_char, euler_from_betti(&d.h2, &d.h3, &d.h4), "{n}");
        }
        assert!(catalog_8manifold("#0(S4xS4)").is_err());
        assert!(catalog_8manifold("K3xK3").is_err());
    }

    #[test]
    fn connected_sum_with_s4xs4() {
        let cp4 = catalog_8manifold("CP4").unwrap();
        let s = cp4
            .connected_sum(&catalog_8manifold("S4xS4").unwrap())
            .unwrap();
        assert_eq!((s.euler_char, s.h4.free_rank(), s.signature), (7, 3, 1));
        assert!(s.clone().validate().is_ok());
        assert!(matches!(
            cp4.connected_sum(&cp4),
            Err(Error::Indeterminate(_))
        ));
    }

    #[test]
    fn json_validation() {
        let d: EightManifoldDesc = serde_json::from_str(r#""CP4""#).unwrap();
        let text = serde_json::to_string(&d).unwrap();
        assert_eq!(serde_json::from_str::<EightManifoldDesc>(&text).unwrap(), d);
        let bad = text.replace("\"euler_char\":5", "\"euler_char\":4");
        assert!(serde_json::from_str::<EightManifoldDesc>(&bad).is_err());
        assert!(catalog_8manifold("S2xS6#S3xS5").unwrap().is_open_case());
    }
}
