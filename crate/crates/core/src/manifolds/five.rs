use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::FgAbGroup;
use crate::error::{Error, Result};

/// A closed simply connected 5-manifold with torsion-free `H2`, which by the
/// Barden–Smale classification is determined up to diffeomorphism by `b2`
/// and `w2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiveManifoldDesc {
    b2: usize,
    spin: bool,
    label: String,
}

impl FiveManifoldDesc {
    pub fn b2(&self) -> usize {
        self.b2
    }

    pub fn is_spin(&self) -> bool {
        self.spin
    }

    /// Connected-sum expression in S3-bundles over S2, e.g. `#3(S3xS2)` or
    /// `(S3x~S2)##4(S3xS2)`.
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn connected_sum(&self, other: &Self) -> Self {
        classify_5manifold(self.b2 + other.b2, self.spin && other.spin)
            .expect("a non-spin summand has b2 >= 1")
    }

    /// Parses a label produced by [`classify_5manifold`].
    pub fn from_label(label: &str) -> Result<Self> {
        let (b2, spin) =
            parse_label(label).ok_or_else(|| Error::UnknownCatalogEntry(label.to_string()))?;
        classify_5manifold(b2, spin)
    }
}

impl fmt::Display for FiveManifoldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn spin_label(b2: usize) -> String {
    match b2 {
        0 => "S5".to_string(),
        1 => "S3xS2".to_string(),
        k => format!("#{k}(S3xS2)"),
    }
}

/// Barden–Smale label of the torsion-free 5-manifold with the given `b2` and
/// spin flag. There is no non-spin example with `b2 = 0`.
pub fn classify_5manifold(b2: usize, spin: bool) -> Result<FiveManifoldDesc> {
    let label = match (spin, b2) {
        (true, k) => spin_label(k),
        (false, 0) => return Err(Error::NonSpinRankZero),
        (false, 1) => "S3x~S2".to_string(),
        (false, k) => format!("(S3x~S2)#{}", spin_label(k - 1)),
    };
    Ok(FiveManifoldDesc { b2, spin, label })
}

fn parse_spin_part(s: &str) -> Option<usize> {
    match s {
        "S5" => Some(0),
        "S3xS2" => Some(1),
        _ => {
            let k: usize = s.strip_prefix('#')?.strip_suffix("(S3xS2)")?.parse().ok()?;
            Some(k)
        }
    }
}

fn parse_label(label: &str) -> Option<(usize, bool)> {
    let s: String = label.chars().filter(|c| !c.is_whitespace()).collect();
    if s == "S3x~S2" {
        return Some((1, false));
    }
    if let Some(rest) = s.strip_prefix("(S3x~S2)#") {
        let k = parse_spin_part(rest)?;
        return (k >= 1).then_some((k + 1, false));
    }
    parse_spin_part(&s).map(|k| (k, true))
}

/// A closed simply connected 5-manifold as the orbit space of an S3 action,
/// recorded by `H2`, `H3` (torsion allowed) and `w2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiveOrbitDesc {
    h2: FgAbGroup,
    h3: FgAbGroup,
    spin: bool,
    label: Option<String>,
}

impl FiveOrbitDesc {
    pub fn new(h2: FgAbGroup, h3: FgAbGroup, spin: bool) -> Result<Self> {
        if h2.free_rank() != h3.free_rank() {
            return Err(Error::BettiMismatch {
                b2: h2.free_rank(),
                b3: h3.free_rank(),
            });
        }
        Ok(Self {
            h2,
            h3,
            spin,
            label: None,
        })
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn h2(&self) -> &FgAbGroup {
        &self.h2
    }

    pub fn h3(&self) -> &FgAbGroup {
        &self.h3
    }

    pub fn is_spin(&self) -> bool {
        self.spin
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }
}

impl From<&FiveManifoldDesc> for FiveOrbitDesc {
    fn from(m: &FiveManifoldDesc) -> Self {
        Self {
            h2: FgAbGroup::free(m.b2),
            h3: FgAbGroup::free(m.b2),
            spin: m.spin,
            label: Some(m.label.clone()),
        }
    }
}

// JSON for 5-manifolds: {"dim": 5, "b2": int, "spin": bool, "name"?: str} or a label.

#[derive(Deserialize)]
#[serde(untagged)]
enum RawFive {
    Label(String),
    Record {
        #[serde(default)]
        dim: Option<u32>,
        b2: usize,
        spin: bool,
        #[serde(default)]
        #[allow(dead_code)]
        name: Option<String>,
    },
}

impl<'de> Deserialize<'de> for FiveManifoldDesc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        match RawFive::deserialize(d)? {
            RawFive::Label(l) => FiveManifoldDesc::from_label(&l).map_err(D::Error::custom),
            RawFive::Record { dim, b2, spin, .. } => {
                if let Some(dim) = dim.filter(|&d| d != 5) {
                    return Err(D::Error::custom(format!("dim: expected 5, got {dim}")));
                }
                classify_5manifold(b2, spin).map_err(|e| D::Error::custom(format!("b2/spin: {e}")))
            }
        }
    }
}

impl Serialize for FiveManifoldDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            dim: u32,
            b2: usize,
            spin: bool,
            name: &'a str,
        }
        Out {
            dim: 5,
            b2: self.b2,
            spin: self.spin,
            name: &self.label,
        }
        .serialize(s)
    }
}

// JSON for orbit 5-manifolds: {"dim": 5, "H2": group, "H3": group, "spin": bool,
// "name"?: str}; the b2/spin form and labels are accepted too.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOrbitGroups {
    #[serde(default)]
    dim: Option<u32>,
    #[serde(rename = "H2")]
    h2: FgAbGroup,
    #[serde(rename = "H3")]
    h3: FgAbGroup,
    spin: bool,
    #[serde(default)]
    name: Option<String>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawOrbit {
    Groups(RawOrbitGroups),
    Simple(FiveManifoldDesc),
}

impl<'de> Deserialize<'de> for FiveOrbitDesc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = serde_json::Value::deserialize(d)?;
        let has_groups = value.get("H2").is_some() || value.get("H3").is_some();
        let raw = if has_groups {
            RawOrbit::Groups(serde_json::from_value(value).map_err(D::Error::custom)?)
        } else {
            RawOrbit::Simple(serde_json::from_value(value).map_err(D::Error::custom)?)
        };
        match raw {
            RawOrbit::Simple(m) => Ok(FiveOrbitDesc::from(&m)),
            RawOrbit::Groups(g) => {
                if let Some(dim) = g.dim.filter(|&d| d != 5) {
                    return Err(D::Error::custom(format!("dim: expected 5, got {dim}")));
                }
                let mut o = FiveOrbitDesc::new(g.h2, g.h3, g.spin).map_err(D::Error::custom)?;
                o.label = g.name;
                Ok(o)
            }
        }
    }
}

impl Serialize for FiveOrbitDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Out<'a> {
            dim: u32,
            #[serde(rename = "H2")]
            h2: &'a FgAbGroup,
            #[serde(rename = "H3")]
            h3: &'a FgAbGroup,
            spin: bool,
            #[serde(skip_serializing_if = "Option::is_none")]
            name: Option<&'a str>,
        }
        Out {
            dim: 5,
            h2: &self.h2,
            h3: &self.h3,
            spin: self.spin,
            name: self.label.as_deref(),
        }
        .serialize(s)
    }
}
