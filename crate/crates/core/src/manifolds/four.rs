use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::abelian::IntMatrix;
use crate::error::{Error, Result};
use crate::forms::{is_standard_diagonal, named_form, Parity, UnimodularForm};

/// A closed simply connected 4-manifold, recorded by its intersection form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FourManifoldDesc {
    form: UnimodularForm,
    name: Option<String>,
}

impl FourManifoldDesc {
    pub fn new(form: UnimodularForm) -> Self {
        Self { form, name: None }
    }

    pub fn named(form: UnimodularForm, name: impl Into<String>) -> Self {
        Self {
            form,
            name: Some(name.into()),
        }
    }

    /// Like [`FourManifoldDesc::new`], but checks a separately stated spin flag
    /// against the parity of the form.
    pub fn with_spin_flag(form: UnimodularForm, spin: bool) -> Result<Self> {
        if spin != form.is_even() {
            return Err(Error::SpinParityMismatch {
                stored: spin,
                even: form.is_even(),
            });
        }
        Ok(Self::new(form))
    }

    pub fn from_catalog(name: &str) -> Result<Self> {
        Ok(Self::named(named_form(name)?, name))
    }

    pub fn form(&self) -> &UnimodularForm {
        &self.form
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn b2(&self) -> usize {
        self.form.rank()
    }

    pub fn is_spin(&self) -> bool {
        self.form.is_even()
    }

    /// Connected sum; the intersection form is the orthogonal sum.
    pub fn connected_sum(&self, other: &Self) -> Self {
        if other.b2() == 0 {
            return self.clone();
        }
        if self.b2() == 0 {
            return other.clone();
        }
        let name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a}#{b}")),
            _ => None,
        };
        Self {
            form: self.form.direct_sum(&other.form),
            name,
        }
    }

    /// Homeomorphism label, see [`classify_4manifold`].
    pub fn label(&self) -> String {
        classify_4manifold(self)
    }
}

/// Homeomorphism-type label read off the intersection form.
///
/// Odd indefinite forms (and odd definite forms isometric to `±I`) are
/// `a⟨1⟩ ⊕ b⟨-1⟩`, even forms of signature zero are sums of hyperbolic planes.
/// Anything else is reported as `unrecognized(rank, signature, parity)`.
pub fn classify_4manifold(d: &FourManifoldDesc) -> String {
    let f = d.form();
    let rank = f.rank();
    let sig = f.signature();
    if rank == 0 {
        return "S4".to_string();
    }
    let standard_odd = match f.parity() {
        Parity::Odd if !f.is_definite() => true,
        Parity::Odd => is_standard_diagonal(f).unwrap_or(false),
        Parity::Even => false,
    };
    if standard_odd {
        let plus = (rank as i64 + sig) / 2;
        let minus = (rank as i64 - sig) / 2;
        let part = |count: i64, name: &str| match count {
            0 => None,
            1 => Some(name.to_string()),
            c => Some(format!("#{c} {name}")),
        };
        return [part(plus, "CP2"), part(minus, "CP2bar")]
            .into_iter()
            .flatten()
            .collect::<Vec<_>>()
            .join(" # ");
    }
    if f.is_even() && sig == 0 {
        // indefinite even forms are classified by rank, signature and parity
        let q = rank / 2;
        return if q == 1 {
            "S2xS2".to_string()
        } else {
            format!("#{q} (S2xS2)")
        };
    }
    format!("unrecognized({rank}, {sig}, {})", f.parity())
}

// JSON: {"dim": 4, "form": {"matrix": [[..]]} | "<catalog>", "spin"?: bool, "name"?: str}
// or a bare catalog string.

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFourRecord {
    #[serde(default)]
    dim: Option<u32>,
    form: RawForm,
    #[serde(default)]
    spin: Option<bool>,
    #[serde(default)]
    name: Option<String>,
}

/// A catalog name, `{"matrix": rows}`, or bare rows.
#[derive(Serialize)]
#[serde(untagged)]
pub(crate) enum RawForm {
    Name(String),
    Matrix { matrix: Vec<Vec<i64>> },
}

impl<'de> Deserialize<'de> for RawForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rows = |v: Value| {
            serde_json::from_value::<Vec<Vec<i64>>>(v)
                .map_err(|e| D::Error::custom(format!("matrix: {e}")))
        };
        match Value::deserialize(d)? {
            Value::String(n) => Ok(RawForm::Name(n)),
            v @ Value::Array(_) => Ok(RawForm::Matrix { matrix: rows(v)? }),
            Value::Object(mut o) => {
                let m = o
                    .remove("matrix")
                    .ok_or_else(|| D::Error::missing_field("matrix"))?;
                if let Some(k) = o.keys().next() {
                    return Err(D::Error::unknown_field(k, &["matrix"]));
                }
                Ok(RawForm::Matrix { matrix: rows(m)? })
            }
            other => Err(D::Error::custom(format!(
                "expected a catalog name or a matrix, got {other}"
            ))),
        }
    }
}

impl RawForm {
    pub(crate) fn resolve(self) -> Result<UnimodularForm> {
        match self {
            RawForm::Name(n) => named_form(&n),
            RawForm::Matrix { matrix } => {
                if matrix.iter().any(|r| r.len() != matrix.len()) {
                    return Err(Error::NotSquare {
                        rows: matrix.len(),
                        cols: matrix.first().map_or(0, Vec::len),
                    });
                }
                UnimodularForm::new(IntMatrix::from_rows(&matrix)?)
            }
        }
    }

    pub(crate) fn from_form(f: &UnimodularForm) -> Result<Self> {
        let matrix = f
            .matrix()
            .to_i64_rows()
            .ok_or_else(|| Error::Schema("form entry exceeds 64 bits".into()))?;
        Ok(RawForm::Matrix { matrix })
    }
}

impl<'de> Deserialize<'de> for UnimodularForm {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        RawForm::deserialize(d)?.resolve().map_err(D::Error::custom)
    }
}

impl Serialize for UnimodularForm {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        RawForm::from_form(self)
            .map_err(S::Error::custom)?
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FourManifoldDesc {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let value = Value::deserialize(d)?;
        if let Value::String(n) = &value {
            return FourManifoldDesc::from_catalog(n).map_err(D::Error::custom);
        }
        let r: RawFourRecord = serde_json::from_value(value).map_err(D::Error::custom)?;
        if let Some(dim) = r.dim.filter(|&d| d != 4) {
            return Err(D::Error::custom(format!("dim: expected 4, got {dim}")));
        }
        let form = r
            .form
            .resolve()
            .map_err(|e| D::Error::custom(format!("form: {e}")))?;
        let mut desc = match r.spin {
            Some(spin) => FourManifoldDesc::with_spin_flag(form, spin)
                .map_err(|e| D::Error::custom(format!("spin: {e}")))?,
            None => FourManifoldDesc::new(form),
        };
        desc.name = r.name;
        Ok(desc)
    }
}

#[derive(Serialize)]
struct FourOut<'a> {
    dim: u32,
    form: &'a UnimodularForm,
    spin: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    name: Option<&'a str>,
}

impl Serialize for FourManifoldDesc {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FourOut {
            dim: 4,
            form: &self.form,
            spin: self.is_spin(),
            name: self.name.as_deref(),
        }
        .serialize(s)
    }
}
