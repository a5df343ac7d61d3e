use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::matrix::IntMatrix;
use super::snf::smith_normal_form;
use crate::error::{Error, Result};

/// A finitely generated abelian group `Z^free_rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk`,
/// always held in invariant-factor normal form (every `ti >= 2`, `ti | ti+1`).
///
/// Because the normal form is unique, `==` is group isomorphism.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct FgAbGroup {
    free_rank: usize,
    torsion: Vec<BigInt>,
}

impl FgAbGroup {
    /// Validating constructor: `torsion` must already be a divisor chain of
    /// positive integers. Entries equal to 1 are dropped.
    pub fn new<I>(free_rank: usize, torsion: I) -> Result<Self>
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let raw: Vec<BigInt> = torsion.into_iter().map(Into::into).collect();
        if raw.iter().any(|t| !t.is_positive())
            || raw.windows(2).any(|w| !w[1].is_multiple_of(&w[0]))
        {
            return Err(Error::InvalidDivisorChain(format_list(&raw)));
        }
        let torsion = raw.into_iter().filter(|t| !t.is_one()).collect();
        Ok(Self { free_rank, torsion })
    }

    /// Normalizing constructor from arbitrary cyclic orders. A zero order is a
    /// free summand; orders of absolute value 1 vanish.
    pub fn from_cyclic_orders<I>(free_rank: usize, orders: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        let orders: Vec<BigInt> = orders.into_iter().map(Into::into).collect();
        let extra_free = orders.iter().filter(|o| o.is_zero()).count();
        let diag = IntMatrix::diagonal(orders.into_iter().filter(|o| !o.is_zero()));
        let mut g = cokernel(&diag);
        g.free_rank += free_rank + extra_free;
        g
    }

    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::from_cyclic_orders(0, [order.into()])
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        if self.torsion.is_empty() || other.torsion.is_empty() {
            let torsion = if self.torsion.is_empty() {
                other.torsion.clone()
            } else {
                self.torsion.clone()
            };
            return Self {
                free_rank: self.free_rank + other.free_rank,
                torsion,
            };
        }
        Self::from_cyclic_orders(
            self.free_rank + other.free_rank,
            self.torsion.iter().chain(&other.torsion).cloned(),
        )
    }
}

/// `Z^rows / image(m)` in normal form.
pub fn cokernel(m: &IntMatrix) -> FgAbGroup {
    let snf = smith_normal_form(m);
    FgAbGroup {
        free_rank: m.rows() - snf.invariants.len(),
        torsion: snf.invariants.into_iter().filter(|d| !d.is_one()).collect(),
    }
}

/// Middle term of `0 -> left -> X -> right -> 0` when `right` is free, so the
/// sequence splits and `X = left ⊕ right`.
pub fn split_extension(left: &FgAbGroup, right: &FgAbGroup) -> Result<FgAbGroup> {
    if !right.is_free() {
        return Err(Error::NonFreeQuotient(right.to_string()));
    }
    Ok(left.direct_sum(right))
}

/// Kernel term of `0 -> X -> middle -> right -> 0` with `right` free. The
/// sequence splits, so `X` is `middle` with `rank(right)` free summands removed.
pub fn split_kernel(middle: &FgAbGroup, right: &FgAbGroup) -> Result<FgAbGroup> {
    if !right.is_free() {
        return Err(Error::NonFreeQuotient(right.to_string()));
    }
    if right.free_rank > middle.free_rank {
        return Err(Error::NotASplitSummand {
            middle: middle.to_string(),
            right: right.to_string(),
        });
    }
    Ok(FgAbGroup {
        free_rank: middle.free_rank - right.free_rank,
        torsion: middle.torsion.clone(),
    })
}

fn format_list(v: &[BigInt]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

impl fmt::Display for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        write!(f, "{}", parts.join(" ⊕ "))
    }
}

impl fmt::Debug for FgAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FgAbGroup({self})")
    }
}

// JSON: {"free_rank": int, "torsion": [int, ...]}; torsion entries outside the
// i64 range are written as decimal strings.

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGroup {
    free_rank: usize,
    #[serde(default)]
    torsion: Vec<RawInt>,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawInt {
    Small(i64),
    Big(String),
}

impl Serialize for FgAbGroup {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawGroup {
            free_rank: self.free_rank,
            torsion: self
                .torsion
                .iter()
                .map(|t| {
                    t.to_i64()
                        .map_or_else(|| RawInt::Big(t.to_string()), RawInt::Small)
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FgAbGroup {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawGroup::deserialize(d)?;
        let torsion = raw
            .torsion
            .into_iter()
            .map(|t| match t {
                RawInt::Small(v) => Ok(BigInt::from(v)),
                RawInt::Big(s) => s.parse::<BigInt>().map_err(|_| {
                    D::Error::custom(format!("torsion entry `{s}` is not an integer"))
                }),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        FgAbGroup::new(raw.free_rank, torsion).map_err(D::Error::custom)
    }
}
