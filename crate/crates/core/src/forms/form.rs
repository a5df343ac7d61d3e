use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::abelian::IntMatrix;
use crate::error::{Error, Result};

/// Even or odd, i.e. whether every `x·x` is even.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// A symmetric unimodular integer bilinear form, the intersection form of a
/// closed simply connected 4-manifold. Rank, signature and parity are computed
/// once at construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UnimodularForm {
    matrix: IntMatrix,
    signature: i64,
    parity: Parity,
}

impl UnimodularForm {
    pub fn new(matrix: IntMatrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::NotSquare {
                rows: matrix.rows(),
                cols: matrix.cols(),
            });
        }
        if let Some((row, col)) = matrix.first_asymmetry() {
            return Err(Error::NotSymmetric { row, col });
        }
        let det = matrix.determinant()?;
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular(det.to_string()));
        }
        let even = (0..matrix.rows()).all(|i| matrix.get(i, i).is_even());
        let signature = congruence_signature(&matrix);
        Ok(Self {
            matrix,
            signature,
            parity: if even { Parity::Even } else { Parity::Odd },
        })
    }

    pub fn from_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<Self> {
        Self::new(IntMatrix::from_rows(rows)?)
    }

    /// The rank-0 form (intersection form of S4).
    pub fn empty() -> Self {
        Self {
            matrix: IntMatrix::zeros(0, 0),
            signature: 0,
            parity: Parity::Even,
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rows()
    }

    pub fn signature(&self) -> i64 {
        self.signature
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn is_even(&self) -> bool {
        self.parity == Parity::Even
    }

    pub fn is_definite(&self) -> bool {
        self.signature.unsigned_abs() as usize == self.rank() && self.rank() > 0
    }

    /// `x·y` for coordinate vectors.
    pub fn pair(&self, x: &[BigInt], y: &[BigInt]) -> BigInt {
        let n = self.rank();
        let mut acc = BigInt::zero();
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            let row: BigInt = (0..n).map(|j| self.matrix.get(i, j) * &y[j]).sum();
            acc += &x[i] * row;
        }
        acc
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let parity = if self.is_even() && other.is_even() {
            Parity::Even
        } else {
            Parity::Odd
        };
        Self {
            matrix: self.matrix.direct_sum(&other.matrix),
            signature: self.signature + other.signature,
            parity,
        }
    }

    /// `Tᵀ · self · T`.
    pub fn pull_back(&self, t: &IntMatrix) -> Result<IntMatrix> {
        t.transpose().mul(&self.matrix)?.mul(t)
    }

    /// The inverse Gram matrix; integral because the form is unimodular.
    pub fn inverse(&self) -> IntMatrix {
        let inv = rational_inverse(&self.matrix).expect("unimodular matrices are invertible");
        let n = self.rank();
        let entries = inv
            .into_iter()
            .flatten()
            .map(|q| {
                debug_assert!(q.is_integer());
                q.to_integer()
            })
            .collect();
        IntMatrix::new(n, n, entries).expect("square")
    }
}

/// Signature by symmetric Gaussian elimination over the rationals: the form is
/// brought to a congruent diagonal form and pivot signs are counted.
pub(crate) fn congruence_signature(m: &IntMatrix) -> i64 {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = m
        .to_rows()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut sig = 0i64;
    for k in 0..n {
        if a[k][k].is_zero() {
            if let Some(j) = (k + 1..n).find(|&j| !a[j][j].is_zero()) {
                a.swap(k, j);
                for row in a.iter_mut() {
                    row.swap(k, j);
                }
            } else if let Some(j) = (k + 1..n).find(|&j| !a[k][j].is_zero()) {
                // Both diagonal entries vanish, so x_k + x_j has square 2·a[k][j].
                for c in 0..n {
                    let v = a[j][c].clone();
                    a[k][c] += v;
                }
                for r in 0..n {
                    let v = a[r][j].clone();
                    a[r][k] += v;
                }
            } else {
                continue;
            }
        }
        let pivot = a[k][k].clone();
        if pivot.is_positive() {
            sig += 1;
        } else {
            sig -= 1;
        }
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for c in k..n {
                let v = &factor * &a[k][c];
                a[i][c] -= v;
            }
            for r in k..n {
                let v = &factor * &a[r][k];
                a[r][i] -= v;
            }
        }
    }
    sig
}

fn rational_inverse(m: &IntMatrix) -> Option<Vec<Vec<BigRational>>> {
    let n = m.rows();
    let mut a: Vec<Vec<BigRational>> = m
        .to_rows()
        .into_iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<BigRational> = row.into_iter().map(BigRational::from_integer).collect();
            r.extend((0..n).map(|j| {
                if i == j {
                    BigRational::one()
                } else {
                    BigRational::zero()
                }
            }));
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let pivot = a[k][k].clone();
        for v in a[k].iter_mut() {
            *v /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for c in 0..2 * n {
                let v = &factor * &a[k][c];
                a[i][c] -= v;
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}

impl fmt::Debug for UnimodularForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "UnimodularForm(rank {}, signature {}, {}, {})",
            self.rank(),
            self.signature,
            self.parity,
            self.matrix
        )
    }
}

/// A class in H² written in the basis the form's Gram matrix is expressed in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct LatticeVector {
    coords: Vec<BigInt>,
}

impl LatticeVector {
    pub fn new<I>(coords: I) -> Self
    where
        I: IntoIterator,
        I::Item: Into<BigInt>,
    {
        Self {
            coords: coords.into_iter().map(Into::into).collect(),
        }
    }

    pub fn zero(len: usize) -> Self {
        Self {
            coords: vec![BigInt::zero(); len],
        }
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    pub fn concat(&self, other: &Self) -> Self {
        Self {
            coords: self.coords.iter().chain(&other.coords).cloned().collect(),
        }
    }

    pub fn negated(&self) -> Self {
        Self {
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }

    pub fn check_len(&self, form: &UnimodularForm) -> Result<()> {
        if self.len() != form.rank() {
            return Err(Error::DimensionMismatch {
                expected: form.rank(),
                actual: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for LatticeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

impl Serialize for LatticeVector {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::Error as _;
        let small: Option<Vec<i64>> = self.coords.iter().map(ToPrimitive::to_i64).collect();
        match small {
            Some(v) => v.serialize(s),
            None => Err(S::Error::custom(
                "lattice vector coordinate exceeds 64 bits",
            )),
        }
    }
}

impl<'de> Deserialize<'de> for LatticeVector {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(LatticeVector::new(Vec::<i64>::deserialize(d)?))
    }
}
