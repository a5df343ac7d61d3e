//! Smith normal form over the integers.
//!
//! Pivoting always brings the entry of smallest nonzero absolute value into the
//! pivot slot, and every elementary operation is mirrored into the left or right
//! transform, so `left * m * right` is the returned diagonal.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Result of [`smith_normal_form`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    /// Nonzero diagonal entries d1 | d2 | ... , all positive.
    pub invariants: Vec<BigInt>,
    /// Unimodular row transform (rows x rows).
    pub left: IntMatrix,
    /// Unimodular column transform (cols x cols).
    pub right: IntMatrix,
    /// `left * m * right`.
    pub diagonal: IntMatrix,
}

impl SmithForm {
    pub fn rank(&self) -> usize {
        self.invariants.len()
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut left = IntMatrix::identity(rows);
    let mut right = IntMatrix::identity(cols);

    let mut t = 0;
    while t < rows.min(cols) {
        let Some((pr, pc)) = smallest_nonzero(&a, t, t) else {
            break;
        };
        a.swap_rows(t, pr);
        left.swap_rows(t, pr);
        a.swap_cols(t, pc);
        right.swap_cols(t, pc);

        loop {
            if !clear_column(&mut a, &mut left, t) {
                continue;
            }
            if !clear_row(&mut a, &mut right, t) {
                continue;
            }
            // Pivot row and column are clear; enforce divisibility of the
            // remaining block by folding an offending row into the pivot row.
            match find_non_multiple(&a, t) {
                Some(r) => {
                    let one = BigInt::one();
                    a.add_row_multiple(t, r, &one);
                    left.add_row_multiple(t, r, &one);
                }
                None => break,
            }
        }

        if a.get(t, t).is_negative() {
            a.negate_row(t);
            left.negate_row(t);
        }
        t += 1;
    }

    let invariants = (0..rows.min(cols))
        .map(|i| a.get(i, i).clone())
        .take_while(|d| !d.is_zero())
        .collect();

    SmithForm {
        invariants,
        left,
        right,
        diagonal: a,
    }
}

fn smallest_nonzero(a: &IntMatrix, r0: usize, c0: usize) -> Option<(usize, usize)> {
    let mut best: Option<((usize, usize), BigInt)> = None;
    for r in r0..a.rows() {
        for c in c0..a.cols() {
            let v = a.get(r, c);
            if v.is_zero() {
                continue;
            }
            let abs = v.abs();
            if best.as_ref().is_none_or(|(_, b)| abs < *b) {
                best = Some(((r, c), abs));
            }
        }
    }
    best.map(|(pos, _)| pos)
}

/// Eliminates below the pivot. Returns false if a smaller remainder was moved
/// into the pivot position and the caller has to go around again.
fn clear_column(a: &mut IntMatrix, left: &mut IntMatrix, t: usize) -> bool {
    let pivot = a.get(t, t).clone();
    for r in t + 1..a.rows() {
        let q = a.get(r, t).div_floor(&pivot);
        if !q.is_zero() {
            let neg = -q;
            a.add_row_multiple(r, t, &neg);
            left.add_row_multiple(r, t, &neg);
        }
    }
    let remainder = (t + 1..a.rows())
        .filter(|&r| !a.get(r, t).is_zero())
        .min_by_key(|&r| a.get(r, t).abs());
    match remainder {
        Some(r) => {
            a.swap_rows(t, r);
            left.swap_rows(t, r);
            false
        }
        None => true,
    }
}

fn clear_row(a: &mut IntMatrix, right: &mut IntMatrix, t: usize) -> bool {
    let pivot = a.get(t, t).clone();
    for c in t + 1..a.cols() {
        let q = a.get(t, c).div_floor(&pivot);
        if !q.is_zero() {
            let neg = -q;
            a.add_col_multiple(c, t, &neg);
            right.add_col_multiple(c, t, &neg);
        }
    }
    let remainder = (t + 1..a.cols())
        .filter(|&c| !a.get(t, c).is_zero())
        .min_by_key(|&c| a.get(t, c).abs());
    match remainder {
        Some(c) => {
            a.swap_cols(t, c);
            right.swap_cols(t, c);
            false
        }
        None => true,
    }
}

fn find_non_multiple(a: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = a.get(t, t);
    (t + 1..a.rows()).find(|&r| (t + 1..a.cols()).any(|c| !a.get(r, c).is_multiple_of(pivot)))
}
