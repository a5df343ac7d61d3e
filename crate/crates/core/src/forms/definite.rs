use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::form::UnimodularForm;

const NODE_LIMIT: usize = 1 << 20;

/// For a definite form, whether it is isometric to `±I`. A definite unimodular
/// lattice splits as `I_m ⊕ L'` where `I_m` is spanned by its vectors of norm
/// one, so it is standard exactly when it has `2 · rank` such vectors.
///
/// Returns `None` for indefinite forms or when enumeration runs too long.
pub fn is_standard_diagonal(f: &UnimodularForm) -> Option<bool> {
    if !f.is_definite() {
        return None;
    }
    if f.is_even() {
        return Some(false);
    }
    let count = count_norm_one(f)?;
    Some(count == 2 * f.rank())
}

/// Counts `x` with `|x·x| = 1` by Fincke–Pohst enumeration on the exact
/// `L D Lᵀ` decomposition of the (sign-corrected) Gram matrix.
fn count_norm_one(f: &UnimodularForm) -> Option<usize> {
    let n = f.rank();
    let sign = if f.signature() > 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    };
    let g: Vec<Vec<BigRational>> = f
        .matrix()
        .to_rows()
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| BigRational::from_integer(x * &sign))
                .collect()
        })
        .collect();

    // G = L D Lᵀ with L unit lower triangular.
    let mut l = vec![vec![BigRational::zero(); n]; n];
    let mut d = vec![BigRational::zero(); n];
    for i in 0..n {
        for j in 0..=i {
            let mut s = g[i][j].clone();
            for k in 0..j {
                s -= &l[i][k] * &l[j][k] * &d[k];
            }
            if i == j {
                d[i] = s;
                l[i][i] = BigRational::one();
            } else {
                l[i][j] = s / &d[j];
            }
        }
    }

    let mut search = Enumerator {
        n,
        l,
        d,
        x: vec![BigInt::zero(); n],
        count: 0,
        nodes: 0,
    };
    search.descend(n, BigRational::one())?;
    Some(search.count)
}

struct Enumerator {
    n: usize,
    l: Vec<Vec<BigRational>>,
    d: Vec<BigRational>,
    x: Vec<BigInt>,
    count: usize,
    nodes: usize,
}

impl Enumerator {
    /// Chooses coordinate `level - 1` given the ones above it, with `budget`
    /// left of the target norm.
    fn descend(&mut self, level: usize, budget: BigRational) -> Option<()> {
        if level == 0 {
            if budget.is_zero() {
                self.count += 1;
            }
            return Some(());
        }
        let i = level - 1;
        // (Lᵀx)_i = x_i + Σ_{j>i} L_ji x_j, so x_i is centred at -Σ ...
        let centre: BigRational = -(i + 1..self.n)
            .map(|j| &self.l[j][i] * BigRational::from_integer(self.x[j].clone()))
            .fold(BigRational::zero(), |a, b| a + b);
        let fits = |x: &BigInt, d: &BigRational| {
            let t = BigRational::from_integer(x.clone()) - &centre;
            let used = d * &t * &t;
            (used <= budget).then_some(used)
        };
        let start = centre.floor().to_integer();
        // walk downward from floor(centre), then upward from floor(centre)+1
        for dir in [-1i32, 1] {
            let mut x = if dir < 0 { start.clone() } else { &start + 1 };
            loop {
                self.nodes += 1;
                if self.nodes > NODE_LIMIT {
                    return None;
                }
                let Some(used) = fits(&x, &self.d[i]) else {
                    break;
                };
                self.x[i] = x.clone();
                self.descend(i, &budget - used)?;
                if dir < 0 {
                    x -= 1;
                } else {
                    x += 1;
                }
            }
        }
        self.x[i] = BigInt::zero();
        Some(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::abelian::IntMatrix;
    use crate::forms::named_form;

    #[test]
    fn diagonal_forms_are_standard() {
        assert_eq!(
            is_standard_diagonal(&named_form("CP2#CP2#CP2").unwrap()),
            Some(true)
        );
        assert_eq!(
            is_standard_diagonal(&named_form("CP2bar#CP2bar").unwrap()),
            Some(true)
        );
    }

    #[test]
    fn e8_is_not_standard() {
        assert_eq!(
            is_standard_diagonal(&named_form("E8").unwrap()),
            Some(false)
        );
        // odd, rank 9, but only two vectors of norm one
        assert_eq!(count_norm_one(&named_form("E8#CP2").unwrap()), Some(2));
        assert_eq!(
            is_standard_diagonal(&named_form("E8#CP2").unwrap()),
            Some(false)
        );
    }

    #[test]
    fn non_diagonal_gram_of_standard_lattice() {
        // basis (e1, e1 + e2) of Z²
        let f = UnimodularForm::new(IntMatrix::from_rows(&[[1, 1], [1, 2]]).unwrap()).unwrap();
        assert_eq!(is_standard_diagonal(&f), Some(true));
    }

    #[test]
    fn indefinite_is_none() {
        assert_eq!(is_standard_diagonal(&named_form("S2xS2").unwrap()), None);
    }
}
