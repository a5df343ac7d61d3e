//! Bounded search for an isometry carrying one lattice class to another.
//!
//! The search never claims two classes are equivalent without producing an
//! explicit integer matrix, and never claims they are inequivalent unless a
//! computable invariant separates them. Everything in between is
//! [`OrbitSearch::Undetermined`].

use std::collections::HashMap;
use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;

use super::form::{LatticeVector, Parity, UnimodularForm};
use super::invariants::{vector_invariants, VectorInvariants};
use crate::abelian::IntMatrix;
use crate::error::Result;

pub const DEFAULT_DEPTH: usize = 6;

/// Upper bound on enumerated box points (roots and base-isometry columns).
const BOX_LIMIT: u64 = 1 << 20;
/// Upper bound on orbit states visited by the breadth-first search.
const STATE_LIMIT: usize = 250_000;
/// Upper bound on backtracking nodes in the base isometry search.
const NODE_LIMIT: usize = 2_000_000;

/// The first invariant that tells two (form, class) pairs apart.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "invariant", rename_all = "snake_case")]
pub enum InvariantMismatch {
    Rank {
        left: usize,
        right: usize,
    },
    Signature {
        left: i64,
        right: i64,
    },
    Parity {
        left: Parity,
        right: Parity,
    },
    Vector {
        left: VectorInvariants,
        right: VectorInvariants,
    },
}

impl std::fmt::Display for InvariantMismatch {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Rank { left, right } => write!(f, "rank {left} vs {right}"),
            Self::Signature { left, right } => write!(f, "signature {left} vs {right}"),
            Self::Parity { left, right } => write!(f, "parity {left} vs {right}"),
            Self::Vector { left, right } => {
                if left.square != right.square {
                    write!(f, "square {} vs {}", left.square, right.square)
                } else if left.divisibility != right.divisibility {
                    write!(
                        f,
                        "divisibility {} vs {}",
                        left.divisibility, right.divisibility
                    )
                } else {
                    write!(
                        f,
                        "characteristic {} vs {}",
                        left.characteristic, right.characteristic
                    )
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrbitSearch {
    /// `witness` is `T` with `Tᵀ f2 T = f1` and `T v1 = v2`.
    SameOrbit {
        witness: IntMatrix,
    },
    DifferentOrbit(InvariantMismatch),
    Undetermined,
}

/// Compares rank, signature and parity.
pub fn form_mismatch(f1: &UnimodularForm, f2: &UnimodularForm) -> Option<InvariantMismatch> {
    if f1.rank() != f2.rank() {
        return Some(InvariantMismatch::Rank {
            left: f1.rank(),
            right: f2.rank(),
        });
    }
    if f1.signature() != f2.signature() {
        return Some(InvariantMismatch::Signature {
            left: f1.signature(),
            right: f2.signature(),
        });
    }
    if f1.parity() != f2.parity() {
        return Some(InvariantMismatch::Parity {
            left: f1.parity(),
            right: f2.parity(),
        });
    }
    None
}

/// Checks `Tᵀ f2 T = f1`, `|det T| = 1` and `T v1 = v2`.
pub fn is_isometry_witness(
    f1: &UnimodularForm,
    v1: &LatticeVector,
    f2: &UnimodularForm,
    v2: &LatticeVector,
    t: &IntMatrix,
) -> bool {
    let n = f1.rank();
    if t.rows() != n || t.cols() != n || f2.rank() != n || v1.len() != n || v2.len() != n {
        return false;
    }
    let pulled = match f2.pull_back(t) {
        Ok(p) => p,
        Err(_) => return false,
    };
    pulled == *f1.matrix()
        && t.is_unimodular()
        && t.mul_vec(v1.coords())
            .map(|img| img == v2.coords())
            .unwrap_or(false)
}

/// Searches for an isometry `T: (f1, v1) -> (f2, v2)`.
///
/// Invariants are compared first. If they agree, a base isometry between the
/// two Gram matrices is found (identity when they coincide), and the orbit of
/// the transported class is explored breadth-first under reflections in
/// vectors of square ±1 and ±2, up to `depth` reflections and coordinates of
/// absolute value at most `2 * depth`. If that fails the search is retried in
/// the opposite direction and the result inverted, so the outcome does not
/// depend on argument order.
pub fn bounded_isometry_orbit(
    f1: &UnimodularForm,
    v1: &LatticeVector,
    f2: &UnimodularForm,
    v2: &LatticeVector,
    depth: usize,
) -> Result<OrbitSearch> {
    v1.check_len(f1)?;
    v2.check_len(f2)?;
    if let Some(m) = form_mismatch(f1, f2) {
        return Ok(OrbitSearch::DifferentOrbit(m));
    }
    let i1 = vector_invariants(f1, v1)?;
    let i2 = vector_invariants(f2, v2)?;
    if i1 != i2 {
        return Ok(OrbitSearch::DifferentOrbit(InvariantMismatch::Vector {
            left: i1,
            right: i2,
        }));
    }

    if let Some(t) = directed_search(f1, v1, f2, v2, depth) {
        debug_assert!(is_isometry_witness(f1, v1, f2, v2, &t));
        return Ok(OrbitSearch::SameOrbit { witness: t });
    }
    if let Some(s) = directed_search(f2, v2, f1, v1, depth) {
        // Sᵀ f1 S = f2 gives S⁻¹ = f2⁻¹ Sᵀ f1.
        let t = f2.inverse().mul(&s.transpose())?.mul(f1.matrix())?;
        debug_assert!(is_isometry_witness(f1, v1, f2, v2, &t));
        return Ok(OrbitSearch::SameOrbit { witness: t });
    }
    Ok(OrbitSearch::Undetermined)
}

type Mat = Vec<Vec<i64>>;

fn to_small_vec(v: &LatticeVector) -> Option<Vec<i64>> {
    v.coords().iter().map(ToPrimitive::to_i64).collect()
}

fn to_int_matrix(m: &Mat) -> IntMatrix {
    let n = m.len();
    let entries = m.iter().flatten().map(|&x| BigInt::from(x)).collect();
    IntMatrix::new(n, n, entries).expect("square")
}

fn directed_search(
    f1: &UnimodularForm,
    v1: &LatticeVector,
    f2: &UnimodularForm,
    v2: &LatticeVector,
    depth: usize,
) -> Option<IntMatrix> {
    let g1 = f1.matrix().to_i64_rows()?;
    let g2 = f2.matrix().to_i64_rows()?;
    let a = to_small_vec(v1)?;
    let b = to_small_vec(v2)?;
    let n = g1.len();
    let bound = 2 * depth as i64;

    let base = if g1 == g2 {
        identity(n)
    } else {
        base_isometry(&g1, &g2, bound.max(1))?
    };
    let start = mat_vec(&base, &a)?;

    let coord_bound = [bound, max_abs(&start), max_abs(&b)]
        .into_iter()
        .max()
        .unwrap_or(0);
    let generators = generators(&g2);
    let path = orbit_path(&start, &b, &generators, depth, coord_bound)?;

    let mut t = to_int_matrix(&base);
    for g in path {
        t = to_int_matrix(&generators[g].matrix(n)).mul(&t).ok()?;
    }
    Some(t)
}

fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn max_abs(v: &[i64]) -> i64 {
    v.iter().map(|x| x.abs()).max().unwrap_or(0)
}

fn mat_vec(m: &Mat, v: &[i64]) -> Option<Vec<i64>> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .try_fold(0i64, |acc, (a, b)| acc.checked_add(a.checked_mul(*b)?))
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> Option<i64> {
    a.iter()
        .zip(b)
        .try_fold(0i64, |acc, (x, y)| acc.checked_add(x.checked_mul(*y)?))
}

/// An isometry generator of the form: a reflection, or `-1`.
enum Generator {
    Negate,
    /// `x -> x - factor * (g r · x) r`, with `g r` precomputed.
    Reflection {
        root: Vec<i64>,
        g_root: Vec<i64>,
        factor: i64,
    },
}

impl Generator {
    fn apply(&self, x: &[i64]) -> Option<Vec<i64>> {
        match self {
            Generator::Negate => Some(x.iter().map(|c| -c).collect()),
            Generator::Reflection {
                root,
                g_root,
                factor,
            } => {
                let t = dot(g_root, x)?.checked_mul(*factor)?;
                x.iter()
                    .zip(root)
                    .map(|(xi, ri)| xi.checked_sub(t.checked_mul(*ri)?))
                    .collect()
            }
        }
    }

    fn matrix(&self, n: usize) -> Mat {
        match self {
            Generator::Negate => (0..n)
                .map(|i| (0..n).map(|j| if i == j { -1 } else { 0 }).collect())
                .collect(),
            Generator::Reflection {
                root,
                g_root,
                factor,
            } => (0..n)
                .map(|i| {
                    (0..n)
                        .map(|j| i64::from(i == j) - factor * root[i] * g_root[j])
                        .collect()
                })
                .collect(),
        }
    }
}

fn box_radius(n: usize, max_radius: i64) -> i64 {
    let mut r = max_radius;
    while r > 0 {
        let side = (2 * r + 1) as u64;
        if side.checked_pow(n as u32).is_some_and(|c| c <= BOX_LIMIT) {
            return r;
        }
        r -= 1;
    }
    0
}

/// Calls `visit` on every nonzero vector with coordinates in `[-r, r]`.
fn for_each_in_box(n: usize, r: i64, mut visit: impl FnMut(&[i64])) {
    if n == 0 || r == 0 {
        return;
    }
    let mut x = vec![-r; n];
    loop {
        if x.iter().any(|&c| c != 0) {
            visit(&x);
        }
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            if x[i] < r {
                x[i] += 1;
                break;
            }
            x[i] = -r;
            i += 1;
        }
    }
}

fn generators(g: &Mat) -> Vec<Generator> {
    let n = g.len();
    let mut gens = vec![Generator::Negate];
    let radius = box_radius(n, 2).max(1);
    let mut push_root = |x: &[i64]| {
        // one of ±r suffices
        if x.iter().find(|&&c| c != 0).is_some_and(|&c| c < 0) {
            return;
        }
        let Some(g_root) = mat_vec(g, x) else { return };
        let Some(square) = dot(x, &g_root) else {
            return;
        };
        let factor = match square {
            1 => 2,
            -1 => -2,
            2 => 1,
            -2 => -1,
            _ => return,
        };
        gens.push(Generator::Reflection {
            root: x.to_vec(),
            g_root,
            factor,
        });
    };
    if (3u64).checked_pow(n as u32).is_some_and(|c| c <= BOX_LIMIT) {
        for_each_in_box(n, radius, &mut push_root);
    } else {
        for i in 0..n {
            let e: Vec<i64> = (0..n).map(|j| i64::from(i == j)).collect();
            push_root(&e);
        }
    }
    gens
}

/// Breadth-first search from `start` to `target`; returns generator indices in
/// application order.
fn orbit_path(
    start: &[i64],
    target: &[i64],
    gens: &[Generator],
    depth: usize,
    coord_bound: i64,
) -> Option<Vec<usize>> {
    let mut seen: HashMap<Vec<i64>, Option<(usize, usize)>> = HashMap::new();
    let mut order: Vec<Vec<i64>> = Vec::new();
    let mut queue = VecDeque::new();
    seen.insert(start.to_vec(), None);
    order.push(start.to_vec());
    queue.push_back((0usize, 0usize));

    let mut hit = (start == target).then_some(0usize);
    while hit.is_none() {
        let Some((idx, level)) = queue.pop_front() else {
            break;
        };
        if level >= depth {
            continue;
        }
        for (gi, g) in gens.iter().enumerate() {
            let Some(next) = g.apply(&order[idx]) else {
                continue;
            };
            if max_abs(&next) > coord_bound || seen.contains_key(&next) {
                continue;
            }
            if seen.len() >= STATE_LIMIT {
                return None;
            }
            seen.insert(next.clone(), Some((idx, gi)));
            order.push(next.clone());
            let new_idx = order.len() - 1;
            if next == target {
                hit = Some(new_idx);
                break;
            }
            queue.push_back((new_idx, level + 1));
        }
    }

    let mut idx = hit?;
    let mut path = Vec::new();
    while let Some(Some((parent, gi))) = seen.get(&order[idx]) {
        path.push(*gi);
        idx = *parent;
    }
    path.reverse();
    Some(path)
}

/// Finds `T` with `Tᵀ g2 T = g1` column by column by backtracking over short
/// vectors of the required squares.
fn base_isometry(g1: &Mat, g2: &Mat, bound: i64) -> Option<Mat> {
    let n = g1.len();
    let radius = box_radius(n, bound);
    if radius == 0 {
        return None;
    }
    let mut wanted: Vec<i64> = (0..n).map(|j| g1[j][j]).collect();
    wanted.sort_unstable();
    wanted.dedup();

    // (vector, g2 * vector) bucketed by square
    let mut buckets: HashMap<i64, Vec<(Vec<i64>, Vec<i64>)>> = HashMap::new();
    for_each_in_box(n, radius, |x| {
        let Some(gx) = mat_vec(g2, x) else { return };
        let Some(sq) = dot(x, &gx) else { return };
        if wanted.binary_search(&sq).is_ok() {
            buckets.entry(sq).or_default().push((x.to_vec(), gx));
        }
    });
    for list in buckets.values_mut() {
        list.sort_by_key(|(x, _)| x.iter().map(|c| c.abs()).sum::<i64>());
    }

    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    let mut nodes = 0usize;
    let found = backtrack(g1, &buckets, &mut chosen, &mut nodes)?;
    // columns -> matrix
    let cols: Vec<&Vec<i64>> = found
        .iter()
        .enumerate()
        .map(|(j, &k)| &buckets[&g1[j][j]][k].0)
        .collect();
    Some(
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i]).collect())
            .collect(),
    )
}

fn backtrack(
    g1: &Mat,
    buckets: &HashMap<i64, Vec<(Vec<i64>, Vec<i64>)>>,
    chosen: &mut Vec<usize>,
    nodes: &mut usize,
) -> Option<Vec<usize>> {
    let j = chosen.len();
    if j == g1.len() {
        return Some(chosen.clone());
    }
    let candidates = buckets.get(&g1[j][j])?;
    for (k, (x, _)) in candidates.iter().enumerate() {
        *nodes += 1;
        if *nodes > NODE_LIMIT {
            return None;
        }
        let consistent = chosen.iter().enumerate().all(|(i, &ci)| {
            let (_, g_prev) = &buckets[&g1[i][i]][ci];
            dot(g_prev, x) == Some(g1[i][j])
        });
        if !consistent {
            continue;
        }
        chosen.push(k);
        if let Some(done) = backtrack(g1, buckets, chosen, nodes) {
            return Some(done);
        }
        chosen.pop();
        if *nodes > NODE_LIMIT {
            return None;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forms::catalog::{hyperbolic, named_form};

    fn v(c: &[i64]) -> LatticeVector {
        LatticeVector::new(c.iter().copied())
    }

    #[test]
    fn sign_flip_in_rank_one() {
        let f = named_form("CP2").unwrap();
        let r = bounded_isometry_orbit(&f, &v(&[3]), &f, &v(&[-3]), DEFAULT_DEPTH).unwrap();
        match r {
            OrbitSearch::SameOrbit { witness } => {
                assert_eq!(witness, IntMatrix::from_rows(&[[-1]]).unwrap());
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn different_squares_are_separated() {
        let f = named_form("CP2").unwrap();
        let r = bounded_isometry_orbit(&f, &v(&[3]), &f, &v(&[5]), DEFAULT_DEPTH).unwrap();
        assert!(matches!(
            r,
            OrbitSearch::DifferentOrbit(InvariantMismatch::Vector { .. })
        ));
    }

    #[test]
    fn identity_found_first() {
        let f = named_form("S2xS2#CP2").unwrap();
        let a = v(&[1, 2, 3]);
        let r = bounded_isometry_orbit(&f, &a, &f, &a, DEFAULT_DEPTH).unwrap();
        assert_eq!(
            r,
            OrbitSearch::SameOrbit {
                witness: IntMatrix::identity(3)
            }
        );
    }

    #[test]
    fn summand_swap_in_u_plus_u() {
        let u = hyperbolic();
        let uu = u.direct_sum(&u);
        let a = v(&[1, 2, 0, 1]);
        let b = v(&[0, 1, 1, 2]); // swap of the two U blocks
        match bounded_isometry_orbit(&uu, &a, &uu, &b, DEFAULT_DEPTH).unwrap() {
            OrbitSearch::SameOrbit { witness } => {
                assert!(is_isometry_witness(&uu, &a, &uu, &b, &witness));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn different_gram_matrices_same_lattice() {
        // ⟨1⟩ ⊕ ⟨-1⟩ and [[1,1],[1,0]] are both odd, indefinite, rank 2, signature 0.
        let f1 = named_form("CP2#CP2bar").unwrap();
        let f2 = UnimodularForm::from_rows(&[[1, 1], [1, 0]]).unwrap();
        let a = v(&[1, 0]);
        let b = v(&[1, 0]);
        match bounded_isometry_orbit(&f1, &a, &f2, &b, DEFAULT_DEPTH).unwrap() {
            OrbitSearch::SameOrbit { witness } => {
                assert!(is_isometry_witness(&f1, &a, &f2, &b, &witness));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }

    #[test]
    fn form_invariants_checked_before_search() {
        let r = bounded_isometry_orbit(
            &named_form("CP2").unwrap(),
            &v(&[1]),
            &named_form("CP2bar").unwrap(),
            &v(&[1]),
            DEFAULT_DEPTH,
        )
        .unwrap();
        assert!(matches!(
            r,
            OrbitSearch::DifferentOrbit(InvariantMismatch::Signature { .. })
        ));
    }

    #[test]
    fn witness_checker_rejects_bad_matrices() {
        let f = named_form("CP2").unwrap();
        let t = IntMatrix::from_rows(&[[2]]).unwrap();
        assert!(!is_isometry_witness(&f, &v(&[1]), &f, &v(&[2]), &t));
    }

    #[test]
    fn e8_reflection_orbit() {
        let e8 = named_form("E8").unwrap();
        // reflecting the first simple root sends it to its negative
        let a = v(&[1, 0, 0, 0, 0, 0, 0, 0]);
        let b = v(&[1, 1, 0, 0, 0, 0, 0, 0]);
        match bounded_isometry_orbit(&e8, &a, &e8, &b, DEFAULT_DEPTH).unwrap() {
            OrbitSearch::SameOrbit { witness } => {
                assert!(is_isometry_witness(&e8, &a, &e8, &b, &witness));
            }
            other => panic!("expected witness, got {other:?}"),
        }
    }
}
