//! Oracles shared by the integration tests. Nothing here calls into the
//! library's own algorithms.

#![allow(dead_code)]

use rand::Rng;

pub type Rows = Vec<Vec<i64>>;

/// Determinant by Leibniz expansion over all permutations.
pub fn perm_det(m: &[Vec<i64>]) -> i128 {
    let n = m.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = 0i128;
    permute(&mut perm, 0, m, &mut total);
    total
}

fn permute(p: &mut Vec<usize>, k: usize, m: &[Vec<i64>], total: &mut i128) {
    if k == p.len() {
        let mut inversions = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    inversions += 1;
                }
            }
        }
        let prod: i128 = (0..p.len()).map(|i| i128::from(m[i][p[i]])).product();
        *total += if inversions % 2 == 0 { prod } else { -prod };
        return;
    }
    for i in k..p.len() {
        p.swap(k, i);
        permute(p, k + 1, m, total);
        p.swap(k, i);
    }
}

fn gcd(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors `d_k = g_k / g_{k−1}`, where `g_k` is the gcd of all
/// `k × k` minors.
pub fn minor_gcd_invariants(m: &[Vec<i64>], cols: usize) -> Vec<i128> {
    let rows = m.len();
    let mut out = Vec::new();
    let mut prev = 1i128;
    for k in 1..=rows.min(cols) {
        let mut g = 0i128;
        for rs in subsets(rows, k) {
            for cs in subsets(cols, k) {
                let minor: Rows = rs
                    .iter()
                    .map(|&r| cs.iter().map(|&c| m[r][c]).collect())
                    .collect();
                g = gcd(g, perm_det(&minor));
            }
        }
        if g == 0 {
            break;
        }
        out.push(g / prev);
        prev = g;
    }
    out
}

pub fn random_matrix<R: Rng>(rng: &mut R, max_dim: usize, bound: i64) -> (usize, usize, Rows) {
    let r = rng.gen_range(1..=max_dim);
    let c = rng.gen_range(1..=max_dim);
    let m = (0..r)
        .map(|_| (0..c).map(|_| rng.gen_range(-bound..=bound)).collect())
        .collect();
    (r, c, m)
}

pub fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Rows {
    let n = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).map(|(x, br)| x * br[j]).sum())
                .collect()
        })
        .collect()
}

pub fn transpose(a: &[Vec<i64>]) -> Rows {
    let n = a.first().map_or(0, Vec::len);
    (0..n).map(|j| a.iter().map(|r| r[j]).collect()).collect()
}

pub fn identity(n: usize) -> Rows {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

pub fn pair(q: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    (0..x.len())
        .map(|i| (0..y.len()).map(|j| x[i] * q[i][j] * y[j]).sum::<i64>())
        .sum()
}

fn block_sum(a: &[Vec<i64>], b: &[Vec<i64>]) -> Rows {
    let (n, m) = (a.len(), b.len());
    let mut out = vec![vec![0; n + m]; n + m];
    for i in 0..n {
        out[i][..n].copy_from_slice(&a[i]);
    }
    for i in 0..m {
        out[n + i][n..].copy_from_slice(&b[i]);
    }
    out
}

pub fn e8_rows() -> Rows {
    let mut m = vec![vec![0i64; 8]; 8];
    for i in 0..8 {
        m[i][i] = 2;
    }
    for i in 0..6 {
        m[i][i + 1] = -1;
        m[i + 1][i] = -1;
    }
    m[4][7] = -1;
    m[7][4] = -1;
    m
}

/// A unimodular form with its signature and a spanning set of roots
/// (vectors of square ±1 or ±2), all known by construction.
pub struct KnownForm {
    pub rows: Rows,
    pub signature: i64,
    pub roots: Vec<Vec<i64>>,
}

/// Direct sum of random blocks `⟨1⟩, ⟨−1⟩, H` and occasionally `E8`, then
/// conjugated by a random unimodular change of basis.
pub fn random_form<R: Rng>(rng: &mut R, max_blocks: usize, allow_e8: bool) -> KnownForm {
    let mut rows: Rows = Vec::new();
    let mut signature = 0;
    let mut roots: Vec<Vec<i64>> = Vec::new();
    let blocks = rng.gen_range(1..=max_blocks);
    for _ in 0..blocks {
        let offset = rows.len();
        let pick = rng.gen_range(0..if allow_e8 { 7 } else { 6 });
        let (block, sig, block_roots): (Rows, i64, Vec<Vec<i64>>) = match pick {
            0 | 1 => (vec![vec![1]], 1, vec![vec![1]]),
            2 | 3 => (vec![vec![-1]], -1, vec![vec![1]]),
            4 | 5 => (
                vec![vec![0, 1], vec![1, 0]],
                0,
                vec![vec![1, 1], vec![1, -1]],
            ),
            _ => (
                e8_rows(),
                8,
                (0..8)
                    .map(|i| (0..8).map(|j| i64::from(i == j)).collect())
                    .collect(),
            ),
        };
        rows = block_sum(&rows, &block);
        signature += sig;
        for r in &mut roots {
            r.resize(rows.len(), 0);
        }
        for br in block_roots {
            let mut r = vec![0; offset];
            r.extend(br);
            roots.push(r);
        }
    }
    let n = rows.len();
    for r in &mut roots {
        r.resize(n, 0);
    }

    // P = product of elementary matrices; Q' = Pᵀ Q P and roots map by P⁻¹.
    let mut p = identity(n);
    let mut p_inv = identity(n);
    if n > 1 {
        for _ in 0..rng.gen_range(0..=2 * n) {
            let i = rng.gen_range(0..n);
            let mut j = rng.gen_range(0..n - 1);
            if j >= i {
                j += 1;
            }
            let c = if rng.gen_bool(0.5) { 1 } else { -1 };
            // E = I + c·e_ij acts on columns: col_j += c·col_i.
            for row in p.iter_mut() {
                row[j] += c * row[i];
            }
            // E⁻¹ = I − c·e_ij applied on the left: row_i −= c·row_j.
            let rj = p_inv[j].clone();
            for (x, y) in p_inv[i].iter_mut().zip(rj) {
                *x -= c * y;
            }
        }
    }
    let rows = mat_mul(&mat_mul(&transpose(&p), &rows), &p);
    let roots = roots
        .iter()
        .map(|r| {
            p_inv
                .iter()
                .map(|row| row.iter().zip(r).map(|(a, b)| a * b).sum())
                .collect()
        })
        .collect();
    KnownForm {
        rows,
        signature,
        roots,
    }
}

/// Matrix of the reflection `x ↦ x − 2(x·r)/(r·r) r`.
pub fn reflection(q: &[Vec<i64>], r: &[i64]) -> Rows {
    let n = r.len();
    let rr = pair(q, r, r);
    assert!(matches!(rr, 1 | -1 | 2 | -2), "not a root: square {rr}");
    let mut cols = Vec::with_capacity(n);
    for j in 0..n {
        let e: Vec<i64> = (0..n).map(|i| i64::from(i == j)).collect();
        let k = 2 * pair(q, &e, r) / rr;
        cols.push((0..n).map(|i| e[i] - k * r[i]).collect::<Vec<_>>());
    }
    transpose(&cols)
}
