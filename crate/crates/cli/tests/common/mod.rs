//! Test-side oracles that share no code with the library's linear algebra.
#![allow(dead_code)]

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use surfsing::rat::{frac, int, Rat};
use surfsing::{BoundaryComponent, BoundaryData, DualGraph, Edge, ValidGraph, Vertex};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_chain(rng: &mut ChaCha8Rng, max_len: usize, max_weight: u64) -> Vec<u64> {
    let n = rng.gen_range(1..=max_len);
    (0..n).map(|_| rng.gen_range(2..=max_weight)).collect()
}

/// Random connected graph: a random tree, sometimes closed into one cycle.
/// `None` when the form is not positive definite.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, max_weight: u64) -> Option<ValidGraph> {
    let vertices: Vec<Vertex> = (0..n)
        .map(|i| Vertex::rational(format!("E{}", i + 1), rng.gen_range(2..=max_weight)))
        .collect();
    let mut edges: Vec<Edge> = (1..n)
        .map(|i| Edge::simple(format!("E{}", rng.gen_range(0..i) + 1), format!("E{}", i + 1)))
        .collect();
    if n >= 3 && rng.gen_bool(0.15) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            edges.push(Edge::simple(format!("E{}", a + 1), format!("E{}", b + 1)));
        }
    }
    DualGraph::new(vertices, edges).ok()?.validate().ok()
}

pub fn random_unit_rat(rng: &mut ChaCha8Rng) -> Rat {
    let d = rng.gen_range(1..=12);
    frac(rng.gen_range(0..=d), d)
}

/// Up to three components; each meets a random sparse set of curves, and
/// about one in five misses the exceptional locus.
pub fn random_boundary(rng: &mut ChaCha8Rng, n: usize) -> BoundaryData {
    let k = rng.gen_range(0..=3);
    let components = (0..k)
        .map(|i| {
            let misses = rng.gen_bool(0.2);
            let meets = (0..n)
                .map(|_| if misses || rng.gen_bool(0.7) { 0 } else { rng.gen_range(1..=2) })
                .collect();
            BoundaryComponent {
                name: format!("C{}", i + 1),
                coeff: random_unit_rat(rng),
                meets,
            }
        })
        .collect();
    BoundaryData::new(components).unwrap()
}

/// `N = -(E_i·E_j)`.
pub fn form(g: &ValidGraph) -> Vec<Vec<i64>> {
    let m = g.intersection_matrix();
    (0..m.dim())
        .map(|i| (0..m.dim()).map(|j| -m.get(i, j)).collect())
        .collect()
}

pub fn tridiagonal(w: &[u64]) -> Vec<Vec<i64>> {
    let n = w.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match i.abs_diff(j) {
                    0 => w[i] as i64,
                    1 => -1,
                    _ => 0,
                })
                .collect()
        })
        .collect()
}

/// Laplace expansion along successive rows, skipping zero entries. Each
/// minor is identified by the set of columns already used and computed once;
/// the memo is stamped per call so it can be reused across many matrices.
#[derive(Default)]
pub struct Cofactor {
    stamp: u32,
    memo: Vec<(u32, i128)>,
    entries: Vec<(u32, i128)>,
    rows: Vec<usize>,
}

impl Cofactor {
    pub fn det(&mut self, m: &[Vec<i64>]) -> i128 {
        assert!(m.len() <= 20, "cofactor oracle is exponential in n");
        if self.memo.len() < 1 << m.len() {
            self.memo = vec![(0, 0); 1 << m.len()];
            self.stamp = 0;
        }
        self.stamp += 1;
        self.entries.clear();
        self.rows.clear();
        self.rows.push(0);
        for row in m {
            for (c, &x) in row.iter().enumerate() {
                if x != 0 {
                    self.entries.push((c as u32, x as i128));
                }
            }
            self.rows.push(self.entries.len());
        }
        self.go(0)
    }

    fn go(&mut self, used: u32) -> i128 {
        let row = used.count_ones() as usize;
        if row + 1 == self.rows.len() {
            return 1;
        }
        let (stamp, value) = self.memo[used as usize];
        if stamp == self.stamp {
            return value;
        }
        let mut total = 0i128;
        for k in self.rows[row]..self.rows[row + 1] {
            let (col, x) = self.entries[k];
            if used >> col & 1 == 1 {
                continue;
            }
            // position of `col` among the columns still free
            let before = col - (used & ((1 << col) - 1)).count_ones();
            let sign = if before.is_multiple_of(2) { 1 } else { -1 };
            total += sign * x * self.go(used | 1 << col);
        }
        self.memo[used as usize] = (self.stamp, total);
        total
    }
}

pub fn cofactor_det(m: &[Vec<i64>]) -> i128 {
    Cofactor::default().det(m)
}

/// Gauss-Jordan inverse over `Q` with partial pivoting on the first nonzero.
pub fn inverse(m: &[Vec<i64>]) -> Option<Vec<Vec<Rat>>> {
    let n = m.len();
    let mut a: Vec<Vec<Rat>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r: Vec<Rat> = row.iter().map(|&x| int(x)).collect();
            r.extend((0..n).map(|j| if i == j { Rat::one() } else { Rat::zero() }));
            r
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(p, k);
        let piv = a[k][k].clone();
        for x in a[k].iter_mut() {
            *x /= &piv;
        }
        let pivot_row = a[k].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i == k || row[k].is_zero() {
                continue;
            }
            let f = row[k].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * p;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec(m: &[Vec<i64>], v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(c, _)| **c != 0)
                .map(|(&c, x)| x * int(c))
                .sum()
        })
        .collect()
}

pub fn quad(m: &[Vec<i64>], v: &[Rat]) -> Rat {
    mat_vec(m, v).iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Every KKT point of `min (v+x)ᵀN(v+x)` over `x ≥ 0`, found by trying all
/// `2ⁿ` free sets and solving each restricted system by Gauss-Jordan.
pub fn kkt_points(m: &[Vec<i64>], v: &[Rat]) -> Vec<(Rat, Vec<Rat>)> {
    let n = m.len();
    let nv = mat_vec(m, v);
    let mut out: Vec<(Rat, Vec<Rat>)> = Vec::new();
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&j| mask >> j & 1 == 1).collect();
        let mut x = vec![Rat::zero(); n];
        if !s.is_empty() {
            let sub: Vec<Vec<i64>> = s.iter().map(|&i| s.iter().map(|&j| m[i][j]).collect()).collect();
            let inv = inverse(&sub).expect("principal minors of a definite form are invertible");
            for (a, &i) in s.iter().enumerate() {
                x[i] = -s
                    .iter()
                    .enumerate()
                    .map(|(b, &j)| &inv[a][b] * &nv[j])
                    .sum::<Rat>();
            }
        }
        if x.iter().any(|c| c.is_negative()) {
            continue;
        }
        let w: Vec<Rat> = v.iter().zip(&x).map(|(a, b)| a + b).collect();
        let grad = mat_vec(m, &w);
        if grad.iter().any(|g| g.is_negative()) {
            continue;
        }
        let value = quad(m, &w);
        if !out.iter().any(|(_, y)| *y == x) {
            out.push((value, x));
        }
    }
    out
}
