//! Continuants of Hirzebruch-Jung chains.
//!
//! For a chain of rational curves with weights `w_1..w_n` the form `N` is
//! tridiagonal with diagonal `w` and off-diagonal `-1`; its determinant is
//! the continuant `a(w_1..w_n)`, with `a() = 1`. Every entry of `N⁻¹` and
//! every discrepancy of the chain is a ratio of continuants of contiguous
//! subchains, so we tabulate all of them once.
//!
//! Indices are 0-based: curve `E_{i+1}` is index `i`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::DualGraph;
use crate::rat::{self, Rat};

/// Chain weights, each at least 2.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightChain(Vec<u64>);

impl WeightChain {
    pub fn new(weights: Vec<u64>) -> Result<Self> {
        if let Some(&w) = weights.iter().find(|&&w| w < 2) {
            return Err(Error::WeightTooSmall(w));
        }
        Ok(Self(weights))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn weights(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// The chain as a dual graph with ids `E1..En`.
    pub fn to_graph(&self) -> DualGraph {
        DualGraph::chain(&self.0).expect("nonempty chain with positive weights")
    }

    pub fn table(&self) -> ContinuantTable {
        ContinuantTable::new(&self.0)
    }
}

/// `a(w_{i+1}..w_j)` for all `0 ≤ i ≤ j ≤ n`.
#[derive(Debug, Clone)]
pub struct ContinuantTable {
    n: usize,
    // row i holds a over [i, i), [i, i+1), ..., [i, n)
    rows: Vec<Vec<BigInt>>,
}

impl ContinuantTable {
    fn new(w: &[u64]) -> Self {
        let n = w.len();
        let rows = (0..=n)
            .map(|i| {
                let mut row: Vec<BigInt> = Vec::with_capacity(n - i + 1);
                row.push(BigInt::one());
                for j in i..n {
                    // a(..., w_j) = w_j a(..., w_{j-1}) - a(..., w_{j-2})
                    let last = &row[j - i];
                    let next = if j == i {
                        BigInt::from(w[j])
                    } else {
                        BigInt::from(w[j]) * last - &row[j - i - 1]
                    };
                    row.push(next);
                }
                row
            })
            .collect();
        Self { n, rows }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Continuant of the half-open index range `start..end`.
    pub fn range(&self, start: usize, end: usize) -> &BigInt {
        assert!(start <= end && end <= self.n, "continuant range {start}..{end}");
        &self.rows[start][end - start]
    }

    /// `α = a(w_1..w_n)`.
    pub fn total(&self) -> &BigInt {
        self.range(0, self.n)
    }

    /// `a(w_1..w_i)` for the first `i` weights.
    pub fn prefix(&self, i: usize) -> &BigInt {
        self.range(0, i)
    }

    /// `a(w_{i+1}..w_n)`: drop the first `i` weights.
    pub fn suffix(&self, i: usize) -> &BigInt {
        self.range(i, self.n)
    }

    fn check(&self, i: usize) -> Result<()> {
        if i < self.n {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, len: self.n })
        }
    }

    /// Entry `(i, j)` of `N⁻¹`: `a(w_1..w_{i-1}) a(w_{j+1}..w_n) / α` for `i ≤ j`
    /// (1-based), symmetric.
    pub fn inverse_entry(&self, i: usize, j: usize) -> Result<Rat> {
        self.check(i)?;
        self.check(j)?;
        let (lo, hi) = if i <= j { (i, j) } else { (j, i) };
        Ok(Rat::new(self.prefix(lo) * self.suffix(hi + 1), self.total().clone()))
    }

    /// `1 - a_i = (a(w_1..w_{i-1}) + a(w_{i+1}..w_n)) / α`.
    pub fn discrepancy_complement(&self, i: usize) -> Result<Rat> {
        self.check(i)?;
        Ok(Rat::new(
            self.prefix(i) + self.suffix(i + 1),
            self.total().clone(),
        ))
    }

    /// `a_i`, the canonical-cycle coefficient of `E_{i+1}`.
    pub fn discrepancy(&self, i: usize) -> Result<Rat> {
        Ok(Rat::one() - self.discrepancy_complement(i)?)
    }
}

pub fn continuant(chain: &WeightChain) -> BigInt {
    // machine integers until the recursion would overflow
    let (mut prev, mut cur) = (0i128, 1i128);
    for (k, &w) in chain.weights().iter().enumerate() {
        let next = i128::from(w)
            .checked_mul(cur)
            .and_then(|x| x.checked_sub(prev));
        match next {
            Some(next) => prev = std::mem::replace(&mut cur, next),
            None => return continuant_big(&chain.weights()[k..], prev.into(), cur.into()),
        }
    }
    cur.into()
}

fn continuant_big(rest: &[u64], mut prev: BigInt, mut cur: BigInt) -> BigInt {
    for &w in rest {
        let next = BigInt::from(w) * &cur - &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    cur
}

pub fn inverse_entry(chain: &WeightChain, i: usize, j: usize) -> Result<Rat> {
    chain.table().inverse_entry(i, j)
}

pub fn discrepancy_complement(chain: &WeightChain, i: usize) -> Result<Rat> {
    chain.table().discrepancy_complement(i)
}

/// `δ_y = 2 - a_1 - a_n` for a cyclic quotient chain (`2 - 2a_1` when `n = 1`).
pub fn chain_delta_y(chain: &WeightChain) -> Result<Rat> {
    if chain.is_empty() {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    let t = chain.table();
    let n = chain.len();
    Ok(rat::int(2) - t.discrepancy(0)? - t.discrepancy(n - 1)?)
}

/// Outcome of comparing the end coefficients of a chain pullback.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndBound {
    /// `p_1`, coefficient of the first curve.
    pub first: Rat,
    /// `p_n`, coefficient of the last curve.
    pub last: Rat,
    /// `a(w_1..w_{n-1})`.
    pub factor: BigInt,
    /// `p_n ≤ a(w_1..w_{n-1}) · p_1`.
    pub holds: bool,
}

/// For `p = N⁻¹ q` with `q ≥ 0`, checks `p_n ≤ a(w_1..w_{n-1}) p_1`.
pub fn end_bound(chain: &WeightChain, q: &[Rat]) -> Result<EndBound> {
    let n = chain.len();
    crate::graph::check_dim(n, q.len())?;
    if n == 0 {
        return Err(Error::IndexOutOfRange { index: 0, len: 0 });
    }
    if let Some((index, value)) = q.iter().enumerate().find(|(_, x)| *x < &Rat::zero()) {
        return Err(Error::NegativeEntry {
            index,
            value: rat::to_string(value),
        });
    }
    let t = chain.table();
    let coefficient = |j: usize| -> Result<Rat> {
        let mut p = Rat::zero();
        for (i, qi) in q.iter().enumerate() {
            if !qi.is_zero() {
                p += qi * t.inverse_entry(i, j)?;
            }
        }
        Ok(p)
    };
    let first = coefficient(0)?;
    let last = coefficient(n - 1)?;
    let factor = t.prefix(n - 1).clone();
    let holds = last <= Rat::from_integer(factor.clone()) * &first;
    Ok(EndBound {
        first,
        last,
        factor,
        holds,
    })
}
