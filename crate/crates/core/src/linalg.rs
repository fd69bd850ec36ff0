//! Small dense exact linear algebra over the integers and rationals.
//!
//! Matrices are square `Vec<Vec<BigInt>>`; sizes are tiny (a handful of
//! exceptional curves), so everything is dense and allocation-happy.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rat::Rat;

pub type IntMatrix = Vec<Vec<BigInt>>;

/// Checks positive definiteness by Sylvester's criterion.
///
/// Runs Bareiss elimination without row exchanges; the pivot at step `k`
/// is then exactly the leading principal minor of order `k + 1`. Returns
/// the order of the first minor that is not strictly positive.
pub fn first_nonpositive_minor(m: &IntMatrix) -> Option<usize> {
    let n = m.len();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    for k in 0..n {
        if !a[k][k].is_positive() {
            return Some(k + 1);
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    None
}

/// Leading principal minors of orders `1..=n`, by the same elimination.
///
/// Stops (returning a shorter vector) at the first zero minor, since
/// Bareiss without pivoting cannot continue past it.
pub fn leading_minors(m: &IntMatrix) -> Vec<BigInt> {
    let n = m.len();
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut out = Vec::with_capacity(n);
    for k in 0..n {
        out.push(a[k][k].clone());
        if a[k][k].is_zero() {
            break;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    out
}

/// Determinant by fraction-free elimination, pivot = first nonzero entry.
pub fn determinant(m: &IntMatrix) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a = m.clone();
    let mut prev = BigInt::one();
    let mut sign = 1;
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !a[r][k].is_zero()) else {
            return BigInt::zero();
        };
        if p != k {
            a.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}

/// Solves `m · x = rhs` exactly. Returns `None` if `m` is singular.
///
/// The right-hand side is cleared of denominators, the augmented integer
/// system is reduced by Bareiss elimination (pivot = first nonzero in the
/// column), and the triangular system is back-substituted over `Q`.
pub fn solve(m: &IntMatrix, rhs: &[Rat]) -> Option<Vec<Rat>> {
    let n = m.len();
    assert_eq!(rhs.len(), n, "solve: rhs length");
    if n == 0 {
        return Some(Vec::new());
    }
    let scale = rhs
        .iter()
        .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let mut a: IntMatrix = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut row = row.clone();
            row.push(r.numer() * (&scale / r.denom()));
            row
        })
        .collect();
    let mut prev = BigInt::one();
    for k in 0..n {
        let p = (k..n).find(|&r| !a[r][k].is_zero())?;
        a.swap(p, k);
        for i in k + 1..n {
            for j in k + 1..=n {
                let v = &a[k][k] * &a[i][j] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    let mut x = vec![Rat::zero(); n];
    for i in (0..n).rev() {
        let mut acc = Rat::from_integer(a[i][n].clone());
        for j in i + 1..n {
            if !a[i][j].is_zero() {
                acc -= &x[j] * &a[i][j];
            }
        }
        x[i] = acc / &a[i][i];
    }
    if !scale.is_one() {
        for xi in &mut x {
            *xi /= &scale;
        }
    }
    Some(x)
}

/// `m · v`.
pub fn apply(m: &IntMatrix, v: &[Rat]) -> Vec<Rat> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(c, _)| !c.is_zero())
                .map(|(c, x)| x * c)
                .sum()
        })
        .collect()
}

/// `vᵀ m v`.
pub fn quadratic(m: &IntMatrix, v: &[Rat]) -> Rat {
    apply(m, v).iter().zip(v).map(|(a, b)| a * b).sum()
}

/// Principal submatrix on the given (sorted) index set.
pub fn principal(m: &IntMatrix, idx: &[usize]) -> IntMatrix {
    idx.iter()
        .map(|&i| idx.iter().map(|&j| m[i][j].clone()).collect())
        .collect()
}
