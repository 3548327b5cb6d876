//! Exact linear algebra over arbitrary-precision rationals.
//!
//! Determinants of integer matrices go through fraction-free Bareiss
//! elimination (every intermediate division is exact, and asserted so);
//! rational matrices fall back to plain Gaussian elimination. Pivoting is
//! "first nonzero row in ascending order" throughout; with exact arithmetic
//! stability is a non-issue and determinism matters more.
//!
//! The cubic operations reject dimensions above [`DIM_GUARD`] (dense exact
//! elimination blows up in both time and entry size); the crate-internal
//! unguarded entry points back the CLI's `--force` flag.

mod error;
mod matrix;
mod rational;

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub use error::LinalgError;
pub use matrix::{IntMatrix, Matrix, RatMatrix, Rational};
pub use rational::{format_rational, parse_rational, to_decimal_string};

/// Largest dimension the guarded operations accept.
pub const DIM_GUARD: usize = 512;

fn guard(n: usize) -> Result<(), LinalgError> {
    if n > DIM_GUARD {
        Err(LinalgError::SizeGuard {
            n,
            limit: DIM_GUARD,
        })
    } else {
        Ok(())
    }
}

/// Exact determinant. Integer matrices (all denominators 1) are routed
/// through Bareiss elimination; the 0x0 determinant is 1 by the
/// empty-product convention.
pub fn determinant(m: &RatMatrix) -> Result<Rational, LinalgError> {
    guard(m.n())?;
    Ok(det_rational_unguarded(m))
}

/// Determinant of an integer matrix, staying in integers throughout.
pub fn determinant_int(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    guard(m.n())?;
    Ok(det_int_unguarded(m))
}

pub(crate) fn det_rational_unguarded(m: &RatMatrix) -> Rational {
    match m.as_integer() {
        Some(ref int) => Rational::from(det_int_unguarded(int)),
        None => det_gauss(m),
    }
}

/// Fraction-free Bareiss elimination. After step `k` every active entry is a
/// (k+1)-minor of the (row-swapped) input, so the division by the previous
/// pivot is exact; this is asserted on every step.
pub(crate) fn det_int_unguarded(m: &IntMatrix) -> BigInt {
    let n = m.n();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m.rows().map(|r| r.to_vec()).collect();
    let mut sign_flip = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num.div_rem(&prev);
                assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
        }
        prev = a[k][k].clone();
    }
    let det = std::mem::take(&mut a[n - 1][n - 1]);
    if sign_flip {
        -det
    } else {
        det
    }
}

fn det_gauss(m: &RatMatrix) -> Rational {
    let n = m.n();
    if n == 0 {
        return Rational::one();
    }
    let mut a: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut det = Rational::one();
    for k in 0..n {
        match (k..n).find(|&r| !a[r][k].is_zero()) {
            Some(r) => {
                if r != k {
                    a.swap(k, r);
                    det = -det;
                }
            }
            None => return Rational::zero(),
        }
        let pivot = a[k][k].clone();
        det *= &pivot;
        for i in k + 1..n {
            if a[i][k].is_zero() {
                continue;
            }
            let factor = &a[i][k] / &pivot;
            for j in k..n {
                let sub = &factor * &a[k][j];
                a[i][j] -= sub;
            }
        }
    }
    det
}

/// Exact inverse via Gauss-Jordan elimination. `M · M⁻¹ = I` exactly.
pub fn inverse(m: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    guard(m.n())?;
    inverse_unguarded(m)
}

pub(crate) fn inverse_unguarded(m: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let n = m.n();
    let mut a: Vec<Vec<Rational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    if i == j {
                        Rational::one()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for k in 0..n {
        let pivot_row = (k..n)
            .find(|&r| !a[r][k].is_zero())
            .ok_or(LinalgError::Singular)?;
        a.swap(k, pivot_row);
        inv.swap(k, pivot_row);
        let pivot = a[k][k].clone();
        for j in 0..n {
            a[k][j] /= &pivot;
            inv[k][j] /= &pivot;
        }
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let factor = a[i][k].clone();
            for j in 0..n {
                let s = &factor * &a[k][j];
                a[i][j] -= s;
                let s = &factor * &inv[k][j];
                inv[i][j] -= s;
            }
        }
    }
    Ok(Matrix::from_rows(inv))
}

/// Classical adjugate: `adj(M)_{ij} = (-1)^{i+j} det(M with row j, col i
/// removed)`, so `M · adj(M) = det(M) · I` exactly. The adjugate of a 1x1
/// matrix is `[1]`; the 0x0 input is rejected.
pub fn adjugate(m: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    guard(m.n())?;
    adjugate_unguarded(m)
}

fn adjugate_unguarded(m: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let n = m.n();
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    if n == 1 {
        return Ok(Matrix::identity(1));
    }
    let mut adj = RatMatrix::zero(n);
    for i in 0..n {
        for j in 0..n {
            // cofactor C_{ji}: delete row j+1 and column i+1 (1-based labels)
            let row: BTreeSet<usize> = [j + 1].into();
            let col: BTreeSet<usize> = [i + 1].into();
            let minor = m.complement_minor(&row, &col)?;
            let d = det_rational_unguarded(&minor);
            adj[(i, j)] = if (i + j) % 2 == 0 { d } else { -d };
        }
    }
    Ok(adj)
}

/// Sum of all cofactors of `M`, i.e. `1ᵀ · adj(M) · 1`.
pub fn cofactor_sum(m: &RatMatrix) -> Result<Rational, LinalgError> {
    guard(m.n())?;
    let adj = adjugate_unguarded(m)?;
    Ok(adj.entries().fold(Rational::zero(), |acc, e| acc + e))
}

/// Moore-Penrose inverse of a Laplacian-like matrix: zero row and column
/// sums and rank `n-1`. With `B` the leading principal `(n-1)`-minor and
/// `C = B⁻¹`, the pseudoinverse is assembled blockwise as
///
/// ```text
/// L† = [ C - (1/n)·ee'C - (1/n)·Cee'   -(1/n)·Ce ]   e'Ce
///      [ -(1/n)·e'C                     0         ] + ---- · 11'
///                                                      n²
/// ```
///
/// which satisfies all four Penrose conditions exactly (see
/// [`is_moore_penrose`], the oracle this construction is tested against).
pub fn moore_penrose_laplacian(l: &IntMatrix) -> Result<RatMatrix, LinalgError> {
    guard(l.n())?;
    moore_penrose_unguarded(l)
}

pub(crate) fn moore_penrose_unguarded(l: &IntMatrix) -> Result<RatMatrix, LinalgError> {
    let n = l.n();
    if n == 0 {
        return Err(LinalgError::EmptyMatrix);
    }
    for i in 0..n {
        if !l.row_sum(i).is_zero() {
            return Err(LinalgError::RowSumNonzero { row: i + 1 });
        }
    }
    for j in 0..n {
        if !l.col_sum(j).is_zero() {
            return Err(LinalgError::ColSumNonzero { col: j + 1 });
        }
    }
    let anchor: BTreeSet<usize> = [n].into();
    let b = l.complement_minor(&anchor, &anchor)?.to_rational();
    if det_rational_unguarded(&b).is_zero() {
        return Err(LinalgError::RankDeficient);
    }
    let c = inverse_unguarded(&b)?;
    let m = n - 1;
    // x = C·e (row sums), y = C'·e (column sums), s = e'Ce
    let x: Vec<Rational> = (0..m).map(|i| c.row_sum(i)).collect();
    let y: Vec<Rational> = (0..m).map(|j| c.col_sum(j)).collect();
    let s = x.iter().fold(Rational::zero(), |acc, v| acc + v);
    let n_rat = Rational::from(BigInt::from(n as u64));
    let shift = &s / (&n_rat * &n_rat);
    Ok(Matrix::from_fn(n, |i, j| {
        let base = if i < m && j < m {
            &c[(i, j)] - (&y[j] + &x[i]) / &n_rat
        } else if i < m {
            -&x[i] / &n_rat
        } else if j < m {
            -&y[j] / &n_rat
        } else {
            Rational::zero()
        };
        base + &shift
    }))
}

/// The four Penrose conditions, checked exactly: `AXA = A`, `XAX = X`,
/// `(AX)ᵀ = AX`, `(XA)ᵀ = XA`.
pub fn is_moore_penrose(a: &RatMatrix, x: &RatMatrix) -> Result<bool, LinalgError> {
    if a.n() != x.n() {
        return Err(LinalgError::DimensionMismatch {
            left: a.n(),
            right: x.n(),
        });
    }
    guard(a.n())?;
    let ax = a.mul(x);
    let xa = x.mul(a);
    Ok(ax.mul(a) == *a && xa.mul(x) == *x && ax.transpose() == ax && xa.transpose() == xa)
}
