//! Dense square matrices over exact scalars.
//!
//! The only element types used in practice are [`num_bigint::BigInt`]
//! (Laplacians and their minors) and [`Rational`] (inverses, pseudoinverses,
//! resistance matrices). The 0x0 matrix is a valid value; several identities
//! in this crate rely on its determinant being 1.

use std::collections::BTreeSet;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::error::LinalgError;

/// Arbitrary-precision rational; always in lowest terms with a positive
/// denominator (invariants of `num_rational::Ratio`).
pub type Rational = num_rational::BigRational;

/// Square matrix of arbitrary-precision integers.
pub type IntMatrix = Matrix<BigInt>;

/// Square matrix of arbitrary-precision rationals.
pub type RatMatrix = Matrix<Rational>;

/// A dense square matrix, row-major. Entry indices are 0-based; the
/// *label* sets taken by [`Matrix::complement_minor`] are 1-based because
/// they name graph vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    n: usize,
    data: Vec<T>,
}

impl<T> Matrix<T> {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                data.push(f(i, j));
            }
        }
        Matrix { n, data }
    }

    /// Builds a matrix from rows; every row must have length `rows.len()`.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let n = rows.len();
        assert!(
            rows.iter().all(|r| r.len() == n),
            "matrix rows must all have length {n}"
        );
        Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.n.max(1))
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.n, |i, j| self[(j, i)].clone())
    }

    /// `M[Δ1ᶜ, Δ2ᶜ]`: the submatrix keeping rows whose 1-based label is not
    /// in `delta1` and columns whose label is not in `delta2`, in ascending
    /// label order. `|delta1| = |delta2|` so the result stays square.
    pub fn complement_minor(
        &self,
        delta1: &BTreeSet<usize>,
        delta2: &BTreeSet<usize>,
    ) -> Result<Self, LinalgError> {
        if delta1.len() != delta2.len() {
            return Err(LinalgError::DeltaSizeMismatch {
                d1: delta1.len(),
                d2: delta2.len(),
            });
        }
        for &label in delta1.iter().chain(delta2.iter()) {
            if label == 0 || label > self.n {
                return Err(LinalgError::LabelOutOfRange { label, n: self.n });
            }
        }
        let keep_rows: Vec<usize> = (1..=self.n).filter(|v| !delta1.contains(v)).collect();
        let keep_cols: Vec<usize> = (1..=self.n).filter(|v| !delta2.contains(v)).collect();
        Ok(Matrix::from_fn(keep_rows.len(), |i, j| {
            self[(keep_rows[i] - 1, keep_cols[j] - 1)].clone()
        }))
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
{
    pub fn zero(n: usize) -> Self {
        Matrix::from_fn(n, |_, _| T::zero())
    }

    pub fn row_sum(&self, i: usize) -> T {
        (0..self.n).fold(T::zero(), |acc, j| acc + self[(i, j)].clone())
    }

    pub fn col_sum(&self, j: usize) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc + self[(i, j)].clone())
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One,
{
    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.n, rhs.n, "matrix product needs equal dimensions");
        Matrix::from_fn(self.n, |i, j| {
            (0..self.n).fold(T::zero(), |acc, k| {
                acc + self[(i, k)].clone() * rhs[(k, j)].clone()
            })
        })
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        Matrix::from_fn(self.n, |i, j| Rational::from(self[(i, j)].clone()))
    }
}

impl RatMatrix {
    /// Some(IntMatrix) iff every entry has denominator 1.
    pub fn as_integer(&self) -> Option<IntMatrix> {
        if self.entries().all(|e| e.is_integer()) {
            Some(Matrix::from_fn(self.n, |i, j| self[(i, j)].to_integer()))
        } else {
            None
        }
    }
}

impl<T> Index<(usize, usize)> for Matrix<T> {
    type Output = T;

    fn index(&self, (i, j): (usize, usize)) -> &T {
        assert!(
            i < self.n && j < self.n,
            "index ({i},{j}) out of {}",
            self.n
        );
        &self.data[i * self.n + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        assert!(
            i < self.n && j < self.n,
            "index ({i},{j}) out of {}",
            self.n
        );
        &mut self.data[i * self.n + j]
    }
}
