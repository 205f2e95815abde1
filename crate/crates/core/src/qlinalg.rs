//! Exact linear algebra over the rationals.
//!
//! Everything here works with arbitrary-precision [`BigRational`] entries and
//! plain Gauss–Jordan elimination. The matrices in this crate are at most
//! 10×10, so no attempt is made at fraction-free or blocked elimination.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

pub type Rational = BigRational;

/// Shorthand for the integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for `num / den`. Panics if `den == 0`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("ragged rows: row {row} has {found} entries, expected {expected}")]
    RaggedRows {
        row: usize,
        expected: usize,
        found: usize,
    },
}

/// A dense matrix of exact rationals, stored row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(nrows * ncols);
        for (i, row) in rows.into_iter().enumerate() {
            if row.len() != ncols {
                return Err(LinalgError::RaggedRows {
                    row: i,
                    expected: ncols,
                    found: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(RatMatrix {
            rows: nrows,
            cols: ncols,
            data,
        })
    }

    /// Builds a matrix from integer rows. Panics on ragged input; meant for
    /// literals.
    pub fn from_i64<const C: usize>(rows: &[[i64; C]]) -> Self {
        let mut m = Self::zeros(rows.len(), C);
        for (i, row) in rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                m[(i, j)] = rat(v);
            }
        }
        m
    }

    /// The matrix whose columns are the given vectors.
    pub fn from_columns(len: usize, columns: &[Vec<Rational>]) -> Result<Self, LinalgError> {
        let mut m = Self::zeros(len, columns.len());
        for (j, col) in columns.iter().enumerate() {
            if col.len() != len {
                return Err(LinalgError::DimensionMismatch {
                    expected: len,
                    found: col.len(),
                });
            }
            for (i, v) in col.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len(), entries.len());
        for (i, v) in entries.iter().enumerate() {
            m[(i, i)] = v.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Rational>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn scale(&self, c: &Rational) -> Self {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v * c).collect(),
        }
    }

    pub fn checked_mul(&self, rhs: &RatMatrix) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = &rhs[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// `self · v` for a column vector `v`.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::DimensionMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut a = self.clone();
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..a.cols {
            if pivot_row == a.rows {
                break;
            }
            let Some(found) = (pivot_row..a.rows).find(|&r| !a[(r, col)].is_zero()) else {
                continue;
            };
            a.swap_rows(found, pivot_row);
            let inv = a[(pivot_row, col)].recip();
            for j in col..a.cols {
                let v = &a[(pivot_row, j)] * &inv;
                a[(pivot_row, j)] = v;
            }
            for r in 0..a.rows {
                if r == pivot_row || a[(r, col)].is_zero() {
                    continue;
                }
                let factor = a[(r, col)].clone();
                for j in col..a.cols {
                    let sub = &factor * &a[(pivot_row, j)];
                    a[(r, j)] -= sub;
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        (a, pivots)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Inverse of a square matrix, `None` if singular.
    pub fn inverse(&self) -> Option<RatMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = red[(i, n + j)].clone();
            }
        }
        Some(inv)
    }

    pub fn determinant(&self) -> Option<Rational> {
        if !self.is_square() {
            return None;
        }
        let mut a = self.clone();
        let n = self.rows;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return Some(Rational::zero());
            };
            if p != col {
                a.swap_rows(p, col);
                det = -det;
            }
            let pivot = a[(col, col)].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[(r, col)].is_zero() {
                    continue;
                }
                let factor = &a[(r, col)] / &pivot;
                for j in col..n {
                    let sub = &factor * &a[(col, j)];
                    a[(r, j)] -= sub;
                }
            }
        }
        Some(det)
    }
}

impl Index<(usize, usize)> for RatMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for RatMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &RatMatrix {
    type Output = RatMatrix;
    /// Panics on a shape mismatch; use [`RatMatrix::checked_mul`] otherwise.
    fn mul(self, rhs: &RatMatrix) -> RatMatrix {
        self.checked_mul(rhs).expect("matrix shapes do not match")
    }
}

impl Add for &RatMatrix {
    type Output = RatMatrix;
    fn add(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &RatMatrix {
    type Output = RatMatrix;
    fn sub(self, rhs: &RatMatrix) -> RatMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &RatMatrix {
    type Output = RatMatrix;
    fn neg(self) -> RatMatrix {
        RatMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| -v).collect(),
        }
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "RatMatrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

pub fn rank(m: &RatMatrix) -> usize {
    m.rank()
}

/// Basis of the right kernel `{v : m·v = 0}`, normalized to reduced row
/// echelon form so that the output is canonical. Empty when the kernel is
/// trivial.
pub fn kernel_basis(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let (red, pivots) = m.rref();
    let n = m.cols();
    let mut basis = Vec::new();
    for free in (0..n).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); n];
        v[free] = Rational::one();
        for (row, &pc) in pivots.iter().enumerate() {
            v[pc] = -red[(row, free)].clone();
        }
        basis.push(v);
    }
    echelon_basis(&basis)
}

/// Reduced echelon basis of the span of `vectors`. All vectors must have the
/// same length.
pub fn echelon_basis(vectors: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    if vectors.is_empty() {
        return Vec::new();
    }
    let m = RatMatrix::from_rows(vectors.to_vec()).expect("vectors of equal length");
    let (red, pivots) = m.rref();
    (0..pivots.len()).map(|i| red.row(i).to_vec()).collect()
}

/// Dimension of the span of a list of vectors.
pub fn span_dimension(vectors: &[Vec<Rational>]) -> Result<usize, LinalgError> {
    let Some(first) = vectors.first() else {
        return Ok(0);
    };
    check_lengths(first.len(), vectors)?;
    Ok(RatMatrix::from_rows(vectors.to_vec())?.rank())
}

fn check_lengths(len: usize, vectors: &[Vec<Rational>]) -> Result<(), LinalgError> {
    for v in vectors {
        if v.len() != len {
            return Err(LinalgError::DimensionMismatch {
                expected: len,
                found: v.len(),
            });
        }
    }
    Ok(())
}

/// True iff `a` and `b` span the same subspace. Decided by comparing the rank
/// of each list with the rank of the stacked list.
pub fn same_row_space(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Result<bool, LinalgError> {
    let len = match (a.first(), b.first()) {
        (Some(v), _) | (None, Some(v)) => v.len(),
        (None, None) => return Ok(true),
    };
    check_lengths(len, a)?;
    check_lengths(len, b)?;
    let ra = span_dimension(a)?;
    let rb = span_dimension(b)?;
    if ra != rb {
        return Ok(false);
    }
    let stacked: Vec<Vec<Rational>> = a.iter().chain(b).cloned().collect();
    Ok(span_dimension(&stacked)? == ra)
}

/// True iff every vector of `sub` lies in the span of `space`.
pub fn is_subspace(sub: &[Vec<Rational>], space: &[Vec<Rational>]) -> Result<bool, LinalgError> {
    let rs = span_dimension(space)?;
    let stacked: Vec<Vec<Rational>> = space.iter().chain(sub).cloned().collect();
    Ok(span_dimension(&stacked)? == rs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize, n: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); n];
        v[i] = Rational::one();
        v
    }

    #[test]
    fn identity_and_zero_ranks() {
        assert_eq!(rank(&RatMatrix::identity(4)), 4);
        assert_eq!(rank(&RatMatrix::zeros(10, 10)), 0);
        assert!(kernel_basis(&RatMatrix::identity(4)).is_empty());
        let k = kernel_basis(&RatMatrix::zeros(10, 10));
        assert_eq!(k.len(), 10);
        let full: Vec<_> = (0..10).map(|i| e(i, 10)).collect();
        assert!(same_row_space(&k, &full).unwrap());
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = RatMatrix::from_i64(&[[1, 2, 3, 4], [2, 4, 6, 8], [0, 1, -1, 0]]);
        let k = kernel_basis(&m);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(m.apply(v).unwrap().iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn row_space_examples() {
        let e1 = e(0, 2);
        let e2 = e(1, 2);
        let s = vec![add(&e1, &e2), sub(&e1, &e2)];
        assert!(same_row_space(&[e1.clone(), e2.clone()], &s).unwrap());
        assert!(!same_row_space(std::slice::from_ref(&e1), std::slice::from_ref(&e2)).unwrap());
        assert!(same_row_space(std::slice::from_ref(&e1), &[e(0, 3)]).is_err());
    }

    #[test]
    fn inverse_and_determinant() {
        let m = RatMatrix::from_i64(&[[2, 1], [7, 4]]);
        assert_eq!(m.determinant(), Some(rat(1)));
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, RatMatrix::identity(2));
        let singular = RatMatrix::from_i64(&[[1, 2], [2, 4]]);
        assert!(singular.inverse().is_none());
        assert_eq!(singular.determinant(), Some(rat(0)));
    }

    #[test]
    fn kernel_basis_is_reduced_echelon() {
        let m = RatMatrix::from_i64(&[[1, 1, 1, 1]]);
        let k = kernel_basis(&m);
        assert_eq!(echelon_basis(&k), k);
    }

    fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x + y).collect()
    }

    fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
        a.iter().zip(b).map(|(x, y)| x - y).collect()
    }
}
