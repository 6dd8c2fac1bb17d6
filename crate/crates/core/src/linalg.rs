//! Small dense matrices over exact rings.
//!
//! Entries are stored row-major. Action matrices throughout the crate use
//! the column convention: column `j` holds the image of basis vector `j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Scalar>;
pub type IntMatrix = Matrix<BigInt>;

impl<T> Matrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn entries(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn map<U>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> T) -> Self {
        let data = (0..rows * cols).map(|k| f(k / cols, k % cols)).collect();
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from row vectors; panics on ragged input.
    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[Vec<T>]) -> Self {
        let c = columns.len();
        let r = columns.first().map_or(0, Vec::len);
        Matrix::from_fn(r, c, |i, j| columns[j][i].clone())
    }

    pub fn row(&self, i: usize) -> Vec<T> {
        self.data[i * self.cols..(i + 1) * self.cols].to_vec()
    }

    pub fn column(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i)).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Add<&'a T, Output = T> + Sub<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn diagonal(values: &[T]) -> Self {
        let n = values.len();
        Matrix::from_fn(n, n, |i, j| if i == j { values[i].clone() } else { T::zero() })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.rows)
    }

    pub fn scale(&self, k: &T) -> Self {
        self.map(|v| v * k)
    }

    pub fn apply(&self, v: &[T]) -> Vec<T> {
        assert_eq!(v.len(), self.cols, "dimension mismatch");
        (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(T::zero(), |acc, j| &acc + &(self.get(i, j) * &v[j]))
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// `self·other − other·self`
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// Determinant by cofactor expansion; meant for the small (3×3) case.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self.get(0, 0).clone(),
            2 => &(self.get(0, 0) * self.get(1, 1)) - &(self.get(0, 1) * self.get(1, 0)),
            _ => (0..n).fold(T::zero(), |acc, j| {
                let minor = Matrix::from_fn(n - 1, n - 1, |i, k| {
                    self.get(i + 1, if k < j { k } else { k + 1 }).clone()
                });
                let term = self.get(0, j) * &minor.det();
                if j % 2 == 0 {
                    &acc + &term
                } else {
                    &acc - &term
                }
            }),
        }
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).fold(T::zero(), |acc, i| &acc + self.get(i, i))
    }
}

impl<'a, T> Mul for &'a Matrix<T>
where
    T: Clone + Zero,
    for<'b> &'b T: Add<&'b T, Output = T> + Mul<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn mul(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    if a.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * rhs.get(k, j));
                }
                data.push(acc);
            }
        }
        Matrix {
            rows: self.rows,
            cols: rhs.cols,
            data,
        }
    }
}

impl<'a, T> Add for &'a Matrix<T>
where
    T: Clone,
    for<'b> &'b T: Add<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn add(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl<'a, T> Sub for &'a Matrix<T>
where
    T: Clone,
    for<'b> &'b T: Sub<&'b T, Output = T>,
{
    type Output = Matrix<T>;

    fn sub(self, rhs: &'a Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl<T> Neg for &Matrix<T>
where
    T: Clone,
    for<'b> &'b T: Neg<Output = T>,
{
    type Output = Matrix<T>;

    fn neg(self) -> Matrix<T> {
        self.map(|v| -v)
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

impl IntMatrix {
    pub fn to_rational(&self) -> RatMatrix {
        self.map(scalar::from_big)
    }
}

impl RatMatrix {
    pub fn to_integer(&self) -> Result<IntMatrix> {
        let data = self.data.iter().map(scalar::to_integer).collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|v| v.is_integer())
    }

    /// Reduced row-echelon form with pivots chosen left to right, top to bottom.
    /// Returns the reduced matrix and the pivot columns.
    pub fn rref(&self) -> (RatMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).recip();
            for j in 0..m.cols {
                let v = m.get(row, j) * &inv;
                m.set(row, j, v);
            }
            for r in 0..m.rows {
                if r == row || m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone();
                for j in 0..m.cols {
                    let v = m.get(r, j) - &(&factor * m.get(row, j));
                    m.set(r, j, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Canonical description of the column space: the nonzero rows of the
    /// RREF of the transpose. Two matrices with the same number of rows have
    /// equal column spaces iff these agree.
    pub fn column_space(&self) -> RatMatrix {
        let (r, pivots) = self.transpose().rref();
        Matrix::from_fn(pivots.len(), r.cols, |i, j| r.get(i, j).clone())
    }

    pub fn same_column_space(&self, other: &RatMatrix) -> bool {
        assert_eq!(self.rows, other.rows);
        self.column_space() == other.column_space()
    }

    pub fn inverse(&self) -> Result<RatMatrix> {
        assert!(self.is_square());
        let n = self.rows;
        let augmented = Matrix::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                Scalar::one()
            } else {
                Scalar::zero()
            }
        });
        let (r, pivots) = augmented.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return Err(Error::Singular);
        }
        Ok(Matrix::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    pub fn max_abs_entry(&self) -> Scalar {
        self.data.iter().map(Signed::abs).max().unwrap_or_else(Scalar::zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, int};

    fn rat(rows: &[&[i64]]) -> RatMatrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn product_and_power() {
        let a = rat(&[&[1, 1], &[0, 1]]);
        assert_eq!(a.pow(5), rat(&[&[1, 5], &[0, 1]]));
        assert!(a.pow(0).is_identity());
    }

    #[test]
    fn inverse_roundtrip() {
        let a = rat(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(rat(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn rref_and_spans() {
        let a = rat(&[&[1, 2], &[2, 4], &[0, 0]]);
        assert_eq!(a.rank(), 1);
        let b = rat(&[&[3], &[6], &[0]]);
        assert!(a.same_column_space(&b));
        let c = rat(&[&[1], &[0], &[0]]);
        assert!(!a.same_column_space(&c));
        let half = Matrix::from_rows(vec![vec![frac(1, 2)], vec![int(1)], vec![int(0)]]);
        assert!(half.same_column_space(&b));
    }

    #[test]
    fn determinant() {
        let m = Matrix::from_rows(vec![
            vec![BigInt::from(2), BigInt::from(-1), BigInt::from(2)],
            vec![BigInt::from(1), BigInt::from(0), BigInt::from(0)],
            vec![BigInt::from(0), BigInt::from(0), BigInt::from(1)],
        ]);
        assert_eq!(m.det(), BigInt::from(1));
    }
}
