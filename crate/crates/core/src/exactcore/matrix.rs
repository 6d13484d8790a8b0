use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{BigRat, ExactError};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type IntMat = Matrix<BigInt>;
pub type RatMat = Matrix<BigRat>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, ExactError> {
        if data.len() != rows * cols {
            return Err(ExactError::Dimension("entries length != rows*cols"));
        }
        Ok(Matrix { rows, cols, data })
    }

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

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    pub fn map<U, F: FnMut(&T) -> U>(&self, f: F) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self, ExactError> {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        if rows.iter().any(|x| x.len() != c) {
            return Err(ExactError::Dimension("ragged rows"));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.iter().flat_map(|x| x.iter().cloned()).collect(),
        })
    }

    pub fn col(&self, j: usize) -> Vec<T> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, data }
    }

    pub fn from_cols(cols: &[Vec<T>]) -> Result<Self, ExactError> {
        Ok(Self::from_rows(cols)?.transpose())
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: rows.len(), cols: cols.len(), data }
    }
}

impl<T: Clone + Zero + One + PartialEq> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, T::one());
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        x.is_one()
                    } else {
                        x.is_zero()
                    }
                })
            })
    }

    /// Block-diagonal sum.
    pub fn block_diag(&self, other: &Self) -> Self {
        let n = self.rows + other.rows;
        let m = self.cols + other.cols;
        let mut out = Self::zeros(n, m);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                out.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        out
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero + One + PartialEq,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T> + Sub<&'a T, Output = T>,
{
    pub fn mul_mat(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.cols != rhs.rows {
            return Err(ExactError::Dimension("inner dimensions differ"));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + &(a * rhs.get(k, j));
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[T]) -> Result<Vec<T>, ExactError> {
        if v.len() != self.cols {
            return Err(ExactError::Dimension("vector length != cols"));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .fold(T::zero(), |acc, (a, b)| &acc + &(a * b))
            })
            .collect())
    }

    pub fn add_mat(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactError::Dimension("shapes differ"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn sub_mat(&self, rhs: &Self) -> Result<Self, ExactError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(ExactError::Dimension("shapes differ"));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x * s)
    }

    pub fn pow(&self, e: u32) -> Result<Self, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Dimension("power of non-square matrix"));
        }
        let mut acc = Self::identity(self.rows);
        for _ in 0..e {
            acc = acc.mul_mat(self)?;
        }
        Ok(acc)
    }

    /// `selfᵀ · g · self`, the congruence action on a Gram matrix.
    pub fn congruence(&self, g: &Self) -> Result<Self, ExactError> {
        self.transpose().mul_mat(g)?.mul_mat(self)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }
}

impl<T: Neg<Output = T> + Clone> Neg for Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Self::Output {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.into_iter().map(|x| -x).collect(),
        }
    }
}

impl IntMat {
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Self {
        assert_eq!(data.len(), rows * cols, "entries length != rows*cols");
        Matrix { rows, cols, data: data.iter().map(|&x| BigInt::from(x)).collect() }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * c);
        for r in rows {
            assert_eq!(r.len(), c, "ragged rows");
            data.extend(r.iter().map(|&x| BigInt::from(x)));
        }
        Matrix { rows: rows.len(), cols: c, data }
    }

    pub fn to_rat(&self) -> RatMat {
        self.map(|x| BigRat::from_integer(x.clone()))
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Dimension("determinant of non-square matrix"));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        Ok(sign * a.get(n - 1, n - 1))
    }

    pub fn is_unimodular(&self) -> bool {
        matches!(self.det(), Ok(d) if num_traits::Signed::abs(&d).is_one())
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse_unimodular(&self) -> Result<IntMat, ExactError> {
        let inv = self.to_rat().inverse()?;
        if inv.entries().iter().any(|x| !x.is_integer()) {
            return Err(ExactError::Singular);
        }
        Ok(inv.map(|x| x.to_integer()))
    }

    pub fn to_i64_rows(&self) -> Vec<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.to_rows()
            .into_iter()
            .map(|r| r.iter().map(|x| x.to_i64().expect("entry exceeds i64")).collect())
            .collect()
    }
}

impl RatMat {
    /// Gauss–Jordan inverse over Q.
    pub fn inverse(&self) -> Result<RatMat, ExactError> {
        if !self.is_square() {
            return Err(ExactError::Dimension("inverse of non-square matrix"));
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = RatMat::identity(n);
        for k in 0..n {
            let p = (k..n).find(|&i| !a.get(i, k).is_zero()).ok_or(ExactError::Singular)?;
            a.swap_rows(p, k);
            inv.swap_rows(p, k);
            let piv = a.get(k, k).clone();
            for j in 0..n {
                let v = a.get(k, j) / &piv;
                a.set(k, j, v);
                let w = inv.get(k, j) / &piv;
                inv.set(k, j, w);
            }
            for i in 0..n {
                if i == k || a.get(i, k).is_zero() {
                    continue;
                }
                let f = a.get(i, k).clone();
                for j in 0..n {
                    let v = a.get(i, j) - &(&f * a.get(k, j));
                    a.set(i, j, v);
                    let w = inv.get(i, j) - &(&f * inv.get(k, j));
                    inv.set(i, j, w);
                }
            }
        }
        Ok(inv)
    }

    /// Solves `self · x = b` for square nonsingular `self`.
    pub fn solve(&self, b: &[BigRat]) -> Result<Vec<BigRat>, ExactError> {
        self.inverse()?.mul_vec(b)
    }

    /// Rank by Gaussian elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.clone();
        let mut r = 0;
        for c in 0..a.cols {
            let Some(p) = (r..a.rows).find(|&i| !a.get(i, c).is_zero()) else {
                continue;
            };
            a.swap_rows(p, r);
            for i in r + 1..a.rows {
                if a.get(i, c).is_zero() {
                    continue;
                }
                let f = a.get(i, c) / a.get(r, c);
                for j in c..a.cols {
                    let v = a.get(i, j) - &(&f * a.get(r, j));
                    a.set(i, j, v);
                }
            }
            r += 1;
            if r == a.rows {
                break;
            }
        }
        r
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(|x| x.is_integer())
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bareiss_determinant() {
        let m = IntMat::from_i64_rows(&[&[2, 1], &[1, -2]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-5));
        let m = IntMat::from_i64_rows(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det().unwrap(), BigInt::from(-2));
        assert_eq!(IntMat::zeros(3, 3).det().unwrap(), BigInt::zero());
    }

    #[test]
    fn unimodular_inverse_round_trip() {
        let m = IntMat::from_i64_rows(&[&[4, 1], &[-5, -1]]);
        let inv = m.inverse_unimodular().unwrap();
        assert!(m.mul_mat(&inv).unwrap().is_identity());
        assert!(IntMat::from_i64_rows(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_err());
    }

    #[test]
    fn rank_counts_independent_rows() {
        let m = IntMat::from_i64_rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]).to_rat();
        assert_eq!(m.rank(), 2);
    }
}
