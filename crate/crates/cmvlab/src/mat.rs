//! Minimal dense matrix over a [`Scalar`] backend.
//!
//! Hand-rolled rather than pulled from a linear-algebra crate because every
//! routine here must also run over Gaussian rationals, and because the
//! factorization must be pivot-free (see `gaussborel`).

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Scalar> Mat<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
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

    /// Leading `r × c` block.
    pub fn block(&self, r: usize, c: usize) -> Mat<T> {
        assert!(r <= self.rows && c <= self.cols);
        Mat::from_fn(r, c, |i, j| self[(i, j)].clone())
    }

    pub fn transpose(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn adjoint(&self) -> Mat<T> {
        Mat::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn conj(&self) -> Mat<T> {
        Mat::from_fn(self.rows, self.cols, |i, j| self[(i, j)].conj())
    }

    pub fn mul(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!(self.cols, other.rows, "dimension mismatch in Mat::mul");
        let mut out: Mat<T> = Mat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)].clone();
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] = out[(i, j)].clone() + a.clone() * other[(k, j)].clone();
                }
            }
        }
        out
    }

    pub fn matvec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = T::zero();
                for j in 0..self.cols {
                    acc = acc + self[(i, j)].clone() * v[j].clone();
                }
                acc
            })
            .collect()
    }

    pub fn sub(&self, other: &Mat<T>) -> Mat<T> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| {
            self[(i, j)].clone() - other[(i, j)].clone()
        })
    }

    pub fn max_mag(&self) -> f64 {
        self.data.iter().map(|x| x.mag()).fold(0.0, f64::max)
    }

    /// Inverse of a unit lower triangular matrix by forward substitution.
    pub fn invert_unit_lower(&self) -> Mat<T> {
        assert!(self.is_square());
        let n = self.rows;
        let mut inv: Mat<T> = Mat::identity(n);
        // Column-by-column forward solve L x = e_c.
        for c in 0..n {
            for i in (c + 1)..n {
                let mut acc = T::zero();
                for k in c..i {
                    acc = acc + self[(i, k)].clone() * inv[(k, c)].clone();
                }
                inv[(i, c)] = -acc;
            }
        }
        inv
    }

    /// Determinant via Gaussian elimination with partial pivoting (by lossy
    /// magnitude). Exact backends still compute the exact determinant; the
    /// pivot choice only affects conditioning.
    pub fn det(&self) -> T {
        assert!(self.is_square());
        let n = self.rows;
        let mut a = self.clone();
        let mut det = T::one();
        for k in 0..n {
            let mut piv = k;
            let mut best = a[(k, k)].mag();
            for r in (k + 1)..n {
                let m = a[(r, k)].mag();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if a[(piv, k)].is_zero() {
                return T::zero();
            }
            if piv != k {
                a.swap_rows(piv, k);
                det = -det;
            }
            let d = a[(k, k)].clone();
            det = det * d.clone();
            for r in (k + 1)..n {
                let f = a[(r, k)].clone() / d.clone();
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a[(r, c)].clone() - f.clone() * a[(k, c)].clone();
                    a[(r, c)] = v;
                }
            }
        }
        det
    }

    /// Solves `self · x = b` for each column of `b` with partial pivoting.
    pub fn solve(&self, b: &Mat<T>) -> Result<Mat<T>> {
        assert!(self.is_square());
        assert_eq!(self.rows, b.rows);
        let n = self.rows;
        let mut a = self.clone();
        let mut x = b.clone();
        for k in 0..n {
            let mut piv = k;
            let mut best = a[(k, k)].mag();
            for r in (k + 1)..n {
                let m = a[(r, k)].mag();
                if m > best {
                    best = m;
                    piv = r;
                }
            }
            if a[(piv, k)].is_zero() {
                return Err(Error::SingularLeadingBlock(0.0));
            }
            if piv != k {
                a.swap_rows(piv, k);
                x.swap_rows(piv, k);
            }
            let d = a[(k, k)].clone();
            for r in (k + 1)..n {
                let f = a[(r, k)].clone() / d.clone();
                if f.is_zero() {
                    continue;
                }
                for c in k..n {
                    let v = a[(r, c)].clone() - f.clone() * a[(k, c)].clone();
                    a[(r, c)] = v;
                }
                for c in 0..x.cols {
                    let v = x[(r, c)].clone() - f.clone() * x[(k, c)].clone();
                    x[(r, c)] = v;
                }
            }
        }
        for k in (0..n).rev() {
            let d = a[(k, k)].clone();
            for c in 0..x.cols {
                let mut acc = x[(k, c)].clone();
                for j in (k + 1)..n {
                    acc = acc - a[(k, j)].clone() * x[(j, c)].clone();
                }
                x[(k, c)] = acc / d.clone();
            }
        }
        Ok(x)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }
}

impl<T> std::ops::Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.data[r * self.cols + c]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.data[r * self.cols + c]
    }
}
