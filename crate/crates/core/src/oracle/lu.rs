//! Complex LU factorization with partial pivoting.

use num_complex::Complex;
use num_traits::{One, Zero};

use crate::matrix::CMatrix;
use crate::scalar::Real;

#[derive(Clone, Debug)]
pub struct Lu<T> {
    lu: CMatrix<T>,
    perm: Vec<usize>,
    odd: bool,
}

impl<T: Real> Lu<T> {
    pub fn new(m: &CMatrix<T>) -> Self {
        assert!(m.is_square());
        let n = m.nrows();
        let mut lu = m.clone();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut odd = false;
        for k in 0..n {
            let (p, best) =
                (k..n).map(|i| (i, lu[(i, k)].norm())).fold((k, T::zero()), |acc, x| if x.1 > acc.1 { x } else { acc });
            if p != k {
                for j in 0..n {
                    let t = lu[(k, j)];
                    lu[(k, j)] = lu[(p, j)];
                    lu[(p, j)] = t;
                }
                perm.swap(k, p);
                odd = !odd;
            }
            if best == T::zero() {
                continue;
            }
            let pivot = lu[(k, k)];
            for i in k + 1..n {
                let f = lu[(i, k)] / pivot;
                lu[(i, k)] = f;
                if f.is_zero() {
                    continue;
                }
                for j in k + 1..n {
                    let t = lu[(k, j)];
                    lu[(i, j)] -= f * t;
                }
            }
        }
        Lu { lu, perm, odd }
    }

    pub fn n(&self) -> usize {
        self.lu.nrows()
    }

    pub fn det(&self) -> Complex<T> {
        let d = (0..self.n()).fold(Complex::one(), |acc, i| acc * self.lu[(i, i)]);
        if self.odd {
            -d
        } else {
            d
        }
    }

    /// Smallest pivot modulus.
    pub fn min_pivot(&self) -> T {
        (0..self.n()).map(|i| self.lu[(i, i)].norm()).fold(T::infinity(), T::min)
    }

    pub fn is_singular(&self) -> bool {
        self.min_pivot() == T::zero()
    }

    /// Solves `M x = rhs`; `None` when a pivot is exactly zero.
    pub fn solve(&self, rhs: &[Complex<T>]) -> Option<Vec<Complex<T>>> {
        let n = self.n();
        assert_eq!(rhs.len(), n);
        if self.is_singular() {
            return None;
        }
        let mut x: Vec<Complex<T>> = self.perm.iter().map(|&p| rhs[p]).collect();
        for i in 0..n {
            for k in 0..i {
                let t = self.lu[(i, k)] * x[k];
                x[i] -= t;
            }
        }
        for i in (0..n).rev() {
            for k in i + 1..n {
                let t = self.lu[(i, k)] * x[k];
                x[i] -= t;
            }
            x[i] /= self.lu[(i, i)];
        }
        Some(x)
    }

    /// Solves `M X = rhs` column by column.
    pub fn solve_matrix(&self, rhs: &CMatrix<T>) -> Option<CMatrix<T>> {
        let n = self.n();
        let mut out = CMatrix::zeros(n, rhs.ncols());
        for j in 0..rhs.ncols() {
            let col: Vec<_> = (0..n).map(|i| rhs[(i, j)]).collect();
            let x = self.solve(&col)?;
            for i in 0..n {
                out[(i, j)] = x[i];
            }
        }
        Some(out)
    }

    pub fn inverse(&self) -> Option<CMatrix<T>> {
        self.solve_matrix(&CMatrix::identity(self.n()))
    }
}
