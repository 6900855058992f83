//! Named test pencils and seeded random pencil generators.

use num_complex::Complex;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::matrix::CMatrix;
use crate::model::Pencil;
use crate::scalar::{lit, real, Real};

/// `A = [[2,3],[3,2]]`, `B = [[2,1],[1,2]]`, eigenvalues `-1` and `5/3`.
pub fn example1<T: Real>() -> Pencil<T> {
    let a = CMatrix::from_real_rows(&[&[2.0, 3.0], &[3.0, 2.0]]).unwrap();
    let b = CMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
    Pencil::new(a, b).unwrap()
}

/// Symmetric tridiagonal Toeplitz matrix with diagonal `d` and off-diagonal `e`.
pub fn tridiag_toeplitz<T: Real>(n: usize, d: T, e: T) -> CMatrix<T> {
    CMatrix::from_fn(n, n, |i, j| {
        if i == j {
            real(d)
        } else if i.abs_diff(j) == 1 {
            real(e)
        } else {
            real(T::zero())
        }
    })
}

/// `A = tridiag(a, 4, a)`, `B = tridiag(b, 4, b)`.
///
/// # Panics
/// If `n == 0`.
pub fn testmat<T: Real>(n: usize, a: T, b: T) -> Pencil<T> {
    let four = lit::<T>(4.0);
    Pencil::new(tridiag_toeplitz(n, four, a), tridiag_toeplitz(n, four, b)).expect("n must be positive")
}

pub fn gaussian<T: Real, R: Rng + ?Sized>(rng: &mut R) -> Complex<T> {
    let re: f64 = rng.sample(StandardNormal);
    let im: f64 = rng.sample(StandardNormal);
    Complex::new(lit(re), lit(im))
}

pub fn gaussian_matrix<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> CMatrix<T> {
    CMatrix::from_fn(n, n, |_, _| gaussian(rng))
}

/// Gaussian pencil where every row is strictly diagonally dominant in `A`,
/// in `B`, or in both. The boosted diagonal keeps its random phase.
pub fn random_dominant_pencil<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize) -> Pencil<T> {
    let mut a = gaussian_matrix::<T, _>(rng, n);
    let mut b = gaussian_matrix::<T, _>(rng, n);
    for i in 0..n {
        let which = rng.random_range(0..3u8);
        if which != 1 {
            boost_diagonal(&mut a, i, rng);
        }
        if which != 0 {
            boost_diagonal(&mut b, i, rng);
        }
    }
    Pencil::new(a, b).unwrap()
}

/// Rescales `m[i][i]` to `(1 + u) * off-diagonal row sum + 0.1` with `u ~ U(0.05, 1)`.
pub fn boost_diagonal<T: Real, R: Rng + ?Sized>(m: &mut CMatrix<T>, i: usize, rng: &mut R) {
    let n = m.ncols();
    let off = (0..n).filter(|&j| j != i).fold(T::zero(), |s, j| s + m[(i, j)].norm());
    let u: f64 = rng.random_range(0.05..1.0);
    let target = off * lit(1.0 + u) + lit(0.1);
    let d = m[(i, i)];
    let phase = if d.norm() > T::zero() { d / d.norm() } else { real(T::one()) };
    m[(i, i)] = phase * target;
}

/// Pencil with a strictly diagonally dominant `B` and diagonal ratios
/// `a_ii / b_ii` spread along a line with spacing `gap`; off-diagonal entries
/// of both matrices are scaled by `coupling`.
pub fn random_separated_pencil<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize, gap: f64, coupling: f64) -> Pencil<T> {
    let c = lit::<T>(coupling);
    let mut a = CMatrix::from_fn(n, n, |i, j| if i == j { real(T::zero()) } else { gaussian::<T, _>(rng) * c });
    let mut b = CMatrix::from_fn(n, n, |i, j| if i == j { real(T::zero()) } else { gaussian::<T, _>(rng) * c });
    for i in 0..n {
        b[(i, i)] = real(T::one());
        boost_diagonal(&mut b, i, rng);
        let ratio: Complex<T> = Complex::new(lit(gap * i as f64), T::zero()) + gaussian::<T, _>(rng) * lit::<T>(0.1);
        a[(i, i)] = ratio * b[(i, i)];
    }
    Pencil::new(a, b).unwrap()
}

/// `B = G diag(1,..,1,0,..,0) H` with `deficiency` trailing zeros, `A` Gaussian.
/// Generically the pencil is regular with exactly `deficiency` infinite eigenvalues.
pub fn random_rank_deficient_pencil<T: Real, R: Rng + ?Sized>(rng: &mut R, n: usize, deficiency: usize) -> Pencil<T> {
    assert!(deficiency <= n);
    let a = gaussian_matrix::<T, _>(rng, n);
    let g = gaussian_matrix::<T, _>(rng, n);
    let h = gaussian_matrix::<T, _>(rng, n);
    let d = CMatrix::from_fn(n, n, |i, j| if i == j && i < n - deficiency { real(T::one()) } else { real(T::zero()) });
    Pencil::new(a, g.matmul(&d).matmul(&h)).unwrap()
}
