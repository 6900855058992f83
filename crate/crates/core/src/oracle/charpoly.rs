//! Spectrum through the characteristic polynomial `det(A - zB)`.
//!
//! The determinant is sampled at `n + 1` equispaced points on a circle of
//! radius `rho = 1 + ||A||_inf / max(eps, ||B||_inf)`. A discrete Fourier
//! transform of the samples gives the coefficients of the polynomial in the
//! scaled variable `z / rho` exactly (up to rounding) because the degree is
//! at most `n`. Trailing coefficients below `DEGREE_TOL` times the largest
//! one are dropped; each dropped degree is an infinite eigenvalue. Finite
//! roots come from the companion matrix and are then polished with damped
//! Newton steps on the determinant itself.

use num_complex::Complex;
use num_traits::Zero;

use super::lu::Lu;
use super::qr::hessenberg_eigenvalues;
use super::Spectrum;
use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::model::Pencil;
use crate::scalar::{lit, real, Real};

/// Relative threshold for the numerical degree of `det(A - zB)`.
pub const DEGREE_TOL: f64 = 1e-10;
/// Largest pencil accepted by the interpolation oracle.
pub const MAX_N: usize = 16;
/// Newton polishing steps per root.
pub const POLISH_STEPS: usize = 2;

/// Radius of the sampling circle.
pub fn sample_radius<T: Real>(p: &Pencil<T>) -> T {
    T::one() + p.a().norm_inf() / T::epsilon().max(p.b().norm_inf())
}

/// Coefficients of `det(A - zB)` in the scaled variable `mu = z / radius`,
/// lowest degree first, together with the raw samples.
pub fn scaled_coefficients<T: Real>(p: &Pencil<T>, radius: T) -> (Vec<Complex<T>>, Vec<Complex<T>>, Vec<T>) {
    let n = p.n();
    let count = n + 1;
    let nodes: Vec<Complex<T>> =
        (0..count).map(|k| Complex::from_polar(T::one(), T::TAU() * lit(k as f64) / lit(count as f64))).collect();
    let mut dets = Vec::with_capacity(count);
    let mut hadamard = Vec::with_capacity(count);
    for w in &nodes {
        let m = p.a().shifted(*w * radius, p.b());
        dets.push(Lu::new(&m).det());
        hadamard.push(
            (0..n).fold(T::one(), |acc, i| acc * m.row(i).iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt()),
        );
    }
    let inv = T::one() / lit(count as f64);
    let coeffs = (0..count)
        .map(|m| nodes.iter().zip(&dets).fold(Complex::zero(), |s, (w, d)| s + d * w.powu(m as u32).conj()) * inv)
        .collect();
    (coeffs, dets, hadamard)
}

pub fn eigenvalues_charpoly<T: Real>(p: &Pencil<T>) -> Result<Spectrum<T>> {
    let n = p.n();
    if n > MAX_N {
        return Err(Error::TooLarge { n, limit: MAX_N });
    }
    let tol = lit::<T>(DEGREE_TOL);
    let radius = sample_radius(p);
    let (coeffs, dets, hadamard) = scaled_coefficients(p, radius);
    if dets.iter().zip(&hadamard).all(|(d, h)| d.norm() <= tol * *h) {
        return Err(Error::SingularPencil);
    }
    let cmax = coeffs.iter().map(|c| c.norm()).fold(T::zero(), T::max);
    let degree = (0..coeffs.len()).rev().find(|&m| coeffs[m].norm() > tol * cmax).unwrap_or(0);
    if degree == 0 {
        return Ok(Spectrum { finite: Vec::new(), infinite_count: n });
    }
    let lead = coeffs[degree];
    let companion = CMatrix::from_fn(degree, degree, |i, j| {
        if i == 0 {
            -coeffs[degree - 1 - j] / lead
        } else if i == j + 1 {
            real(T::one())
        } else {
            Complex::zero()
        }
    });
    let roots: Vec<Complex<T>> = hessenberg_eigenvalues(companion)?.into_iter().map(|mu| mu * radius).collect();
    let finite = (0..roots.len()).map(|k| polish(p, &roots, k)).collect();
    Ok(Spectrum { finite, infinite_count: n - degree })
}

/// Damped Newton on `det(A - zB)` starting from `roots[k]`.
///
/// `d/dz det(A - zB) = -det(A - zB) tr((A - zB)^{-1} B)`, so the Newton
/// update is `z + 1 / tr((A - zB)^{-1} B)`. A step is accepted only if it
/// lowers `|det|` and stays within half the distance to the nearest other
/// root estimate.
fn polish<T: Real>(p: &Pencil<T>, roots: &[Complex<T>], k: usize) -> Complex<T> {
    let mut z = roots[k];
    let half = lit::<T>(0.5);
    let reach = roots
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != k)
        .map(|(_, r)| (r - roots[k]).norm())
        .fold(T::infinity(), T::min)
        * half;
    for _ in 0..POLISH_STEPS {
        let lu = Lu::new(&p.a().shifted(z, p.b()));
        if lu.is_singular() {
            break;
        }
        let det = lu.det().norm();
        let Some(x) = lu.solve_matrix(p.b()) else { break };
        let trace = x.diag().iter().fold(Complex::zero(), |s, d| s + d);
        if trace.norm() == T::zero() {
            break;
        }
        let step = trace.inv();
        let mut t = T::one();
        let mut moved = false;
        for _ in 0..4 {
            let cand = z + step * t;
            if (cand - roots[k]).norm() <= reach && Lu::new(&p.a().shifted(cand, p.b())).det().norm() < det {
                z = cand;
                moved = true;
                break;
            }
            t *= half;
        }
        if !moved {
            break;
        }
    }
    z
}
