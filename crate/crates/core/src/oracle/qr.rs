//! Eigenvalues of a dense complex matrix: Householder reduction to upper
//! Hessenberg form followed by single-shift QR iteration with Wilkinson shifts.

use num_complex::Complex;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{lit, real, Real};

/// Relative subdiagonal deflation threshold.
pub const DEFLATION_TOL: f64 = 1e-13;

/// Reduces `h` to upper Hessenberg form by unitary similarity, in place.
pub fn hessenberg<T: Real>(h: &mut CMatrix<T>) {
    let n = h.nrows();
    if n < 3 {
        return;
    }
    for k in 0..n - 2 {
        let norm = (k + 1..n).fold(T::zero(), |s, i| s + h[(i, k)].norm_sqr()).sqrt();
        if norm == T::zero() {
            continue;
        }
        let x0 = h[(k + 1, k)];
        let phase = if x0.norm() > T::zero() { x0 / x0.norm() } else { real(T::one()) };
        let alpha = -phase * norm;
        // v = x - alpha e1, normalized
        let mut v: Vec<Complex<T>> = (k + 1..n).map(|i| h[(i, k)]).collect();
        v[0] -= alpha;
        let vnorm = v.iter().fold(T::zero(), |s, z| s + z.norm_sqr()).sqrt();
        if vnorm == T::zero() {
            continue;
        }
        for z in &mut v {
            *z /= vnorm;
        }
        let two = lit::<T>(2.0);
        // H <- (I - 2 v v^H) H
        for j in 0..n {
            let dot = v.iter().enumerate().fold(Complex::<T>::zero(), |s, (t, vi)| s + vi.conj() * h[(k + 1 + t, j)]);
            for (t, vi) in v.iter().enumerate() {
                h[(k + 1 + t, j)] -= vi * dot * two;
            }
        }
        // H <- H (I - 2 v v^H)
        for i in 0..n {
            let dot = v.iter().enumerate().fold(Complex::<T>::zero(), |s, (t, vi)| s + h[(i, k + 1 + t)] * vi);
            for (t, vi) in v.iter().enumerate() {
                h[(i, k + 1 + t)] -= dot * vi.conj() * two;
            }
        }
        for i in k + 2..n {
            h[(i, k)] = Complex::zero();
        }
    }
}

/// Givens rotation `G = [[c, s], [-conj(s), c]]` with `G [a; b] = [r; 0]`.
fn givens<T: Real>(a: Complex<T>, b: Complex<T>) -> (T, Complex<T>) {
    let an = a.norm();
    let bn = b.norm();
    if bn == T::zero() {
        return (T::one(), Complex::zero());
    }
    if an == T::zero() {
        return (T::zero(), real(T::one()));
    }
    let r = an.hypot(bn);
    (an / r, (a / an) * b.conj() / r)
}

/// Eigenvalue of the 2x2 block `[[a, b], [c, d]]` closest to `d`.
fn wilkinson_shift<T: Real>(a: Complex<T>, b: Complex<T>, c: Complex<T>, d: Complex<T>) -> Complex<T> {
    let half = lit::<T>(0.5);
    let mean = (a + d) * half;
    let diff = (a - d) * half;
    let disc = (diff * diff + b * c).sqrt();
    let (l1, l2) = (mean + disc, mean - disc);
    if (l1 - d).norm() <= (l2 - d).norm() {
        l1
    } else {
        l2
    }
}

/// Eigenvalues of an upper Hessenberg matrix, destroying `h`.
///
/// Fails with [`Error::NoConvergence`] after `50 n` QR sweeps.
pub fn hessenberg_eigenvalues<T: Real>(mut h: CMatrix<T>) -> Result<Vec<Complex<T>>> {
    let n = h.nrows();
    if n == 0 {
        return Ok(Vec::new());
    }
    let defl = lit::<T>(DEFLATION_TOL);
    let floor = T::epsilon() * h.norm_inf().max(T::min_positive_value());
    let max_iter = 50 * n;
    let mut total = 0usize;
    let mut since_deflation = 0usize;
    let mut hi = n - 1;
    while hi > 0 {
        let mut lo = hi;
        while lo > 0 {
            let sub = h[(lo, lo - 1)].norm();
            let scale = h[(lo - 1, lo - 1)].norm() + h[(lo, lo)].norm();
            if sub <= defl * scale || sub <= floor {
                h[(lo, lo - 1)] = Complex::zero();
                break;
            }
            lo -= 1;
        }
        if lo == hi {
            hi -= 1;
            since_deflation = 0;
            continue;
        }
        total += 1;
        since_deflation += 1;
        if total > max_iter {
            return Err(Error::NoConvergence { iterations: total });
        }
        let shift = if since_deflation % 11 == 10 {
            // exceptional shift to break cycles
            let w = h[(hi, hi - 1)].norm() + if hi >= 2 { h[(hi - 1, hi - 2)].norm() } else { T::zero() };
            h[(hi, hi)] + real(w * lit(0.75))
        } else {
            wilkinson_shift(h[(hi - 1, hi - 1)], h[(hi - 1, hi)], h[(hi, hi - 1)], h[(hi, hi)])
        };
        qr_sweep(&mut h, lo, hi, shift);
    }
    Ok(h.diag())
}

/// One shifted QR step `H - sI = QR, H <- RQ + sI` on the window `lo..=hi`.
fn qr_sweep<T: Real>(h: &mut CMatrix<T>, lo: usize, hi: usize, shift: Complex<T>) {
    for k in lo..=hi {
        h[(k, k)] -= shift;
    }
    let mut rots = Vec::with_capacity(hi - lo);
    for k in lo..hi {
        let (c, s) = givens(h[(k, k)], h[(k + 1, k)]);
        for j in k..=hi {
            let (x, y) = (h[(k, j)], h[(k + 1, j)]);
            h[(k, j)] = x * c + s * y;
            h[(k + 1, j)] = -s.conj() * x + y * c;
        }
        rots.push((c, s));
    }
    for (off, &(c, s)) in rots.iter().enumerate() {
        let k = lo + off;
        for i in lo..=(k + 1).min(hi) {
            let (x, y) = (h[(i, k)], h[(i, k + 1)]);
            h[(i, k)] = x * c + y * s.conj();
            h[(i, k + 1)] = -x * s + y * c;
        }
    }
    for k in lo..=hi {
        h[(k, k)] += shift;
    }
}

/// All eigenvalues of a general square complex matrix.
pub fn eigenvalues<T: Real>(m: &CMatrix<T>) -> Result<Vec<Complex<T>>> {
    let mut h = m.clone();
    hessenberg(&mut h);
    hessenberg_eigenvalues(h)
}
