//! Small dense generalized eigensolvers used to check the inclusion theorems.
//!
//! Three independent routes are provided so that each can validate the others:
//! interpolation of `det(A - zB)` ([`eigenvalues_charpoly`]), QR iteration on
//! `B^{-1} A` ([`eigenvalues_qr`]), and the closed form for the tridiagonal
//! Toeplitz test pencil ([`tridiag_analytic`]).

pub mod charpoly;
pub mod lu;
pub mod matching;
pub mod qr;

use num_complex::Complex;
use serde::{Deserialize, Serialize};

pub use charpoly::eigenvalues_charpoly;
pub use lu::Lu;
pub use matching::match_within;

use crate::error::{Error, Result};
use crate::model::{ExtendedComplex, Pencil};
use crate::scalar::{lit, Real};

/// Largest pencil accepted by the QR oracle.
pub const QR_MAX_N: usize = 400;
/// `B` is rejected when its condition estimate exceeds `1 / (n * COND_TOL)`.
pub const COND_TOL: f64 = 1e-12;
/// Relative size below which an eigenvalue of `A^{-1} B` counts as zero.
pub const ZERO_EIG_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum<T> {
    pub finite: Vec<Complex<T>>,
    pub infinite_count: usize,
}

impl<T: Real> Spectrum<T> {
    pub fn len(&self) -> usize {
        self.finite.len() + self.infinite_count
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All eigenvalues as points of the extended plane, infinite ones last.
    pub fn points(&self) -> Vec<ExtendedComplex<T>> {
        self.finite
            .iter()
            .map(|&z| ExtendedComplex::Finite(z))
            .chain(std::iter::repeat_n(ExtendedComplex::Infinity, self.infinite_count))
            .collect()
    }

    /// Finite eigenvalues ordered by real part, then imaginary part.
    pub fn sorted(mut self) -> Self {
        self.finite.sort_by(|a, b| {
            a.re.partial_cmp(&b.re)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then(a.im.partial_cmp(&b.im).unwrap_or(std::cmp::Ordering::Equal))
        });
        self
    }

    pub fn max_modulus(&self) -> Option<T> {
        self.finite.iter().map(|z| z.norm()).reduce(T::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Charpoly,
    Qr,
    Auto,
}

impl std::str::FromStr for Method {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "charpoly" => Ok(Method::Charpoly),
            "qr" => Ok(Method::Qr),
            "auto" => Ok(Method::Auto),
            other => Err(format!("unknown method '{other}' (expected charpoly, qr or auto)")),
        }
    }
}

/// Condition estimate `||M||_inf ||M^{-1}||_inf`, `+inf` if `M` is singular.
pub fn condition_estimate<T: Real>(lu: &Lu<T>, m: &crate::matrix::CMatrix<T>) -> T {
    match lu.inverse() {
        Some(inv) => m.norm_inf() * inv.norm_inf(),
        None => T::infinity(),
    }
}

fn well_conditioned<T: Real>(m: &crate::matrix::CMatrix<T>) -> Result<Lu<T>> {
    let n = m.nrows();
    let lu = Lu::new(m);
    let estimate = condition_estimate(&lu, m);
    let limit = T::one() / (lit::<T>(n as f64) * lit(COND_TOL));
    if !(estimate <= limit) {
        return Err(Error::IllConditionedB { estimate: estimate.to_f64().unwrap_or(f64::INFINITY) });
    }
    Ok(lu)
}

/// Eigenvalues of `B^{-1} A` by Hessenberg reduction and shifted QR.
pub fn eigenvalues_qr<T: Real>(p: &Pencil<T>) -> Result<Spectrum<T>> {
    let n = p.n();
    if n > QR_MAX_N {
        return Err(Error::TooLarge { n, limit: QR_MAX_N });
    }
    let lu = well_conditioned(p.b())?;
    let m = lu.solve_matrix(p.a()).ok_or(Error::IllConditionedB { estimate: f64::INFINITY })?;
    Ok(Spectrum { finite: qr::eigenvalues(&m)?, infinite_count: 0 })
}

/// Eigenvalues through `A^{-1} B`: each eigenvalue `mu` maps to `1 / mu`,
/// and `mu` below `ZERO_EIG_TOL * ||A^{-1} B||_inf` counts as infinite.
/// Requires a well-conditioned `A`; handles singular `B`.
pub fn eigenvalues_qr_inverted<T: Real>(p: &Pencil<T>) -> Result<Spectrum<T>> {
    let n = p.n();
    if n > QR_MAX_N {
        return Err(Error::TooLarge { n, limit: QR_MAX_N });
    }
    let lu = well_conditioned(p.a())?;
    let m = lu.solve_matrix(p.b()).ok_or(Error::IllConditionedB { estimate: f64::INFINITY })?;
    let cutoff = lit::<T>(ZERO_EIG_TOL) * m.norm_inf();
    let mut spectrum = Spectrum { finite: Vec::new(), infinite_count: 0 };
    for mu in qr::eigenvalues(&m)? {
        if mu.norm() <= cutoff {
            spectrum.infinite_count += 1;
        } else {
            spectrum.finite.push(mu.inv());
        }
    }
    Ok(spectrum)
}

/// QR when `B` is well conditioned, otherwise interpolation for small `n`,
/// otherwise QR on the inverted pencil.
pub fn eigenvalues_auto<T: Real>(p: &Pencil<T>) -> Result<Spectrum<T>> {
    match eigenvalues_qr(p) {
        Err(Error::IllConditionedB { .. }) if p.n() <= charpoly::MAX_N => eigenvalues_charpoly(p),
        Err(Error::IllConditionedB { .. }) => eigenvalues_qr_inverted(p),
        other => other,
    }
}

pub fn eigenvalues<T: Real>(p: &Pencil<T>, method: Method) -> Result<Spectrum<T>> {
    match method {
        Method::Charpoly => eigenvalues_charpoly(p),
        Method::Qr => eigenvalues_qr(p),
        Method::Auto => eigenvalues_auto(p),
    }
}

/// Closed-form spectrum of `tridiag(a, 4, a) - z tridiag(b, 4, b)`:
/// `(4 + 2a cos(k pi/(n+1))) / (4 + 2b cos(k pi/(n+1)))`, `k = 1..n`.
///
/// Both matrices are diagonalized by the same sine basis, which is what makes
/// this an oracle independent of any iterative solver.
pub fn tridiag_analytic<T: Real>(n: usize, a: T, b: T) -> Result<Spectrum<T>> {
    let (two, four) = (lit::<T>(2.0), lit::<T>(4.0));
    let mut finite = Vec::with_capacity(n);
    for k in 1..=n {
        let c = (T::PI() * lit(k as f64) / lit((n + 1) as f64)).cos();
        let den = four + two * b * c;
        if den.abs() <= lit::<T>(8.0) * T::epsilon() * (four + (two * b).abs()) {
            return Err(Error::InfiniteAnalyticEigenvalue { k });
        }
        finite.push(Complex::new((four + two * a * c) / den, T::zero()));
    }
    Ok(Spectrum { finite, infinite_count: 0 })
}
