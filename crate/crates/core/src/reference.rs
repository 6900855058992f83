//! Pointwise membership for two earlier inclusion sets: the chordal-metric
//! regions `G_i` and the regions `K_i = {z : |b_ii z - a_ii| <= sum_{j!=i} |b_ij z - a_ij|}`.
//!
//! Neither set has a convenient closed-form boundary, so they are only
//! evaluated point by point (and rasterized for figures).
//!
//! `K_i` at infinity: dividing the defining inequality by `|z|` and letting
//! `|z| -> inf` gives `|b_ii| <= sum_{j!=i} |b_ij|`, i.e. infinity belongs to
//! `K_i` exactly when row `i` of `B` is not strictly diagonally dominant.

use num_complex::Complex;

use crate::error::Result;
use crate::model::{ExtendedComplex, Pencil};
use crate::scalar::{is_zero, Real};

/// Chordal distance on the Riemann sphere; lies in `[0, 1]`.
pub fn chordal_distance<T: Real>(x: &ExtendedComplex<T>, y: &ExtendedComplex<T>) -> T {
    let one = T::one();
    match (x, y) {
        (ExtendedComplex::Infinity, ExtendedComplex::Infinity) => T::zero(),
        (ExtendedComplex::Finite(z), ExtendedComplex::Infinity)
        | (ExtendedComplex::Infinity, ExtendedComplex::Finite(z)) => one / (one + z.norm_sqr()).sqrt(),
        (ExtendedComplex::Finite(u), ExtendedComplex::Finite(v)) => {
            (u - v).norm() / ((one + u.norm_sqr()).sqrt() * (one + v.norm_sqr()).sqrt())
        }
    }
}

/// Chordal radius of row `i`; `+inf` when `a_ii = b_ii = 0`.
pub fn stewart_radius<T: Real>(p: &Pencil<T>, i: usize) -> Result<T> {
    p.check_row(i)?;
    Ok(RowSets::row(p, i).chordal_radius)
}

pub fn in_g<T: Real>(p: &Pencil<T>, i: usize, z: &ExtendedComplex<T>) -> Result<bool> {
    p.check_row(i)?;
    Ok(RowSets::row(p, i).in_g(z))
}

pub fn in_k<T: Real>(p: &Pencil<T>, i: usize, z: &ExtendedComplex<T>) -> Result<bool> {
    p.check_row(i)?;
    Ok(RowSets::row(p, i).in_k(z))
}

/// Precomputed per-row data for repeated `G_i` / `K_i` queries.
///
/// Off-diagonal zero pairs are dropped, so banded pencils are cheap to rasterize.
#[derive(Clone, Debug)]
pub struct RowSets<T> {
    a_diag: Complex<T>,
    b_diag: Complex<T>,
    off: Vec<(Complex<T>, Complex<T>)>,
    b_dominant: bool,
    pub chordal_radius: T,
    g_center: Option<ExtendedComplex<T>>,
}

impl<T: Real> RowSets<T> {
    pub fn row(p: &Pencil<T>, i: usize) -> Self {
        let n = p.n();
        let a_diag = p.a()[(i, i)];
        let b_diag = p.b()[(i, i)];
        let off: Vec<_> = (0..n)
            .filter(|&j| j != i)
            .map(|j| (p.a()[(i, j)], p.b()[(i, j)]))
            .filter(|(x, y)| !is_zero(*x) || !is_zero(*y))
            .collect();
        let off_a = off.iter().fold(T::zero(), |s, (x, _)| s + x.norm());
        let off_b = off.iter().fold(T::zero(), |s, (_, y)| s + y.norm());
        let diag_sq = a_diag.norm_sqr() + b_diag.norm_sqr();
        let chordal_radius =
            if diag_sq == T::zero() { T::infinity() } else { ((off_a * off_a + off_b * off_b) / diag_sq).sqrt() };
        let g_center = if !is_zero(b_diag) {
            Some(ExtendedComplex::Finite(a_diag / b_diag))
        } else if !is_zero(a_diag) {
            Some(ExtendedComplex::Infinity)
        } else {
            None
        };
        RowSets { a_diag, b_diag, off, b_dominant: b_diag.norm() > off_b, chordal_radius, g_center }
    }

    pub fn all(p: &Pencil<T>) -> Vec<Self> {
        (0..p.n()).map(|i| Self::row(p, i)).collect()
    }

    pub fn in_g(&self, z: &ExtendedComplex<T>) -> bool {
        if self.chordal_radius >= T::one() {
            return true;
        }
        match &self.g_center {
            Some(c) => chordal_distance(z, c) <= self.chordal_radius,
            None => true,
        }
    }

    pub fn in_k(&self, z: &ExtendedComplex<T>) -> bool {
        self.near_k(z, T::zero())
    }

    /// True if some point within Euclidean distance `h` of `z` may lie in `G_i`.
    ///
    /// Uses `chi(w, c) <= chi(z, c) + |w - z|`, so it never misses a point of
    /// the set; `h = 0` is exact membership.
    pub fn near_g(&self, z: &ExtendedComplex<T>, h: T) -> bool {
        if self.chordal_radius >= T::one() {
            return true;
        }
        match &self.g_center {
            Some(c) => chordal_distance(z, c) <= self.chordal_radius + if z.is_infinite() { T::zero() } else { h },
            None => true,
        }
    }

    /// True if some point within distance `h` of `z` may lie in `K_i`.
    ///
    /// The slack `sum_{j!=i} |b_ij w - a_ij| - |b_ii w - a_ii|` is Lipschitz in
    /// `w` with constant `sum_j |b_ij|`; `h = 0` is exact membership.
    pub fn near_k(&self, z: &ExtendedComplex<T>, h: T) -> bool {
        match z {
            ExtendedComplex::Infinity => !self.b_dominant,
            ExtendedComplex::Finite(w) => {
                let lhs = (self.b_diag * w - self.a_diag).norm();
                let rhs = self.off.iter().fold(T::zero(), |s, (x, y)| s + (y * w - x).norm());
                if h == T::zero() {
                    return lhs <= rhs;
                }
                let lip = self.off.iter().fold(self.b_diag.norm(), |s, (_, y)| s + y.norm());
                lhs <= rhs + h * lip
            }
        }
    }
}

/// Union `G = ∪ G_i` or `K = ∪ K_i` as a reusable predicate.
#[derive(Clone, Debug)]
pub struct ReferenceSets<T> {
    rows: Vec<RowSets<T>>,
}

impl<T: Real> ReferenceSets<T> {
    pub fn new(p: &Pencil<T>) -> Self {
        ReferenceSets { rows: RowSets::all(p) }
    }

    pub fn rows(&self) -> &[RowSets<T>] {
        &self.rows
    }

    pub fn in_g(&self, z: &ExtendedComplex<T>) -> bool {
        self.rows.iter().any(|r| r.in_g(z))
    }

    pub fn in_k(&self, z: &ExtendedComplex<T>) -> bool {
        self.rows.iter().any(|r| r.in_k(z))
    }

    pub fn near_g(&self, z: &ExtendedComplex<T>, h: T) -> bool {
        self.rows.iter().any(|r| r.near_g(z, h))
    }

    pub fn near_k(&self, z: &ExtendedComplex<T>, h: T) -> bool {
        self.rows.iter().any(|r| r.near_k(z, h))
    }
}
