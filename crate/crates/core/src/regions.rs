//! Gerschgorin-type inclusion regions for the pencil `A - zB`.
//!
//! Row `i` contributes two candidate regions. The B-side region is a disk
//! around `a_ii / b_ii` whenever row `i` of `B` is strictly diagonally
//! dominant. The A-side region bounds `1/z` instead of `z`, so in the
//! `z`-plane it is bounded by an Apollonius circle `|z - alpha| = beta |z|`:
//! a disk for `beta < 1`, a disk complement (containing infinity) for
//! `beta > 1` and the half-plane cut out by the perpendicular bisector of
//! `[0, alpha]` for `beta = 1`.
//!
//! Three families are built from these:
//!
//! * [`Variant::Plain`]: `Gamma_i = GammaB_i ∩ GammaA_i`.
//! * [`Variant::Tilde`]: the same with the tighter centers and radii obtained
//!   by bounding `1/(1 + gamma)` by the disk with center `1/(1-r^2)`.
//! * [`Variant::Simplified`]: `GammaB_i` if row `i` of `B` is dominant, else
//!   `GammaA_i`. With `B = I` these are exactly the classical Gerschgorin disks.
//!
//! Every eigenvalue of the pencil, finite or infinite, lies in the union of
//! each family.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::model::{row_stats, ExtendedComplex, Pencil, Region, RowStat};
use crate::scalar::{is_zero, lit, Real};

/// Relative tolerance for treating the Apollonius ratio as exactly 1.
pub const BETA_UNIT_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    Plain,
    Tilde,
    Simplified,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Plain, Variant::Tilde, Variant::Simplified];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Plain => "plain",
            Variant::Tilde => "tilde",
            Variant::Simplified => "simplified",
        }
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "plain" => Ok(Variant::Plain),
            "tilde" => Ok(Variant::Tilde),
            "simplified" => Ok(Variant::Simplified),
            other => Err(format!("unknown variant '{other}' (expected plain, tilde or simplified)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RowRegions<T> {
    pub gamma_b: Region<T>,
    pub gamma_a: Region<T>,
    pub gamma: Region<T>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GershFamily<T> {
    pub variant: Variant,
    pub rows: Vec<RowRegions<T>>,
}

impl<T: Real> GershFamily<T> {
    pub fn build(p: &Pencil<T>, variant: Variant) -> Self {
        let stats = row_stats(p);
        match variant {
            Variant::Plain => plain_family(&stats),
            Variant::Tilde => tilde_family(&stats),
            Variant::Simplified => simplified_family(&stats),
        }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn regions(&self) -> impl Iterator<Item = &Region<T>> {
        self.rows.iter().map(|r| &r.gamma)
    }

    /// Union membership.
    pub fn contains(&self, z: &ExtendedComplex<T>) -> bool {
        self.contains_within(z, T::zero())
    }

    pub fn contains_within(&self, z: &ExtendedComplex<T>, eps: T) -> bool {
        self.regions().any(|r| r.contains_within(z, eps))
    }

    /// Rows whose region is the whole plane.
    pub fn whole_plane_rows(&self) -> Vec<usize> {
        self.rows.iter().enumerate().filter(|(_, r)| r.gamma.is_whole_plane()).map(|(i, _)| i).collect()
    }
}

/// Region bounded by the Apollonius circle `|z - alpha| = beta |z|`,
/// on the side containing `alpha`.
pub fn apollonius_region<T: Real>(alpha: Complex<T>, beta: T) -> Region<T> {
    let one = T::one();
    if (beta - one).abs() <= lit::<T>(BETA_UNIT_TOL) * beta.max(one) {
        return Region::HalfPlane { alpha };
    }
    // 1 - beta^2 without cancellation near beta = 1
    let denom = (one - beta) * (one + beta);
    let center = alpha / denom;
    let radius = alpha.norm() * beta / denom.abs();
    if beta < one {
        Region::Disk { center, radius }
    } else {
        Region::DiskComplement { center, radius }
    }
}

pub fn gamma_b_of<T: Real>(s: &RowStat<T>) -> Region<T> {
    match (s.dominant_b, s.ratio_b) {
        (true, Some(r)) => {
            let bm = s.b_diag.norm();
            Region::Disk {
                center: s.a_diag / s.b_diag,
                radius: (s.a_diag.norm() * r + s.off_a) / (bm * (T::one() - r)),
            }
        }
        _ => Region::WholePlane,
    }
}

pub fn gamma_a_of<T: Real>(s: &RowStat<T>) -> Region<T> {
    let ra = match (s.dominant_a, s.ratio_a) {
        (true, Some(ra)) => ra,
        _ => return Region::WholePlane,
    };
    let one = T::one();
    if is_zero(s.b_diag) {
        if s.off_b == T::zero() {
            return Region::PointAtInfinity;
        }
        return Region::DiskComplement {
            center: Complex::new(T::zero(), T::zero()),
            radius: s.a_diag.norm() * (one - ra) / s.off_b,
        };
    }
    let bm = s.b_diag.norm();
    let alpha = s.a_diag / s.b_diag;
    let beta = (bm * ra + s.off_b) / (bm * (one - ra));
    apollonius_region(alpha, beta)
}

pub fn gamma_tilde_b_of<T: Real>(s: &RowStat<T>) -> Region<T> {
    match (s.dominant_b, s.ratio_b) {
        (true, Some(r)) => {
            let one = T::one();
            let shrink = (one - r) * (one + r);
            let bm = s.b_diag.norm();
            Region::Disk {
                center: s.a_diag / s.b_diag / shrink,
                radius: (s.a_diag.norm() * r + s.off_a * (one + r)) / (bm * shrink),
            }
        }
        _ => Region::WholePlane,
    }
}

pub fn gamma_tilde_a_of<T: Real>(s: &RowStat<T>) -> Region<T> {
    match (s.dominant_a, s.ratio_a) {
        (true, Some(ra)) if !is_zero(s.b_diag) => {
            let one = T::one();
            let bm = s.b_diag.norm();
            let alpha = s.a_diag / s.b_diag * ((one - ra) * (one + ra));
            let beta = ra + s.off_b * (one + ra) / bm;
            apollonius_region(alpha, beta)
        }
        _ => gamma_a_of(s),
    }
}

/// `left ∩ right`, returning the other operand when one is the whole plane.
pub fn intersect<T: Real>(left: Region<T>, right: Region<T>) -> Region<T> {
    match (left, right) {
        (Region::WholePlane, r) => r,
        (l, Region::WholePlane) => l,
        (l, r) => Region::intersection(l, r),
    }
}

fn stat<T: Real>(p: &Pencil<T>, i: usize) -> Result<RowStat<T>> {
    p.check_row(i)?;
    Ok(crate::model::row_stat(p, i))
}

pub fn gamma_b<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    Ok(gamma_b_of(&stat(p, i)?))
}

pub fn gamma_a<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    Ok(gamma_a_of(&stat(p, i)?))
}

pub fn gamma_i<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    let s = stat(p, i)?;
    Ok(intersect(gamma_b_of(&s), gamma_a_of(&s)))
}

pub fn gamma_tilde_b<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    Ok(gamma_tilde_b_of(&stat(p, i)?))
}

pub fn gamma_tilde_a<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    Ok(gamma_tilde_a_of(&stat(p, i)?))
}

pub fn gamma_tilde_i<T: Real>(p: &Pencil<T>, i: usize) -> Result<Region<T>> {
    let s = stat(p, i)?;
    Ok(intersect(gamma_tilde_b_of(&s), gamma_tilde_a_of(&s)))
}

pub fn gamma_s<T: Real>(p: &Pencil<T>) -> GershFamily<T> {
    simplified_family(&row_stats(p))
}

fn plain_family<T: Real>(stats: &[RowStat<T>]) -> GershFamily<T> {
    let rows = stats
        .iter()
        .map(|s| {
            let (gamma_b, gamma_a) = (gamma_b_of(s), gamma_a_of(s));
            let gamma = intersect(gamma_b.clone(), gamma_a.clone());
            RowRegions { gamma_b, gamma_a, gamma }
        })
        .collect();
    GershFamily { variant: Variant::Plain, rows }
}

fn tilde_family<T: Real>(stats: &[RowStat<T>]) -> GershFamily<T> {
    let rows = stats
        .iter()
        .map(|s| {
            let (gamma_b, gamma_a) = (gamma_tilde_b_of(s), gamma_tilde_a_of(s));
            let gamma = intersect(gamma_b.clone(), gamma_a.clone());
            RowRegions { gamma_b, gamma_a, gamma }
        })
        .collect();
    GershFamily { variant: Variant::Tilde, rows }
}

fn simplified_family<T: Real>(stats: &[RowStat<T>]) -> GershFamily<T> {
    let rows = stats
        .iter()
        .map(|s| {
            let (gamma_b, gamma_a) = (gamma_b_of(s), gamma_a_of(s));
            let gamma = if s.dominant_b { gamma_b.clone() } else { gamma_a.clone() };
            RowRegions { gamma_b, gamma_a, gamma }
        })
        .collect();
    GershFamily { variant: Variant::Simplified, rows }
}
