//! A-posteriori error bounds for computed eigenvalues of a diagonalizable pencil.
//!
//! Given approximate eigenvector matrices `X`, `Y`, the transformed pencil
//! `(Y^H A X, Y^H B X)` is `(diag(l) + E, I + F)` with small off-diagonal
//! remainders `E`, `F`. Each eigenvalue then lies in a disk around some `l_j`,
//! and isolated disks contain exactly one eigenvalue.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::{lit, Real};

/// Allowed deviation of a diagonal entry of `B-hat` from 1.
pub const NORMALIZATION_TOL: f64 = 1e-12;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResidualData<T> {
    /// Diagonal of `A-hat`.
    pub lambdas: Vec<Complex<T>>,
    /// Off-diagonal absolute row sums of `A-hat`.
    pub e_row: Vec<T>,
    /// Off-diagonal absolute row sums of `B-hat`, each below 1.
    pub f_row: Vec<T>,
}

impl<T: Real> ResidualData<T> {
    /// Builds residual data from its parts, checking lengths and `F_j < 1`.
    pub fn new(lambdas: Vec<Complex<T>>, e_row: Vec<T>, f_row: Vec<T>) -> Result<Self> {
        if lambdas.is_empty() {
            return Err(Error::Empty);
        }
        if e_row.len() != lambdas.len() || f_row.len() != lambdas.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} eigenvalues, {} E sums, {} F sums",
                lambdas.len(),
                e_row.len(),
                f_row.len()
            )));
        }
        if let Some((row, f)) = f_row.iter().enumerate().find(|(_, f)| !(**f < T::one())) {
            return Err(Error::DominanceViolated { row, sum: f.to_f64().unwrap_or(f64::NAN) });
        }
        Ok(Self { lambdas, e_row, f_row })
    }

    pub fn len(&self) -> usize {
        self.lambdas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambdas.is_empty()
    }

    /// Multiplies every residual by `t`.
    pub fn scaled_residuals(&self, t: T) -> Self {
        Self {
            lambdas: self.lambdas.clone(),
            e_row: self.e_row.iter().map(|e| *e * t).collect(),
            f_row: self.f_row.iter().map(|f| *f * t).collect(),
        }
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(Error::IndexOutOfRange { index: i, n: self.len() });
        }
        Ok(())
    }

    /// Radius of the disk around `l_j`: `(|l_j| F_j + E_j) / (1 - F_j)`.
    pub fn radius(&self, j: usize) -> T {
        (self.lambdas[j].norm() * self.f_row[j] + self.e_row[j]) / (T::one() - self.f_row[j])
    }

    /// Distance from `l_i` to the nearest other computed eigenvalue
    /// (infinite when `n = 1`).
    pub fn gap(&self, i: usize) -> T {
        self.others(i).map(|j| (self.lambdas[i] - self.lambdas[j]).norm()).fold(T::infinity(), T::min)
    }

    fn others(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&j| j != i)
    }
}

/// Extracts `l`, `E` and `F` from the transformed matrices.
pub fn residual_data<T: Real>(ahat: &CMatrix<T>, bhat: &CMatrix<T>) -> Result<ResidualData<T>> {
    for m in [ahat, bhat] {
        if !m.is_square() {
            return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
        }
    }
    if ahat.nrows() != bhat.nrows() {
        return Err(Error::DimensionMismatch(format!(
            "A-hat is {0}x{0}, B-hat is {1}x{1}",
            ahat.nrows(),
            bhat.nrows()
        )));
    }
    let n = ahat.nrows();
    let tol = lit::<T>(NORMALIZATION_TOL);
    for j in 0..n {
        let d = bhat[(j, j)];
        if !((d - Complex::new(T::one(), T::zero())).norm() <= tol) {
            return Err(Error::NotNormalized { row: j, value: format!("{d}") });
        }
    }
    let off = |m: &CMatrix<T>, j: usize| {
        m.row(j).iter().enumerate().filter(|(l, _)| *l != j).fold(T::zero(), |s, (_, z)| s + z.norm())
    };
    ResidualData::new(ahat.diag(), (0..n).map(|j| off(ahat, j)).collect(), (0..n).map(|j| off(bhat, j)).collect())
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SimpleBound<T> {
    pub rho: T,
    /// Disk `i` is disjoint from every other disk, so it holds exactly one eigenvalue.
    pub certified: bool,
}

/// Radius `rho_i` around `l_i` and its isolation certificate.
///
/// Disk `j` is taken with its own center modulus, `(|l_j| F_j + E_j)/(1 - F_j)`,
/// which is the disk that actually encloses the `j`-th inclusion region.
pub fn simple_bound<T: Real>(d: &ResidualData<T>, i: usize) -> Result<SimpleBound<T>> {
    d.check_index(i)?;
    let rho = d.radius(i);
    if d.gap(i) == T::zero() {
        return Err(Error::NotSimple { index: i });
    }
    let certified = d.others(i).all(|j| (d.lambdas[i] - d.lambdas[j]).norm() > rho + d.radius(j));
    Ok(SimpleBound { rho, certified })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TightBound<T> {
    pub tau0: T,
    /// `tau0 (|l_i| F_i + E_i) / (1 - tau0 F_i)` when improved, otherwise `rho_i`.
    pub bound: T,
    /// `tau0 < 1`, so the diagonal scaling argument applies.
    pub improved: bool,
}

/// Sharper bound from scaling row `i` by `tau` and column `i` by `1/tau`.
///
/// The other disks stay clear of disk `i` for every
/// `tau > tau0 = max_{j != i} [F_j + (|l_j| F_j + E_j) / (delta - rho_i)]`.
pub fn tight_bound<T: Real>(d: &ResidualData<T>, i: usize) -> Result<TightBound<T>> {
    let simple = certified(d, i)?;
    let delta_prime = d.gap(i) - simple.rho;
    let tau0 = d
        .others(i)
        .map(|j| d.f_row[j] + (d.lambdas[j].norm() * d.f_row[j] + d.e_row[j]) / delta_prime)
        .fold(T::zero(), T::max);
    let improved = tau0 < T::one();
    let bound = if improved {
        tau0 * (d.lambdas[i].norm() * d.f_row[i] + d.e_row[i]) / (T::one() - tau0 * d.f_row[i])
    } else {
        simple.rho
    };
    Ok(TightBound { tau0, bound, improved })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct QuadraticBound<T> {
    pub r: T,
    pub delta_prime: T,
    /// `r^2 / delta'`.
    pub bound: T,
}

/// Bound quadratic in the residuals: `r^2 / (delta - rho_i)` with
/// `r = max_j ((2|l_j| + |l_i|) F_j + E_j) / (1 - F_i)`.
pub fn quadratic_bound<T: Real>(d: &ResidualData<T>, i: usize) -> Result<QuadraticBound<T>> {
    let simple = certified(d, i)?;
    let delta_prime = d.gap(i) - simple.rho;
    let li = d.lambdas[i].norm();
    let two = lit::<T>(2.0);
    let r = (0..d.len()).map(|j| (two * d.lambdas[j].norm() + li) * d.f_row[j] + d.e_row[j]).fold(T::zero(), T::max)
        / (T::one() - d.f_row[i]);
    Ok(QuadraticBound { r, delta_prime, bound: r * r / delta_prime })
}

fn certified<T: Real>(d: &ResidualData<T>, i: usize) -> Result<SimpleBound<T>> {
    let s = simple_bound(d, i)?;
    if !s.certified {
        return Err(Error::Uncertified { index: i });
    }
    Ok(s)
}

/// Radius around a repeated computed eigenvalue holding exactly `indices.len()` eigenvalues.
///
/// All `l_j` for `j` in `indices` must coincide, and the cluster disk must be
/// disjoint from every other disk.
pub fn cluster_bound<T: Real>(d: &ResidualData<T>, indices: &[usize]) -> Result<T> {
    let Some(&first) = indices.first() else {
        return Err(Error::NotACluster("empty index set".into()));
    };
    for &j in indices {
        d.check_index(j)?;
    }
    let center = d.lambdas[first];
    if let Some(&j) = indices.iter().find(|&&j| d.lambdas[j] != center) {
        return Err(Error::NotACluster(format!("computed eigenvalues {} and {} differ", first + 1, j + 1)));
    }
    let rho = indices.iter().map(|&j| d.radius(j)).fold(T::zero(), T::max);
    for j in (0..d.len()).filter(|j| !indices.contains(j)) {
        if !((center - d.lambdas[j]).norm() > rho + d.radius(j)) {
            return Err(Error::NotACluster(format!("cluster disk meets disk {}", j + 1)));
        }
    }
    Ok(rho)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ErrorBoundReport<T> {
    /// 0-based target index.
    pub index: usize,
    pub lambda: Complex<T>,
    pub rho_simple: T,
    pub disjoint_certified: bool,
    pub delta: T,
    /// Present when certified.
    pub delta_prime: Option<T>,
    pub tau0: Option<T>,
    pub rho_tight: Option<T>,
    pub tight_improved: bool,
    pub r_quad: Option<T>,
    pub quad_bound: Option<T>,
    /// Set when `l_i` is repeated: every index sharing its value.
    pub cluster_indices: Option<Vec<usize>>,
    /// Set when the repeated value forms an isolated cluster.
    pub cluster_bound: Option<T>,
}

/// Every bound for target `i`; uncertified or repeated targets get `None` fields
/// instead of an error.
pub fn error_bounds<T: Real>(d: &ResidualData<T>, i: usize) -> Result<ErrorBoundReport<T>> {
    d.check_index(i)?;
    let mut rep = ErrorBoundReport {
        index: i,
        lambda: d.lambdas[i],
        rho_simple: d.radius(i),
        disjoint_certified: false,
        delta: d.gap(i),
        delta_prime: None,
        tau0: None,
        rho_tight: None,
        tight_improved: false,
        r_quad: None,
        quad_bound: None,
        cluster_indices: None,
        cluster_bound: None,
    };
    if rep.delta == T::zero() {
        let members: Vec<usize> = (0..d.len()).filter(|&j| d.lambdas[j] == d.lambdas[i]).collect();
        rep.cluster_bound = cluster_bound(d, &members).ok();
        rep.cluster_indices = Some(members);
        return Ok(rep);
    }
    let s = simple_bound(d, i)?;
    rep.disjoint_certified = s.certified;
    if s.certified {
        let t = tight_bound(d, i)?;
        let q = quadratic_bound(d, i)?;
        rep.delta_prime = Some(q.delta_prime);
        rep.tau0 = Some(t.tau0);
        rep.rho_tight = Some(t.bound);
        rep.tight_improved = t.improved;
        rep.r_quad = Some(q.r);
        rep.quad_bound = Some(q.bound);
    }
    Ok(rep)
}

/// [`error_bounds`] for every index.
pub fn error_bounds_all<T: Real>(d: &ResidualData<T>) -> Vec<ErrorBoundReport<T>> {
    (0..d.len()).map(|i| error_bounds(d, i).expect("index in range")).collect()
}
