//! Gerschgorin-type inclusion regions for the eigenvalues of a matrix pencil `A - zB`.
//!
//! Row-wise regions are built from the diagonal entries and off-diagonal row
//! sums of `A` and `B` ([`regions`]), compared with chordal-metric reference
//! sets ([`reference`]), used to count eigenvalues in isolated clusters
//! ([`counting`]) and to bound the error of computed eigenvalues ([`fwderr`]).
//! Small dense eigenvalue solvers in [`oracle`] serve as ground truth.
//!
//! Everything is generic over the real scalar type ([`Real`]); the aliases
//! below fix it to `f64` or `f32`.

// `!(x < y)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod counting;
pub mod error;
pub mod fixtures;
pub mod fwderr;
pub mod io;
pub mod matrix;
pub mod model;
pub mod oracle;
pub mod reference;
pub mod regions;
pub mod scalar;

pub use counting::{components, exterior_point, pair_disjoint, verify_counts, Cluster, ClusterReport, Disjointness};
pub use error::{Error, Result};
pub use fwderr::{
    cluster_bound, error_bounds, error_bounds_all, quadratic_bound, residual_data, simple_bound, tight_bound,
    ErrorBoundReport, ResidualData,
};
pub use matrix::CMatrix;
pub use model::{row_stat, row_stats, ExtendedComplex, Pencil, Region, RowStat};
pub use oracle::{eigenvalues, tridiag_analytic, Method, Spectrum};
pub use reference::{chordal_distance, stewart_radius, ReferenceSets, RowSets};
pub use regions::{GershFamily, RowRegions, Variant};
pub use scalar::Real;

pub type C64 = num_complex::Complex<f64>;
pub type C32 = num_complex::Complex<f32>;
pub type Matrix64 = CMatrix<f64>;
pub type Matrix32 = CMatrix<f32>;
pub type Pencil64 = Pencil<f64>;
pub type Pencil32 = Pencil<f32>;
pub type Region64 = Region<f64>;
pub type Region32 = Region<f32>;
pub type Point64 = ExtendedComplex<f64>;
pub type Point32 = ExtendedComplex<f32>;
pub type Family64 = GershFamily<f64>;
pub type Family32 = GershFamily<f32>;
pub type Spectrum64 = Spectrum<f64>;
pub type Spectrum32 = Spectrum<f32>;
