//! Pencil representation, the extended complex plane, per-row dominance
//! statistics and the region algebra consumed by the rest of the crate.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::matrix::CMatrix;
use crate::scalar::Real;

/// The pencil `A - zB` of two square matrices of equal size.
#[derive(Clone, Debug, PartialEq)]
pub struct Pencil<T> {
    a: CMatrix<T>,
    b: CMatrix<T>,
}

impl<T: Real> Pencil<T> {
    pub fn new(a: CMatrix<T>, b: CMatrix<T>) -> Result<Self> {
        for m in [&a, &b] {
            if !m.is_square() {
                return Err(Error::NotSquare { rows: m.nrows(), cols: m.ncols() });
            }
        }
        if a.nrows() != b.nrows() {
            return Err(Error::DimensionMismatch(format!("A is {0}x{0} but B is {1}x{1}", a.nrows(), b.nrows())));
        }
        if a.nrows() == 0 {
            return Err(Error::Empty);
        }
        for m in [&a, &b] {
            for i in 0..m.nrows() {
                for (j, z) in m.row(i).iter().enumerate() {
                    if !(z.re.is_finite() && z.im.is_finite()) {
                        return Err(Error::NonFinite { row: i, col: j });
                    }
                }
            }
        }
        Ok(Pencil { a, b })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.a.nrows()
    }

    #[inline]
    pub fn a(&self) -> &CMatrix<T> {
        &self.a
    }

    #[inline]
    pub fn b(&self) -> &CMatrix<T> {
        &self.b
    }

    /// The pencil `(sA, sB)`.
    pub fn scaled(&self, s: Complex<T>) -> Self {
        Pencil { a: self.a.scale(s), b: self.b.scale(s) }
    }

    pub(crate) fn check_row(&self, i: usize) -> Result<()> {
        if i < self.n() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: i, n: self.n() })
        }
    }
}

/// A point of the one-point compactification of the complex plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ExtendedComplex<T> {
    Finite(Complex<T>),
    Infinity,
}

impl<T: Real> ExtendedComplex<T> {
    pub fn finite(re: T, im: T) -> Self {
        ExtendedComplex::Finite(Complex::new(re, im))
    }

    pub fn is_infinite(&self) -> bool {
        matches!(self, ExtendedComplex::Infinity)
    }

    pub fn as_finite(&self) -> Option<Complex<T>> {
        match *self {
            ExtendedComplex::Finite(z) => Some(z),
            ExtendedComplex::Infinity => None,
        }
    }

    /// Modulus, `+inf` for the point at infinity.
    pub fn modulus(&self) -> T {
        match self {
            ExtendedComplex::Finite(z) => z.norm(),
            ExtendedComplex::Infinity => T::infinity(),
        }
    }
}

impl<T> From<Complex<T>> for ExtendedComplex<T> {
    fn from(z: Complex<T>) -> Self {
        ExtendedComplex::Finite(z)
    }
}

/// Dominance data for one row of the pencil.
///
/// | field | meaning |
/// |---|---|
/// | `off_a` | `R_i = sum_{j != i} |a_ij|` |
/// | `off_b` | `R_i^A = sum_{j != i} |b_ij|` |
/// | `ratio_b` | `r_i = off_b / |b_ii|`, `None` when `b_ii = 0` |
/// | `ratio_a` | `r_i^A = off_a / |a_ii|`, `None` when `a_ii = 0` |
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RowStat<T> {
    pub a_diag: Complex<T>,
    pub b_diag: Complex<T>,
    pub off_a: T,
    pub off_b: T,
    pub ratio_b: Option<T>,
    pub ratio_a: Option<T>,
    /// Row of `B` is strictly diagonally dominant.
    pub dominant_b: bool,
    /// Row of `A` is strictly diagonally dominant.
    pub dominant_a: bool,
}

pub fn row_stat<T: Real>(p: &Pencil<T>, i: usize) -> RowStat<T> {
    let off_sum =
        |m: &CMatrix<T>| m.row(i).iter().enumerate().filter(|&(j, _)| j != i).fold(T::zero(), |s, (_, z)| s + z.norm());
    let a_diag = p.a()[(i, i)];
    let b_diag = p.b()[(i, i)];
    let off_a = off_sum(p.a());
    let off_b = off_sum(p.b());
    let ratio = |off: T, d: Complex<T>| {
        let m = d.norm();
        (m > T::zero()).then(|| off / m)
    };
    RowStat {
        a_diag,
        b_diag,
        off_a,
        off_b,
        ratio_b: ratio(off_b, b_diag),
        ratio_a: ratio(off_a, a_diag),
        dominant_b: b_diag.norm() > off_b,
        dominant_a: a_diag.norm() > off_a,
    }
}

pub fn row_stats<T: Real>(p: &Pencil<T>) -> Vec<RowStat<T>> {
    (0..p.n()).map(|i| row_stat(p, i)).collect()
}

/// A closed subset of the extended complex plane.
#[derive(Clone, Debug, PartialEq)]
pub enum Region<T> {
    WholePlane,
    /// `{z : |z - center| <= radius}`; never contains infinity.
    Disk {
        center: Complex<T>,
        radius: T,
    },
    /// `{z : |z - center| >= radius}` together with infinity.
    DiskComplement {
        center: Complex<T>,
        radius: T,
    },
    /// `{z : |z - alpha| <= |z|}` together with infinity.
    HalfPlane {
        alpha: Complex<T>,
    },
    PointAtInfinity,
    Intersection(Box<Region<T>>, Box<Region<T>>),
}

impl<T: Real> Region<T> {
    pub fn intersection(left: Region<T>, right: Region<T>) -> Self {
        Region::Intersection(Box::new(left), Box::new(right))
    }

    /// Exact closed-set membership.
    pub fn contains(&self, z: &ExtendedComplex<T>) -> bool {
        self.contains_within(z, T::zero())
    }

    /// Membership with the defining inequality relaxed by `eps`
    /// (`|z - c| <= radius + eps`, `|z - c| >= radius - eps`,
    /// `|z - alpha| <= |z| + eps`). Infinity is decided exactly.
    pub fn contains_within(&self, z: &ExtendedComplex<T>, eps: T) -> bool {
        match (self, z) {
            (Region::WholePlane, _) => true,
            (Region::Intersection(l, r), _) => l.contains_within(z, eps) && r.contains_within(z, eps),
            (Region::PointAtInfinity, w) => w.is_infinite(),
            (Region::Disk { .. }, ExtendedComplex::Infinity) => false,
            (Region::DiskComplement { .. } | Region::HalfPlane { .. }, ExtendedComplex::Infinity) => true,
            (Region::Disk { center, radius }, ExtendedComplex::Finite(w)) => (w - center).norm() <= *radius + eps,
            (Region::DiskComplement { center, radius }, ExtendedComplex::Finite(w)) => {
                (w - center).norm() >= *radius - eps
            }
            (Region::HalfPlane { alpha }, ExtendedComplex::Finite(w)) => (w - alpha).norm() <= w.norm() + eps,
        }
    }

    pub fn contains_infinity(&self) -> bool {
        self.contains(&ExtendedComplex::Infinity)
    }

    pub fn is_whole_plane(&self) -> bool {
        matches!(self, Region::WholePlane)
    }

    /// True when the region is contained in a finite disk.
    pub fn is_bounded(&self) -> bool {
        match self {
            Region::Disk { .. } => true,
            Region::Intersection(l, r) => l.is_bounded() || r.is_bounded(),
            _ => false,
        }
    }

    /// Structural depth: 0 for primitive regions.
    pub fn depth(&self) -> usize {
        match self {
            Region::Intersection(l, r) => 1 + l.depth().max(r.depth()),
            _ => 0,
        }
    }

    /// Primitive regions (intersection factors flattened).
    pub fn factors(&self) -> Vec<&Region<T>> {
        match self {
            Region::Intersection(l, r) => {
                let mut out = l.factors();
                out.extend(r.factors());
                out
            }
            other => vec![other],
        }
    }

    /// The same set rotated by `e^{i theta}` about the origin.
    pub fn rotated(&self, rot: Complex<T>) -> Self {
        match self {
            Region::Disk { center, radius } => Region::Disk { center: center * rot, radius: *radius },
            Region::DiskComplement { center, radius } => {
                Region::DiskComplement { center: center * rot, radius: *radius }
            }
            Region::HalfPlane { alpha } => Region::HalfPlane { alpha: alpha * rot },
            Region::Intersection(l, r) => Region::intersection(l.rotated(rot), r.rotated(rot)),
            other => other.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::real;
    use proptest::prelude::*;

    fn example1() -> Pencil<f64> {
        let a = CMatrix::from_real_rows(&[&[2.0, 3.0], &[3.0, 2.0]]).unwrap();
        let b = CMatrix::from_real_rows(&[&[2.0, 1.0], &[1.0, 2.0]]).unwrap();
        Pencil::new(a, b).unwrap()
    }

    #[test]
    fn row_stats_example1() {
        let s = row_stat(&example1(), 0);
        assert_eq!(s.off_a, 3.0);
        assert_eq!(s.off_b, 1.0);
        assert_eq!(s.ratio_b, Some(0.5));
        assert_eq!(s.ratio_a, Some(1.5));
        assert!(s.dominant_b);
        assert!(!s.dominant_a);
    }

    #[test]
    fn row_stats_diagonal() {
        let p = Pencil::new(CMatrix::<f64>::from_real_rows(&[&[5.0, 0.0], &[0.0, 7.0]]).unwrap(), CMatrix::identity(2))
            .unwrap();
        for s in row_stats(&p) {
            assert_eq!((s.off_a, s.off_b), (0.0, 0.0));
            assert_eq!((s.ratio_a, s.ratio_b), (Some(0.0), Some(0.0)));
            assert!(s.dominant_a && s.dominant_b);
        }
    }

    #[test]
    fn row_stats_zero_b_diagonal() {
        let p = Pencil::new(CMatrix::<f64>::identity(2), CMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]]).unwrap())
            .unwrap();
        let s = row_stat(&p, 0);
        assert!(!s.dominant_b);
        assert!(s.dominant_a);
        assert_eq!(s.ratio_b, None);
    }

    #[test]
    fn dominance_tie_is_not_dominant() {
        let p = Pencil::new(
            CMatrix::<f64>::from_real_rows(&[&[2.0, 2.0], &[0.0, 1.0]]).unwrap(),
            CMatrix::from_real_rows(&[&[1.0, -1.0], &[0.0, 1.0]]).unwrap(),
        )
        .unwrap();
        let s = row_stat(&p, 0);
        assert!(!s.dominant_a && !s.dominant_b);
        assert_eq!(s.ratio_b, Some(1.0));
    }

    #[test]
    fn pencil_validation() {
        let a = CMatrix::<f64>::identity(2);
        assert!(matches!(Pencil::new(a.clone(), CMatrix::identity(3)), Err(Error::DimensionMismatch(_))));
        assert!(matches!(Pencil::new(CMatrix::<f64>::zeros(2, 3), CMatrix::zeros(2, 3)), Err(Error::NotSquare { .. })));
        assert_eq!(Pencil::new(CMatrix::<f64>::zeros(0, 0), CMatrix::zeros(0, 0)), Err(Error::Empty));
        let mut bad = a.clone();
        bad[(1, 0)] = real(f64::NAN);
        assert_eq!(Pencil::new(a, bad), Err(Error::NonFinite { row: 1, col: 0 }));
    }

    #[test]
    fn membership_examples() {
        let d = Region::Disk { center: real(1.0), radius: 4.0 };
        assert!(d.contains(&ExtendedComplex::finite(-1.0, 0.0)));
        assert!(!d.contains(&ExtendedComplex::Infinity));
        let h = Region::HalfPlane { alpha: real(2.0) };
        assert!(h.contains(&ExtendedComplex::finite(1.0, 0.0)));
        assert!(h.contains(&ExtendedComplex::Infinity));
        assert!(!h.contains(&ExtendedComplex::finite(0.5, 0.0)));
        let c = Region::DiskComplement { center: real(0.0), radius: 3.0 };
        assert!(c.contains(&ExtendedComplex::Infinity));
        assert!(!c.contains(&ExtendedComplex::finite(1.0, 1.0)));
        assert!(Region::<f64>::PointAtInfinity.contains(&ExtendedComplex::Infinity));
        assert!(!Region::<f64>::PointAtInfinity.contains(&ExtendedComplex::finite(0.0, 0.0)));
        let both = Region::intersection(d, c);
        assert!(both.contains(&ExtendedComplex::finite(4.0, 0.0)));
        assert!(!both.contains(&ExtendedComplex::finite(1.0, 0.0)));
        assert_eq!(both.depth(), 1);
    }

    #[test]
    fn tolerance_widens_boundary() {
        let d = Region::Disk { center: real(0.0), radius: 1.0 };
        let z = ExtendedComplex::finite(1.0 + 1e-10, 0.0);
        assert!(!d.contains(&z));
        assert!(d.contains_within(&z, 1e-9));
    }

    fn arb_region() -> impl Strategy<Value = Region<f64>> {
        let c = (-5.0..5.0f64, -5.0..5.0f64).prop_map(|(x, y)| Complex::new(x, y));
        prop_oneof![
            (c.clone(), 0.0..4.0f64).prop_map(|(center, radius)| Region::Disk { center, radius }),
            (c.clone(), 0.0..4.0f64).prop_map(|(center, radius)| Region::DiskComplement { center, radius }),
            c.clone().prop_map(|alpha| Region::HalfPlane { alpha }),
            (c.clone(), 0.0..4.0f64, c).prop_map(|(center, radius, alpha)| Region::intersection(
                Region::Disk { center, radius },
                Region::HalfPlane { alpha }
            )),
        ]
    }

    fn near_boundary(r: &Region<f64>, z: Complex<f64>) -> bool {
        r.factors().iter().any(|f| match f {
            Region::Disk { center, radius } | Region::DiskComplement { center, radius } => {
                ((z - center).norm() - radius).abs() < 1e-9
            }
            Region::HalfPlane { alpha } => ((z - alpha).norm() - z.norm()).abs() < 1e-9,
            _ => false,
        })
    }

    proptest! {
        #[test]
        fn membership_rotation_invariant(r in arb_region(), x in -8.0..8.0f64, y in -8.0..8.0f64, theta in 0.0..6.3f64) {
            let z = Complex::new(x, y);
            prop_assume!(!near_boundary(&r, z));
            let rot = Complex::from_polar(1.0, theta);
            let before = r.contains(&ExtendedComplex::Finite(z));
            let after = r.rotated(rot).contains(&ExtendedComplex::Finite(z * rot));
            prop_assert_eq!(before, after);
        }

        #[test]
        fn disk_and_complement_partition(cx in -5.0..5.0f64, cy in -5.0..5.0f64, radius in 0.0..4.0f64,
                                         x in -9.0..9.0f64, y in -9.0..9.0f64) {
            let center = Complex::new(cx, cy);
            let z = Complex::new(x, y);
            prop_assume!(((z - center).norm() - radius).abs() > 1e-9);
            let inside = Region::Disk { center, radius }.contains(&ExtendedComplex::Finite(z));
            let outside = Region::DiskComplement { center, radius }.contains(&ExtendedComplex::Finite(z));
            prop_assert!(inside ^ outside);
        }

        #[test]
        fn common_row_scaling(re in -3.0..3.0f64, im in -3.0..3.0f64,
                              entries in proptest::collection::vec(-4.0..4.0f64, 16)) {
            let s = Complex::new(re, im);
            prop_assume!(s.norm() > 1e-3);
            let a = CMatrix::from_fn(2, 2, |i, j| Complex::new(entries[2 * i + j], entries[4 + 2 * i + j]));
            let b = CMatrix::from_fn(2, 2, |i, j| Complex::new(entries[8 + 2 * i + j], entries[12 + 2 * i + j]));
            // scale only row 0 of both A and B by s
            let scale_row0 = |m: &CMatrix<f64>| CMatrix::from_fn(2, 2, |i, j| if i == 0 { m[(i, j)] * s } else { m[(i, j)] });
            let p = Pencil::new(a.clone(), b.clone()).unwrap();
            let q = Pencil::new(scale_row0(&a), scale_row0(&b)).unwrap();
            let (s0, s1) = (row_stat(&p, 0), row_stat(&q, 0));
            let tol = 1e-12 * (1.0 + s0.off_a + s0.off_b) * (1.0 + s.norm());
            prop_assert!((s1.off_a - s.norm() * s0.off_a).abs() <= tol);
            prop_assert!((s1.off_b - s.norm() * s0.off_b).abs() <= tol);
            if let (Some(x), Some(y)) = (s0.ratio_a, s1.ratio_a) {
                prop_assert!((x - y).abs() <= 1e-12 * (1.0 + x));
            }
            if let (Some(x), Some(y)) = (s0.ratio_b, s1.ratio_b) {
                prop_assert!((x - y).abs() <= 1e-12 * (1.0 + x));
            }
            prop_assert_eq!(s0.ratio_a.is_some(), s1.ratio_a.is_some());
            // dominance flags are scale invariant unless the row sits on a tie
            let margin = |d: f64, off: f64| (d - off).abs() > 1e-12 * (1.0 + d);
            if margin(s0.a_diag.norm(), s0.off_a) {
                prop_assert_eq!(s0.dominant_a, s1.dominant_a);
            }
            if margin(s0.b_diag.norm(), s0.off_b) {
                prop_assert_eq!(s0.dominant_b, s1.dominant_b);
            }
        }
    }
}
