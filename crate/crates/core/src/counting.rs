//! Eigenvalue counts for isolated groups of inclusion regions.
//!
//! If the union of `k` regions of a family is disjoint from the remaining
//! `n - k` regions and is not the entire plane, it contains exactly `k`
//! eigenvalues. [`components`] groups rows into clusters using conservative
//! pairwise disjointness tests; a cluster is *certified* only when the
//! hypotheses of that statement are verified.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{ExtendedComplex, Region};
use crate::regions::GershFamily;
use crate::scalar::{lit, Real};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Disjointness {
    Disjoint,
    Intersecting,
    /// No exact test applies; treated as intersecting.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Cluster {
    /// Row indices, 0-based, ascending.
    pub indices: Vec<usize>,
    pub expected_count: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClusterReport {
    pub clusters: Vec<Cluster>,
    /// Some point lies outside every region, so the pencil is regular.
    pub exterior_point_found: bool,
}

impl ClusterReport {
    pub fn certified(&self) -> impl Iterator<Item = &Cluster> {
        self.clusters.iter().filter(|c| c.certified)
    }
}

/// Conservative disjointness test for two regions.
///
/// `Disjoint` is only returned when it is exactly verified. Regions that both
/// contain infinity always intersect.
pub fn pair_disjoint<T: Real>(r1: &Region<T>, r2: &Region<T>) -> Disjointness {
    use Disjointness::*;
    use Region::*;
    match (r1, r2) {
        (WholePlane, _) | (_, WholePlane) => Intersecting,
        (Intersection(l, r), other) | (other, Intersection(l, r)) => {
            if pair_disjoint(l, other) == Disjoint || pair_disjoint(r, other) == Disjoint {
                Disjoint
            } else if r1.contains_infinity() && r2.contains_infinity() {
                Intersecting
            } else {
                Unknown
            }
        }
        (Disk { center: c1, radius: p1 }, Disk { center: c2, radius: p2 }) => verdict((c1 - c2).norm() > *p1 + *p2),
        (Disk { center: c1, radius: p1 }, DiskComplement { center: c2, radius: p2 })
        | (DiskComplement { center: c2, radius: p2 }, Disk { center: c1, radius: p1 }) => {
            verdict((c1 - c2).norm() + *p1 < *p2)
        }
        (Disk { center, radius }, HalfPlane { alpha }) | (HalfPlane { alpha }, Disk { center, radius }) => {
            verdict(disk_beyond_bisector(*center, *radius, *alpha))
        }
        (PointAtInfinity, Disk { .. }) | (Disk { .. }, PointAtInfinity) => Disjoint,
        // every remaining pair consists of two regions containing infinity
        _ => Intersecting,
    }
}

fn verdict(disjoint: bool) -> Disjointness {
    if disjoint {
        Disjointness::Disjoint
    } else {
        Disjointness::Intersecting
    }
}

/// True when the disk lies strictly on the origin side of the bisector of `[0, alpha]`.
///
/// The half-plane `|z - alpha| <= |z|` is `Re(z conj(alpha)) >= |alpha|^2 / 2`;
/// the signed distance of `c` to its boundary line is
/// `(Re(c conj(alpha)) - |alpha|^2/2) / |alpha|`.
fn disk_beyond_bisector<T: Real>(center: Complex<T>, radius: T, alpha: Complex<T>) -> bool {
    let am = alpha.norm();
    if am == T::zero() {
        return false;
    }
    let signed = ((center * alpha.conj()).re - am * am * lit(0.5)) / am;
    signed < -radius
}

/// Clusters of rows under the relation "regions not certified disjoint".
pub fn components<T: Real>(f: &GershFamily<T>) -> ClusterReport {
    let n = f.len();
    let regions: Vec<&Region<T>> = f.regions().collect();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        for j in i + 1..n {
            if pair_disjoint(regions[i], regions[j]) != Disjointness::Disjoint {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut slot = vec![usize::MAX; n];
    for i in 0..n {
        let root = find(&mut parent, i);
        if slot[root] == usize::MAX {
            slot[root] = groups.len();
            groups.push(Vec::new());
        }
        groups[slot[root]].push(i);
    }
    let exterior = exterior_point(f).is_some();
    let clusters = groups
        .into_iter()
        .map(|indices| {
            let whole = indices.iter().any(|&i| regions[i].is_whole_plane());
            Cluster { expected_count: indices.len(), certified: exterior && !whole, indices }
        })
        .collect();
    ClusterReport { clusters, exterior_point_found: exterior }
}

/// A point lying robustly outside every region of the family, if one is found.
///
/// Candidates are infinity, the origin, every center and Apollonius focus,
/// points just beyond each circle, and a 48x48 grid over the bounding box of
/// all circles. A candidate qualifies if it misses every region by more than
/// `1e-9 (1 + |z|)`.
pub fn exterior_point<T: Real>(f: &GershFamily<T>) -> Option<ExtendedComplex<T>> {
    let regions: Vec<&Region<T>> = f.regions().collect();
    if regions.iter().any(|r| r.is_whole_plane()) {
        return None;
    }
    let outside = |z: &ExtendedComplex<T>| {
        let eps = lit::<T>(1e-9) * (T::one() + z.as_finite().map_or(T::zero(), |w| w.norm()));
        regions.iter().all(|r| !r.contains_within(z, eps))
    };
    if outside(&ExtendedComplex::Infinity) {
        return Some(ExtendedComplex::Infinity);
    }
    let mut candidates = vec![Complex::new(T::zero(), T::zero())];
    let (mut lo, mut hi) =
        (Complex::new(T::infinity(), T::infinity()), Complex::new(T::neg_infinity(), T::neg_infinity()));
    let mut include = |c: Complex<T>, r: T| {
        lo = Complex::new(lo.re.min(c.re - r), lo.im.min(c.im - r));
        hi = Complex::new(hi.re.max(c.re + r), hi.im.max(c.im + r));
    };
    for r in &regions {
        for factor in r.factors() {
            match factor {
                Region::Disk { center, radius } | Region::DiskComplement { center, radius } => {
                    include(*center, *radius);
                    candidates.push(*center);
                    for k in 0..8 {
                        let dir = Complex::from_polar(T::one(), T::TAU() * lit(k as f64 / 8.0));
                        candidates.push(center + dir * (*radius * lit(1.01) + lit(1e-6)));
                        candidates.push(center + dir * (*radius * lit(0.99)));
                    }
                }
                Region::HalfPlane { alpha } => {
                    include(*alpha, T::zero());
                    include(Complex::new(T::zero(), T::zero()), T::zero());
                    candidates.push(*alpha);
                    candidates.push(alpha * lit::<T>(0.25));
                }
                _ => {}
            }
        }
    }
    if lo.re.is_finite() && hi.re.is_finite() {
        let size = (hi.re - lo.re).max(hi.im - lo.im).max(T::one());
        let steps = 48;
        for i in 0..=steps {
            for j in 0..=steps {
                let t = lit::<T>(i as f64 / steps as f64 * 1.4 - 0.2);
                let s = lit::<T>(j as f64 / steps as f64 * 1.4 - 0.2);
                candidates.push(Complex::new(lo.re + size * t, lo.im + size * s));
            }
        }
    }
    candidates.into_iter().map(ExtendedComplex::Finite).find(|z| outside(z))
}

/// Checks that every certified cluster contains exactly as many of `eigs` as
/// it has rows. Finite eigenvalues are tested with tolerance
/// `eps_rel * (1 + |z|)`.
pub fn verify_counts<T: Real>(
    f: &GershFamily<T>,
    report: &ClusterReport,
    eigs: &[ExtendedComplex<T>],
    eps_rel: T,
) -> Result<()> {
    for (k, cluster) in report.clusters.iter().enumerate() {
        if !cluster.certified {
            continue;
        }
        let found = eigs
            .iter()
            .filter(|z| {
                let eps = eps_rel * (T::one() + z.as_finite().map_or(T::zero(), |w| w.norm()));
                cluster.indices.iter().any(|&i| f.rows[i].gamma.contains_within(z, eps))
            })
            .count();
        if found != cluster.expected_count {
            return Err(Error::CountMismatch { cluster: k, expected: cluster.expected_count, found });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::matrix::CMatrix;
    use crate::model::Pencil;
    use crate::oracle::eigenvalues_charpoly;
    use crate::regions::Variant;
    use crate::scalar::real;
    use proptest::prelude::*;

    fn disk(c: f64, r: f64) -> Region<f64> {
        Region::Disk { center: real(c), radius: r }
    }

    fn comp(c: f64, r: f64) -> Region<f64> {
        Region::DiskComplement { center: real(c), radius: r }
    }

    #[test]
    fn pair_examples() {
        assert_eq!(pair_disjoint(&disk(0.0, 1.0), &disk(3.0, 1.0)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&disk(0.0, 1.0), &disk(2.0, 1.0)), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&disk(0.0, 1.0), &comp(0.0, 3.0)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&comp(0.0, 3.0), &disk(1.0, 2.0)), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&comp(0.0, 1.0), &comp(10.0, 1.0)), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&Region::PointAtInfinity, &disk(0.0, 5.0)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&Region::PointAtInfinity, &comp(0.0, 5.0)), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&Region::WholePlane, &disk(0.0, 0.0)), Disjointness::Intersecting);
    }

    #[test]
    fn half_plane_pairs() {
        let h = Region::HalfPlane { alpha: real(4.0) };
        // bisector is Re z = 2
        assert_eq!(pair_disjoint(&h, &disk(0.0, 1.9)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&disk(0.0, 2.0), &h), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&h, &disk(5.0, 0.1)), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&h, &Region::HalfPlane { alpha: real(-4.0) }), Disjointness::Intersecting);
        assert_eq!(pair_disjoint(&h, &comp(0.0, 1.0)), Disjointness::Intersecting);
    }

    #[test]
    fn intersection_pairs() {
        let both = Region::intersection(disk(0.0, 1.0), comp(0.0, 0.5));
        assert_eq!(pair_disjoint(&both, &disk(5.0, 1.0)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&both, &disk(0.0, 0.1)), Disjointness::Disjoint);
        assert_eq!(pair_disjoint(&both, &disk(1.0, 0.1)), Disjointness::Unknown);
        let unbounded = Region::intersection(comp(0.0, 1.0), Region::HalfPlane { alpha: real(1.0) });
        assert_eq!(pair_disjoint(&unbounded, &comp(3.0, 1.0)), Disjointness::Intersecting);
    }

    #[test]
    fn components_two_singletons() {
        let a = CMatrix::<f64>::from_real_rows(&[&[0.0, 0.1], &[0.1, 10.0]]).unwrap();
        let p = Pencil::new(a, CMatrix::identity(2)).unwrap();
        for v in Variant::ALL {
            let f = GershFamily::build(&p, v);
            let rep = components(&f);
            assert_eq!(rep.clusters.len(), 2, "{v:?}");
            assert!(rep.clusters.iter().all(|c| c.certified && c.expected_count == 1));
            let eigs = eigenvalues_charpoly(&p).unwrap().points();
            verify_counts(&f, &rep, &eigs, 1e-9).unwrap();
        }
    }

    #[test]
    fn components_example1_single_cluster() {
        let p = fixtures::example1::<f64>();
        let f = GershFamily::build(&p, Variant::Simplified);
        let rep = components(&f);
        assert_eq!(rep.clusters.len(), 1);
        assert_eq!(rep.clusters[0].indices, vec![0, 1]);
        assert!(rep.clusters[0].certified);
        let eigs = [ExtendedComplex::finite(-1.0, 0.0), ExtendedComplex::finite(5.0 / 3.0, 0.0)];
        verify_counts(&f, &rep, &eigs, 0.0).unwrap();
    }

    #[test]
    fn whole_plane_row_blocks_certificate() {
        let p = Pencil::new(
            CMatrix::<f64>::from_real_rows(&[&[1.0, 2.0], &[0.0, 9.0]]).unwrap(),
            CMatrix::from_real_rows(&[&[1.0, 2.0], &[0.0, 1.0]]).unwrap(),
        )
        .unwrap();
        let rep = components(&GershFamily::build(&p, Variant::Plain));
        assert_eq!(rep.clusters.len(), 1);
        assert!(!rep.clusters[0].certified);
        assert!(!rep.exterior_point_found);
    }

    #[test]
    fn one_by_one_pencil() {
        let p = Pencil::new(
            CMatrix::<f64>::from_real_rows(&[&[3.0]]).unwrap(),
            CMatrix::from_real_rows(&[&[2.0]]).unwrap(),
        )
        .unwrap();
        let f = GershFamily::build(&p, Variant::Plain);
        let rep = components(&f);
        assert_eq!(rep.clusters.len(), 1);
        assert!(rep.clusters[0].certified);
        verify_counts(&f, &rep, &[ExtendedComplex::finite(1.5, 0.0)], 0.0).unwrap();
    }

    #[test]
    fn mismatch_is_reported() {
        let a = CMatrix::<f64>::from_real_rows(&[&[0.0, 0.1], &[0.1, 10.0]]).unwrap();
        let p = Pencil::new(a, CMatrix::identity(2)).unwrap();
        let f = GershFamily::build(&p, Variant::Plain);
        let rep = components(&f);
        let wrong = [ExtendedComplex::finite(0.0, 0.0), ExtendedComplex::finite(0.01, 0.0)];
        assert!(matches!(verify_counts(&f, &rep, &wrong, 0.0), Err(Error::CountMismatch { expected: 1, .. })));
    }

    #[test]
    fn infinity_point_cluster() {
        // row 0: b00 = 0 and no B coupling => {inf}; row 1: small disk near 2
        let p = Pencil::new(
            CMatrix::<f64>::from_real_rows(&[&[1.0, 0.0], &[0.1, 2.0]]).unwrap(),
            CMatrix::from_real_rows(&[&[0.0, 0.0], &[0.0, 1.0]]).unwrap(),
        )
        .unwrap();
        let f = GershFamily::build(&p, Variant::Plain);
        assert_eq!(f.rows[0].gamma, Region::PointAtInfinity);
        let rep = components(&f);
        assert_eq!(rep.clusters.len(), 2);
        assert!(rep.clusters.iter().all(|c| c.certified));
        let eigs = eigenvalues_charpoly(&p).unwrap().points();
        verify_counts(&f, &rep, &eigs, 1e-9).unwrap();
    }

    fn arb_region() -> impl Strategy<Value = Region<f64>> {
        let c = (-4.0..4.0f64, -4.0..4.0f64).prop_map(|(x, y)| Complex::new(x, y));
        let prim = prop_oneof![
            (c.clone(), 0.0..3.0f64).prop_map(|(center, radius)| Region::Disk { center, radius }),
            (c.clone(), 0.0..3.0f64).prop_map(|(center, radius)| Region::DiskComplement { center, radius }),
            c.clone().prop_map(|alpha| Region::HalfPlane { alpha }),
            Just(Region::PointAtInfinity),
        ];
        prop_oneof![
            4 => prim.clone(),
            1 => (prim.clone(), prim).prop_map(|(l, r)| Region::intersection(l, r)),
        ]
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]
        #[test]
        fn disjoint_verdicts_are_sound(r1 in arb_region(), r2 in arb_region()) {
            if pair_disjoint(&r1, &r2) == Disjointness::Disjoint {
                prop_assert!(!(r1.contains_infinity() && r2.contains_infinity()));
                let steps = 160;
                for i in 0..=steps {
                    for j in 0..=steps {
                        let z = ExtendedComplex::finite(-12.0 + 24.0 * i as f64 / steps as f64, -12.0 + 24.0 * j as f64 / steps as f64);
                        prop_assert!(!(r1.contains(&z) && r2.contains(&z)), "common point {:?}", z);
                    }
                }
            }
        }
    }
}
