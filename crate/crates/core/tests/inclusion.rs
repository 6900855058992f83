mod common;

use common::*;
use gersh::oracle::eigenvalues_charpoly;
use gersh::regions::{gamma_a, gamma_b, gamma_s};
use gersh::{row_stats, CMatrix, ExtendedComplex, GershFamily, Pencil, ReferenceSets, Region, Variant, C64};
use proptest::prelude::*;

const VARIANTS: [Variant; 3] = [Variant::Plain, Variant::Tilde, Variant::Simplified];

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eigenvalues_lie_in_every_family(seed in any::<u64>(), n in 1usize..=8, dominant in any::<bool>()) {
        let p = if dominant { dominant_pencil(seed, n) } else { gaussian_pencil(seed, n) };
        let s = eigenvalues_charpoly(&p).unwrap();
        prop_assert_eq!(s.len(), n);
        for v in VARIANTS {
            let f = GershFamily::build(&p, v);
            for z in s.points() {
                prop_assert!(f.contains_within(&z, member_eps(&z)), "{:?} outside {:?}", z, v);
            }
        }
    }

    #[test]
    fn eigenvalues_lie_in_reference_sets(seed in any::<u64>(), n in 1usize..=8) {
        let p = dominant_pencil(seed, n);
        let sets = ReferenceSets::new(&p);
        for z in eigenvalues_charpoly(&p).unwrap().points() {
            let eps = member_eps(&z);
            prop_assert!(sets.near_g(&z, eps), "{:?} outside G", z);
            prop_assert!(sets.near_k(&z, eps), "{:?} outside K", z);
        }
    }

    #[test]
    fn tilde_and_k_sit_inside_plain(seed in any::<u64>(), n in 2usize..=6) {
        let p = dominant_pencil(seed, n);
        let plain = GershFamily::build(&p, Variant::Plain);
        let tilde = GershFamily::build(&p, Variant::Tilde);
        let sets = ReferenceSets::new(&p);
        for z in grid(&plain, 24).into_iter().chain(grid(&tilde, 24)) {
            let eps = tangent_eps(&z);
            for i in 0..n {
                let gamma = &plain.rows[i].gamma;
                if tilde.rows[i].gamma.contains(&z) {
                    prop_assert!(gamma.contains_within(&z, eps), "row {} at {:?}", i, z);
                }
                if sets.rows()[i].in_k(&z) {
                    prop_assert!(gamma.contains_within(&z, eps), "K row {} at {:?}", i, z);
                }
            }
        }
    }

    #[test]
    fn regions_ignore_common_scaling(seed in any::<u64>(), n in 1usize..=6, re in -3.0..3.0f64, im in -3.0..3.0f64) {
        prop_assume!(re.hypot(im) > 0.05);
        let p = gaussian_pencil(seed, n);
        let q = p.scaled(C64::new(re, im));
        for v in VARIANTS {
            let (f, g) = (GershFamily::build(&p, v), GershFamily::build(&q, v));
            let probes = grid(&f, 12);
            for (x, y) in f.regions().zip(g.regions()) {
                prop_assert_eq!(std::mem::discriminant(x), std::mem::discriminant(y));
                for z in &probes {
                    let eps = 1e-9 * (1.0 + z.as_finite().map_or(0.0, |w| w.norm()));
                    if x.contains(z) {
                        prop_assert!(y.contains_within(z, eps));
                    }
                    if y.contains(z) {
                        prop_assert!(x.contains_within(z, eps));
                    }
                }
            }
        }
    }

    #[test]
    fn infinity_membership_by_factor(seed in any::<u64>(), n in 1usize..=6) {
        let p = gaussian_pencil(seed, n);
        for (i, s) in row_stats(&p).iter().enumerate() {
            let gb = gamma_b(&p, i).unwrap();
            prop_assert_eq!(gb.contains_infinity(), gb.is_whole_plane());
            let ga = gamma_a(&p, i).unwrap();
            if s.dominant_a && s.b_diag.norm() > 0.0 {
                let ra = s.ratio_a.unwrap();
                let beta = (s.b_diag.norm() * ra + s.off_b) / (s.b_diag.norm() * (1.0 - ra));
                if beta >= 1.0 {
                    prop_assert!(ga.contains_infinity(), "row {} beta {}", i, beta);
                }
            }
        }
    }

    #[test]
    fn near_tests_are_conservative(seed in any::<u64>(), n in 1usize..=5, x in -6.0..6.0f64, y in -6.0..6.0f64,
                                   h in 0.0..0.5f64, t in 0.0..6.3f64, u in 0.0..1.0f64) {
        let p = gaussian_pencil(seed, n);
        let sets = ReferenceSets::new(&p);
        let z = ExtendedComplex::finite(x, y);
        let w = ExtendedComplex::Finite(C64::new(x, y) + C64::from_polar(h * u, t));
        if sets.in_k(&w) {
            prop_assert!(sets.near_k(&z, h));
        }
        if sets.in_g(&w) {
            prop_assert!(sets.near_g(&z, h));
        }
        prop_assert_eq!(sets.near_k(&z, 0.0), sets.in_k(&z));
    }
}

#[test]
fn simplified_family_reduces_to_classical_disks() {
    let mut r = rng(11);
    for n in 1..=7 {
        let a = gersh::fixtures::gaussian_matrix::<f64, _>(&mut r, n);
        let p = Pencil::new(a.clone(), CMatrix::identity(n)).unwrap();
        let f = gamma_s(&p);
        for i in 0..n {
            let off: f64 = (0..n).filter(|&j| j != i).map(|j| a[(i, j)].norm()).sum();
            match &f.rows[i].gamma {
                Region::Disk { center, radius } => {
                    assert_eq!(*center, a[(i, i)]);
                    assert!((radius - off).abs() <= 1e-15 * (1.0 + off), "row {i}: {radius} vs {off}");
                }
                other => panic!("row {i}: {other:?}"),
            }
        }
    }
}

#[test]
fn non_dominant_row_gives_whole_plane() {
    let p = Pencil::new(
        CMatrix::from_real_rows(&[&[1.0, 5.0], &[0.0, 2.0]]).unwrap(),
        CMatrix::from_real_rows(&[&[1.0, 5.0], &[0.0, 1.0]]).unwrap(),
    )
    .unwrap();
    for v in VARIANTS {
        let f = GershFamily::build(&p, v);
        assert_eq!(f.whole_plane_rows(), vec![0], "{v:?}");
        assert!(f.contains(&ExtendedComplex::finite(1e9, -3.0)));
    }
}
