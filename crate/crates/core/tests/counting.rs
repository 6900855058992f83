mod common;

use common::*;
use gersh::{components, eigenvalues, fixtures, verify_counts, CMatrix, GershFamily, Method, Pencil, Variant, C64};
use proptest::prelude::*;

/// Off-diagonal entries of both matrices multiplied by `t`.
fn shrink(p: &Pencil<f64>, t: f64) -> Pencil<f64> {
    let n = p.n();
    let f = |m: &CMatrix<f64>| CMatrix::from_fn(n, n, |i, j| if i == j { m[(i, j)] } else { m[(i, j)] * t });
    Pencil::new(f(p.a()), f(p.b())).unwrap()
}

fn cluster_of(report: &gersh::ClusterReport, n: usize) -> Vec<usize> {
    let mut id = vec![0; n];
    for (k, c) in report.clusters.iter().enumerate() {
        for &i in &c.indices {
            id[i] = k;
        }
    }
    id
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn certified_counts_match_oracle(seed in any::<u64>(), n in 1usize..=8, gap in 0.5..6.0f64, coupling in 0.01..0.5f64) {
        let p = fixtures::random_separated_pencil::<f64, _>(&mut rng(seed), n, gap, coupling);
        let eigs = eigenvalues(&p, Method::Auto).unwrap().points();
        for v in [Variant::Plain, Variant::Tilde, Variant::Simplified] {
            let f = GershFamily::build(&p, v);
            let report = components(&f);
            let rows: usize = report.clusters.iter().map(|c| c.indices.len()).sum();
            prop_assert_eq!(rows, n);
            prop_assert!(verify_counts(&f, &report, &eigs, 1e-8).is_ok(), "{:?}: {:?}", v, report);
        }
    }

    #[test]
    fn shrinking_coupling_never_merges(seed in any::<u64>(), n in 2usize..=8, coupling in 0.01..0.5f64, t in 0.0..1.0f64) {
        let p = fixtures::random_separated_pencil::<f64, _>(&mut rng(seed), n, 3.0, coupling);
        let before = components(&GershFamily::build(&p, Variant::Simplified));
        let after = components(&GershFamily::build(&shrink(&p, t), Variant::Simplified));
        let (b, a) = (cluster_of(&before, n), cluster_of(&after, n));
        for i in 0..n {
            for j in 0..n {
                if b[i] != b[j] && before.clusters[b[i]].certified {
                    prop_assert_ne!(a[i], a[j], "rows {} and {} merged at t = {}", i, j, t);
                }
            }
        }
    }
}

#[test]
fn diagonal_pencil_splits_into_singletons() {
    let d: Vec<C64> = (0..5).map(|k| C64::new(k as f64, 0.0)).collect();
    let p = Pencil::new(CMatrix::from_diag(&d), CMatrix::identity(5)).unwrap();
    let report = components(&GershFamily::build(&p, Variant::Plain));
    assert_eq!(report.clusters.len(), 5);
    assert!(report.clusters.iter().all(|c| c.certified && c.expected_count == 1));
}
