#![allow(dead_code)]

use gersh::io::Viewport;
use gersh::{fixtures, ExtendedComplex, GershFamily, Pencil, Region, C64};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Plain Gaussian pencil; rows are often not dominant at all.
pub fn gaussian_pencil(seed: u64, n: usize) -> Pencil<f64> {
    let mut r = rng(seed);
    Pencil::new(fixtures::gaussian_matrix(&mut r, n), fixtures::gaussian_matrix(&mut r, n)).unwrap()
}

pub fn dominant_pencil(seed: u64, n: usize) -> Pencil<f64> {
    fixtures::random_dominant_pencil(&mut rng(seed), n)
}

pub fn member_eps(z: &ExtendedComplex<f64>) -> f64 {
    z.as_finite().map_or(0.0, |w| 1e-8 * (1.0 + w.norm()))
}

pub fn tangent_eps(z: &ExtendedComplex<f64>) -> f64 {
    z.as_finite().map_or(0.0, |w| 1e-9 * (1.0 + w.norm()))
}

/// `k x k` cell centers over the family's auto viewport, plus infinity.
pub fn grid(f: &GershFamily<f64>, k: usize) -> Vec<ExtendedComplex<f64>> {
    let regions: Vec<Region<f64>> = f.regions().cloned().collect();
    let (vp, _) = Viewport::auto(&regions);
    let mut pts = vec![ExtendedComplex::Infinity];
    for i in 0..k {
        for j in 0..k {
            pts.push(ExtendedComplex::Finite(C64::new(
                vp.x_min + vp.width() * (i as f64 + 0.5) / k as f64,
                vp.y_min + vp.height() * (j as f64 + 0.5) / k as f64,
            )));
        }
    }
    pts
}
