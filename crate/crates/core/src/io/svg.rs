//! SVG figures of an inclusion-region family.
//!
//! Circles and lines are written exactly in complex-plane coordinates inside
//! a `scale(1,-1)` group, so `cx`, `cy` and `r` are the region parameters
//! themselves. The reference sets `G` and `K` have no closed-form boundary
//! and are drawn as raster layers evaluated on a grid of cells.

use std::fmt::Write as _;

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::io::document::RegionDocument;
use crate::model::{ExtendedComplex, Region};
use crate::reference::ReferenceSets;
use crate::regions::Variant;

pub const DEFAULT_GRID: usize = 400;
/// Fraction of the feature extent added on every side of the auto viewport.
pub const MARGIN: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    pub x_min: f64,
    pub x_max: f64,
    pub y_min: f64,
    pub y_max: f64,
}

impl Viewport {
    pub fn new(x_min: f64, x_max: f64, y_min: f64, y_max: f64) -> Self {
        Viewport { x_min, x_max, y_min, y_max }
    }

    /// Square of half-width 1 around `c`.
    pub fn unit(c: Complex<f64>) -> Self {
        Viewport::new(c.re - 1.0, c.re + 1.0, c.im - 1.0, c.im + 1.0)
    }

    pub fn width(&self) -> f64 {
        self.x_max - self.x_min
    }

    pub fn height(&self) -> f64 {
        self.y_max - self.y_min
    }

    pub fn contains(&self, z: Complex<f64>) -> bool {
        (self.x_min..=self.x_max).contains(&z.re) && (self.y_min..=self.y_max).contains(&z.im)
    }

    /// Square viewport around every finite feature of `regions` (circles,
    /// half-plane foci and the origin they refer to) plus a 20% margin.
    ///
    /// The flag is true when the features are empty or collapse to a single
    /// point, in which case a unit viewport is returned instead.
    pub fn auto(regions: &[Region<f64>]) -> (Self, bool) {
        Self::auto_with_points(regions, &[])
    }

    /// As [`Viewport::auto`], with `points` added to the features.
    pub fn auto_with_points(regions: &[Region<f64>], points: &[Complex<f64>]) -> (Self, bool) {
        let mut boxes: Vec<(Complex<f64>, f64)> = points.iter().map(|&z| (z, 0.0)).collect();
        for r in regions {
            for f in r.factors() {
                match f {
                    Region::Disk { center, radius } | Region::DiskComplement { center, radius } => {
                        boxes.push((*center, *radius))
                    }
                    Region::HalfPlane { alpha } => {
                        boxes.push((*alpha, 0.0));
                        boxes.push((Complex::new(0.0, 0.0), 0.0));
                    }
                    _ => {}
                }
            }
        }
        let boxes: Vec<_> =
            boxes.into_iter().filter(|(c, r)| c.re.is_finite() && c.im.is_finite() && r.is_finite()).collect();
        let Some(&(first, _)) = boxes.first() else {
            return (Viewport::unit(Complex::new(0.0, 0.0)), true);
        };
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for (c, r) in &boxes {
            x0 = x0.min(c.re - r);
            x1 = x1.max(c.re + r);
            y0 = y0.min(c.im - r);
            y1 = y1.max(c.im + r);
        }
        let side = (x1 - x0).max(y1 - y0);
        if !(side > 0.0) {
            return (Viewport::unit(first), true);
        }
        let half = side * (0.5 + MARGIN);
        let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
        (Viewport::new(cx - half, cx + half, cy - half, cy + half), false)
    }
}

/// How a grid cell is decided for a raster layer.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RasterRule {
    /// Painted if the set may meet the cell: the membership test is relaxed
    /// by the cell's half-diagonal, so no point of the set lands in an
    /// unpainted cell.
    #[default]
    Cover,
    /// Painted if the cell center is in the set.
    Center,
}

impl std::str::FromStr for RasterRule {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "cover" => Ok(RasterRule::Cover),
            "center" => Ok(RasterRule::Center),
            _ => Err(format!("unknown raster rule '{s}' (expected cover or center)")),
        }
    }
}

/// Boolean image over a viewport; cell `(ix, iy)` spans
/// `[x_min + ix dx, x_min + (ix+1) dx] x [y_min + iy dy, y_min + (iy+1) dy]`.
#[derive(Clone, Debug, PartialEq)]
pub struct Raster {
    pub viewport: Viewport,
    pub grid: usize,
    /// Row-major, `iy * grid + ix`.
    pub painted: Vec<bool>,
}

impl Raster {
    pub fn cell_size(&self) -> (f64, f64) {
        (self.viewport.width() / self.grid as f64, self.viewport.height() / self.grid as f64)
    }

    pub fn cell_center(&self, ix: usize, iy: usize) -> Complex<f64> {
        let (dx, dy) = self.cell_size();
        Complex::new(self.viewport.x_min + (ix as f64 + 0.5) * dx, self.viewport.y_min + (iy as f64 + 0.5) * dy)
    }

    /// Cell containing `z`, if `z` is inside the viewport.
    pub fn cell_of(&self, z: Complex<f64>) -> Option<(usize, usize)> {
        if !self.viewport.contains(z) {
            return None;
        }
        let (dx, dy) = self.cell_size();
        let ix = (((z.re - self.viewport.x_min) / dx) as usize).min(self.grid - 1);
        let iy = (((z.im - self.viewport.y_min) / dy) as usize).min(self.grid - 1);
        Some((ix, iy))
    }

    pub fn is_painted(&self, ix: usize, iy: usize) -> bool {
        self.painted[iy * self.grid + ix]
    }

    /// Horizontal runs of painted cells as `(iy, ix_start, length)`.
    pub fn runs(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for iy in 0..self.grid {
            let mut ix = 0;
            while ix < self.grid {
                if self.is_painted(ix, iy) {
                    let start = ix;
                    while ix < self.grid && self.is_painted(ix, iy) {
                        ix += 1;
                    }
                    out.push((iy, start, ix - start));
                } else {
                    ix += 1;
                }
            }
        }
        out
    }
}

/// Evaluates `near(z, h)` at every cell center, where `h` is the cell's
/// half-diagonal under [`RasterRule::Cover`] and 0 under [`RasterRule::Center`].
/// Rows are processed in parallel.
pub fn rasterize<F>(viewport: Viewport, grid: usize, rule: RasterRule, near: F) -> Raster
where
    F: Fn(&ExtendedComplex<f64>, f64) -> bool + Sync,
{
    let grid = grid.max(1);
    let dx = viewport.width() / grid as f64;
    let dy = viewport.height() / grid as f64;
    let h = match rule {
        RasterRule::Cover => 0.5 * dx.hypot(dy),
        RasterRule::Center => 0.0,
    };
    let painted: Vec<bool> = (0..grid)
        .into_par_iter()
        .flat_map_iter(|iy| {
            let y = viewport.y_min + (iy as f64 + 0.5) * dy;
            let near = &near;
            (0..grid).map(move |ix| near(&ExtendedComplex::finite(viewport.x_min + (ix as f64 + 0.5) * dx, y), h))
        })
        .collect();
    Raster { viewport, grid, painted }
}

#[derive(Clone, Debug)]
pub struct SvgOptions {
    /// Family to draw; the document's own variant when `None`.
    pub variant: Option<Variant>,
    pub grid: usize,
    pub rule: RasterRule,
    /// Overrides the automatic viewport.
    pub viewport: Option<Viewport>,
    /// Output width and height in pixels.
    pub pixels: usize,
    pub draw_g: bool,
    pub draw_k: bool,
    pub draw_eigenvalues: bool,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions {
            variant: None,
            grid: DEFAULT_GRID,
            rule: RasterRule::Cover,
            viewport: None,
            pixels: 600,
            draw_g: true,
            draw_k: true,
            draw_eigenvalues: true,
        }
    }
}

/// Rendered figure and the viewport it uses.
#[derive(Clone, Debug)]
pub struct Figure {
    pub svg: String,
    pub viewport: Viewport,
    /// True when the automatic viewport fell back to a unit square.
    pub viewport_degenerate: bool,
}

fn num(x: f64) -> String {
    format!("{x:?}")
}

/// Polygon of the viewport clipped to `Re(z conj(alpha)) >= |alpha|^2 / 2`.
fn half_plane_polygon(alpha: Complex<f64>, vp: &Viewport) -> Vec<Complex<f64>> {
    let corners = [
        Complex::new(vp.x_min, vp.y_min),
        Complex::new(vp.x_max, vp.y_min),
        Complex::new(vp.x_max, vp.y_max),
        Complex::new(vp.x_min, vp.y_max),
    ];
    let level = alpha.norm_sqr() / 2.0;
    let side = |z: Complex<f64>| (z * alpha.conj()).re - level;
    let mut out = Vec::new();
    for k in 0..4 {
        let (p, q) = (corners[k], corners[(k + 1) % 4]);
        let (sp, sq) = (side(p), side(q));
        if sp >= 0.0 {
            out.push(p);
        }
        if (sp >= 0.0) != (sq >= 0.0) {
            out.push(p + (q - p) * (sp / (sp - sq)));
        }
    }
    out
}

/// Part of the bisector of `0` and `alpha` inside the viewport.
fn bisector_segment(alpha: Complex<f64>, vp: &Viewport) -> Option<(Complex<f64>, Complex<f64>)> {
    if alpha.norm() == 0.0 {
        return None;
    }
    let p0 = alpha / 2.0;
    let d = alpha * Complex::new(0.0, 1.0);
    let (mut t0, mut t1) = (f64::NEG_INFINITY, f64::INFINITY);
    for (p, dir, lo, hi) in [(p0.re, d.re, vp.x_min, vp.x_max), (p0.im, d.im, vp.y_min, vp.y_max)] {
        if dir == 0.0 {
            if p < lo || p > hi {
                return None;
            }
        } else {
            let (a, b) = ((lo - p) / dir, (hi - p) / dir);
            t0 = t0.max(a.min(b));
            t1 = t1.min(a.max(b));
        }
    }
    (t0 < t1).then(|| (p0 + d * t0, p0 + d * t1))
}

fn circle_path(c: Complex<f64>, r: f64) -> String {
    format!(
        "M {} {} A {r} {r} 0 1 0 {} {} A {r} {r} 0 1 0 {} {} Z",
        num(c.re + r),
        num(c.im),
        num(c.re - r),
        num(c.im),
        num(c.re + r),
        num(c.im),
        r = num(r)
    )
}

fn rect_path(vp: &Viewport) -> String {
    format!(
        "M {x0} {y0} H {x1} V {y1} H {x0} Z",
        x0 = num(vp.x_min),
        x1 = num(vp.x_max),
        y0 = num(vp.y_min),
        y1 = num(vp.y_max)
    )
}

/// Fill element of a region; clip paths needed for intersections are appended to `defs`.
fn fill_element(r: &Region<f64>, vp: &Viewport, defs: &mut String, next_id: &mut usize) -> Option<String> {
    let class = if r.is_bounded() { "fill" } else { "hatched" };
    match r {
        Region::Disk { center, radius } => Some(format!(
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}"/>"#,
            num(center.re),
            num(center.im),
            num(*radius)
        )),
        Region::DiskComplement { center, radius } => Some(format!(
            r#"<path class="{class}" fill-rule="evenodd" d="{} {}"/>"#,
            rect_path(vp),
            circle_path(*center, *radius)
        )),
        Region::HalfPlane { alpha } => {
            let poly = half_plane_polygon(*alpha, vp);
            (poly.len() >= 3).then(|| {
                let pts: Vec<String> = poly.iter().map(|z| format!("{},{}", num(z.re), num(z.im))).collect();
                format!(r#"<polygon class="{class}" points="{}"/>"#, pts.join(" "))
            })
        }
        Region::WholePlane => Some(format!(r#"<path class="{class}" d="{}"/>"#, rect_path(vp))),
        Region::PointAtInfinity => None,
        Region::Intersection(left, right) => {
            let clip = fill_element(right, vp, defs, next_id)?;
            let id = format!("clip{}", *next_id);
            *next_id += 1;
            let _ = write!(defs, r#"<clipPath id="{id}">{clip}</clipPath>"#);
            let inner = fill_element(left, vp, defs, next_id)?;
            Some(format!(r#"<g clip-path="url(#{id})">{inner}</g>"#))
        }
    }
}

fn boundary_elements(r: &Region<f64>, row: usize, vp: &Viewport, out: &mut String) {
    for f in r.factors() {
        match f {
            Region::Disk { center, radius } | Region::DiskComplement { center, radius } => {
                let kind = if matches!(f, Region::Disk { .. }) { "disk" } else { "disk_complement" };
                let _ = writeln!(
                    out,
                    r#"<circle class="boundary" data-row="{row}" data-kind="{kind}" cx="{}" cy="{}" r="{}"/>"#,
                    num(center.re),
                    num(center.im),
                    num(*radius)
                );
            }
            Region::HalfPlane { alpha } => {
                if let Some((p, q)) = bisector_segment(*alpha, vp) {
                    let _ = writeln!(
                        out,
                        r#"<line class="boundary" data-row="{row}" data-kind="half_plane" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
                        num(p.re),
                        num(p.im),
                        num(q.re),
                        num(q.im)
                    );
                }
            }
            _ => {}
        }
    }
}

fn raster_layer(name: &str, raster: &Raster, out: &mut String) {
    let (dx, dy) = raster.cell_size();
    let vp = raster.viewport;
    let _ = writeln!(out, r#"<g class="raster-{name}" data-grid="{}">"#, raster.grid);
    for (iy, ix, len) in raster.runs() {
        let _ = writeln!(
            out,
            r#"<rect x="{}" y="{}" width="{}" height="{}"/>"#,
            num(vp.x_min + ix as f64 * dx),
            num(vp.y_min + iy as f64 * dy),
            num(len as f64 * dx),
            num(dy)
        );
    }
    out.push_str("</g>\n");
}

/// Renders the document's family, optional `G`/`K` layers from `sets`, and
/// the document's spectrum as cross markers.
pub fn render_svg(doc: &RegionDocument, sets: Option<&ReferenceSets<f64>>, opts: &SvgOptions) -> Result<Figure> {
    let variant = opts.variant.unwrap_or(doc.variant);
    let regions = doc.family(variant)?;
    let (viewport, degenerate) = match opts.viewport {
        Some(v) => (v, false),
        None => {
            let marks: Vec<Complex<f64>> = match (&doc.spectrum, opts.draw_eigenvalues) {
                (Some(spec), true) => spec.to_spectrum().finite,
                _ => Vec::new(),
            };
            Viewport::auto_with_points(&regions, &marks)
        }
    };
    let vp = viewport;
    let w = vp.width();
    let hatch = w / 80.0;
    let mut body = String::new();
    let mut defs = String::new();
    let mut next_id = 0;

    if let Some(sets) = sets {
        if opts.draw_g {
            let g = rasterize(vp, opts.grid, opts.rule, |z, h| sets.near_g(z, h));
            raster_layer("g", &g, &mut body);
        }
        if opts.draw_k {
            let k = rasterize(vp, opts.grid, opts.rule, |z, h| sets.near_k(z, h));
            raster_layer("k", &k, &mut body);
        }
    }

    let _ = writeln!(body, r#"<g class="family" data-variant="{}">"#, variant.name());
    for (i, r) in regions.iter().enumerate() {
        if let Some(el) = fill_element(r, &vp, &mut defs, &mut next_id) {
            let _ = writeln!(body, r#"<g data-row="{}">{el}</g>"#, i + 1);
        }
    }
    for (i, r) in regions.iter().enumerate() {
        boundary_elements(r, i + 1, &vp, &mut body);
    }
    body.push_str("</g>\n");

    if vp.y_min <= 0.0 && vp.y_max >= 0.0 {
        let _ = writeln!(body, r#"<line class="axis" x1="{}" y1="0" x2="{}" y2="0"/>"#, num(vp.x_min), num(vp.x_max));
    }
    if vp.x_min <= 0.0 && vp.x_max >= 0.0 {
        let _ = writeln!(body, r#"<line class="axis" x1="0" y1="{}" x2="0" y2="{}"/>"#, num(vp.y_min), num(vp.y_max));
    }

    let mut infinite = 0;
    if opts.draw_eigenvalues {
        if let Some(spec) = &doc.spectrum {
            infinite = spec.infinite_count;
            let s = w * 0.012;
            for p in &spec.finite {
                let _ = writeln!(
                    body,
                    r#"<g class="eigenvalue" data-re="{}" data-im="{}"><line x1="{}" y1="{}" x2="{}" y2="{}"/><line x1="{}" y1="{}" x2="{}" y2="{}"/></g>"#,
                    num(p.re),
                    num(p.im),
                    num(p.re - s),
                    num(p.im - s),
                    num(p.re + s),
                    num(p.im + s),
                    num(p.re - s),
                    num(p.im + s),
                    num(p.re + s),
                    num(p.im - s)
                );
            }
        }
    }

    let mut svg = String::new();
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px}" height="{px}" viewBox="{} {} {} {}">"#,
        num(vp.x_min),
        num(-vp.y_max),
        num(w),
        num(vp.height()),
        px = opts.pixels
    );
    let _ = writeln!(
        svg,
        "<title>{} family, n = {}{}</title>",
        variant.name(),
        doc.pencil.n,
        if infinite > 0 { format!(", {infinite} infinite eigenvalue(s)") } else { String::new() }
    );
    // one output pixel in plane units, so line widths do not depend on the zoom
    let px = w / opts.pixels.max(1) as f64;
    let _ = writeln!(
        svg,
        "<style>\
.fill{{fill:#3b6fc4;fill-opacity:0.12;stroke:none}}\
.hatched{{fill:url(#hatch);stroke:none}}\
.boundary{{fill:none;stroke:#1b3f80;stroke-width:{}}}\
.raster-g rect{{fill:#e0a040;fill-opacity:0.35}}\
.raster-k rect{{fill:#40a070;fill-opacity:0.35}}\
.axis{{stroke:#888;stroke-width:{}}}\
.eigenvalue line{{stroke:#c01818;stroke-width:{}}}\
</style>",
        num(1.2 * px),
        num(0.6 * px),
        num(1.4 * px)
    );
    let _ = writeln!(
        svg,
        r##"<defs><pattern id="hatch" patternUnits="userSpaceOnUse" width="{h}" height="{h}"><path d="M 0 0 L {h} {h}" stroke="#3b6fc4" stroke-width="{sw}"/></pattern>{defs}</defs>"##,
        h = num(hatch),
        sw = num(hatch / 8.0)
    );
    svg.push_str("<g transform=\"scale(1,-1)\">\n");
    svg.push_str(&body);
    svg.push_str("</g>\n</svg>\n");
    Ok(Figure { svg, viewport, viewport_degenerate: degenerate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::io::document::SpectrumRecord;
    use crate::model::Pencil;
    use crate::oracle::eigenvalues_charpoly;

    fn circles(svg: &str) -> Vec<(f64, f64, f64)> {
        svg.lines()
            .filter(|l| l.starts_with(r#"<circle class="boundary""#))
            .map(|l| {
                let attr = |name: &str| -> f64 {
                    let key = format!(" {name}=\"");
                    let start = l.find(&key).unwrap() + key.len();
                    l[start..start + l[start..].find('"').unwrap()].parse().unwrap()
                };
                (attr("cx"), attr("cy"), attr("r"))
            })
            .collect()
    }

    #[test]
    fn example1_circles() {
        let p = fixtures::example1::<f64>();
        let doc = RegionDocument::build(&p, Variant::Plain);
        let fig = render_svg(&doc, None, &SvgOptions::default()).unwrap();
        assert!(circles(&fig.svg).contains(&(1.0, 0.0, 4.0)));
        let fig = render_svg(&doc, None, &SvgOptions { variant: Some(Variant::Tilde), ..Default::default() }).unwrap();
        let c = circles(&fig.svg);
        assert!(c.iter().any(|&(x, y, r)| (x - 4.0 / 3.0).abs() < 1e-15 && y == 0.0 && (r - 11.0 / 3.0).abs() < 1e-15));
    }

    #[test]
    fn auto_viewport() {
        let (vp, deg) = Viewport::auto(&[Region::Disk { center: Complex::new(1.0, 0.0), radius: 4.0 }]);
        assert!(!deg);
        assert!((vp.x_min - (1.0 - 4.0 * 1.4)).abs() < 1e-12 && (vp.x_max - (1.0 + 4.0 * 1.4)).abs() < 1e-12);
        assert!((vp.width() - vp.height()).abs() < 1e-12);
        let (vp, deg) = Viewport::auto(&[Region::Disk { center: Complex::new(2.0, 1.0), radius: 0.0 }]);
        assert!(deg);
        assert_eq!(vp, Viewport::unit(Complex::new(2.0, 1.0)));
        let (_, deg) = Viewport::auto(&[Region::WholePlane, Region::PointAtInfinity]);
        assert!(deg);
        let (vp, deg) =
            Viewport::auto_with_points(&[Region::WholePlane], &[Complex::new(0.0, 0.0), Complex::new(10.0, 0.0)]);
        assert!(!deg && vp.contains(Complex::new(10.0, 0.0)) && vp.contains(Complex::new(0.0, 0.0)));
    }

    #[test]
    fn half_plane_geometry() {
        let vp = Viewport::new(-2.0, 2.0, -2.0, 2.0);
        // Re z >= 1
        let poly = half_plane_polygon(Complex::new(2.0, 0.0), &vp);
        assert_eq!(poly.len(), 4);
        assert!(poly.iter().all(|z| z.re >= 1.0 - 1e-12));
        let (p, q) = bisector_segment(Complex::new(2.0, 0.0), &vp).unwrap();
        assert!((p.re - 1.0).abs() < 1e-12 && (q.re - 1.0).abs() < 1e-12);
        assert!(((p.im - q.im).abs() - 4.0).abs() < 1e-12);
        assert!(bisector_segment(Complex::new(10.0, 0.0), &vp).is_none());
    }

    #[test]
    fn center_rule_agrees_with_predicate() {
        let p = fixtures::testmat::<f64>(8, 1.0, 1.0);
        let sets = ReferenceSets::new(&p);
        let vp = Viewport::new(-1.0, 3.0, -2.0, 2.0);
        let k = rasterize(vp, 60, RasterRule::Center, |z, h| sets.near_k(z, h));
        for iy in 0..60 {
            for ix in 0..60 {
                let z = ExtendedComplex::Finite(k.cell_center(ix, iy));
                assert_eq!(k.is_painted(ix, iy), sets.in_k(&z));
            }
        }
        let cover = rasterize(vp, 60, RasterRule::Cover, |z, h| sets.near_k(z, h));
        assert!(k.painted.iter().zip(&cover.painted).all(|(a, b)| !a || *b));
    }

    #[test]
    fn raster_contains_eigenvalue_cells() {
        for (a, b) in [(2.0, 1.0), (1.0, 1.0)] {
            let p: Pencil<f64> = fixtures::testmat(10, a, b);
            let eigs = eigenvalues_charpoly(&p).unwrap();
            let mut doc = RegionDocument::build(&p, Variant::Plain);
            doc.spectrum = Some(SpectrumRecord::new("charpoly", &eigs));
            let sets = ReferenceSets::new(&p);
            let fig = render_svg(&doc, Some(&sets), &SvgOptions { grid: 80, ..Default::default() }).unwrap();
            assert!(fig.svg.contains(r#"<g class="raster-k""#));
            let k = rasterize(fig.viewport, 80, RasterRule::Cover, |z, h| sets.near_k(z, h));
            for z in &eigs.finite {
                if let Some((ix, iy)) = k.cell_of(*z) {
                    assert!(k.is_painted(ix, iy), "{z} not painted for ({a},{b})");
                }
            }
        }
    }

    #[test]
    fn runs_merge_cells() {
        let r = Raster {
            viewport: Viewport::unit(Complex::new(0.0, 0.0)),
            grid: 4,
            painted: vec![
                true, true, false, true, //
                false, false, false, false, //
                true, true, true, true, //
                false, true, false, false,
            ],
        };
        assert_eq!(r.runs(), vec![(0, 0, 2), (0, 3, 1), (2, 0, 4), (3, 1, 1)]);
    }
}
