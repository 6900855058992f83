//! File formats: Matrix Market input, JSON region documents, SVG figures.

pub mod document;
pub mod mtx;
pub mod svg;

pub use document::{RegionDocument, RegionRecord, SCHEMA};
pub use mtx::{format_matrix_market, parse_matrix_market, read_matrix_market, write_matrix_market};
pub use svg::{rasterize, render_svg, Figure, Raster, RasterRule, SvgOptions, Viewport};
