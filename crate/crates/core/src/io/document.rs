//! Versioned JSON document describing the inclusion regions of a pencil.
//!
//! Row and cluster indices are 1-based in the document. Regions are tagged
//! by `kind`; the point at infinity is written as `{"kind":"infinity"}`.

use num_complex::Complex;
use serde::{Deserialize, Serialize};

use crate::counting::ClusterReport;
use crate::error::{Error, Result};
use crate::model::{Pencil, Region};
use crate::oracle::Spectrum;
use crate::regions::{GershFamily, Variant};

pub const SCHEMA: &str = "gersh/1";

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Point {
    pub re: f64,
    pub im: f64,
}

impl From<Complex<f64>> for Point {
    fn from(z: Complex<f64>) -> Self {
        Point { re: z.re, im: z.im }
    }
}

impl From<Point> for Complex<f64> {
    fn from(p: Point) -> Self {
        Complex::new(p.re, p.im)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RegionRecord {
    WholePlane,
    Disk { center: Point, radius: f64 },
    DiskComplement { center: Point, radius: f64 },
    HalfPlane { alpha: Point },
    Infinity,
    Intersection { parts: Vec<RegionRecord> },
}

impl From<&Region<f64>> for RegionRecord {
    fn from(r: &Region<f64>) -> Self {
        match r {
            Region::WholePlane => RegionRecord::WholePlane,
            Region::Disk { center, radius } => RegionRecord::Disk { center: (*center).into(), radius: *radius },
            Region::DiskComplement { center, radius } => {
                RegionRecord::DiskComplement { center: (*center).into(), radius: *radius }
            }
            Region::HalfPlane { alpha } => RegionRecord::HalfPlane { alpha: (*alpha).into() },
            Region::PointAtInfinity => RegionRecord::Infinity,
            Region::Intersection(l, r) => {
                RegionRecord::Intersection { parts: vec![l.as_ref().into(), r.as_ref().into()] }
            }
        }
    }
}

impl RegionRecord {
    pub fn to_region(&self) -> Result<Region<f64>> {
        Ok(match self {
            RegionRecord::WholePlane => Region::WholePlane,
            RegionRecord::Disk { center, radius } => Region::Disk { center: (*center).into(), radius: *radius },
            RegionRecord::DiskComplement { center, radius } => {
                Region::DiskComplement { center: (*center).into(), radius: *radius }
            }
            RegionRecord::HalfPlane { alpha } => Region::HalfPlane { alpha: (*alpha).into() },
            RegionRecord::Infinity => Region::PointAtInfinity,
            RegionRecord::Intersection { parts } => match parts.as_slice() {
                [l, r] => Region::Intersection(Box::new(l.to_region()?), Box::new(r.to_region()?)),
                _ => return Err(Error::Document(format!("intersection needs 2 parts, got {}", parts.len()))),
            },
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SourceFiles {
    pub a: String,
    pub b: String,
}

/// Lowercase hex SHA-256 digests of the input files.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Checksums {
    pub a: String,
    pub b: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PencilInfo {
    pub n: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub source: Option<SourceFiles>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checksums: Option<Checksums>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RowRecord {
    pub index: usize,
    pub gamma_b: RegionRecord,
    pub gamma_a: RegionRecord,
    pub gamma: RegionRecord,
    pub gamma_tilde: RegionRecord,
    pub gamma_s: RegionRecord,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FamilySummary {
    pub variant: Variant,
    pub whole_plane_rows: Vec<usize>,
    pub bounded: bool,
    pub contains_infinity: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClusterRecord {
    pub rows: Vec<usize>,
    pub expected_count: usize,
    pub certified: bool,
    /// Eigenvalues found in the cluster by the oracle, when one was run.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle_count: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ClusterSummary {
    pub variant: Variant,
    pub exterior_point_found: bool,
    pub clusters: Vec<ClusterRecord>,
}

impl ClusterSummary {
    pub fn new(variant: Variant, report: &ClusterReport) -> Self {
        ClusterSummary {
            variant,
            exterior_point_found: report.exterior_point_found,
            clusters: report
                .clusters
                .iter()
                .map(|c| ClusterRecord {
                    rows: c.indices.iter().map(|i| i + 1).collect(),
                    expected_count: c.expected_count,
                    certified: c.certified,
                    oracle_count: None,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumRecord {
    pub method: String,
    pub finite: Vec<Point>,
    pub infinite_count: usize,
}

impl SpectrumRecord {
    pub fn new(method: &str, s: &Spectrum<f64>) -> Self {
        SpectrumRecord {
            method: method.to_string(),
            finite: s.finite.iter().map(|z| (*z).into()).collect(),
            infinite_count: s.infinite_count,
        }
    }

    pub fn to_spectrum(&self) -> Spectrum<f64> {
        Spectrum { finite: self.finite.iter().map(|p| (*p).into()).collect(), infinite_count: self.infinite_count }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct RegionDocument {
    pub schema: String,
    pub pencil: PencilInfo,
    /// Family drawn by default and used for the cluster report.
    pub variant: Variant,
    pub rows: Vec<RowRecord>,
    pub families: Vec<FamilySummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub clusters: Option<ClusterSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumRecord>,
}

impl RegionDocument {
    /// Evaluates all three families of `p`.
    pub fn build(p: &Pencil<f64>, variant: Variant) -> Self {
        let plain = GershFamily::build(p, Variant::Plain);
        let tilde = GershFamily::build(p, Variant::Tilde);
        let simple = GershFamily::build(p, Variant::Simplified);
        let rows = (0..p.n())
            .map(|i| RowRecord {
                index: i + 1,
                gamma_b: (&plain.rows[i].gamma_b).into(),
                gamma_a: (&plain.rows[i].gamma_a).into(),
                gamma: (&plain.rows[i].gamma).into(),
                gamma_tilde: (&tilde.rows[i].gamma).into(),
                gamma_s: (&simple.rows[i].gamma).into(),
            })
            .collect();
        let families = [&plain, &tilde, &simple]
            .into_iter()
            .map(|f| FamilySummary {
                variant: f.variant,
                whole_plane_rows: f.whole_plane_rows().into_iter().map(|i| i + 1).collect(),
                bounded: f.regions().all(|r| r.is_bounded()),
                contains_infinity: f.regions().any(|r| r.contains_infinity()),
            })
            .collect();
        RegionDocument {
            schema: SCHEMA.to_string(),
            pencil: PencilInfo { n: p.n(), source: None, checksums: None },
            variant,
            rows,
            families,
            clusters: None,
            spectrum: None,
        }
    }

    /// Regions of `variant`, in row order.
    pub fn family(&self, variant: Variant) -> Result<Vec<Region<f64>>> {
        self.rows
            .iter()
            .map(|r| match variant {
                Variant::Plain => &r.gamma,
                Variant::Tilde => &r.gamma_tilde,
                Variant::Simplified => &r.gamma_s,
            })
            .map(RegionRecord::to_region)
            .collect()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document is serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let doc: RegionDocument = serde_json::from_str(text).map_err(|e| Error::Document(e.to_string()))?;
        if doc.schema != SCHEMA {
            return Err(Error::Document(format!("unsupported schema '{}'", doc.schema)));
        }
        if doc.rows.len() != doc.pencil.n {
            return Err(Error::Document(format!("{} rows for n = {}", doc.rows.len(), doc.pencil.n)));
        }
        Ok(doc)
    }
}
