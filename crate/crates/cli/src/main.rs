//! `gersh`: inclusion regions, eigenvalue counts and error bounds for `A - zB`.
//!
//! Exit status: 0 success, 1 usage error, 2 bad input data, 3 numerical failure.

// `!(x < y)` is used on purpose so that NaN fails the check
#![allow(clippy::neg_cmp_op_on_partial_ord)]

use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use gersh::counting::{components, verify_counts};
use gersh::io::document::{Checksums, ClusterSummary, RegionDocument, SourceFiles, SpectrumRecord};
use gersh::io::{read_matrix_market, render_svg, write_matrix_market, RasterRule, SvgOptions, Viewport};
use gersh::{
    error_bounds, fixtures, residual_data, Error, ExtendedComplex, Family64, GershFamily, Method, Pencil,
    ReferenceSets, Spectrum, Variant,
};
use sha2::{Digest, Sha256};

/// Membership tolerance for oracle eigenvalues: `1e-8 (1 + |z|)`.
const MEMBERSHIP_TOL: f64 = 1e-8;

#[derive(Parser)]
#[command(name = "gersh", version, about = "Gerschgorin-type inclusion regions for matrix pencils A - zB")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the inclusion regions and write a JSON document and/or SVG figure.
    Regions {
        #[command(flatten)]
        input: PencilFiles,
        #[command(flatten)]
        out: RegionOutput,
    },
    /// Report which sets contain a point.
    Check {
        #[command(flatten)]
        input: PencilFiles,
        /// Point as RE,IM.
        #[arg(long, allow_hyphen_values = true, required_unless_present = "inf", conflicts_with = "inf")]
        point: Option<String>,
        /// Query the point at infinity.
        #[arg(long)]
        inf: bool,
        /// Absolute slack added to region radii.
        #[arg(long, default_value_t = 0.0)]
        tol: f64,
    },
    /// Group rows into isolated clusters and report eigenvalue counts.
    Count {
        #[command(flatten)]
        input: PencilFiles,
        #[arg(long, default_value = "plain")]
        variant: Variant,
        /// Check the counts against an eigenvalue oracle.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, default_value = "auto")]
        method: Method,
        /// Print the cluster report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Print the spectrum computed by an oracle.
    Eigs {
        #[command(flatten)]
        input: PencilFiles,
        #[arg(long, default_value = "auto")]
        method: Method,
        #[arg(long)]
        json: bool,
    },
    /// Error bounds from transformed matrices Y^H A X and Y^H B X.
    Fwderr {
        ahat: PathBuf,
        bhat: PathBuf,
        /// 1-based target index; every index when omitted.
        #[arg(long)]
        index: Option<usize>,
    },
    /// Built-in test pencils.
    Demo {
        #[command(subcommand)]
        which: Demo,
    },
}

#[derive(Subcommand)]
enum Demo {
    /// A = tridiag(a, 4, a), B = tridiag(b, 4, b).
    #[command(allow_negative_numbers = true)]
    Testmat {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        a: f64,
        #[arg(long)]
        b: f64,
        /// Also write A.mtx and B.mtx into this directory.
        #[arg(long)]
        write_mtx: Option<PathBuf>,
        #[command(flatten)]
        out: RegionOutput,
    },
}

#[derive(Args)]
struct PencilFiles {
    a: PathBuf,
    b: PathBuf,
}

#[derive(Args)]
struct RegionOutput {
    #[arg(long, default_value = "plain")]
    variant: Variant,
    /// JSON document path; printed to stdout when neither --json nor --svg is given.
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    svg: Option<PathBuf>,
    /// Grid resolution of the G and K raster layers.
    #[arg(long, default_value_t = gersh::io::svg::DEFAULT_GRID)]
    grid: usize,
    /// Raster cell rule: cover or center.
    #[arg(long, default_value = "cover")]
    raster: RasterRule,
    /// Viewport as XMIN,XMAX,YMIN,YMAX.
    #[arg(long, allow_hyphen_values = true)]
    viewport: Option<String>,
    /// Omit the G and K layers from the figure.
    #[arg(long)]
    no_reference: bool,
    /// Add the oracle spectrum to the document and figure.
    #[arg(long)]
    with_oracle: bool,
    #[arg(long, default_value = "auto")]
    method: Method,
}

enum Failure {
    Usage(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_numerical() { 3 } else { 2 })
        }
    }
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Regions { input, out } => {
            let (p, source, sums) = load_pencil(&input)?;
            let mut doc = RegionDocument::build(&p, out.variant);
            doc.pencil.source = Some(source);
            doc.pencil.checksums = Some(sums);
            emit_regions(&p, doc, &out)
        }
        Command::Check { input, point, inf, tol } => {
            let (p, _, _) = load_pencil(&input)?;
            let z = match (point, inf) {
                (_, true) => ExtendedComplex::Infinity,
                (Some(s), false) => {
                    let v = parse_list(&s, 2, "--point")?;
                    ExtendedComplex::finite(v[0], v[1])
                }
                (None, false) => return Err(Failure::Usage("one of --point or --inf is required".into())),
            };
            if !(tol >= 0.0) {
                return Err(Failure::Usage("--tol must be non-negative".into()));
            }
            print!("{}", check_report(&p, &z, tol));
            Ok(())
        }
        Command::Count { input, variant, with_oracle, method, json } => {
            let (p, _, _) = load_pencil(&input)?;
            let family = GershFamily::build(&p, variant);
            let report = components(&family);
            let mut summary = ClusterSummary::new(variant, &report);
            let mut verdict = Ok(());
            if with_oracle {
                let spec = gersh::eigenvalues(&p, method)?;
                let points = spec.points();
                for (rec, cluster) in summary.clusters.iter_mut().zip(&report.clusters) {
                    rec.oracle_count = Some(count_in(&family, &cluster.indices, &points));
                }
                verdict = verify_counts(&family, &report, &points, MEMBERSHIP_TOL);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&summary).expect("serializable"));
            } else {
                print!("{}", count_text(&summary));
            }
            verdict.map_err(Failure::from)
        }
        Command::Eigs { input, method, json } => {
            let (p, _, _) = load_pencil(&input)?;
            let spec = gersh::eigenvalues(&p, method)?.sorted();
            if json {
                let rec = SpectrumRecord::new(method_name(method), &spec);
                println!("{}", serde_json::to_string_pretty(&rec).expect("serializable"));
            } else {
                print!("{}", spectrum_text(&spec));
            }
            Ok(())
        }
        Command::Fwderr { ahat, bhat, index } => {
            if index == Some(0) {
                return Err(Failure::Usage("--index is 1-based".into()));
            }
            let a = read_matrix_market::<f64>(&ahat)?;
            let b = read_matrix_market::<f64>(&bhat)?;
            let data = residual_data(&a, &b)?;
            let targets: Vec<usize> = match index {
                Some(i) if i > data.len() => {
                    return Err(Failure::Usage(format!("--index {i} exceeds n = {}", data.len())))
                }
                Some(i) => vec![i - 1],
                None => (0..data.len()).collect(),
            };
            let mut reports = Vec::new();
            for i in targets {
                let mut v = serde_json::to_value(error_bounds(&data, i)?).expect("serializable");
                v["index"] = (i + 1).into();
                if let Some(members) = v["clusterIndices"].as_array_mut() {
                    for m in members {
                        *m = (m.as_u64().unwrap_or(0) + 1).into();
                    }
                }
                reports.push(v);
            }
            println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
            Ok(())
        }
        Command::Demo { which: Demo::Testmat { n, a, b, write_mtx, out } } => {
            if n == 0 {
                return Err(Failure::Core(Error::Empty));
            }
            if !(a.is_finite() && b.is_finite()) {
                return Err(Failure::Usage("--a and --b must be finite".into()));
            }
            let p = fixtures::testmat::<f64>(n, a, b);
            if let Some(dir) = write_mtx {
                std::fs::create_dir_all(&dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
                write_matrix_market(dir.join("A.mtx"), p.a())?;
                write_matrix_market(dir.join("B.mtx"), p.b())?;
            }
            let doc = RegionDocument::build(&p, out.variant);
            emit_regions(&p, doc, &out)
        }
    }
}

fn load_pencil(input: &PencilFiles) -> Outcome<(Pencil<f64>, SourceFiles, Checksums)> {
    let a = read_matrix_market::<f64>(&input.a)?;
    let b = read_matrix_market::<f64>(&input.b)?;
    let p = Pencil::new(a, b)?;
    let source = SourceFiles { a: input.a.display().to_string(), b: input.b.display().to_string() };
    let sums = Checksums { a: sha256_file(&input.a)?, b: sha256_file(&input.b)? };
    Ok((p, source, sums))
}

fn sha256_file(path: &Path) -> Outcome<String> {
    let bytes = std::fs::read(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    Ok(Sha256::digest(&bytes).iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    }))
}

fn parse_list(s: &str, len: usize, flag: &str) -> Outcome<Vec<f64>> {
    let vals: Result<Vec<f64>, _> = s.split(',').map(|t| t.trim().parse::<f64>()).collect();
    match vals {
        Ok(v) if v.len() == len && v.iter().all(|x| x.is_finite()) => Ok(v),
        _ => Err(Failure::Usage(format!("{flag} expects {len} comma-separated finite numbers, got '{s}'"))),
    }
}

fn method_name(m: Method) -> &'static str {
    match m {
        Method::Charpoly => "charpoly",
        Method::Qr => "qr",
        Method::Auto => "auto",
    }
}

fn emit_regions(p: &Pencil<f64>, mut doc: RegionDocument, out: &RegionOutput) -> Outcome {
    let family = GershFamily::build(p, out.variant);
    let report = components(&family);
    let mut summary = ClusterSummary::new(out.variant, &report);
    if out.with_oracle {
        let spec = gersh::eigenvalues(p, out.method)?.sorted();
        let points = spec.points();
        for (rec, cluster) in summary.clusters.iter_mut().zip(&report.clusters) {
            rec.oracle_count = Some(count_in(&family, &cluster.indices, &points));
        }
        doc.spectrum = Some(SpectrumRecord::new(method_name(out.method), &spec));
    }
    doc.clusters = Some(summary);
    let viewport = match &out.viewport {
        Some(s) => {
            let v = parse_list(s, 4, "--viewport")?;
            if !(v[1] > v[0] && v[3] > v[2]) {
                return Err(Failure::Usage("--viewport needs XMIN < XMAX and YMIN < YMAX".into()));
            }
            Some(Viewport::new(v[0], v[1], v[2], v[3]))
        }
        None => None,
    };
    if out.grid == 0 {
        return Err(Failure::Usage("--grid must be positive".into()));
    }
    if let Some(path) = &out.svg {
        let sets = (!out.no_reference).then(|| ReferenceSets::new(p));
        let opts = SvgOptions { grid: out.grid, rule: out.raster, viewport, ..Default::default() };
        let fig = render_svg(&doc, sets.as_ref(), &opts)?;
        if fig.viewport_degenerate {
            eprintln!("warning: region features are degenerate; using a unit viewport");
        }
        write_file(path, &fig.svg)?;
    }
    let json = doc.to_json();
    match &out.json {
        Some(path) => write_file(path, &json)?,
        None if out.svg.is_none() => print!("{json}"),
        None => {}
    }
    Ok(())
}

fn write_file(path: &Path, text: &str) -> Outcome {
    std::fs::write(path, text).map_err(|e| Failure::Core(Error::Io(format!("{}: {e}", path.display()))))
}

fn count_in(family: &Family64, rows: &[usize], points: &[ExtendedComplex<f64>]) -> usize {
    points
        .iter()
        .filter(|z| {
            let eps = MEMBERSHIP_TOL * (1.0 + z.as_finite().map_or(0.0, |w| w.norm()));
            rows.iter().any(|&i| family.rows[i].gamma.contains_within(z, eps))
        })
        .count()
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "member"
    } else {
        "not a member"
    }
}

fn rows_text(rows: &[usize]) -> String {
    rows.iter().map(|r| r.to_string()).collect::<Vec<_>>().join(",")
}

fn check_report(p: &Pencil<f64>, z: &ExtendedComplex<f64>, tol: f64) -> String {
    let mut out = String::new();
    match z {
        ExtendedComplex::Infinity => out.push_str("point inf\n"),
        ExtendedComplex::Finite(w) => {
            let _ = writeln!(out, "point {} {}", w.re, w.im);
        }
    }
    for v in Variant::ALL {
        let f = GershFamily::build(p, v);
        let rows: Vec<usize> =
            (0..f.len()).filter(|&i| f.rows[i].gamma.contains_within(z, tol)).map(|i| i + 1).collect();
        let name = match v {
            Variant::Plain => "gamma",
            Variant::Tilde => "gamma_tilde",
            Variant::Simplified => "gamma_s",
        };
        let _ = write!(out, "{name:<12} {}", yes_no(!rows.is_empty()));
        if !rows.is_empty() {
            let _ = write!(out, " (rows {})", rows_text(&rows));
        }
        out.push('\n');
    }
    let sets = ReferenceSets::new(p);
    for (name, member) in [("G", sets.in_g(z)), ("K", sets.in_k(z))] {
        let _ = writeln!(out, "{name:<12} {}", yes_no(member));
    }
    out
}

fn count_text(s: &ClusterSummary) -> String {
    let mut out = format!(
        "variant {}: {} cluster(s){}\n",
        s.variant.name(),
        s.clusters.len(),
        if s.exterior_point_found { "" } else { ", no exterior point found (counts not certified)" }
    );
    for (k, c) in s.clusters.iter().enumerate() {
        let _ = write!(
            out,
            "cluster {}: rows {} expected {} {}",
            k + 1,
            rows_text(&c.rows),
            c.expected_count,
            if c.certified { "certified" } else { "uncertified" }
        );
        if let Some(found) = c.oracle_count {
            let _ = write!(out, " oracle {found}");
        }
        out.push('\n');
    }
    out
}

fn spectrum_text(s: &Spectrum<f64>) -> String {
    let mut out = String::new();
    for z in &s.finite {
        let _ = writeln!(out, "{:?} {:?}", z.re, z.im);
    }
    for _ in 0..s.infinite_count {
        out.push_str("inf\n");
    }
    out
}
