//! `spline-split` command-line tool.
//!
//! Exit codes: 0 success or true, 1 mathematical failure (mismatch, invalid
//! mesh, non-split), 2 input error.

mod mesh_file;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;
use spline_split::algebra::build_chain_complex;
use spline_split::fixtures;
use spline_split::formulas::Scheme;
use spline_split::mesh::{Point, SimplicialComplex};
use spline_split::oracle::{spline_basis, spline_dim_series, Mode};
use spline_split::refine::{alfeld, double_alfeld, facet_split, is_split, replace_cell, RefineError, SplitOptions, SubdivisionRecord};
use spline_split::verify::{run_suite, SuiteConfig};

use mesh_file::{load, load_unchecked, parse_point_arg, MeshFile};

#[derive(Parser)]
#[command(name = "spline-split", version, about = "Exact spline dimensions on split simplices")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Oracle,
    Euler,
    Formula,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum SubdivideScheme {
    Alfeld,
    Facet,
    DoubleAlfeld,
}

#[derive(clap::Args)]
struct Degrees {
    /// Single degree.
    #[arg(long, conflicts_with = "d_range")]
    d: Option<u32>,
    /// Inclusive range such as `0..8` or `2-5`.
    #[arg(long)]
    d_range: Option<String>,
}

impl Degrees {
    fn list(&self) -> Result<Vec<u32>> {
        match (&self.d, &self.d_range) {
            (Some(d), _) => Ok(vec![*d]),
            (None, Some(s)) => parse_range(s),
            (None, None) => bail!("give --d or --d-range"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check that a mesh file describes a valid simplicial complex.
    Validate { mesh: String },
    /// Spline space dimensions by the oracle, the Euler characteristic and the closed form.
    Dim {
        /// Mesh file or builtin (`T3`, `A2`, `F2`, `AA2`, `P3`, `interior-triangle`).
        mesh: String,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, value_enum, default_value = "all")]
        method: Method,
        /// Closed form to compare against; detected for builtin-shaped meshes.
        #[arg(long)]
        scheme: Option<String>,
        #[arg(long, default_value = "cone")]
        mode: String,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Refine a mesh and write the result plus a record of each step.
    Subdivide {
        mesh: String,
        #[arg(long, value_enum)]
        scheme: SubdivideScheme,
        /// Cell to split (alfeld only).
        #[arg(long, default_value_t = 0)]
        cell: usize,
        /// Interior point, e.g. `1/5,1/10`; barycenter by default.
        #[arg(long)]
        point: Option<String>,
        /// Facets to split, by index of the opposite vertex.
        #[arg(long, value_delimiter = ',')]
        subset: Option<Vec<usize>>,
        /// Output mesh; stdout when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Sidecar record; `<output>.record.json` by default.
        #[arg(long)]
        record: Option<PathBuf>,
        /// Also write the last inserted piece as a mesh file.
        #[arg(long)]
        piece_out: Option<PathBuf>,
    },
    /// Decide whether replacing `cell` of `coarse` by `piece` is a simple split.
    CheckSplit {
        coarse: String,
        #[arg(long)]
        cell: usize,
        piece: String,
        #[arg(long)]
        r: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Graded homology dimensions of the chain complex R/J.
    Homology {
        mesh: String,
        #[arg(long)]
        r: u32,
        #[command(flatten)]
        degrees: Degrees,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// A basis of the spline space.
    Basis {
        mesh: String,
        #[arg(long)]
        r: u32,
        #[arg(long)]
        d: u32,
        #[arg(long, default_value = "affine")]
        mode: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run the reproduction suite.
    Verify {
        /// Restrict to these ambient dimensions.
        #[arg(long, value_delimiter = ',')]
        k: Option<Vec<usize>>,
        #[arg(long, value_delimiter = ',')]
        criteria: Option<Vec<u32>>,
        /// Add one to this closed form to check that the suite notices.
        #[arg(long)]
        inject_formula_error: Option<String>,
        /// Remove degree caps on unreduced systems (slow).
        #[arg(long)]
        unbounded: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

fn parse_range(s: &str) -> Result<Vec<u32>> {
    let (a, b) = s
        .split_once("..=")
        .or_else(|| s.split_once(".."))
        .or_else(|| s.split_once('-'))
        .ok_or_else(|| anyhow!("bad degree range {s:?}"))?;
    let (a, b): (u32, u32) = (a.trim().parse()?, b.trim().parse()?);
    if a > b {
        bail!("empty degree range {s:?}");
    }
    Ok((a..=b).collect())
}

fn parse_mode(s: &str) -> Result<Mode> {
    s.parse::<Mode>().map_err(|e| anyhow!("{e}"))
}

fn parse_scheme(s: &str) -> Result<Scheme> {
    s.parse::<Scheme>().map_err(|e| anyhow!("{e}"))
}

/// Recognizes the builtin families by exact comparison.
fn detect_scheme(mesh: &SimplicialComplex) -> Option<Scheme> {
    let k = mesh.dim();
    if !(2..=4).contains(&k) {
        return if mesh.num_cells() == 1 { Some(Scheme::Simplex) } else { None };
    }
    if mesh.num_cells() == 1 {
        return Some(Scheme::Simplex);
    }
    let target = mesh.canonical();
    let candidates: [(Scheme, fn(usize) -> SimplicialComplex); 4] = [
        (Scheme::Alfeld, fixtures::alfeld_split),
        (Scheme::Facet, fixtures::facet_split_mesh),
        (Scheme::DoubleAlfeld, fixtures::double_alfeld_mesh),
        (Scheme::Pyramid, fixtures::pyramid),
    ];
    candidates.into_iter().find(|(_, f)| f(k).canonical() == target).map(|(s, _)| s)
}

#[derive(Serialize)]
struct DimRow {
    k: usize,
    r: u32,
    d: u32,
    oracle: Option<u64>,
    euler: Option<i64>,
    formula: Option<u64>,
    agree: bool,
}

fn opt<T: ToString>(x: Option<T>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

fn cmd_validate(source: &str) -> Result<u8> {
    let mesh = load_unchecked(source)?;
    let report = mesh.validate();
    if report.is_valid() {
        println!("valid: {} cells, {} vertices", mesh.num_cells(), mesh.vertices().len());
        Ok(0)
    } else {
        for v in &report.violations {
            println!("invalid: {v}");
        }
        Ok(1)
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_dim(source: &str, r: u32, degrees: &Degrees, method: Method, scheme: Option<&str>, mode: &str, format: Format) -> Result<u8> {
    let mesh = load(source)?;
    let mode = parse_mode(mode)?;
    let ds = degrees.list()?;
    let d_max = *ds.iter().max().expect("nonempty");
    let k = mesh.dim();
    let scheme = match scheme {
        Some(s) => Some(parse_scheme(s)?),
        None => detect_scheme(&mesh),
    };
    if method == Method::Formula && scheme.is_none() {
        bail!("formula method needs --scheme (mesh not recognized)");
    }
    if method == Method::All && scheme.is_none() {
        eprintln!("note: mesh not recognized and no --scheme given; formula column left empty");
    }
    let oracle = if matches!(method, Method::Oracle | Method::All) {
        Some(spline_dim_series(&mesh, r, d_max, mode)?)
    } else {
        None
    };
    let chain = if matches!(method, Method::Euler | Method::All) { Some(build_chain_complex(&mesh, r)?) } else { None };
    let want_formula = matches!(method, Method::Formula | Method::All);
    let rows: Vec<DimRow> = ds
        .iter()
        .map(|&d| {
            let o = oracle.as_ref().map(|s| s[d as usize] as u64);
            let e = chain.as_ref().map(|c| c.euler_dim(d));
            let f = if want_formula { scheme.map(|s| s.dim(k as u32, d, r)) } else { None };
            let vals: Vec<i128> = [o.map(i128::from), e.map(i128::from), f.map(i128::from)].into_iter().flatten().collect();
            let agree = vals.windows(2).all(|w| w[0] == w[1]);
            DimRow { k, r, d, oracle: o, euler: e, formula: f, agree }
        })
        .collect();
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&rows)?),
        Format::Csv | Format::Text => {
            println!("k,r,d,oracle,euler,formula");
            for row in &rows {
                println!("{},{},{},{},{},{}", row.k, row.r, row.d, opt(row.oracle), opt(row.euler), opt(row.formula));
            }
        }
    }
    let bad: Vec<u32> = rows.iter().filter(|r| !r.agree).map(|r| r.d).collect();
    if bad.is_empty() {
        Ok(0)
    } else {
        eprintln!("error: methods disagree at d = {bad:?}");
        Ok(1)
    }
}

fn record_json(rec: &SubdivisionRecord) -> serde_json::Value {
    json!({
        "cell": rec.cell,
        "sigma": rec.coarse.points(rec.coarse.cell(rec.cell)),
        "new_vertices": rec.new_vertices,
        "coarse": MeshFile::from_complex(&rec.coarse),
        "piece": MeshFile::from_complex(&rec.piece),
    })
}

#[allow(clippy::too_many_arguments)]
fn cmd_subdivide(
    source: &str,
    scheme: SubdivideScheme,
    cell: usize,
    point: Option<&str>,
    subset: Option<Vec<usize>>,
    output: Option<&Path>,
    record: Option<&Path>,
    piece_out: Option<&Path>,
) -> Result<u8> {
    let mesh = load(source)?;
    let u: Option<Point> = point.map(parse_point_arg).transpose()?;
    let records = match scheme {
        SubdivideScheme::Alfeld => {
            if subset.is_some() {
                bail!("--subset applies to facet and double-alfeld only");
            }
            vec![alfeld(&mesh, cell, u)?]
        }
        SubdivideScheme::Facet => facet_split(&mesh, &SplitOptions { u, subset, ..Default::default() })?,
        SubdivideScheme::DoubleAlfeld => double_alfeld(&mesh, &SplitOptions { u, subset, ..Default::default() })?,
    };
    let last = records.last().expect("at least one step");
    let fine = last.fine.canonical();
    match output {
        Some(p) => mesh_file::write(&fine, p)?,
        None => println!("{}", mesh_file::to_json(&fine)),
    }
    let record_path = record.map(Path::to_path_buf).or_else(|| output.map(|p| {
        let mut s = p.as_os_str().to_owned();
        s.push(".record.json");
        PathBuf::from(s)
    }));
    if let Some(p) = record_path {
        let steps: Vec<_> = records.iter().map(record_json).collect();
        let doc = json!({ "steps": steps, "fine": MeshFile::from_complex(&fine) });
        fs::write(&p, serde_json::to_string_pretty(&doc)? + "\n").with_context(|| format!("cannot write {}", p.display()))?;
    }
    if let Some(p) = piece_out {
        mesh_file::write(&last.piece, p)?;
    }
    eprintln!("{} cells, {} vertices", fine.num_cells(), fine.vertices().len());
    Ok(0)
}

fn fmt_point(p: &Point) -> String {
    let xs: Vec<String> = p.coords().iter().map(|x| x.to_string()).collect();
    format!("({})", xs.join(", "))
}

fn fmt_face(face: &[Point]) -> String {
    let ps: Vec<String> = face.iter().map(fmt_point).collect();
    format!("[{}]", ps.join(" "))
}

fn cmd_check_split(coarse: &str, cell: usize, piece: &str, r: u32, format: Format) -> Result<u8> {
    let coarse = load(coarse)?;
    let piece = load(piece)?;
    let rec = match replace_cell(&coarse, cell, &piece) {
        Ok(rec) => rec,
        Err(RefineError::NotSimple(faces)) => {
            match format {
                Format::Json => println!("{}", json!({ "simple": false, "split": false, "non_simple_faces": faces })),
                _ => {
                    println!("not simple: {} boundary faces of the piece are not faces of the coarse mesh", faces.len());
                    for f in &faces {
                        println!("  {}", fmt_face(f));
                    }
                }
            }
            return Ok(1);
        }
        Err(e) => return Err(e.into()),
    };
    let report = is_split(&rec, r)?;
    match format {
        Format::Json => println!("{}", json!({ "simple": true, "split": report.split, "report": report })),
        _ => {
            println!("simple: yes");
            println!("split (r={r}): {} ({} faces checked)", if report.split { "yes" } else { "no" }, report.checked_faces);
            for w in &report.witnesses {
                println!("  witness {}: {} forms in fine mesh, {} in coarse", fmt_face(&w.face), w.fine_forms, w.coarse_forms);
            }
        }
    }
    Ok(if report.split { 0 } else { 1 })
}

fn cmd_homology(source: &str, r: u32, degrees: &Degrees, format: Format) -> Result<u8> {
    let mesh = load(source)?;
    let ds = degrees.list()?;
    let d_max = *ds.iter().max().expect("nonempty");
    let chain = build_chain_complex(&mesh, r)?;
    let series = chain.homology_series(d_max);
    let k = mesh.dim();
    match format {
        Format::Json => {
            let rows: Vec<_> = ds.iter().map(|&d| json!({ "k": k, "r": r, "d": d, "homology": series[d as usize] })).collect();
            println!("{}", serde_json::to_string_pretty(&rows)?);
        }
        Format::Csv | Format::Text => {
            let hs: Vec<String> = (0..=k).map(|i| format!("h{i}")).collect();
            println!("k,r,d,{}", hs.join(","));
            for &d in &ds {
                let vals: Vec<String> = series[d as usize].iter().map(|x| x.to_string()).collect();
                println!("{k},{r},{d},{}", vals.join(","));
            }
        }
    }
    Ok(0)
}

fn cmd_basis(source: &str, r: u32, d: u32, mode: &str, format: Format) -> Result<u8> {
    let mesh = load(source)?;
    let mode = parse_mode(mode)?;
    let basis = spline_basis(&mesh, r, d, mode)?;
    match format {
        Format::Json => {
            let doc: Vec<Vec<String>> = basis.iter().map(|f| f.pieces.iter().map(|p| p.to_string()).collect()).collect();
            println!("{}", serde_json::to_string_pretty(&json!({ "mode": mode, "r": r, "d": d, "dim": basis.len(), "basis": doc }))?);
        }
        _ => {
            println!("dim S^{r}_{d} ({mode}) = {}", basis.len());
            for (j, f) in basis.iter().enumerate() {
                println!("basis {j}:");
                for (c, p) in f.pieces.iter().enumerate() {
                    println!("  cell {c}: {p}");
                }
            }
        }
    }
    Ok(0)
}

fn cmd_verify(k: Option<Vec<usize>>, criteria: Option<Vec<u32>>, inject: Option<&str>, unbounded: bool, format: Format) -> Result<u8> {
    let perturb = inject.map(parse_scheme).transpose()?;
    let cfg = SuiteConfig { ks: k, criteria, perturb, unbounded };
    let report = run_suite(&cfg);
    match format {
        Format::Json => println!("{}", serde_json::to_string_pretty(&report)?),
        _ => {
            for res in &report.results {
                println!("{}", res.line());
            }
            println!("{}", if report.passed { "OVERALL PASS" } else { "OVERALL FAIL" });
        }
    }
    Ok(if report.passed { 0 } else { 1 })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Validate { mesh } => cmd_validate(&mesh),
        Command::Dim { mesh, r, degrees, method, scheme, mode, format } => {
            cmd_dim(&mesh, r, &degrees, method, scheme.as_deref(), &mode, format)
        }
        Command::Subdivide { mesh, scheme, cell, point, subset, output, record, piece_out } => cmd_subdivide(
            &mesh,
            scheme,
            cell,
            point.as_deref(),
            subset,
            output.as_deref(),
            record.as_deref(),
            piece_out.as_deref(),
        ),
        Command::CheckSplit { coarse, cell, piece, r, format } => cmd_check_split(&coarse, cell, &piece, r, format),
        Command::Homology { mesh, r, degrees, format } => cmd_homology(&mesh, r, &degrees, format),
        Command::Basis { mesh, r, d, mode, format } => cmd_basis(&mesh, r, d, &mode, format),
        Command::Verify { k, criteria, inject_formula_error, unbounded, format } => {
            cmd_verify(k, criteria, inject_formula_error.as_deref(), unbounded, format)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
