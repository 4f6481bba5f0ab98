//! Batch command-line front end.
//!
//! Exit codes: 0 success, 1 file I/O failure, 2 parse or validation failure,
//! 3 computation failure. Every failure prints a JSON diagnostics object on
//! stderr and leaves no output file behind.

mod render;
mod schema;

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_complex::Complex64;
use serde::Serialize;

pub use render::{kind_color, render_ppm, render_svg};
pub use schema::{
    ClassificationRecord, DimensionRecord, GridSpec, ProblemKind, ProblemSpec, Provenance, ReductionRecord,
    ResultDoc, SampleCounts, Scalars, SigmaMinRecord, ToleranceOverrides, UsedTolerances, ValidationBlock,
};

use crate::matrix::{build_lambda_toeplitz, build_rotation_unitary, build_toeplitz, MatrixError, MAX_DIMENSION};
use crate::spectra::{region_grid, SpectralProblem, SpectralRaster, DEFAULT_TOL, FREDHOLM_TOL};
use crate::symbol::{FourierSymbol, CERTIFICATION_WIDTH};
use crate::wco::{WcoError, WcoReduction, DEFAULT_MAX_ORDER};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "ltoep", version, about = "Spectra of lambda-Toeplitz and weighted composition operators")]
#[command(after_help = "Exit codes: 0 ok, 1 file I/O error, 2 parse/validation error, 3 computation error.")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify every query point and report essential radius and symbol norm
    Classify {
        /// Problem description (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Result document path [default: stdout]
        #[arg(long)]
        output: Option<PathBuf>,
        /// Near-boundary band width; overrides tolerances.classify [default: 1e-8]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Render the classification of a grid of points as an image
    Region {
        /// Problem description with a `grid` entry (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Image path
        #[arg(long)]
        output: PathBuf,
        /// Image format
        #[arg(long, value_enum, default_value_t = ImageFormat::Ppm)]
        format: ImageFormat,
        /// Pixels per side; overrides grid.resolution
        #[arg(long)]
        resolution: Option<usize>,
        /// Near-boundary band width; overrides tolerances.classify [default: 1e-8]
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Compare against dense finite sections (lambda_toeplitz only)
    Validate {
        /// Problem description (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Result document path [default: stdout]
        #[arg(long)]
        output: Option<PathBuf>,
        /// Comma-separated truncation sizes
        #[arg(long, default_value = "256,512,1024")]
        schedule: String,
        /// Near-boundary band width; overrides tolerances.classify [default: 1e-8]
        #[arg(long)]
        tol: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ImageFormat {
    Ppm,
    Svg,
}

#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    Io(String),
    Parse(String),
    Validation(String),
    Computation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) => 1,
            CliError::Parse(_) | CliError::Validation(_) => 2,
            CliError::Computation(_) => 3,
        }
    }

    fn category(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Validation(_) => "validation",
            CliError::Computation(_) => "computation",
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Parse(m) | CliError::Validation(m) | CliError::Computation(m) => m,
        }
    }

    /// `{"diagnostics": {"category", "exit_code", "message"}}`
    pub fn diagnostics_json(&self) -> String {
        #[derive(Serialize)]
        struct Diagnostics<'a> {
            category: &'a str,
            exit_code: i32,
            message: &'a str,
        }
        #[derive(Serialize)]
        struct Wrapper<'a> {
            diagnostics: Diagnostics<'a>,
        }
        serde_json::to_string(&Wrapper {
            diagnostics: Diagnostics { category: self.category(), exit_code: self.exit_code(), message: self.message() },
        })
        .expect("diagnostics always serialize")
    }
}

impl From<MatrixError> for CliError {
    fn from(e: MatrixError) -> Self {
        match e {
            MatrixError::DimensionTooLarge { .. } | MatrixError::ZeroDimension => CliError::Validation(e.to_string()),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

impl From<WcoError> for CliError {
    fn from(e: WcoError) -> Self {
        match e {
            WcoError::InvalidAutomorphism(_)
            | WcoError::NotElliptic
            | WcoError::NotFiniteOrder { .. }
            | WcoError::ConjugatorMismatch { .. }
            | WcoError::Symbol(_) => CliError::Validation(e.to_string()),
            _ => CliError::Computation(e.to_string()),
        }
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match execute(&cli.command) {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("{}", e.diagnostics_json());
            e.exit_code()
        }
    }
}

pub fn execute(command: &Command) -> Result<(), CliError> {
    match command {
        Command::Classify { input, output, tol } => {
            let spec = load_problem(input)?;
            let tol = resolve_tol(&spec, *tol)?;
            let doc = classify_problem(&spec, tol)?;
            emit(output.as_deref(), doc.to_json().as_bytes())
        }
        Command::Region { input, output, format, resolution, tol } => {
            let spec = load_problem(input)?;
            let tol = resolve_tol(&spec, *tol)?;
            let raster = region_problem(&spec, *resolution, tol)?;
            let bytes = match format {
                ImageFormat::Ppm => render_ppm(&raster),
                ImageFormat::Svg => render_svg(&raster).into_bytes(),
            };
            write_atomic(output, &bytes)
        }
        Command::Validate { input, output, schedule, tol } => {
            let schedule = parse_schedule(schedule)?;
            let spec = load_problem(input)?;
            let tol = resolve_tol(&spec, *tol)?;
            let doc = validate_problem(&spec, &schedule, tol)?;
            emit(output.as_deref(), doc.to_json().as_bytes())
        }
    }
}

pub fn load_problem(path: &Path) -> Result<ProblemSpec, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    parse_problem(&text)
}

pub fn parse_problem(text: &str) -> Result<ProblemSpec, CliError> {
    let spec: ProblemSpec = serde_json::from_str(text).map_err(|e| CliError::Parse(e.to_string()))?;
    spec.validate().map_err(CliError::Validation)?;
    Ok(spec)
}

fn resolve_tol(spec: &ProblemSpec, flag: Option<f64>) -> Result<f64, CliError> {
    let tol = flag.or(spec.tolerances.classify).unwrap_or(DEFAULT_TOL);
    schema::check_tolerance(tol).map_err(CliError::Validation)?;
    Ok(tol)
}

pub fn parse_schedule(csv: &str) -> Result<Vec<usize>, CliError> {
    let schedule = csv
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| CliError::Parse(format!("schedule {csv:?}: {e}")))?;
    if schedule.is_empty() {
        return Err(CliError::Validation("schedule is empty".into()));
    }
    if let Some(&n) = schedule.iter().find(|&&n| n == 0 || n > MAX_DIMENSION) {
        return Err(CliError::Validation(format!("dimension {n} outside 1..={MAX_DIMENSION}")));
    }
    Ok(schedule)
}

/// The λ-Toeplitz problem behind a spec, plus the reduction for `wco`.
struct Prepared {
    problem: SpectralProblem,
    twisted: FourierSymbol,
    reduction: Option<WcoReduction>,
}

fn prepare(spec: &ProblemSpec) -> Result<Prepared, CliError> {
    match spec.kind {
        ProblemKind::LambdaToeplitz => {
            let r = spec.rotation.as_ref().expect("validated");
            Ok(Prepared {
                problem: SpectralProblem::from_symbol(&spec.symbol, r),
                twisted: spec.symbol.twist(r),
                reduction: None,
            })
        }
        ProblemKind::Wco => {
            let rho = spec.automorphism.as_ref().expect("validated");
            let red = WcoReduction::new(&spec.symbol, rho, DEFAULT_MAX_ORDER)?;
            Ok(Prepared { problem: red.problem.clone(), twisted: red.weight.twist(&red.rotation), reduction: Some(red) })
        }
    }
}

fn base_document(spec: &ProblemSpec, prepared: &Prepared, tol: f64) -> Result<ResultDoc, CliError> {
    let classifications = spec
        .query_points()
        .map(|mu| {
            prepared
                .problem
                .classify(mu, tol)
                .map(|c| ClassificationRecord::new(mu, c))
                .map_err(|e| CliError::Computation(format!("μ = [{}, {}]: {e}", mu.re, mu.im)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let reduction = prepared.reduction.as_ref().map(|red| ReductionRecord {
        fixed_point: complex_pair(red.fixed_point),
        multiplier: complex_pair(red.multiplier),
        rotation: red.rotation.clone(),
    });
    Ok(ResultDoc {
        kind: spec.kind,
        classifications,
        scalars: Scalars {
            ess_radius: prepared.problem.ess_radius(),
            sup_norm_twisted: prepared.twisted.sup_norm(),
            operator_norm_estimate: None,
        },
        reduction,
        validation: None,
        provenance: Provenance {
            version: VERSION.to_string(),
            tolerances: UsedTolerances { classify: tol, fredholm: FREDHOLM_TOL, certification: CERTIFICATION_WIDTH },
            sample_counts: SampleCounts {
                curve_grid: prepared.problem.curve().grid_len(),
                pullback_degree: prepared.reduction.as_ref().map(|r| r.weight.degree()),
            },
        },
    })
}

fn complex_pair(z: Complex64) -> [f64; 2] {
    [z.re, z.im]
}

pub fn classify_problem(spec: &ProblemSpec, tol: f64) -> Result<ResultDoc, CliError> {
    let prepared = prepare(spec)?;
    base_document(spec, &prepared, tol)
}

pub fn region_problem(spec: &ProblemSpec, resolution: Option<usize>, tol: f64) -> Result<SpectralRaster, CliError> {
    let grid = spec
        .grid
        .as_ref()
        .ok_or_else(|| CliError::Validation("region needs a `grid` entry".into()))?;
    let resolution = resolution.unwrap_or(grid.resolution);
    schema::check_resolution(resolution).map_err(CliError::Validation)?;
    let prepared = prepare(spec)?;
    region_grid(&prepared.problem, grid.bounds, resolution, tol).map_err(|e| CliError::Computation(e.to_string()))
}

/// Builds the dense truncations for each `n` of the schedule and records
/// the exact-identity errors, operator norms and `σ_min(T_n − μ)` for the
/// queries.
pub fn validate_problem(spec: &ProblemSpec, schedule: &[usize], tol: f64) -> Result<ResultDoc, CliError> {
    if spec.kind != ProblemKind::LambdaToeplitz {
        return Err(CliError::Validation("validate supports kind lambda_toeplitz only".into()));
    }
    let r = spec.rotation.as_ref().expect("validated");
    let prepared = prepare(spec)?;
    let mut doc = base_document(spec, &prepared, tol)?;
    let queries: Vec<Complex64> = spec.query_points().collect();
    let mut dimensions = Vec::with_capacity(schedule.len());
    let mut sigma_min: Vec<SigmaMinRecord> = queries
        .iter()
        .map(|&mu| SigmaMinRecord { mu: complex_pair(mu), values: Vec::with_capacity(schedule.len()) })
        .collect();
    let q = u32::try_from(r.q()).map_err(|_| CliError::Validation("rotation order too large".into()))?;
    for &n in schedule {
        let t = build_lambda_toeplitz(&spec.symbol, r, n)?;
        let factored = build_rotation_unitary(r, n)?.matmul(&build_toeplitz(&prepared.twisted, n)?)?;
        let power = t.pow(q)?;
        let expected = build_toeplitz(prepared.problem.product(), n)?;
        dimensions.push(DimensionRecord {
            n,
            factorization_error: t.max_abs_diff(&factored)?,
            power_identity_error: power.max_abs_diff(&expected)?,
            op_norm: t.op_norm()?,
        });
        for (record, &mu) in sigma_min.iter_mut().zip(&queries) {
            record.values.push(t.smallest_singular(mu)?);
        }
    }
    doc.scalars.operator_norm_estimate = dimensions.last().map(|d| d.op_norm);
    doc.validation = Some(ValidationBlock {
        schedule: schedule.to_vec(),
        factorization_error: dimensions.iter().map(|d| d.factorization_error).fold(0.0, f64::max),
        power_identity_error: dimensions.iter().map(|d| d.power_identity_error).fold(0.0, f64::max),
        dimensions,
        sigma_min,
    });
    Ok(doc)
}

fn emit(output: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match output {
        Some(path) => write_atomic(path, bytes),
        None => {
            use std::io::Write;
            std::io::stdout().write_all(bytes).map_err(|e| CliError::Io(format!("stdout: {e}")))
        }
    }
}

/// Writes to a sibling temporary file and renames it over `path`.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<(), CliError> {
    let name = path
        .file_name()
        .ok_or_else(|| CliError::Io(format!("{}: not a file path", path.display())))?;
    let mut tmp_name = OsString::from(".");
    tmp_name.push(name);
    tmp_name.push(format!(".{}.tmp", std::process::id()));
    let tmp = path.with_file_name(tmp_name);
    let io_err = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    if let Err(e) = fs::write(&tmp, bytes) {
        let _ = fs::remove_file(&tmp);
        return Err(io_err(e));
    }
    fs::rename(&tmp, path).map_err(|e| {
        let _ = fs::remove_file(&tmp);
        io_err(e)
    })
}
