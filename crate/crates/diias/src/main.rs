//! Command-line driver: build nets from polyline pairs, analyze nets or
//! pairs, export OBJ surfaces and SVG diagnostics, and generate discrete
//! Cayley surfaces.
//!
//! Exit codes: 0 success, 2 semantic or validation failure, 3 I/O failure.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use diias::centre_chord::{self, QuadNet};
use diias::io::{fraction, net_format, obj, polyline_file::PolylinePairFile, report, svg};
use diias::polyline::{self, Polyline2, ViolationKind};
use diias::ruled;
use diias::tol::Tolerances;

#[derive(Parser)]
#[command(name = "diias", version, about = "Discrete improper indefinite affine spheres")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a net from a polyline-pair JSON file and write it in the
    /// `diias v1` text format.
    Build {
        /// Polyline-pair JSON input.
        input: PathBuf,
        /// Output net path.
        out: PathBuf,
    },
    /// Analyze a net file or a polyline-pair JSON file and write the
    /// analysis report JSON.
    Analyze {
        /// Net (`diias v1`) or polyline-pair JSON input.
        input: PathBuf,
        /// Output report path.
        out: PathBuf,
    },
    /// Export the bilinear-patch surface of a net as OBJ.
    ExportObj {
        /// Net (`diias v1`) input.
        net: PathBuf,
        /// Output OBJ path.
        out: PathBuf,
        /// Subdivisions per quadrangle.
        #[arg(short = 'n', long, default_value_t = 1)]
        subdivisions: usize,
    },
    /// Export the planar diagnostics (x-net, generators, midpoint locus,
    /// cusps) as SVG.
    ExportSvg {
        /// Net (`diias v1`) or polyline-pair JSON input.
        input: PathBuf,
        /// Output SVG path.
        out: PathBuf,
    },
    /// Generate a discrete Cayley surface net.
    Cayley {
        /// Nonzero parameter; decimal or fraction (e.g. `-3/4`).
        #[arg(short, long, allow_hyphen_values = true)]
        a: String,
        /// Inclusive index range `min..max` for u.
        #[arg(short, long, allow_hyphen_values = true)]
        u: String,
        /// Inclusive index range `min..max` for v.
        #[arg(short, long, allow_hyphen_values = true)]
        v: String,
        /// Output net path.
        out: PathBuf,
    },
}

enum AppError {
    /// Semantic or validation failure: exit 2.
    Semantic(String),
    /// Filesystem failure: exit 3.
    Io(String),
}

impl AppError {
    fn semantic(e: impl std::fmt::Display) -> Self {
        AppError::Semantic(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(AppError::Semantic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(AppError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), AppError> {
    let tol = Tolerances::from_env();
    match cli.command {
        Command::Build { input, out } => {
            let (alpha, beta, z_base) = read_pair(&input)?;
            let net = build_checked(&alpha, &beta, z_base, &tol)?;
            write_text(&out, &net_format::write_net(net.q()).map_err(AppError::semantic)?)
        }
        Command::Analyze { input, out } => {
            let analysis = analyze_input(&input, &tol)?;
            write_text(&out, &analysis.report.to_json())
        }
        Command::ExportObj { net, out, subdivisions } => {
            let q = read_net(&net)?;
            let (net, _) = QuadNet::from_vertices(q, tol.fp_rel).map_err(AppError::semantic)?;
            let text = obj::export_obj(&net, subdivisions).map_err(AppError::semantic)?;
            write_text(&out, &text)
        }
        Command::ExportSvg { input, out } => {
            let analysis = analyze_input(&input, &tol)?;
            let text = svg::export_svg(&analysis.alpha, &analysis.beta, &analysis.singularity);
            write_text(&out, &text)
        }
        Command::Cayley { a, u, v, out } => {
            let a = fraction::parse_number(&a).map_err(AppError::semantic)?;
            let u = fraction::parse_range(&u).map_err(AppError::semantic)?;
            let v = fraction::parse_range(&v).map_err(AppError::semantic)?;
            let net = ruled::cayley_net(a, u, v).map_err(AppError::semantic)?;
            write_text(&out, &net_format::write_net(net.q()).map_err(AppError::semantic)?)
        }
    }
}

/// Build with the restriction checks: metric degeneracies are fatal,
/// interior-angle violations are warnings (the construction itself is sound;
/// only the singularity combinatorics may lose their guarantees).
fn build_checked(
    alpha: &Polyline2,
    beta: &Polyline2,
    z_base: f64,
    tol: &Tolerances,
) -> Result<QuadNet, AppError> {
    let admissibility =
        polyline::check_admissible_with(alpha, beta, tol).map_err(AppError::semantic)?;
    for v in &admissibility.violations {
        let msg = describe_violation(v);
        match v.kind {
            ViolationKind::ParallelEdges => return Err(AppError::Semantic(msg)),
            _ => eprintln!("warning: {msg}"),
        }
    }
    centre_chord::build_diias_with(alpha, beta, z_base, tol).map_err(AppError::semantic)
}

fn describe_violation(v: &polyline::Violation) -> String {
    match v.kind {
        ViolationKind::ParallelEdges => format!(
            "restriction violated: edge alpha[{}..{}] is parallel to edge beta[{}..{}] \
             (the affine metric vanishes on the corresponding quadrangle)",
            v.alpha_index,
            v.alpha_index + 1,
            v.beta_index,
            v.beta_index + 1
        ),
        ViolationKind::CollinearDegenerate => format!(
            "restriction violated: angle test degenerates to collinearity at \
             alpha({}) / beta({})",
            v.alpha_index, v.beta_index
        ),
        ViolationKind::AngleBeta => format!(
            "restriction violated: beta({}) is not strictly inside the angle spanned by \
             beta({}) and beta({}) at alpha({})",
            v.beta_index,
            v.beta_index - 1,
            v.beta_index + 1,
            v.alpha_index
        ),
        ViolationKind::AngleAlpha => format!(
            "restriction violated: alpha({}) is not strictly inside the angle spanned by \
             alpha({}) and alpha({}) at beta({})",
            v.alpha_index,
            v.alpha_index - 1,
            v.alpha_index + 1,
            v.beta_index
        ),
    }
}

fn analyze_input(input: &Path, tol: &Tolerances) -> Result<report::Analysis, AppError> {
    let text = read_text(input)?;
    if net_format::looks_like_net(&text) {
        let q = net_format::parse_net(&text).map_err(AppError::semantic)?;
        report::analyze_net(q, tol).map_err(AppError::semantic)
    } else {
        let (alpha, beta, z_base) = parse_pair(&text)?;
        // Surface restriction warnings, then analyze.
        let admissibility =
            polyline::check_admissible_with(&alpha, &beta, tol).map_err(AppError::semantic)?;
        for v in &admissibility.violations {
            match v.kind {
                ViolationKind::ParallelEdges => {
                    return Err(AppError::Semantic(describe_violation(v)));
                }
                _ => eprintln!("warning: {}", describe_violation(v)),
            }
        }
        report::analyze_pair(&alpha, &beta, z_base, tol).map_err(AppError::semantic)
    }
}

fn parse_pair(text: &str) -> Result<(Polyline2, Polyline2, f64), AppError> {
    PolylinePairFile::parse(text)
        .and_then(|f| f.to_pair())
        .map_err(AppError::semantic)
}

fn read_pair(path: &Path) -> Result<(Polyline2, Polyline2, f64), AppError> {
    parse_pair(&read_text(path)?)
}

fn read_net(path: &Path) -> Result<diias::grid::Field<diias::Vec3>, AppError> {
    net_format::parse_net(&read_text(path)?).map_err(AppError::semantic)
}

fn read_text(path: &Path) -> Result<String, AppError> {
    std::fs::read_to_string(path)
        .map_err(|e| AppError::Io(format!("cannot read {}: {e}", path.display())))
}

fn write_text(path: &Path, text: &str) -> Result<(), AppError> {
    std::fs::write(path, text)
        .map_err(|e| AppError::Io(format!("cannot write {}: {e}", path.display())))
}
