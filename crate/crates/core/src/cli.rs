//! Command-line front end: `gen`, `spectrum`, `poly`, `verify`, `grid`.
//!
//! Exit codes: 0 success or match, 1 usage or construction error, 2
//! verification mismatch.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{build_family, FamilySpec};
use crate::oracle::{max_dense_order, spectra_match, MatchReport};
use crate::poly::{distance_polynomial, verify_distance_polynomial, PolyReport};
use crate::report::{
    closed_family_spectrum, ensure_connected, full_grid, oracle_family_spectrum, run_grid,
    verify_family, MatrixKind, VerifyReport, DEFAULT_TOL,
};
use crate::spectrum::Spectrum;

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "kron-spectra",
    version,
    about = "Distance spectra of Kronecker products of distance-regular graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a family as an edge list ("p <n> <m>" then "u v" lines).
    Gen(GenArgs),
    /// Compute a spectrum by closed form, oracle, or both.
    Spectrum(SpectrumArgs),
    /// Print the distance polynomial p with D = p(A) (Johnson, Hamming).
    Poly(PolyArgs),
    /// Check closed form against oracle for one family.
    Verify(VerifyArgs),
    /// Run the full verification grid as JSON lines.
    Grid(GridArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Oracle,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    Distance,
    Adjacency,
}

impl From<MatrixArg> for MatrixKind {
    fn from(m: MatrixArg) -> MatrixKind {
        match m {
            MatrixArg::Distance => MatrixKind::Distance,
            MatrixArg::Adjacency => MatrixKind::Adjacency,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Check {
    Poly,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Output file (default: stdout).
    #[arg(long, short)]
    pub output: Option<PathBuf>,
    /// Reserved; no command is randomized.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family, e.g. "kron(K3,J(5,2))", "C7", "H(3,2)".
    #[arg(long, short)]
    pub family: FamilySpec,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct SpectrumArgs {
    #[arg(long, short)]
    pub family: FamilySpec,
    #[arg(long, value_enum, default_value_t = Method::Closed)]
    pub method: Method,
    #[arg(long, value_enum, default_value_t = MatrixArg::Distance)]
    pub matrix: MatrixArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Comparison tolerance for --method both.
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct PolyArgs {
    #[arg(long, short)]
    pub family: FamilySpec,
    /// Also evaluate p(A) and compare with the BFS distance matrix.
    #[arg(long, value_enum)]
    pub check: Option<Check>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, short)]
    pub family: FamilySpec,
    #[arg(long, value_enum, default_value_t = MatrixArg::Distance)]
    pub matrix: MatrixArg,
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
    pub tol: f64,
    /// Additionally verify D = p(A).
    #[arg(long, value_enum)]
    pub check: Option<Check>,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Args)]
pub struct GridArgs {
    /// Skip cases with more vertices than this (default: the dense cap).
    #[arg(long)]
    pub max_order: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_TOL, value_parser = positive)]
    pub tol: f64,
    #[command(flatten)]
    pub common: Common,
}

fn positive(text: &str) -> std::result::Result<f64, String> {
    let v: f64 = text.parse().map_err(|e| format!("{e}"))?;
    if v > 0.0 && v.is_finite() {
        Ok(v)
    } else {
        Err(format!("tolerance must be positive, got {text}"))
    }
}

fn open_output(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn write_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<()> {
    serde_json::to_writer(&mut *out, value).map_err(|e| Error::Io(e.to_string()))?;
    writeln!(out)?;
    Ok(())
}

fn render(spectrum: &Spectrum, format: Format) -> String {
    match format {
        Format::Json => spectrum.to_json() + "\n",
        Format::Csv => spectrum.to_csv(),
    }
}

fn cmd_gen(args: &GenArgs) -> Result<i32> {
    let g = build_family(&args.family)?;
    let mut out = open_output(&args.common.output)?;
    out.write_all(g.to_edge_list().as_bytes())?;
    out.flush()?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct BothOutput<'a> {
    family: &'a FamilySpec,
    closed_form: &'a Spectrum,
    oracle: &'a Spectrum,
    #[serde(flatten)]
    comparison: &'a MatchReport,
}

fn cmd_spectrum(args: &SpectrumArgs) -> Result<i32> {
    let matrix = args.matrix.into();
    ensure_connected(&args.family)?;
    let mut out = open_output(&args.common.output)?;
    let code = match args.method {
        Method::Closed => {
            let s = closed_family_spectrum(&args.family, matrix)?;
            out.write_all(render(&s, args.format).as_bytes())?;
            EXIT_OK
        }
        Method::Oracle => {
            let s = oracle_family_spectrum(&args.family, matrix)?;
            out.write_all(render(&s, args.format).as_bytes())?;
            EXIT_OK
        }
        Method::Both => {
            let closed = closed_family_spectrum(&args.family, matrix)?;
            let oracle = oracle_family_spectrum(&args.family, matrix)?;
            let cmp = spectra_match(&closed, &oracle, args.tol);
            match args.format {
                Format::Json => write_json(
                    &mut out,
                    &BothOutput {
                        family: &args.family,
                        closed_form: &closed,
                        oracle: &oracle,
                        comparison: &cmp,
                    },
                )?,
                Format::Csv => {
                    writeln!(out, "# closed_form")?;
                    out.write_all(closed.to_csv().as_bytes())?;
                    writeln!(out, "# oracle")?;
                    out.write_all(oracle.to_csv().as_bytes())?;
                    writeln!(out, "# match {} max_gap {}", cmp.matched, cmp.max_gap.0)?;
                }
            }
            if cmp.matched {
                EXIT_OK
            } else {
                EXIT_MISMATCH
            }
        }
    };
    out.flush()?;
    Ok(code)
}

#[derive(Serialize)]
struct PolyOutput<'a> {
    family: &'a FamilySpec,
    coeffs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<&'a PolyReport>,
}

fn cmd_poly(args: &PolyArgs) -> Result<i32> {
    let p = distance_polynomial(&args.family)?;
    let report = match args.check {
        Some(Check::Poly) => Some(verify_distance_polynomial(&args.family)?),
        None => None,
    };
    let mut out = open_output(&args.common.output)?;
    write_json(
        &mut out,
        &PolyOutput {
            family: &args.family,
            coeffs: p
                .coeffs()
                .iter()
                .map(|&c| crate::spectrum::format_sig12(c))
                .collect(),
            check: report.as_ref(),
        },
    )?;
    out.flush()?;
    Ok(match report {
        Some(r) if !r.pass => EXIT_MISMATCH,
        _ => EXIT_OK,
    })
}

#[derive(Serialize)]
struct VerifyOutput<'a> {
    #[serde(flatten)]
    spectrum: &'a VerifyReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    poly: Option<&'a PolyReport>,
}

fn cmd_verify(args: &VerifyArgs) -> Result<i32> {
    let report = verify_family(&args.family, args.matrix.into(), args.tol)?;
    let poly = match args.check {
        Some(Check::Poly) => Some(verify_distance_polynomial(&args.family)?),
        None => None,
    };
    let mut out = open_output(&args.common.output)?;
    write_json(
        &mut out,
        &VerifyOutput {
            spectrum: &report,
            poly: poly.as_ref(),
        },
    )?;
    out.flush()?;
    let pass = report.matched && poly.as_ref().is_none_or(|p| p.pass);
    Ok(if pass { EXIT_OK } else { EXIT_MISMATCH })
}

fn cmd_grid(args: &GridArgs) -> Result<i32> {
    let cap = args.max_order.unwrap_or_else(max_dense_order);
    let cases = full_grid(cap);
    let mut out = open_output(&args.common.output)?;
    let summary = run_grid(&cases, args.tol, &mut out)?;
    out.flush()?;
    Ok(if summary.all_passed() {
        EXIT_OK
    } else {
        EXIT_MISMATCH
    })
}

fn describe(e: &Error, cli: &Cli) -> String {
    let family = match &cli.command {
        Command::Gen(a) => Some(&a.family),
        Command::Spectrum(a) => Some(&a.family),
        Command::Poly(a) => Some(&a.family),
        Command::Verify(a) => Some(&a.family),
        Command::Grid(_) => None,
    };
    match (e, family) {
        (Error::DisconnectedGraph, Some(f)) if f.is_kron() => format!(
            "{e}: {f} is a product of two bipartite graphs, which splits into two components"
        ),
        _ => e.to_string(),
    }
}

/// Runs one parsed command and maps the outcome to an exit code.
pub fn execute(cli: &Cli) -> i32 {
    let result = match &cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Spectrum(a) => cmd_spectrum(a),
        Command::Poly(a) => cmd_poly(a),
        Command::Verify(a) => cmd_verify(a),
        Command::Grid(a) => cmd_grid(a),
    };
    result.unwrap_or_else(|e| {
        eprintln!("error: {}", describe(&e, cli));
        EXIT_ERROR
    })
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            code
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_to_string(args: &[&str]) -> (i32, String) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("out");
        let mut full = vec!["kron-spectra"];
        full.extend_from_slice(args);
        full.extend_from_slice(&["--output", path.to_str().unwrap()]);
        let code = run(full);
        (code, std::fs::read_to_string(&path).unwrap_or_default())
    }

    #[test]
    fn spectrum_both_matches() {
        let (code, text) =
            run_to_string(&["spectrum", "--family", "kron(K3,K3)", "--method", "both"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains(r#""match":true"#));
    }

    #[test]
    fn spectrum_csv() {
        let (code, text) = run_to_string(&["spectrum", "--family", "K3", "--format", "csv"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(text, "value,multiplicity\n2,1\n-1,2\n");
    }

    #[test]
    fn disconnected_and_domain_errors() {
        assert_eq!(
            run(["kron-spectra", "spectrum", "--family", "kron(C4,C4)"]),
            EXIT_ERROR
        );
        assert_eq!(
            run(["kron-spectra", "gen", "--family", "J(3,2)"]),
            EXIT_ERROR
        );
        assert_eq!(
            run(["kron-spectra", "spectrum", "--family", "K3", "--tol", "0"]),
            EXIT_ERROR
        );
    }

    #[test]
    fn verify_with_poly_check() {
        let (code, text) = run_to_string(&["verify", "--family", "J(6,3)", "--check", "poly"]);
        assert_eq!(code, EXIT_OK);
        assert!(text.contains(r#""poly":{"#));
    }

    #[test]
    fn verify_mismatch_exit_code() {
        let (code, text) = run_to_string(&["verify", "--family", "kron(K3,C3)"]);
        assert_eq!(code, EXIT_MISMATCH);
        assert!(text.contains("triangle-aware form"));
    }

    #[test]
    fn gen_edge_list() {
        let (code, text) = run_to_string(&["gen", "--family", "C4"]);
        assert_eq!(code, EXIT_OK);
        assert_eq!(text, "p 4 4\n0 1\n0 3\n1 2\n2 3\n");
    }
}
