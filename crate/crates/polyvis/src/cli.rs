//! Command-line front end. [`run`] parses arguments, executes one
//! subcommand and returns the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, or every audit passed |
//! | 1 | an audit or certificate reported a violation |
//! | 2 | unreadable or malformed input, bad arguments |
//! | 3 | the polygon is not simple |
//! | 4 | a precondition of the requested check or construction fails |
//! | 5 | a search budget ran out before the answer was settled |

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use polyvis_core::audits::{
    audit_double_cherry, capoyleas_pach_audit, check_k4_theorem, monotone_theorem_audit, polygon_mt_audit,
    star_theorem_audit, AuditError, AuditOptions, AuditReport, Verdict,
};
use polyvis_core::ds::{
    generate_ds3, is_davenport_schinzel, k33_free_lowerbound, lambda_bruteforce, walczak_graph, Ds3Strategy, DsError,
    K33Verdict,
};
use polyvis_core::generators::{generate, Family, GeneratorError};
use polyvis_core::geometry::{GeometryError, Polygon};
use polyvis_core::matrix::{build_pattern, max_ones_avoiding, BitMatrix, MatrixError, PatternKind};
use polyvis_core::ordered::{find_ordered_pattern, h0, h1};
use polyvis_core::visibility::{site_visibility_graph, vertex_visibility_graph, BoundarySite, SiteError};
use polyvis_core::{Budget, DEFAULT_NODE_BUDGET};
use serde_json::json;
use thiserror::Error;

use crate::formats::{
    parse_matrix, parse_polygon, parse_sites, write_dsseq, write_graph, write_matrix, write_polygon, ParseError,
    PolygonFileError,
};
use crate::json;
use crate::report::{parse_seeds, run_report, ReportError, ReportPlan};

#[derive(Debug, Parser)]
#[command(name = "polyvis", version, about = "Exact visibility graphs of polygons and audits of their extremal bounds")]
pub struct Cli {
    /// Node budget for exhaustive searches.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    pub budget: u64,
    /// Worker threads for `report` (0 = one per core).
    #[arg(long, global = true, default_value_t = 0)]
    pub threads: usize,
    /// Seed for seeded generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a polygon from one of the generator families.
    Generate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compute the visibility graph of a polygon's vertices or of boundary sites.
    Visgraph {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        sites: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run one audit and print its report as a JSON line.
    Check(CheckArgs),
    /// Build a sequence, graph or matrix together with its certificate.
    Construct(ConstructArgs),
    /// Exhaustive extremal values.
    #[command(subcommand)]
    Extremal(ExtremalCommand),
    /// Edge-count experiment over generated families, as CSV.
    Report(ReportArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckKind {
    K4,
    Cherry,
    Cp,
    Star,
    Monotone,
    Mtplus,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[arg(value_enum)]
    pub kind: CheckKind,
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// Boundary sites to audit instead of the vertices.
    #[arg(long)]
    pub sites: Option<PathBuf>,
    /// Maximum number of pattern occurrences examined per matrix.
    #[arg(long, default_value_t = AuditOptions::default().occurrence_cap)]
    pub occurrence_cap: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructKind {
    Walczak,
    K33lb,
    Pattern,
    Ds3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PatternName {
    Identity,
    PolygonMt,
    MonotoneMt,
    H0,
    H1,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Baseline,
    BruteSmall,
}

impl From<Strategy> for Ds3Strategy {
    fn from(s: Strategy) -> Self {
        match s {
            Strategy::Baseline => Ds3Strategy::Baseline,
            Strategy::BruteSmall => Ds3Strategy::BruteSmall,
        }
    }
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    pub what: ConstructKind,
    /// Alphabet size for `walczak`, `k33lb` and `ds3`.
    #[arg(long)]
    pub n: Option<usize>,
    /// Pattern parameter for `pattern`.
    #[arg(long)]
    pub t: Option<usize>,
    #[arg(long, value_enum, default_value_t = PatternName::PolygonMt)]
    pub kind: PatternName,
    #[arg(long, value_enum, default_value_t = Strategy::Baseline)]
    pub strategy: Strategy,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum ExtremalCommand {
    /// Maximum number of ones in an n x n matrix avoiding a pattern.
    Matrix {
        /// Pattern matrix file.
        #[arg(long, conflicts_with = "identity", required_unless_present = "identity")]
        pattern: Option<PathBuf>,
        /// Use the t x t identity as the pattern.
        #[arg(long)]
        identity: Option<usize>,
        #[arg(long)]
        n: usize,
        /// Where to write an extremal matrix.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum length of a Davenport-Schinzel sequence of order s on n letters.
    Lambda {
        #[arg(long)]
        s: usize,
        #[arg(long)]
        n: usize,
        /// Where to write a longest sequence.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct ReportArgs {
    /// Family name, a comma-separated list, or `all`.
    #[arg(long, default_value = "all")]
    pub family: String,
    #[arg(long, default_value_t = 4)]
    pub nmin: usize,
    #[arg(long, default_value_t = 20)]
    pub nmax: usize,
    #[arg(long, default_value_t = 2)]
    pub t: usize,
    /// `a..b` (inclusive), `a,b,c`, or one seed; defaults to `--seed`.
    #[arg(long)]
    pub seeds: Option<String>,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("{path}: {source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: {source}")]
    InvalidPolygon { path: PathBuf, source: GeometryError },
    #[error("sites: {0}")]
    Sites(#[from] SiteError),
    #[error(transparent)]
    Audit(#[from] AuditError),
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error(transparent)]
    Ds(#[from] DsError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Report(#[from] ReportError),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Parse { .. } | CliError::Sites(_) | CliError::Usage(_) => 2,
            CliError::InvalidPolygon { .. } => 3,
            CliError::Audit(e) => match e {
                AuditError::Sites(_) => 2,
                AuditError::Geometry(GeometryError::DuplicateXCoordinate { .. }) => 4,
                AuditError::Geometry(_) => 3,
                _ => 4,
            },
            CliError::Ds(DsError::BudgetExceeded) | CliError::Matrix(MatrixError::BudgetExceeded) => 5,
            CliError::Generator(GeneratorError::UnknownFamily(_)) => 2,
            CliError::Generator(_) | CliError::Ds(_) | CliError::Matrix(_) => 4,
            CliError::Report(e) => match e {
                ReportError::Seeds(_) => 2,
                ReportError::EmptyRange { .. } | ReportError::Generator(_) => 4,
                _ => 2,
            },
        }
    }
}

/// Parses `std::env::args`, runs the command and returns the exit code.
pub fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32, CliError> {
    match &cli.command {
        Command::Generate { family, n, out } => {
            let p = generate(*family, *n, cli.seed)?;
            emit(out.as_deref(), &write_polygon(&p))?;
            Ok(0)
        }
        Command::Visgraph { input, sites, out } => {
            let polygon = read_polygon(input)?;
            let text = match sites {
                Some(path) => {
                    let sites = read_sites(path)?;
                    write_graph(site_visibility_graph(&polygon, &sites)?.graph(), true)
                }
                None => write_graph(vertex_visibility_graph(&polygon).graph(), true),
            };
            emit(out.as_deref(), &text)?;
            Ok(0)
        }
        Command::Check(args) => check(cli, args),
        Command::Construct(args) => construct(cli, args),
        Command::Extremal(cmd) => extremal(cli, cmd),
        Command::Report(args) => report(cli, args),
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })
}

fn read_polygon(path: &Path) -> Result<Polygon, CliError> {
    parse_polygon(&read(path)?).map_err(|e| match e {
        PolygonFileError::Parse(source) => CliError::Parse { path: path.into(), source },
        PolygonFileError::Invalid(source) => CliError::InvalidPolygon { path: path.into(), source },
    })
}

fn read_sites(path: &Path) -> Result<Vec<BoundarySite>, CliError> {
    parse_sites(&read(path)?).map_err(|source| CliError::Parse { path: path.into(), source })
}

/// Writes `text` to `out`, or to stdout when no path is given.
fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(|source| CliError::Io { path: path.into(), source }),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|source| CliError::Io { path: "<stdout>".into(), source })
        }
    }
}

/// Certificates go to stdout, unless the artifact itself went there.
fn certify(out: Option<&Path>, cert: serde_json::Value) {
    if out.is_some() {
        println!("{cert}");
    } else {
        eprintln!("{cert}");
    }
}

fn verdict_code(v: Verdict) -> i32 {
    match v {
        Verdict::Pass => 0,
        Verdict::Violation => 1,
        Verdict::Inconclusive => 5,
    }
}

fn check(cli: &Cli, args: &CheckArgs) -> Result<i32, CliError> {
    let polygon = read_polygon(&args.input)?;
    let sites = args.sites.as_deref().map(read_sites).transpose()?;
    let sites = sites.as_deref();
    let opts = AuditOptions { occurrence_cap: args.occurrence_cap, node_budget: cli.budget };
    let vertex_only = |what: &str| {
        if sites.is_some() {
            Err(CliError::Usage(format!("the {what} check runs on polygon vertices only")))
        } else {
            Ok(())
        }
    };
    let report: AuditReport = match args.kind {
        CheckKind::K4 => {
            vertex_only("k4")?;
            check_k4_theorem(&polygon)
        }
        CheckKind::Cherry => audit_double_cherry(&polygon, sites)?,
        CheckKind::Cp => {
            let g = match sites {
                Some(s) => site_visibility_graph(&polygon, s)?,
                None => vertex_visibility_graph(&polygon),
            };
            capoyleas_pach_audit(&g)
        }
        CheckKind::Star => star_theorem_audit(&polygon, sites, args.t, &opts)?,
        CheckKind::Monotone => monotone_theorem_audit(&polygon, sites, args.t, &opts)?,
        CheckKind::Mtplus => {
            vertex_only("mtplus")?;
            polygon_mt_audit(&polygon, args.t, &opts)?
        }
    };
    println!("{}", json::report_line(&report));
    Ok(verdict_code(report.verdict))
}

fn need(v: Option<usize>, flag: &str, what: ConstructKind) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("construct {what:?} needs --{flag}").to_lowercase()))
}

fn construct(cli: &Cli, args: &ConstructArgs) -> Result<i32, CliError> {
    let mut budget = Budget::new(cli.budget);
    let out = args.out.as_deref();
    match args.what {
        ConstructKind::Ds3 => {
            let n = need(args.n, "n", args.what)?;
            let seq = generate_ds3(n, args.strategy.into(), &mut budget)?;
            emit(out, &write_dsseq(&seq))?;
            let valid = is_davenport_schinzel(&seq, 3).is_ok();
            certify(out, json!({ "n": n, "length": seq.len(), "ds3": valid }));
            Ok(if valid { 0 } else { 1 })
        }
        ConstructKind::Walczak => {
            let n = need(args.n, "n", args.what)?;
            let seq = generate_ds3(n, args.strategy.into(), &mut budget)?;
            let g = walczak_graph(&seq)?;
            emit(out, &write_graph(g.graph(), false))?;
            let h1_free = find_ordered_pattern(&g, &h1()).is_none();
            certify(
                out,
                json!({
                    "n": n,
                    "sequence": seq.letters(),
                    "edges": g.edge_count(),
                    "expected_edges": seq.len() - 2 * n,
                    "h1_free": h1_free,
                }),
            );
            Ok(if h1_free && g.edge_count() == seq.len() - 2 * n { 0 } else { 1 })
        }
        ConstructKind::K33lb => {
            let n = need(args.n, "n", args.what)?;
            let cert = k33_free_lowerbound(n, args.strategy.into(), &mut budget)?;
            emit(out, &write_graph(cert.graph.graph(), false))?;
            let (k33, implied, witness) = match &cert.k33_verdict {
                K33Verdict::Free => ("free", None, None),
                K33Verdict::Witness(w) => ("witness", None, Some(json!({ "a": w.a, "b": w.b }))),
                K33Verdict::Inconclusive { implied_free } => ("inconclusive", Some(*implied_free), None),
            };
            certify(
                out,
                json!({
                    "n": n,
                    "sequence": cert.sequence.letters(),
                    "vertices": cert.graph.n(),
                    "edges": cert.edge_count,
                    "h0_free": cert.h0_free,
                    "h1_free": cert.h1_free,
                    "k33": k33,
                    "implied_free": implied,
                    "witness": witness,
                }),
            );
            Ok(match cert.k33_verdict {
                _ if !(cert.h0_free && cert.h1_free) => 1,
                K33Verdict::Free => 0,
                K33Verdict::Witness(_) => 1,
                K33Verdict::Inconclusive { .. } => 5,
            })
        }
        ConstructKind::Pattern => {
            let text = match args.kind {
                PatternName::H0 => write_graph(h0().graph(), false),
                PatternName::H1 => write_graph(h1().graph(), false),
                kind => {
                    let t = need(args.t, "t", args.what)?;
                    let kind = match kind {
                        PatternName::Identity => PatternKind::Identity(t),
                        PatternName::PolygonMt => PatternKind::PolygonMt(t),
                        _ => PatternKind::MonotoneMt(t),
                    };
                    write_matrix(&build_pattern(kind)?)
                }
            };
            emit(out, &text)?;
            Ok(0)
        }
    }
}

fn extremal(cli: &Cli, cmd: &ExtremalCommand) -> Result<i32, CliError> {
    let mut budget = Budget::new(cli.budget);
    match cmd {
        ExtremalCommand::Matrix { pattern, identity, n, out } => {
            let p: BitMatrix = match (pattern, identity) {
                (Some(path), _) => {
                    parse_matrix(&read(path)?).map_err(|source| CliError::Parse { path: path.clone(), source })?
                }
                (None, Some(t)) => build_pattern(PatternKind::Identity(*t))?,
                (None, None) => return Err(CliError::Usage("extremal matrix needs --pattern or --identity".into())),
            };
            let ext = max_ones_avoiding(&p, *n, &mut budget)?;
            if let Some(path) = out {
                emit(Some(path), &write_matrix(&ext.witness))?;
            }
            println!(
                "{}",
                json!({ "n": n, "pattern_rows": p.rows(), "pattern_cols": p.cols(), "max_ones": ext.count })
            );
            Ok(0)
        }
        ExtremalCommand::Lambda { s, n, out } => {
            let (len, seq) = lambda_bruteforce(*s, *n, &mut budget)?;
            if let Some(path) = out {
                emit(Some(path), &write_dsseq(&seq))?;
            }
            println!("{}", json!({ "s": s, "n": n, "lambda": len, "witness": seq.letters() }));
            Ok(0)
        }
    }
}

fn report(cli: &Cli, args: &ReportArgs) -> Result<i32, CliError> {
    let families = if args.family == "all" {
        Family::ALL.to_vec()
    } else {
        args.family.split(',').map(|f| f.trim().parse()).collect::<Result<Vec<Family>, _>>()?
    };
    let seeds = match &args.seeds {
        Some(s) => parse_seeds(s)?,
        None => vec![cli.seed],
    };
    let plan = ReportPlan {
        families,
        nmin: args.nmin,
        nmax: args.nmax,
        seeds,
        t: args.t,
        opts: AuditOptions { node_budget: cli.budget, ..AuditOptions::default() },
    };
    let output = run_report(&plan, cli.threads)?;
    let mut csv = Vec::new();
    output.write_csv(&mut csv)?;
    emit(args.out.as_deref(), std::str::from_utf8(&csv).expect("csv output is UTF-8"))?;
    for failure in output.failures() {
        eprintln!("{}", json::report_line(failure));
    }
    Ok(if output.has_violation() { 1 } else { 0 })
}
