//! chordlab: tables, exhaustive verification, bijection application, and
//! export for linear chord diagrams.
//!
//! Exit codes: 0 success, 1 verification or precondition failure, 2 resource
//! cap exceeded, 64 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};

use chordlab::bijections::{
    dyck_to_matching, matching_to_dyck, rewrap, unimodal_injection, unwrap, MarkedDiagram,
};
use chordlab::diagram::{Chord, ChordDiagram};
use chordlab::dyck::DyckPath;
use chordlab::enumerate::{self, parse_filter};
use chordlab::stats::{self, Statistic};
use chordlab::triangles::{self, TableFormat, TriangleConfig};
use chordlab::verify::{self, VerifyOptions};
use chordlab::{analysis, Error};

/// Largest n for recurrence-backed tables and identities.
const RECURRENCE_CAP: u32 = 200;

#[derive(Parser)]
#[command(
    name = "chordlab",
    version,
    about = "Exact enumeration and verification for linear chord diagrams",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Limits {
    /// Cap for enumeration-backed work (env fallback CHORDLAB_CAP)
    #[arg(long, env = "CHORDLAB_CAP", default_value_t = 8)]
    cap: u32,

    /// Worker threads for enumeration-backed work (env fallback CHORDLAB_THREADS)
    #[arg(long, env = "CHORDLAB_THREADS", default_value_t = 1)]
    threads: usize,
}

#[derive(Args)]
struct OutFile {
    /// Write output to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print a number triangle (kinds: L, T, E, narayana, sullivan)
    Table {
        kind: String,
        /// Last row to print
        #[arg(long)]
        nmax: u32,
        /// Output format: text, csv, json, bfile
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: OutFile,
    },
    /// Run a verification suite (rowsum, recurrence, egf, bijection,
    /// expectation, narayana-transport, reversal)
    Verify {
        suite: String,
        /// Largest n for recurrence- and series-level checks
        #[arg(long)]
        nmax: u32,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: OutFile,
    },
    /// List diagrams one per line, or print a statistic histogram
    Enumerate {
        /// Number of chords
        #[arg(long)]
        n: u32,
        /// Filter: all, minlen=K, noncrossing, nonnesting
        #[arg(long, default_value = "all")]
        filter: String,
        /// Statistic for the histogram: sc, scK, lr
        #[arg(long)]
        stat: Option<String>,
        /// Print the histogram (requires --stat)
        #[arg(long)]
        histogram: bool,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: OutFile,
    },
    /// Apply a bijection (unwrap, rewrap, dyck2match, match2dyck, phi)
    Map {
        name: String,
        /// Diagram `(a,b)(c,d)...` or path `UUDD...` in the map's domain
        input: String,
        /// Marked short chord for unwrap, e.g. "(3,4)"
        #[arg(long)]
        mark: Option<String>,
    },
    /// Shape reports (unimodality, log-concavity) for triangle rows
    Analyze {
        kind: String,
        /// Last row to check
        #[arg(long)]
        nmax: u32,
        /// Output format: text, json
        #[arg(long, default_value = "text")]
        format: String,
        #[command(flatten)]
        limits: Limits,
        #[command(flatten)]
        out: OutFile,
    },
}

enum Failure {
    /// Exit 1: verification or precondition failure.
    Check(String),
    /// Exit 2: resource cap exceeded.
    Resource(String),
    /// Exit 64: bad flags or unparseable input.
    Usage(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Check(_) => 1,
            Failure::Resource(_) => 2,
            Failure::Usage(_) => 64,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Check(m) | Failure::Resource(m) | Failure::Usage(m) => m,
        }
    }
}

/// Input construction errors are usage errors; violated operation
/// preconditions are check failures; cap overruns are resource failures.
fn from_core(err: Error) -> Failure {
    match err {
        Error::ResourceCap { .. } => Failure::Resource(err.to_string()),
        Error::Parse(_)
        | Error::Unknown { .. }
        | Error::DuplicatePoint { .. }
        | Error::PointOutOfRange { .. }
        | Error::WrongChordCount { .. } => Failure::Usage(err.to_string()),
        _ => Failure::Check(err.to_string()),
    }
}

fn emit(out: &OutFile, text: &str) -> Result<(), Failure> {
    match &out.out {
        None => {
            print!("{text}");
            std::io::stdout().flush().ok();
            Ok(())
        }
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Check(format!("cannot write {}: {e}", path.display()))),
    }
}

fn require_cap(n: u32, cap: u32) -> Result<(), Failure> {
    if n > cap {
        return Err(Failure::Resource(Error::ResourceCap { n, cap }.to_string()));
    }
    Ok(())
}

fn require_recurrence_cap(n: u32) -> Result<(), Failure> {
    if n > RECURRENCE_CAP {
        return Err(Failure::Resource(format!(
            "nmax {n} exceeds the recurrence cap {RECURRENCE_CAP}"
        )));
    }
    Ok(())
}

fn run_table(
    kind: &str,
    nmax: u32,
    format: &str,
    limits: &Limits,
    out: &OutFile,
) -> Result<(), Failure> {
    require_recurrence_cap(nmax)?;
    let cfg = TriangleConfig {
        enumeration_cap: limits.cap,
    };
    let tri = triangles::by_name(kind, &cfg).map_err(from_core)?;
    let format = TableFormat::parse(format).map_err(from_core)?;
    let text = triangles::export(tri.as_ref(), nmax, format).map_err(from_core)?;
    emit(out, &text)
}

fn run_verify(suite: &str, nmax: u32, limits: &Limits, out: &OutFile) -> Result<(), Failure> {
    require_recurrence_cap(nmax)?;
    let suite = verify::by_name(suite).map_err(from_core)?;
    let report = suite.run(&VerifyOptions {
        n_max: nmax,
        enum_cap: limits.cap,
        threads: limits.threads,
    });
    emit(out, &report.render())?;
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Check(format!("suite {} failed", suite.name())))
    }
}

fn run_enumerate(
    n: u32,
    filter: &str,
    stat: Option<&str>,
    histogram: bool,
    limits: &Limits,
    out: &OutFile,
) -> Result<(), Failure> {
    require_cap(n, limits.cap)?;
    let filter = parse_filter(filter).map_err(from_core)?;
    if histogram && stat.is_none() {
        return Err(Failure::Usage("--histogram requires --stat".into()));
    }
    match stat {
        Some(spec) => {
            let stat = Statistic::parse(spec).map_err(from_core)?;
            let h = stats::histogram_threads(n as usize, &filter, stat, limits.threads);
            emit(out, &format!("{}\n", h.to_json()))
        }
        None => {
            let mut text = String::new();
            for d in enumerate::enumerate(n as usize, filter) {
                text.push_str(&d.to_string());
                text.push('\n');
            }
            emit(out, &text)
        }
    }
}

fn run_map(name: &str, input: &str, mark: Option<&str>) -> Result<(), Failure> {
    let text = match name {
        "unwrap" => {
            let d: ChordDiagram = input.parse().map_err(from_core)?;
            let mark = mark.ok_or_else(|| Failure::Usage("unwrap requires --mark".into()))?;
            let mark: Chord = mark.parse().map_err(from_core)?;
            let md = MarkedDiagram::new(d, mark).map_err(from_core)?;
            format!("{}\n", unwrap(&md))
        }
        "rewrap" => {
            let d: ChordDiagram = input.parse().map_err(from_core)?;
            let md = rewrap(&d).map_err(from_core)?;
            format!("{} mark={}\n", md.diagram(), md.mark())
        }
        "dyck2match" => {
            let p: DyckPath = input.parse().map_err(from_core)?;
            format!("{}\n", dyck_to_matching(&p))
        }
        "match2dyck" => {
            let d: ChordDiagram = input.parse().map_err(from_core)?;
            format!("{}\n", matching_to_dyck(&d).map_err(from_core)?)
        }
        "phi" => {
            let d: ChordDiagram = input.parse().map_err(from_core)?;
            let j = stats::short_chords(&d, 1);
            format!("{}\n", unimodal_injection(&d, j).map_err(from_core)?)
        }
        _ => {
            return Err(Failure::Usage(format!(
                "unknown map {name:?}, expected one of unwrap, rewrap, dyck2match, match2dyck, phi"
            )))
        }
    };
    print!("{text}");
    Ok(())
}

fn run_analyze(
    kind: &str,
    nmax: u32,
    format: &str,
    limits: &Limits,
    out: &OutFile,
) -> Result<(), Failure> {
    require_recurrence_cap(nmax)?;
    let cfg = TriangleConfig {
        enumeration_cap: limits.cap,
    };
    let tri = triangles::by_name(kind, &cfg).map_err(from_core)?;
    let reports = analysis::sweep(tri.as_ref(), nmax).map_err(from_core)?;
    let text = match format {
        "text" => analysis::render_reports(&reports),
        "json" => format!("{}\n", analysis::reports_to_json(&reports)),
        other => {
            return Err(Failure::Usage(format!(
                "unknown format {other:?}, expected text or json"
            )))
        }
    };
    emit(out, &text)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match &cli.cmd {
        Cmd::Table {
            kind,
            nmax,
            format,
            limits,
            out,
        } => run_table(kind, *nmax, format, limits, out),
        Cmd::Verify {
            suite,
            nmax,
            limits,
            out,
        } => run_verify(suite, *nmax, limits, out),
        Cmd::Enumerate {
            n,
            filter,
            stat,
            histogram,
            limits,
            out,
        } => run_enumerate(*n, filter, stat.as_deref(), *histogram, limits, out),
        Cmd::Map { name, input, mark } => run_map(name, input, mark.as_deref()),
        Cmd::Analyze {
            kind,
            nmax,
            format,
            limits,
            out,
        } => run_analyze(kind, *nmax, format, limits, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help and version are not usage errors
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            eprint!("{e}");
            return ExitCode::from(64);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            ExitCode::from(failure.code())
        }
    }
}
