//! Command-line front end for the `monodeg` library.
//!
//! Every command builds one JSON value holding the whole report. The JSON,
//! text and CSV outputs are all rendered from that value, so the three
//! formats always carry the same numbers.

pub mod parse;
pub mod render;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use monodeg::IntMatrix;
use serde_json::Value;
use thiserror::Error;

pub use parse::{parse_matrix, read_matrix_file};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("PARSE_ERROR: {0}")]
    Parse(String),
    #[error("IO_ERROR: {0}")]
    Io(String),
    #[error("{code}: {source}", code = matrix_code(source))]
    Matrix {
        #[from]
        source: monodeg::Error,
    },
    #[error("USAGE: {0}")]
    Usage(String),
}

fn matrix_code(e: &monodeg::Error) -> &'static str {
    use monodeg::Error::*;
    match e {
        Empty => "EMPTY",
        NotSquare { .. } => "NOT_SQUARE",
        DimensionMismatch { .. } => "DIMENSION_MISMATCH",
        ZeroMatrix => "ZERO_MATRIX",
        RankDeficient => "RANK_DEFICIENT",
        NotUnimodular { .. } => "NOT_UNIMODULAR",
        WindowTooShort { .. } => "WINDOW_TOO_SHORT",
        InvalidArgument(_) => "INVALID_ARGUMENT",
        RefinementFailed { .. } | UnresolvedClass { .. } => "UNRESOLVED",
    }
}

#[derive(Debug, Parser)]
#[command(name = "monodeg", version, about = "Degree growth of monomial maps")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Full report: spectrum, sequence, recurrence, verdicts, cells, consistency.
    Analyze(Opts),
    /// Degree sequence D(A^n), n = 1..N.
    Sequence(Opts),
    /// Least-order linear recurrence of the degree sequence.
    Recurrence(Opts),
    /// Spectral verdicts for the degree and codegree sequences.
    Verdict(Opts),
    /// Canonical cell of each power and the tail behaviour of the trace.
    Cells(Opts),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("input").required(true).args(["matrix", "file"])))]
pub struct Opts {
    /// Matrix literal such as "[[-1,1,0],[-1,0,1],[1,0,0]]", or a JSON file path.
    #[arg(short, long)]
    pub matrix: Option<String>,
    /// JSON file with a "matrix" field.
    #[arg(short, long)]
    pub file: Option<PathBuf>,
    /// Number of terms.
    #[arg(short = 'n', long, default_value_t = 40)]
    pub terms: usize,
    /// Largest recurrence order searched [default: 2k^2].
    #[arg(long)]
    pub max_order: Option<usize>,
    /// Terms a candidate must predict beyond its fit [default: 4 * max-order].
    #[arg(long)]
    pub guard: Option<usize>,
    /// Refinement cap in bits for root certification.
    #[arg(long, default_value_t = monodeg::spectra::DEFAULT_CAP_BITS)]
    pub precision: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit with status 4 when some spectral fact stays uncertified.
    #[arg(long)]
    pub strict: bool,
    /// Run independent analyses on separate threads.
    #[arg(long)]
    pub parallel: bool,
    /// Use the inverse matrix (codegree sequence) for sequence, recurrence and cells.
    #[arg(long)]
    pub dual: bool,
}

/// Search bounds after defaults are applied.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub terms: usize,
    pub max_order: usize,
    pub guard: usize,
    /// Terms computed for the recurrence search: `max(terms, 2 max_order + guard)`.
    pub window: usize,
    pub precision: u64,
}

impl Opts {
    pub fn matrix(&self) -> Result<IntMatrix, CliError> {
        match (&self.matrix, &self.file) {
            (Some(text), _) => parse_matrix(text),
            (None, Some(path)) => read_matrix_file(path),
            (None, None) => Err(CliError::Usage(
                "one of --matrix or --file is required".into(),
            )),
        }
    }

    pub fn bounds(&self, k: usize) -> Result<Bounds, CliError> {
        if self.terms == 0 {
            return Err(CliError::Usage("--terms must be at least 1".into()));
        }
        let max_order = self.max_order.unwrap_or(2 * k * k);
        if max_order == 0 {
            return Err(CliError::Usage("--max-order must be at least 1".into()));
        }
        let guard = self.guard.unwrap_or(4 * max_order);
        Ok(Bounds {
            terms: self.terms,
            max_order,
            guard,
            window: self.terms.max(2 * max_order + guard),
            precision: self.precision,
        })
    }
}

/// Exit statuses.
pub mod exit {
    pub const OK: u8 = 0;
    pub const INPUT: u8 = 2;
    pub const INCONSISTENT: u8 = 3;
    pub const UNRESOLVED: u8 = 4;
}

/// What a run writes and how it ends.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Outcome {
    fn failure(e: &CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: exit::INPUT,
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(&cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code: exit::INPUT,
                }
            } else {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code: exit::OK,
                }
            }
        }
    }
}

pub fn execute(command: &Command) -> Outcome {
    match build(command) {
        Ok((value, format, opts)) => match render::render(command, &value, format) {
            Ok(stdout) => Outcome {
                stdout,
                stderr: String::new(),
                code: status_code(&value, opts.strict),
            },
            Err(e) => Outcome::failure(&e),
        },
        Err(e) => Outcome::failure(&e),
    }
}

fn opts_of(command: &Command) -> &Opts {
    match command {
        Command::Analyze(o)
        | Command::Sequence(o)
        | Command::Recurrence(o)
        | Command::Verdict(o)
        | Command::Cells(o) => o,
    }
}

fn build(command: &Command) -> Result<(Value, Format, &Opts), CliError> {
    let opts = opts_of(command);
    if opts.format == Format::Csv && !matches!(command, Command::Sequence(_)) {
        return Err(CliError::Usage(
            "--format csv is only available for `sequence`".into(),
        ));
    }
    let a = opts.matrix()?;
    a.require_full_rank()?;
    let b = opts.bounds(a.dim())?;
    let value = match command {
        Command::Analyze(_) => report::analyze(&a, &b, opts.parallel)?,
        Command::Sequence(_) => report::sequence(&a, &b, opts.dual)?,
        Command::Recurrence(_) => report::recurrence(&a, &b, opts.dual)?,
        Command::Verdict(_) => report::verdict(&a, &b, opts.parallel)?,
        Command::Cells(_) => report::cells(&a, &b, opts.dual)?,
    };
    Ok((value, opts.format, opts))
}

/// 3 when the consistency check failed, 4 when `strict` and some
/// certification gave up, 0 otherwise.
pub fn status_code(report: &Value, strict: bool) -> u8 {
    if report
        .pointer("/consistency/status")
        .and_then(Value::as_str)
        == Some("INCONSISTENT")
    {
        return exit::INCONSISTENT;
    }
    if strict && report::has_unresolved(report) {
        return exit::UNRESOLVED;
    }
    exit::OK
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn exit_codes() {
        let ok = json!({ "consistency": { "status": "CONSISTENT" }, "verdicts": { "d1": { "unresolved": false } } });
        assert_eq!(status_code(&ok, true), exit::OK);
        let bad = json!({ "consistency": { "status": "INCONSISTENT" } });
        assert_eq!(status_code(&bad, false), exit::INCONSISTENT);
        let open = json!({ "verdicts": { "d1": { "unresolved": true } } });
        assert_eq!(status_code(&open, false), exit::OK);
        assert_eq!(status_code(&open, true), exit::UNRESOLVED);
        let flags = json!({ "spectrum": { "roots": [{ "flag": "UNRESOLVED" }] } });
        assert_eq!(status_code(&flags, true), exit::UNRESOLVED);
    }

    #[test]
    fn default_bounds() {
        let cli = Cli::try_parse_from(["monodeg", "recurrence", "-m", "[[1]]"]).unwrap();
        let Command::Recurrence(o) = cli.command else {
            panic!()
        };
        let b = o.bounds(3).unwrap();
        assert_eq!((b.terms, b.max_order, b.guard, b.window), (40, 18, 72, 108));
        assert_eq!(b.precision, 256);
    }

    #[test]
    fn run_reports_parse_errors() {
        let out = run(["monodeg", "sequence", "-m", "[[1,2],[3]]"]);
        assert_eq!(out.code, exit::INPUT);
        assert!(out.stderr.starts_with("error: NOT_SQUARE"));
        let out = run(["monodeg", "sequence", "-m", "[[2]]", "-n", "3"]);
        assert_eq!(out.stdout, "2 4 8\n");
    }
}
