//! `swt` command-line front end.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3 size cap.
//! Every failure writes one JSON object on a single line to stderr.

mod bench;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use swt_core::SwtError;

pub use bench::{random_instance, table as bench_table, BenchRow, Instance};
pub use commands::torus_angles;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "swt", version, about = "Exact Schur-Weyl transform")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// One matrix element ⟨f|λ t y⟩.
    Element(ElementArgs),
    /// The full transform matrix.
    Matrix(MatrixArgs),
    /// Unitarity, selection rule, census and dual-action checks.
    Verify(VerifyArgs),
    /// Dimension census Σ_λ dim Δ^λ · dim D^λ.
    Dims(DimsArgs),
    /// Per-amplitude timing table.
    Bench(BenchArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Copy, Clone, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    #[default]
    Exact,
    Float,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct ShapeArgs {
    /// Local dimension (letters 1..=n).
    #[arg(long)]
    pub n: usize,
    /// Number of nodes.
    #[arg(long = "N", visible_alias = "nodes")]
    pub nodes: usize,
}

#[derive(Args, Debug, Clone, Copy)]
pub struct CapArgs {
    /// Largest number of rows n^N that will be assembled.
    #[arg(long, env = "SWT_SIZE_CAP", default_value_t = swt_core::transform::DEFAULT_SIZE_CAP)]
    pub size_cap: usize,
}

#[derive(Args, Debug)]
pub struct ElementArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    /// Configuration, e.g. 1,3,2,1.
    #[arg(long)]
    pub f: String,
    /// Partition, e.g. 3,1.
    #[arg(long)]
    pub lambda: String,
    /// Semistandard Weyl tableau, e.g. 1,1,3/2.
    #[arg(long)]
    pub t: String,
    /// Standard Young tableau, e.g. 1,2,4/3.
    #[arg(long)]
    pub y: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Include the crystallisation graph with per-edge operator values.
    #[arg(long)]
    pub trace: bool,
}

#[derive(Args, Debug)]
pub struct MatrixArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    #[command(flatten)]
    pub cap: CapArgs,
    /// Assemble on one thread.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Unitarity in exact arithmetic or floating point.
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Seed for the torus angles.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[command(flatten)]
    pub cap: CapArgs,
}

#[derive(Args, Debug)]
pub struct DimsArgs {
    #[command(flatten)]
    pub shape: ShapeArgs,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Also count tableaux by enumeration.
    #[arg(long)]
    pub enumerate: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[arg(long, default_value_t = 2)]
    pub n: usize,
    /// Smallest N in the table.
    #[arg(long, default_value_t = 4)]
    pub min_nodes: usize,
    /// Largest N in the table.
    #[arg(long, default_value_t = 16)]
    pub max_nodes: usize,
    /// Random instances per N.
    #[arg(long, default_value_t = 20)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Skip path enumeration for instances with more paths than this.
    #[arg(long, default_value_t = 1 << 16)]
    pub path_cap: u64,
    /// Append a parallel vs sequential assembly table for small shapes.
    #[arg(long)]
    pub assembly: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

/// A failed invocation: exit code plus the stderr document.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub error: Value,
}

impl Failure {
    pub fn new(code: i32, kind: &str, message: impl Into<String>) -> Self {
        Self {
            code,
            error: json!({ "error": kind, "message": message.into(), "exit_code": code }),
        }
    }
}

impl From<SwtError> for Failure {
    fn from(e: SwtError) -> Self {
        let message = e.to_string();
        match e {
            SwtError::SizeCap { rows, cap } => Failure {
                code: EXIT_CAP,
                error: json!({
                    "error": "size_cap",
                    "message": message,
                    "rows": rows.to_string(),
                    "cap": cap,
                    "exit_code": EXIT_CAP,
                }),
            },
            SwtError::Parse {
                what,
                input,
                position,
                message: detail,
            } => Failure {
                code: EXIT_INPUT,
                error: json!({
                    "error": "parse",
                    "message": message,
                    "what": what,
                    "input": input,
                    "position": position,
                    "detail": detail,
                    "exit_code": EXIT_INPUT,
                }),
            },
            _ => Failure::new(EXIT_INPUT, "invalid_input", message),
        }
    }
}

pub type CmdResult = Result<i32, Failure>;

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let text = e.to_string();
            let message = text
                .lines()
                .take_while(|l| !l.starts_with("Usage:") && !l.starts_with("For more information"))
                .map(str::trim)
                .filter(|l| !l.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            let message = message.trim_start_matches("error: ");
            return report(stderr, Failure::new(EXIT_INPUT, "usage", message));
        }
    };
    match dispatch(&cli.command, stdout) {
        Ok(code) => code,
        Err(f) => report(stderr, f),
    }
}

fn report(stderr: &mut dyn Write, f: Failure) -> i32 {
    let _ = writeln!(stderr, "{}", f.error);
    f.code
}

fn dispatch(cmd: &Command, out: &mut dyn Write) -> CmdResult {
    match cmd {
        Command::Element(a) => commands::element(a, out),
        Command::Matrix(a) => commands::matrix(a, out),
        Command::Verify(a) => commands::verify(a, out),
        Command::Dims(a) => commands::dims(a, out),
        Command::Bench(a) => bench::run(a, out),
    }
}

pub(crate) fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::new(EXIT_INPUT, "io", e.to_string()))
}
