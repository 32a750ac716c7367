//! Command dispatch for the `spinfields` binary. Everything here writes to
//! caller-supplied sinks and returns an exit code, so the commands can be
//! driven from tests without spawning a process.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_rational::BigRational;
use spinfields::perf::bench;
use spinfields::verify::{VerifyMode, DEFAULT_SAMPLED_PAIRS};
use spinfields::{
    build_system, decompose, mul_table, sigma, verify_system_with, FieldSystem, VerifyOptions,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "spinfields",
    version,
    about = "Orthonormal vector fields on spheres from Spin(9)"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the number of fields sigma(m) and the decomposition of m.
    Sigma { m: usize },
    /// Print m = (2k+1) 2^p 16^q.
    Decompose { m: usize },
    /// Build the field system on R^m.
    Fields {
        m: usize,
        #[arg(long, value_enum, default_value_t = FieldsFormat::SparseJson)]
        format: FieldsFormat,
        /// Write to this file instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check the field system on R^m exactly.
    Verify {
        m: usize,
        /// Check a random subset of pairs instead of all of them.
        #[arg(long)]
        sampled: bool,
        #[arg(long, default_value_t = 0, requires = "sampled")]
        seed: u64,
        /// Number of sampled pairs.
        #[arg(long, default_value_t = DEFAULT_SAMPLED_PAIRS, requires = "sampled")]
        count: usize,
        /// Also compare every field against dense matrix arithmetic.
        #[arg(long)]
        oracle: bool,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
        /// Verify a system read from a sparse-json file instead of building one.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Print the Cayley-Dickson multiplication table of dimension 2^level.
    Multable {
        level: u32,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
    },
    /// Apply every field to the vector read from FILE (one rational per line).
    Apply {
        m: usize,
        #[arg(long)]
        vector: PathBuf,
    },
    /// Time signed-permutation apply and compose against dense apply.
    Bench {
        m: usize,
        #[arg(long, default_value_t = 1000)]
        reps: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FieldsFormat {
    SparseJson,
    DenseCsv,
    Display,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

/// Either a finished command (text for stdout, exit code) or an error
/// message for stderr with its exit code.
struct Done {
    out: String,
    code: i32,
}

struct Failed {
    msg: String,
    code: i32,
}

impl<E: std::fmt::Display> From<E> for Failed {
    fn from(e: E) -> Self {
        Failed {
            msg: e.to_string(),
            code: EXIT_USAGE,
        }
    }
}

fn ok(out: String) -> Result<Done, Failed> {
    Ok(Done { out, code: EXIT_OK })
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, err) {
        Ok(done) => {
            if out.write_all(done.out.as_bytes()).is_err() {
                return EXIT_USAGE;
            }
            done.code
        }
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.msg);
            f.code
        }
    }
}

fn execute(command: Command, err: &mut dyn Write) -> Result<Done, Failed> {
    match command {
        Command::Sigma { m } => {
            let d = decompose(m)?;
            ok(format!("sigma({m}) = {}, decomposition {d}\n", sigma(m)?))
        }
        Command::Decompose { m } => {
            let d = decompose(m)?;
            ok(format!(
                "{m} = (2*{}+1) * 2^{} * 16^{}\n{d}\n",
                d.k, d.p, d.q
            ))
        }
        Command::Fields { m, format, out } => {
            let sys = build_checked(m, err)?;
            let text = match format {
                FieldsFormat::SparseJson => sys.to_json() + "\n",
                FieldsFormat::DenseCsv => sys.to_dense_csv(),
                FieldsFormat::Display => sys.display(),
            };
            match out {
                Some(path) => {
                    std::fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    ok(String::new())
                }
                None => ok(text),
            }
        }
        Command::Verify {
            m,
            sampled,
            seed,
            count,
            oracle,
            json,
            input,
        } => {
            let sys = match input {
                Some(path) => read_system(&path, m)?,
                None => build_checked(m, err)?,
            };
            let opts = VerifyOptions {
                mode: if sampled {
                    VerifyMode::Sampled { pairs: count, seed }
                } else {
                    VerifyMode::Auto
                },
                oracle,
                ..VerifyOptions::default()
            };
            let report = verify_system_with(&sys, &opts)?;
            let _ = writeln!(
                err,
                "verified in {:.3} ms",
                report.elapsed.as_secs_f64() * 1e3
            );
            let text = if json {
                report.to_json() + "\n"
            } else {
                report.summary()
            };
            Ok(Done {
                out: text,
                code: if report.passed() { EXIT_OK } else { EXIT_FAIL },
            })
        }
        Command::Multable { level, format } => {
            let table = mul_table(level)?;
            ok(match format {
                TableFormat::Csv => table.to_csv(),
                TableFormat::Json => table.to_json() + "\n",
            })
        }
        Command::Apply { m, vector } => {
            let v = read_vector(&vector, m)?;
            let sys = build_checked(m, err)?;
            let mut s = String::new();
            for f in sys.fields() {
                let row = f.matrix.apply(&v)?;
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                let _ = writeln!(s, "{}: {}", f.label, cells.join(","));
            }
            ok(s)
        }
        Command::Bench { m, reps } => ok(bench(m, reps)?.to_text()),
    }
}

fn build_checked(m: usize, err: &mut dyn Write) -> Result<FieldSystem, Failed> {
    let sys = build_system(m)?;
    if m % 2 == 1 {
        let _ = writeln!(
            err,
            "warning: m = {m} is odd, the sphere S^{} has no nonvanishing fields",
            m - 1
        );
    }
    Ok(sys)
}

fn read_system(path: &Path, m: usize) -> Result<FieldSystem, Failed> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let sys = FieldSystem::from_json(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if sys.m() != m {
        return Err(format!(
            "{}: system is on R^{}, expected R^{m}",
            path.display(),
            sys.m()
        )
        .into());
    }
    Ok(sys)
}

/// Parses one exact rational per line: an integer or `a/b`.
pub fn parse_vector(text: &str, m: usize) -> Result<Vec<BigRational>, String> {
    let lines: Vec<&str> = text.lines().collect();
    if lines.len() != m {
        return Err(format!("expected {m} lines, found {}", lines.len()));
    }
    lines
        .iter()
        .enumerate()
        .map(|(i, line)| parse_rational(line.trim()).map_err(|e| format!("line {}: {e}", i + 1)))
        .collect()
}

fn parse_rational(tok: &str) -> Result<BigRational, String> {
    let (num, den) = match tok.split_once('/') {
        Some((n, d)) => (n, d),
        None => (tok, "1"),
    };
    let parse = |s: &str| {
        s.parse::<BigInt>()
            .map_err(|_| format!("'{tok}' is not an integer or a/b"))
    };
    let (num, den) = (parse(num)?, parse(den)?);
    if den == BigInt::from(0) {
        return Err(format!("'{tok}' has zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

fn read_vector(path: &Path, m: usize) -> Result<Vec<BigRational>, Failed> {
    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok(parse_vector(&text, m).map_err(|e| format!("{}: {e}", path.display()))?)
}
