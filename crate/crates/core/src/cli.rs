//! The `symfrob` command line.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::expr::{Expr, ParseOptions};
use crate::frobenius::{
    coeff, coeff_by_operator, frobenius_series, fsur, fsurinv, integral_output, CoeffKind,
    CoeffMatrix, CoeffQuery,
};
use crate::lyndon::Word;
use crate::partition::Partition;
use crate::symfunc::{Basis, ElementJson, SymFunc};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_VERIFY_FAILED: i32 = 2;
pub const EXIT_INTEGRALITY: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "symfrob",
    version,
    about = "Exact Frobenius transforms of symmetric functions"
)]
struct Cli {
    /// Let e and h atoms take any composition as index (e.g. h[1,2]).
    #[arg(long, global = true)]
    sort_indices: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print one restriction coefficient.
    Coeff {
        #[arg(long, value_parser = parse_kind)]
        kind: CoeffKind,
        /// Partition such as [2,1].
        #[arg(long, value_parser = parse_partition)]
        lam: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// Apply a transform to an expression and print the result.
    Transform {
        #[arg(long, value_enum)]
        op: Op,
        /// Expression such as "h[2,2] - 2*e[1]".
        #[arg(long)]
        expr: String,
        /// Degree through which F is computed; defaults to deg(expr) + 4.
        /// Ignored by fsur and fsurinv, whose outputs are finite.
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_parser = parse_basis)]
        basis: Basis,
        #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
        format: OutputFormat,
    },
    /// Print the matrix of coefficients over all partitions up to a size.
    Table {
        #[arg(long, value_parser = parse_kind)]
        kind: CoeffKind,
        #[arg(long)]
        maxdeg: usize,
        #[arg(long, value_enum, default_value_t = TableFormat::Csv)]
        format: TableFormat,
        #[arg(long, value_enum, default_value_t = Route::Formula)]
        route: Route,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[arg(long, default_value_t = 4)]
        maxdeg: usize,
    },
    /// Print the Lyndon factorization of a word and its partition π(w).
    Lyndon {
        /// Digits (21211), a comma list (10,2,10) or pairs ((1,2)(2,1)).
        #[arg(long)]
        word: String,
        /// Alphabet size; defaults to the largest letter.
        #[arg(long)]
        alphabet: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Op {
    F,
    Fsur,
    Fsurinv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Route {
    /// Plethystic formula.
    Formula,
    /// Apply the transform to s_λ.
    Transform,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum OutputFormat {
    Json,
    /// An expression the parser reads back; for F, the part through the cutoff.
    Expr,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum TableFormat {
    Csv,
    Json,
}

fn parse_kind(s: &str) -> Result<CoeffKind, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Integrality(_) => EXIT_INTEGRALITY,
        _ => EXIT_INVALID,
    }
}

/// Caps the rayon pool at `SYMFROB_THREADS` if set.
fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("SYMFROB_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("SYMFROB_THREADS must be a positive integer, got {v:?}"))?;
    // a second call in the same process finds the pool already built
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

/// Runs the command line and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() {
                EXIT_INVALID
            } else {
                EXIT_OK
            };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    if let Err(msg) = configure_threads() {
        let _ = writeln!(err, "error: {msg}");
        return EXIT_INVALID;
    }
    let opts = ParseOptions {
        sort_indices: cli.sort_indices,
    };
    match execute(cli.command, opts, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}

fn execute(cmd: Command, opts: ParseOptions, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::InvalidArgument(format!("cannot write output: {e}"));
    match cmd {
        Command::Coeff {
            kind,
            lam,
            mu,
            route,
        } => {
            let q = CoeffQuery::new(kind, lam, mu);
            let v = match route {
                Route::Formula => coeff(&q)?,
                Route::Transform => coeff_by_operator(&q)?,
            };
            writeln!(out, "{v}").map_err(io)?;
        }
        Command::Transform {
            op,
            expr,
            cutoff,
            basis,
            format,
        } => {
            let f = Expr::parse_with(&expr, opts)?.eval();
            let text = transform(op, &f, cutoff, basis, format)?;
            writeln!(out, "{text}").map_err(io)?;
        }
        Command::Table {
            kind,
            maxdeg,
            format,
            route,
        } => {
            let m = match route {
                Route::Formula => CoeffMatrix::by_formula(kind, maxdeg)?,
                Route::Transform => CoeffMatrix::by_operator(kind, maxdeg)?,
            };
            match format {
                TableFormat::Csv => write!(out, "{}", m.to_csv()).map_err(io)?,
                TableFormat::Json => writeln!(out, "{}", m.to_json()).map_err(io)?,
            }
        }
        Command::Verify { suite, maxdeg } => {
            let report = run_suite(suite, maxdeg);
            write!(out, "{report}").map_err(io)?;
            if !report.outcome.integrality.is_empty() {
                return Ok(EXIT_INTEGRALITY);
            }
            if !report.passed() {
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        Command::Lyndon { word, alphabet } => {
            let w = Word::parse(&word, alphabet)?;
            let factors: String = w.factorize().iter().map(|f| format!("({f})")).collect();
            writeln!(out, "factors {factors}").map_err(io)?;
            writeln!(out, "pi {}", w.pi()).map_err(io)?;
        }
    }
    Ok(EXIT_OK)
}

fn transform(
    op: Op,
    f: &SymFunc,
    cutoff: Option<usize>,
    basis: Basis,
    format: OutputFormat,
) -> Result<String, Error> {
    match op {
        Op::F => {
            let n = cutoff.unwrap_or(f.degree() + 4);
            let series = frobenius_series(f, n);
            integral_output(&series.truncated(), Basis::S)?;
            Ok(match format {
                OutputFormat::Json => ElementJson::from_series(&series, basis).to_json_string(),
                OutputFormat::Expr => series.truncated().to_expr_string(basis)?,
            })
        }
        Op::Fsur | Op::Fsurinv => {
            let g = if matches!(op, Op::Fsur) {
                fsur(f)
            } else {
                fsurinv(f)
            };
            integral_output(&g, Basis::S)?;
            Ok(match format {
                OutputFormat::Json => ElementJson::from_symfunc(&g, basis).to_json_string(),
                OutputFormat::Expr => g.to_expr_string(basis)?,
            })
        }
    }
}
