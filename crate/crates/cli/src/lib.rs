//! Command-line front end. [`run_command`] is the whole program minus process
//! exit, so it can be driven from tests.

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use cuspidal_core::golden::golden_records_for;
use cuspidal_core::report::verify;
use cuspidal_core::table::{self, COMFORTABLE_MAX_DEGREE, DEFAULT_CUSP_DMAX, DEFAULT_TANGENCY_DMAX};
use cuspidal_core::{golden_records, CuspVariant, Engine, Error, Family, Format, MemoStore};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "cuspidal", version, about = "Exact counts of rational cuspidal curves and related invariants")]
struct Cli {
    /// Memo cache file, loaded before and saved after the command.
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Cuspidal recursion variant.
    #[arg(long, global = true, value_enum, default_value_t = VariantArg::Derivation)]
    variant: VariantArg,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VariantArg {
    Derivation,
    Theorem,
}

impl From<VariantArg> for CuspVariant {
    fn from(v: VariantArg) -> Self {
        match v {
            VariantArg::Derivation => CuspVariant::Derivation,
            VariantArg::Theorem => CuspVariant::Theorem,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableFamily {
    N,
    Cusp,
    Tangency,
    Ct,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum VerifyFamily {
    N,
    Cusp,
    Tangency,
    Ct,
    E6,
}

impl From<VerifyFamily> for Family {
    fn from(f: VerifyFamily) -> Self {
        match f {
            VerifyFamily::N => Family::N,
            VerifyFamily::Cusp => Family::C,
            VerifyFamily::Tangency => Family::T,
            VerifyFamily::Ct => Family::CT,
            VerifyFamily::E6 => Family::E6,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Md,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Md => Format::Markdown,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Rational degree-d curves through 3d-1 points.
    N {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
    },
    /// Rational degree-d curves with a cusp on n lines through m points.
    Cusp {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Defaults to 3d-2-n.
        #[arg(long, allow_negative_numbers = true)]
        m: Option<i64>,
    },
    /// Two-component curves tangent at the node.
    Tangency {
        #[arg(long, allow_negative_numbers = true)]
        d1: i64,
        #[arg(long, allow_negative_numbers = true)]
        d2: i64,
        #[arg(long, allow_negative_numbers = true)]
        m1: i64,
        #[arg(long, allow_negative_numbers = true)]
        m2: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Cuspidal cubic through m1 points plus a line through m2 points tangent to the cusp branch.
    CuspTangent {
        #[arg(long, allow_negative_numbers = true)]
        m1: i64,
        #[arg(long, allow_negative_numbers = true)]
        m2: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Rational quartics with an E6 point on n lines.
    E6 {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
    /// Emit a table for one family.
    Table(TableArgs),
    /// Check every embedded reference value.
    Verify {
        #[arg(long, value_enum)]
        family: Option<VerifyFamily>,
        /// Also print every row in this format.
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Evaluate records concurrently.
        #[arg(long)]
        parallel: bool,
    },
}

#[derive(Debug, Args)]
struct TableArgs {
    #[arg(long, value_enum)]
    family: TableFamily,
    #[arg(long)]
    dmax: Option<i64>,
    /// Restrict to one line count; all of 0..=2 otherwise.
    #[arg(long)]
    n: Option<i64>,
    #[arg(long, value_enum)]
    format: FormatArg,
    /// Evaluate entries concurrently.
    #[arg(long)]
    parallel: bool,
}

/// Exit status plus everything the command wrote.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new() -> Self {
        Outcome { code: EXIT_OK, stdout: String::new(), stderr: String::new() }
    }
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run_command<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let mut out = Outcome::new();
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let rendered = err.render().to_string();
            if err.use_stderr() {
                out.code = EXIT_USAGE;
                out.stderr = rendered;
            } else {
                out.stdout = rendered;
            }
            return out;
        }
    };

    let store = MemoStore::new();
    let mut save_cache = cli.cache.is_some();
    if let Some(path) = &cli.cache {
        if let Err(e) = load_cache(&store, path) {
            out.stderr.push_str(&format!("warning: {e}; cache ignored\n"));
            save_cache = false;
        }
    }
    let engine = Engine::with_store(store);

    match execute(&cli, &engine, &mut out) {
        Ok(()) => {}
        Err(CommandError::Engine(e @ Error::InvalidInput(_))) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = EXIT_USAGE;
        }
        Err(CommandError::Engine(e)) => {
            out.stderr.push_str(&format!("error: {e}\n"));
            out.code = EXIT_MISMATCH;
        }
        Err(CommandError::Usage(msg)) => {
            out.stderr.push_str(&format!("error: {msg}\n"));
            out.code = EXIT_USAGE;
        }
    }

    if save_cache {
        if let Some(path) = &cli.cache {
            if let Err(e) = engine.store().save(path) {
                out.stderr.push_str(&format!("warning: could not write cache: {e}\n"));
            }
        }
    }
    out
}

fn load_cache(store: &MemoStore, path: &Path) -> Result<(), cuspidal_core::CacheError> {
    if !path.exists() {
        return Ok(());
    }
    store.load(path).map(|_| ())
}

enum CommandError {
    Engine(Error),
    Usage(String),
}

impl From<Error> for CommandError {
    fn from(e: Error) -> Self {
        CommandError::Engine(e)
    }
}

fn warn_degree(out: &mut Outcome, d: i64) {
    if d > COMFORTABLE_MAX_DEGREE {
        out.stderr.push_str(&format!(
            "warning: degree {d} exceeds {COMFORTABLE_MAX_DEGREE}; runtime grows quickly\n"
        ));
    }
}

fn execute(cli: &Cli, engine: &Engine, out: &mut Outcome) -> Result<(), CommandError> {
    let variant: CuspVariant = cli.variant.into();
    let value = match &cli.command {
        Command::N { d } => {
            warn_degree(out, *d);
            engine.kontsevich_n(*d, 3 * d - 1)?
        }
        Command::Cusp { d, n, m } => {
            warn_degree(out, *d);
            engine.cusp_count_with(variant, *d, m.unwrap_or(3 * d - 2 - n), *n)?
        }
        Command::Tangency { d1, d2, m1, m2, n } => engine.tangency_count(*d1, *d2, *m1, *m2, *n)?,
        Command::CuspTangent { m1, m2, n } => engine.cusp_tangent_line_count(*m1, *m2, *n)?,
        Command::E6 { n } => engine.e6_quartic_count(*n)?,
        Command::Table(args) => return run_table(args, variant, engine, out),
        Command::Verify { family, format, parallel } => {
            let records = match family {
                Some(f) => golden_records_for((*f).into()),
                None => golden_records(),
            };
            let report = verify(engine, variant, &records, *parallel);
            if let Some(format) = format {
                out.stdout.push_str(&report.table().render((*format).into()));
            }
            for row in report.mismatches() {
                let params: Vec<String> = row.params.iter().map(i64::to_string).collect();
                let got = match &row.computed {
                    Ok(v) => v.clone(),
                    Err(e) => format!("error: {e}"),
                };
                out.stderr.push_str(&format!(
                    "mismatch {}({}): computed {got}, expected {}\n",
                    row.family,
                    params.join(","),
                    row.expected.as_deref().unwrap_or("-")
                ));
            }
            if format.is_none() {
                out.stdout.push_str(&report.summary());
                out.stdout.push('\n');
            } else {
                out.stderr.push_str(&report.summary());
                out.stderr.push('\n');
            }
            if !report.all_match() {
                out.code = EXIT_MISMATCH;
            }
            return Ok(());
        }
    };
    out.stdout.push_str(&format!("{value}\n"));
    Ok(())
}

fn run_table(args: &TableArgs, variant: CuspVariant, engine: &Engine, out: &mut Outcome) -> Result<(), CommandError> {
    let ns: Vec<i64> = match args.n {
        Some(n) if n < 0 => return Err(CommandError::Usage(format!("--n must be nonnegative, got {n}"))),
        Some(n) => vec![n],
        None => vec![0, 1, 2],
    };
    let dmax = args.dmax.unwrap_or(match args.family {
        TableFamily::Tangency => DEFAULT_TANGENCY_DMAX,
        _ => DEFAULT_CUSP_DMAX,
    });
    if dmax < 1 {
        return Err(CommandError::Usage(format!("--dmax must be positive, got {dmax}")));
    }
    warn_degree(out, dmax);
    let table = match args.family {
        TableFamily::N => table::kontsevich_table(engine, dmax, args.parallel)?,
        TableFamily::Cusp => table::cusp_table(engine, variant, dmax, &ns, args.parallel)?,
        TableFamily::Tangency => table::tangency_table(engine, dmax, &ns, args.parallel)?,
        TableFamily::Ct => table::cusp_tangent_table(engine, &ns)?,
    };
    out.stdout.push_str(&table.render(args.format.into()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Outcome {
        run_command(std::iter::once("cuspidal").chain(args.iter().copied()))
    }

    #[test]
    fn single_values() {
        assert_eq!(run(&["cusp", "--d", "4", "--n", "0"]).stdout, "2304\n");
        assert_eq!(run(&["n", "--d", "3"]).stdout, "12\n");
        assert_eq!(run(&["e6", "--n", "1"]).stdout, "33\n");
        assert_eq!(run(&["cusp-tangent", "--m1", "6", "--m2", "1", "--n", "0"]).stdout, "18\n");
        assert_eq!(
            run(&["tangency", "--d1", "1", "--d2", "4", "--m1", "2", "--m2", "10", "--n", "0"]).stdout,
            "2184\n"
        );
    }

    #[test]
    fn explicit_off_shell_point_count() {
        assert_eq!(run(&["cusp", "--d", "4", "--n", "0", "--m", "9"]).stdout, "0\n");
    }

    #[test]
    fn usage_errors_exit_two() {
        let bad_flag = run(&["cusp", "--degree", "4"]);
        assert_eq!(bad_flag.code, EXIT_USAGE);
        assert!(bad_flag.stderr.contains("Usage"));
        assert_eq!(run(&["bogus"]).code, EXIT_USAGE);
        assert_eq!(run(&["n", "--d", "0"]).code, EXIT_USAGE);
        assert_eq!(run(&["table", "--family", "cusp", "--format", "xml"]).code, EXIT_USAGE);
    }

    #[test]
    fn help_exits_zero() {
        let out = run(&["--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("verify"));
    }

    #[test]
    fn large_degree_warns() {
        let out = run(&["table", "--family", "n", "--dmax", "13", "--format", "csv"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stderr.contains("warning"));
    }
}
