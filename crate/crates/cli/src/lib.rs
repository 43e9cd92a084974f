//! Command-line front end: `find`, `table`, `verify`, `bound`, `crosscheck`.
//!
//! Exit codes: 0 success or member, 1 non-member or engine mismatch,
//! 2 usage error, 3 base beyond the selected engine's cap.

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use munchausen::search::{DEFAULT_LINEAR_CEILING, DEFAULT_MULTISET_MAX_BASE};
use munchausen::{
    find, find_linear, find_multiset, render_bfile, render_csv, render_json, render_json_many,
    render_table, render_text, search_bound, verify, Base, DigitVec, EngineKind, Error, Nat,
    SearchOptions, SearchReport, ZeroPowerConvention,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "munchausen",
    version,
    about = "Exhaustive search for Munchausen numbers in any base"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Find every Munchausen number in one base
    Find(FindArgs),
    /// Print the table of Munchausen numbers for a range of bases
    Table(TableArgs),
    /// Check a single number and show its digit powers
    Verify(VerifyArgs),
    /// Show the search bound 2*b^b for a base
    Bound(BoundArgs),
    /// Run both engines and compare their hits
    Crosscheck(CrosscheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Bfile,
}

/// Inclusive base range written `A..B` (or a single base `A`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaseRange {
    pub first: Base,
    pub last: Base,
}

impl BaseRange {
    pub fn bases(self) -> impl Iterator<Item = Base> {
        (self.first.get()..=self.last.get()).map(|b| Base::new(b).expect("inside a valid range"))
    }
}

impl FromStr for BaseRange {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (lo, hi) = s.split_once("..").unwrap_or((s, s));
        let first = parse_base(lo.trim())?;
        let last = parse_base(hi.trim())?;
        if first > last {
            return Err(format!("range {s} is descending"));
        }
        Ok(BaseRange { first, last })
    }
}

fn parse_base(s: &str) -> Result<Base, String> {
    let value: u32 = s.parse().map_err(|_| format!("invalid base {s:?}"))?;
    Base::new(value).map_err(|e| e.to_string())
}

fn parse_jobs(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) | Err(_) => Err(format!("jobs must be a positive integer, got {s:?}")),
        Ok(n) => Ok(n),
    }
}

#[derive(Debug, Clone, Args)]
pub struct EngineFlags {
    /// Worker threads [default: available parallelism]
    #[arg(long, value_parser = parse_jobs)]
    pub jobs: Option<usize>,
    /// Largest candidate count the linear engine will scan
    #[arg(long, default_value_t = DEFAULT_LINEAR_CEILING)]
    pub linear_ceiling: u64,
    /// Let the multiset engine run above its default base cap
    #[arg(long)]
    pub allow_large_base: bool,
}

#[derive(Debug, Clone, Args)]
pub struct OutputFlags {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FindArgs {
    #[arg(long, value_parser = parse_base)]
    pub base: Base,
    /// Value of 0^0: one (standard) or zero (variant)
    #[arg(long, default_value = "one")]
    pub convention: ZeroPowerConvention,
    #[arg(long, default_value = "auto")]
    pub engine: EngineKind,
    /// Also test 0, which lies outside the interval [1, 2b^b]
    #[arg(long)]
    pub include_zero: bool,
    #[command(flatten)]
    pub engine_flags: EngineFlags,
    #[command(flatten)]
    pub output: OutputFlags,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    /// Inclusive base range, e.g. 2..10
    #[arg(long, default_value = "2..10")]
    pub bases: BaseRange,
    #[arg(long, default_value = "one")]
    pub convention: ZeroPowerConvention,
    #[arg(long, default_value = "auto")]
    pub engine: EngineKind,
    #[command(flatten)]
    pub engine_flags: EngineFlags,
    #[command(flatten)]
    pub output: OutputFlags,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Decimal number, or a bracketed digit list like [1,3,1] with --radix-input
    pub number: String,
    #[arg(long, value_parser = parse_base)]
    pub base: Base,
    #[arg(long, default_value = "one")]
    pub convention: ZeroPowerConvention,
    /// Read NUMBER as a digit list in --base
    #[arg(long)]
    pub radix_input: bool,
}

#[derive(Debug, Args)]
pub struct BoundArgs {
    #[arg(long, value_parser = parse_base)]
    pub base: Base,
}

#[derive(Debug, Args)]
pub struct CrosscheckArgs {
    #[arg(long, default_value = "2..8")]
    pub bases: BaseRange,
    /// Check one convention only [default: both]
    #[arg(long)]
    pub convention: Option<ZeroPowerConvention>,
    #[command(flatten)]
    pub engine_flags: EngineFlags,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return e.exit_code();
        }
    };
    match cli.command {
        Command::Find(args) => cmd_find(&args, stdout, stderr),
        Command::Table(args) => cmd_table(&args, stdout, stderr),
        Command::Verify(args) => cmd_verify(&args, stdout, stderr),
        Command::Bound(args) => cmd_bound(&args, stdout),
        Command::Crosscheck(args) => cmd_crosscheck(&args, stdout, stderr),
    }
}

fn exit_code_for(err: &Error) -> i32 {
    match err {
        Error::LinearCeiling { .. } | Error::MultisetCap { .. } => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn fail(err: &Error, stderr: &mut dyn Write) -> i32 {
    let _ = writeln!(stderr, "error: {err}");
    exit_code_for(err)
}

fn options(
    convention: ZeroPowerConvention,
    engine: EngineKind,
    include_zero: bool,
    flags: &EngineFlags,
) -> SearchOptions {
    SearchOptions {
        convention,
        include_zero,
        engine,
        jobs: flags.jobs,
        linear_ceiling: flags.linear_ceiling,
        allow_large_base: flags.allow_large_base,
    }
}

fn emit(text: &str, output: &OutputFlags, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let written = match &output.out {
        Some(path) => fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
    };
    match written {
        Ok(()) => EXIT_OK,
        Err(msg) => {
            let _ = writeln!(stderr, "error: cannot write output: {msg}");
            EXIT_USAGE
        }
    }
}

pub fn cmd_find(args: &FindArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let opts = options(
        args.convention,
        args.engine,
        args.include_zero,
        &args.engine_flags,
    );
    let report = match find(args.base, &opts) {
        Ok(r) => r,
        Err(e) => return fail(&e, stderr),
    };
    let text = match args.output.format {
        Format::Text => render_text(&report),
        Format::Json => render_json(&report) + "\n",
        Format::Csv => render_csv(std::slice::from_ref(&report)),
        Format::Bfile => render_bfile(&report),
    };
    emit(&text, &args.output, stdout, stderr)
}

pub fn cmd_table(args: &TableArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    if args.output.format == Format::Bfile {
        let _ = writeln!(
            stderr,
            "error: b-file output is per base; use `find --format bfile`"
        );
        return EXIT_USAGE;
    }
    let opts = options(args.convention, args.engine, false, &args.engine_flags);
    let mut reports = Vec::new();
    for base in args.bases.bases() {
        match find(base, &opts) {
            Ok(r) => reports.push(r),
            Err(e) => return fail(&e, stderr),
        }
    }
    let text = match args.output.format {
        Format::Text => render_table(&reports),
        Format::Json => render_json_many(&reports) + "\n",
        Format::Csv => render_csv(&reports),
        Format::Bfile => unreachable!(),
    };
    emit(&text, &args.output, stdout, stderr)
}

pub fn cmd_verify(args: &VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32 {
    let n = if args.radix_input {
        match DigitVec::parse_bracketed(&args.number, args.base) {
            Ok(d) => munchausen::from_digits::<Nat>(&d),
            Err(e) => return fail(&e, stderr),
        }
    } else {
        match args.number.trim().parse::<Nat>() {
            Ok(n) => n,
            Err(_) => {
                let _ = writeln!(
                    stderr,
                    "error: {:?} is not a nonnegative decimal integer",
                    args.number
                );
                return EXIT_USAGE;
            }
        }
    };
    let verdict = verify(&n, args.base, args.convention);
    let _ = writeln!(stdout, "{} = {}", verdict.value, verdict.representation);
    let _ = writeln!(stdout, "{}", verdict.render_breakdown());
    let member = verdict.is_munchausen();
    let _ = writeln!(
        stdout,
        "{} is {}a Munchausen number in base {} ({})",
        verdict.value,
        if member { "" } else { "not " },
        args.base,
        args.convention.describe()
    );
    if member {
        EXIT_OK
    } else {
        EXIT_NEGATIVE
    }
}

pub fn cmd_bound(args: &BoundArgs, stdout: &mut dyn Write) -> i32 {
    let sb = search_bound(args.base);
    let _ = writeln!(stdout, "base:            {}", sb.base);
    let _ = writeln!(stdout, "bound:           {}", sb.bound);
    let _ = writeln!(stdout, "max digit count: {}", sb.max_digit_count);
    EXIT_OK
}

/// Per-base, per-convention outcome of a crosscheck.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrosscheckRow {
    pub base: Base,
    pub convention: ZeroPowerConvention,
    pub linear_candidates: u64,
    pub multiset_candidates: u64,
    pub only_linear: Vec<Nat>,
    pub only_multiset: Vec<Nat>,
    pub hits: usize,
}

impl CrosscheckRow {
    pub fn agrees(&self) -> bool {
        self.only_linear.is_empty() && self.only_multiset.is_empty()
    }
}

/// Compares two engines over every base and convention given.
pub fn crosscheck_with<L, M>(
    bases: BaseRange,
    conventions: &[ZeroPowerConvention],
    flags: &EngineFlags,
    linear: L,
    multiset: M,
) -> Result<Vec<CrosscheckRow>, Error>
where
    L: Fn(Base, &SearchOptions) -> Result<SearchReport, Error>,
    M: Fn(Base, &SearchOptions) -> Result<SearchReport, Error>,
{
    let mut rows = Vec::new();
    for base in bases.bases() {
        for &convention in conventions {
            let opts = options(convention, EngineKind::Auto, false, flags);
            let a = linear(base, &opts)?;
            let b = multiset(base, &opts)?;
            let left: BTreeSet<Nat> = a.values().into_iter().collect();
            let right: BTreeSet<Nat> = b.values().into_iter().collect();
            rows.push(CrosscheckRow {
                base,
                convention,
                linear_candidates: a.candidates_examined,
                multiset_candidates: b.candidates_examined,
                only_linear: left.difference(&right).cloned().collect(),
                only_multiset: right.difference(&left).cloned().collect(),
                hits: left.len(),
            });
        }
    }
    Ok(rows)
}

fn list(values: &[Nat]) -> String {
    if values.is_empty() {
        "-".to_owned()
    } else {
        values
            .iter()
            .map(Nat::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    }
}

/// Prints the rows and returns the exit code.
pub fn report_crosscheck(rows: &[CrosscheckRow], stdout: &mut dyn Write) -> i32 {
    let _ = writeln!(
        stdout,
        "{:>4}  {:<10}  {:>18}  {:>20}  {:>4}  status",
        "base", "convention", "linear candidates", "multiset candidates", "hits"
    );
    for row in rows {
        let _ = writeln!(
            stdout,
            "{:>4}  {:<10}  {:>18}  {:>20}  {:>4}  {}",
            row.base,
            row.convention.as_str(),
            row.linear_candidates,
            row.multiset_candidates,
            row.hits,
            if row.agrees() { "ok" } else { "MISMATCH" }
        );
    }
    let mut code = EXIT_OK;
    for row in rows.iter().filter(|r| !r.agrees()) {
        code = EXIT_NEGATIVE;
        let _ = writeln!(
            stdout,
            "mismatch in base {} ({}): missing from multiset: {}; missing from linear: {}",
            row.base,
            row.convention.as_str(),
            list(&row.only_linear),
            list(&row.only_multiset)
        );
    }
    code
}

pub fn cmd_crosscheck(
    args: &CrosscheckArgs,
    stdout: &mut dyn Write,
    stderr: &mut dyn Write,
) -> i32 {
    let conventions = match args.convention {
        Some(c) => vec![c],
        None => ZeroPowerConvention::ALL.to_vec(),
    };
    if args.bases.last.get() > DEFAULT_MULTISET_MAX_BASE && !args.engine_flags.allow_large_base {
        // fail before spending time on the linear scans of smaller bases
        let err = Error::MultisetCap {
            base: args.bases.last.get(),
            cap: DEFAULT_MULTISET_MAX_BASE,
        };
        return fail(&err, stderr);
    }
    match crosscheck_with(
        args.bases,
        &conventions,
        &args.engine_flags,
        find_linear,
        find_multiset,
    ) {
        Ok(rows) => report_crosscheck(&rows, stdout),
        Err(e) => fail(&e, stderr),
    }
}
