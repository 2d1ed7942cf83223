//! `psi-forge` commands.
//!
//! Exit codes: 0 success, 1 a verification or table check failed, 2 parse
//! or argument error, 3 budget or closure cap exceeded, 4 two methods
//! disagreed.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use super::cache::Cache;
use super::record::VerdictRecord;
use super::spec::{parse_spec, SpecError};
use super::suites;
use super::table::{self, Tier};
use crate::classify::{bpsi_auto, bpsi_bruteforce, bpsi_theorem, TheoremOutcome};
use crate::families::Recipe;
use crate::lattice::{enumerate_subgroups, maximal_subgroups};
use crate::psi::{psi_direct, psi_of_mask, psi_via_classes, psi_via_cyclic_subgroups};
use crate::{Error, FiniteGroup, Psi, SubgroupMask, DEFAULT_BUDGET};

pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_USAGE: u8 = 2;
pub const EXIT_LIMIT: u8 = 3;
pub const EXIT_DISAGREEMENT: u8 = 4;

#[derive(Parser, Debug)]
#[command(name = "psi-forge", version, about = "Sum of element orders and the B-psi property for finite groups")]
pub struct Cli {
    /// Subgroup budget for lattice enumeration [env: PSI_FORGE_BUDGET]
    #[arg(long, global = true)]
    budget: Option<usize>,
    /// Emit JSON
    #[arg(long, global = true, conflicts_with = "csv")]
    json: bool,
    /// Emit CSV (table only)
    #[arg(long, global = true)]
    csv: bool,
    /// JSON-lines verdict cache
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// ψ by all three methods
    Psi { spec: String },
    /// Decide whether ψ(H) < |G| for every proper subgroup H
    Bpsi {
        spec: String,
        #[arg(long, value_enum, default_value_t = Mode::Auto)]
        method: Mode,
    },
    /// Maximal subgroups with their orders and ψ
    Maximals { spec: String },
    /// Brute-force the table of non-nilpotent B_ψ-groups
    Table {
        #[arg(long, default_value = "core")]
        tier: Tier,
        /// Extra generator files (extended tier)
        #[arg(long = "file")]
        files: Vec<PathBuf>,
    },
    /// Run a verification suite
    Verify {
        #[arg(value_parser = ["formulas", "theorems", "table-core", "table-extended"])]
        suite: String,
        /// Extra generator files (table-extended)
        #[arg(long = "file")]
        files: Vec<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Eq)]
enum Mode {
    Auto,
    Brute,
    Theorem,
}

impl Mode {
    fn tag(self) -> &'static str {
        match self {
            Mode::Auto => "auto",
            Mode::Brute => "brute",
            Mode::Theorem => "theorem",
        }
    }
}

/// A command failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::ClosureCapExceeded { .. } => EXIT_LIMIT,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<SpecError> for Failure {
    fn from(e: SpecError) -> Self {
        match e {
            SpecError::Argument(inner) => Failure {
                code: EXIT_USAGE,
                message: format!("invalid arguments: {inner}"),
            },
            parse => Failure {
                code: EXIT_USAGE,
                message: parse.to_string(),
            },
        }
    }
}

fn failure(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

struct Ctx {
    budget: usize,
    json: bool,
    csv: bool,
    cache: Option<Cache>,
}

fn budget_from_env() -> Result<Option<usize>, Failure> {
    match std::env::var("PSI_FORGE_BUDGET") {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .map_err(|_| failure(EXIT_USAGE, format!("PSI_FORGE_BUDGET={v:?} is not a number"))),
        Err(_) => Ok(None),
    }
}

fn load(spec: &str) -> Result<(Recipe, FiniteGroup), Failure> {
    let recipe = parse_spec(spec)?;
    let g = recipe.build()?;
    Ok((recipe, g))
}

/// Runs a parsed command line, writing to `out` (stdout) and `err`
/// (stderr).
pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<(), Failure> {
    let budget = match cli.budget {
        Some(b) => b,
        None => budget_from_env()?.unwrap_or(DEFAULT_BUDGET),
    };
    if budget < 2 {
        return Err(failure(EXIT_USAGE, "budget must be at least 2"));
    }
    let cache = match &cli.cache {
        Some(path) => {
            let c = Cache::open(path).map_err(|e| failure(EXIT_USAGE, format!("cache: {e}")))?;
            if let Some(w) = &c.warning {
                let _ = writeln!(err, "warning: {w}");
            }
            Some(c)
        }
        None => None,
    };
    let mut ctx = Ctx {
        budget,
        json: cli.json,
        csv: cli.csv,
        cache,
    };
    // A closed pipe (e.g. `| head`) ends output quietly.
    let io = |e: std::io::Error| match e.kind() {
        std::io::ErrorKind::BrokenPipe => failure(0, ""),
        _ => failure(EXIT_CHECK_FAILED, format!("write failed: {e}")),
    };
    match cli.command {
        Command::Psi { spec } => cmd_psi(&spec, &ctx, out).map_err(|e| e.or_io(io)),
        Command::Bpsi { spec, method } => cmd_bpsi(&spec, method, &mut ctx, out).map_err(|e| e.or_io(io)),
        Command::Maximals { spec } => cmd_maximals(&spec, &ctx, out).map_err(|e| e.or_io(io)),
        Command::Table { tier, files } => cmd_table(tier, &files, &mut ctx, out).map_err(|e| e.or_io(io)),
        Command::Verify { suite, files } => cmd_verify(&suite, &files, &ctx, out).map_err(|e| e.or_io(io)),
    }
}

enum CmdError {
    Fail(Failure),
    Io(std::io::Error),
}

impl CmdError {
    fn or_io(self, f: impl Fn(std::io::Error) -> Failure) -> Failure {
        match self {
            CmdError::Fail(x) => x,
            CmdError::Io(e) => f(e),
        }
    }
}

impl<T: Into<Failure>> From<T> for CmdError {
    fn from(e: T) -> Self {
        CmdError::Fail(e.into())
    }
}

trait IoExt<T> {
    fn w(self) -> Result<T, CmdError>;
}

impl<T> IoExt<T> for std::io::Result<T> {
    fn w(self) -> Result<T, CmdError> {
        self.map_err(CmdError::Io)
    }
}

type CmdResult = Result<(), CmdError>;

fn cmd_psi(spec: &str, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let (recipe, g) = load(spec)?;
    let d = psi_direct::<Psi>(&g).value;
    let c = psi_via_classes::<Psi>(&g).value;
    let z = psi_via_cyclic_subgroups::<Psi>(&g).value;
    if ctx.json {
        let v = json!({
            "spec": recipe.to_string(),
            "order": g.order(),
            "psi": {"direct": d.to_string(), "classes": c.to_string(), "cyclic_subgroups": z.to_string()},
        });
        writeln!(out, "{v}").w()?;
    } else {
        writeln!(out, "{recipe}: order {}", g.order()).w()?;
        writeln!(out, "  psi (direct)           {d}").w()?;
        writeln!(out, "  psi (classes)          {c}").w()?;
        writeln!(out, "  psi (cyclic subgroups) {z}").w()?;
    }
    if d != c || d != z {
        return Err(failure(EXIT_DISAGREEMENT, format!("psi methods disagree: {d} / {c} / {z}")).into());
    }
    Ok(())
}

fn cmd_bpsi(spec: &str, mode: Mode, ctx: &mut Ctx, out: &mut dyn Write) -> CmdResult {
    let recipe = parse_spec(spec)?;
    let canonical = recipe.to_string();
    let key = Cache::key(&canonical, mode.tag());
    let cached = ctx.cache.as_ref().and_then(|c| c.lookup(&key, ctx.budget)).cloned();
    let record = match cached {
        Some(r) => r,
        None => {
            let g = recipe.build()?;
            let start = Instant::now();
            let psi = psi_of_mask(&g, &SubgroupMask::full(g.order()));
            let record = match mode {
                Mode::Auto => {
                    let v = bpsi_auto(&g, ctx.budget)?;
                    VerdictRecord::from_verdict(&canonical, Some(psi), &v, 0)
                }
                Mode::Brute => {
                    let v = bpsi_bruteforce(&g, ctx.budget)?;
                    VerdictRecord::from_verdict(&canonical, Some(psi), &v, 0)
                }
                Mode::Theorem => match bpsi_theorem(&g, ctx.budget)? {
                    TheoremOutcome::Decided(v) => VerdictRecord::from_verdict(&canonical, Some(psi), &v, 0),
                    TheoremOutcome::Unknown => VerdictRecord::unknown(&canonical, g.order() as u64, Some(psi), 0),
                },
            };
            let record = VerdictRecord {
                elapsed_ms: start.elapsed().as_millis() as u64,
                ..record
            };
            if let Some(c) = ctx.cache.as_mut() {
                c.store(&key, ctx.budget, record.clone())
                    .map_err(|e| failure(EXIT_CHECK_FAILED, format!("cache: {e}")))?;
            }
            record
        }
    };
    if ctx.json {
        writeln!(out, "{}", record.to_json()).w()?;
    } else {
        writeln!(out, "{}: order {}, psi {}", record.spec, record.order, record.psi.map_or("-".into(), |p| p.to_string())).w()?;
        writeln!(out, "  B_psi: {} (method {})", record.verdict, record.method).w()?;
        if let Some(w) = &record.witness {
            let role = if record.verdict == "true" {
                "largest psi among maximal subgroups"
            } else {
                "proper subgroup with psi >= |G|"
            };
            writeln!(out, "  witness: order {}, psi {} ({role})", w.order, w.psi).w()?;
        }
    }
    Ok(())
}

fn cmd_maximals(spec: &str, ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let (recipe, g) = load(spec)?;
    let lattice = enumerate_subgroups(&g, ctx.budget)?;
    let maximals = maximal_subgroups(&g, &lattice);
    let n = g.order() as u64;
    if ctx.json {
        let list: Vec<_> = maximals
            .iter()
            .map(|m| {
                json!({
                    "order": m.order(),
                    "psi": psi_of_mask(&g, m),
                    "normal": g.is_normal(m),
                    "generators": g.mask_generators(m),
                })
            })
            .collect();
        let v = json!({"spec": recipe.to_string(), "order": n, "subgroups": lattice.len(), "maximals": list});
        writeln!(out, "{v}").w()?;
    } else {
        writeln!(out, "{recipe}: order {n}, {} subgroups, {} maximal", lattice.len(), maximals.len()).w()?;
        writeln!(out, "  order      psi  normal  psi<|G|").w()?;
        for m in &maximals {
            let psi = psi_of_mask(&g, m);
            writeln!(out, "  {:>5} {:>8}  {:<6}  {}", m.order(), psi, g.is_normal(m), psi < n).w()?;
        }
    }
    Ok(())
}

fn cmd_table(tier: Tier, files: &[PathBuf], ctx: &mut Ctx, out: &mut dyn Write) -> CmdResult {
    if ctx.csv {
        writeln!(out, "{}", table::CSV_HEADER).w()?;
    }
    let mut mismatches = 0;
    for recipe in table::rows(tier, files) {
        let spec = recipe.to_string();
        let key = Cache::key(&spec, "table");
        let cached = ctx.cache.as_ref().and_then(|c| c.lookup(&key, ctx.budget)).cloned();
        let record = match cached {
            Some(r) => r,
            None => {
                let r = table::run_row(&recipe, tier, ctx.budget)?;
                if let Some(c) = ctx.cache.as_mut() {
                    c.store(&key, ctx.budget, r.clone())
                        .map_err(|e| failure(EXIT_CHECK_FAILED, format!("cache: {e}")))?;
                }
                r
            }
        };
        if record.verdict != "true" {
            mismatches += 1;
        }
        if ctx.csv {
            writeln!(out, "{}", table::csv_line(&record)).w()?;
        } else if ctx.json {
            writeln!(out, "{}", record.to_json()).w()?;
        } else {
            let mark = if record.verdict == "true" { "ok" } else { "MISMATCH" };
            writeln!(
                out,
                "{:<20} {:>5}  expected true  got {:<5}  {:>8} ms  {mark}",
                record.spec, record.order, record.verdict, record.elapsed_ms
            )
            .w()?;
        }
    }
    if mismatches > 0 {
        return Err(failure(EXIT_CHECK_FAILED, format!("{mismatches} table rows are not B_psi")).into());
    }
    Ok(())
}

fn cmd_verify(suite: &str, files: &[PathBuf], ctx: &Ctx, out: &mut dyn Write) -> CmdResult {
    let mut failed = false;
    let mut disagreement = false;
    if suite == "table-extended" {
        for (spec, outcome) in suites::table_extended(files, ctx.budget) {
            match outcome {
                Ok(d) => writeln!(out, "PASS {spec}: {d}").w()?,
                Err(f) => {
                    failed = true;
                    disagreement |= f.disagreement;
                    writeln!(out, "FAIL {spec}: {}", f.message).w()?;
                }
            }
        }
    } else {
        let ids = suites::suite(suite).expect("clap restricts suite names");
        for c in suites::criteria().iter().filter(|c| ids.contains(&c.id)) {
            let r = suites::run(c);
            writeln!(out, "{}", r.line()).w()?;
            if !r.passed() {
                failed = true;
                disagreement |= r.outcome.as_ref().err().is_some_and(|f| f.disagreement);
            }
        }
        if suite == "formulas" {
            writeln!(out, "{}", suites::frattini_note()).w()?;
        }
    }
    if disagreement {
        return Err(failure(EXIT_DISAGREEMENT, "methods disagree").into());
    }
    if failed {
        return Err(failure(EXIT_CHECK_FAILED, format!("suite {suite} failed")).into());
    }
    Ok(())
}

/// Entry point for the binary.
pub fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    match run(cli, &mut stdout.lock(), &mut stderr.lock()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) if f.code == 0 => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
