//! Command-line front end. Exit codes: 0 success, 1 a verification failed,
//! 2 bad input or usage.

use std::ffi::OsString;
use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::basis::{signal_from_text, walsh, walsh_expand, CoefficientTable};
use crate::cantor::{gram_exponentials, lambda_csv, lambda_set, verify_lambda_partition};
use crate::cuntz::IntervalRep2;
use crate::entropy::{best_basis, EntropyTree};
use crate::numeric::rational::{format_short, to_f64};
use crate::verify::{self, Suite};

pub const THREADS_ENV: &str = "CUNTZ_BASES_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "cuntz-bases",
    version,
    about = "Exact Walsh, sine-generator and Cantor-spectrum tools"
)]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,

    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// Output file (a directory for `walsh`); stdout when omitted.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    /// Tolerance for floating-point identities.
    #[arg(long, default_value_t = 1e-10, global = true)]
    pub tol: f64,

    /// Emit decimals instead of exact `num/den` values.
    #[arg(long, global = true)]
    pub float: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Basis {
    Walsh,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write φ_n as (x_left, value) rows, one file per n.
    Walsh {
        /// `N`, `A..B` or `A..=B`.
        range: String,
    },
    /// Expand a signal (one sample per line) in a basis.
    Expand {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = Basis::Walsh)]
        basis: Basis,
        /// Required sample count is 2^level.
        #[arg(long)]
        level: Option<u32>,
    },
    /// Projection masses, entropy numbers and the best basis of a signal.
    Entropy {
        input: PathBuf,
        #[arg(long, default_value_t = 6)]
        depth: usize,
        #[arg(long)]
        level: Option<u32>,
    },
    /// Spectrum tools for the scale-4 Cantor measure.
    Cantor {
        #[command(subcommand)]
        command: CantorCommand,
    },
    /// Run the verification suite.
    Verify {
        #[arg(value_enum, default_value_t = Suite::All)]
        suite: Suite,
        /// Resolution of the exhaustive Walsh checks.
        #[arg(long, default_value_t = 8)]
        level: u32,
    },
}

#[derive(Debug, Subcommand)]
pub enum CantorCommand {
    /// List Λ_p.
    Spectrum { p: u32 },
    /// Exact orthogonality of the exponentials indexed by Λ_p.
    Gram { p: u32 },
    /// Split Λ_p \ {0} into odd orbits m·4^j.
    Partition { p: u32 },
}

enum Outcome {
    Done,
    Failed,
}

type CmdResult = std::result::Result<Outcome, String>;

/// Parses `args` (including the program name) and runs; returns the exit
/// code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    if let Err(msg) = configure_threads() {
        eprintln!("error: {msg}");
        return 2;
    }
    match execute(&cli) {
        Ok(Outcome::Done) => 0,
        Ok(Outcome::Failed) => 1,
        Err(msg) => {
            eprintln!("error: {msg}");
            2
        }
    }
}

fn configure_threads() -> std::result::Result<(), String> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("{THREADS_ENV} must be a positive integer, got {raw:?}"))?;
    // A pool may already exist when called twice in one process; that is fine.
    let _ = rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global();
    Ok(())
}

fn execute(cli: &Cli) -> CmdResult {
    let cfg = &cli.config;
    match &cli.command {
        Command::Walsh { range } => cmd_walsh(cfg, range),
        Command::Expand {
            input,
            basis,
            level,
        } => cmd_expand(cfg, input, *basis, *level),
        Command::Entropy {
            input,
            depth,
            level,
        } => cmd_entropy(cfg, input, *depth, *level),
        Command::Cantor { command } => cmd_cantor(cfg, command),
        Command::Verify { suite, level } => cmd_verify(cfg, *suite, *level),
    }
}

/// `N`, `A..B` (exclusive) or `A..=B` (inclusive).
pub fn parse_range(text: &str) -> std::result::Result<std::ops::Range<u64>, String> {
    let num = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|_| format!("bad range {text:?}: {s:?} is not a nonnegative integer"))
    };
    let (start, end) = if let Some((a, b)) = text.split_once("..=") {
        (
            num(a)?,
            num(b)?.checked_add(1).ok_or("range end too large")?,
        )
    } else if let Some((a, b)) = text.split_once("..") {
        (num(a)?, num(b)?)
    } else {
        let n = num(text)?;
        (n, n + 1)
    };
    if start > end {
        return Err(format!("bad range {text:?}: start exceeds end"));
    }
    if end - start > 1 << 16 {
        return Err(format!("bad range {text:?}: more than 65536 functions"));
    }
    if end > 1 << 24 {
        return Err(format!("bad range {text:?}: index too large"));
    }
    Ok(start..end)
}

fn read_input(path: &Path) -> std::result::Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| format!("reading stdin: {e}"))?;
        Ok(s)
    } else {
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))
    }
}

fn emit(cfg: &RunConfig, text: &str) -> std::result::Result<(), String> {
    match &cfg.output {
        Some(path) => fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display())),
        None => io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| format!("writing stdout: {e}")),
    }
}

fn json_text(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json value serializes");
    s.push('\n');
    s
}

/// Rows `(x_left, value)` of `φ_n` at its minimal level.
pub fn walsh_table(n: u64, format: Format, float: bool) -> String {
    let phi = walsh(n);
    let rows: Vec<(String, String)> = phi
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let x = phi.cell_left(i);
            if float {
                (to_f64(&x).to_string(), to_f64(v).to_string())
            } else {
                (format_short(&x), format_short(v))
            }
        })
        .collect();
    match format {
        Format::Csv => {
            let mut out = String::from("x_left,value\n");
            for (x, v) in rows {
                out.push_str(&format!("{x},{v}\n"));
            }
            out
        }
        Format::Json => {
            let rows: Vec<serde_json::Value> = rows
                .into_iter()
                .map(|(x, v)| {
                    if float {
                        serde_json::json!({"x_left": x.parse::<f64>().unwrap_or(f64::NAN), "value": v.parse::<f64>().unwrap_or(f64::NAN)})
                    } else {
                        serde_json::json!({"x_left": x, "value": v})
                    }
                })
                .collect();
            json_text(&serde_json::json!({"n": n, "level": phi.level(), "rows": rows}))
        }
    }
}

fn cmd_walsh(cfg: &RunConfig, range: &str) -> CmdResult {
    let range = parse_range(range)?;
    let dir = cfg.output.clone().unwrap_or_else(|| PathBuf::from("."));
    if !range.is_empty() {
        fs::create_dir_all(&dir).map_err(|e| format!("creating {}: {e}", dir.display()))?;
    }
    let ext = match cfg.format {
        Format::Csv => "csv",
        Format::Json => "json",
    };
    for n in range {
        let path = dir.join(format!("phi_{n:04}.{ext}"));
        fs::write(&path, walsh_table(n, cfg.format, cfg.float))
            .map_err(|e| format!("writing {}: {e}", path.display()))?;
    }
    Ok(Outcome::Done)
}

fn cmd_expand(cfg: &RunConfig, input: &Path, basis: Basis, level: Option<u32>) -> CmdResult {
    let f = signal_from_text(&read_input(input)?, level).map_err(|e| e.to_string())?;
    let table = match basis {
        Basis::Walsh => CoefficientTable::new(walsh_expand(&f)),
    };
    let text = match cfg.format {
        Format::Csv => table.to_csv(cfg.float),
        Format::Json => table.to_json(cfg.float),
    };
    emit(cfg, &text)?;
    Ok(Outcome::Done)
}

fn cmd_entropy(cfg: &RunConfig, input: &Path, depth: usize, level: Option<u32>) -> CmdResult {
    if depth > 16 {
        return Err(format!("depth {depth} exceeds 16"));
    }
    let f = signal_from_text(&read_input(input)?, level).map_err(|e| e.to_string())?;
    let tree = EntropyTree::build(&f, depth, &IntervalRep2).map_err(|e| e.to_string())?;
    let best = best_basis(&f, depth, &IntervalRep2).map_err(|e| e.to_string())?;
    let leaves: std::collections::BTreeSet<_> =
        best.leaves.iter().map(|w| w.to_compact()).collect();
    let text = match cfg.format {
        Format::Csv => {
            let mut out = String::from("word,mass,entropy,best_leaf\n");
            for r in tree.rows() {
                let leaf = u8::from(leaves.contains(&r.word));
                out.push_str(&format!("{},{},{},{leaf}\n", r.word, r.mass, r.entropy));
            }
            out
        }
        Format::Json => json_text(&serde_json::json!({
            "depth": depth,
            "entropies": tree.entropies,
            "nodes": tree.rows(),
            "best_basis": {"leaves": leaves, "cost": best.cost},
        })),
    };
    emit(cfg, &text)?;
    for (k, e) in tree.entropies.iter().enumerate() {
        eprintln!("ε{} = {e:.12}", k + 1);
    }
    eprintln!(
        "best basis: {} leaves, cost {:.12}",
        best.leaves.len(),
        best.cost
    );
    Ok(Outcome::Done)
}

fn cmd_cantor(cfg: &RunConfig, command: &CantorCommand) -> CmdResult {
    const MAX_P: u32 = 12;
    let p = match command {
        CantorCommand::Spectrum { p }
        | CantorCommand::Gram { p }
        | CantorCommand::Partition { p } => *p,
    };
    if p > MAX_P {
        return Err(format!("p = {p} exceeds {MAX_P}"));
    }
    let (text, passed) = match command {
        CantorCommand::Spectrum { .. } => {
            let pts = lambda_set(p);
            let text = match cfg.format {
                Format::Csv => lambda_csv(&pts),
                Format::Json => json_text(&serde_json::json!(pts
                    .iter()
                    .map(
                        |l| serde_json::json!({"lambda": l.value, "digits": l.digits.to_compact()})
                    )
                    .collect::<Vec<_>>())),
            };
            (text, true)
        }
        CantorCommand::Gram { .. } => {
            let r = gram_exponentials(p);
            let text = match cfg.format {
                Format::Csv => {
                    let offending = r
                        .offending
                        .map(|(a, b)| format!("{a} {b}"))
                        .unwrap_or_default();
                    format!(
                        "p,points,pairs,passed,offending\n{},{},{},{},{offending}\n",
                        r.p, r.points, r.pairs_checked, r.passed
                    )
                }
                Format::Json => json_text(&serde_json::to_value(&r).expect("report serializes")),
            };
            (text, r.passed)
        }
        CantorCommand::Partition { .. } => {
            let r = verify_lambda_partition(p);
            let text = match cfg.format {
                Format::Csv => {
                    let mut out = String::from("m,orbit\n");
                    for (m, orbit) in &r.orbits {
                        let orbit: Vec<String> = orbit.iter().map(u64::to_string).collect();
                        out.push_str(&format!("{m},{}\n", orbit.join(" ")));
                    }
                    out
                }
                Format::Json => json_text(&serde_json::to_value(&r).expect("report serializes")),
            };
            if !r.passed {
                eprintln!(
                    "partition fails: duplicated {:?}, missed {:?}, stray {:?}",
                    r.duplicated, r.missed, r.stray
                );
            }
            (text, r.passed)
        }
    };
    emit(cfg, &text)?;
    Ok(if passed {
        Outcome::Done
    } else {
        Outcome::Failed
    })
}

fn cmd_verify(cfg: &RunConfig, suite: Suite, level: u32) -> CmdResult {
    if cfg.tol.is_nan() || cfg.tol <= 0.0 {
        return Err("--tol must be positive".into());
    }
    if level > 12 {
        return Err(format!("--level {level} exceeds 12"));
    }
    let checks = verify::run(
        suite,
        &verify::Options {
            tol: cfg.tol,
            level,
        },
    );
    let text = match cfg.format {
        Format::Csv => checks.iter().map(|c| format!("{c}\n")).collect::<String>(),
        Format::Json => json_text(&serde_json::to_value(&checks).expect("checks serialize")),
    };
    emit(cfg, &text)?;
    let failed = checks.iter().filter(|c| !c.passed).count();
    eprintln!("{} checks, {failed} failed", checks.len());
    Ok(if failed == 0 {
        Outcome::Done
    } else {
        Outcome::Failed
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("0..32"), Ok(0..32));
        assert_eq!(parse_range("3..=5"), Ok(3..6));
        assert_eq!(parse_range("7"), Ok(7..8));
        assert_eq!(parse_range("4..4"), Ok(4..4));
        assert!(parse_range("5..2").is_err());
        assert!(parse_range("a..b").is_err());
    }

    #[test]
    fn walsh_three_rows() {
        assert_eq!(
            walsh_table(3, Format::Csv, false),
            "x_left,value\n0,1\n1/4,-1\n1/2,-1\n3/4,1\n"
        );
        assert_eq!(
            walsh_table(3, Format::Csv, true),
            "x_left,value\n0,1\n0.25,-1\n0.5,-1\n0.75,1\n"
        );
    }
}
