use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotpoly::{
    all_passed, conway_kn, conway_torus2, parse_pd, run_all, Diagram, IntPoly, KnotTable,
    SkeinContext, SkeinError, VerificationReport, VerifyConfig, DEFAULT_NODE_BUDGET,
};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(
    name = "knotpoly",
    version,
    about = "Conway polynomials of links from PD codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Print skein recursion statistics to stderr.
    #[arg(long, short, global = true)]
    verbose: bool,

    /// Maximum number of skein recursion nodes.
    #[arg(long, global = true, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Conway polynomial of a link.
    Conway(Input),
    /// z^2 coefficient of a knot's Conway polynomial.
    A2(Input),
    /// Pairwise linking numbers of the components.
    Lk(Input),
    /// Conway polynomial of the (2,m) torus link.
    Torus {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        m: u64,
    },
    /// Conway polynomial of T(2,2n+3) # T(-2,2n+1).
    Kn {
        #[arg(long)]
        n: u64,
    },
    /// Run the verification suite.
    Verify {
        /// Bound on n for the recurrences and the theorem sum
        /// (defaults 50 and 1000).
        #[arg(long, value_parser = clap::value_parser!(u64).range(2..))]
        max_n: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_l: Option<u64>,
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max_r: Option<u64>,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct Input {
    /// PD code, e.g. "X(1,5,2,4);X(3,1,4,6);X(5,3,6,2)".
    #[arg(long)]
    pd: Option<String>,
    /// File containing a PD code.
    #[arg(long)]
    file: Option<PathBuf>,
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<SkeinError> for Failure {
    fn from(e: SkeinError) -> Self {
        match e {
            SkeinError::BudgetExceeded(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl Input {
    fn read(&self) -> Result<(String, Diagram), Failure> {
        let text = match (&self.pd, &self.file) {
            (Some(pd), _) => pd.clone(),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?,
            (None, None) => unreachable!("clap requires one input"),
        };
        let text = text.trim().to_string();
        let d = parse_pd(&text).map_err(|e| Failure::Usage(format!("invalid PD code: {e}")))?;
        Ok((text, d))
    }
}

fn emit(format: Format, command: &str, input: &str, text: &str, result: Value) {
    match format {
        Format::Text => println!("{text}"),
        Format::Json => println!(
            "{}",
            json!({ "command": command, "input": input, "result": result })
        ),
    }
}

fn report_stats(verbose: bool, ctx: &SkeinContext) {
    if verbose {
        let s = ctx.stats();
        eprintln!(
            "nodes expanded: {}, cache hits: {}, memo entries: {}",
            s.nodes_expanded,
            s.cache_hits,
            ctx.cached().count()
        );
    }
}

fn print_reports(format: Format, reports: &[VerificationReport]) {
    match format {
        Format::Json => {
            for r in reports {
                println!("{}", serde_json::to_string(r).expect("report serializes"));
            }
        }
        Format::Text => {
            let width = reports
                .iter()
                .map(|r| r.check_name.len())
                .max()
                .unwrap_or(0);
            for r in reports {
                let mark = if r.passed { "ok  " } else { "FAIL" };
                println!("{mark} {:width$}  {}", r.check_name, r.computed);
                if !r.passed {
                    println!("     expected: {}", r.expected);
                    println!("     inputs:   {}", r.inputs);
                }
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            if failed == 0 {
                println!("ALL CHECKS PASSED");
            } else {
                println!("{failed} OF {} CHECKS FAILED", reports.len());
            }
        }
    }
}

fn load_table() -> Result<KnotTable, Failure> {
    match std::env::var_os("KNOT_TABLE") {
        Some(path) => KnotTable::load(&path).map_err(|e| Failure::Usage(e.to_string())),
        None => Ok(KnotTable::default()),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut ctx = SkeinContext::with_budget(cli.budget);
    let f = cli.format;
    match &cli.command {
        Command::Conway(input) => {
            let (text, d) = input.read()?;
            let p: IntPoly = ctx.conway(&d)?;
            report_stats(cli.verbose, &ctx);
            emit(f, "conway", &text, &p.to_string(), json!(p.to_string()));
        }
        Command::A2(input) => {
            let (text, d) = input.read()?;
            let a2 = ctx.a2(&d)?;
            report_stats(cli.verbose, &ctx);
            emit(f, "a2", &text, &a2.to_string(), json!(a2.to_string()));
        }
        Command::Lk(input) => {
            let (text, d) = input.read()?;
            let lks = d.linking_numbers();
            let lines: Vec<String> = lks
                .iter()
                .map(|((i, j), lk)| format!("lk({i},{j}) = {lk}"))
                .collect();
            let result: Vec<Value> = lks
                .iter()
                .map(|((i, j), lk)| json!({ "components": [i, j], "lk": lk }))
                .collect();
            emit(f, "lk", &text, &lines.join("\n"), json!(result));
        }
        Command::Torus { m } => {
            let p: IntPoly = conway_torus2(*m as usize);
            emit(
                f,
                "torus",
                &format!("m={m}"),
                &p.to_string(),
                json!(p.to_string()),
            );
        }
        Command::Kn { n } => {
            let p: IntPoly = conway_kn(*n as usize);
            emit(
                f,
                "kn",
                &format!("n={n}"),
                &p.to_string(),
                json!(p.to_string()),
            );
        }
        Command::Verify {
            max_n,
            max_l,
            max_r,
        } => {
            let defaults = VerifyConfig::default();
            let config = VerifyConfig {
                max_n: max_n.unwrap_or(defaults.max_n),
                theorem_max_n: max_n.unwrap_or(defaults.theorem_max_n),
                max_l: max_l.unwrap_or(defaults.max_l),
                max_r: max_r.unwrap_or(defaults.max_r),
                table: load_table()?,
                ..defaults
            };
            let start = std::time::Instant::now();
            let reports = run_all(&config);
            if cli.verbose {
                eprintln!("{} reports in {:.2?}", reports.len(), start.elapsed());
            }
            print_reports(f, &reports);
            return Ok(all_passed(&reports));
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
