use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use idmatch::bench::{self, BenchConfig};
use idmatch::io::{self, Mode, Params};
use idmatch::{verify, TextIndex};

/// Count distinct dictionary patterns inside fragments of a text.
#[derive(Parser)]
#[command(version, about)]
struct Cli {
    /// Seed for the randomized subcommands.
    #[arg(long, global = true, default_value_t = 1)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer one query per line of QUERIES.
    Query {
        text: PathBuf,
        /// Ignored in squares mode.
        dict: PathBuf,
        queries: PathBuf,
        #[arg(long, value_enum)]
        mode: Mode,
        /// Grid step or path-set budget for the exact modes.
        #[arg(long)]
        m: Option<usize>,
        /// Occurrence limit for approx2 and count.
        #[arg(long)]
        max_occ: Option<usize>,
        /// Worker threads; 0 picks the number of cores.
        #[arg(long, default_value_t = 0)]
        threads: usize,
    },
    /// Run a script of insertions, deletions and queries.
    Dynamic {
        text: PathBuf,
        dict: PathBuf,
        ops: PathBuf,
        /// Pending updates that trigger a rebuild.
        #[arg(long, default_value_t = 32)]
        k: usize,
    },
    /// Cross-check every structure against brute force.
    Verify {
        #[arg(long, value_delimiter = ',', default_values_t = [4, 16, 48])]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 20)]
        trials: usize,
    },
    /// Print build time, space and query latency as CSV.
    Bench {
        #[arg(long, value_delimiter = ',', default_values_t = [10_000])]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [1_000])]
        d: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_values_t = [16, 64, 256])]
        m: Vec<usize>,
        #[arg(long, value_enum, value_delimiter = ',')]
        modes: Vec<Mode>,
        #[arg(long, default_value_t = 1_000)]
        queries: usize,
    },
}

fn read_text(path: &Path) -> Result<Arc<TextIndex>> {
    let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
    let text = io::parse_text(&bytes).with_context(|| path.display().to_string())?;
    Ok(Arc::new(TextIndex::from_bytes(text)?))
}

fn read_lines(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn emit(s: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(s.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Query { text, dict, queries, mode, m, max_occ, threads } => {
            let params = Params { m, max_occ };
            params.validate(mode)?;
            let t = read_text(&text)?;
            let n = t.len();
            let d = if mode == Mode::Squares {
                Vec::new()
            } else {
                io::parse_dictionary(&read_lines(&dict)?, n).with_context(|| dict.display().to_string())?
            };
            let q = io::parse_queries(&read_lines(&queries)?, n)
                .with_context(|| queries.display().to_string())?;
            let answers = io::answer_queries(t, &d, &q, mode, params, threads)?;
            emit(&io::format_answers(&answers))?;
        }
        Command::Dynamic { text, dict, ops, k } => {
            let t = read_text(&text)?;
            let n = t.len();
            let d = io::parse_dictionary(&read_lines(&dict)?, n).with_context(|| dict.display().to_string())?;
            let o = io::parse_ops(&read_lines(&ops)?, n).with_context(|| ops.display().to_string())?;
            emit(&io::format_answers(&io::run_dynamic(t, &d, &o, k)?))?;
        }
        Command::Verify { sizes, trials } => {
            let report = verify::run(cli.seed, &sizes, trials)?;
            emit(&report.to_string())?;
            if !report.passed() {
                return Ok(ExitCode::FAILURE);
            }
        }
        Command::Bench { n, d, m, modes, queries } => {
            let defaults = BenchConfig::default();
            let cfg = BenchConfig {
                modes: if modes.is_empty() { defaults.modes } else { modes },
                ns: n,
                ds: d,
                ms: m,
                queries,
                seed: cli.seed,
                ..defaults
            };
            emit(&bench::to_csv(&bench::run(&cfg)?))?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
