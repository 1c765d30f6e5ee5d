use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use osdrazin::io::Instance;
use osdrazin::spectra::JordanSpec;
use osdrazin::ScalarKind;
use osdrazin_cli::campaign::aggregate_records;
use osdrazin_cli::{gen_instance, run_campaign, verify_instance, CampaignConfig, CliError, CliResult, ExitStatus, GenParams, REGISTRY};

#[derive(Parser)]
#[command(name = "osdrazin", version, about = "Exact verification campaigns for one-sided Drazin inverse constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded campaign for one theorem id.
    Run {
        #[arg(long)]
        theorem: String,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value = "rational")]
        scalar: ScalarKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        family: Option<String>,
        #[arg(long)]
        budget_seconds: Option<u64>,
        /// Write the aggregate here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write per-trial records, one JSON object per line.
        #[arg(long)]
        records: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate an instance file.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, default_value_t = 3)]
        dim: usize,
        #[arg(long, default_value = "rational")]
        scalar: ScalarKind,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Pair exponent.
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long)]
        index: Option<usize>,
        /// Jordan blocks such as `2:2,0:1,1+i:1`.
        #[arg(long)]
        spec: Option<JordanSpec>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Re-verify the invariants of an instance file.
    Check { path: PathBuf },
    /// Aggregate record files written by `run --records`.
    Aggregate {
        paths: Vec<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// List registered theorem ids.
    List,
}

fn write_or_print(out: Option<&Path>, text: &str) -> CliResult<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| CliError::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn configure_threads() -> CliResult<()> {
    if let Ok(v) = std::env::var("OSDRAZIN_THREADS") {
        let n: usize = v.parse().map_err(|_| CliError::Usage(format!("OSDRAZIN_THREADS must be a number, got `{v}`")))?;
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot configure {n} threads: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<ExitStatus> {
    match cli.command {
        Command::Run { theorem, trials, dim, scalar, seed, family, budget_seconds, out, records, format } => {
            let cfg = CampaignConfig { theorem, trials, dim, scalar, seed, family, budget_seconds };
            let outcome = run_campaign(&cfg)?;
            if let Some(p) = records {
                let text: String = outcome.records.iter().map(|r| r.to_json_line() + "\n").collect();
                write_or_print(Some(&p), &text)?;
            }
            let text = match format {
                Format::Text => outcome.aggregate.to_text(),
                Format::Structured => outcome.aggregate.to_structured(),
            };
            write_or_print(out.as_deref(), &text)?;
            eprintln!("{} trials in {:.2}s", outcome.records.len(), outcome.elapsed.as_secs_f64());
            Ok(outcome.status())
        }
        Command::Gen { family, dim, scalar, seed, n, rank, index, spec, out } => {
            let params = GenParams { dim, scalar, n, rank, index, spec };
            let inst = gen_instance(&family, &params, seed)?;
            inst.write(&out)?;
            eprintln!("wrote {}: {}", out.display(), verify_instance(&inst)?);
            Ok(ExitStatus::Pass)
        }
        Command::Check { path } => {
            let inst = Instance::read(&path)?;
            println!("{}: {}", path.display(), verify_instance(&inst)?);
            Ok(ExitStatus::Pass)
        }
        Command::Aggregate { paths, format, out } => {
            if paths.is_empty() {
                return Err(CliError::Usage("aggregate needs at least one record file".into()));
            }
            let mut text = String::new();
            for p in &paths {
                text += &std::fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
            }
            let aggs = aggregate_records(&text)?;
            let rendered = match format {
                Format::Text => aggs.iter().map(|a| a.to_text()).collect::<String>(),
                Format::Structured => serde_json::to_string_pretty(&aggs).expect("aggregates always serialize") + "\n",
            };
            write_or_print(out.as_deref(), &rendered)?;
            Ok(aggs.iter().map(|a| a.status()).max_by_key(|s| *s as i32).unwrap_or(ExitStatus::Pass))
        }
        Command::List => {
            for e in REGISTRY {
                println!("{:<24} {:<8} {} => {}", e.id, e.generator.name(), e.construction, e.predicate);
            }
            Ok(ExitStatus::Pass)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let status = configure_threads().and_then(|_| run(cli));
    match status {
        Ok(s) => ExitCode::from(s as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
