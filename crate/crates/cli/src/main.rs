mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use sdcheck_core::design::{hypothesized_design, lambda_vector, CodeFamily, Family};
use sdcheck_core::enumerator::extremal_weight_enumerator;
use sdcheck_core::exact::{fmt_exact, is_integral};
use sdcheck_core::gate::integrality_gate;
use sdcheck_core::report::Report;
use sdcheck_core::store::GateStore;
use sdcheck_core::theorem::{run_theorem, scan, TheoremId};

use render::{render_report, Format, Grid};

#[derive(Parser)]
#[command(
    name = "sdcheck",
    version,
    about = "Integrality checks for support designs of extremal doubly even self-dual codes"
)]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Common {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Table, global = true)]
    format: Format,
    /// Write output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads (default: available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Leave the timestamp out of reports.
    #[arg(long, global = true)]
    no_timestamp: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Print lambda_s for s from the Assmus-Mattson strength up to t.
    Lambda {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
    },
    /// Admissible m over a range, with their gate results.
    Scan {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        m_min: Option<u32>,
        #[arg(long)]
        m_max: Option<u32>,
    },
    /// A single integrality gate.
    Gate {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: u32,
        #[arg(long)]
        t: u32,
        /// Reference weight (default: the minimum weight).
        #[arg(long)]
        u: Option<u64>,
    },
    /// Reproduce a classification result and compare with the published sets.
    Theorem {
        /// lemma1, thm1, thm2, thm3, thm4, thm5.1, or thm5.2
        id: TheoremId,
    },
    /// Extremal weight enumerator of length n.
    Wenum {
        #[arg(long)]
        n: u64,
    },
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Io(String),
    #[error("golden check failed:\n{0}")]
    Golden(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Io(_) => 3,
            CliError::Golden(_) => 4,
        }
    }
}

impl From<sdcheck_core::Error> for CliError {
    fn from(e: sdcheck_core::Error) -> Self {
        match e {
            sdcheck_core::Error::Io(_) | sdcheck_core::Error::Store(_) => {
                CliError::Io(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("sdcheck: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let common = cli.common;
    if let Some(jobs) = common.jobs {
        if jobs == 0 {
            return Err(CliError::Input("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .map_err(|e| CliError::Input(e.to_string()))?;
    }
    match cli.command {
        Command::Lambda { family, m, t } => {
            let f = CodeFamily::new(family, m)?;
            let lambdas = lambda_vector(&hypothesized_design(&f, t)?);
            let mut grid = Grid::new(vec!["s", "lambda", "flag"]);
            for (s, l) in lambdas.iter().enumerate().skip(f.am_strength() as usize) {
                let flag = if is_integral(l) {
                    "INTEGRAL"
                } else {
                    "NON-INTEGRAL"
                };
                grid.push(vec![s.to_string(), fmt_exact(l), flag.into()]);
            }
            emit(&common, &grid.render(common.format))
        }
        Command::Wenum { n } => {
            let we = extremal_weight_enumerator(n)?;
            let mut grid = Grid::new(vec!["j", "A_j"]);
            for (j, a) in we.nonzero() {
                grid.push(vec![j.to_string(), a.to_string()]);
            }
            emit(&common, &grid.render(common.format))
        }
        Command::Gate { family, m, t, u } => {
            let f = CodeFamily::new(family, m)?;
            let r = integrality_gate(&f, t, u.unwrap_or(f.k()))?;
            let mut report = Report::new("gate");
            report.input("family", family);
            report.input("m", m);
            report.input("t", t);
            report.input("u", r.u);
            report.rows.push(r);
            finish(&common, report)
        }
        Command::Scan {
            family,
            t,
            m_min,
            m_max,
        } => {
            let lo = m_min.unwrap_or(family.m_min().max(1));
            let hi = m_max.unwrap_or(family.m_max());
            let store = GateStore::from_env()?;
            let report = scan(&store, family, t, lo, hi)?;
            finish(&common, report)
        }
        Command::Theorem { id } => {
            let store = GateStore::from_env()?;
            let report = run_theorem(id, &store)?;
            let failures: Vec<String> = report.failed_checks().map(|c| c.diff()).collect();
            finish(&common, report)?;
            if failures.is_empty() {
                Ok(())
            } else {
                Err(CliError::Golden(failures.join("\n")))
            }
        }
    }
}

fn finish(common: &Common, mut report: Report) -> Result<(), CliError> {
    if !common.no_timestamp {
        report.generated_at =
            Some(chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true));
    }
    emit(common, &render_report(&report, common.format))
}

fn emit(common: &Common, text: &str) -> Result<(), CliError> {
    match &common.out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Io(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
