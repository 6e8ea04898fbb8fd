use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qmesh::gf::Engine;
use qmesh::{Class, QuadrantSpec};
use qmesh_cli::{
    cmd_bijection, cmd_conjecture, cmd_paper_tables, cmd_series, cmd_verify, BijectionMap, CliError, Outcome,
    OutputFormat, SeriesRequest, Show,
};

/// Quadrant marked mesh pattern statistics over 123- and 132-avoiding permutations.
#[derive(Parser)]
#[command(name = "qmesh", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print Q^(a,b,c,d)(t,x) up to t^N
    Series {
        /// 123 or 132
        #[arg(long)]
        avoid: Class,
        /// "a,b,c,d" with e for an empty quadrant
        #[arg(long)]
        spec: QuadrantSpec,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        /// auto, brute, recurrence or closed
        #[arg(long, default_value = "auto")]
        engine: Engine,
        #[arg(long, value_enum, default_value = "table")]
        format: OutputFormat,
    },
    /// Check a theorem against enumeration
    Verify {
        /// Subject id, or "all"
        #[arg(long, default_value = "all")]
        subject: String,
        #[arg(long, default_value_t = 9)]
        max_n: usize,
    },
    /// Compare Q^(0,k,e,0) with Q^(1,k-1,e,0) for k <= K
    Conjecture {
        #[arg(long, default_value_t = 4)]
        k_max: u32,
        #[arg(long, default_value_t = 11)]
        max_n: usize,
    },
    /// Map a permutation or Dyck path through phi or psi
    Bijection {
        #[arg(long, value_enum)]
        map: BijectionMap,
        /// Permutation word (867943251 or 8,6,10,...) or a D/R path
        #[arg(long)]
        input: String,
        #[arg(long, value_enum, default_value = "path")]
        show: Show,
    },
    /// Regenerate the series listings and the errata file
    PaperTables {
        #[arg(long, default_value = "paper_tables")]
        out_dir: PathBuf,
        #[arg(long, default_value_t = 13)]
        max_n: usize,
    },
}

fn run(command: Command) -> Result<Outcome, CliError> {
    let printed = |text: String| Outcome { text, ok: true };
    match command {
        Command::Series { avoid, spec, max_n, engine, format } => {
            cmd_series(&SeriesRequest { avoid, spec, max_n, engine, format }).map(printed)
        }
        Command::Verify { subject, max_n } => cmd_verify(&subject, max_n),
        Command::Conjecture { k_max, max_n } => cmd_conjecture(k_max, max_n),
        Command::Bijection { map, input, show } => cmd_bijection(map, &input, show).map(printed),
        Command::PaperTables { out_dir, max_n } => {
            let written = cmd_paper_tables(&out_dir, max_n)?;
            Ok(printed(format!("wrote {} files to {}\n", written.len(), out_dir.display())))
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse().command) {
        Ok(outcome) => {
            print!("{}", outcome.text);
            if outcome.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
