use clap::{Parser, Subcommand};

use parabolica::cli::{self, OutputFormat, RunConfig};

/// Exact invariants and semi-invariants of parabolic contractions, with
/// verifiable certificates.
#[derive(Parser)]
#[command(name = "parabolica", version, about)]
struct Args {
    #[command(subcommand)]
    command: Command,

    /// Term budget for combinatorial enumerations (min 10^4). Falls back to
    /// the PARABOLICA_BUDGET environment variable, then to 10^7.
    #[arg(long, global = true)]
    budget: Option<u64>,

    /// Seed for the randomized index estimates.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Output format: text or json.
    #[arg(long, global = true, default_value = "text")]
    format: String,

    /// Worker threads for the verification suite.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the block combinatorics of a contraction descriptor.
    Describe { descriptor: String },
    /// Factor F_m^bullet into semi-invariants and certify the result.
    Factor { descriptor: String, m: usize },
    /// Print all factor weights and check them against the closed formula.
    Weights { descriptor: String },
    /// Build and certify the Kostant-Weierstrass companion form.
    Kw {
        descriptor: String,
        /// Starting block of the pebbling process.
        #[arg(long, default_value_t = 1)]
        xi: usize,
    },
    /// Build a separating linear form isolating the factor F_{m,t}.
    Separate {
        descriptor: String,
        m: usize,
        t: usize,
    },
    /// Estimate indices of q and its truncation and check the balance.
    Index { descriptor: String },
    /// Run every identity class at the default desk scale.
    VerifySuite {
        /// Largest n whose block compositions are all covered.
        #[arg(long, default_value_t = 6)]
        max_n: usize,
    },
    /// Verify the sp_8 counterexample suite and emit its relation.
    Counterexample,
    /// Verify the so_12 probe identities.
    D6,
}

fn main() {
    let args = Args::parse();
    let format = match args.format.as_str() {
        "text" => OutputFormat::Text,
        "json" => OutputFormat::Json,
        other => {
            eprintln!("error: unknown format {other:?} (expected text or json)");
            std::process::exit(2);
        }
    };
    let budget = args
        .budget
        .or_else(|| {
            std::env::var("PARABOLICA_BUDGET")
                .ok()
                .and_then(|v| v.parse().ok())
        })
        .unwrap_or(parabolica::DEFAULT_BUDGET);
    let cfg = RunConfig {
        budget,
        seed: args.seed,
        format,
        jobs: args.jobs.max(1),
    };
    let outcome = match &args.command {
        Command::Describe { descriptor } => cli::cmd_describe(descriptor, &cfg),
        Command::Factor { descriptor, m } => cli::cmd_factor(descriptor, *m, &cfg),
        Command::Weights { descriptor } => cli::cmd_weights(descriptor, &cfg),
        Command::Kw { descriptor, xi } => cli::cmd_kw(descriptor, *xi, &cfg),
        Command::Separate { descriptor, m, t } => cli::cmd_separate(descriptor, *m, *t, &cfg),
        Command::Index { descriptor } => cli::cmd_index(descriptor, &cfg),
        Command::VerifySuite { max_n } => cli::cmd_verify_suite(&cfg, *max_n),
        Command::Counterexample => cli::cmd_counterexample(&cfg),
        Command::D6 => cli::cmd_d6(&cfg),
    };
    match &args.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("error: cannot write {}: {e}", path.display());
                std::process::exit(2);
            }
        }
        None => print!("{}", outcome.output),
    }
    std::process::exit(outcome.exit_code);
}
