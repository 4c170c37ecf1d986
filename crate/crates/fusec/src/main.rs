mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "fusec", version, about = "Fusion systems, their group models and theorem checks")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Fusion system tables
    #[command(subcommand)]
    Fusion(FusionCmd),
    /// Theorem checks on a single fusion system or a pair
    #[command(subcommand)]
    Check(CheckCmd),
    /// End-to-end model pipeline for a group at a prime
    Suite(SuiteArgs),
    /// Mod-p cohomology dimension tables
    #[command(subcommand)]
    Cohom(CohomCmd),
    /// Amalgam models
    #[command(subcommand)]
    Model(ModelCmd),
}

#[derive(Subcommand)]
pub enum FusionCmd {
    /// Subgroups, morphism counts and saturation
    Dump {
        #[arg(long)]
        fusion: PathBuf,
        /// List every morphism
        #[arg(long)]
        verbose: bool,
    },
}

#[derive(Subcommand)]
pub enum CheckCmd {
    /// Center of F against the center of N_F(J(S))
    Gt {
        #[arg(long)]
        fusion: PathBuf,
    },
    /// C_F(Z(S)) = N_F(J(S)) = F_S(S) forces F = F_S(S)
    Thompson {
        #[arg(long)]
        fusion: PathBuf,
    },
    /// Centricity in products and stable elements of products
    Kunneth {
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(long, default_value_t = 3)]
        degree: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Args)]
pub struct SuiteArgs {
    /// Group file or corpus name
    #[arg(long)]
    pub group: String,
    #[arg(long)]
    pub prime: usize,
    #[arg(long, default_value = "centric-radical")]
    pub flavor: String,
    #[arg(long, default_value_t = 2)]
    pub degree: usize,
    #[command(flatten)]
    pub budget: BudgetArgs,
}

#[derive(Args, Clone, Copy)]
pub struct BudgetArgs {
    /// Largest cochain space allowed
    #[arg(long, default_value_t = fusec_core::cohomology::DEFAULT_COCHAIN_BUDGET)]
    pub budget: usize,
    /// Seed for the randomized kernel compression
    #[arg(long, default_value_t = 0x5eed)]
    pub seed: u64,
}

#[derive(Subcommand)]
pub enum CohomCmd {
    /// H^n(G; F_p) for n up to the degree
    Group {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        budget: BudgetArgs,
        /// Include cocycle, coboundary and representative bases
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Stable elements of a fusion system
    Stable {
        #[arg(long)]
        fusion: PathBuf,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        /// Only test stability on centric subgroups
        #[arg(long)]
        centric_only: bool,
        #[command(flatten)]
        budget: BudgetArgs,
        #[arg(long)]
        dump_matrices: bool,
    },
    /// Mayer–Vietoris dimensions of a model, with restriction to S when a
    /// fusion system on the same S is given
    Mv {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        fusion: Option<PathBuf>,
        #[arg(long, default_value_t = 2)]
        degree: usize,
        #[command(flatten)]
        budget: BudgetArgs,
    },
}

#[derive(Subcommand)]
pub enum ModelCmd {
    /// Star of normalizer quotients over the base points of F_S(G)
    Robinson {
        #[arg(long)]
        group: String,
        #[arg(long)]
        prime: usize,
        #[arg(long, default_value = "centric-radical")]
        flavor: String,
        /// Write the model file here
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split vertices along chosen subgroups
    Refine {
        #[arg(long)]
        model: PathBuf,
        /// Subgroups file: for each vertex, the list of replacement subgroups
        #[arg(long)]
        choices: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact Euler characteristic
    Euler {
        #[arg(long)]
        model: PathBuf,
    },
    /// Permutation representation with free kernel
    Permrep {
        #[arg(long)]
        model: PathBuf,
        /// Subgroups file with one p'-subgroup per vertex
        #[arg(long)]
        subgroups: Option<PathBuf>,
        #[arg(long, default_value_t = fusec_core::models::DEFAULT_PERMUTATION_BUDGET)]
        budget: usize,
    },
    /// HNN-style presentation and its abelianization
    Present {
        #[arg(long, conflicts_with = "model")]
        fusion: Option<PathBuf>,
        #[arg(long)]
        model: Option<PathBuf>,
        #[arg(long, default_value = "leary-stancu")]
        style: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Fusion(c) => commands::fusion(c),
        Command::Check(c) => commands::check(c),
        Command::Suite(a) => commands::suite(a),
        Command::Cohom(c) => commands::cohom(c),
        Command::Model(c) => commands::model(c),
    };
    match result {
        Ok(out) => {
            match cli.format {
                Format::Text => print!("{}", out.text),
                Format::Structured => {
                    println!("{}", serde_json::to_string_pretty(&out.value).expect("serializable"))
                }
            }
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
