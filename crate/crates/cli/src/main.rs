//! `plethyra`: exact plethysm and ramified branching coefficients, diagram
//! algebras and Schur–Weyl checks from the command line.
//!
//! Exit status: 0 on success, 1 on invalid input or a violated
//! precondition, 2 when a verification finds a mismatch.

mod commands;
mod report;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use plethyra::coefficients::{Limits, DEFAULT_MAX_DEGREE, DEFAULT_MAX_ENTRIES};
use plethyra::Partition;

use report::Format;

#[derive(Parser, Debug)]
#[command(name = "plethyra", version, about = "Exact plethysm and ramified branching coefficients")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Ceiling on |ν|·|μ| for brute-force plethysm.
    #[arg(long, env = "PLETHYRA_MAX_DEGREE", default_value_t = DEFAULT_MAX_DEGREE, global = true)]
    max_degree: usize,
    /// Cap on potential sparse-matrix entries for tensor-space computations.
    #[arg(long, default_value_t = DEFAULT_MAX_ENTRIES, global = true)]
    max_entries: usize,
    #[command(subcommand)]
    command: Command,
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: plethyra::Error| e.to_string())
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Plethysm s_ν∘s_μ, or its coefficient of s_λ.
    Plethysm {
        #[arg(long, value_parser = partition)]
        nu: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        lambda: Option<Partition>,
    },
    /// Littlewood–Richardson product s_μ·s_ν, or the coefficient c^λ_{μν}.
    Lr {
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_parser = partition)]
        nu: Partition,
        #[arg(long, value_parser = partition)]
        lambda: Option<Partition>,
    },
    /// Ramified branching coefficient rc(α^β, κ).
    ///
    /// β is taken literally: for α = ∅ pass β itself, for α ≠ ∅ pass the
    /// label of the outer factor as it appears in the product.
    Rc {
        #[arg(long, value_parser = partition, default_value = "[]")]
        alpha: Partition,
        #[arg(long, value_parser = partition)]
        beta: Partition,
        #[arg(long, value_parser = partition)]
        kappa: Partition,
        /// Also list the nonzero (γ, ε) summands.
        #[arg(long)]
        terms: bool,
    },
    /// The coefficient p(β[n], (m), κ[mn]), by the stable formula when the
    /// bounds hold and by brute force otherwise.
    Stable {
        #[arg(long, value_parser = partition)]
        beta: Partition,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = partition)]
        kappa: Partition,
    },
    /// The b-marked partitions (γ, ε) of r.
    Marked {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        r: usize,
        /// Bound γ₁ and ε₁ by this value.
        #[arg(long)]
        cap: Option<usize>,
        /// Keep only γ with distinct parts.
        #[arg(long)]
        distinct: bool,
    },
    /// Coefficients of the two-row stable generating function.
    Gf {
        #[arg(long)]
        b: usize,
        #[arg(long, default_value_t = 12)]
        terms: usize,
    },
    /// The Cayley–Sylvester tableaux count for p((n−b,b),(m),(mn−r,r)).
    TableauxOracle {
        #[arg(long)]
        b: usize,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Compare with brute-force plethysm; a mismatch exits with status 2.
        #[arg(long)]
        check: bool,
    },
    /// Partition and ramified diagrams.
    Diagram {
        #[command(subcommand)]
        op: DiagramOp,
    },
    /// The poset Θ_r of propagating indices.
    Theta {
        #[arg(long)]
        r: usize,
        /// Decide x ≤ y in Θ_r.
        #[arg(long, num_args = 2, value_names = ["X", "Y"])]
        le: Option<Vec<String>>,
    },
    /// Depth-quotient dimension checks and type censuses.
    DqCheck(DqArgs),
    /// Tensor-space actions, commutation and faithfulness.
    SchurWeyl {
        #[command(subcommand)]
        op: SchurWeylOp,
    },
    /// Run a verification battery; a failure exits with status 2.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::Examples)]
        suite: SuiteArg,
    },
}

#[derive(Subcommand, Debug)]
enum DiagramOp {
    /// Propagating data of a diagram ("inner@outer" for ramified diagrams).
    Show { diagram: String },
    /// The product of two diagrams, with its loop exponents.
    Compose { top: String, bottom: String },
    /// Expansion in the orbit basis, or with --inverse the diagram-basis
    /// expansion of an orbit element.
    Orbit {
        diagram: String,
        #[arg(long)]
        inverse: bool,
    },
}

#[derive(Args, Debug)]
struct DqArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, value_parser = partition)]
    beta: Option<Partition>,
    #[arg(long, value_parser = partition, default_value = "[]")]
    alpha: Partition,
    /// List the types of the V⁰ basis for (r, a, b) instead.
    #[arg(long, num_args = 2, value_names = ["A", "B"])]
    census: Option<Vec<usize>>,
}

#[derive(Subcommand, Debug)]
enum SchurWeylOp {
    /// Whether S_m ≀ S_n commutes with the ramified generators on
    /// (C^m ⊗ C^n)^{⊗r}.
    Commute {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        /// Place the group with subscripts and superscripts exchanged.
        #[arg(long)]
        swapped: bool,
    },
    /// Rank of the span of all (r,r)-diagram actions on (C^d)^{⊗r}.
    Rank {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        r: usize,
    },
    /// Value types of a pure tensor given as "(i,j),(i,j),…".
    ValueType { pairs: String },
    /// The action matrix of a diagram, as coordinate-list text.
    Matrix {
        diagram: String,
        #[arg(long)]
        d: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
enum SuiteArg {
    Examples,
    Acceptance,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(1),
            };
        }
    };
    let limits = Limits { max_degree: cli.max_degree, max_entries: cli.max_entries };
    let start = Instant::now();
    let result = commands::dispatch(&cli.command, &limits);
    let elapsed_ms = start.elapsed().as_secs_f64() * 1000.0;
    match result {
        Ok(outcome) => {
            let mut report = outcome.report;
            report.elapsed_ms = elapsed_ms;
            let mut stdout = std::io::stdout().lock();
            if report.write(cli.format, &mut stdout).and_then(|()| stdout.flush()).is_err() {
                return ExitCode::from(1);
            }
            if outcome.mismatch {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
