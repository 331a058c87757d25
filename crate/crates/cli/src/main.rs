use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fusionkit::enumerate::SearchSpec;
use fusionkit::library::FIXED_NAMES;
use fusionkit::modular::Options;
use fusionkit::numeric::DEFAULT_PRECISION;
use fusionkit_cli::*;

#[derive(Parser)]
#[command(
    name = "fusionkit",
    version,
    about = "Fusion rings, their dimensions and realizability checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Print the JSON document instead of a summary.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON document to this file.
    #[arg(long, global = true)]
    out: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct RingSource {
    /// A built-in ring: unit, yang_lee, ising, rep_s3, galois_s3, a_N, b_N, sl2_L, group_G, ty_G.
    #[arg(long)]
    builtin: Option<String>,
    /// A ring file in the fusionkit/1 JSON format.
    #[arg(long = "in")]
    input: Option<String>,
}

impl RingSource {
    fn source(&self) -> Source {
        match (&self.builtin, &self.input) {
            (Some(b), _) => Source::Builtin(b.clone()),
            (_, Some(f)) => Source::File(f.clone()),
            _ => unreachable!("clap enforces one source"),
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Check the fusion ring axioms.
    Validate {
        #[command(flatten)]
        ring: RingSource,
    },
    /// Print a ring in the JSON ring format.
    Ring {
        #[command(flatten)]
        ring: Option<RingSource>,
        /// List the fixed built-in names.
        #[arg(long)]
        list: bool,
    },
    /// Frobenius-Perron dimensions and the obstruction battery.
    Dims {
        #[command(flatten)]
        ring: RingSource,
    },
    /// Characters, a candidate S-matrix and its modular checks.
    Modular {
        #[command(flatten)]
        ring: RingSource,
        #[arg(long, default_value_t = 1e-9)]
        tolerance: f64,
        /// Bits of working precision for root refinement.
        #[arg(long, default_value_t = DEFAULT_PRECISION)]
        precision: u32,
    },
    /// Finite group computations.
    Groups {
        #[command(subcommand)]
        command: GroupCommand,
    },
    /// List fusion rings of a given rank up to isomorphism.
    Enumerate {
        #[arg(long)]
        rank: usize,
        /// Largest structure constant.
        #[arg(long = "max-n")]
        max_n: u32,
        #[arg(long)]
        commutative: bool,
        /// Keep only rings satisfying Frobenius reciprocity.
        #[arg(long)]
        reciprocity: bool,
        /// Fix the duality, e.g. 0,2,1.
        #[arg(long, value_delimiter = ',')]
        dual: Option<Vec<usize>>,
    },
}

#[derive(Subcommand)]
enum GroupCommand {
    /// H^n(G, C^x).
    Cohomology {
        #[arg(long)]
        group: String,
        #[arg(long)]
        degree: usize,
    },
    /// Indecomposable module categories over Vec(G, omega).
    ModuleCats {
        #[arg(long)]
        group: String,
        /// Coordinates of omega in H^3(G, C^x); trivial when omitted.
        #[arg(long, value_delimiter = ',')]
        twist: Vec<u64>,
    },
    /// Fiber functors on Rep(G).
    FiberFunctors {
        #[arg(long)]
        group: String,
    },
}

fn dispatch(command: &Command) -> Outcome {
    match command {
        Command::Validate { ring } => cmd_validate(&ring.source()),
        Command::Ring { ring, list } => match (ring, list) {
            (_, true) | (None, _) => Outcome {
                code: exit::OK,
                json: to_json(&FIXED_NAMES),
                summary: FIXED_NAMES.join("\n"),
                is_error: false,
            },
            (Some(r), false) => cmd_ring(&r.source()),
        },
        Command::Dims { ring } => cmd_dims(&ring.source()),
        Command::Modular {
            ring,
            tolerance,
            precision,
        } => cmd_modular(
            &ring.source(),
            &Options {
                tolerance: *tolerance,
                precision: *precision,
            },
        ),
        Command::Groups { command } => match command {
            GroupCommand::Cohomology { group, degree } => cmd_cohomology(group, *degree),
            GroupCommand::ModuleCats { group, twist } => cmd_module_cats(group, twist),
            GroupCommand::FiberFunctors { group } => cmd_fiber_functors(group),
        },
        Command::Enumerate {
            rank,
            max_n,
            commutative,
            reciprocity,
            dual,
        } => {
            let mut spec = SearchSpec::new(*rank, *max_n);
            spec.commutative_only = *commutative;
            spec.require_reciprocity = *reciprocity;
            spec.dual = dual.clone();
            cmd_enumerate(&spec)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = std::panic::catch_unwind(|| dispatch(&cli.command))
        .unwrap_or_else(|_| error_outcome(&fusionkit::Error::Internal("unexpected failure".into())));
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &outcome.json) {
            eprintln!("internal: cannot write {path}: {e}");
            return ExitCode::from(exit::INTERNAL as u8);
        }
    }
    let is_ring = matches!(cli.command, Command::Ring { .. });
    if !outcome.is_error {
        if cli.json || is_ring {
            print!("{}", outcome.json);
        } else {
            println!("{}", outcome.summary);
        }
    } else if cli.json {
        print!("{}", outcome.json);
        eprintln!("{}", outcome.summary);
    } else {
        eprintln!("{}", outcome.summary);
    }
    ExitCode::from(outcome.code as u8)
}
