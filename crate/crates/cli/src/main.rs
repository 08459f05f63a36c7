//! `uberhom`: horizontal, diagonal and über-homology of coloured complexes and graphs.

mod commands;
mod input;
mod report;
mod spec;

use std::io::Write;
use std::process::ExitCode;

use anyhow::Result;
use clap::{Parser, Subcommand};

use commands::GraphHomology;
use report::Format;
use spec::ColouringSpec;
use uberhom::{Error, DEFAULT_CAP};

/// Complex inputs are facet-list files (vertex count, then one facet per
/// line) or family names such as `simplex:3`, `boundary:2`, `loop:5`,
/// `grid:3:3`, `torus_min`. Graph inputs also accept graph6 files.
#[derive(Parser, Debug)]
#[command(name = "uberhom", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Largest vertex count for which colourings are enumerated.
    #[arg(long, global = true, env = "UBERHOM_CAP", default_value_t = DEFAULT_CAP)]
    cap: usize,

    /// Worker threads; defaults to the number of cores.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Horizontal homology `H^h(X, ε)`.
    Horizontal {
        input: String,
        /// Bits (vertex 0 first), `all`, `elementary:<i>` or `level:<j>`.
        #[arg(long)]
        colouring: ColouringSpec,
        /// Include a representative cycle for every generator.
        #[arg(long)]
        generators: bool,
    },
    /// Diagonal homology `H^d(X, ε)`.
    Diagonal {
        input: String,
        #[arg(long)]
        colouring: ColouringSpec,
    },
    /// Homology of the weight filtration, one level or all of them.
    Filtered {
        input: String,
        #[arg(long)]
        colouring: ColouringSpec,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Graded Euler characteristic of the horizontal homology.
    Euler {
        input: String,
        #[arg(long)]
        colouring: ColouringSpec,
    },
    /// Whether the induced subgraph is a Morse matching, and its critical cells.
    Morse {
        input: String,
        #[arg(long)]
        colouring: ColouringSpec,
    },
    /// Splits the induced subgraph by black vertex.
    Decompose {
        input: String,
        #[arg(long)]
        colouring: ColouringSpec,
    },
    /// Überhomology; `--level` keeps a single cube degree.
    Uber {
        input: String,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Degree-0 überhomology from the closed-star intersection.
    Uber0 { input: String },
    /// Θ tuples of a graph; all levels unless `--level` is given.
    Theta {
        input: String,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Pairwise dissimilarity over a graph6 corpus; `--level` caps the search.
    Dissim {
        corpus: String,
        #[arg(long)]
        level: Option<usize>,
    },
    /// Singly graded graph homologies.
    GraphHom {
        #[arg(value_enum)]
        kind: GraphHomology,
        input: String,
    },
    /// Matching complex of a graph.
    MatchingComplex { input: String },
    /// Overlaid Tait graph of a plane graph given as a rotation system.
    Tait { input: String },
    /// Checks the weight decomposition of the Tait matching complex.
    VerifyThm42 { input: String },
}

/// 2 malformed input, 3 dimension mismatch, 4 resource cap, 1 anything else.
fn exit_code(err: &anyhow::Error) -> u8 {
    let Some(e) = err.chain().find_map(|c| c.downcast_ref::<Error>()) else {
        return 1;
    };
    match e {
        Error::Parse { .. }
        | Error::Graph6(_)
        | Error::NotSimple(_)
        | Error::UnknownFamily(_)
        | Error::EmptyFacet
        | Error::NotSpherical { .. } => 2,
        Error::ColouringLength { .. } | Error::VertexOutOfRange { .. } => 3,
        Error::CapExceeded { .. } => 4,
        _ => 1,
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()?;
    }
    let cap = cli.cap;
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    let report = match &cli.command {
        Command::Horizontal {
            input,
            colouring,
            generators,
        } => commands::horizontal(input, colouring, cap, *generators)?,
        Command::Diagonal { input, colouring } => commands::diagonal(input, colouring, cap)?,
        Command::Filtered {
            input,
            colouring,
            level,
        } => commands::filtered(input, colouring, cap, *level)?,
        Command::Euler { input, colouring } => commands::euler(input, colouring, cap)?,
        Command::Morse { input, colouring } => commands::morse(input, colouring, cap)?,
        Command::Decompose { input, colouring } => commands::decompose(input, colouring, cap)?,
        Command::Uber { input, level } => commands::uber(input, cap, *level)?,
        Command::Uber0 { input } => commands::uber0(input)?,
        Command::Theta { input, level } => commands::theta_cmd(input, cap, *level)?,
        Command::Dissim { corpus, level } => {
            commands::dissim(corpus, cap, *level, cli.format, &mut out)?;
            return Ok(ExitCode::SUCCESS);
        }
        Command::GraphHom { kind, input } => commands::graph_hom(*kind, input, cap)?,
        Command::MatchingComplex { input } => commands::matching(input)?,
        Command::Tait { input } => commands::tait(input)?,
        Command::VerifyThm42 { input } => {
            let (report, holds) = commands::verify_thm42(input, cap)?;
            report.write(cli.format, &mut out)?;
            if !holds {
                eprintln!("uberhom: the two sides of the decomposition differ");
                return Ok(ExitCode::FAILURE);
            }
            return Ok(ExitCode::SUCCESS);
        }
    };
    report.write(cli.format, &mut out)?;
    out.flush()?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("uberhom: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
