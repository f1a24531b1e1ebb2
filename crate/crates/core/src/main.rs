use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

mod commands;

#[derive(Parser)]
#[command(name = "widthlab", version, about = "Width calculus for Morse presentations of links and tangles")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Input {
    /// A `.morse` or `.cdisk` file.
    file: Option<PathBuf>,
    /// Use a bundled preset instead of a file (see `widthlab presets`).
    #[arg(long, conflicts_with = "file")]
    preset: Option<String>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Width and the level table.
    Width(Input),
    /// Thin, thick and boundary levels.
    Levels(Input),
    /// Braid boxes.
    Boxes {
        #[command(flatten)]
        input: Input,
        /// Restrict to these components (comma separated ids).
        #[arg(long, value_delimiter = ',')]
        components: Option<Vec<usize>>,
    },
    /// Apply one exchange or push a block of events.
    Move {
        #[command(flatten)]
        input: Input,
        /// Swap events K and K+1.
        #[arg(long, value_name = "K", conflicts_with = "push", required_unless_present = "push")]
        exchange: Option<usize>,
        /// Push events A..B up or down past event L.
        #[arg(long, num_args = 3, value_names = ["A..B", "up|down", "L"])]
        push: Option<Vec<String>>,
    },
    /// Least width over the exchange orbit.
    Orbit {
        #[command(flatten)]
        input: Input,
        /// Maximum number of distinct words to visit.
        #[arg(long, default_value_t = 100_000)]
        budget: usize,
    },
    /// Checks on a c-disk schematic.
    Cdisk {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        mode: CdiskMode,
    },
    /// List bundled presets.
    Presets {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Clone, Copy)]
#[group(multiple = false)]
struct CdiskMode {
    /// Every applicable Fact with predicted and recomputed deltas.
    #[arg(long)]
    facts: bool,
    /// The inequality conclusions on region counts.
    #[arg(long)]
    theorem: bool,
    /// The width chain over alternating levels.
    #[arg(long)]
    chain: bool,
    /// Search for a width-lowering certificate (the default).
    #[arg(long)]
    certify: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Width(input) => commands::width(&input),
        Command::Levels(input) => commands::levels(&input),
        Command::Boxes { input, components } => commands::boxes(&input, components),
        Command::Move { input, exchange, push } => commands::moves(&input, exchange, push),
        Command::Orbit { input, budget } => commands::orbit(&input, budget),
        Command::Cdisk { input, mode } => commands::cdisk(&input, mode),
        Command::Presets { json } => commands::presets(json),
    };
    match result {
        Ok(out) => {
            print!("{}", out.stdout);
            ExitCode::from(out.code)
        }
        Err(message) => {
            eprintln!("{message}");
            ExitCode::from(1)
        }
    }
}
