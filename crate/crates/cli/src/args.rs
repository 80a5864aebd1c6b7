use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hedgehog::constructions::SearchMode;

#[derive(Parser, Debug)]
#[command(
    name = "hedgehog",
    version,
    about = "Generate, lift, search and verify colourings of complete hypergraphs",
    arg_required_else_help = true
)]
pub struct Cli {
    /// Worker threads. Parallel runs return the same verdicts; only which witness may differ.
    #[arg(long, global = true, env = "HEDGEHOG_THREADS")]
    pub threads: Option<usize>,

    /// Write the search report to this file instead of stderr.
    #[arg(long, global = true, value_name = "FILE")]
    pub report: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Produce a colouring.
    #[command(subcommand)]
    Generate(Generate),
    /// Turn a graph colouring into a hypergraph colouring (or combine two).
    #[command(subcommand)]
    Lift(Lift),
    /// Find a monochromatic hedgehog.
    #[command(subcommand)]
    Find(Find),
    /// Independent sets and two-coloured cliques.
    #[command(subcommand)]
    Extract(Extract),
    /// Staged search for a monochromatic hedgehog in a 3-colouring of triples.
    Pipeline(PipelineArgs),
    /// Check a colouring or certificate.
    #[command(subcommand)]
    Verify(Verify),
    /// Exhaustive small-case searches.
    #[command(subcommand)]
    Search(Search),
    /// Compute or bound F(t) for small t.
    FOracle(FOracleArgs),
    /// Run a manifest of commands and tabulate the results.
    Batch(BatchArgs),
}

#[derive(Subcommand, Debug)]
pub enum Generate {
    /// Uniformly random colouring.
    Random {
        #[arg(short = 'n')]
        n: usize,
        #[arg(short = 'k', default_value_t = 3)]
        k: usize,
        #[arg(short = 'q')]
        q: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Graph colouring in which every t-clique shows all q colours.
    Scattered {
        #[arg(short = 'n')]
        n: usize,
        #[arg(long)]
        t: usize,
        #[arg(short = 'q', default_value_t = 4)]
        q: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        max_tries: u64,
        /// Moves per local-search restart.
        #[arg(long, default_value_t = 5_000)]
        steps: u64,
        /// `local-search` or `rejection`.
        #[arg(long, default_value_t = SearchMode::LocalSearch)]
        mode: SearchMode,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Product colouring with no red-blue-green triangle and no large clique on three colours.
    GallaiWitness {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        seed: u64,
        /// Factor size (default from t).
        #[arg(long)]
        base: Option<usize>,
        #[arg(long, default_value_t = 200)]
        max_tries: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Lift {
    /// Colour each triple with a palette colour missing from its edges.
    Complement {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Comma-separated palette (default: all colours of the input).
        #[arg(long, value_delimiter = ',')]
        palette: Option<Vec<u8>>,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Red/blue graph colouring to 4-sets by their monochromatic triangles.
    KrQuad {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Triple colouring to 4-sets by the set of colours on their triples.
    QuadSet {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Lexicographic product: `--in` is the outer colouring, `--inner` the blocks.
    LexProduct {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        inner: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Find {
    /// With `--colour auto` (red/blue triples only) run the threshold finder;
    /// with an explicit colour run the exact search in that colour.
    Hedgehog {
        #[arg(long)]
        t: usize,
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, default_value = "auto")]
        colour: String,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum Extract {
    /// Independent set of the hypergraph whose edges are the colour-1 triples.
    Spencer {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = hedgehog::extractors::DEFAULT_TRIALS)]
        trials: u64,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
    /// Largest clique with at most two colours in a colouring with no rainbow triangle.
    Gallai {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        out: Option<PathBuf>,
    },
}

#[derive(Args, Debug)]
pub struct PipelineArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long = "in", value_name = "FILE")]
    pub input: PathBuf,
    /// Stage sizes as `key=value` pairs: clique_target, spencer_trials.
    #[arg(long, default_value = "")]
    pub scale: String,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Verify {
    /// Hedgehog certificate against its host.
    Embedding {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
    /// A complement lift of a scattered base: lift rule, base property, and
    /// no monochromatic hedgehog in the lift.
    Lift {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        base: PathBuf,
        #[arg(long)]
        t: usize,
        #[arg(long, value_delimiter = ',')]
        palette: Option<Vec<u8>>,
    },
    /// Every t-clique shows every colour.
    Scattered {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// No triangle carries exactly the three palette colours.
    Rainbow {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2")]
        palette: Vec<u8>,
    },
    /// No red-blue-green triangle and every t-clique shows all four colours.
    FWitness {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long)]
        t: usize,
    },
    /// Clique certificate with at most `--max-colours` colours.
    Clique {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
        #[arg(long, default_value_t = 2)]
        max_colours: usize,
    },
    /// Independent-set certificate for the colour-1 triples.
    Independent {
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        #[arg(long, value_name = "FILE")]
        cert: PathBuf,
    },
}

#[derive(Subcommand, Debug)]
pub enum Search {
    /// Does every q-colouring of the triples on n vertices contain a monochromatic H_t?
    Exhaustive {
        #[arg(long)]
        t: usize,
        #[arg(long)]
        q: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Args, Debug)]
pub struct FOracleArgs {
    #[arg(long)]
    pub t: usize,
    #[arg(long)]
    pub cap: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 20)]
    pub restarts: u64,
    #[arg(long, default_value_t = 20_000)]
    pub steps: u64,
    /// Also run local search where exhaustive search decides.
    #[arg(long)]
    pub cross_check: bool,
}

#[derive(Args, Debug)]
pub struct BatchArgs {
    /// One command per line (without the program name); `#` starts a comment;
    /// an optional leading `expect=N` sets the expected exit code (default 0).
    pub manifest: PathBuf,
    /// Run entries concurrently on the worker threads.
    #[arg(long)]
    pub parallel: bool,
}
