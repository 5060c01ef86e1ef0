use std::net::IpAddr;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use wordsig::sgns::{SigmoidMode, TrainConfig};

#[derive(Debug, Parser)]
#[command(
    name = "wordsig",
    version,
    about = "Word significance from vector length and term frequency"
)]
pub struct Cli {
    /// key=value file supplying defaults for the subcommand's flags.
    #[arg(long, global = true, value_name = "FILE")]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Strip TeX, tokenize and count a raw corpus.
    Ingest(IngestArgs),
    /// Train skip-gram vectors on a tokenized corpus.
    Train(TrainArgs),
    /// Compute significance statistics and the explorer data file.
    Stats(StatsArgs),
    /// Serve the explorer page and its data file over HTTP.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct IngestArgs {
    /// `id<TAB>text` file or directory with one document per file.
    pub corpus: PathBuf,

    /// Tokenized corpus output, one document per line.
    #[arg(long, default_value = "corpus.tok")]
    pub tokens: PathBuf,

    /// Vocabulary output, `term<TAB>count` by descending count.
    #[arg(long, default_value = "vocab.tsv")]
    pub vocab: PathBuf,

    #[arg(long = "min-count", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_count: u64,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct TrainArgs {
    /// Tokenized corpus written by `ingest`.
    pub input: PathBuf,

    /// Vector file to write.
    #[arg(long, short, default_value = "vectors.txt")]
    pub output: PathBuf,

    /// Also write the vocabulary the vectors were trained on.
    #[arg(long = "save-vocab", value_name = "FILE")]
    pub save_vocab: Option<PathBuf>,

    #[arg(long, default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub size: u64,

    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    pub window: u64,

    #[arg(long, default_value_t = 5)]
    pub negative: usize,

    #[arg(long, default_value_t = 1e-4)]
    pub sample: f64,

    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    pub iter: u64,

    #[arg(long = "min-count", default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_count: u64,

    #[arg(long, default_value_t = 0.025)]
    pub alpha: f64,

    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub threads: u64,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,

    /// Evaluate the logistic function exactly instead of by table lookup.
    #[arg(long = "exact-sigmoid")]
    pub exact_sigmoid: bool,
}

impl TrainArgs {
    pub fn train_config(&self) -> TrainConfig {
        TrainConfig {
            dim: self.size as usize,
            window: self.window as usize,
            negatives: self.negative,
            sample: self.sample,
            epochs: self.iter as usize,
            min_count: self.min_count,
            alpha: self.alpha,
            workers: self.threads as usize,
            seed: self.seed,
            sigmoid: if self.exact_sigmoid {
                SigmoidMode::Exact
            } else {
                SigmoidMode::Table
            },
            ..TrainConfig::default()
        }
    }
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct StatsArgs {
    #[arg(long)]
    pub vectors: PathBuf,

    #[arg(long)]
    pub vocab: PathBuf,

    /// Tagger output, `token<TAB>tag` per occurrence.
    #[arg(long)]
    pub tags: Option<PathBuf>,

    /// Directory for the reports and the explorer data file.
    #[arg(long = "out-dir", default_value = "stats")]
    pub out_dir: PathBuf,

    /// Corpus name recorded in the explorer data file.
    #[arg(long, default_value = "corpus")]
    pub name: String,

    /// Smallest term frequency included in the similarity histogram.
    #[arg(long = "min-tf", default_value_t = 2, value_parser = clap::value_parser!(u64).range(1..))]
    pub min_tf: u64,

    /// Random pairs drawn for the similarity histogram.
    #[arg(long, default_value_t = 1_000_000)]
    pub pairs: u64,

    /// Histogram bins over [-1, 1].
    #[arg(long = "hist-bins", default_value_t = 100, value_parser = clap::value_parser!(u64).range(1..))]
    pub hist_bins: u64,

    /// Length of the frequency-list reports.
    #[arg(long, default_value_t = 50)]
    pub top: usize,

    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Debug, Args)]
#[command(args_override_self = true)]
pub struct ServeArgs {
    /// Explorer data file written by `stats`.
    pub data: PathBuf,

    #[arg(long, default_value_t = 8080)]
    pub port: u16,

    #[arg(long, default_value = "127.0.0.1")]
    pub host: IpAddr,

    /// Directory with the explorer page (`index.html`) and its assets.
    #[arg(long)]
    pub assets: Option<PathBuf>,
}
