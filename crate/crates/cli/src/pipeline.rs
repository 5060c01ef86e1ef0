//! The file-to-file stages behind each subcommand.

use std::fs::{self, File};
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use log::info;
use wordsig::corpus::{
    load_documents, term_frequency_list, StopWordList, TokenizedCorpus, Vocabulary,
};
use wordsig::sgns::{load_vectors, save_vectors, train, TrainConfig, TrainReport};
use wordsig::significance::{
    bin_means, class_bin_means, export_plane, load_tagged_tokens, mean_vector,
    similarity_histogram, top_by_length_in_bin, word_stats, BinSummary, ExplorerMeta, PosLexicon,
};

fn create(path: &Path) -> Result<BufWriter<File>> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
    }
    let file = File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    Ok(BufWriter::new(file))
}

fn open(path: &Path) -> Result<BufReader<File>> {
    let file = File::open(path).with_context(|| format!("cannot open {}", path.display()))?;
    Ok(BufReader::new(file))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IngestSummary {
    pub documents: usize,
    pub tokens: u64,
    pub vocabulary: usize,
}

/// Tokenizes the raw corpus at `corpus`, writing the tokenized corpus and
/// its vocabulary.
pub fn ingest(corpus: &Path, tokens: &Path, vocab: &Path, min_count: u64) -> Result<IngestSummary> {
    let docs = load_documents(corpus)?;
    let tokenized = TokenizedCorpus::from_raw(&docs);
    let vocabulary = Vocabulary::build(&tokenized, min_count)?;
    tokenized.write(create(tokens)?)?;
    vocabulary.write_tsv(create(vocab)?)?;
    Ok(IngestSummary {
        documents: tokenized.num_documents(),
        tokens: tokenized.total_tokens(),
        vocabulary: vocabulary.len(),
    })
}

/// Trains vectors on a tokenized corpus and writes them to `output`.
pub fn train_vectors(
    input: &Path,
    output: &Path,
    save_vocab: Option<&Path>,
    config: &TrainConfig,
) -> Result<TrainReport> {
    let corpus = TokenizedCorpus::read(open(input)?)
        .with_context(|| format!("cannot read tokenized corpus {}", input.display()))?;
    let trained = train(&corpus, config)?;
    save_vectors(&trained.model, create(output)?)?;
    if let Some(path) = save_vocab {
        trained.model.vocab().write_tsv(create(path)?)?;
    }
    Ok(trained.report)
}

#[derive(Clone, Debug)]
pub struct StatsOptions {
    pub name: String,
    pub min_tf: u64,
    pub pairs: u64,
    pub hist_bins: usize,
    pub top: usize,
    pub seed: u64,
}

#[derive(Clone, Debug)]
pub struct StatsSummary {
    pub terms: usize,
    pub mean_vec_len: f64,
    pub mean_similarity: f64,
    pub bins: Vec<BinSummary>,
    pub explorer: PathBuf,
}

/// Computes the significance reports for a trained model.
///
/// Writes to `out_dir`: `frequency.tsv` (most frequent terms without stop
/// words and punctuation), `frequency_raw.tsv` (unfiltered),
/// `similarity.csv`, `bins.tsv`, `top_by_length.tsv`, `classes.tsv` when
/// tags are given, and the explorer data file `explorer.json`.
pub fn stats(
    vectors: &Path,
    vocab: &Path,
    tags: Option<&Path>,
    out_dir: &Path,
    opts: &StatsOptions,
) -> Result<StatsSummary> {
    let vocabulary = Vocabulary::read_tsv(open(vocab)?)
        .with_context(|| format!("cannot read vocabulary {}", vocab.display()))?;
    let loaded = load_vectors(open(vectors)?)
        .with_context(|| format!("cannot read vectors {}", vectors.display()))?;
    let model = loaded
        .into_model(vocabulary)
        .context("vector file does not match the vocabulary")?;

    let lexicon = match tags {
        Some(path) => {
            let tagged = load_tagged_tokens(open(path)?)
                .with_context(|| format!("cannot read tagged tokens {}", path.display()))?;
            Some(PosLexicon::from_tagged(&tagged))
        }
        None => None,
    };

    fs::create_dir_all(out_dir).with_context(|| format!("cannot create {}", out_dir.display()))?;

    let stopwords = StopWordList::english();
    write_frequency(
        &out_dir.join("frequency.tsv"),
        &term_frequency_list(model.vocab(), Some(&stopwords), true, opts.top),
    )?;
    write_frequency(
        &out_dir.join("frequency_raw.tsv"),
        &term_frequency_list(model.vocab(), None, false, opts.top),
    )?;

    info!(
        "similarity histogram: {} pairs, min_tf {}, seed {}",
        opts.pairs, opts.min_tf, opts.seed
    );
    let hist = similarity_histogram(&model, opts.pairs, opts.min_tf, opts.hist_bins, opts.seed)?;
    hist.write_csv(create(&out_dir.join("similarity.csv"))?)?;

    let stats = word_stats(&model, lexicon.as_ref());
    let bins = bin_means(&stats);
    let mut out = create(&out_dir.join("bins.tsv"))?;
    writeln!(out, "k\tlo\thi\tn\tmean_v")?;
    for b in &bins {
        writeln!(
            out,
            "{}\t{}\t{}\t{}\t{}",
            b.k, b.lo, b.hi, b.members, b.mean_v
        )?;
    }
    out.flush()?;

    let mut out = create(&out_dir.join("top_by_length.tsv"))?;
    writeln!(out, "k\trank\tterm\ttf\tv")?;
    for b in &bins {
        for (rank, s) in top_by_length_in_bin(&stats, b.k, opts.top)
            .iter()
            .enumerate()
        {
            writeln!(out, "{}\t{}\t{}\t{}\t{}", b.k, rank + 1, s.term, s.tf, s.v)?;
        }
    }
    out.flush()?;

    if lexicon.is_some() {
        let mut out = create(&out_dir.join("classes.tsv"))?;
        writeln!(out, "class\tk\tlo\thi\tn\tmean_v")?;
        for (class, bins) in class_bin_means(&stats) {
            for b in bins {
                writeln!(
                    out,
                    "{class}\t{}\t{}\t{}\t{}\t{}",
                    b.k, b.lo, b.hi, b.members, b.mean_v
                )?;
            }
        }
        out.flush()?;
    }

    let (_, mean_vec_len) = mean_vector(&model, opts.min_tf)?;
    let meta = ExplorerMeta {
        corpus_name: opts.name.clone(),
        dim: model.dim(),
        total_tokens: model.vocab().total_count(),
        mean_vec_len,
        min_tf: opts.min_tf,
    };
    let explorer = out_dir.join("explorer.json");
    export_plane(&stats, &bins, meta, create(&explorer)?)?;

    Ok(StatsSummary {
        terms: stats.len(),
        mean_vec_len,
        mean_similarity: hist.mean,
        bins,
        explorer,
    })
}

fn write_frequency(path: &Path, rows: &[(String, u64)]) -> Result<()> {
    let mut out = create(path)?;
    writeln!(out, "rank\tterm\ttf")?;
    for (i, (term, tf)) in rows.iter().enumerate() {
        writeln!(out, "{}\t{term}\t{tf}", i + 1)?;
    }
    out.flush()?;
    Ok(())
}
