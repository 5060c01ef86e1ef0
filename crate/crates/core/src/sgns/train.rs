use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use log::{debug, info};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::TrainConfig;
use super::hogwild::SharedRows;
use super::matrix::Matrix;
use super::model::EmbeddingModel;
use super::sampling::{subsample_keep_prob, NoiseTable};
use super::sigmoid::Sigmoid;
use super::step::sgns_update;
use crate::corpus::{TokenizedCorpus, Vocabulary};
use crate::error::{Error, Result};

/// Redraws allowed when a negative sample hits the positive context.
const NEGATIVE_RETRIES: usize = 8;
/// Worker progress is published to the shared counter at least this often.
const PROGRESS_FLUSH: u64 = 1024;

/// Summary of a training run.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainReport {
    pub epochs: usize,
    /// In-vocabulary token occurrences read, over all epochs.
    pub tokens_seen: u64,
    /// Occurrences that survived subsampling, over all epochs.
    pub tokens_kept: u64,
    /// (center, context) pairs trained.
    pub pairs: u64,
    /// Learning rate used for the last update.
    pub final_alpha: f64,
    /// Mean pair objective per epoch.
    pub epoch_loss: Vec<f64>,
}

#[derive(Clone, Debug)]
pub struct Trained {
    pub model: EmbeddingModel,
    pub report: TrainReport,
}

/// Builds the vocabulary with `config.min_count` and trains on `corpus`.
pub fn train(corpus: &TokenizedCorpus, config: &TrainConfig) -> Result<Trained> {
    config.validate()?;
    let vocab = Vocabulary::build(corpus, config.min_count)?;
    train_with_vocab(corpus, vocab, config)
}

/// Trains skip-gram vectors for the terms of `vocab`. Corpus tokens outside
/// the vocabulary are ignored.
pub fn train_with_vocab(
    corpus: &TokenizedCorpus,
    vocab: Vocabulary,
    config: &TrainConfig,
) -> Result<Trained> {
    config.validate()?;
    if corpus.total_tokens() == 0 {
        return Err(Error::EmptyCorpus);
    }
    if vocab.is_empty() {
        return Err(Error::EmptyVocabulary);
    }
    let required = config.model_bytes(vocab.len());
    if required > config.max_model_bytes {
        return Err(Error::MemoryLimit {
            required,
            limit: config.max_model_bytes,
        });
    }

    let docs: Vec<Vec<u32>> = corpus
        .documents()
        .iter()
        .map(|d| {
            d.iter()
                .filter_map(|t| vocab.index_of(t).map(|i| i as u32))
                .collect()
        })
        .collect();
    let total = vocab.total_count();
    let keep = vocab
        .counts()
        .iter()
        .map(|&tf| subsample_keep_prob(tf, total, config.sample))
        .collect::<Result<Vec<_>>>()?;
    let noise = NoiseTable::from_vocab(&vocab, config.noise_power)?;
    let sigmoid = Sigmoid::new(config.sigmoid);

    let dim = config.dim;
    let mut init_rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut input = Matrix::zeros(vocab.len(), dim);
    for x in input.as_mut_slice() {
        *x = (init_rng.random::<f32>() - 0.5) / dim as f32;
    }
    let mut output = Matrix::zeros(vocab.len(), dim);

    info!(
        "training {} terms, {} tokens, dim {}, window {}, negative {}, sample {}, \
         iter {}, alpha {}, threads {}, seed {}",
        vocab.len(),
        total,
        dim,
        config.window,
        config.negatives,
        config.sample,
        config.epochs,
        config.alpha,
        config.workers,
        config.seed
    );

    let shared = Shared {
        input: SharedRows::new(&mut input),
        output: SharedRows::new(&mut output),
        progress: AtomicU64::new(0),
        abort: AtomicBool::new(false),
        scheduled: config.epochs as u64 * total,
    };
    let ctx = Context {
        config,
        keep: &keep,
        noise: &noise,
        sigmoid: &sigmoid,
        vocab: &vocab,
    };

    let partitions = partition(&docs, config.workers);
    let stats: Vec<Result<WorkerStats>> = if partitions.len() == 1 {
        vec![Worker::new(&ctx, &shared, partitions[0], 0).run()]
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = partitions
                .iter()
                .enumerate()
                .map(|(w, part)| {
                    let (ctx, shared) = (&ctx, &shared);
                    scope.spawn(move || Worker::new(ctx, shared, part, w).run())
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("training worker panicked"))
                .collect()
        })
    };

    let mut report = TrainReport {
        epochs: config.epochs,
        tokens_seen: 0,
        tokens_kept: 0,
        pairs: 0,
        final_alpha: config.alpha,
        epoch_loss: vec![0.0; config.epochs],
    };
    let mut epoch_pairs = vec![0u64; config.epochs];
    for s in stats {
        let s = s?;
        report.tokens_seen += s.tokens_seen;
        report.tokens_kept += s.tokens_kept;
        report.pairs += s.pairs;
        report.final_alpha = report.final_alpha.min(s.last_alpha);
        for (e, (loss, pairs)) in s.epochs.into_iter().enumerate() {
            report.epoch_loss[e] += loss;
            epoch_pairs[e] += pairs;
        }
    }
    for (loss, &pairs) in report.epoch_loss.iter_mut().zip(&epoch_pairs) {
        *loss = if pairs > 0 { *loss / pairs as f64 } else { 0.0 };
    }
    info!(
        "trained {} pairs from {} kept of {} tokens, final alpha {:.6}",
        report.pairs, report.tokens_kept, report.tokens_seen, report.final_alpha
    );

    let model = EmbeddingModel::new(vocab, input, output)?;
    Ok(Trained { model, report })
}

/// Splits documents into at most `workers` contiguous runs of roughly equal
/// token counts.
fn partition(docs: &[Vec<u32>], workers: usize) -> Vec<&[Vec<u32>]> {
    let total: usize = docs.iter().map(Vec::len).sum();
    let target = total.div_ceil(workers.max(1)).max(1);
    let mut parts = Vec::with_capacity(workers);
    let (mut start, mut acc) = (0, 0);
    for (i, doc) in docs.iter().enumerate() {
        acc += doc.len();
        if acc >= target && parts.len() + 1 < workers {
            parts.push(&docs[start..=i]);
            start = i + 1;
            acc = 0;
        }
    }
    if start < docs.len() || parts.is_empty() {
        parts.push(&docs[start..]);
    }
    parts
}

/// Inclusive bounds of the context of `pos` for effective window `b`.
#[inline]
fn context_bounds(pos: usize, len: usize, b: usize) -> (usize, usize) {
    (pos.saturating_sub(b), (pos + b).min(len - 1))
}

struct Shared<'a> {
    input: SharedRows<'a>,
    output: SharedRows<'a>,
    progress: AtomicU64,
    abort: AtomicBool,
    scheduled: u64,
}

struct Context<'a> {
    config: &'a TrainConfig,
    keep: &'a [f64],
    noise: &'a NoiseTable,
    sigmoid: &'a Sigmoid,
    vocab: &'a Vocabulary,
}

struct WorkerStats {
    epochs: Vec<(f64, u64)>,
    tokens_seen: u64,
    tokens_kept: u64,
    pairs: u64,
    last_alpha: f64,
}

struct Worker<'a> {
    ctx: &'a Context<'a>,
    shared: &'a Shared<'a>,
    docs: &'a [Vec<u32>],
    id: usize,
    rng: ChaCha8Rng,
    unflushed: u64,
}

impl<'a> Worker<'a> {
    fn new(ctx: &'a Context<'a>, shared: &'a Shared<'a>, docs: &'a [Vec<u32>], id: usize) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(ctx.config.seed);
        rng.set_stream(id as u64 + 1);
        Worker {
            ctx,
            shared,
            docs,
            id,
            rng,
            unflushed: 0,
        }
    }

    fn alpha(&self, local: u64) -> f64 {
        let done = self.shared.progress.load(Ordering::Relaxed) + local;
        let frac = done as f64 / (self.shared.scheduled + 1) as f64;
        self.ctx.config.alpha * (1.0 - frac).max(1e-4)
    }

    fn run(mut self) -> Result<WorkerStats> {
        let config = self.ctx.config;
        let mut stats = WorkerStats {
            epochs: Vec::with_capacity(config.epochs),
            tokens_seen: 0,
            tokens_kept: 0,
            pairs: 0,
            last_alpha: config.alpha,
        };
        let mut sentence: Vec<(u32, u32)> = Vec::new();
        let mut negatives: Vec<usize> = Vec::with_capacity(config.negatives);
        let mut scratch: Vec<f32> = Vec::with_capacity(config.dim);
        let mut output = self.shared.output;

        for epoch in 0..config.epochs {
            let (mut loss_sum, mut epoch_pairs) = (0.0, 0u64);

            for doc in self.docs {
                if self.shared.abort.load(Ordering::Relaxed) {
                    return Err(Error::Config("training aborted by another worker".into()));
                }

                sentence.clear();
                for (raw_pos, &w) in doc.iter().enumerate() {
                    let p = self.ctx.keep[w as usize];
                    if p >= 1.0 || self.rng.random::<f64>() < p {
                        sentence.push((w, raw_pos as u32));
                    }
                }
                stats.tokens_seen += doc.len() as u64;
                stats.tokens_kept += sentence.len() as u64;

                for pos in 0..sentence.len() {
                    let (center, raw_pos) = sentence[pos];
                    let alpha = self.alpha(self.unflushed + raw_pos as u64);
                    stats.last_alpha = alpha;
                    let b = self.rng.random_range(1..=config.window);
                    let (lo, hi) = context_bounds(pos, sentence.len(), b);

                    for ctx_pos in (lo..=hi).filter(|&p| p != pos) {
                        let context = sentence[ctx_pos].0 as usize;
                        self.draw_negatives(context, &mut negatives);

                        // SAFETY: the center row comes from the input matrix
                        // and is the only input row borrowed by this thread.
                        let center_row = unsafe { self.shared.input.row(center as usize) };
                        let loss = sgns_update(
                            center_row,
                            &mut output,
                            context,
                            &negatives,
                            alpha as f32,
                            self.ctx.sigmoid,
                            &mut scratch,
                        )
                        .map_err(|e| {
                            self.shared.abort.store(true, Ordering::Relaxed);
                            Error::NonFinite {
                                center: self.ctx.vocab.term(center as usize).to_owned(),
                                output: self.ctx.vocab.term(e.output).to_owned(),
                                epoch,
                                alpha,
                            }
                        })?;
                        loss_sum += loss;
                        epoch_pairs += 1;
                    }
                }

                self.unflushed += doc.len() as u64;
                if self.unflushed >= PROGRESS_FLUSH {
                    self.flush();
                }
            }

            self.flush();
            debug!(
                "worker {} epoch {}: {} pairs, mean loss {:.5}",
                self.id,
                epoch + 1,
                epoch_pairs,
                loss_sum / epoch_pairs.max(1) as f64
            );
            stats.pairs += epoch_pairs;
            stats.epochs.push((loss_sum, epoch_pairs));
        }

        Ok(stats)
    }

    fn flush(&mut self) {
        self.shared
            .progress
            .fetch_add(std::mem::take(&mut self.unflushed), Ordering::Relaxed);
    }

    fn draw_negatives(&mut self, context: usize, out: &mut Vec<usize>) {
        out.clear();
        for _ in 0..self.ctx.config.negatives {
            for _ in 0..NEGATIVE_RETRIES {
                let n = self.ctx.noise.sample(&mut self.rng);
                if n != context {
                    out.push(n);
                    break;
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgns::matrix::dot;

    fn corpus(docs: &[&str]) -> TokenizedCorpus {
        TokenizedCorpus::new(
            docs.iter()
                .map(|d| d.split_whitespace().map(str::to_owned).collect())
                .collect(),
        )
    }

    fn small_config() -> TrainConfig {
        TrainConfig {
            dim: 8,
            window: 2,
            negatives: 3,
            sample: 1.0,
            epochs: 3,
            seed: 11,
            ..Default::default()
        }
    }

    #[test]
    fn context_bounds_truncate_at_document_edges() {
        assert_eq!(context_bounds(0, 5, 2), (0, 2));
        assert_eq!(context_bounds(4, 5, 3), (1, 4));
        assert_eq!(context_bounds(2, 5, 1), (1, 3));
    }

    #[test]
    fn partition_covers_all_documents() {
        let docs: Vec<Vec<u32>> = (0..10).map(|i| vec![0; i + 1]).collect();
        for workers in 1..=12 {
            let parts = partition(&docs, workers);
            assert!(parts.len() <= workers);
            assert_eq!(parts.iter().map(|p| p.len()).sum::<usize>(), docs.len());
        }
        assert_eq!(partition(&[], 3).len(), 1);
    }

    #[test]
    fn two_token_document_trains_both_directions() {
        let config = TrainConfig {
            dim: 4,
            window: 1,
            negatives: 0,
            sample: 1.0,
            epochs: 1,
            seed: 3,
            ..Default::default()
        };
        let trained = train(&corpus(&["a b"]), &config).unwrap();
        assert_eq!(trained.report.pairs, 2);

        // With zeroed context vectors and no negatives, pair (a, b) moves
        // out_b along w_a and pair (b, a) moves out_a along w_b.
        let m = &trained.model;
        let (a, b) = (
            m.vocab().index_of("a").unwrap(),
            m.vocab().index_of("b").unwrap(),
        );
        let parallel = |x: &[f32], y: &[f32]| {
            let c = dot(x, y) / (dot(x, x).sqrt() * dot(y, y).sqrt());
            (c - 1.0).abs() < 1e-5
        };
        assert!(parallel(m.output().row(b), m.input().row(a)));
        assert!(parallel(m.output().row(a), m.input().row(b)));
    }

    #[test]
    fn single_worker_runs_are_bit_identical() {
        let c = corpus(&["the cat sat on the mat", "a dog sat on a log", "the end"]);
        let one = train(&c, &small_config()).unwrap();
        let two = train(&c, &small_config()).unwrap();
        assert_eq!(one.model, two.model);
        assert_eq!(one.report, two.report);

        let other = train(
            &c,
            &TrainConfig {
                seed: 12,
                ..small_config()
            },
        )
        .unwrap();
        assert_ne!(one.model.input(), other.model.input());
    }

    #[test]
    fn initialization_range() {
        let c = corpus(&["x y z"]);
        let config = TrainConfig {
            epochs: 1,
            alpha: 1e-12,
            ..small_config()
        };
        let m = train(&c, &config).unwrap().model;
        let bound = 0.5 / 8.0;
        assert!(m
            .input()
            .as_slice()
            .iter()
            .all(|&x| (-bound..bound).contains(&x)));
    }

    #[test]
    fn learning_rate_decays_to_floor() {
        let c = corpus(&["a b c d e f g h"; 20]);
        let config = TrainConfig {
            epochs: 4,
            ..small_config()
        };
        let report = train(&c, &config).unwrap().report;
        assert!(
            report.final_alpha < config.alpha * 0.05,
            "{}",
            report.final_alpha
        );
        assert!(report.final_alpha >= config.alpha * 1e-4);
        assert_eq!(report.tokens_seen, 4 * 160);
        assert_eq!(report.tokens_kept, report.tokens_seen);
        assert_eq!(report.epoch_loss.len(), 4);
    }

    #[test]
    fn multi_worker_training_is_finite() {
        let docs: Vec<String> = (0..200)
            .map(|i| format!("w{} w{} w{} common w{}", i % 7, i % 11, i % 13, i % 5))
            .collect();
        let refs: Vec<&str> = docs.iter().map(String::as_str).collect();
        let config = TrainConfig {
            workers: 4,
            ..small_config()
        };
        let trained = train(&corpus(&refs), &config).unwrap();
        assert!(trained.model.is_finite());
        assert!(trained.report.pairs > 0);
    }

    #[test]
    fn errors() {
        assert!(matches!(
            train(&TokenizedCorpus::default(), &small_config()),
            Err(Error::EmptyCorpus)
        ));
        let config = TrainConfig {
            max_model_bytes: 10,
            ..small_config()
        };
        assert!(matches!(
            train(&corpus(&["a b"]), &config),
            Err(Error::MemoryLimit {
                required: 128,
                limit: 10
            })
        ));
        let config = TrainConfig {
            window: 0,
            ..small_config()
        };
        assert!(matches!(
            train(&corpus(&["a b"]), &config),
            Err(Error::Config(_))
        ));
    }

    #[test]
    fn divergent_learning_rate_aborts() {
        let c = corpus(&["a b a b a b a b"; 50]);
        let config = TrainConfig {
            alpha: 1e30,
            sigmoid: crate::sgns::SigmoidMode::Exact,
            ..small_config()
        };
        match train(&c, &config) {
            Err(Error::NonFinite { .. }) => {}
            other => panic!("expected non-finite abort, got {other:?}"),
        }
    }
}
