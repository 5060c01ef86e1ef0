//! In-browser demo of word vector length as a significance measure.
//!
//! A [`Demo`] trains a small skip-gram model, either on pasted text or on a
//! synthetic corpus with planted words, and answers three queries as JSON:
//! the length–frequency plane, the cosine-similarity histogram and the
//! longest vectors of a frequency bin.

use serde::Serialize;
use wasm_bindgen::prelude::*;
use wordsig::corpus::{RawDocument, TokenizedCorpus};
use wordsig::sgns::{train, EmbeddingModel, TrainConfig};
use wordsig::significance::{
    bin_means, mean_vector, similarity_histogram, top_by_length_in_bin, word_stats, ExplorerData,
    ExplorerMeta, WordStat,
};
use wordsig::synthetic::{generate, Plant, SyntheticSpec};

/// Words planted by [`Demo::planted`]: a fixed-context word, two rarer
/// words in the same context and a word scattered at random.
pub const PLANTED: [&str; 4] = ["conference", "school", "workshop", "perhaps"];

#[derive(Serialize)]
struct Histogram<'a> {
    edges: &'a [f64],
    counts: &'a [u64],
    mean: f64,
    pairs: u64,
}

#[derive(Serialize)]
struct Ranked<'a> {
    t: &'a str,
    tf: u64,
    v: f64,
}

/// Training parameters exposed in the page.
#[wasm_bindgen]
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    pub dim: usize,
    pub window: usize,
    pub epochs: usize,
    pub sample: f64,
    pub seed: u64,
}

#[wasm_bindgen]
impl Settings {
    #[wasm_bindgen(constructor)]
    pub fn new(dim: usize, window: usize, epochs: usize, sample: f64, seed: u64) -> Settings {
        Settings {
            dim,
            window,
            epochs,
            sample,
            seed,
        }
    }
}

impl Settings {
    fn config(&self) -> TrainConfig {
        TrainConfig {
            dim: self.dim,
            window: self.window,
            epochs: self.epochs,
            sample: self.sample,
            seed: self.seed,
            workers: 1,
            ..TrainConfig::default()
        }
    }
}

#[wasm_bindgen]
pub struct Demo {
    name: String,
    model: EmbeddingModel,
    stats: Vec<WordStat>,
}

impl Demo {
    /// Trains on `text`, one document per non-empty line.
    pub fn train_text(text: &str, settings: Settings) -> wordsig::Result<Demo> {
        let docs: Vec<RawDocument> = text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .enumerate()
            .map(|(i, l)| RawDocument::new(i.to_string(), l))
            .collect();
        Self::from_corpus("pasted text", &TokenizedCorpus::from_raw(&docs), settings)
    }

    /// Trains on a Zipf-distributed synthetic corpus of `tokens` tokens
    /// with the [`PLANTED`] words inserted.
    pub fn train_planted(tokens: usize, settings: Settings) -> wordsig::Result<Demo> {
        let context = ["the", "international", "on", "physics"];
        let spec = SyntheticSpec {
            total_tokens: tokens,
            plants: vec![
                Plant::fixed(PLANTED[0], tokens / 1000, context),
                Plant::fixed(PLANTED[1], tokens / 2000, context),
                Plant::fixed(PLANTED[2], tokens / 8000, context),
                Plant::scattered(PLANTED[3], tokens / 1000),
            ],
            ..SyntheticSpec::default()
        };
        let corpus = generate(&spec, settings.seed)?;
        Self::from_corpus("synthetic corpus", &corpus, settings)
    }

    fn from_corpus(
        name: &str,
        corpus: &TokenizedCorpus,
        settings: Settings,
    ) -> wordsig::Result<Demo> {
        let model = train(corpus, &settings.config())?.model;
        let stats = word_stats(&model, None);
        Ok(Demo {
            name: name.to_owned(),
            model,
            stats,
        })
    }

    pub fn plane(&self) -> wordsig::Result<String> {
        let meta = ExplorerMeta {
            corpus_name: self.name.clone(),
            dim: self.model.dim(),
            total_tokens: self.model.vocab().total_count(),
            mean_vec_len: mean_vector(&self.model, 1)?.1,
            min_tf: 1,
        };
        let data = ExplorerData::new(meta, &self.stats, &bin_means(&self.stats));
        Ok(serde_json::to_string(&data)?)
    }

    pub fn histogram(
        &self,
        min_tf: u64,
        pairs: u64,
        bins: usize,
        seed: u64,
    ) -> wordsig::Result<String> {
        let h = similarity_histogram(&self.model, pairs, min_tf, bins.max(1), seed)?;
        Ok(serde_json::to_string(&Histogram {
            edges: &h.edges,
            counts: &h.counts,
            mean: h.mean,
            pairs: h.sample_count,
        })?)
    }

    pub fn top_in_bin(&self, k: u32, n: usize) -> wordsig::Result<String> {
        let top = top_by_length_in_bin(&self.stats, k, n);
        let ranked: Vec<Ranked> = top
            .iter()
            .map(|s| Ranked {
                t: &s.term,
                tf: s.tf,
                v: s.v,
            })
            .collect();
        Ok(serde_json::to_string(&ranked)?)
    }
}

fn js(e: wordsig::Error) -> JsError {
    JsError::new(&e.to_string())
}

#[wasm_bindgen]
impl Demo {
    #[wasm_bindgen(js_name = fromText)]
    pub fn from_text(text: &str, settings: &Settings) -> Result<Demo, JsError> {
        Self::train_text(text, *settings).map_err(js)
    }

    #[wasm_bindgen(js_name = planted)]
    pub fn planted(tokens: usize, settings: &Settings) -> Result<Demo, JsError> {
        Self::train_planted(tokens, *settings).map_err(js)
    }

    /// Explorer data: every term with its frequency and vector length, plus
    /// the frequency-bin means.
    #[wasm_bindgen(js_name = planeJson)]
    pub fn plane_json(&self) -> Result<String, JsError> {
        self.plane().map_err(js)
    }

    /// Cosine similarities of random term pairs with `tf >= min_tf`.
    #[wasm_bindgen(js_name = histogramJson)]
    pub fn histogram_json(
        &self,
        min_tf: u64,
        pairs: u64,
        bins: usize,
        seed: u64,
    ) -> Result<String, JsError> {
        self.histogram(min_tf, pairs, bins, seed).map_err(js)
    }

    /// The `n` longest vectors among terms of frequency bin `k`.
    #[wasm_bindgen(js_name = topInBinJson)]
    pub fn top_in_bin_json(&self, k: u32, n: usize) -> Result<String, JsError> {
        self.top_in_bin(k, n).map_err(js)
    }

    #[wasm_bindgen(js_name = vocabSize)]
    pub fn vocab_size(&self) -> usize {
        self.model.len()
    }
}
