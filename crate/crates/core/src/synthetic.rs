//! Synthetic corpora with planted words, for checking how vector length
//! responds to context consistency and frequency.
//!
//! Filler text is drawn from a Zipf-distributed vocabulary `w0, w1, ...`.
//! Planted words are inserted either inside a fixed phrase (the word in the
//! middle of two context words on each side) or as single tokens at random
//! places.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Zipf};

use crate::corpus::TokenizedCorpus;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub enum Placement {
    /// Always as the middle word of `[c0, c1, term, c2, c3]`.
    FixedContext([String; 4]),
    /// Anywhere, uniformly.
    Scattered,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Plant {
    pub term: String,
    pub count: usize,
    pub placement: Placement,
}

impl Plant {
    pub fn fixed(term: &str, count: usize, context: [&str; 4]) -> Self {
        Plant {
            term: term.to_owned(),
            count,
            placement: Placement::FixedContext(context.map(str::to_owned)),
        }
    }

    pub fn scattered(term: &str, count: usize) -> Self {
        Plant {
            term: term.to_owned(),
            count,
            placement: Placement::Scattered,
        }
    }

    fn tokens_per_use(&self) -> usize {
        match self.placement {
            Placement::FixedContext(_) => 5,
            Placement::Scattered => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SyntheticSpec {
    /// Exact token count of the generated corpus.
    pub total_tokens: usize,
    pub filler_vocab: usize,
    pub zipf_exponent: f64,
    /// Filler tokens per document; planted units are added on top.
    pub doc_len: usize,
    pub plants: Vec<Plant>,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        SyntheticSpec {
            total_tokens: 100_000,
            filler_vocab: 5_000,
            zipf_exponent: 1.0,
            doc_len: 100,
            plants: Vec::new(),
        }
    }
}

/// Generates the corpus described by `spec`, deterministically for `seed`.
pub fn generate(spec: &SyntheticSpec, seed: u64) -> Result<TokenizedCorpus> {
    let planted: usize = spec
        .plants
        .iter()
        .map(|p| p.count * p.tokens_per_use())
        .sum();
    if planted > spec.total_tokens {
        return Err(Error::Config(format!(
            "{planted} planted tokens exceed the corpus size {}",
            spec.total_tokens
        )));
    }
    if spec.filler_vocab == 0 || spec.doc_len == 0 {
        return Err(Error::Config(
            "filler vocabulary and document length must be positive".into(),
        ));
    }
    let zipf = Zipf::new(spec.filler_vocab as f64, spec.zipf_exponent)
        .map_err(|e| Error::Config(format!("bad Zipf parameters: {e}")))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let filler = spec.total_tokens - planted;
    let n_docs = filler.div_ceil(spec.doc_len).max(1);
    let docs: Vec<Vec<String>> = (0..n_docs)
        .map(|d| {
            let len = filler / n_docs + usize::from(d < filler % n_docs);
            (0..len)
                .map(|_| format!("w{}", zipf.sample(&mut rng) as u64 - 1))
                .collect()
        })
        .collect();

    let mut units: Vec<Vec<String>> = Vec::new();
    for plant in &spec.plants {
        let unit = match &plant.placement {
            Placement::FixedContext([a, b, c, d]) => {
                vec![
                    a.clone(),
                    b.clone(),
                    plant.term.clone(),
                    c.clone(),
                    d.clone(),
                ]
            }
            Placement::Scattered => vec![plant.term.clone()],
        };
        units.extend(std::iter::repeat_n(unit, plant.count));
    }
    units.shuffle(&mut rng);
    // Insertion points index the filler tokens, so planted units never
    // split one another.
    let mut inserts: Vec<Vec<(usize, Vec<String>)>> = vec![Vec::new(); n_docs];
    for unit in units {
        let d = rng.random_range(0..n_docs);
        let at = rng.random_range(0..=docs[d].len());
        inserts[d].push((at, unit));
    }
    let docs = docs
        .into_iter()
        .zip(inserts)
        .map(|(filler, mut ins)| {
            ins.sort_by_key(|(at, _)| *at);
            let mut ins = ins.into_iter().peekable();
            let mut doc = Vec::with_capacity(filler.len());
            for (i, tok) in filler.into_iter().enumerate() {
                while let Some((_, unit)) = ins.next_if(|(at, _)| *at == i) {
                    doc.extend(unit);
                }
                doc.push(tok);
            }
            doc.extend(ins.flat_map(|(_, unit)| unit));
            doc
        })
        .collect();

    Ok(TokenizedCorpus::new(docs))
}
