use std::io::Write;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::sgns::EmbeddingModel;

/// L2 norm, accumulated in `f64`.
pub fn norm(v: &[f32]) -> f64 {
    v.iter().map(|&x| x as f64 * x as f64).sum::<f64>().sqrt()
}

/// Length of the word vector of `term`.
pub fn vector_length(model: &EmbeddingModel, term: &str) -> Result<f64> {
    model.vector_of(term).map(norm)
}

/// `a·b / (|a| |b|)`, clamped into [-1, 1].
pub fn cosine_similarity(a: &[f32], b: &[f32]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::Domain(format!(
            "dimension mismatch: {} vs {}",
            a.len(),
            b.len()
        )));
    }
    let (na, nb) = (norm(a), norm(b));
    if na == 0.0 || nb == 0.0 {
        return Err(Error::Domain("cosine of a zero-length vector".into()));
    }
    let dot: f64 = a.iter().zip(b).map(|(&x, &y)| x as f64 * y as f64).sum();
    Ok((dot / (na * nb)).clamp(-1.0, 1.0))
}

/// Histogram of cosine similarities over [-1, 1].
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityHistogram {
    /// `bins + 1` equally spaced edges from -1 to 1.
    pub edges: Vec<f64>,
    pub counts: Vec<u64>,
    pub mean: f64,
    /// Pairs that entered the histogram.
    pub sample_count: u64,
    /// Draws discarded as self-pairs or zero-length vectors.
    pub rejected: u64,
    pub min_tf: u64,
}

impl SimilarityHistogram {
    fn new(bins: usize, min_tf: u64) -> Self {
        let edges = (0..=bins)
            .map(|i| -1.0 + 2.0 * i as f64 / bins as f64)
            .collect();
        SimilarityHistogram {
            edges,
            counts: vec![0; bins],
            mean: 0.0,
            sample_count: 0,
            rejected: 0,
            min_tf,
        }
    }

    fn bin_of(&self, c: f64) -> usize {
        let bins = self.counts.len();
        (((c + 1.0) / 2.0 * bins as f64) as usize).min(bins - 1)
    }

    /// `# mean=<m> pairs=<n> min_tf=<k>` followed by `lo,hi,count` lines.
    pub fn write_csv<W: Write>(&self, mut writer: W) -> Result<()> {
        writeln!(
            writer,
            "# mean={} pairs={} min_tf={}",
            self.mean, self.sample_count, self.min_tf
        )?;
        for (i, count) in self.counts.iter().enumerate() {
            writeln!(writer, "{},{},{}", self.edges[i], self.edges[i + 1], count)?;
        }
        writer.flush()?;
        Ok(())
    }
}

/// Cosine similarities of `pairs` random term pairs.
///
/// Both terms of a pair are drawn uniformly, with replacement, from the
/// terms with `tf >= min_tf`, irrespective of their frequency. Self-pairs
/// and pairs involving a zero vector are counted as rejected rather than
/// redrawn.
pub fn similarity_histogram(
    model: &EmbeddingModel,
    pairs: u64,
    min_tf: u64,
    bins: usize,
    seed: u64,
) -> Result<SimilarityHistogram> {
    let eligible = eligible_terms(model, min_tf);
    similarity_histogram_over(model, &eligible, pairs, bins, seed, min_tf)
}

/// As [`similarity_histogram`], restricted to terms whose count lies in
/// `[min_tf, max_tf]`.
pub fn similarity_histogram_in_range(
    model: &EmbeddingModel,
    pairs: u64,
    (min_tf, max_tf): (u64, u64),
    bins: usize,
    seed: u64,
) -> Result<SimilarityHistogram> {
    let eligible: Vec<usize> = eligible_terms(model, min_tf)
        .into_iter()
        .filter(|&i| model.vocab().count(i) <= max_tf)
        .collect();
    similarity_histogram_over(model, &eligible, pairs, bins, seed, min_tf)
}

fn similarity_histogram_over(
    model: &EmbeddingModel,
    eligible: &[usize],
    pairs: u64,
    bins: usize,
    seed: u64,
    min_tf: u64,
) -> Result<SimilarityHistogram> {
    if bins == 0 {
        return Err(Error::Config("histogram needs at least one bin".into()));
    }
    if eligible.len() < 2 {
        return Err(Error::TooFewTerms {
            needed: 2,
            found: eligible.len(),
        });
    }
    let norms: Vec<f64> = eligible.iter().map(|&i| norm(model.vector(i))).collect();

    let mut hist = SimilarityHistogram::new(bins, min_tf);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sum = 0.0;
    for _ in 0..pairs {
        let a = rng.random_range(0..eligible.len());
        let b = rng.random_range(0..eligible.len());
        if a == b || norms[a] == 0.0 || norms[b] == 0.0 {
            hist.rejected += 1;
            continue;
        }
        let (va, vb) = (model.vector(eligible[a]), model.vector(eligible[b]));
        let dot: f64 = va.iter().zip(vb).map(|(&x, &y)| x as f64 * y as f64).sum();
        let c = (dot / (norms[a] * norms[b])).clamp(-1.0, 1.0);
        let bin = hist.bin_of(c);
        hist.counts[bin] += 1;
        hist.sample_count += 1;
        sum += c;
    }
    if hist.sample_count > 0 {
        hist.mean = sum / hist.sample_count as f64;
    }
    Ok(hist)
}

fn eligible_terms(model: &EmbeddingModel, min_tf: u64) -> Vec<usize> {
    (0..model.len())
        .filter(|&i| model.vocab().count(i) >= min_tf)
        .collect()
}

/// Unweighted mean of the word vectors of all terms with `tf >= min_tf`,
/// with its length.
pub fn mean_vector(model: &EmbeddingModel, min_tf: u64) -> Result<(Vec<f64>, f64)> {
    let mut sum = vec![0.0; model.dim()];
    let mut n = 0usize;
    for i in eligible_terms(model, min_tf) {
        for (s, &x) in sum.iter_mut().zip(model.vector(i)) {
            *s += x as f64;
        }
        n += 1;
    }
    if n == 0 {
        return Err(Error::TooFewTerms {
            needed: 1,
            found: 0,
        });
    }
    for s in &mut sum {
        *s /= n as f64;
    }
    let len = sum.iter().map(|x| x * x).sum::<f64>().sqrt();
    Ok((sum, len))
}
