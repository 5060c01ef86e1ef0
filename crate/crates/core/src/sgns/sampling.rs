use rand::distr::Distribution;
use rand::Rng;
use rand_distr::weighted::WeightedAliasIndex;

use crate::corpus::Vocabulary;
use crate::error::{Error, Result};

/// Probability of keeping one occurrence of a term seen `tf` times in a
/// corpus of `total` tokens, under subsampling threshold `t`:
/// `min(1, (sqrt(tf / (t N)) + 1) * t N / tf)`.
pub fn subsample_keep_prob(tf: u64, total: u64, t: f64) -> Result<f64> {
    if tf == 0 {
        return Err(Error::Domain("term frequency must be positive".into()));
    }
    if total < tf {
        return Err(Error::Domain(format!(
            "term frequency {tf} exceeds corpus size {total}"
        )));
    }
    if t.is_nan() || t <= 0.0 {
        return Err(Error::Domain(format!(
            "threshold must be positive, got {t}"
        )));
    }
    let scaled = t * total as f64;
    let f = tf as f64;
    Ok((((f / scaled).sqrt() + 1.0) * scaled / f).min(1.0))
}

/// Sampler for negative examples, drawing index `i` with probability
/// proportional to `count_i ^ power`.
#[derive(Clone, Debug)]
pub struct NoiseTable {
    alias: WeightedAliasIndex<f64>,
    probs: Vec<f64>,
}

impl NoiseTable {
    pub fn new(counts: &[u64], power: f64) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::EmptyVocabulary);
        }
        if counts.contains(&0) {
            return Err(Error::Domain("noise counts must be positive".into()));
        }
        let weights: Vec<f64> = counts.iter().map(|&c| (c as f64).powf(power)).collect();
        let total: f64 = weights.iter().sum();
        let probs = weights.iter().map(|w| w / total).collect();
        let alias = WeightedAliasIndex::new(weights)
            .map_err(|e| Error::Domain(format!("cannot build noise table: {e}")))?;
        Ok(NoiseTable { alias, probs })
    }

    pub fn from_vocab(vocab: &Vocabulary, power: f64) -> Result<Self> {
        Self::new(vocab.counts(), power)
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// Exact normalized probability of drawing `idx`.
    pub fn probability(&self, idx: usize) -> f64 {
        self.probs[idx]
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probs
    }

    #[inline]
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.alias.sample(rng)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn keep_prob_capped_at_threshold() {
        // tf = tN
        assert_eq!(subsample_keep_prob(100, 1_000_000, 1e-4).unwrap(), 1.0);
    }

    #[test]
    fn keep_prob_values() {
        // tN = 100; tf = 100 tN gives (10 + 1) / 100, tf = 4 tN gives 3/4.
        let p = subsample_keep_prob(10_000, 1_000_000, 1e-4).unwrap();
        assert!((p - 0.11).abs() < 1e-12, "{p}");
        let p = subsample_keep_prob(400, 1_000_000, 1e-4).unwrap();
        assert!((p - 0.75).abs() < 1e-12, "{p}");
    }

    #[test]
    fn keep_prob_domain() {
        assert!(subsample_keep_prob(0, 10, 1e-4).is_err());
        assert!(subsample_keep_prob(11, 10, 1e-4).is_err());
        assert!(subsample_keep_prob(1, 10, 0.0).is_err());
    }

    #[test]
    fn unit_threshold_keeps_everything() {
        for tf in 1..=50 {
            assert_eq!(subsample_keep_prob(tf, 50, 1.0).unwrap(), 1.0);
        }
    }

    proptest! {
        #[test]
        fn keep_prob_non_increasing(total in 1u64..10_000_000, a in 1u64..10_000_000, b in 1u64..10_000_000, t in 1e-6f64..1.0) {
            let (lo, hi) = (a.min(b).min(total), a.max(b).min(total));
            let p_lo = subsample_keep_prob(lo, total, t).unwrap();
            let p_hi = subsample_keep_prob(hi, total, t).unwrap();
            prop_assert!(p_hi <= p_lo + 1e-12);
            prop_assert!(p_hi > 0.0 && p_lo <= 1.0);
        }
    }

    #[test]
    fn noise_probabilities() {
        let even = NoiseTable::new(&[1, 1], 0.75).unwrap();
        assert_eq!(even.probabilities(), [0.5, 0.5]);

        let skewed = NoiseTable::new(&[4, 1], 0.75).unwrap();
        let expected = 4f64.powf(0.75) / (4f64.powf(0.75) + 1.0);
        assert!((skewed.probability(0) - expected).abs() < 1e-12);
        assert!((expected - 0.7388).abs() < 1e-4);

        let single = NoiseTable::new(&[1], 0.75).unwrap();
        assert_eq!(single.probability(0), 1.0);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(single.sample(&mut rng), 0);
    }

    #[test]
    fn noise_errors() {
        assert!(matches!(
            NoiseTable::new(&[], 0.75),
            Err(Error::EmptyVocabulary)
        ));
        assert!(NoiseTable::new(&[3, 0], 0.75).is_err());
    }
}
