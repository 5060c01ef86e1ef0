use super::sigmoid::SigmoidMode;
use crate::error::{Error, Result};

/// Skip-gram training parameters.
///
/// Defaults reproduce `-cbow 0 -size 100 -window 10 -negative 5 -hs 0
/// -sample 1e-4 -iter 20 -min-count 1` with the usual skip-gram learning
/// rate of 0.025.
#[derive(Clone, Debug, PartialEq)]
pub struct TrainConfig {
    /// Vector dimension.
    pub dim: usize,
    /// Maximum context offset; the effective window is drawn per position.
    pub window: usize,
    /// Negative samples per positive pair.
    pub negatives: usize,
    /// Subsampling threshold `t`. A value of 1 disables subsampling.
    pub sample: f64,
    pub epochs: usize,
    pub min_count: u64,
    /// Initial learning rate; decays linearly to `alpha * 1e-4`.
    pub alpha: f64,
    pub workers: usize,
    pub seed: u64,
    pub sigmoid: SigmoidMode,
    /// Exponent of the unigram noise distribution.
    pub noise_power: f64,
    /// Upper bound on the bytes taken by both weight matrices.
    pub max_model_bytes: u64,
}

impl Default for TrainConfig {
    fn default() -> Self {
        TrainConfig {
            dim: 100,
            window: 10,
            negatives: 5,
            sample: 1e-4,
            epochs: 20,
            min_count: 1,
            alpha: 0.025,
            workers: 1,
            seed: 1,
            sigmoid: SigmoidMode::Table,
            noise_power: 0.75,
            max_model_bytes: 8 << 30,
        }
    }
}

impl TrainConfig {
    pub fn validate(&self) -> Result<()> {
        let fail = |msg: &str| Err(Error::Config(msg.to_owned()));
        if self.dim == 0 {
            return fail("size must be at least 1");
        }
        if self.window == 0 {
            return fail("window must be at least 1");
        }
        if !(self.sample > 0.0 && self.sample <= 1.0) {
            return fail("sample must lie in (0, 1]");
        }
        if self.epochs == 0 {
            return fail("iter must be at least 1");
        }
        if self.min_count == 0 {
            return fail("min-count must be at least 1");
        }
        if !(self.alpha > 0.0 && self.alpha.is_finite()) {
            return fail("alpha must be positive");
        }
        if self.workers == 0 {
            return fail("threads must be at least 1");
        }
        if !self.noise_power.is_finite() {
            return fail("noise power must be finite");
        }
        Ok(())
    }

    /// Bytes needed for the input and output matrices of `vocab_size` terms.
    pub fn model_bytes(&self, vocab_size: usize) -> u64 {
        2 * vocab_size as u64 * self.dim as u64 * std::mem::size_of::<f32>() as u64
    }
}
