const TABLE_SLOTS: usize = 1000;
const MAX_SCORE: f64 = 6.0;

/// How the logistic function is evaluated during training.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SigmoidMode {
    /// Precomputed table over [-6, 6], linearly interpolated, with scores
    /// clamped into that range.
    #[default]
    Table,
    /// `1 / (1 + exp(-x))` evaluated directly.
    Exact,
}

/// Logistic function and its log-loss in either table or exact form.
#[derive(Clone, Debug)]
pub struct Sigmoid {
    mode: SigmoidMode,
    sigma: Vec<f64>,
    softplus: Vec<f64>,
}

impl Sigmoid {
    pub fn new(mode: SigmoidMode) -> Self {
        let (sigma, softplus) = match mode {
            SigmoidMode::Exact => (Vec::new(), Vec::new()),
            SigmoidMode::Table => (0..=TABLE_SLOTS)
                .map(|i| {
                    let x = (i as f64 / TABLE_SLOTS as f64 * 2.0 - 1.0) * MAX_SCORE;
                    (exact_sigmoid(x), softplus(x))
                })
                .unzip(),
        };
        Sigmoid {
            mode,
            sigma,
            softplus,
        }
    }

    pub fn exact() -> Self {
        Self::new(SigmoidMode::Exact)
    }

    pub fn mode(&self) -> SigmoidMode {
        self.mode
    }

    #[inline]
    pub fn eval(&self, x: f64) -> f64 {
        match self.mode {
            SigmoidMode::Exact => exact_sigmoid(x),
            SigmoidMode::Table => interpolate(&self.sigma, x.clamp(-MAX_SCORE, MAX_SCORE)),
        }
    }

    /// Negative log-likelihood of `label` given score `x`:
    /// `-ln σ(x)` for a positive pair, `-ln σ(-x)` for a negative one.
    #[inline]
    pub fn log_loss(&self, x: f64, positive: bool) -> f64 {
        let z = if positive { -x } else { x };
        match self.mode {
            SigmoidMode::Table if z.abs() <= MAX_SCORE => interpolate(&self.softplus, z),
            _ => softplus(z),
        }
    }
}

#[inline]
fn interpolate(table: &[f64], x: f64) -> f64 {
    let pos = (x + MAX_SCORE) * (TABLE_SLOTS as f64 / (2.0 * MAX_SCORE));
    let i = (pos as usize).min(TABLE_SLOTS - 1);
    let frac = pos - i as f64;
    table[i] + frac * (table[i + 1] - table[i])
}

pub fn exact_sigmoid(x: f64) -> f64 {
    1.0 / (1.0 + (-x).exp())
}

/// `ln(1 + e^z)` without overflow.
fn softplus(z: f64) -> f64 {
    if z > 0.0 {
        z + (-z).exp().ln_1p()
    } else {
        z.exp().ln_1p()
    }
}
