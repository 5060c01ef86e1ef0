use num_traits::Float;

use super::matrix::{axpy, dot, Matrix};
use super::sigmoid::Sigmoid;

/// Mutable access to output (context) vectors by vocabulary index.
pub trait OutputRows<F> {
    fn row_mut(&mut self, idx: usize) -> &mut [F];
}

impl<F: Float> OutputRows<F> for Matrix<F> {
    #[inline]
    fn row_mut(&mut self, idx: usize) -> &mut [F] {
        Matrix::row_mut(self, idx)
    }
}

/// A score that was NaN or infinite.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct NonFiniteScore {
    pub output: usize,
}

/// One negative-sampling update for a (center, context) pair.
///
/// For the positive `context` (label 1) and each negative (label 0), with
/// `s = σ(out_x · center)` and `g = alpha (label - s)`, the output vector
/// moves by `g · center` while `g · out_x` (taken before that move) is
/// accumulated; the center vector receives the accumulated sum at the end.
/// This is plain SGD on
/// `-ln σ(out_c · center) - Σ ln σ(-out_n · center)`.
///
/// `scratch` holds the accumulator and is resized as needed. Returns the
/// objective evaluated before the update.
pub fn sgns_update<F, O>(
    center: &mut [F],
    outputs: &mut O,
    context: usize,
    negatives: &[usize],
    alpha: F,
    sigmoid: &Sigmoid,
    scratch: &mut Vec<F>,
) -> Result<f64, NonFiniteScore>
where
    F: Float,
    O: OutputRows<F> + ?Sized,
{
    scratch.clear();
    scratch.resize(center.len(), F::zero());

    let mut loss = 0.0;
    let targets = std::iter::once((context, true)).chain(negatives.iter().map(|&n| (n, false)));
    for (idx, positive) in targets {
        let out = outputs.row_mut(idx);
        let score = dot(out, center).to_f64().unwrap_or(f64::NAN);
        if !score.is_finite() {
            return Err(NonFiniteScore { output: idx });
        }
        let label = if positive { 1.0 } else { 0.0 };
        let g = alpha * F::from(label - sigmoid.eval(score)).unwrap();
        loss += sigmoid.log_loss(score, positive);

        axpy(scratch, g, out);
        axpy(out, g, center);
    }
    axpy(center, F::one(), scratch);

    Ok(loss)
}

/// The one-pair objective `-ln σ(out_c · w) - Σ ln σ(-out_n · w)`, exact.
pub fn pair_objective<F: Float>(
    center: &[F],
    outputs: &Matrix<F>,
    context: usize,
    negatives: &[usize],
) -> f64 {
    let exact = Sigmoid::exact();
    let score = |i: usize| dot(outputs.row(i), center).to_f64().unwrap();
    exact.log_loss(score(context), true)
        + negatives
            .iter()
            .map(|&n| exact.log_loss(score(n), false))
            .sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sgns::sigmoid::SigmoidMode;

    #[test]
    fn zero_score_positive_pair_uses_half() {
        // out · center = 0, so s = 1/2 and g = alpha / 2.
        let mut center = vec![1.0f64, 2.0];
        let mut outputs = Matrix::from_vec(2, 2, vec![0.0, 0.0, 3.0, -1.0]);
        let mut scratch = Vec::new();
        let alpha = 0.1;
        let loss = sgns_update(
            &mut center,
            &mut outputs,
            0,
            &[],
            alpha,
            &Sigmoid::exact(),
            &mut scratch,
        )
        .unwrap();
        assert!((loss - std::f64::consts::LN_2).abs() < 1e-15);
        // out_0 += g * center(old)
        assert_eq!(outputs.row(0), [0.05, 0.1]);
        // center += g * out_0(old) = 0
        assert_eq!(center, [1.0, 2.0]);
    }

    #[test]
    fn zero_alpha_changes_nothing() {
        let mut center = vec![0.3f32, -0.2, 0.1];
        let mut outputs =
            Matrix::from_vec(3, 3, vec![0.1, 0.2, 0.3, -0.1, 0.5, 0.2, 0.0, 0.4, -0.3]);
        let (c0, o0) = (center.clone(), outputs.clone());
        sgns_update(
            &mut center,
            &mut outputs,
            1,
            &[0, 2],
            0.0,
            &Sigmoid::new(SigmoidMode::Table),
            &mut Vec::new(),
        )
        .unwrap();
        assert_eq!(center, c0);
        assert_eq!(outputs, o0);
    }

    #[test]
    fn non_finite_score_is_reported() {
        let mut center = vec![f64::NAN, 0.0];
        let mut outputs = Matrix::from_vec(1, 2, vec![1.0, 1.0]);
        let err = sgns_update(
            &mut center,
            &mut outputs,
            0,
            &[],
            0.1,
            &Sigmoid::exact(),
            &mut Vec::new(),
        )
        .unwrap_err();
        assert_eq!(err, NonFiniteScore { output: 0 });
    }

    #[test]
    fn small_step_decreases_objective() {
        let mut center = vec![0.2f64, -0.4, 0.1, 0.3];
        let mut outputs = Matrix::from_vec(
            3,
            4,
            vec![
                0.5, 0.1, -0.2, 0.3, -0.3, 0.2, 0.4, 0.1, 0.2, -0.5, 0.1, 0.0,
            ],
        );
        let before = pair_objective(&center, &outputs, 0, &[1, 2]);
        sgns_update(
            &mut center,
            &mut outputs,
            0,
            &[1, 2],
            0.01,
            &Sigmoid::exact(),
            &mut Vec::new(),
        )
        .unwrap();
        let after = pair_objective(&center, &outputs, 0, &[1, 2]);
        assert!(after < before, "{after} >= {before}");
    }
}
