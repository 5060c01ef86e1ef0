use super::matrix::Matrix;
use super::sigmoid::Sigmoid;
use super::step::sgns_update;
use crate::corpus::Vocabulary;
use crate::error::{Error, Result};

/// Trained skip-gram weights.
///
/// Row `i` of [`input`](Self::input) is the word vector of vocabulary index
/// `i`; [`output`](Self::output) holds the context vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct EmbeddingModel {
    vocab: Vocabulary,
    input: Matrix<f32>,
    output: Matrix<f32>,
}

impl EmbeddingModel {
    pub fn new(vocab: Vocabulary, input: Matrix<f32>, output: Matrix<f32>) -> Result<Self> {
        if input.rows() != vocab.len() || output.rows() != vocab.len() {
            return Err(Error::Config(format!(
                "matrix rows ({}, {}) do not match vocabulary size {}",
                input.rows(),
                output.rows(),
                vocab.len()
            )));
        }
        if input.cols() != output.cols() {
            return Err(Error::Config("input and output dimensions differ".into()));
        }
        Ok(EmbeddingModel {
            vocab,
            input,
            output,
        })
    }

    /// Model with the given word vectors and zeroed context vectors.
    pub fn from_input(vocab: Vocabulary, input: Matrix<f32>) -> Result<Self> {
        let output = Matrix::zeros(input.rows(), input.cols());
        Self::new(vocab, input, output)
    }

    pub fn vocab(&self) -> &Vocabulary {
        &self.vocab
    }

    pub fn dim(&self) -> usize {
        self.input.cols()
    }

    pub fn len(&self) -> usize {
        self.vocab.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vocab.is_empty()
    }

    pub fn input(&self) -> &Matrix<f32> {
        &self.input
    }

    pub fn output(&self) -> &Matrix<f32> {
        &self.output
    }

    pub fn vector(&self, idx: usize) -> &[f32] {
        self.input.row(idx)
    }

    pub fn vector_of(&self, term: &str) -> Result<&[f32]> {
        self.vocab
            .index_of(term)
            .map(|i| self.input.row(i))
            .ok_or_else(|| Error::UnknownTerm(term.to_owned()))
    }

    pub fn is_finite(&self) -> bool {
        self.input.is_finite() && self.output.is_finite()
    }

    /// Applies one negative-sampling update in place and returns the pair
    /// objective before the update.
    pub fn sgns_step(
        &mut self,
        center: usize,
        context: usize,
        negatives: &[usize],
        alpha: f32,
        sigmoid: &Sigmoid,
    ) -> Result<f64> {
        let mut scratch = Vec::with_capacity(self.dim());
        sgns_update(
            self.input.row_mut(center),
            &mut self.output,
            context,
            negatives,
            alpha,
            sigmoid,
            &mut scratch,
        )
        .map_err(|e| Error::NonFinite {
            center: self.vocab.term(center).to_owned(),
            output: self.vocab.term(e.output).to_owned(),
            epoch: 0,
            alpha: alpha as f64,
        })
    }
}
