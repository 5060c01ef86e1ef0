//! Text vector format: a `V d` header line, then one line per term holding
//! the term and its `d` components, separated by single spaces.
//!
//! Components are written in the shortest decimal form that parses back to
//! the same `f32`, so a save/load round trip is lossless.

use std::collections::HashSet;
use std::io::{BufRead, Write};

use super::matrix::Matrix;
use super::model::EmbeddingModel;
use crate::corpus::Vocabulary;
use crate::error::{Error, Result};

/// Writes the word vectors of `model` in vocabulary index order.
pub fn save_vectors<W: Write>(model: &EmbeddingModel, mut writer: W) -> Result<()> {
    writeln!(writer, "{} {}", model.len(), model.dim())?;
    let mut line = String::new();
    for (term, row) in model.vocab().terms().iter().zip(model.input().iter_rows()) {
        line.clear();
        line.push_str(term);
        for x in row {
            line.push(' ');
            line.push_str(&x.to_string());
        }
        line.push('\n');
        writer.write_all(line.as_bytes())?;
    }
    writer.flush()?;
    Ok(())
}

/// Terms and vectors read from a vector file, in file order.
#[derive(Clone, Debug, PartialEq)]
pub struct WordVectors {
    pub terms: Vec<String>,
    pub vectors: Matrix<f32>,
}

impl WordVectors {
    /// Pairs the vectors with the term counts of `vocab`.
    ///
    /// Both must cover exactly the same terms; otherwise the error names the
    /// first term (in vector-file order, then vocabulary order) found in
    /// only one of them. Context vectors are not part of the file and start
    /// out zeroed.
    pub fn into_model(self, vocab: Vocabulary) -> Result<EmbeddingModel> {
        for term in &self.terms {
            if vocab.index_of(term).is_none() {
                return Err(Error::TermMismatch(term.clone()));
            }
        }
        if self.terms.len() != vocab.len() {
            let present: HashSet<&str> = self.terms.iter().map(String::as_str).collect();
            let missing = vocab
                .terms()
                .iter()
                .find(|t| !present.contains(t.as_str()))
                .expect("vocabulary has a term missing from the vectors");
            return Err(Error::TermMismatch(missing.clone()));
        }

        let dim = self.vectors.cols();
        let mut input = Matrix::zeros(vocab.len(), dim);
        for (term, row) in self.terms.iter().zip(self.vectors.iter_rows()) {
            let idx = vocab.index_of(term).expect("checked above");
            input.row_mut(idx).copy_from_slice(row);
        }
        EmbeddingModel::from_input(vocab, input)
    }
}

pub fn load_vectors<R: BufRead>(reader: R) -> Result<WordVectors> {
    let mut lines = reader.lines();
    let header = lines
        .next()
        .ok_or_else(|| Error::parse(1, "missing header"))??;
    let mut fields = header.split_whitespace();
    let mut header_field = |name: &str| -> Result<usize> {
        fields
            .next()
            .ok_or_else(|| Error::parse(1, format!("header lacks {name}")))?
            .parse()
            .map_err(|e| Error::parse(1, format!("bad {name} in header: {e}")))
    };
    let rows = header_field("vocabulary size")?;
    let dim = header_field("dimension")?;
    if fields.next().is_some() {
        return Err(Error::parse(1, "header must be \"V d\""));
    }

    let mut terms = Vec::with_capacity(rows);
    let mut seen = HashSet::with_capacity(rows);
    let mut data = Vec::with_capacity(rows.saturating_mul(dim));
    for (i, line) in lines.enumerate() {
        let lineno = i + 2;
        let line = line?;
        if line.is_empty() {
            continue;
        }
        if terms.len() == rows {
            return Err(Error::parse(lineno, format!("more than {rows} vectors")));
        }
        let mut parts = line.split(' ').filter(|p| !p.is_empty());
        let term = parts
            .next()
            .ok_or_else(|| Error::parse(lineno, "empty line"))?;
        if !seen.insert(term.to_owned()) {
            return Err(Error::parse(lineno, format!("duplicate term {term:?}")));
        }
        let before = data.len();
        for part in parts {
            let x: f32 = part
                .parse()
                .map_err(|_| Error::parse(lineno, format!("non-numeric component {part:?}")))?;
            data.push(x);
        }
        let got = data.len() - before;
        if got != dim {
            return Err(Error::parse(
                lineno,
                format!("expected {dim} components, found {got}"),
            ));
        }
        terms.push(term.to_owned());
    }
    if terms.len() != rows {
        return Err(Error::parse(
            terms.len() + 2,
            format!("expected {rows} vectors, found {}", terms.len()),
        ));
    }

    Ok(WordVectors {
        terms,
        vectors: Matrix::from_vec(rows, dim, data),
    })
}
