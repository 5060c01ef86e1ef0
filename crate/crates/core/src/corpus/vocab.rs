use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::stopwords::StopWordList;
use super::tokenize::is_punctuation;
use super::TokenizedCorpus;
use crate::error::{Error, Result};

/// Term types with their raw corpus counts.
///
/// Indices are dense in `[0, len)` and follow descending count, ties broken
/// by lexicographic term order, so index 0 is the most frequent term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vocabulary {
    terms: Vec<String>,
    counts: Vec<u64>,
    index: HashMap<String, usize>,
}

impl Vocabulary {
    /// Counts every token type in `corpus` and keeps those seen at least
    /// `min_count` times.
    pub fn build(corpus: &TokenizedCorpus, min_count: u64) -> Result<Self> {
        if min_count == 0 {
            return Err(Error::Config("min_count must be at least 1".into()));
        }
        if corpus.total_tokens() == 0 {
            return Err(Error::EmptyCorpus);
        }

        let mut counts: HashMap<&str, u64> = HashMap::new();
        for token in corpus.documents().iter().flatten() {
            *counts.entry(token.as_str()).or_default() += 1;
        }

        Ok(Self::from_counts(
            counts
                .into_iter()
                .filter(|&(_, n)| n >= min_count)
                .map(|(t, n)| (t.to_owned(), n)),
        ))
    }

    /// Builds a vocabulary from `(term, count)` pairs in any order.
    ///
    /// Repeated terms have their counts summed.
    pub fn from_counts(entries: impl IntoIterator<Item = (String, u64)>) -> Self {
        let mut merged: HashMap<String, u64> = HashMap::new();
        for (term, count) in entries {
            *merged.entry(term).or_default() += count;
        }
        let mut entries: Vec<(String, u64)> = merged.into_iter().collect();
        entries.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(&b.0)));

        let index = entries
            .iter()
            .enumerate()
            .map(|(i, (t, _))| (t.clone(), i))
            .collect();
        let (terms, counts) = entries.into_iter().unzip();

        Vocabulary {
            terms,
            counts,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn index_of(&self, term: &str) -> Option<usize> {
        self.index.get(term).copied()
    }

    pub fn term(&self, idx: usize) -> &str {
        &self.terms[idx]
    }

    pub fn count(&self, idx: usize) -> u64 {
        self.counts[idx]
    }

    pub fn terms(&self) -> &[String] {
        &self.terms
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Count of `term`, or zero when it is not in the vocabulary.
    pub fn count_of(&self, term: &str) -> u64 {
        self.index_of(term).map_or(0, |i| self.counts[i])
    }

    /// Sum of all retained counts.
    pub fn total_count(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, u64)> + '_ {
        self.terms
            .iter()
            .map(String::as_str)
            .zip(self.counts.iter().copied())
    }

    /// Writes `term<TAB>count` lines in index order.
    pub fn write_tsv<W: Write>(&self, mut writer: W) -> Result<()> {
        for (term, count) in self.iter() {
            writeln!(writer, "{term}\t{count}")?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn read_tsv<R: BufRead>(reader: R) -> Result<Self> {
        let mut entries = Vec::new();
        for (lineno, line) in reader.lines().enumerate() {
            let line = line?;
            if line.is_empty() {
                continue;
            }
            let (term, count) = line
                .split_once('\t')
                .ok_or_else(|| Error::parse(lineno + 1, "expected term<TAB>count"))?;
            let count = count
                .trim()
                .parse::<u64>()
                .map_err(|e| Error::parse(lineno + 1, format!("bad count {count:?}: {e}")))?;
            if term.is_empty() {
                return Err(Error::parse(lineno + 1, "empty term"));
            }
            entries.push((term.to_owned(), count));
        }
        Ok(Self::from_counts(entries))
    }
}

/// The most frequent terms, descending by count with lexicographic ties.
///
/// With `stopwords` given, listed terms are skipped; with `exclude_punct`,
/// single punctuation characters are skipped. A `top_n` beyond the list
/// length returns the whole filtered list.
pub fn term_frequency_list(
    vocab: &Vocabulary,
    stopwords: Option<&StopWordList>,
    exclude_punct: bool,
    top_n: usize,
) -> Vec<(String, u64)> {
    vocab
        .iter()
        .filter(|(t, _)| !stopwords.is_some_and(|s| s.contains(t)))
        .filter(|(t, _)| !(exclude_punct && is_punctuation(t)))
        .take(top_n)
        .map(|(t, n)| (t.to_owned(), n))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn corpus(tokens: &[&str]) -> TokenizedCorpus {
        TokenizedCorpus::new(vec![tokens.iter().map(|s| s.to_string()).collect()])
    }

    #[test]
    fn counts_tokens() {
        let vocab = Vocabulary::build(&corpus(&["a", "b", "a"]), 1).unwrap();
        assert_eq!(vocab.len(), 2);
        assert_eq!(vocab.count_of("a"), 2);
        assert_eq!(vocab.count_of("b"), 1);
        assert_eq!(vocab.index_of("a"), Some(0));
        assert_eq!(vocab.total_count(), 3);
    }

    #[test]
    fn min_count_filters() {
        let vocab = Vocabulary::build(&corpus(&["a", "b", "a"]), 2).unwrap();
        assert_eq!(vocab.terms(), ["a"]);
        assert_eq!(vocab.count_of("b"), 0);
    }

    #[test]
    fn empty_corpus_is_an_error() {
        assert!(matches!(
            Vocabulary::build(&TokenizedCorpus::new(vec![]), 1),
            Err(Error::EmptyCorpus)
        ));
        assert!(matches!(
            Vocabulary::build(&TokenizedCorpus::new(vec![vec![]]), 1),
            Err(Error::EmptyCorpus)
        ));
    }

    #[test]
    fn ties_break_lexicographically() {
        let vocab = Vocabulary::build(&corpus(&["c", "b", "a", "b", "c"]), 1).unwrap();
        assert_eq!(vocab.terms(), ["b", "c", "a"]);
    }

    #[test]
    fn frequency_list_filters() {
        let vocab = Vocabulary::from_counts([
            ("the".to_string(), 10),
            (".".to_string(), 9),
            ("theory".to_string(), 5),
            ("also".to_string(), 4),
            ("field".to_string(), 4),
        ]);
        let stop = StopWordList::english();

        let filtered = term_frequency_list(&vocab, Some(&stop), true, 2);
        assert_eq!(
            filtered,
            [("theory".to_string(), 5), ("also".to_string(), 4)]
        );

        let raw = term_frequency_list(&vocab, None, false, 1);
        assert_eq!(raw, [("the".to_string(), 10)]);

        let all = term_frequency_list(&vocab, Some(&stop), true, 100);
        assert_eq!(all.len(), 3);
        assert!(term_frequency_list(&Vocabulary::from_counts([]), None, false, 5).is_empty());
    }

    #[test]
    fn tsv_round_trip() {
        let vocab = Vocabulary::build(&corpus(&["x", "y", "x", ")"]), 1).unwrap();
        let mut buf = Vec::new();
        vocab.write_tsv(&mut buf).unwrap();
        assert_eq!(
            String::from_utf8(buf.clone()).unwrap(),
            "x\t2\n)\t1\ny\t1\n"
        );
        assert_eq!(Vocabulary::read_tsv(buf.as_slice()).unwrap(), vocab);
    }

    #[test]
    fn tsv_errors_name_line() {
        let err = Vocabulary::read_tsv("a\t1\nb 2\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Vocabulary::read_tsv("a\tx\n".as_bytes()).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }
}
