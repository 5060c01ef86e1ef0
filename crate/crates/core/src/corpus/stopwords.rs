use std::collections::HashSet;
use std::io::BufRead;

use crate::error::Result;

const ENGLISH: &str = include_str!("../../data/stopwords_en.txt");

/// An immutable set of lowercase function words.
#[derive(Clone, Debug)]
pub struct StopWordList {
    terms: HashSet<String>,
}

impl StopWordList {
    /// The bundled 127-word English list. It deliberately lacks "also".
    pub fn english() -> Self {
        Self::from_terms(ENGLISH.lines())
    }

    /// One term per line; blank lines and `#` comments are ignored.
    pub fn read<R: BufRead>(reader: R) -> Result<Self> {
        let lines = reader.lines().collect::<Result<Vec<_>, _>>()?;
        Ok(Self::from_terms(lines.iter().map(String::as_str)))
    }

    fn from_terms<'a>(terms: impl IntoIterator<Item = &'a str>) -> Self {
        let terms = terms
            .into_iter()
            .map(str::trim)
            .filter(|t| !t.is_empty() && !t.starts_with('#'))
            .map(str::to_lowercase)
            .collect();
        StopWordList { terms }
    }

    pub fn contains(&self, term: &str) -> bool {
        self.terms.contains(term)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}
