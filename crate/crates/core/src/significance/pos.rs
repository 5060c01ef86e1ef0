//! Part-of-speech overlays from an external tagger's `token<TAB>tag` output.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::io::BufRead;

use serde::{Deserialize, Serialize};

use super::bins::{bin_means, BinSummary, WordStat};
use crate::error::{Error, Result};

/// Tag counts of one term.
pub type TagCounts = BTreeMap<String, u64>;

/// Occurrence tags per lowercase token.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TaggedTokens {
    pub per_term: HashMap<String, TagCounts>,
    /// Occurrences of each tag over the whole input.
    pub tag_totals: TagCounts,
}

/// Reads `token<TAB>tag` lines, one per occurrence. A line without a tab is
/// split at its first run of whitespace. Blank lines are skipped.
pub fn load_tagged_tokens<R: BufRead>(reader: R) -> Result<TaggedTokens> {
    let mut tagged = TaggedTokens::default();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let (token, tag) = trimmed
            .split_once('\t')
            .or_else(|| trimmed.split_once(char::is_whitespace))
            .map(|(a, b)| (a.trim(), b.trim()))
            .filter(|(a, b)| !a.is_empty() && !b.is_empty())
            .ok_or_else(|| Error::parse(i + 1, "expected token<TAB>tag"))?;
        *tagged
            .per_term
            .entry(token.to_lowercase())
            .or_default()
            .entry(tag.to_owned())
            .or_default() += 1;
        *tagged.tag_totals.entry(tag.to_owned()).or_default() += 1;
    }
    Ok(tagged)
}

/// The most frequent tag of `occurrences`. Ties go to the tag with the
/// larger count in `tag_totals`, then to the lexicographically smaller tag.
pub fn assign_majority_tag(occurrences: &TagCounts, tag_totals: &TagCounts) -> Result<String> {
    occurrences
        .iter()
        .filter(|(_, &n)| n > 0)
        .max_by(|(ta, &na), (tb, &nb)| {
            let total = |t: &str| tag_totals.get(t).copied().unwrap_or(0);
            na.cmp(&nb)
                .then_with(|| total(ta).cmp(&total(tb)))
                .then_with(|| tb.cmp(ta))
        })
        .map(|(t, _)| t.clone())
        .ok_or_else(|| Error::Domain("no tags to vote on".into()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WordClass {
    Noun,
    ProperNoun,
    Adjective,
    Verb,
    Adverb,
    Function,
    Other,
}

impl WordClass {
    pub const ALL: [WordClass; 7] = [
        WordClass::Noun,
        WordClass::ProperNoun,
        WordClass::Adjective,
        WordClass::Verb,
        WordClass::Adverb,
        WordClass::Function,
        WordClass::Other,
    ];

    pub fn name(self) -> &'static str {
        match self {
            WordClass::Noun => "noun",
            WordClass::ProperNoun => "proper-noun",
            WordClass::Adjective => "adjective",
            WordClass::Verb => "verb",
            WordClass::Adverb => "adverb",
            WordClass::Function => "function",
            WordClass::Other => "other",
        }
    }
}

impl fmt::Display for WordClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Prepositions, pronouns, determiners, conjunctions, modals and particles.
pub const FUNCTION_TAGS: [&str; 11] = [
    "IN", "PRP", "PRP$", "WP", "WP$", "DT", "PDT", "WDT", "CC", "MD", "RP",
];

/// Word class of a Penn Treebank tag; unknown tags map to `Other`.
pub fn classify_word_class(tag: &str) -> WordClass {
    match tag {
        t if FUNCTION_TAGS.contains(&t) => WordClass::Function,
        "NN" | "NNS" => WordClass::Noun,
        "NNP" | "NNPS" => WordClass::ProperNoun,
        "JJ" | "JJR" | "JJS" => WordClass::Adjective,
        "VB" | "VBD" | "VBG" | "VBN" | "VBP" | "VBZ" => WordClass::Verb,
        "RB" | "RBR" | "RBS" | "WRB" => WordClass::Adverb,
        _ => WordClass::Other,
    }
}

/// Majority tag per term.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PosLexicon {
    tags: HashMap<String, String>,
}

impl PosLexicon {
    pub fn from_tagged(tagged: &TaggedTokens) -> Self {
        let tags = tagged
            .per_term
            .iter()
            .filter_map(|(term, counts)| {
                assign_majority_tag(counts, &tagged.tag_totals)
                    .ok()
                    .map(|tag| (term.clone(), tag))
            })
            .collect();
        PosLexicon { tags }
    }

    pub fn tag(&self, term: &str) -> Option<&str> {
        self.tags.get(term).map(String::as_str)
    }

    pub fn class(&self, term: &str) -> Option<WordClass> {
        self.tag(term).map(classify_word_class)
    }

    pub fn len(&self) -> usize {
        self.tags.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tags.is_empty()
    }
}

/// Bin means computed separately for every word class present among the
/// tagged terms. Untagged terms are left out.
pub fn class_bin_means(stats: &[WordStat]) -> BTreeMap<WordClass, Vec<BinSummary>> {
    let mut by_class: BTreeMap<WordClass, Vec<WordStat>> = BTreeMap::new();
    for s in stats {
        if let Some(tag) = &s.pos {
            by_class
                .entry(classify_word_class(tag))
                .or_default()
                .push(s.clone());
        }
    }
    by_class
        .into_iter()
        .map(|(class, members)| (class, bin_means(&members)))
        .collect()
}
