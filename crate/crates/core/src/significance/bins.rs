use serde::{Deserialize, Serialize};

use super::pos::PosLexicon;
use super::similarity::norm;
use crate::error::{Error, Result};
use crate::sgns::EmbeddingModel;

/// One point of the v–tf plane.
#[derive(Clone, Debug, PartialEq)]
pub struct WordStat {
    pub term: String,
    pub tf: u64,
    /// Length of the word vector.
    pub v: f64,
    pub pos: Option<String>,
}

/// Per-term statistics in vocabulary order. Tags come from `lexicon` when
/// given; untagged terms get `None`.
pub fn word_stats(model: &EmbeddingModel, lexicon: Option<&PosLexicon>) -> Vec<WordStat> {
    model
        .vocab()
        .iter()
        .enumerate()
        .map(|(i, (term, tf))| WordStat {
            term: term.to_owned(),
            tf,
            v: norm(model.vector(i)),
            pos: lexicon.and_then(|l| l.tag(term)).map(str::to_owned),
        })
        .collect()
}

/// Index `k` of the frequency bin `[2^(k-1), 2^k - 1]` holding `tf`.
pub fn bin_index(tf: u64) -> Result<u32> {
    if tf == 0 {
        return Err(Error::Domain("term frequency must be positive".into()));
    }
    Ok(u64::BITS - tf.leading_zeros())
}

/// Inclusive frequency range `[2^(k-1), 2^k - 1]` of bin `k >= 1`.
pub fn bin_range(k: u32) -> (u64, u64) {
    assert!((1..=64).contains(&k), "bin index out of range: {k}");
    let lo = 1u64 << (k - 1);
    (lo, lo.wrapping_mul(2).wrapping_sub(1))
}

/// Mean vector length of the terms in one frequency bin.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BinSummary {
    pub k: u32,
    pub lo: u64,
    pub hi: u64,
    #[serde(rename = "n")]
    pub members: usize,
    pub mean_v: f64,
}

/// Summaries of all non-empty bins, ascending in `k`. Terms with `tf = 0`
/// are ignored.
pub fn bin_means(stats: &[WordStat]) -> Vec<BinSummary> {
    let mut acc: Vec<(usize, f64)> = Vec::new();
    for s in stats {
        let Ok(k) = bin_index(s.tf) else { continue };
        let k = k as usize;
        if acc.len() < k {
            acc.resize(k, (0, 0.0));
        }
        acc[k - 1].0 += 1;
        acc[k - 1].1 += s.v;
    }
    acc.into_iter()
        .enumerate()
        .filter(|(_, (n, _))| *n > 0)
        .map(|(i, (n, sum))| {
            let k = i as u32 + 1;
            let (lo, hi) = bin_range(k);
            BinSummary {
                k,
                lo,
                hi,
                members: n,
                mean_v: sum / n as f64,
            }
        })
        .collect()
}

/// The `n` members of bin `k` with the longest vectors, longest first, ties
/// in term order.
pub fn top_by_length_in_bin(stats: &[WordStat], k: u32, n: usize) -> Vec<WordStat> {
    let mut members: Vec<&WordStat> = stats
        .iter()
        .filter(|s| bin_index(s.tf).ok() == Some(k))
        .collect();
    members.sort_by(|a, b| b.v.total_cmp(&a.v).then_with(|| a.term.cmp(&b.term)));
    members.into_iter().take(n).cloned().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn stat(term: &str, tf: u64, v: f64) -> WordStat {
        WordStat {
            term: term.into(),
            tf,
            v,
            pos: None,
        }
    }

    #[test]
    fn bin_index_examples() {
        assert_eq!(bin_index(1).unwrap(), 1);
        assert_eq!(bin_index(37).unwrap(), 6);
        assert_eq!(bin_range(6), (32, 63));
        assert_eq!(bin_index(2465).unwrap(), 12);
        assert_eq!(bin_range(12), (2048, 4095));
        assert!(bin_index(0).is_err());
        assert_eq!(bin_index(u64::MAX).unwrap(), 64);
        assert_eq!(bin_range(64), (1 << 63, u64::MAX));
    }

    proptest! {
        #[test]
        fn bins_partition_frequencies(tf in 1u64..u64::MAX) {
            let k = bin_index(tf).unwrap();
            let (lo, hi) = bin_range(k);
            prop_assert!(lo <= tf && tf <= hi);
        }

        #[test]
        fn bin_edges(k in 1u32..64) {
            let (lo, hi) = bin_range(k);
            prop_assert_eq!(bin_index(lo).unwrap(), k);
            prop_assert_eq!(bin_index(hi).unwrap(), k);
            prop_assert_eq!(bin_range(k + 1).0, hi + 1);
        }
    }

    #[test]
    fn means() {
        assert_eq!(
            bin_means(&[stat("x", 5, 2.0)]),
            [BinSummary {
                k: 3,
                lo: 4,
                hi: 7,
                members: 1,
                mean_v: 2.0
            }]
        );
        let b = bin_means(&[stat("a", 1, 1.0), stat("b", 1, 3.0), stat("c", 40, 0.5)]);
        assert_eq!(b.len(), 2);
        assert_eq!((b[0].k, b[0].members, b[0].mean_v), (1, 2, 2.0));
        assert_eq!((b[1].k, b[1].members, b[1].mean_v), (6, 1, 0.5));
        assert!(bin_means(&[]).is_empty());
    }

    #[test]
    fn top_in_bin() {
        let stats = [
            stat("inflation", 571, 4.64),
            stat("the", 600, 1.2),
            stat("beta", 700, 4.64),
            stat("other", 100, 9.0),
        ];
        let top = top_by_length_in_bin(&stats, 10, 2);
        assert_eq!(
            top.iter().map(|s| s.term.as_str()).collect::<Vec<_>>(),
            ["beta", "inflation"]
        );
        assert_eq!(top_by_length_in_bin(&stats, 7, 5).len(), 1);
        assert!(top_by_length_in_bin(&stats, 10, 0).is_empty());
        assert!(top_by_length_in_bin(&stats, 3, 4).is_empty());
    }
}
