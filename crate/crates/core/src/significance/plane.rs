//! The explorer data file: every term as a point of the v–tf plane plus the
//! frequency-bin means, as one JSON object.
//!
//! ```json
//! {"meta": {"corpus_name": "...", "dim": 100, "total_tokens": 3200000,
//!           "mean_vec_len": 1.37, "min_tf": 1},
//!  "words": [{"t": "the", "tf": 257866, "v": 1.49, "pos": "DT"}, ...],
//!  "bins": [{"k": 1, "lo": 1, "hi": 1, "n": 21000, "mean_v": 2.1}, ...]}
//! ```
//!
//! Words are ordered by descending `tf`, then term.

use std::io::{Read, Write};

use serde::{Deserialize, Serialize};

use super::bins::{BinSummary, WordStat};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplorerMeta {
    pub corpus_name: String,
    pub dim: usize,
    pub total_tokens: u64,
    pub mean_vec_len: f64,
    pub min_tf: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WordRecord {
    pub t: String,
    pub tf: u64,
    pub v: f64,
    pub pos: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExplorerData {
    pub meta: ExplorerMeta,
    pub words: Vec<WordRecord>,
    pub bins: Vec<BinSummary>,
}

impl ExplorerData {
    pub fn new(meta: ExplorerMeta, stats: &[WordStat], bins: &[BinSummary]) -> Self {
        let mut words: Vec<WordRecord> = stats
            .iter()
            .map(|s| WordRecord {
                t: s.term.clone(),
                tf: s.tf,
                v: s.v,
                pos: s.pos.clone(),
            })
            .collect();
        words.sort_by(|a, b| b.tf.cmp(&a.tf).then_with(|| a.t.cmp(&b.t)));
        ExplorerData {
            meta,
            words,
            bins: bins.to_vec(),
        }
    }
}

/// Writes the explorer data file for `stats` and `bins`.
pub fn export_plane<W: Write>(
    stats: &[WordStat],
    bins: &[BinSummary],
    meta: ExplorerMeta,
    mut writer: W,
) -> Result<()> {
    let data = ExplorerData::new(meta, stats, bins);
    serde_json::to_writer(&mut writer, &data)?;
    writer.write_all(b"\n")?;
    writer.flush()?;
    Ok(())
}

/// Parses and checks an explorer data file. Syntax errors report line and
/// column.
pub fn parse_explorer_data<R: Read>(reader: R) -> Result<ExplorerData> {
    let data: ExplorerData = serde_json::from_reader(reader).map_err(|e| Error::Parse {
        line: e.line(),
        message: format!("column {}: {e}", e.column()),
    })?;
    for w in &data.words {
        if w.tf == 0 || !(w.v.is_finite() && w.v >= 0.0) {
            return Err(Error::Domain(format!(
                "invalid word record {:?} (tf {}, v {})",
                w.t, w.tf, w.v
            )));
        }
    }
    Ok(data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn meta() -> ExplorerMeta {
        ExplorerMeta {
            corpus_name: "test".into(),
            dim: 3,
            total_tokens: 2,
            mean_vec_len: 0.25,
            min_tf: 1,
        }
    }

    #[test]
    fn single_word() {
        let stats = [WordStat {
            term: "a".into(),
            tf: 2,
            v: 1.5,
            pos: Some("DT".into()),
        }];
        let bins = super::super::bins::bin_means(&stats);
        let mut buf = Vec::new();
        export_plane(&stats, &bins, meta(), &mut buf).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert_eq!(
            text,
            "{\"meta\":{\"corpus_name\":\"test\",\"dim\":3,\"total_tokens\":2,\
             \"mean_vec_len\":0.25,\"min_tf\":1},\
             \"words\":[{\"t\":\"a\",\"tf\":2,\"v\":1.5,\"pos\":\"DT\"}],\
             \"bins\":[{\"k\":2,\"lo\":2,\"hi\":3,\"n\":1,\"mean_v\":1.5}]}\n"
        );
        let data = parse_explorer_data(buf.as_slice()).unwrap();
        assert_eq!(data.words.len(), 1);
        assert_eq!(data.bins[0].k, 2);
    }

    #[test]
    fn empty_stats() {
        let mut buf = Vec::new();
        export_plane(&[], &[], meta(), &mut buf).unwrap();
        let data = parse_explorer_data(buf.as_slice()).unwrap();
        assert!(data.words.is_empty() && data.bins.is_empty());
    }

    #[test]
    fn ordering_and_null_pos() {
        let stats = [
            WordStat {
                term: "b".into(),
                tf: 1,
                v: 1.0,
                pos: None,
            },
            WordStat {
                term: "c".into(),
                tf: 5,
                v: 1.0,
                pos: None,
            },
            WordStat {
                term: "a".into(),
                tf: 1,
                v: 1.0,
                pos: None,
            },
        ];
        let data = ExplorerData::new(meta(), &stats, &[]);
        let order: Vec<&str> = data.words.iter().map(|w| w.t.as_str()).collect();
        assert_eq!(order, ["c", "a", "b"]);
        let json = serde_json::to_string(&data.words[0]).unwrap();
        assert!(json.ends_with("\"pos\":null}"));
    }

    #[test]
    fn truncated_file_reports_position() {
        let err = parse_explorer_data("{\"meta\": {\"corpus_name\": \"x\",\n \"dim\"".as_bytes())
            .unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }

    proptest! {
        #[test]
        fn round_trip_preserves_triples(
            words in prop::collection::vec(("[a-z().,]{1,8}", 1u64..1_000_000, 0.0f64..50.0), 0..40)
        ) {
            let stats: Vec<WordStat> = words
                .iter()
                .map(|(t, tf, v)| WordStat { term: t.clone(), tf: *tf, v: *v, pos: None })
                .collect();
            let mut buf = Vec::new();
            export_plane(&stats, &[], meta(), &mut buf).unwrap();
            let data = parse_explorer_data(buf.as_slice()).unwrap();
            let mut expected: Vec<(String, u64, u64)> =
                words.iter().map(|(t, tf, v)| (t.clone(), *tf, v.to_bits())).collect();
            let mut got: Vec<(String, u64, u64)> =
                data.words.iter().map(|w| (w.t.clone(), w.tf, w.v.to_bits())).collect();
            expected.sort();
            got.sort();
            prop_assert_eq!(got, expected);
        }
    }
}
