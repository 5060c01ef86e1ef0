//! Word significance from skip-gram embeddings.
//!
//! Trains skip-gram negative-sampling vectors on a corpus of short texts
//! and ranks terms by the length of their word vector together with their
//! term frequency. Words used consistently in one context end up with long
//! vectors; function words, spread over many contexts, stay short.
//!
//! The pipeline is [`corpus`] (TeX stripping, tokenization, vocabulary),
//! [`sgns`] (training and the text vector format) and [`significance`]
//! (lengths, similarity histograms, frequency bins, POS overlays and the
//! explorer data file).

pub mod corpus;
pub mod error;
pub mod sgns;
pub mod significance;
pub mod synthetic;

pub use error::{Error, Result};
