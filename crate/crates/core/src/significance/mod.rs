//! Vector length and term frequency as word significance.

mod bins;
mod plane;
mod pos;
mod similarity;

pub use bins::{
    bin_index, bin_means, bin_range, top_by_length_in_bin, word_stats, BinSummary, WordStat,
};
pub use plane::{export_plane, parse_explorer_data, ExplorerData, ExplorerMeta, WordRecord};
pub use pos::{
    assign_majority_tag, class_bin_means, classify_word_class, load_tagged_tokens, PosLexicon,
    TagCounts, TaggedTokens, WordClass, FUNCTION_TAGS,
};
pub use similarity::{
    cosine_similarity, mean_vector, norm, similarity_histogram, similarity_histogram_in_range,
    vector_length, SimilarityHistogram,
};
