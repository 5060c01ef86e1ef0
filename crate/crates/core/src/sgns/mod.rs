//! Skip-gram training with negative sampling.

mod config;
mod hogwild;
mod io;
mod matrix;
mod model;
mod sampling;
mod sigmoid;
mod step;
mod train;

pub use config::TrainConfig;
pub use io::{load_vectors, save_vectors, WordVectors};
pub use matrix::{axpy, dot, Matrix};
pub use model::EmbeddingModel;
pub use sampling::{subsample_keep_prob, NoiseTable};
pub use sigmoid::{exact_sigmoid, Sigmoid, SigmoidMode};
pub use step::{pair_objective, sgns_update, NonFiniteScore, OutputRows};
pub use train::{train, train_with_vocab, TrainReport, Trained};
