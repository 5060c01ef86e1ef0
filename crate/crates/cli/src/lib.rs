//! The `wordsig` pipeline: ingest → train → stats → serve.

pub mod args;
pub mod config;
pub mod pipeline;
pub mod server;

pub use args::{Cli, Command};
