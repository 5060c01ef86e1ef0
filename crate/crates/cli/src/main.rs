use std::ffi::OsString;
use std::net::SocketAddr;
use std::process::ExitCode;

use anyhow::Result;
use clap::Parser;
use log::info;
use wordsig_cli::args::{Cli, Command};
use wordsig_cli::config::expand_config_args;
use wordsig_cli::pipeline::{self, StatsOptions};
use wordsig_cli::server::Server;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("info")).init();
    let args = match expand_config_args(std::env::args_os().collect::<Vec<OsString>>()) {
        Ok(args) => args,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    let cli = Cli::parse_from(args);
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Ingest(a) => {
            let s = pipeline::ingest(&a.corpus, &a.tokens, &a.vocab, a.min_count)?;
            println!(
                "documents {}\ntokens {}\nvocabulary {}\naverage tokens per document {:.1}",
                s.documents,
                s.tokens,
                s.vocabulary,
                s.tokens as f64 / s.documents.max(1) as f64
            );
        }
        Command::Train(a) => {
            let config = a.train_config();
            let r = pipeline::train_vectors(&a.input, &a.output, a.save_vocab.as_deref(), &config)?;
            println!(
                "epochs {}\ntokens seen {}\neffective tokens {}\npairs {}\nfinal alpha {:e}",
                r.epochs, r.tokens_seen, r.tokens_kept, r.pairs, r.final_alpha
            );
        }
        Command::Stats(a) => {
            let opts = StatsOptions {
                name: a.name.clone(),
                min_tf: a.min_tf,
                pairs: a.pairs,
                hist_bins: a.hist_bins as usize,
                top: a.top,
                seed: a.seed,
            };
            let s = pipeline::stats(&a.vectors, &a.vocab, a.tags.as_deref(), &a.out_dir, &opts)?;
            println!(
                "terms {}\nmean vector length {:.6}\nmean cosine similarity {:.6}",
                s.terms, s.mean_vec_len, s.mean_similarity
            );
            for b in &s.bins {
                println!(
                    "bin {:>2} [{}, {}] n={} mean_v={:.4}",
                    b.k, b.lo, b.hi, b.members, b.mean_v
                );
            }
            println!("explorer data {}", s.explorer.display());
        }
        Command::Serve(a) => {
            let rt = tokio::runtime::Builder::new_multi_thread()
                .enable_all()
                .build()?;
            rt.block_on(async {
                let server =
                    Server::bind(&a.data, SocketAddr::new(a.host, a.port), a.assets).await?;
                info!("serving on http://{}", server.local_addr()?);
                server
                    .run(async {
                        let _ = tokio::signal::ctrl_c().await;
                    })
                    .await
            })?;
        }
    }
    Ok(())
}
