//! Optional `key = value` configuration files.
//!
//! Keys are the long flag names of a subcommand (`size`, `window`,
//! `min-count`, ...). Values from the file are inserted ahead of the
//! command-line flags, so flags given explicitly win. Keys the invoked
//! subcommand does not know are ignored, which lets one file describe a
//! whole run.

use std::ffi::OsString;
use std::fs;
use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::CommandFactory;

use crate::args::Cli;

/// Parses `key = value` lines. `#` starts a comment; blank lines are skipped.
pub fn parse_config(text: &str) -> Result<Vec<(String, String)>> {
    let mut entries = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key = value", i + 1);
        };
        let key = key.trim();
        if key.is_empty() {
            bail!("config line {}: empty key", i + 1);
        }
        entries.push((key.to_owned(), value.trim().to_owned()));
    }
    Ok(entries)
}

/// Rewrites `args` so that the entries of a `--config FILE` option become
/// flags of the invoked subcommand, placed before the user's own flags.
pub fn expand_config_args(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut config_path = None;
    let mut rest = Vec::with_capacity(args.len());
    let mut iter = args.into_iter();
    while let Some(arg) = iter.next() {
        match arg.to_str() {
            Some("--config") => {
                config_path = Some(iter.next().context("--config needs a file")?);
            }
            Some(s) if s.starts_with("--config=") => {
                config_path = Some(OsString::from(&s["--config=".len()..]));
            }
            _ => rest.push(arg),
        }
    }
    let Some(path) = config_path else {
        return Ok(rest);
    };

    let path = Path::new(&path);
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read config file {}", path.display()))?;
    let entries = parse_config(&text)?;

    let cli = Cli::command();
    let Some((pos, sub)) = rest.iter().enumerate().skip(1).find_map(|(i, a)| {
        a.to_str()
            .and_then(|name| cli.find_subcommand(name))
            .map(|sub| (i, sub))
    }) else {
        return Ok(rest);
    };

    let known_anywhere = |key: &str| {
        cli.get_subcommands()
            .any(|s| s.get_arguments().any(|a| a.get_long() == Some(key)))
    };
    let mut injected = Vec::new();
    for (key, value) in entries {
        if !known_anywhere(&key) {
            bail!("config file {}: unknown key {key:?}", path.display());
        }
        let Some(arg) = sub
            .get_arguments()
            .find(|a| a.get_long() == Some(key.as_str()))
        else {
            continue;
        };
        if arg.get_action().takes_values() {
            injected.push(OsString::from(format!("--{key}={value}")));
        } else {
            match value.as_str() {
                "true" | "yes" | "1" => injected.push(OsString::from(format!("--{key}"))),
                "false" | "no" | "0" => {}
                other => bail!("config key {key:?}: expected a boolean, got {other:?}"),
            }
        }
    }

    let mut out = rest;
    out.splice(pos + 1..pos + 1, injected);
    Ok(out)
}
