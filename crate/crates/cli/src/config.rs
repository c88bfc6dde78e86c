//! `--config FILE`: `key = value` lines that stand in for long options.
//!
//! Each line `key = value` becomes `--key value`; `key = true` becomes a bare
//! `--key` and `key = false` is dropped. Blank lines and `#` comments are
//! skipped. The options are placed right after the subcommand, so anything
//! given on the command line afterwards wins.

use anyhow::{bail, Context, Result};

pub fn parse_config(text: &str) -> Result<Vec<String>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            bail!("config line {}: expected key = value", i + 1);
        };
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            bail!("config line {}: empty key", i + 1);
        }
        match value {
            "true" => out.push(format!("--{key}")),
            "false" => {}
            v => {
                out.push(format!("--{key}"));
                out.push(v.to_string());
            }
        }
    }
    Ok(out)
}

/// Pull `--config FILE` (or `--config=FILE`) out of `args` and splice the
/// file's options in after the subcommand.
pub fn expand_config(mut args: Vec<String>) -> Result<Vec<String>> {
    let mut path = None;
    let mut i = 1;
    while i < args.len() {
        if args[i] == "--config" {
            if i + 1 >= args.len() {
                bail!("--config needs a file");
            }
            path = Some(args.remove(i + 1));
            args.remove(i);
        } else if let Some(p) = args[i].strip_prefix("--config=") {
            path = Some(p.to_string());
            args.remove(i);
        } else {
            i += 1;
        }
    }
    let Some(path) = path else { return Ok(args) };
    let text = std::fs::read_to_string(&path).with_context(|| format!("reading config {path}"))?;
    let extra = parse_config(&text)?;
    let at = args.iter().skip(1).position(|a| !a.starts_with('-')).map_or(args.len(), |p| p + 2);
    args.splice(at..at, extra);
    Ok(args)
}
