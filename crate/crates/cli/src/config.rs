//! Flat `key = value` config files whose keys mirror long flags.

use std::ffi::OsString;

use crate::failure::Failure;

/// Parses config text into `--key value` pairs. Blank lines and lines
/// starting with `#` are skipped; `flag = true` becomes a bare `--flag`.
pub fn config_args(text: &str) -> Result<Vec<OsString>, Failure> {
    let mut args = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(Failure::Input(format!(
                "config line {}: expected key = value",
                i + 1
            )));
        };
        let key = key.trim().replace('_', "-");
        let value = value.trim();
        if key.is_empty() {
            return Err(Failure::Input(format!("config line {}: empty key", i + 1)));
        }
        match value {
            "true" => args.push(format!("--{key}").into()),
            "false" => {}
            _ => {
                args.push(format!("--{key}").into());
                args.push(value.into());
            }
        }
    }
    Ok(args)
}

/// Splices the contents of a `--config FILE` into the argument list, right
/// after the subcommand, so flags given on the command line take precedence.
pub fn expand(raw: Vec<OsString>) -> Result<Vec<OsString>, Failure> {
    let mut args = Vec::with_capacity(raw.len());
    let mut path = None;
    let mut it = raw.into_iter();
    while let Some(a) = it.next() {
        if a == "--config" {
            path = Some(
                it.next()
                    .ok_or_else(|| Failure::Usage("--config needs a file argument".into()))?,
            );
        } else if let Some(p) = a.to_str().and_then(|s| s.strip_prefix("--config=")) {
            path = Some(p.into());
        } else {
            args.push(a);
        }
    }
    let Some(path) = path else { return Ok(args) };
    let text = std::fs::read_to_string(&path).map_err(|e| {
        Failure::Input(format!(
            "cannot read config {}: {e}",
            path.to_string_lossy()
        ))
    })?;
    let extra = config_args(&text)?;
    // args[0] is the program; the first non-flag after it is the subcommand.
    let mut at = args.len();
    let mut i = 1;
    while i < args.len() {
        let a = args[i].to_string_lossy();
        if a == "--seed" {
            i += 2;
        } else if a.starts_with('-') {
            i += 1;
        } else {
            at = i + 1;
            break;
        }
    }
    args.splice(at..at, extra);
    Ok(args)
}
