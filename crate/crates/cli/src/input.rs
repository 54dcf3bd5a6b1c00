//! Sequence notation: integers separated by commas and/or whitespace, with
//! `d^k` for `k` copies of `d`. Optional surrounding parentheses are ignored.

use std::fmt;
use std::io::{self, BufRead};
use std::path::Path;

use raoseq::{parse_sequence, IntegerSequence, SequenceError};

#[derive(Debug, PartialEq, Eq)]
pub enum InputError {
    BadToken(String),
    Sequence(SequenceError),
}

impl fmt::Display for InputError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            InputError::BadToken(t) => write!(f, "cannot parse `{t}` as an integer or `d^k`"),
            InputError::Sequence(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for InputError {}

/// Expands the notation into raw integers, in input order.
pub fn expand(text: &str) -> Result<Vec<i64>, InputError> {
    let trimmed = text.trim().trim_start_matches('(').trim_end_matches(')');
    let mut out = Vec::new();
    for token in trimmed.split(|c: char| c == ',' || c.is_whitespace()) {
        if token.is_empty() {
            continue;
        }
        let bad = || InputError::BadToken(token.to_string());
        match token.split_once('^') {
            Some((base, power)) => {
                let base: i64 = base.parse().map_err(|_| bad())?;
                let power: usize = power.parse().map_err(|_| bad())?;
                out.extend(std::iter::repeat_n(base, power));
            }
            None => out.push(token.parse().map_err(|_| bad())?),
        }
    }
    Ok(out)
}

pub fn parse(text: &str, strip_zeros: bool) -> Result<IntegerSequence, InputError> {
    let mut raw = expand(text)?;
    if strip_zeros {
        raw.retain(|&d| d != 0);
    }
    parse_sequence(&raw).map_err(InputError::Sequence)
}

/// Positional arguments joined into one sequence, or else one sequence per
/// nonblank line of `file` (or stdin when no file is given).
pub fn gather(args: &[String], file: Option<&Path>) -> io::Result<Vec<String>> {
    if !args.is_empty() {
        return Ok(vec![args.join(" ")]);
    }
    let lines: Vec<String> = match file {
        Some(path) => std::fs::read_to_string(path)?
            .lines()
            .map(str::to_owned)
            .collect(),
        None => io::stdin().lock().lines().collect::<io::Result<_>>()?,
    };
    Ok(lines.into_iter().filter(|l| !l.trim().is_empty()).collect())
}
