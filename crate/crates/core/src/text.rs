//! Text formats: `.sg` Cayley tables and the subset, family, partition and
//! permutation literals used on the command line.
//!
//! A `.sg` file holds optional `#` comment lines, a line with the order `n`,
//! `n` rows of `n` whitespace-separated entries in `0..n`, and optionally a
//! final `labels: s0 s1 ..` line.

use std::fmt::Write;

use crate::congruence::Congruence;
use crate::error::{Error, Result};
use crate::permutative::PermutationIdentity;
use crate::semigroup::{ElementSet, FiniteSemigroup};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_sg(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, first) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing order line"))?;
    let n: usize = first
        .parse()
        .map_err(|_| parse_err(line_no, format!("expected the order, found {first:?}")))?;
    if n == 0 {
        return Err(parse_err(line_no, "order must be positive"));
    }

    let mut rows = Vec::with_capacity(n);
    let mut last_line = line_no;
    for r in 0..n {
        let (line_no, text) = lines
            .next()
            .ok_or_else(|| parse_err(last_line, format!("expected {n} rows, found {r}")))?;
        last_line = line_no;
        let row = text
            .split_whitespace()
            .map(|t| {
                let v: usize = t
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("not an element index: {t:?}")))?;
                if v >= n {
                    return Err(parse_err(
                        line_no,
                        format!("entry {v} out of range for order {n}"),
                    ));
                }
                Ok(v)
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(parse_err(
                line_no,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        rows.push(row);
    }

    let mut labels = None;
    if let Some((line_no, text)) = lines.next() {
        let rest = text
            .strip_prefix("labels:")
            .ok_or_else(|| parse_err(line_no, format!("unexpected content {text:?}")))?;
        let l: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
        if l.len() != n {
            return Err(parse_err(
                line_no,
                format!("expected {n} labels, found {}", l.len()),
            ));
        }
        labels = Some(l);
        if let Some((line_no, text)) = lines.next() {
            return Err(parse_err(line_no, format!("unexpected content {text:?}")));
        }
    }
    FiniteSemigroup::new(rows, labels)
}

pub fn to_sg(s: &FiniteSemigroup) -> String {
    let mut out = format!("{}\n", s.order());
    for row in s.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    if let Some(labels) = s.labels() {
        let _ = writeln!(out, "labels: {}", labels.join(" "));
    }
    out
}

/// `{0,2}` or `{}`.
pub fn parse_subset(text: &str, ambient: usize) -> Result<ElementSet> {
    let inner = text
        .trim()
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| {
            parse_err(
                1,
                format!("expected a set literal like {{0,2}}, found {text:?}"),
            )
        })?;
    let mut set = ElementSet::empty(ambient);
    for tok in inner.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let e: usize = tok
            .parse()
            .map_err(|_| parse_err(1, format!("not an element index: {tok:?}")))?;
        if e >= ambient {
            return Err(Error::IndexOutOfRange {
                index: e,
                order: ambient,
            });
        }
        set.insert(e);
    }
    Ok(set)
}

/// Semicolon-separated set literals, e.g. `{0};{1,2}`. An empty string is
/// the empty family.
pub fn parse_family(text: &str, ambient: usize) -> Result<Vec<ElementSet>> {
    text.split(';')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| parse_subset(t, ambient))
        .collect()
}

pub fn format_family(family: &[ElementSet]) -> String {
    family
        .iter()
        .map(ElementSet::to_string)
        .collect::<Vec<_>>()
        .join(";")
}

/// A partition written as a family of blocks, e.g. `{0,1};{2}`.
pub fn parse_partition(text: &str, ambient: usize) -> Result<Congruence> {
    Congruence::from_blocks(ambient, &parse_family(text, ambient)?)
}

/// `perm 1 3 2` (the `perm` keyword is optional).
pub fn parse_permutation(text: &str) -> Result<PermutationIdentity> {
    let body = text.trim();
    let body = body.strip_prefix("perm").unwrap_or(body);
    let images = body
        .split_whitespace()
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidPermutation(format!("not an integer: {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    PermutationIdentity::new(&images)
}
