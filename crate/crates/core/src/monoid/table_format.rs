//! Line-based multiplication-table format:
//!
//! ```text
//! elements: 2
//! identity: 0
//! 0 1
//! 1 1
//! gen: a 1
//! ```
//!
//! Blank lines and `#` comments are ignored.

use std::fmt::Write;

use super::FiniteMonoid;
use crate::error::{Error, Result};

pub(super) fn write(m: &FiniteMonoid) -> String {
    let mut out = String::new();
    writeln!(out, "elements: {}", m.len()).unwrap();
    writeln!(out, "identity: {}", m.identity()).unwrap();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    for (label, g) in m.generators() {
        writeln!(out, "gen: {label} {g}").unwrap();
    }
    out
}

pub(super) fn parse(text: &str) -> Result<FiniteMonoid> {
    let bad = |line: usize, msg: &str| Error::MalformedTable(format!("line {line}: {msg}"));
    let mut size = None;
    let mut identity = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut generators = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let number = |s: &str| s.trim().parse::<usize>().map_err(|_| bad(lineno, "expected a non-negative integer"));
        if let Some(rest) = line.strip_prefix("elements:") {
            size = Some(number(rest)?);
        } else if let Some(rest) = line.strip_prefix("identity:") {
            identity = Some(number(rest)?);
        } else if let Some(rest) = line.strip_prefix("gen:") {
            let mut parts = rest.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(label), Some(idx), None) => generators.push((label.to_string(), number(idx)?)),
                _ => return Err(bad(lineno, "expected `gen: <label> <index>`")),
            }
        } else {
            rows.push(line.split_whitespace().map(number).collect::<Result<_>>()?);
        }
    }
    let size = size.ok_or_else(|| Error::MalformedTable("missing `elements:` line".into()))?;
    let identity = identity.ok_or_else(|| Error::MalformedTable("missing `identity:` line".into()))?;
    if rows.len() != size {
        return Err(Error::MalformedTable(format!("expected {size} rows, found {}", rows.len())));
    }
    FiniteMonoid::from_table(rows, identity)?.with_generators(generators)
}
