//! Plain-text formats shared by the CLI and the JSON documents.
//!
//! * partition: `3,1`
//! * configuration: `1,3,2,1`
//! * tableau: rows separated by `/`, entries by `,`, e.g. `1,1,3/2`
//! * pattern: rows from the top (length n) down, e.g. `3,1,0/2,1/2`

use crate::error::{Result, SwtError};
use crate::gt::GtPattern;
use crate::tableaux::{Configuration, Partition, StandardTableau, WeylTableau};

fn parse_err(what: &'static str, input: &str, position: String, message: String) -> SwtError {
    SwtError::Parse {
        what,
        input: input.to_string(),
        position,
        message,
    }
}

fn parse_row(
    what: &'static str,
    input: &str,
    row: &str,
    row_no: Option<usize>,
) -> Result<Vec<usize>> {
    row.split(',')
        .enumerate()
        .map(|(i, tok)| {
            let tok = tok.trim();
            tok.parse::<usize>().map_err(|_| {
                let position = match row_no {
                    Some(r) => format!("row {r}, entry {}", i + 1),
                    None => format!("entry {}", i + 1),
                };
                let message = if tok.is_empty() {
                    "empty entry".to_string()
                } else {
                    format!("{tok:?} is not a nonnegative integer")
                };
                parse_err(what, input, position, message)
            })
        })
        .collect()
}

fn parse_rows(what: &'static str, input: &str) -> Result<Vec<Vec<usize>>> {
    if input.trim().is_empty() {
        return Err(parse_err(what, input, "start".into(), "empty input".into()));
    }
    input
        .split('/')
        .enumerate()
        .map(|(r, row)| parse_row(what, input, row, Some(r + 1)))
        .collect()
}

fn wrap(what: &'static str, input: &str, err: SwtError) -> SwtError {
    match err {
        e @ SwtError::Parse { .. } => e,
        other => parse_err(what, input, "whole value".into(), other.to_string()),
    }
}

pub fn parse_partition(input: &str) -> Result<Partition> {
    let parts = parse_row("partition", input, input, None)?;
    Partition::new(parts).map_err(|e| wrap("partition", input, e))
}

pub fn parse_configuration(input: &str, n: usize) -> Result<Configuration> {
    let letters = parse_row("configuration", input, input, None)?;
    if let Some(i) = letters.iter().position(|&l| l == 0 || l > n) {
        return Err(parse_err(
            "configuration",
            input,
            format!("entry {}", i + 1),
            format!("letter {} outside 1..={n}", letters[i]),
        ));
    }
    Configuration::new(letters, n).map_err(|e| wrap("configuration", input, e))
}

pub fn parse_standard_tableau(input: &str) -> Result<StandardTableau> {
    let rows = parse_rows("standard tableau", input)?;
    StandardTableau::new(rows).map_err(|e| wrap("standard tableau", input, e))
}

pub fn parse_weyl_tableau(input: &str) -> Result<WeylTableau> {
    let rows = parse_rows("Weyl tableau", input)?;
    WeylTableau::new(rows).map_err(|e| wrap("Weyl tableau", input, e))
}

pub fn parse_pattern(input: &str) -> Result<GtPattern> {
    let rows = parse_rows("pattern", input)?;
    GtPattern::from_top_down(rows).map_err(|e| wrap("pattern", input, e))
}
