//! Text formats for relations.
//!
//! Edge list: optional `#` comment lines, a header `n m`, then one `u v` line
//! per arc with 1-based labels. Matrix: `n` lines of exactly `n` characters
//! from `{0,1}`. Serializers write arcs in row-major order and no comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::relation::Relation;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Matrix,
}

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
}

fn parse_int(token: &str, line: usize) -> Result<usize> {
    token.parse::<usize>().map_err(|_| {
        parse_error(
            line,
            format!("expected a non-negative integer, found {token:?}"),
        )
    })
}

/// Guesses the format from the first content line: two integers mean an edge
/// list, a run of `0`/`1` characters means a matrix.
pub fn detect_format(text: &str) -> Result<Format> {
    let Some((line, first)) = content_lines(text).next() else {
        return Err(parse_error(1, "empty document"));
    };
    let trimmed = first.trim();
    if trimmed.chars().all(|c| c == '0' || c == '1') {
        return Ok(Format::Matrix);
    }
    let tokens: Vec<&str> = trimmed.split_whitespace().collect();
    if tokens.len() == 2 && tokens.iter().all(|t| t.parse::<usize>().is_ok()) {
        return Ok(Format::EdgeList);
    }
    Err(parse_error(
        line,
        "cannot tell the format: expected an `n m` header or a row of 0/1 characters",
    ))
}

pub fn parse_relation(text: &str) -> Result<(Relation, Format)> {
    let format = detect_format(text)?;
    let r = match format {
        Format::EdgeList => parse_edge_list(text)?,
        Format::Matrix => parse_matrix(text)?,
    };
    Ok((r, format))
}

/// Parses the edge-list format. Duplicate arc lines collapse; the header's
/// `m` must equal the number of distinct arcs.
pub fn parse_edge_list(text: &str) -> Result<Relation> {
    let mut lines = content_lines(text);
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_error(1, "missing `n m` header"))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(parse_error(
            header_line,
            format!("header must be `n m`, found {} tokens", tokens.len()),
        ));
    }
    let n = parse_int(tokens[0], header_line)?;
    let m = parse_int(tokens[1], header_line)?;
    if n == 0 {
        return Err(parse_error(header_line, "vertex count must be at least 1"));
    }
    let mut r = Relation::empty(n);
    for (line, text) in lines {
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(parse_error(
                line,
                format!("arc line must be `u v`, found {} tokens", tokens.len()),
            ));
        }
        let u = parse_int(tokens[0], line)?;
        let v = parse_int(tokens[1], line)?;
        for x in [u, v] {
            if x == 0 || x > n {
                return Err(parse_error(line, format!("vertex {x} outside 1..={n}")));
            }
        }
        r.insert(u - 1, v - 1);
    }
    if r.arc_count() != m {
        return Err(parse_error(
            header_line,
            format!(
                "header declares {m} arcs but {} distinct arcs follow",
                r.arc_count()
            ),
        ));
    }
    Ok(r)
}

pub fn parse_matrix(text: &str) -> Result<Relation> {
    let rows: Vec<(usize, &str)> = content_lines(text).map(|(l, s)| (l, s.trim())).collect();
    let Some(&(_, first)) = rows.first() else {
        return Err(parse_error(1, "empty matrix"));
    };
    let n = first.chars().count();
    if rows.len() != n {
        return Err(parse_error(
            rows.last().map_or(1, |r| r.0),
            format!(
                "matrix has {} rows but rows are {n} characters wide",
                rows.len()
            ),
        ));
    }
    let mut r = Relation::empty(n);
    for (i, &(line, row)) in rows.iter().enumerate() {
        if row.chars().count() != n {
            return Err(parse_error(
                line,
                format!(
                    "ragged row: expected {n} characters, found {}",
                    row.chars().count()
                ),
            ));
        }
        for (j, c) in row.chars().enumerate() {
            match c {
                '1' => {
                    r.insert(i, j);
                }
                '0' => {}
                other => return Err(parse_error(line, format!("unexpected character {other:?}"))),
            }
        }
    }
    Ok(r)
}

pub fn to_edge_list(r: &Relation) -> String {
    let mut out = format!("{} {}\n", r.n(), r.arc_count());
    for (i, j) in r.iter_arcs() {
        let _ = writeln!(out, "{} {}", i + 1, j + 1);
    }
    out
}

pub fn to_matrix(r: &Relation) -> String {
    let n = r.n();
    let mut out = String::with_capacity(n * (n + 1));
    for i in 0..n {
        out.extend((0..n).map(|j| if r.contains(i, j) { '1' } else { '0' }));
        out.push('\n');
    }
    out
}

pub fn serialize(r: &Relation, format: Format) -> String {
    match format {
        Format::EdgeList => to_edge_list(r),
        Format::Matrix => to_matrix(r),
    }
}
