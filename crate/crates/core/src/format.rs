//! Plain-text map files.
//!
//! ```text
//! # hexagonal torus
//! surface: torus
//! v 0: 0+ 1+ 2+
//! v 1: 0+ 3- 4+
//! ```
//!
//! One line per vertex, darts in rotation order. Every edge id appears
//! exactly twice; the edge has signature `+` iff both occurrences carry the
//! same sign. Both `-` and `−` are accepted for a negative sign. Edge ids are
//! non-negative integers and are renumbered `0..E` in increasing order.

use std::collections::{BTreeMap, HashSet};
use std::fmt::Write as _;

use crate::error::ParseError;
use crate::surface_map::{RotationSystem, Sign};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapFile {
    /// Free-form value of the `surface:` line, if any.
    pub surface: Option<String>,
    pub map: RotationSystem,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax {
        line,
        column,
        message: message.into(),
    }
}

/// Byte offset to 1-based character column.
fn column_of(line: &str, offset: usize) -> usize {
    line[..offset].chars().count() + 1
}

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str, start: usize) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut begin = None;
    for (i, ch) in line[start..].char_indices().map(|(i, c)| (i + start, c)) {
        match (ch.is_whitespace(), begin) {
            (true, Some(b)) => {
                out.push(Token {
                    text: &line[b..i],
                    column: column_of(line, b),
                });
                begin = None;
            }
            (false, None) => begin = Some(i),
            _ => {}
        }
    }
    if let Some(b) = begin {
        out.push(Token {
            text: &line[b..],
            column: column_of(line, b),
        });
    }
    out
}

fn parse_dart(tok: &Token<'_>, line: usize) -> Result<(u64, bool), ParseError> {
    let (id, positive) = if let Some(id) = tok.text.strip_suffix('+') {
        (id, true)
    } else if let Some(id) = tok.text.strip_suffix('-') {
        (id, false)
    } else if let Some(id) = tok.text.strip_suffix('\u{2212}') {
        (id, false)
    } else {
        return Err(syntax(
            line,
            tok.column,
            format!("dart `{}` must end in + or -", tok.text),
        ));
    };
    let id = id.parse::<u64>().map_err(|_| {
        syntax(
            line,
            tok.column,
            format!("edge id `{id}` is not a non-negative integer"),
        )
    })?;
    Ok((id, positive))
}

pub fn parse_map_file(text: &str) -> Result<MapFile, ParseError> {
    let mut surface = None;
    let mut labels: Vec<String> = Vec::new();
    let mut seen_labels = HashSet::new();
    let mut raw: Vec<Vec<(u64, bool)>> = Vec::new();

    for (idx, full) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full.find('#') {
            Some(i) => &full[..i],
            None => full,
        };
        let trimmed = line.trim_start();
        if trimmed.trim_end().is_empty() {
            continue;
        }
        let indent = line.len() - trimmed.len();
        if let Some(rest) = trimmed.strip_prefix("surface:") {
            if !labels.is_empty() || surface.is_some() {
                return Err(syntax(
                    line_no,
                    column_of(line, indent),
                    "`surface:` must be a single line before any vertex",
                ));
            }
            surface = Some(rest.trim().to_string());
            continue;
        }
        let Some(after_v) = trimmed
            .strip_prefix('v')
            .filter(|r| r.starts_with(char::is_whitespace))
        else {
            return Err(syntax(
                line_no,
                column_of(line, indent),
                "expected `v <id>: <darts>` or `surface: <name>`",
            ));
        };
        let Some(colon) = after_v.find(':') else {
            return Err(syntax(
                line_no,
                column_of(line, line.len()),
                "missing `:` after vertex id",
            ));
        };
        let id = after_v[..colon].trim();
        let id_offset = line.len() - after_v.len();
        if id.is_empty() || id.contains(char::is_whitespace) {
            return Err(syntax(
                line_no,
                column_of(line, id_offset),
                "vertex id must be a single non-empty token",
            ));
        }
        if !seen_labels.insert(id.to_string()) {
            return Err(ParseError::DuplicateVertex {
                line: line_no,
                id: id.to_string(),
            });
        }
        let darts_start = id_offset + colon + 1;
        let darts = tokens(line, darts_start)
            .iter()
            .map(|t| parse_dart(t, line_no))
            .collect::<Result<Vec<_>, _>>()?;
        if darts.is_empty() {
            return Err(syntax(
                line_no,
                column_of(line, line.len()),
                format!("vertex `{id}` has an empty rotation"),
            ));
        }
        labels.push(id.to_string());
        raw.push(darts);
    }

    let mut occurrences: BTreeMap<u64, Vec<bool>> = BTreeMap::new();
    for &(e, positive) in raw.iter().flatten() {
        occurrences.entry(e).or_default().push(positive);
    }
    for (e, signs) in &occurrences {
        if signs.len() != 2 {
            return Err(ParseError::EdgeCount {
                edge: e.to_string(),
                count: signs.len(),
            });
        }
    }
    let compact: BTreeMap<u64, usize> = occurrences
        .keys()
        .enumerate()
        .map(|(i, &e)| (e, i))
        .collect();
    let signature = occurrences
        .values()
        .map(|s| {
            if s[0] == s[1] {
                Sign::Positive
            } else {
                Sign::Negative
            }
        })
        .collect();
    let rotations = raw
        .iter()
        .map(|r| r.iter().map(|(e, _)| compact[e]).collect())
        .collect();
    let map = RotationSystem::with_labels(labels, rotations, signature)?;
    Ok(MapFile { surface, map })
}

pub fn parse_map(text: &str) -> Result<RotationSystem, ParseError> {
    parse_map_file(text).map(|f| f.map)
}

/// Writes the first dart of every edge with `+` and the second with the
/// edge's sign.
pub fn serialize_map(rs: &RotationSystem) -> String {
    let mut out = String::new();
    for v in 0..rs.num_vertices() {
        write!(out, "v {}:", rs.label(v)).unwrap();
        for d in rs.rotation(v) {
            let sign = if d.end == 0 || rs.sign(d.edge).is_positive() {
                '+'
            } else {
                '-'
            };
            write!(out, " {}{}", d.edge, sign).unwrap();
        }
        out.push('\n');
    }
    out
}

pub fn serialize_map_file(file: &MapFile) -> String {
    match &file.surface {
        Some(s) => format!("surface: {s}\n{}", serialize_map(&file.map)),
        None => serialize_map(&file.map),
    }
}
