//! graph6 and plain edge-list text formats.
//!
//! graph6 packs the upper triangle of the adjacency matrix in column order
//! ((0,1), (0,2), (1,2), (0,3), ...) into 6-bit groups, each written as a
//! byte offset by 63. The vertex count is one byte for `n ≤ 62`, otherwise
//! `~` followed by three 6-bit groups (or `~~` and six groups).
//!
//! The edge-list format is a line `n m` followed by `m` lines `u v`.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

const OFFSET: u8 = 63;
const HEADER: &str = ">>graph6<<";

fn push_groups(out: &mut String, value: usize, groups: usize) {
    for i in (0..groups).rev() {
        out.push((OFFSET + ((value >> (6 * i)) & 0x3f) as u8) as char);
    }
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        push_groups(&mut out, n, 1);
    } else if n <= 258_047 {
        out.push('~');
        push_groups(&mut out, n, 3);
    } else {
        out.push_str("~~");
        push_groups(&mut out, n, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((OFFSET + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((OFFSET + (acc << (6 - filled))) as char);
    }
    out
}

fn sextet(b: u8) -> Result<u8> {
    if (63..=126).contains(&b) {
        Ok(b - OFFSET)
    } else {
        Err(Error::Format(format!("byte {b} outside graph6 range 63..=126")))
    }
}

/// Parses one graph6 string; an optional `>>graph6<<` header and
/// surrounding whitespace are ignored.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    if body.is_empty() {
        return Err(Error::Format("empty graph6 string".into()));
    }
    let read = |range: std::ops::Range<usize>| -> Result<usize> {
        let bytes = body
            .get(range)
            .ok_or_else(|| Error::Format("truncated vertex count".into()))?;
        bytes
            .iter()
            .try_fold(0usize, |acc, &b| Ok(acc << 6 | sextet(b)? as usize))
    };
    let (n, start) = match body {
        [b'~', b'~', ..] => (read(2..8)?, 8),
        [b'~', ..] => (read(1..4)?, 4),
        _ => (read(0..1)?, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::Format(format!("{n} vertices exceeds the supported maximum")));
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let needed = pairs.div_ceil(6);
    let data = &body[start..];
    if data.len() < needed {
        return Err(Error::Format(format!(
            "truncated adjacency: expected {needed} bytes, found {}",
            data.len()
        )));
    }
    if data.len() > needed {
        return Err(Error::Format(format!(
            "{} trailing bytes after adjacency data",
            data.len() - needed
        )));
    }
    let data: Vec<u8> = data.iter().map(|&b| sextet(b)).collect::<Result<_>>()?;
    let mut b = GraphBuilder::new(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if data[k / 6] >> (5 - k % 6) & 1 == 1 {
                b.set_edge_unchecked(i, j);
            }
            k += 1;
        }
    }
    Ok(b.build())
}

pub fn encode_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(str::trim)
        .enumerate()
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let numbers = |lineno: usize, line: &str| -> Result<(usize, usize)> {
        let parts: Vec<&str> = line.split_whitespace().collect();
        match parts.as_slice() {
            [a, b] => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| {
                        Error::Format(format!("line {}: `{s}` is not a vertex index", lineno + 1))
                    })
                };
                Ok((parse(a)?, parse(b)?))
            }
            _ => Err(Error::Format(format!(
                "line {}: expected two integers, found `{line}`",
                lineno + 1
            ))),
        }
    };
    let (lineno, header) = lines
        .next()
        .ok_or_else(|| Error::Format("empty edge list".into()))?;
    let (n, m) = numbers(lineno, header)?;
    if n > MAX_VERTICES {
        return Err(Error::Format(format!("{n} vertices exceeds the supported maximum")));
    }
    let mut b = GraphBuilder::new(n);
    let mut seen = 0;
    for (lineno, line) in lines {
        let (u, v) = numbers(lineno, line)?;
        b.add_edge(u, v)?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::Format(format!("header promises {m} edges, found {seen}")));
    }
    Ok(b.build())
}

/// Accepts either format: a first content line containing whitespace is an
/// edge-list header, anything else is graph6.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| Error::Format("empty input".into()))?;
    if first.contains(char::is_whitespace) {
        parse_edge_list(text)
    } else {
        let rest: Vec<&str> = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .collect();
        if rest.len() > 1 {
            return Err(Error::Format("expected a single graph6 line".into()));
        }
        parse_graph6(first)
    }
}
