//! Text formats: graph6 lines and plain edge lists.

use thiserror::Error;

use crate::graph::{GraphError, SimpleGraph, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    MalformedByte { offset: usize, byte: u8 },
    #[error("graph6 line for n = {n} needs {expected} data bytes, found {found}")]
    LengthMismatch {
        n: usize,
        expected: usize,
        found: usize,
    },
    #[error("graph6 padding bits are not zero")]
    NonZeroPadding,
    #[error("graph6 header declares more than 64 vertices")]
    TooLarge,
    #[error("edge list line {line}: {msg}")]
    EdgeList { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses one graph6 line (trailing whitespace ignored).
pub fn parse_graph6(line: &str) -> Result<SimpleGraph, FormatError> {
    let bytes = line.trim_end().as_bytes();
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(FormatError::MalformedByte { offset, byte });
        }
    }
    let (n, data) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        return Err(FormatError::TooLarge);
    };
    if n > MAX_VERTICES {
        return Err(FormatError::TooLarge);
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(FormatError::LengthMismatch {
            n,
            expected,
            found: data.len(),
        });
    }
    let get = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(get) {
        return Err(FormatError::NonZeroPadding);
    }
    let mut g = SimpleGraph::new(n)?;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if get(k) {
                g.insert_edge(u, v)?;
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn emit_graph6(g: &SimpleGraph) -> Result<String, FormatError> {
    let n = g.n();
    let mut out = String::with_capacity(4 + n * n / 12);
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

/// Parses every graph in an edge-list stream. Each graph starts with a
/// header `n m` followed by `m` lines `u v`; blank lines and `#` comments
/// are skipped.
pub fn parse_edge_lists(text: &str) -> Result<Vec<SimpleGraph>, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut out = Vec::new();
    let pair = |line: usize, l: &str| -> Result<(usize, usize), FormatError> {
        let nums: Vec<&str> = l.split_whitespace().collect();
        if nums.len() != 2 {
            return Err(FormatError::EdgeList {
                line,
                msg: format!("expected two integers, got {l:?}"),
            });
        }
        let parse = |s: &str| {
            s.parse::<usize>().map_err(|e| FormatError::EdgeList {
                line,
                msg: e.to_string(),
            })
        };
        Ok((parse(nums[0])?, parse(nums[1])?))
    };
    while let Some((line, header)) = lines.next() {
        let (n, m) = pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line, l) = lines.next().ok_or(FormatError::EdgeList {
                line,
                msg: format!("expected {m} edges"),
            })?;
            edges.push(pair(line, l)?);
        }
        out.push(SimpleGraph::from_edges(n, &edges)?);
    }
    Ok(out)
}

/// Parses a single edge-list graph.
pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, FormatError> {
    let mut all = parse_edge_lists(text)?;
    match all.len() {
        1 => Ok(all.pop().unwrap()),
        k => Err(FormatError::EdgeList {
            line: 0,
            msg: format!("expected exactly one graph, found {k}"),
        }),
    }
}

pub fn emit_edge_list(g: &SimpleGraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
