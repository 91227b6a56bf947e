//! Text formats for graphs: graph6 and a plain edge list.
//!
//! The edge-list format is a header line `n m` followed by `m` lines `u v`
//! with 0-based labels. Blank lines and `#` comments are ignored.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("graph6: byte {0:#04x} outside the printable range 63..=126")]
    BadByte(u8),
    #[error("graph6: truncated input")]
    Truncated,
    #[error("graph6: expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    NonCanonicalPadding,
    #[error("edge list line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn encode_order(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes a graph as a graph6 string (no header, no newline).
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(((acc << (6 - nbits)) + 63) as char);
    }
    out
}

fn sextets(bytes: &[u8]) -> Result<Vec<u8>, ParseError> {
    bytes
        .iter()
        .map(|&b| {
            if (63..=126).contains(&b) {
                Ok(b - 63)
            } else {
                Err(ParseError::BadByte(b))
            }
        })
        .collect()
}

/// Parses one graph6 record. An optional `>>graph6<<` header and
/// surrounding whitespace are accepted.
pub fn from_graph6(s: &str) -> Result<Graph, ParseError> {
    let s = s.trim();
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let data = sextets(s.as_bytes())?;
    let (n, rest) = match data.as_slice() {
        [63, 63, tail @ ..] => {
            if tail.len() < 6 {
                return Err(ParseError::Truncated);
            }
            let n = tail[..6].iter().fold(0usize, |n, &x| (n << 6) | x as usize);
            (n, &tail[6..])
        }
        [63, tail @ ..] => {
            if tail.len() < 3 {
                return Err(ParseError::Truncated);
            }
            let n = tail[..3].iter().fold(0usize, |n, &x| (n << 6) | x as usize);
            (n, &tail[3..])
        }
        [x, tail @ ..] => (*x as usize, tail),
        [] => return Err(ParseError::Empty),
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if rest.len() != expected {
        return Err(ParseError::WrongLength {
            expected,
            found: rest.len(),
        });
    }
    let bit = |k: usize| (rest[k / 6] >> (5 - k % 6)) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(ParseError::NonCanonicalPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Emits the edge-list format with edges in ascending normalized order.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for e in g.edges() {
        out.push_str(&format!("{} {}\n", e.lo(), e.hi()));
    }
    out
}

pub fn from_edge_list(s: &str) -> Result<Graph, ParseError> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let parse_pair = |line: usize, l: &str| -> Result<(usize, usize), ParseError> {
        let err = |reason: &str| ParseError::EdgeList {
            line,
            reason: reason.to_string(),
        };
        let mut it = l.split_whitespace();
        let a = it.next().ok_or_else(|| err("missing field"))?;
        let b = it.next().ok_or_else(|| err("missing field"))?;
        if it.next().is_some() {
            return Err(err("expected exactly two integers"));
        }
        let a = a.parse().map_err(|_| err("not a nonnegative integer"))?;
        let b = b.parse().map_err(|_| err("not a nonnegative integer"))?;
        Ok((a, b))
    };
    let (hline, header) = lines.next().ok_or(ParseError::Empty)?;
    let (n, m) = parse_pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    for (line, l) in lines {
        edges.push(parse_pair(line, l)?);
    }
    if edges.len() != m {
        return Err(ParseError::EdgeList {
            line: hline,
            reason: format!("header declares {m} edges, found {}", edges.len()),
        });
    }
    Ok(Graph::new(n, edges)?)
}
