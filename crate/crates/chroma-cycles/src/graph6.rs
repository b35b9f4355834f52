//! graph6 / sparse6 text codec (McKay's interchange formats).
//!
//! One graph per line. We read both formats and always write graph6.
//! Byte offsets in errors refer to the line after the optional
//! `>>graph6<<` / `>>sparse6<<` header has been stripped.

use thiserror::Error;

use crate::graph::{Graph, GraphError, MAX_VERTICES};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("byte {offset}: character {byte:#04x} outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed length prefix")]
    BadLengthPrefix { offset: usize },
    #[error("graph order {n} exceeds the configured limit {limit}")]
    OrderLimit { n: usize, limit: usize },
    #[error("byte {offset}: expected {expected} data bytes, found {found}")]
    WrongDataLength {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("byte {offset}: nonzero padding bits")]
    TrailingBits { offset: usize },
    #[error("byte {offset}: sparse6 stream encodes a self-loop at vertex {v}")]
    SparseLoop { offset: usize, v: usize },
    #[error("empty input line")]
    Empty,
    #[error("not a sparse6 line (missing ':' prefix)")]
    NotSparse6,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const G6_HEADER: &str = ">>graph6<<";
const S6_HEADER: &str = ">>sparse6<<";

fn check_bytes(bytes: &[u8]) -> Result<(), Graph6Error> {
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    Ok(())
}

/// Decodes the order prefix N(n); returns (n, bytes consumed).
fn parse_order(bytes: &[u8], at: usize) -> Result<(usize, usize), Graph6Error> {
    let need = |len: usize| -> Result<(), Graph6Error> {
        if bytes.len() < at + len {
            Err(Graph6Error::BadLengthPrefix { offset: bytes.len() })
        } else {
            Ok(())
        }
    };
    need(1)?;
    if bytes[at] != 126 {
        return Ok(((bytes[at] - 63) as usize, 1));
    }
    need(2)?;
    if bytes[at + 1] != 126 {
        need(4)?;
        let n = bytes[at + 1..at + 4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 63 {
            return Err(Graph6Error::BadLengthPrefix { offset: at });
        }
        Ok((n, 4))
    } else {
        need(8)?;
        let n = bytes[at + 2..at + 8]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        if n < 258_048 {
            return Err(Graph6Error::BadLengthPrefix { offset: at });
        }
        Ok((n, 8))
    }
}

fn encode_order(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        out.push(126);
        out.push(126);
        for shift in (0..6).rev() {
            out.push(((n >> (6 * shift)) & 63) as u8 + 63);
        }
    }
}

/// Parses one graph6 line, rejecting graphs larger than `limit` vertices.
pub fn parse_graph6_with_limit(text: &str, limit: usize) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(G6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    check_bytes(bytes)?;
    let (n, header_len) = parse_order(bytes, 0)?;
    if n > limit {
        return Err(Graph6Error::OrderLimit { n, limit });
    }
    let nbits = n.saturating_sub(1) * n / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() != expected {
        return Err(Graph6Error::WrongDataLength {
            offset: header_len,
            expected,
            found: data.len(),
        });
    }
    let mut g = Graph::empty(n)?;
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[pos / 6] - 63;
            if byte >> (5 - pos % 6) & 1 != 0 {
                g.add_edge(i, j)?;
            }
            pos += 1;
        }
    }
    // Padding must be zero.
    if nbits % 6 != 0 {
        let last = data[expected - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(Graph6Error::TrailingBits {
                offset: header_len + expected - 1,
            });
        }
    }
    Ok(g)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph6_with_limit(text, MAX_VERTICES)
}

/// Canonical graph6 encoding of a graph.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    encode_order(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Parses one sparse6 line (`:` prefixed), rejecting graphs above `limit`.
///
/// Multiple edges collapse; loops are rejected since the graph type is
/// simple. Conforming encoders never pad in a way that decodes as a loop.
pub fn parse_sparse6_with_limit(text: &str, limit: usize) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    let line = line.strip_prefix(S6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] != b':' {
        return Err(Graph6Error::NotSparse6);
    }
    let body = &bytes[1..];
    check_bytes(body)?;
    let (n, header_len) = parse_order(body, 0)?;
    if n > limit {
        return Err(Graph6Error::OrderLimit { n, limit });
    }
    let mut g = Graph::empty(n)?;
    if n <= 1 {
        return Ok(g);
    }
    let k = usize::BITS as usize - (n - 1).leading_zeros() as usize; // bits for n-1
    let data = &body[header_len..];
    let total_bits = data.len() * 6;
    let bit = |idx: usize| -> u64 { (data[idx / 6] - 63) as u64 >> (5 - idx % 6) & 1 };
    let mut pos = 0usize;
    let mut v = 0usize;
    while pos + 1 + k <= total_bits {
        let b = bit(pos);
        let mut x = 0usize;
        for t in 0..k {
            x = (x << 1) | bit(pos + 1 + t) as usize;
        }
        pos += 1 + k;
        if b == 1 {
            v += 1;
        }
        if x >= n || v >= n {
            break;
        }
        if x > v {
            v = x;
        } else if x == v {
            return Err(Graph6Error::SparseLoop {
                offset: 1 + header_len + (pos - 1) / 6,
                v,
            });
        } else {
            g.add_edge(x, v)?;
        }
    }
    Ok(g)
}

pub fn parse_sparse6(text: &str) -> Result<Graph, Graph6Error> {
    parse_sparse6_with_limit(text, MAX_VERTICES)
}

/// Parses a line in either format, dispatching on the sparse6 `:` prefix
/// or a format header.
pub fn parse_graph_line_with_limit(text: &str, limit: usize) -> Result<Graph, Graph6Error> {
    let line = text.trim_end_matches(['\n', '\r']);
    if line.starts_with(':') || line.starts_with(S6_HEADER) {
        parse_sparse6_with_limit(line, limit)
    } else {
        parse_graph6_with_limit(line, limit)
    }
}

pub fn parse_graph_line(text: &str) -> Result<Graph, Graph6Error> {
    parse_graph_line_with_limit(text, MAX_VERTICES)
}
