//! Text formats: graph6 and a plain edge list.
//!
//! graph6 packs the upper triangle column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`) into 6-bit groups, each written as a byte offset by 63. The
//! vertex count comes first: one byte for `n <= 62`, `~` plus three bytes
//! for `n <= 258047`, `~~` plus six bytes beyond that.

use super::Graph;
use crate::{Error, Result};

const BIAS: u8 = 63;
const SHORT_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn g6_err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { offset, msg: msg.into() }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    let c = *bytes
        .get(offset)
        .ok_or_else(|| g6_err(offset, "unexpected end of input"))?;
    if !(BIAS..=126).contains(&c) {
        return Err(g6_err(offset, format!("byte {c} outside 63..=126")));
    }
    Ok(u64::from(c - BIAS))
}

fn read_order(bytes: &[u8]) -> Result<(usize, usize)> {
    if bytes.is_empty() {
        return Err(g6_err(0, "empty input"));
    }
    if bytes[0] != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    let (start, groups) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let mut n = 0u64;
    for i in 0..groups {
        n = (n << 6) | sextet(bytes, start + i)?;
    }
    Ok((n as usize, start + groups))
}

/// Parses one graph6 string. A single trailing line terminator is tolerated.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.strip_suffix('\n').unwrap_or(text);
    let text = text.strip_suffix('\r').unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, header) = read_order(bytes)?;

    let pairs = n * n.saturating_sub(1) / 2;
    let body = pairs.div_ceil(6);
    let expected = header + body;
    if bytes.len() < expected {
        return Err(g6_err(
            bytes.len(),
            format!("truncated: n = {n} needs {expected} bytes, got {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(g6_err(expected, "trailing bytes after graph"));
    }

    let mut g = Graph::new(n);
    let mut k = 0usize;
    'outer: for v in 1..n {
        for u in 0..v {
            let offset = header + k / 6;
            let bit = 5 - (k % 6);
            if sextet(bytes, offset)? >> bit & 1 == 1 {
                g.set(u, v, true);
            }
            k += 1;
            if k == pairs {
                break 'outer;
            }
        }
    }
    if pairs % 6 != 0 {
        let last = expected - 1;
        let pad = 6 - pairs % 6;
        if sextet(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(g6_err(last, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph as graph6 (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= SHORT_MAX {
        out.push(n as u8 + BIAS);
    } else if n <= MEDIUM_MAX {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n as u64 >> shift) & 0x3f) as u8 + BIAS);
        }
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses the edge-list format: the first non-blank line holds `n`, each
/// following non-blank line holds `u v` with `0 <= u, v < n` and `u != v`.
/// Duplicate edges collapse.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first_line, header) = lines.next().ok_or(Error::EdgeList {
        line: 1,
        msg: "missing vertex count".into(),
    })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first_line,
        msg: format!("expected a vertex count, found {header:?}"),
    })?;

    let mut g = Graph::new(n);
    for (line, text) in lines {
        let err = |msg: String| Error::EdgeList { line, msg };
        let tokens: Vec<&str> = text.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(err(format!("expected two vertices, found {} tokens", tokens.len())));
        }
        let mut ends = [0usize; 2];
        for (slot, tok) in ends.iter_mut().zip(&tokens) {
            *slot = tok
                .parse()
                .map_err(|_| err(format!("{tok:?} is not a vertex index")))?;
            if *slot >= n {
                return Err(err(format!("vertex {slot} out of range for n = {n}")));
            }
        }
        if ends[0] == ends[1] {
            return Err(err(format!("self-loop at vertex {}", ends[0])));
        }
        g.set(ends[0], ends[1], true);
    }
    Ok(g)
}
