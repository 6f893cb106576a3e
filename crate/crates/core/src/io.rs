//! graph6 and edge-list text formats.
//!
//! graph6 encoding is bit-exact: a header carrying the order followed by the
//! upper triangle of the adjacency matrix in column-major order, six bits per
//! printable byte (offset 63). Decoding is strict — out-of-range bytes,
//! truncation, trailing bytes and nonzero padding are all rejected with the
//! offending byte offset.

use crate::error::{Error, Graph6ErrorKind, Result};
use crate::graph::Graph;

const OFFSET: u8 = 63;

fn g6_err(offset: usize, kind: Graph6ErrorKind) -> Error {
    Error::Graph6 { offset, kind }
}

/// Upper-triangle pair count.
fn body_bits(n: usize) -> usize {
    n * (n - 1) / 2
}

/// Decodes one graph6 line. A leading `>>graph6<<` marker is accepted.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let mut bytes = line.trim_end_matches(['\r', '\n']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if bytes.is_empty() {
        return Err(g6_err(base, Graph6ErrorKind::Empty));
    }

    let (n, header_len) = decode_order(bytes, base)?;
    let expected = body_bits(n).div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < expected {
        return Err(g6_err(
            base + bytes.len(),
            Graph6ErrorKind::Truncated {
                expected,
                got: body.len(),
            },
        ));
    }
    let (used, rest) = body.split_at(expected);

    let mut g = Graph::empty(n);
    let mut bit_index = 0usize;
    let mut pairs = pair_sequence(n);
    for (i, &b) in used.iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(g6_err(base + header_len + i, Graph6ErrorKind::ByteOutOfRange(b)));
        }
        let chunk = b - OFFSET;
        for k in 0..6 {
            let bit = chunk >> (5 - k) & 1;
            if bit_index < body_bits(n) {
                if bit == 1 {
                    let (u, v) = pairs.next().expect("pair for in-range bit");
                    g.set_edge(u, v);
                } else {
                    pairs.next();
                }
            } else if bit == 1 {
                return Err(g6_err(base + header_len + i, Graph6ErrorKind::BadPadding));
            }
            bit_index += 1;
        }
    }
    if !rest.is_empty() {
        return Err(g6_err(base + header_len + expected, Graph6ErrorKind::TrailingGarbage));
    }
    Ok(g)
}

/// Column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), …
fn pair_sequence(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |j| (0..j).map(move |i| (i, j)))
}

fn decode_order(bytes: &[u8], base: usize) -> Result<(usize, usize)> {
    let b0 = bytes[0];
    if b0 == 126 {
        if bytes.len() >= 2 && bytes[1] == 126 {
            return Err(g6_err(base, Graph6ErrorKind::UnsupportedOrder));
        }
        if bytes.len() < 4 {
            return Err(g6_err(base, Graph6ErrorKind::BadHeader));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(OFFSET..=126).contains(&b) {
                return Err(g6_err(base + 1 + i, Graph6ErrorKind::ByteOutOfRange(b)));
            }
            n = n << 6 | (b - OFFSET) as usize;
        }
        if n < 63 {
            // value fits the single-byte header; the long form is malformed
            return Err(g6_err(base, Graph6ErrorKind::BadHeader));
        }
        Ok((n, 4))
    } else if (OFFSET..126).contains(&b0) {
        Ok(((b0 - OFFSET) as usize, 1))
    } else {
        Err(g6_err(base, Graph6ErrorKind::BadHeader))
    }
}

/// Encodes a graph as its canonical graph6 byte string.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        assert!(n <= 258047, "graph6 long-form header supports order <= 258047");
        out.push(126);
        out.push(OFFSET + ((n >> 12) & 0x3f) as u8);
        out.push(OFFSET + ((n >> 6) & 0x3f) as u8);
        out.push(OFFSET + (n & 0x3f) as u8);
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for (i, j) in pair_sequence(n) {
        chunk = chunk << 1 | u8::from(g.has_edge(i, j));
        filled += 1;
        if filled == 6 {
            out.push(OFFSET + chunk);
            chunk = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push(OFFSET + (chunk << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

/// A graph parsed from text, with the original labels when the input used a
/// sparse labeling.
#[derive(Debug, Clone)]
pub struct ParsedGraph {
    pub graph: Graph,
    /// `labels[new_id] = original label`; `None` when labels were already
    /// dense `0..n`.
    pub labels: Option<Vec<u64>>,
}

/// Parses an edge-list text: one `u v` pair per line, 0-based labels.
/// Blank lines are skipped. Sparse labels are re-indexed in sorted order and
/// the map is reported.
pub fn parse_edge_list(text: &str) -> Result<ParsedGraph> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    let mut labels: Vec<u64> = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (a, b) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(Error::EdgeList {
                    line: line_no,
                    message: format!("expected exactly two vertex labels, got {line:?}"),
                })
            }
        };
        let parse = |tok: &str| -> Result<u64> {
            tok.parse().map_err(|_| Error::EdgeList {
                line: line_no,
                message: format!("invalid vertex label {tok:?}"),
            })
        };
        let (u, v) = (parse(a)?, parse(b)?);
        if u == v {
            return Err(Error::EdgeList {
                line: line_no,
                message: format!("self-loop at vertex {u}"),
            });
        }
        raw_edges.push((u, v));
        labels.push(u);
        labels.push(v);
    }
    labels.sort_unstable();
    labels.dedup();
    let index_of = |label: u64| labels.binary_search(&label).expect("label present");
    let n = labels.len();
    let edges: Vec<(usize, usize)> = raw_edges
        .iter()
        .map(|&(u, v)| (index_of(u), index_of(v)))
        .collect();
    let graph = Graph::from_edges(n, &edges)?;
    let dense = labels.iter().enumerate().all(|(i, &l)| l == i as u64);
    Ok(ParsedGraph {
        graph,
        labels: if dense { None } else { Some(labels) },
    })
}

/// One `u v` line per edge, ascending.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
