//! graph6 short form (n <= 62).
//!
//! Layout: one byte `n + 63`, then the upper triangle of the adjacency
//! matrix in column-major order `(0,1),(0,2),(1,2),(0,3),...`, packed six
//! bits per byte (most significant first), each byte offset by 63.

use crate::error::{GraphError, Result};
use crate::graph::Graph;

pub const MAX_VERTICES: usize = 62;
const HEADER: &str = ">>graph6<<";

pub(crate) fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let line = line.trim_end_matches(['\r', '\n']);
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    let Some((&first, body)) = bytes.split_first() else {
        return Err(GraphError::MalformedGraph6("empty string".into()));
    };
    if !(63..=126).contains(&first) {
        return Err(GraphError::MalformedGraph6(format!(
            "invalid header byte 0x{first:02x}"
        )));
    }
    if first == 126 {
        let n = long_form_order(body).unwrap_or(MAX_VERTICES + 1);
        return Err(GraphError::Graph6TooLarge(n));
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    if body.len() < expected {
        return Err(GraphError::MalformedGraph6(format!(
            "truncated bit field: {} of {expected} bytes",
            body.len()
        )));
    }
    if body.len() > expected {
        return Err(GraphError::MalformedGraph6(format!(
            "{} trailing bytes after the bit field",
            body.len() - expected
        )));
    }
    if let Some(&bad) = body.iter().find(|b| !(63..=126).contains(*b)) {
        return Err(GraphError::MalformedGraph6(format!(
            "invalid data byte 0x{bad:02x}"
        )));
    }

    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
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
    let total_bits = expected * 6;
    if (k..total_bits).any(bit) {
        return Err(GraphError::MalformedGraph6("nonzero padding bits".into()));
    }
    Graph::new(n, &edges)
}

fn long_form_order(body: &[u8]) -> Option<usize> {
    let digits = if body.first() == Some(&126) {
        body.get(1..7)?
    } else {
        body.get(0..3)?
    };
    Some(digits.iter().fold(0usize, |acc, &b| {
        (acc << 6) | (b.wrapping_sub(63) & 63) as usize
    }))
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(GraphError::Graph6TooLarge(n));
    }
    let order: Vec<usize> = (0..n).collect();
    Ok(encode_ordered(g, &order))
}

/// Encodes `g` with position `i` holding vertex `order[i]`.
pub(crate) fn encode_ordered(g: &Graph, order: &[usize]) -> String {
    let n = order.len();
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(n as u8 + 63);
    out.extend(pack_bits(g, order));
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// The offset-63 body bytes for the ordering; comparing these bytewise
/// compares the adjacency bit strings lexicographically.
pub(crate) fn pack_bits(g: &Graph, order: &[usize]) -> Vec<u8> {
    let n = order.len();
    let mut body = vec![0u8; body_len(n)];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if g.has_edge(order[i], order[j]) {
                body[k / 6] |= 1 << (5 - k % 6);
            }
            k += 1;
        }
    }
    for b in &mut body {
        *b += 63;
    }
    body
}
