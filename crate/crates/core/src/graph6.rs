//! graph6 encoding for graphs with at most 62 vertices.
//!
//! Layout: one size byte `n + 63`, then the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`)
//! packed big-endian into 6-bit groups, each stored as `group + 63`.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest vertex count representable with the single size byte.
pub const GRAPH6_MAX_N: usize = 62;

pub fn encode(g: &Graph) -> Result<Vec<u8>> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Cap(format!("graph6 supports n <= {GRAPH6_MAX_N}, got {n}")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + bits.div_ceil(6));
    out.push(n as u8 + 63);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(chunk + 63);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    Ok(out)
}

pub fn encode_string(g: &Graph) -> Result<String> {
    encode(g).map(|b| String::from_utf8(b).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(bytes: &[u8]) -> Result<Graph> {
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#04x} outside graph6 range 63..=126")));
    }
    let (&head, body) = bytes.split_first().ok_or_else(|| Error::Parse("empty graph6 string".into()))?;
    if head == 126 {
        return Err(Error::Parse(format!("multi-byte size header unsupported (n > {GRAPH6_MAX_N})")));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    if body.len() != bits.div_ceil(6) {
        return Err(Error::Parse(format!(
            "expected {} data bytes for n={n}, found {}",
            bits.div_ceil(6),
            body.len()
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
    Graph::from_edges(n, edges)
}

/// Decode, ignoring surrounding whitespace such as a trailing newline.
pub fn decode_str(s: &str) -> Result<Graph> {
    decode(s.trim().as_bytes())
}
