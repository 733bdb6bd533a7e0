//! graph6 encoding.
//!
//! A line is the order header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column-major order (`x(0,1) x(0,2) x(1,2) x(0,3) ..`),
//! packed six bits per byte with 63 added, zero-padded at the end.

use crate::error::Graph6Error;
use crate::graph::{Graph, MAX_ORDER};

fn push_header(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.push((n >> 12 & 0x3f) as u8 + 63);
        out.push((n >> 6 & 0x3f) as u8 + 63);
        out.push((n & 0x3f) as u8 + 63);
    }
}

pub fn encode_bytes(g: &Graph) -> Vec<u8> {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_header(&mut out, n);
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
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
    out
}

pub fn encode(g: &Graph) -> String {
    String::from_utf8(encode_bytes(g)).expect("graph6 output is printable ASCII")
}

fn err(offset: usize, reason: impl Into<String>) -> Graph6Error {
    Graph6Error {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line (no trailing newline).
pub fn decode(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if let Some(pos) = bytes.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(
            pos,
            format!("byte {:#04x} is outside the printable range 63..=126", bytes[pos]),
        ));
    }
    let (n, body_start) = match bytes.first() {
        None => return Err(err(0, "empty line")),
        Some(&126) => {
            if bytes.get(1) == Some(&126) {
                return Err(err(1, "eight-byte order header exceeds the 64-vertex limit"));
            }
            if bytes.len() < 4 {
                return Err(err(bytes.len(), "truncated four-byte order header"));
            }
            let n = bytes[1..4].iter().fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
            (n, 4)
        }
        Some(&b) => ((b - 63) as usize, 1),
    };
    if n > MAX_ORDER {
        return Err(err(0, format!("order {n} exceeds the 64-vertex limit")));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[body_start..];
    if body.len() < body_len {
        return Err(err(
            bytes.len(),
            format!(
                "expected {body_len} adjacency bytes for order {n}, found {}",
                body.len()
            ),
        ));
    }
    if body.len() > body_len {
        return Err(err(body_start + body_len, "trailing bytes after adjacency data"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[body_len - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(body_start + body_len - 1, "non-zero padding bits"));
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
