//! The graph6 line format, restricted to the one-byte size header (n <= 62).
//!
//! Bits are the upper triangle in column-major order, `(0,1),(0,2),(1,2),(0,3),...`,
//! packed six per byte most-significant first and offset by 63.

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_N: usize = 62;

const BIAS: u8 = 63;

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Error::Graph6Size(n));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + BIAS) as char);
    let mut acc = 0u8;
    let mut used = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
            used += 1;
            if used == 6 {
                out.push((acc + BIAS) as char);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push(((acc << (6 - used)) + BIAS) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let err = |offset, reason| Error::Graph6 { offset, reason };
    let &head = bytes.first().ok_or(err(0, "empty input"))?;
    if head == 126 {
        return Err(err(0, "multi-byte size headers (n > 62) are not supported"));
    }
    if !(BIAS..126).contains(&head) {
        return Err(err(0, "malformed header byte"));
    }
    let n = (head - BIAS) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    let body = &bytes[1..];
    if body.len() < nbytes {
        return Err(err(bytes.len(), "truncated bit field"));
    }
    if body.len() > nbytes {
        return Err(err(1 + nbytes, "trailing bytes after bit field"));
    }
    for (i, &b) in body.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(1 + i, "character out of range"));
        }
    }
    let pad = nbytes * 6 - nbits;
    if pad > 0 {
        let last = body[nbytes - 1] - BIAS;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(nbytes, "nonzero padding bits"));
        }
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}
