//! The graph6 text encoding.
//!
//! A header encodes `n` (one byte `n + 63` for `n <= 62`, otherwise `~`
//! followed by three 6-bit bytes for `n <= 258047`). The body packs the upper
//! triangle of the adjacency matrix column by column (`x(0,1), x(0,2),
//! x(1,2), x(0,3), ...`) into 6-bit groups, each written as `group + 63`,
//! with zero padding at the end. Only the canonical minimal header is
//! produced; parsing is strict about length and padding.

use crate::error::{Error, Result};
use crate::graph::Graph;

const SMALL_MAX: usize = 62;
const MEDIUM_MAX: usize = 258_047;

fn err(msg: impl Into<String>) -> Error {
    Error::Graph6(msg.into())
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn serialize_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= SMALL_MAX {
        out.push(n as u8 + 63);
    } else if n <= MEDIUM_MAX {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        return Err(err(format!("order {n} exceeds {MEDIUM_MAX}")));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(err(format!("byte {pos} is outside 63..126")));
    }
    let (n, body) = match bytes {
        [] => return Err(err("empty input")),
        [b'~', b'~', ..] => return Err(err("orders above 258047 are not supported")),
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(err("truncated extended header"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n <= SMALL_MAX {
                return Err(err("non-minimal header"));
            }
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let expected = body_len(n);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} body bytes for n = {n}, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if !k.is_multiple_of(6) {
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if (body[k / 6] - 63) & pad_mask != 0 {
            return Err(err("non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}
