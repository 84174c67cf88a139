//! graph6 encoding as used by nauty and friends.
//!
//! Layout: `N(n) R(x)` where `N(n)` is the vertex count in 1, 4 or 8 bytes and
//! `R(x)` packs the upper triangle column by column (`x(0,1) x(0,2) x(1,2)
//! x(0,3) ...`) six bits per byte, offset by 63, zero-padded.

use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn six_bits(bytes: &[u8], offset: usize) -> Result<u64> {
    let mut acc = 0u64;
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=BIAS + 63).contains(&b) {
            return Err(err(offset + i, format!("byte {b:#04x} outside 63..=126")));
        }
        acc = (acc << 6) | u64::from(b - BIAS);
    }
    Ok(acc)
}

/// Parses one graph6 string. An optional `>>graph6<<` header is accepted;
/// byte offsets in errors are relative to the full input.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let start = if text.starts_with(HEADER) { HEADER.len() } else { 0 };
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(err(start, "missing vertex count"));
    }

    let (n, header_len) = if body[0] != 126 {
        (six_bits(&body[..1], start)? as usize, 1)
    } else if body.len() >= 2 && body[1] == 126 {
        if body.len() < 8 {
            return Err(err(start + body.len(), "truncated 8-byte vertex count"));
        }
        (six_bits(&body[2..8], start + 2)? as usize, 8)
    } else {
        if body.len() < 4 {
            return Err(err(start + body.len(), "truncated 4-byte vertex count"));
        }
        let n = six_bits(&body[1..4], start + 1)? as usize;
        if n < 63 {
            return Err(err(start, "non-minimal vertex count encoding"));
        }
        (n, 4)
    };
    if header_len == 8 && n <= 258_047 {
        return Err(err(start, "non-minimal vertex count encoding"));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    let data = &body[header_len..];
    let data_offset = start + header_len;
    if data.len() < need {
        return Err(err(
            data_offset + data.len(),
            format!("truncated bit vector: need {need} bytes, have {}", data.len()),
        ));
    }
    if data.len() > need {
        return Err(err(data_offset + need, "trailing bytes after bit vector"));
    }

    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6];
            if !(BIAS..=BIAS + 63).contains(&byte) {
                return Err(err(
                    data_offset + k / 6,
                    format!("byte {byte:#04x} outside 63..=126"),
                ));
            }
            if (byte - BIAS) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = data[need - 1];
        if !(BIAS..=BIAS + 63).contains(&last) {
            return Err(err(data_offset + need - 1, "byte outside 63..=126"));
        }
        let pad = 6 - bits % 6;
        if (last - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(err(data_offset + need - 1, "nonzero padding bits"));
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

/// Encodes `g` without the optional header.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n as u64 >> (6 * i)) & 63) as u8 + BIAS));
    }

    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}
