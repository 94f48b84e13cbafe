//! graph6 encoding (one-byte size form only).
//!
//! The upper triangle is read column by column, `(0,1), (0,2), (1,2), (0,3),
//! ...`, packed six bits per byte, most significant first, each byte offset
//! by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    let Some(&first) = body.first() else {
        return Err(err(base, "empty input"));
    };
    if !(63..=126).contains(&first) {
        return Err(err(
            base,
            format!("byte {first:#04x} is not a graph6 size byte"),
        ));
    }
    if first == 126 {
        return Err(err(base, "multi-byte size form is not supported"));
    }
    let n = (first - 63) as usize;
    if n == 0 {
        return Err(err(base, "graphs need at least one vertex"));
    }
    debug_assert!(n <= MAX_VERTICES);
    let pairs = n * (n - 1) / 2;
    let need = pairs.div_ceil(6);
    let data = &body[1..];
    for (i, &b) in data.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + 1 + i, format!("byte {b:#04x} outside 63..=126")));
        }
    }
    if data.len() < need {
        return Err(err(
            base + 1 + data.len(),
            format!(
                "truncated: expected {need} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    if data.len() > need {
        return Err(err(base + 1 + need, "trailing bytes after adjacency data"));
    }
    let mut adj = vec![0u64; n];
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[idx / 6] - 63;
            if byte & (0x20 >> (idx % 6)) != 0 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            idx += 1;
        }
    }
    if need > 0 {
        let pad = need * 6 - pairs;
        let last = data[need - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(err(base + need, "nonzero padding bits"));
        }
    }
    Graph::from_rows(n, adj)
}

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(Error::UnsupportedSize(format!(
            "graph6 supports n <= {MAX_VERTICES}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((63 + n as u8) as char);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push((63 + acc) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((63 + (acc << (6 - filled))) as char);
    }
    Ok(out)
}
