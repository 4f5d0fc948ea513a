//! graph6 encoding.
//!
//! The order is written as `chr(63 + n)` (or `~` plus three bytes for
//! `63 <= n <= 64`), followed by the upper-triangle adjacency bits in column
//! order `(0,1), (0,2), (1,2), (0,3), ..`, packed big-endian six bits per
//! byte, each offset by 63, zero-padded.

use std::io::BufRead;

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

fn malformed(input: &str, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        input: input.to_string(),
        reason: reason.into(),
    }
}

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 0x3f) as u8) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    out
}

pub fn graph6_decode(s: &str) -> Result<Graph> {
    let bytes = s.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(
            s,
            format!("byte {:#04x} at offset {pos} is outside 63..=126", bytes[pos]),
        ));
    }
    let (n, body) = match bytes {
        [] => return Err(malformed(s, "empty input")),
        [b'~', b'~', ..] => return Err(malformed(s, "orders above 258047 are not supported")),
        [b'~', rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed(s, "truncated order field"));
            }
            let n = rest[..3].iter().fold(0usize, |acc, b| acc << 6 | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    if n == 0 || n > MAX_ORDER {
        return Err(malformed(s, format!("order {n} is outside 1..={MAX_ORDER}")));
    }
    let nbits = n * (n - 1) / 2;
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return Err(malformed(
            s,
            format!("expected {need} payload bytes, found {}", body.len()),
        ));
    }
    if body.len() > need {
        return Err(malformed(s, format!("{} trailing bytes", body.len() - need)));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let pad = need * 6 - nbits;
    if pad > 0 && (body[need - 1] - 63) & ((1 << pad) - 1) != 0 {
        return Err(malformed(s, "nonzero padding bits"));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Reads one graph per line. A leading `>>graph6<<` header is skipped, as
/// are blank lines.
pub fn read_graph6<R: BufRead>(reader: R) -> Result<Vec<Graph>> {
    let mut out = Vec::new();
    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let mut text = line.trim_end_matches(['\r', '\n']);
        if idx == 0 {
            text = text.strip_prefix(HEADER).unwrap_or(text);
        }
        if text.is_empty() {
            continue;
        }
        out.push(graph6_decode(text)?);
    }
    Ok(out)
}
