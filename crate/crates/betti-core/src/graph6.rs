//! Bit-exact codec for the graph6 format (McKay's format description).
//!
//! One graph per ASCII line: an order header N(n) followed by the upper
//! triangle of the adjacency matrix read column by column, packed six bits
//! per printable byte (offset 63). Orders 0..=62 use a single header byte;
//! 63 and 64 use the `~` three-byte extension.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

fn bad(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 { offset, reason: reason.into() }
}

/// Decodes one graph6 word. Trailing bytes after the encoded graph are an error.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(bad(0, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(bad(i, format!("byte 0x{b:02x} outside graph6 range 63..=126")));
        }
    }
    let (n, mut pos) = if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            return Err(bad(1, "8-byte order header: order exceeds supported range"));
        }
        if bytes.len() < 4 {
            return Err(bad(bytes.len(), "truncated multi-byte order header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    if n > MAX_VERTICES {
        return Err(bad(0, format!("order {n} exceeds the {MAX_VERTICES}-vertex capacity")));
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() - pos < nbytes {
        return Err(bad(bytes.len(), format!("truncated edge data: need {nbytes} bytes after header")));
    }
    if bytes.len() - pos > nbytes {
        return Err(bad(pos + nbytes, "trailing garbage after encoded graph"));
    }

    let mut g = Graph::empty(n)?;
    let mut bit_index = 0usize;
    'cols: for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_index / 6];
            let bit = (byte - 63) >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge(i, j)?;
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'cols;
            }
        }
    }
    // padding bits must be zero
    if nbits % 6 != 0 {
        let last = bytes[pos + nbytes - 1] - 63;
        let pad = 6 - nbits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(bad(pos + nbytes - 1, "nonzero padding bits"));
        }
    }
    pos += nbytes;
    let _ = pos;
    Ok(g)
}

/// Encodes a graph as one graph6 word; [`parse_graph6`] inverts it exactly.
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(b'~');
        out.push(63 + (n >> 12 & 63) as u8);
        out.push(63 + (n >> 6 & 63) as u8);
        out.push(63 + (n & 63) as u8);
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).unwrap()
}

/// Parses a whole corpus: one graph6 word per non-empty line.
pub fn parse_graph6_file(contents: &str) -> Result<Vec<Graph>> {
    contents
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| parse_graph6(l.strip_prefix(">>graph6<<").unwrap_or(l)))
        .collect()
}
