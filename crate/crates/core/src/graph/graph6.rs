//! graph6 text encoding of undirected simple graphs.
//!
//! Size prefix: one byte `n + 63` for `n <= 62`, or `'~'` followed by
//! three 6-bit bytes for `63 <= n <= 258047`. Edge bits are the upper
//! triangle read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`),
//! packed big-endian into 6-bit groups, each offset by 63.

use crate::error::Error;
use crate::graph::Graph;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        assert!(n <= 258_047, "graph too large for the 3-byte size form");
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
    let mut bits = Vec::with_capacity(n * (n - 1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.has_edge(i, j));
        }
    }
    for chunk in bits.chunks(6) {
        let mut value = 0u8;
        for (k, &bit) in chunk.iter().enumerate() {
            if bit {
                value |= 1 << (5 - k);
            }
        }
        out.push((value + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph, Error> {
    let bytes: Vec<u8> = text.trim_end().bytes().collect();
    if bytes.is_empty() {
        return Err(Error::Graph6("empty input".into()));
    }
    for &b in &bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("byte {b} out of printable range")));
        }
    }
    let (n, pos) = if bytes[0] == b'~' {
        if bytes.len() < 4 {
            return Err(Error::Graph6("truncated size field".into()));
        }
        if bytes[1] == b'~' {
            return Err(Error::Graph6("8-byte size form not supported".into()));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, 4)
    } else {
        ((bytes[0] - 63) as usize, 1)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    if bytes.len() - pos != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} edge bytes for n = {n}, found {}",
            bytes.len() - pos
        )));
    }
    let mut g = Graph::new(n);
    let mut bit_idx = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[pos + bit_idx / 6] - 63;
            if byte >> (5 - bit_idx % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            bit_idx += 1;
        }
    }
    Ok(g)
}
