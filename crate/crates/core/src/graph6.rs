//! graph6 encoding for graphs with at most 62 vertices.
//!
//! The header byte is `63 + n`; the upper triangle of the adjacency matrix
//! follows in column-major order (`(0,1) (0,2) (1,2) (0,3) ...`), packed six
//! bits per byte, each byte offset by 63. Trailing pad bits are zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

pub fn encode(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::Graph6(format!("order {n} needs the long form, which is not supported")));
    }
    let mut out = vec![(63 + n) as u8];
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

pub fn decode(text: &str) -> Result<Graph> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let bytes = bytes.strip_prefix(b">>graph6<<").unwrap_or(bytes);
    let (&head, body) = bytes.split_first().ok_or_else(|| Error::Graph6("empty input".into()))?;
    if !(63..=126).contains(&head) {
        return Err(Error::Graph6(format!("byte 0: invalid header byte {head}")));
    }
    if head == 126 {
        return Err(Error::Graph6("byte 0: long-form orders (n > 62) are not supported".into()));
    }
    let n = (head - 63) as usize;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!("expected {} bytes for order {n}, found {}", expected + 1, body.len() + 1)));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let pos = k / 6;
            let byte = body[pos];
            if !(63..=126).contains(&byte) {
                return Err(Error::Graph6(format!("byte {}: invalid data byte {byte}", pos + 1)));
            }
            if (byte - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = body.last() {
        if !(63..=126).contains(&last) {
            return Err(Error::Graph6(format!("byte {}: invalid data byte {last}", body.len())));
        }
        let pad = expected * 6 - bits;
        if pad > 0 && (last - 63) & ((1 << pad) - 1) != 0 {
            return Err(Error::Graph6(format!("byte {}: nonzero padding bits", body.len())));
        }
    }
    Graph::from_edges(n, &edges)
}

/// `#[serde(with = "crate::graph6::as_string")]` for `Graph` fields.
pub mod as_string {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::graph::Graph;

    pub fn serialize<S: Serializer>(g: &Graph, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::encode(g).map_err(serde::ser::Error::custom)?)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Graph, D::Error> {
        let text = String::deserialize(d)?;
        super::decode(&text).map_err(serde::de::Error::custom)
    }
}
