//! graph6 encoding (short form, `n <= 62`).
//!
//! The header byte is `n + 63`; the upper triangle is read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ..`), packed six bits per byte with the
//! first bit most significant, each byte offset by 63. Padding bits are zero.

use crate::error::{Error, Result};
use crate::graph::Graph;

pub const MAX_ORDER: usize = 62;

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::Graph6(format!(
            "order {n} exceeds the short-form limit of {MAX_ORDER}"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n).div_ceil(12));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = chunk << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let (&head, body) = bytes
        .split_first()
        .ok_or_else(|| Error::Graph6("empty input".into()))?;
    if head == 126 {
        return Err(Error::Graph6(
            "long-form orders above 62 are not supported".into(),
        ));
    }
    if !(63..=125).contains(&head) {
        return Err(Error::Graph6(format!("invalid header byte {head:#04x}")));
    }
    let n = (head - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = pairs.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for order {n}, found {}",
            body.len()
        )));
    }
    let mut bits = Vec::with_capacity(expected * 6);
    for &b in body {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6(format!("invalid data byte {b:#04x}")));
        }
        let v = b - 63;
        bits.extend((0..6).rev().map(|s| v >> s & 1 == 1));
    }
    if bits[pairs..].iter().any(|&b| b) {
        return Err(Error::Graph6("non-zero padding bits".into()));
    }
    let mut edges = Vec::new();
    let mut p = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[p] {
                edges.push((i, j));
            }
            p += 1;
        }
    }
    Graph::from_edges(n, &edges)
}
