//! graph6 and plain edge-list encodings.
//!
//! graph6 follows the format used by nauty: a size prefix followed by the
//! upper triangle of the adjacency matrix, column by column, packed six bits
//! per printable byte (value + 63). The `>>graph6<<` header is accepted on
//! input and never written.

use super::Graph;
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

/// Largest order representable by graph6.
pub const GRAPH6_MAX_N: usize = (1 << 36) - 1;

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            nbits += 1;
            if nbits == 6 {
                out.push(acc + 63);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push((acc << (6 - nbits)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ascii")
}

pub fn from_graph6(text: &str) -> Result<Graph> {
    let s = text.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("byte {b:#04x} outside the graph6 alphabet")));
    }
    let val = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (val(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(Error::Parse("truncated graph6 size".into()));
        }
        (bytes[1..4].iter().fold(0, |a, &b| (a << 6) | val(b)), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(Error::Parse("truncated graph6 size".into()));
        }
        (bytes[2..8].iter().fold(0, |a, &b| (a << 6) | val(b)), &bytes[8..])
    };
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() != need {
        return Err(Error::Parse(format!(
            "graph6 body has {} bytes, expected {need} for n={n}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = val(body[k / 6]);
            if (byte >> (5 - k % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// `"n m"` header line, then one `"u v"` line per edge.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list format; blank lines and `#` comments are ignored.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty());
    let header = lines.next().ok_or_else(|| Error::Parse("missing header".into()))?;
    let nums = parse_pair(header)?;
    let (n, m) = nums;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        edges.push(parse_pair(line)?);
    }
    if edges.len() != m {
        return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
    }
    Graph::from_edges(n, edges)
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>().map_err(|e| Error::Parse(format!("bad integer {t:?}: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got {line:?}"))),
    }
}

/// Accepts either format: edge lists start with a digit, graph6 never does.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let t = text.trim_start();
    if t.starts_with(|c: char| c.is_ascii_digit()) || t.starts_with('#') {
        from_edge_list(t)
    } else {
        from_graph6(t.lines().next().unwrap_or(""))
    }
}
