//! graph6 and plain edge-list encodings.
//!
//! graph6 follows McKay's `formats.txt`: a size prefix, then the upper
//! triangle of the adjacency matrix read column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), packed into 6-bit groups offset by 63.

use std::fmt::Write as _;

use crate::graph::{Graph, GraphError};

const HEADER: &str = ">>graph6<<";
const MAX_N: u64 = 68_719_476_735;

fn g6_err(offset: usize, reason: impl Into<String>) -> GraphError {
    GraphError::Graph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decodes one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let start = if text.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let mut end = bytes.len();
    if end > start && bytes[end - 1] == b'\n' {
        end -= 1;
        if end > start && bytes[end - 1] == b'\r' {
            end -= 1;
        }
    }
    let body = &bytes[start..end];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(g6_err(
                start + i,
                format!("byte 0x{b:02x} outside the printable range 63..=126"),
            ));
        }
    }
    let six = |i: usize| u64::from(body[i] - 63);

    let (n, mut pos) = match body {
        [] => return Err(g6_err(start, "empty input")),
        [126, 126, ..] => {
            if body.len() < 8 {
                return Err(g6_err(start + body.len(), "truncated 8-byte size field"));
            }
            ((2..8).fold(0, |acc, i| acc << 6 | six(i)), 8)
        }
        [126, ..] => {
            if body.len() < 4 {
                return Err(g6_err(start + body.len(), "truncated 4-byte size field"));
            }
            ((1..4).fold(0, |acc, i| acc << 6 | six(i)), 4)
        }
        _ => (six(0), 1),
    };
    if n > MAX_N {
        return Err(g6_err(start, "vertex count exceeds the graph6 limit"));
    }
    let n = usize::try_from(n).map_err(|_| g6_err(start, "vertex count does not fit in memory"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let available = body.len() - pos;
    if available < needed {
        return Err(g6_err(
            start + body.len(),
            format!("expected {needed} adjacency bytes, found {available}"),
        ));
    }
    if available > needed {
        return Err(g6_err(
            start + pos + needed,
            "trailing bytes after adjacency data",
        ));
    }

    let mut edges = Vec::new();
    let mut k = 0;
    'outer: for v in 1..n {
        for u in 0..v {
            let byte = six(pos + k / 6);
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((u, v));
            }
            k += 1;
            if k == bits {
                break 'outer;
            }
        }
    }
    if bits % 6 != 0 {
        pos += needed - 1;
        let pad = 6 - bits % 6;
        if six(pos) & ((1 << pad) - 1) != 0 {
            return Err(g6_err(start + pos, "nonzero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Canonical graph6 encoding without header or newline.
pub fn serialize_graph6(g: &Graph) -> String {
    let n = g.n() as u64;
    assert!(
        n <= MAX_N,
        "graph6 cannot encode more than {MAX_N} vertices"
    );
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    } else {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + 63));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..g.n() {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses `"n m"` followed by `m` lines `"u v"`. Blank lines are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let err = |line: usize, reason: String| GraphError::EdgeList { line, reason };
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing \"n m\" header".into()))?;
    let pair = |line: usize, s: &str| -> Result<(usize, usize), GraphError> {
        let mut it = s.split_whitespace();
        let mut num = || -> Result<usize, GraphError> {
            let tok = it
                .next()
                .ok_or_else(|| err(line, "expected two integers".into()))?;
            tok.parse()
                .map_err(|_| err(line, format!("not a non-negative integer: {tok:?}")))
        };
        let a = num()?;
        let b = num()?;
        if it.next().is_some() {
            return Err(err(line, "expected exactly two integers".into()));
        }
        Ok((a, b))
    };
    let (n, m) = pair(hline, header)?;
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let (u, v) = pair(line, l)?;
        if u >= n || v >= n {
            return Err(err(line, format!("vertex out of range for n={n}")));
        }
        if u == v {
            return Err(err(line, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(err(line, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(err(
            hline,
            format!("header announces {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
