//! Edge-list and graph6 text formats.
//!
//! Edge list: a header line `n m`, then `m` lines `i j` with `0 <= i < j < n`.
//! graph6 follows the nauty definition for `n <= 62` (one size byte) and
//! `63 <= n <= 64` (`~` plus three size bytes).

use std::fmt::Write as _;

use thiserror::Error;

use super::{GraphError, SimpleGraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCount { declared: usize, found: usize },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn syntax(line: usize, msg: impl Into<String>) -> ParseError {
    ParseError::Syntax { line, msg: msg.into() }
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), ParseError> {
    let mut it = text.split_whitespace();
    let a = it.next().ok_or_else(|| syntax(line, "expected two integers"))?;
    let b = it.next().ok_or_else(|| syntax(line, "expected two integers"))?;
    if it.next().is_some() {
        return Err(syntax(line, "trailing tokens"));
    }
    let a = a.parse().map_err(|_| syntax(line, format!("bad integer {a:?}")))?;
    let b = b.parse().map_err(|_| syntax(line, format!("bad integer {b:?}")))?;
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, "missing header"))?;
    let (n, m) = parse_pair(hl + 1, header)?;
    let mut edges = Vec::with_capacity(m);
    for (k, l) in lines {
        let (i, j) = parse_pair(k + 1, l)?;
        if i >= j {
            return Err(syntax(k + 1, format!("expected i < j, got {i} {j}")));
        }
        edges.push((i, j));
    }
    if edges.len() != m {
        return Err(ParseError::EdgeCount { declared: m, found: edges.len() });
    }
    Ok(SimpleGraph::from_edges(n, edges)?)
}

pub fn write_edge_list(g: &SimpleGraph) -> String {
    let mut s = format!("{} {}\n", g.n(), g.m());
    for (i, j) in g.edges() {
        let _ = writeln!(s, "{i} {j}");
    }
    s
}

pub fn parse_graph6(text: &str) -> Result<SimpleGraph, ParseError> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
    }
    if bytes.iter().any(|&b| !(63..=126).contains(&b)) {
        return Err(ParseError::Graph6("byte outside 63..=126".into()));
    }
    let (n, body) = match bytes {
        [] => return Err(ParseError::Graph6("empty input".into())),
        [126, 126, ..] => return Err(ParseError::Graph6("order too large".into())),
        [126, a, b, c, rest @ ..] => {
            let n = ((*a as usize - 63) << 12) | ((*b as usize - 63) << 6) | (*c as usize - 63);
            (n, rest)
        }
        [126, ..] => return Err(ParseError::Graph6("truncated size field".into())),
        [first, rest @ ..] => (*first as usize - 63, rest),
    };
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(ParseError::Graph6(format!(
            "expected {} data bytes for n = {n}, found {}",
            pairs.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(SimpleGraph::from_edges(n, edges)?)
}

pub fn write_graph6(g: &SimpleGraph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.extend([126, (n >> 12) as u8 + 63, ((n >> 6) & 63) as u8 + 63, (n & 63) as u8 + 63]);
    }
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
    String::from_utf8(out).expect("graph6 is printable ASCII")
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn edge_list_c5() {
        let text = "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n";
        let g = parse_edge_list(text).unwrap();
        assert_eq!(g, c5());
        assert_eq!(write_edge_list(&g), text);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_edge_list(""), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse_edge_list("3 2\n0 1\n"), Err(ParseError::EdgeCount { declared: 2, found: 1 })));
        assert!(matches!(parse_edge_list("3 1\n1 0\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list("3 1\n0 x\n"), Err(ParseError::Syntax { line: 2, .. })));
        assert_eq!(
            parse_edge_list("3 2\n0 1\n0 1\n"),
            Err(ParseError::Graph(GraphError::DuplicateEdge(0, 1)))
        );
        assert!(matches!(
            parse_edge_list("3 1\n0 3\n"),
            Err(ParseError::Graph(GraphError::IndexOutOfRange { index: 3, n: 3 }))
        ));
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(write_graph6(&c5()), "Dhc");
        assert_eq!(write_graph6(&petersen()), "IheA@GUAo");
        assert_eq!(write_graph6(&k(4)), "C~");
        assert_eq!(parse_graph6("Dhc\n").unwrap(), c5());
        assert_eq!(parse_graph6(">>graph6<<C~").unwrap(), k(4));
    }

    #[test]
    fn graph6_errors() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("Dh").is_err());
        assert!(parse_graph6("D\x20c").is_err());
    }

    #[test]
    fn graph6_large_order_header() {
        let g = SimpleGraph::cycle(64).unwrap();
        let s = write_graph6(&g);
        assert!(s.starts_with("~?@?hC"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    proptest! {
        #[test]
        fn both_formats_roundtrip(n in 1usize..=40, bits in proptest::collection::vec(any::<bool>(), 780)) {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            let g = SimpleGraph::from_edges(n, edges).unwrap();
            prop_assert_eq!(parse_graph6(&write_graph6(&g)).unwrap(), g.clone());
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
