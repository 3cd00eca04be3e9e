//! Graph interchange formats: a human-writable edge list and graph6.
//!
//! Edge list: first line `n m`, then `m` lines `u v` with 0-based endpoints.
//! Blank lines and lines starting with `#` are ignored.
//!
//! graph6: the standard printable-ASCII packing of the upper triangle, as
//! used by the common small-graph corpora.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

pub fn parse(format: GraphFormat, text: &str) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => parse_graph6(text.trim()),
    }
}

pub fn emit(format: GraphFormat, g: &Graph) -> String {
    match format {
        GraphFormat::EdgeList => emit_edge_list(g),
        GraphFormat::Graph6 => {
            let mut s = emit_graph6(g);
            s.push('\n');
            s
        }
    }
}

/// Heuristic sniffing for CLI convenience: a leading `n m` header means edge
/// list, anything else is treated as graph6.
pub fn parse_auto(text: &str) -> Result<Graph> {
    let first = text
        .lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'));
    match first {
        Some(line)
            if line.split_whitespace().count() == 2
                && line.split_whitespace().all(|t| t.parse::<usize>().is_ok()) =>
        {
            parse_edge_list(text)
        }
        Some(_) => parse_graph6(text.trim()),
        None => Err(Error::Parse("empty input".into())),
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line_no, header) = lines.next().ok_or_else(|| Error::Parse("empty input".into()))?;
    let mut tokens = header.split_whitespace();
    let parse_num = |tok: Option<&str>, what: &str, line_no: usize| -> Result<usize> {
        tok.ok_or_else(|| Error::Parse(format!("line {line_no}: missing {what}")))?
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("line {line_no}: bad {what}")))
    };
    let n = parse_num(tokens.next(), "vertex count", line_no)?;
    let m = parse_num(tokens.next(), "edge count", line_no)?;
    if tokens.next().is_some() {
        return Err(Error::Parse(format!("line {line_no}: trailing tokens in header")));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let (line_no, line) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("expected {m} edges, found {}", edges.len())))?;
        let mut tokens = line.split_whitespace();
        let u = parse_num(tokens.next(), "endpoint", line_no)?;
        let v = parse_num(tokens.next(), "endpoint", line_no)?;
        if tokens.next().is_some() {
            return Err(Error::Parse(format!("line {line_no}: trailing tokens in edge")));
        }
        edges.push((u, v));
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(Error::Parse(format!("line {line_no}: content after {m} edges")));
    }
    Graph::new(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

const G6_MAX: usize = 258_047;

pub fn parse_graph6(line: &str) -> Result<Graph> {
    let bytes: Vec<u8> = line.trim().bytes().collect();
    if bytes.is_empty() {
        return Err(Error::Parse("empty graph6 string".into()));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Parse(format!("graph6 byte {bad} out of range")));
    }
    let sextets: Vec<u8> = bytes.iter().map(|&b| b - 63).collect();
    let (n, header_len) = if sextets[0] != 63 {
        (sextets[0] as usize, 1)
    } else if sextets.len() >= 4 && sextets[1] != 63 {
        (
            (sextets[1] as usize) << 12 | (sextets[2] as usize) << 6 | sextets[3] as usize,
            4,
        )
    } else {
        return Err(Error::Parse("graph6 order header too large or truncated".into()));
    };
    if n > G6_MAX {
        return Err(Error::Parse(format!("graph6 order {n} unsupported")));
    }
    let pair_bits = n * n.saturating_sub(1) / 2;
    let expect = header_len + pair_bits.div_ceil(6);
    if sextets.len() != expect {
        return Err(Error::Parse(format!(
            "graph6 body length {} does not match order {n} (expected {expect})",
            sextets.len()
        )));
    }
    let mut edges = Vec::new();
    let mut pos = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = sextets[header_len + pos / 6];
            if group >> (5 - pos % 6) & 1 == 1 {
                edges.push((i, j));
            }
            pos += 1;
        }
    }
    Graph::new(n, &edges).map_err(|e| Error::Parse(e.to_string()))
}

pub fn emit_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(n <= G6_MAX, "graph too large for graph6 emitter");
    let mut sextets: Vec<u8> = if n <= 62 {
        vec![n as u8]
    } else {
        vec![63, (n >> 12) as u8 & 63, (n >> 6) as u8 & 63, n as u8 & 63]
    };
    let mut group = 0u8;
    let mut filled = 0u8;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                sextets.push(group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        sextets.push(group << (6 - filled));
    }
    sextets.into_iter().map(|s| (s + 63) as char).collect()
}
