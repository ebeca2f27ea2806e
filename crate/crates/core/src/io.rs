//! Graph text formats: graph6 for simple graphs and `medge`, a line-based
//! edge list that also carries loops and parallel edges.
//!
//! A medge record is a header line `n m` followed by `m` lines `u v` with
//! 0-based ids. Blank lines and `#` comments are ignored, and a file may hold
//! any number of records.

use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::Multigraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    Graph6,
    Medge,
}

impl FromStr for GraphFormat {
    type Err = IoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "medge" => Ok(GraphFormat::Medge),
            _ => Err(IoError::UnknownFormat(s.to_string())),
        }
    }
}

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 cannot encode loops or parallel edges")]
    NotSimple,
    #[error("unknown graph format `{0}`")]
    UnknownFormat(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn parse_err(line: usize, message: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        message: message.into(),
    }
}

pub fn read_graphs(text: &str, format: GraphFormat) -> Result<Vec<Multigraph>, IoError> {
    match format {
        GraphFormat::Graph6 => read_graph6(text),
        GraphFormat::Medge => read_medge(text),
    }
}

pub fn write_graphs(graphs: &[Multigraph], format: GraphFormat) -> Result<String, IoError> {
    let mut out = String::new();
    for g in graphs {
        match format {
            GraphFormat::Graph6 => {
                out.push_str(&encode_graph6(g)?);
                out.push('\n');
            }
            GraphFormat::Medge => out.push_str(&encode_medge(g)),
        }
    }
    Ok(out)
}

pub fn read_graphs_from_path(path: &Path, format: GraphFormat) -> Result<Vec<Multigraph>, IoError> {
    read_graphs(&std::fs::read_to_string(path)?, format)
}

pub fn write_graphs_to_path(graphs: &[Multigraph], path: &Path, format: GraphFormat) -> Result<(), IoError> {
    std::fs::write(path, write_graphs(graphs, format)?)?;
    Ok(())
}

/// Guesses the format from the first meaningful line: two integers mean medge.
pub fn detect_format(text: &str) -> GraphFormat {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    match first {
        Some(l) if l.split_whitespace().count() == 2 && l.split_whitespace().all(|t| t.parse::<usize>().is_ok()) => {
            GraphFormat::Medge
        }
        _ => GraphFormat::Graph6,
    }
}

pub fn encode_graph6(g: &Multigraph) -> Result<String, IoError> {
    if !g.is_simple() {
        return Err(IoError::NotSimple);
    }
    let n = g.vertex_count();
    let mut bytes = size_prefix(n);
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.multiplicity(i, j) > 0);
        }
    }
    for chunk in bits.chunks(6) {
        let mut x = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            if b {
                x |= 1 << (5 - k);
            }
        }
        bytes.push(x + 63);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are ASCII"))
}

fn size_prefix(n: usize) -> Vec<u8> {
    let groups = |count: usize| (0..count).rev().map(move |k| ((n >> (6 * k)) & 63) as u8 + 63);
    if n <= 62 {
        vec![n as u8 + 63]
    } else if n <= 258_047 {
        std::iter::once(126).chain(groups(3)).collect()
    } else {
        [126, 126].into_iter().chain(groups(6)).collect()
    }
}

pub fn decode_graph6(line: &str, line_no: usize) -> Result<Multigraph, IoError> {
    let body = line
        .strip_prefix(">>graph6<<")
        .unwrap_or(line)
        .trim_end_matches(['\r', '\n']);
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(line_no, "empty graph6 string"));
    }
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(parse_err(line_no, format!("byte {bad} is outside the graph6 range")));
    }
    let value = |s: &[u8]| s.iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
    let (n, rest) = if bytes[0] != 126 {
        (value(&bytes[..1]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(parse_err(line_no, "truncated size field"));
        }
        (value(&bytes[1..4]), &bytes[4..])
    } else {
        if bytes.len() < 8 {
            return Err(parse_err(line_no, "truncated size field"));
        }
        (value(&bytes[2..8]), &bytes[8..])
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(parse_err(
            line_no,
            format!("expected {needed} data bytes for {n} vertices, found {}", rest.len()),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = rest[k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges).map_err(|e| parse_err(line_no, e.to_string()))
}

fn read_graph6(text: &str) -> Result<Vec<Multigraph>, IoError> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(idx, l)| decode_graph6(l.trim(), idx + 1))
        .collect()
}

pub fn encode_medge(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

fn read_medge(text: &str) -> Result<Vec<Multigraph>, IoError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, l)| (idx + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let pair = |line_no: usize, l: &str| -> Result<(usize, usize), IoError> {
        let mut parts = l.split_whitespace();
        let a = parts.next().and_then(|t| t.parse().ok());
        let b = parts.next().and_then(|t| t.parse().ok());
        match (a, b, parts.next()) {
            (Some(a), Some(b), None) => Ok((a, b)),
            _ => Err(parse_err(
                line_no,
                format!("expected two non-negative integers, found `{l}`"),
            )),
        }
    };
    let mut graphs = Vec::new();
    while let Some((header_line, header)) = lines.next() {
        let (n, m) = pair(header_line, header)?;
        let mut edges = Vec::with_capacity(m);
        for _ in 0..m {
            let (line_no, l) = lines.next().ok_or_else(|| {
                parse_err(
                    header_line,
                    format!("record declares {m} edges but the input ends early"),
                )
            })?;
            edges.push(pair(line_no, l)?);
        }
        graphs.push(Multigraph::new(n, edges).map_err(|e| parse_err(header_line, e.to_string()))?);
    }
    Ok(graphs)
}
