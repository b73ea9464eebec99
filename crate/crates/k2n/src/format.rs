//! Graph and matrix text formats.
//!
//! Edge list: one `u v` per line, `#` starts a comment. A leading
//! `# n <count>` line keeps isolated vertices; without it the order is one
//! more than the largest id. JSON: `{"n": .., "edges": [[u, v], ..]}`.

use std::fmt::Write;

use k2n_core::combinat::ZeroOneMatrix;
use k2n_core::Graph;
use serde::{Deserialize, Serialize};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Graph(#[from] k2n_core::Error),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().into_iter().map(|(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> Result<Graph, FormatError> {
        let e: Vec<(usize, usize)> = self.edges.iter().map(|&[u, v]| (u, v)).collect();
        Ok(Graph::from_edges(self.n, &e)?)
    }
}

pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let (body, comment) = match raw.find('#') {
            Some(k) => (&raw[..k], Some(&raw[k + 1..])),
            None => (raw, None),
        };
        if let Some(c) = comment {
            let mut w = c.split_whitespace();
            if w.next() == Some("n") {
                let v = w.next().and_then(|s| s.parse().ok());
                n = Some(v.ok_or(FormatError::Syntax { line, msg: "bad vertex count".into() })?);
            }
        }
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            [] => {}
            [u, v] => {
                let parse = |s: &str| s.parse::<usize>().map_err(|_| FormatError::Syntax { line, msg: format!("bad vertex id {s:?}") });
                edges.push((parse(u)?, parse(v)?));
            }
            _ => return Err(FormatError::Syntax { line, msg: "expected two vertex ids".into() }),
        }
    }
    let order = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = n.unwrap_or(order);
    Ok(Graph::from_edges(n, &edges)?)
}

/// Sorted edges after a `# n` header.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("# n {}\n", g.n());
    for (u, v) in g.edges() {
        writeln!(s, "{u} {v}").unwrap();
    }
    s
}

pub fn parse_json(text: &str) -> Result<Graph, FormatError> {
    serde_json::from_str::<GraphJson>(text)?.to_graph()
}

pub fn to_json(g: &Graph) -> String {
    serde_json::to_string(&GraphJson::from_graph(g)).unwrap()
}

/// JSON if the first non-blank character is `{`, else an edge list.
pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    if text.trim_start().starts_with('{') {
        parse_json(text)
    } else {
        parse_edge_list(text)
    }
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            writeln!(s, "  {v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

pub fn parse_matrix(text: &str) -> Result<ZeroOneMatrix, FormatError> {
    Ok(ZeroOneMatrix::parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use k2n_core::standard::cycle;

    #[test]
    fn comments_and_header() {
        let g = parse_edge_list("# n 5\n0 1 # first\n\n1 2\n").unwrap();
        assert_eq!((g.n(), g.m()), (5, 2));
        let h = parse_edge_list("2 0\n").unwrap();
        assert_eq!(h.n(), 3);
        assert!(parse_edge_list("0 1 2\n").is_err());
        assert!(parse_edge_list("0 x\n").is_err());
    }

    #[test]
    fn dot_lists_edges() {
        let d = to_dot(&cycle(3));
        assert!(d.contains("0 -- 1;") && d.contains("0 -- 2;"));
    }
}
