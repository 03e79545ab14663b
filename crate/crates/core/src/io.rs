//! Graph file formats.
//!
//! * `dimacs-col`: comment lines start with `c`; a header `p edge <n> <m>`;
//!   then `m` lines `e <u> <v>` with 1-based vertices.
//! * `edge-json`: `{"n": <n>, "edges": [[u, v], ...]}` with 0-based
//!   vertices.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GraphFormat {
    DimacsCol,
    EdgeJson,
}

impl GraphFormat {
    /// Guesses from the extension: `.json` is edge-json, anything else is
    /// DIMACS.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("json") => GraphFormat::EdgeJson,
            _ => GraphFormat::DimacsCol,
        }
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        last_line = line_no;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('c') {
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match fields[0] {
            "p" => {
                if header.is_some() {
                    return Err(parse_err(line_no, "second problem line"));
                }
                if fields.len() != 4 || fields[1] != "edge" {
                    return Err(parse_err(line_no, "expected `p edge <n> <m>`"));
                }
                let n = fields[2]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad vertex count `{}`", fields[2])))?;
                let m = fields[3]
                    .parse()
                    .map_err(|_| parse_err(line_no, format!("bad edge count `{}`", fields[3])))?;
                header = Some((n, m));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return Err(parse_err(line_no, "edge before the problem line"));
                };
                if fields.len() != 3 {
                    return Err(parse_err(line_no, "expected `e <u> <v>`"));
                }
                let mut ends = [0usize; 2];
                for (slot, f) in ends.iter_mut().zip(&fields[1..]) {
                    let v: usize = f
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad vertex `{f}`")))?;
                    if v == 0 || v > n {
                        return Err(parse_err(line_no, format!("vertex {v} is outside 1..={n}")));
                    }
                    *slot = v - 1;
                }
                if ends[0] == ends[1] {
                    return Err(parse_err(line_no, format!("self-loop on vertex {}", ends[0] + 1)));
                }
                edges.push((ends[0], ends[1]));
            }
            other => return Err(parse_err(line_no, format!("unknown line type `{other}`"))),
        }
    }
    let Some((n, m)) = header else {
        return Err(parse_err(last_line.max(1), "missing `p edge <n> <m>` line"));
    };
    if edges.len() != m {
        return Err(parse_err(
            last_line.max(1),
            format!("header declares {m} edges, found {}", edges.len()),
        ));
    }
    if n == 0 {
        return Err(parse_err(1, "the graph has no vertices"));
    }
    Graph::new(n, &edges)
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.edge_count());
    for (u, v) in g.edges() {
        out.push_str(&format!("e {} {}\n", u + 1, v + 1));
    }
    out
}

#[derive(Serialize, Deserialize)]
struct EdgeJson {
    n: usize,
    edges: Vec<(usize, usize)>,
}

pub fn parse_edge_json(text: &str) -> Result<Graph> {
    let parsed: EdgeJson = serde_json::from_str(text).map_err(|e| parse_err(e.line(), e.to_string()))?;
    Graph::new(parsed.n, &parsed.edges)
}

pub fn write_edge_json(g: &Graph) -> String {
    let doc = EdgeJson {
        n: g.n(),
        edges: g.edges().collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn parse_graph(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::DimacsCol => parse_dimacs(text),
        GraphFormat::EdgeJson => parse_edge_json(text),
    }
}

pub fn write_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::DimacsCol => write_dimacs(g),
        GraphFormat::EdgeJson => write_edge_json(g),
    }
}

/// Reads a graph file, choosing the format from the extension.
pub fn read_graph(path: &Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path)?;
    parse_graph(&text, GraphFormat::from_path(path))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dimacs_round_trip() {
        let g = Graph::cycle(7).unwrap();
        let text = write_dimacs(&g);
        assert!(text.starts_with("p edge 7 7\n"));
        assert_eq!(parse_dimacs(&text).unwrap(), g);
        let with_comments = format!("c a comment\n\n{text}");
        assert_eq!(parse_dimacs(&with_comments).unwrap(), g);
    }

    #[test]
    fn json_round_trip() {
        let g = Graph::path(4).unwrap();
        let text = write_edge_json(&g);
        assert_eq!(text, r#"{"n":4,"edges":[[0,1],[1,2],[2,3]]}"#);
        assert_eq!(parse_edge_json(&text).unwrap(), g);
    }

    #[test]
    fn dimacs_errors_carry_lines() {
        let cases = [
            ("p edges 3 1\ne 1 2\n", 1),
            ("p edge 3 1\ne 1 4\n", 2),
            ("p edge 3 2\ne 1 2\n", 2),
            ("e 1 2\n", 1),
            ("p edge 3 1\nx\n", 2),
            ("p edge 3 1\ne 2 2\n", 2),
        ];
        for (text, expected) in cases {
            match parse_dimacs(text) {
                Err(Error::Parse { line, .. }) => assert_eq!(line, expected, "{text:?}"),
                other => panic!("{text:?}: unexpected {other:?}"),
            }
        }
    }

    #[test]
    fn json_errors() {
        assert!(parse_edge_json("{\"n\": 2, \"edges\": [[0, 2]]}").is_err());
        assert!(matches!(parse_edge_json("{\"n\": 2,\n \"edges\": ["), Err(Error::Parse { line: 2, .. })));
    }
}
