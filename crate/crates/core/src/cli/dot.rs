//! Graphviz rendering of a partitioned graph.

use std::fmt::Write;

use crate::graph::{Graph, Relation, VertexSet};

/// Renders `g` with each nonempty part in its own cluster. Edges inside a
/// part are left out (parts are cliques). Two parts that are complete to
/// each other get a single bold edge labeled with the pair count; all other
/// edges are drawn individually. Vertices outside every part are drawn at
/// top level.
pub fn to_dot(g: &Graph, parts: &[(String, Vec<usize>)]) -> String {
    let parts: Vec<(&str, &Vec<usize>)> = parts
        .iter()
        .filter(|(_, s)| !s.is_empty())
        .map(|(n, s)| (n.as_str(), s))
        .collect();
    let mut owner = vec![None; g.n()];
    for (k, (_, s)) in parts.iter().enumerate() {
        for &v in s.iter() {
            owner[v] = Some(k);
        }
    }
    let mut out = String::from("graph G {\n  compound=true;\n  node [shape=circle];\n");
    for (k, (name, s)) in parts.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        let _ = writeln!(out, "    label=\"{name} ({})\";", s.len());
        for v in s.iter() {
            let _ = writeln!(out, "    {v};");
        }
        out.push_str("  }\n");
    }
    for v in (0..g.n()).filter(|&v| owner[v].is_none()) {
        let _ = writeln!(out, "  {v};");
    }
    let sets: Vec<VertexSet> = parts
        .iter()
        .map(|(_, s)| VertexSet::from_iter(g.n(), s.iter().copied()).expect("parts hold graph vertices"))
        .collect();
    let mut complete = vec![vec![false; parts.len()]; parts.len()];
    for a in 0..parts.len() {
        for b in a + 1..parts.len() {
            if matches!(g.relation(&sets[a], &sets[b]), Ok(Relation::Complete)) {
                complete[a][b] = true;
                let (u, v) = (parts[a].1[0], parts[b].1[0]);
                let pairs = parts[a].1.len() * parts[b].1.len();
                let _ = writeln!(
                    out,
                    "  {u} -- {v} [ltail=cluster_{a}, lhead=cluster_{b}, style=bold, label=\"complete x{pairs}\"];"
                );
            }
        }
    }
    for (u, v) in g.edges() {
        match (owner[u], owner[v]) {
            (Some(a), Some(b)) if a == b => {}
            (Some(a), Some(b)) if complete[a.min(b)][a.max(b)] => {}
            _ => {
                let _ = writeln!(out, "  {u} -- {v};");
            }
        }
    }
    out.push_str("}\n");
    out
}
