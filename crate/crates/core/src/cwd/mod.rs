//! Clique-width expressions: the four-operation AST, evaluation, width
//! accounting, and constructions that certify width at most 12 for
//! simplicial-free graphs in the class.

mod build;
mod sexpr;

pub use build::{
    expr_add_universals, expr_complete, expr_for_class_graph, expr_substitute, expr_thicken, expr_thicken_classes,
    CwdOutcome, CwdRefusal,
};
pub use sexpr::parse_sexpr;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graph::Graph;

pub type Label = u32;

/// A k-expression. Labels are positive; `Create` carries the vertex id so
/// the evaluated graph can be compared to its source by equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum CwdExpr {
    Create { label: Label, vertex: usize },
    Union(Box<CwdExpr>, Box<CwdExpr>),
    Join { i: Label, j: Label, child: Box<CwdExpr> },
    Rename { from: Label, to: Label, child: Box<CwdExpr> },
}

impl CwdExpr {
    pub fn create(label: Label, vertex: usize) -> Self {
        CwdExpr::Create { label, vertex }
    }

    pub fn union(a: CwdExpr, b: CwdExpr) -> Self {
        CwdExpr::Union(Box::new(a), Box::new(b))
    }

    pub fn join(i: Label, j: Label, child: CwdExpr) -> Self {
        CwdExpr::Join {
            i,
            j,
            child: Box::new(child),
        }
    }

    pub fn rename(from: Label, to: Label, child: CwdExpr) -> Self {
        CwdExpr::Rename {
            from,
            to,
            child: Box::new(child),
        }
    }

    /// Union of a nonempty list, folded left.
    pub fn union_all(parts: Vec<CwdExpr>) -> Option<Self> {
        parts.into_iter().reduce(CwdExpr::union)
    }

    /// Every label mentioned anywhere in the tree.
    pub fn labels(&self) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        self.visit(&mut |e| match e {
            CwdExpr::Create { label, .. } => {
                out.insert(*label);
            }
            CwdExpr::Join { i, j, .. } => {
                out.extend([*i, *j]);
            }
            CwdExpr::Rename { from, to, .. } => {
                out.extend([*from, *to]);
            }
            CwdExpr::Union(..) => {}
        });
        out
    }

    /// Number of distinct labels mentioned.
    pub fn width(&self) -> usize {
        self.labels().len()
    }

    /// Vertex ids of the `Create` leaves, in tree order.
    pub fn vertices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.visit(&mut |e| {
            if let CwdExpr::Create { vertex, .. } = e {
                out.push(*vertex);
            }
        });
        out
    }

    /// Labels carried by at least one vertex of the evaluated graph.
    pub fn final_labels(&self) -> BTreeSet<Label> {
        match self {
            CwdExpr::Create { label, .. } => BTreeSet::from([*label]),
            CwdExpr::Union(a, b) => {
                let mut s = a.final_labels();
                s.extend(b.final_labels());
                s
            }
            CwdExpr::Join { child, .. } => child.final_labels(),
            CwdExpr::Rename { from, to, child } => {
                let mut s = child.final_labels();
                if s.remove(from) {
                    s.insert(*to);
                }
                s
            }
        }
    }

    /// Applies `f` to every label in the tree.
    pub fn map_labels(&self, f: &impl Fn(Label) -> Label) -> CwdExpr {
        match self {
            CwdExpr::Create { label, vertex } => CwdExpr::create(f(*label), *vertex),
            CwdExpr::Union(a, b) => CwdExpr::union(a.map_labels(f), b.map_labels(f)),
            CwdExpr::Join { i, j, child } => CwdExpr::join(f(*i), f(*j), child.map_labels(f)),
            CwdExpr::Rename { from, to, child } => CwdExpr::rename(f(*from), f(*to), child.map_labels(f)),
        }
    }

    fn visit(&self, f: &mut impl FnMut(&CwdExpr)) {
        let mut stack = vec![self];
        while let Some(e) = stack.pop() {
            f(e);
            match e {
                CwdExpr::Create { .. } => {}
                CwdExpr::Union(a, b) => {
                    stack.push(b);
                    stack.push(a);
                }
                CwdExpr::Join { child, .. } | CwdExpr::Rename { child, .. } => stack.push(child),
            }
        }
    }
}

/// The graph an expression builds, indexed by ascending vertex id.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledGraph {
    pub graph: Graph,
    /// `ids[i]` is the vertex id of graph vertex `i`.
    pub ids: Vec<usize>,
    /// Final label of graph vertex `i`.
    pub labels: Vec<Label>,
}

impl LabeledGraph {
    /// True when the ids are exactly `0..n`, so `graph` can be compared to
    /// an input graph directly.
    pub fn ids_are_positional(&self) -> bool {
        self.ids.iter().enumerate().all(|(i, &v)| i == v)
    }
}

/// Evaluates an expression. Malformed trees (label 0, a join of a label
/// with itself, repeated vertex ids) are rejected with the path to the
/// offending node, e.g. `root.left.child`.
pub fn eval(expr: &CwdExpr) -> Result<LabeledGraph> {
    validate(expr)?;
    let mut ids = expr.vertices();
    ids.sort_unstable();
    let index: HashMap<usize, usize> = ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let n = ids.len();
    let mut rows = vec![FixedBitSet::with_capacity(n); n];
    let groups = eval_groups(expr, &index, &mut rows);
    let mut labels = vec![0; n];
    for (label, members) in &groups {
        for &v in members {
            labels[v] = *label;
        }
    }
    let graph = Graph::from_fn(n, |a, b| rows[a].contains(b))?;
    Ok(LabeledGraph { graph, ids, labels })
}

/// Vertices of the subtree grouped by current label.
fn eval_groups(
    expr: &CwdExpr,
    index: &HashMap<usize, usize>,
    rows: &mut [FixedBitSet],
) -> BTreeMap<Label, Vec<usize>> {
    match expr {
        CwdExpr::Create { label, vertex } => BTreeMap::from([(*label, vec![index[vertex]])]),
        CwdExpr::Union(a, b) => {
            let mut left = eval_groups(a, index, rows);
            for (label, mut members) in eval_groups(b, index, rows) {
                left.entry(label).or_default().append(&mut members);
            }
            left
        }
        CwdExpr::Join { i, j, child } => {
            let groups = eval_groups(child, index, rows);
            if let (Some(a), Some(b)) = (groups.get(i), groups.get(j)) {
                for &u in a {
                    for &v in b {
                        rows[u].insert(v);
                        rows[v].insert(u);
                    }
                }
            }
            groups
        }
        CwdExpr::Rename { from, to, child } => {
            let mut groups = eval_groups(child, index, rows);
            if from != to {
                if let Some(mut moved) = groups.remove(from) {
                    groups.entry(*to).or_default().append(&mut moved);
                }
            }
            groups
        }
    }
}

fn validate(expr: &CwdExpr) -> Result<()> {
    let mut seen: HashMap<usize, String> = HashMap::new();
    let mut stack: Vec<(&CwdExpr, String)> = vec![(expr, "root".to_string())];
    let bad = |path: &str, message: String| Error::MalformedExpression {
        path: path.to_string(),
        message,
    };
    while let Some((e, path)) = stack.pop() {
        match e {
            CwdExpr::Create { label, vertex } => {
                if *label == 0 {
                    return Err(bad(&path, "labels start at 1".into()));
                }
                if let Some(prev) = seen.insert(*vertex, path.clone()) {
                    return Err(bad(&path, format!("vertex {vertex} is already created at {prev}")));
                }
            }
            CwdExpr::Union(a, b) => {
                stack.push((b, format!("{path}.right")));
                stack.push((a, format!("{path}.left")));
            }
            CwdExpr::Join { i, j, child } => {
                if *i == 0 || *j == 0 {
                    return Err(bad(&path, "labels start at 1".into()));
                }
                if i == j {
                    return Err(bad(&path, format!("join of label {i} with itself")));
                }
                stack.push((child, format!("{path}.child")));
            }
            CwdExpr::Rename { from, to, child } => {
                if *from == 0 || *to == 0 {
                    return Err(bad(&path, "labels start at 1".into()));
                }
                stack.push((child, format!("{path}.child")));
            }
        }
    }
    Ok(())
}

impl fmt::Display for CwdExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CwdExpr::Create { label, vertex } => write!(f, "(create {label} {vertex})"),
            CwdExpr::Union(a, b) => write!(f, "(union {a} {b})"),
            CwdExpr::Join { i, j, child } => write!(f, "(join {i} {j} {child})"),
            CwdExpr::Rename { from, to, child } => write!(f, "(rename {from} {to} {child})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_vertex_and_edge() {
        let k1 = CwdExpr::create(1, 0);
        assert_eq!(eval(&k1).unwrap().graph, Graph::complete(1).unwrap());
        assert_eq!(k1.width(), 1);
        let k2 = CwdExpr::join(1, 2, CwdExpr::union(CwdExpr::create(1, 0), CwdExpr::create(2, 1)));
        assert_eq!(eval(&k2).unwrap().graph, Graph::complete(2).unwrap());
        assert_eq!(k2.width(), 2);
    }

    /// Path 0..6 with labels: 1 = finished, 2 = current end, 3 = new vertex;
    /// closing the cycle needs the first vertex kept on label 4.
    fn c7_expr() -> CwdExpr {
        let mut e = CwdExpr::join(4, 2, CwdExpr::union(CwdExpr::create(4, 0), CwdExpr::create(2, 1)));
        for v in 2..7 {
            e = CwdExpr::join(2, 3, CwdExpr::union(e, CwdExpr::create(3, v)));
            e = CwdExpr::rename(3, 2, CwdExpr::rename(2, 1, e));
        }
        CwdExpr::join(4, 2, e)
    }

    #[test]
    fn four_label_c7() {
        let e = c7_expr();
        assert_eq!(e.width(), 4);
        let lg = eval(&e).unwrap();
        assert!(lg.ids_are_positional());
        assert_eq!(lg.graph, Graph::cycle(7).unwrap());
    }

    #[test]
    fn join_is_idempotent() {
        let base = CwdExpr::union(CwdExpr::create(1, 0), CwdExpr::create(2, 1));
        let once = CwdExpr::join(1, 2, base.clone());
        let twice = CwdExpr::join(1, 2, once.clone());
        assert_eq!(eval(&once).unwrap(), eval(&twice).unwrap());
    }

    #[test]
    fn malformed_trees() {
        let e = CwdExpr::union(CwdExpr::create(1, 0), CwdExpr::join(2, 2, CwdExpr::create(2, 1)));
        match eval(&e) {
            Err(Error::MalformedExpression { path, .. }) => assert_eq!(path, "root.right"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(eval(&CwdExpr::create(0, 0)).is_err());
        assert!(eval(&CwdExpr::union(CwdExpr::create(1, 3), CwdExpr::create(1, 3))).is_err());
    }
}
