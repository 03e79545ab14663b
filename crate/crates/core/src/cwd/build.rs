//! Expression constructions: complete graphs, substitution, thickening of
//! a small base graph, adding universal vertices, and the width-12
//! expression for simplicial-free graphs in the class.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{CwdExpr, Label};
use crate::catalog::MATCH_LIMIT;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognize::{recognize, Rejection, Verdict};

/// A clique on `ids` built with labels `a` and `b`; every vertex ends on
/// `a`. Uses one label for a single vertex.
fn clique_on(ids: &[usize], a: Label, b: Label) -> CwdExpr {
    let mut e = CwdExpr::create(a, ids[0]);
    for &v in &ids[1..] {
        e = CwdExpr::rename(b, a, CwdExpr::join(a, b, CwdExpr::union(e, CwdExpr::create(b, v))));
    }
    e
}

/// Expression for `K_k` on vertex ids `0..k`.
pub fn expr_complete(k: usize) -> Result<CwdExpr> {
    if k == 0 {
        return Err(Error::InvalidArgument("a complete graph needs at least one vertex".into()));
    }
    let ids: Vec<usize> = (0..k).collect();
    Ok(clique_on(&ids, 1, 2))
}

/// Renames every final label of `e` to `to`.
fn collapse_labels(e: CwdExpr, to: Label) -> CwdExpr {
    let finals = e.final_labels();
    finals
        .into_iter()
        .filter(|&l| l != to)
        .fold(e, |acc, l| CwdExpr::rename(l, to, acc))
}

fn replace_leaf(e: &CwdExpr, vertex: usize, with: &CwdExpr) -> CwdExpr {
    match e {
        CwdExpr::Create { vertex: v, .. } if *v == vertex => with.clone(),
        CwdExpr::Create { .. } => e.clone(),
        CwdExpr::Union(a, b) => CwdExpr::union(replace_leaf(a, vertex, with), replace_leaf(b, vertex, with)),
        CwdExpr::Join { i, j, child } => CwdExpr::join(*i, *j, replace_leaf(child, vertex, with)),
        CwdExpr::Rename { from, to, child } => CwdExpr::rename(*from, *to, replace_leaf(child, vertex, with)),
    }
}

fn leaf_label(e: &CwdExpr, vertex: usize) -> Option<Label> {
    match e {
        CwdExpr::Create { label, vertex: v } => (*v == vertex).then_some(*label),
        CwdExpr::Union(a, b) => leaf_label(a, vertex).or_else(|| leaf_label(b, vertex)),
        CwdExpr::Join { child, .. } | CwdExpr::Rename { child, .. } => leaf_label(child, vertex),
    }
}

/// Replaces the `Create` leaf of `vertex` in `outer` with `inner`, so the
/// result evaluates to `eval(outer)` with `eval(inner)` substituted for
/// that vertex.
///
/// The labels of `inner` are mapped injectively onto labels already used
/// by `outer` (overflowing to fresh labels only when `inner` uses more),
/// and its final labels are renamed to the leaf's label. The width of the
/// result is at most the larger of the two widths.
pub fn expr_substitute(outer: &CwdExpr, vertex: usize, inner: &CwdExpr) -> Result<CwdExpr> {
    let Some(label) = leaf_label(outer, vertex) else {
        return Err(Error::InvalidArgument(format!("vertex {vertex} is not a leaf of the expression")));
    };
    let kept: BTreeSet<usize> = outer.vertices().into_iter().filter(|&v| v != vertex).collect();
    if let Some(v) = inner.vertices().into_iter().find(|v| kept.contains(v)) {
        return Err(Error::InvalidArgument(format!("vertex {v} occurs in both expressions")));
    }
    let outer_labels: Vec<Label> = outer.labels().into_iter().collect();
    let inner_labels: Vec<Label> = inner.labels().into_iter().collect();
    let mut target = outer_labels.clone();
    let mut fresh = outer_labels.last().copied().unwrap_or(0);
    while target.len() < inner_labels.len() {
        fresh += 1;
        target.push(fresh);
    }
    let relabeled = inner.map_labels(&|l| target[inner_labels.binary_search(&l).expect("label of inner")]);
    Ok(replace_leaf(outer, vertex, &collapse_labels(relabeled, label)))
}

/// Expression for the thickening of `base` in which base vertex `v` is
/// replaced by a clique on the ids `classes[v]`. Base vertex `v` is built
/// on label `v + 1`, so the width is at most `max(|V(base)|, 2)`.
pub fn expr_thicken_classes(base: &Graph, classes: &[Vec<usize>]) -> Result<CwdExpr> {
    let n = base.n();
    if n > MATCH_LIMIT {
        return Err(Error::size("thickening base", MATCH_LIMIT, n));
    }
    if classes.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} classes, got {}", classes.len())));
    }
    if let Some(v) = classes.iter().position(Vec::is_empty) {
        return Err(Error::InvalidArgument(format!("class of base vertex {v} is empty")));
    }
    let mut all: Vec<usize> = classes.iter().flatten().copied().collect();
    all.sort_unstable();
    if all.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::OverlappingSets);
    }
    let parts = (0..n)
        .map(|v| {
            let label = v as Label + 1;
            let spare = if n > 1 { (v + 1) as Label % n as Label + 1 } else { 2 };
            clique_on(&classes[v], label, spare)
        })
        .collect();
    let mut e = CwdExpr::union_all(parts).expect("base is nonempty");
    for (u, v) in base.edges() {
        e = CwdExpr::join(u as Label + 1, v as Label + 1, e);
    }
    Ok(e)
}

/// Expression for `expand_thickening(base, sizes)`: class `v` takes the
/// next `sizes[v]` consecutive ids.
pub fn expr_thicken(base: &Graph, sizes: &[usize]) -> Result<CwdExpr> {
    if sizes.len() != base.n() {
        return Err(Error::InvalidArgument(format!("expected {} sizes, got {}", base.n(), sizes.len())));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidArgument("thickening sizes must be positive".into()));
    }
    let mut next = 0;
    let classes: Vec<Vec<usize>> = sizes
        .iter()
        .map(|&s| {
            let c = (next..next + s).collect();
            next += s;
            c
        })
        .collect();
    expr_thicken_classes(base, &classes)
}

/// Adds a clique on `ids` complete to everything `e` builds. The width
/// grows only when `e` uses a single label.
pub fn expr_add_universals(e: &CwdExpr, ids: &[usize]) -> Result<CwdExpr> {
    if ids.is_empty() {
        return Ok(e.clone());
    }
    let existing: BTreeSet<usize> = e.vertices().into_iter().collect();
    if let Some(v) = ids.iter().find(|v| existing.contains(v)) {
        return Err(Error::InvalidArgument(format!("vertex {v} is already in the expression")));
    }
    let labels: Vec<Label> = e.labels().into_iter().collect();
    let a = labels[0];
    let b = labels.get(1).copied().unwrap_or(a + 1);
    let clique = clique_on(ids, b, a);
    Ok(CwdExpr::join(a, b, CwdExpr::union(collapse_labels(e.clone(), a), clique)))
}

/// Why [`expr_for_class_graph`] declined a graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum CwdRefusal {
    /// The construction assumes there are no simplicial vertices.
    SimplicialVertex { vertex: usize },
    NotInClass(Rejection),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CwdOutcome {
    Expression(CwdExpr),
    Refused(CwdRefusal),
}

/// Width-at-most-12 expression for a simplicial-free graph in the class,
/// evaluating to `g` with the same vertex ids: the twin quotient is
/// thickened back to the twin classes, then the universal vertices are
/// added.
pub fn expr_for_class_graph(g: &Graph) -> Result<CwdOutcome> {
    let report = recognize(g);
    if let Verdict::NotInClass(rej) = &report.verdict {
        return Ok(CwdOutcome::Refused(CwdRefusal::NotInClass(rej.clone())));
    }
    let d = &report.decomposition;
    if let Some(&vertex) = d.prefix.first() {
        return Ok(CwdOutcome::Refused(CwdRefusal::SimplicialVertex { vertex }));
    }
    let reps = VertexSet::from_iter(g.n(), d.reps())?;
    let (quotient, _) = g.induced_subgraph(&reps)?;
    let e = expr_thicken_classes(&quotient, &d.classes)?;
    Ok(CwdOutcome::Expression(expr_add_universals(&e, &d.universals)?))
}

#[cfg(test)]
mod tests {
    use super::super::eval;
    use super::*;
    use crate::catalog::{m0, m1, t0, t1};
    use crate::decompose::expand_thickening;

    #[test]
    fn complete_graphs() {
        assert_eq!(expr_complete(1).unwrap().width(), 1);
        assert!(expr_complete(0).is_err());
        for k in 2..8 {
            let e = expr_complete(k).unwrap();
            assert_eq!(e.width(), 2);
            assert_eq!(eval(&e).unwrap().graph, Graph::complete(k).unwrap());
        }
    }

    #[test]
    fn substitute_k2_into_k2() {
        let outer = expr_complete(2).unwrap();
        let inner = CwdExpr::join(1, 2, CwdExpr::union(CwdExpr::create(1, 1), CwdExpr::create(2, 2)));
        let e = expr_substitute(&outer, 1, &inner).unwrap();
        assert_eq!(eval(&e).unwrap().graph, Graph::complete(3).unwrap());
        assert!(e.width() <= 2);
        assert!(expr_substitute(&outer, 7, &inner).is_err());
    }

    #[test]
    fn substitute_into_single_vertex() {
        let c7 = expr_thicken(&Graph::cycle(7).unwrap(), &[1; 7]).unwrap();
        let e = expr_substitute(&CwdExpr::create(1, 0), 0, &c7).unwrap();
        assert_eq!(eval(&e).unwrap().graph, Graph::cycle(7).unwrap());
        assert_eq!(e.width(), c7.width());
    }

    #[test]
    fn thicken_round_trips() {
        let t = t0().graph;
        let e = expr_thicken(&t, &[1; 9]).unwrap();
        assert!(e.width() <= 9);
        assert_eq!(eval(&e).unwrap().graph, t);

        let m = m0().graph;
        let e = expr_thicken(&m, &[2; 12]).unwrap();
        assert!(e.width() <= 12);
        assert_eq!(eval(&e).unwrap().graph, expand_thickening(&m, &[2; 12]).unwrap().0);
        assert!(expr_thicken(&Graph::empty(13).unwrap(), &[1; 13]).is_err());
    }

    #[test]
    fn universals_on_c7() {
        let c7 = Graph::cycle(7).unwrap();
        let e = expr_thicken(&c7, &[1; 7]).unwrap();
        let with = expr_add_universals(&e, &[7, 8, 9]).unwrap();
        assert!(with.width() <= e.width().max(2));
        let lg = eval(&with).unwrap();
        let expected = Graph::from_fn(10, |u, v| u >= 7 || v >= 7 || c7.adjacent(u, v)).unwrap();
        assert_eq!(lg.graph, expected);
        let single = expr_add_universals(&CwdExpr::create(1, 0), &[1]).unwrap();
        assert_eq!(eval(&single).unwrap().graph, Graph::complete(2).unwrap());
    }

    #[test]
    fn class_graphs() {
        let t = t1().graph;
        let CwdOutcome::Expression(e) = expr_for_class_graph(&t).unwrap() else {
            panic!("T1 has no simplicial vertex");
        };
        assert!(e.width() <= 10);
        assert_eq!(eval(&e).unwrap().graph, t);

        let (thick, _) = expand_thickening(&m1().graph, &[2, 1, 1, 3, 1, 1, 2, 1, 2]).unwrap();
        let n = thick.n();
        let g = Graph::from_fn(n + 1, |u, v| u == n || v == n || thick.adjacent(u, v)).unwrap();
        let CwdOutcome::Expression(e) = expr_for_class_graph(&g).unwrap() else {
            panic!("thickened M1 plus a universal vertex is eligible");
        };
        assert!(e.width() <= 9);
        assert_eq!(eval(&e).unwrap().graph, g);
    }

    #[test]
    fn class_graph_refusals() {
        // T0 plus a vertex adjacent to exactly c2 and c3 is a tent with Y
        // nonempty, and that vertex is simplicial.
        let base = t0().graph;
        let c2 = 7;
        let c3 = 8;
        let g = Graph::from_fn(10, |u, v| match (u.min(v), u.max(v)) {
            (a, 9) => a == c2 || a == c3,
            (a, b) => base.adjacent(a, b),
        })
        .unwrap();
        assert!(matches!(
            expr_for_class_graph(&g).unwrap(),
            CwdOutcome::Refused(CwdRefusal::SimplicialVertex { vertex: 9 })
        ));
        assert!(matches!(
            expr_for_class_graph(&Graph::cycle(6).unwrap()).unwrap(),
            CwdOutcome::Refused(CwdRefusal::NotInClass(_))
        ));
    }
}
