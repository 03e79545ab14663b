//! The fixed small graphs: the 7-hole family built from `M0`..`M3`, the
//! graphs `T0`/`T1`, the forbidden patterns, and a small-graph isomorphism
//! test used to match quotients against them.

use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest graph accepted by [`is_isomorphic_small`].
pub const ISO_LIMIT: usize = 16;
/// Largest quotient [`match_catalog`] will look at.
pub const MATCH_LIMIT: usize = 12;

/// A catalog graph with its vertex labels (`labels[v]` names vertex `v`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NamedGraph {
    pub name: String,
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl NamedGraph {
    fn new(name: impl Into<String>, graph: Graph, labels: &[&str]) -> Self {
        debug_assert_eq!(graph.n(), labels.len());
        NamedGraph {
            name: name.into(),
            graph,
            labels: labels.iter().map(|s| s.to_string()).collect(),
        }
    }

    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

const HOLE_LABELS: [&str; 7] = ["x0", "x1", "x2", "x3", "x4", "x5", "x6"];

/// Labels of the optional vertices of `M0`, in vertex order 7..12.
pub const M0_EXTRAS: [&str; 5] = ["y0", "y3", "z0", "z3", "z4"];

/// Labels of `T0` in vertex order; `T1` appends `f3`.
pub const T0_LABELS: [&str; 9] = ["a0", "a1", "b0", "b1", "b2", "b3", "c1", "c2", "c3"];

const T0_EDGES: [(usize, usize); 14] = [
    (0, 1),
    (0, 2),
    (0, 4),
    (0, 5),
    (1, 3),
    (1, 4),
    (1, 5),
    (6, 7),
    (6, 8),
    (7, 8),
    (6, 2),
    (6, 3),
    (7, 4),
    (8, 5),
];

/// Hole `x0..x6` plus extra vertices, each given by the hole indices it sees.
fn hole_with_extras(extras: &[&[usize]], extra_edges: &[(usize, usize)]) -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..7).map(|i| (i, (i + 1) % 7)).collect();
    for (k, seen) in extras.iter().enumerate() {
        edges.extend(seen.iter().map(|&x| (x, 7 + k)));
    }
    edges.extend(extra_edges.iter().map(|&(a, b)| (7 + a, 7 + b)));
    Graph::new(7 + extras.len(), &edges).expect("static catalog graph")
}

fn labels_with(extras: &[&'static str]) -> Vec<&'static str> {
    HOLE_LABELS.iter().copied().chain(extras.iter().copied()).collect()
}

/// The full `M0` on 12 vertices.
pub fn m0() -> NamedGraph {
    let clique: Vec<(usize, usize)> = (0..5).flat_map(|a| (a + 1..5).map(move |b| (a, b))).collect();
    let g = hole_with_extras(
        &[&[0, 1, 4], &[3, 4, 0], &[0, 1, 2, 3, 4], &[3, 4, 5, 6, 0], &[4, 5, 6, 0, 1]],
        &clique,
    );
    NamedGraph::new("M0", g, &labels_with(&M0_EXTRAS))
}

pub fn m1() -> NamedGraph {
    let g = hole_with_extras(&[&[0, 1, 4], &[2, 3, 4, 5, 6]], &[]);
    NamedGraph::new("M1", g, &labels_with(&["y0", "z2"]))
}

/// `M1` plus one vertex seeing the given hole indices and both extras of `M1`.
fn extend_m1(name: &str, label: &'static str, seen: &[usize]) -> NamedGraph {
    let base = m1().graph;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    edges.extend(seen.iter().map(|&x| (x, 9)));
    edges.extend([(7, 9), (8, 9)]);
    let g = Graph::new(10, &edges).expect("static catalog graph");
    NamedGraph::new(name, g, &labels_with(&["y0", "z2", label]))
}

pub fn m2() -> NamedGraph {
    extend_m1("M2", "z1", &[1, 2, 3, 4, 5])
}

pub fn m3() -> NamedGraph {
    extend_m1("M3", "z3", &[3, 4, 5, 6, 0])
}

/// Name of `M0` with the extras in `removed` (a 5-bit mask over
/// [`M0_EXTRAS`]) deleted.
pub fn m0_minus_name(removed: u8) -> String {
    match removed {
        0 => "M0".to_string(),
        0b11111 => "M0-minus-all".to_string(),
        _ => {
            let parts: Vec<&str> = (0..5).filter(|b| removed >> b & 1 == 1).map(|b| M0_EXTRAS[b]).collect();
            format!("M0-minus-{{{}}}", parts.join(","))
        }
    }
}

/// `M0 \ S` for every `S` over the five extras (in mask order), then
/// `M1`, `M2`, `M3`: 35 entries.
pub fn family_m() -> Vec<NamedGraph> {
    let full = m0();
    let mut out = Vec::with_capacity(35);
    for removed in 0u8..32 {
        let mut keep = VertexSet::full(12);
        for b in 0..5 {
            if removed >> b & 1 == 1 {
                keep.remove(7 + b);
            }
        }
        let (g, map) = full.graph.induced_subgraph(&keep).expect("hole is kept");
        let labels: Vec<&str> = map.iter().map(|&v| full.labels[v].as_str()).collect();
        out.push(NamedGraph::new(m0_minus_name(removed), g, &labels));
    }
    out.extend([m1(), m2(), m3()]);
    out
}

pub fn t0() -> NamedGraph {
    NamedGraph::new("T0", Graph::new(9, &T0_EDGES).expect("static catalog graph"), &T0_LABELS)
}

/// `T0` plus `f3`, which sees everything except `b3` and `c3`.
pub fn t1() -> NamedGraph {
    let mut edges = T0_EDGES.to_vec();
    edges.extend([0, 1, 2, 3, 4, 6, 7].iter().map(|&v| (v, 9)));
    let mut labels = T0_LABELS.to_vec();
    labels.push("f3");
    NamedGraph::new("T1", Graph::new(10, &edges).expect("static catalog graph"), &labels)
}

/// `T0 \ {a0, b0}`.
pub fn three_pentagon() -> NamedGraph {
    let t = t0();
    let keep = VertexSet::from_iter(9, [1, 3, 4, 5, 6, 7, 8]).expect("in range");
    let (g, map) = t.graph.induced_subgraph(&keep).expect("nonempty");
    let labels: Vec<&str> = map.iter().map(|&v| t.labels[v].as_str()).collect();
    NamedGraph::new("3-pentagon", g, &labels)
}

fn numbered(name: &str, g: Graph) -> NamedGraph {
    let labels: Vec<String> = (0..g.n()).map(|v| format!("v{v}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    NamedGraph::new(name, g, &refs)
}

pub fn c4() -> NamedGraph {
    numbered("C4", Graph::cycle(4).expect("n >= 3"))
}

pub fn c6() -> NamedGraph {
    numbered("C6", Graph::cycle(6).expect("n >= 3"))
}

pub fn c7() -> NamedGraph {
    numbered("C7", Graph::cycle(7).expect("n >= 3"))
}

pub fn p3() -> NamedGraph {
    numbered("P3", Graph::path(3).expect("n >= 1"))
}

pub fn p7() -> NamedGraph {
    numbered("P7", Graph::path(7).expect("n >= 1"))
}

pub fn two_p3() -> NamedGraph {
    numbered("2P3", Graph::new(6, &[(0, 1), (1, 2), (3, 4), (4, 5)]).expect("static"))
}

pub fn four_k1() -> NamedGraph {
    numbered("4K1", Graph::empty(4).expect("n >= 1"))
}

/// `C4, C6, C7, P7, 2P3, 4K1, P3, 3-pentagon, T0, T1`.
pub fn fixed_graphs() -> Vec<NamedGraph> {
    vec![c4(), c6(), c7(), p7(), two_p3(), four_k1(), p3(), three_pentagon(), t0(), t1()]
}

/// Looks up a fixed graph by name (case-insensitive).
pub fn fixed_graph(name: &str) -> Option<NamedGraph> {
    fixed_graphs().into_iter().find(|g| g.name.eq_ignore_ascii_case(name))
}

/// Prebuilt catalog shared by the matching routines.
pub struct Catalog {
    pub family: Vec<NamedGraph>,
    /// Indices into `family` of the first member of each isomorphism class.
    pub family_classes: Vec<usize>,
    pub t0: NamedGraph,
    pub t1: NamedGraph,
}

impl Catalog {
    fn build() -> Self {
        let family = family_m();
        let mut family_classes: Vec<usize> = Vec::new();
        for (i, g) in family.iter().enumerate() {
            let seen = family_classes.iter().any(|&j| {
                is_isomorphic_small(&family[j].graph, &g.graph)
                    .expect("catalog graphs are small")
                    .is_some()
            });
            if !seen {
                family_classes.push(i);
            }
        }
        Catalog {
            family,
            family_classes,
            t0: t0(),
            t1: t1(),
        }
    }

    /// Deduplicated members of the hole family.
    pub fn family_representatives(&self) -> impl Iterator<Item = &NamedGraph> {
        self.family_classes.iter().map(|&i| &self.family[i])
    }
}

/// The process-wide catalog, built on first use.
pub fn catalog() -> &'static Catalog {
    static CATALOG: OnceLock<Catalog> = OnceLock::new();
    CATALOG.get_or_init(Catalog::build)
}

/// Which part of the catalog a quotient matched.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatalogKind {
    HoleFamily,
    T0,
    T1,
}

#[derive(Clone, Debug)]
pub struct CatalogMatch {
    pub kind: CatalogKind,
    pub entry: &'static NamedGraph,
    /// `bijection[v]` is the catalog vertex that input vertex `v` maps to.
    pub bijection: Vec<usize>,
}

/// First entry of the deduplicated hole family, then `T0`, then `T1`,
/// isomorphic to `g`.
pub fn match_catalog(g: &Graph) -> Result<Option<CatalogMatch>> {
    if g.n() > MATCH_LIMIT {
        return Err(Error::size("catalog match", MATCH_LIMIT, g.n()));
    }
    let cat = catalog();
    let candidates = cat
        .family_representatives()
        .map(|e| (CatalogKind::HoleFamily, e))
        .chain([(CatalogKind::T0, &cat.t0), (CatalogKind::T1, &cat.t1)]);
    for (kind, entry) in candidates {
        if let Some(bijection) = is_isomorphic_small(g, &entry.graph)? {
            return Ok(Some(CatalogMatch { kind, entry, bijection }));
        }
    }
    Ok(None)
}

/// A bijection `f` with `g[u][v] == h[f(u)][f(v)]`, or `None`.
pub fn is_isomorphic_small(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>> {
    for x in [g, h] {
        if x.n() > ISO_LIMIT {
            return Err(Error::size("isomorphism test", ISO_LIMIT, x.n()));
        }
    }
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let gm = masks(g);
    let hm = masks(h);
    let gdeg: Vec<u32> = gm.iter().map(|m| m.count_ones()).collect();
    let hdeg: Vec<u32> = hm.iter().map(|m| m.count_ones()).collect();
    let mut gs = gdeg.clone();
    let mut hs = hdeg.clone();
    gs.sort_unstable();
    hs.sort_unstable();
    if gs != hs {
        return Ok(None);
    }

    // Map g's vertices in an order that keeps each new vertex attached to
    // already-mapped ones where possible.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u32;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed >> v & 1 == 0)
            .max_by_key(|&v| ((gm[v] & placed).count_ones(), gdeg[v], std::cmp::Reverse(v)))
            .expect("unplaced vertex exists");
        order.push(next);
        placed |= 1 << next;
    }

    let mut image = vec![usize::MAX; n];
    let mut used = 0u32;
    #[allow(clippy::too_many_arguments)]
    fn extend(
        depth: usize,
        order: &[usize],
        gm: &[u32],
        hm: &[u32],
        gdeg: &[u32],
        hdeg: &[u32],
        image: &mut [usize],
        used: &mut u32,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for w in 0..hm.len() {
            if *used >> w & 1 == 1 || hdeg[w] != gdeg[v] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| (gm[v] >> u & 1) == (hm[w] >> image[u] & 1));
            if !consistent {
                continue;
            }
            image[v] = w;
            *used |= 1 << w;
            if extend(depth + 1, order, gm, hm, gdeg, hdeg, image, used) {
                return true;
            }
            *used &= !(1 << w);
        }
        image[v] = usize::MAX;
        false
    }
    if extend(0, &order, &gm, &hm, &gdeg, &hdeg, &mut image, &mut used) {
        Ok(Some(image))
    } else {
        Ok(None)
    }
}

fn masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.row(v).ones().fold(0u32, |m, u| m | 1 << u))
        .collect()
}
