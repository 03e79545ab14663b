//! Exhaustive ground truth at desk scale: induced-subgraph search, hole
//! lengths, chromatic number, clique-cutsets and class membership.
//!
//! Everything here is exponential and guarded by explicit size limits.

use std::collections::BTreeSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::catalog::{self, NamedGraph};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

pub const PATTERN_LIMIT: usize = 10;
pub const HOLE_LIMIT: usize = 16;
pub const CHROMATIC_LIMIT: usize = 18;
pub const CUTSET_LIMIT: usize = 18;
pub const VERDICT_LIMIT: usize = 20;

/// An induced copy of a named pattern: `image[p]` is the host vertex for
/// pattern vertex `p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub pattern: String,
    pub image: Vec<usize>,
}

/// Searches `g` for an induced copy of `pattern`.
pub fn find_induced(g: &Graph, pattern: &NamedGraph) -> Result<Option<Embedding>> {
    let h = &pattern.graph;
    if h.n() > PATTERN_LIMIT {
        return Err(Error::size("induced pattern", PATTERN_LIMIT, h.n()));
    }
    Ok(find_induced_graph(g, h).map(|image| Embedding {
        pattern: pattern.name.clone(),
        image,
    }))
}

/// Unnamed variant of [`find_induced`] without the pattern size check.
pub(crate) fn find_induced_graph(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    let k = h.n();
    if k > g.n() {
        return None;
    }
    // Pattern order: each vertex has as many earlier neighbors as possible.
    let mut order: Vec<usize> = Vec::with_capacity(k);
    let mut placed = vec![false; k];
    while order.len() < k {
        let next = (0..k)
            .filter(|&p| !placed[p])
            .max_by_key(|&p| {
                let back = order.iter().filter(|&&q| h.adjacent(p, q)).count();
                (back, h.degree(p), std::cmp::Reverse(p))
            })
            .expect("unplaced pattern vertex");
        placed[next] = true;
        order.push(next);
    }
    let mut image = vec![usize::MAX; k];
    let mut used = FixedBitSet::with_capacity(g.n());
    if extend_embedding(g, h, &order, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn extend_embedding(
    g: &Graph,
    h: &Graph,
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut FixedBitSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = used.clone();
    cand.toggle_range(..);
    for &q in &order[..depth] {
        if h.adjacent(p, q) {
            cand.intersect_with(g.row(image[q]));
        } else {
            cand.difference_with(g.row(image[q]));
        }
    }
    let need = h.degree(p);
    for v in cand.ones() {
        if g.degree(v) < need {
            continue;
        }
        image[p] = v;
        used.insert(v);
        if extend_embedding(g, h, order, depth + 1, image, used) {
            return true;
        }
        used.set(v, false);
    }
    image[p] = usize::MAX;
    false
}

/// Lengths of all holes (induced cycles of length at least 4).
pub fn all_hole_lengths(g: &Graph) -> Result<BTreeSet<usize>> {
    let n = g.n();
    if n > HOLE_LIMIT {
        return Err(Error::size("hole enumeration", HOLE_LIMIT, n));
    }
    let adj: Vec<u32> = (0..n).map(|v| mask_of(g.row(v))).collect();
    let mut lengths = BTreeSet::new();
    // Each hole is found from its smallest vertex s as an induced path
    // s, p1, ..., pk that closes back to s.
    for s in 0..n {
        let allowed: u32 = !((1u32 << (s + 1)) - 1) & full_mask(n);
        let mut nbrs = adj[s] & allowed;
        while nbrs != 0 {
            let p1 = nbrs.trailing_zeros() as usize;
            nbrs &= nbrs - 1;
            let path = (1u32 << s) | (1u32 << p1);
            grow_holes(&adj, s, p1, p1, path, 2, allowed, &mut lengths);
        }
    }
    Ok(lengths)
}

#[allow(clippy::too_many_arguments)]
fn grow_holes(
    adj: &[u32],
    s: usize,
    first: usize,
    last: usize,
    path: u32,
    len: usize,
    allowed: u32,
    lengths: &mut BTreeSet<usize>,
) {
    // Interior vertices other than `last` must not see the new vertex.
    let interior = path & !(1u32 << last) & !(1u32 << s);
    let mut next = adj[last] & allowed & !path;
    while next != 0 {
        let v = next.trailing_zeros() as usize;
        next &= next - 1;
        if adj[v] & interior != 0 {
            continue;
        }
        if adj[v] >> s & 1 == 1 {
            if last != first {
                lengths.insert(len + 1);
            }
            continue;
        }
        grow_holes(adj, s, first, v, path | (1u32 << v), len + 1, allowed, lengths);
    }
}

fn full_mask(n: usize) -> u32 {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

fn mask_of(row: &FixedBitSet) -> u32 {
    row.ones().fold(0u32, |m, u| m | 1 << u)
}

/// Exact chromatic number with a witness coloring (colors `1..=k`).
pub fn chromatic_number_bf(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let n = g.n();
    if n > CHROMATIC_LIMIT {
        return Err(Error::size("chromatic number", CHROMATIC_LIMIT, n));
    }
    let adj: Vec<u32> = (0..n).map(|v| mask_of(g.row(v))).collect();
    // Color in order of decreasing degree; a clique found greedily at the
    // front gives the starting bound.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(adj[v].count_ones()), v));
    let start = greedy_clique(&adj, &order).max(1);
    for k in start..=n {
        let mut colors = vec![0usize; n];
        if color_with(&adj, &order, 0, k, 0, &mut colors) {
            return Ok((k, colors));
        }
    }
    unreachable!("n colors always suffice")
}

fn greedy_clique(adj: &[u32], order: &[usize]) -> usize {
    let mut clique = 0u32;
    for &v in order {
        if adj[v] & clique == clique {
            clique |= 1 << v;
        }
    }
    clique.count_ones() as usize
}

fn color_with(adj: &[u32], order: &[usize], depth: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    // Only one fresh color needs trying: fresh colors are interchangeable.
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        let clash = (0..adj.len()).any(|u| adj[v] >> u & 1 == 1 && colors[u] == c);
        if clash {
            continue;
        }
        colors[v] = c;
        if color_with(adj, order, depth + 1, k, used.max(c), colors) {
            return true;
        }
    }
    colors[v] = 0;
    false
}

/// A clique whose removal disconnects `g`, or `None`. Disconnected graphs
/// yield the empty set. Among all clique-cutsets the smallest is returned,
/// then the one leaving the largest smallest component, then the
/// lexicographically first.
pub fn clique_cutset_bf(g: &Graph) -> Result<Option<VertexSet>> {
    let n = g.n();
    if n > CUTSET_LIMIT {
        return Err(Error::size("clique-cutset search", CUTSET_LIMIT, n));
    }
    if !g.is_connected() {
        return Ok(Some(VertexSet::empty(n)));
    }
    let adj: Vec<u32> = (0..n).map(|v| mask_of(g.row(v))).collect();
    let all = full_mask(n);
    let mut best: Option<(usize, std::cmp::Reverse<usize>, Vec<usize>)> = None;
    let mut cliques: Vec<u32> = Vec::new();
    collect_cliques(&adj, 0, all, &mut cliques);
    for c in cliques {
        let rest = all & !c;
        if rest == 0 {
            continue;
        }
        let comps = component_sizes(&adj, rest);
        if comps.len() < 2 {
            continue;
        }
        let members: Vec<usize> = (0..n).filter(|&v| c >> v & 1 == 1).collect();
        let key = (members.len(), std::cmp::Reverse(*comps.iter().min().expect("nonempty")), members);
        if best.as_ref().is_none_or(|b| key < *b) {
            best = Some(key);
        }
    }
    Ok(best.map(|(_, _, members)| VertexSet::from_iter(n, members).expect("in range")))
}

/// Every nonempty clique, as masks.
fn collect_cliques(adj: &[u32], current: u32, candidates: u32, out: &mut Vec<u32>) {
    let mut cand = candidates;
    while cand != 0 {
        let v = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        let grown = current | (1 << v);
        out.push(grown);
        collect_cliques(adj, grown, cand & adj[v], out);
    }
}

fn component_sizes(adj: &[u32], set: u32) -> Vec<usize> {
    let mut left = set;
    let mut sizes = Vec::new();
    while left != 0 {
        let root = left.trailing_zeros() as usize;
        let mut comp = 1u32 << root;
        let mut frontier = comp;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & left & !comp;
            comp |= fresh;
            frontier |= fresh;
        }
        left &= !comp;
        sizes.push(comp.count_ones() as usize);
    }
    sizes
}

/// Exact membership flags for the (2P3, C4, C6)-free-with-C7-or-T0 class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassVerdict {
    pub is_2p3_free: bool,
    pub is_c4_free: bool,
    pub is_c6_free: bool,
    pub is_c7_free: bool,
    pub has_c7: bool,
    pub has_t0: bool,
    /// Witness for every pattern that was found.
    pub witnesses: Vec<Embedding>,
}

impl ClassVerdict {
    pub fn is_forbidden_free(&self) -> bool {
        self.is_2p3_free && self.is_c4_free && self.is_c6_free
    }

    pub fn in_class(&self) -> bool {
        self.is_forbidden_free() && (self.has_c7 || self.has_t0)
    }

    pub fn witness(&self, pattern: &str) -> Option<&Embedding> {
        self.witnesses.iter().find(|w| w.pattern == pattern)
    }

    /// First witness of a forbidden pattern (2P3, C4, C6), if any.
    pub fn forbidden_witness(&self) -> Option<&Embedding> {
        ["2P3", "C4", "C6"].iter().find_map(|p| self.witness(p))
    }
}

pub fn class_verdict(g: &Graph) -> Result<ClassVerdict> {
    if g.n() > VERDICT_LIMIT {
        return Err(Error::size("class verdict", VERDICT_LIMIT, g.n()));
    }
    let mut witnesses = Vec::new();
    let mut probe = |pattern: NamedGraph| -> Result<bool> {
        let hit = find_induced(g, &pattern)?;
        let found = hit.is_some();
        witnesses.extend(hit);
        Ok(found)
    };
    let has_2p3 = probe(catalog::two_p3())?;
    let has_c4 = probe(catalog::c4())?;
    let has_c6 = probe(catalog::c6())?;
    let has_c7 = probe(catalog::c7())?;
    let has_t0 = probe(catalog::t0())?;
    Ok(ClassVerdict {
        is_2p3_free: !has_2p3,
        is_c4_free: !has_c4,
        is_c6_free: !has_c6,
        is_c7_free: !has_c7,
        has_c7,
        has_t0,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{c4, c7, m2, t0, t1, three_pentagon, two_p3};

    #[test]
    fn find_induced_examples() {
        let p8 = Graph::path(8).unwrap();
        let hit = find_induced(&p8, &two_p3()).unwrap().unwrap();
        let (sub, _) = p8
            .induced_subgraph(&VertexSet::from_iter(8, hit.image.iter().copied()).unwrap())
            .unwrap();
        assert!(crate::catalog::is_isomorphic_small(&sub, &two_p3().graph).unwrap().is_some());
        assert!(find_induced(&t0().graph, &three_pentagon()).unwrap().is_some());
        assert!(find_induced(&Graph::cycle(7).unwrap(), &c4()).unwrap().is_none());
        let big = crate::catalog::NamedGraph {
            name: "K11".into(),
            graph: Graph::complete(11).unwrap(),
            labels: vec![String::new(); 11],
        };
        assert!(find_induced(&p8, &big).is_err());
    }

    #[test]
    fn hole_lengths() {
        assert_eq!(all_hole_lengths(&t1().graph).unwrap(), BTreeSet::from([5]));
        assert_eq!(all_hole_lengths(&Graph::cycle(7).unwrap()).unwrap(), BTreeSet::from([7]));
        assert!(all_hole_lengths(&Graph::complete(4).unwrap()).unwrap().is_empty());
        assert_eq!(all_hole_lengths(&Graph::cycle(4).unwrap()).unwrap(), BTreeSet::from([4]));
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number_bf(&Graph::cycle(7).unwrap()).unwrap().0, 3);
        assert_eq!(chromatic_number_bf(&Graph::complete(5).unwrap()).unwrap().0, 5);
        let (k, colors) = chromatic_number_bf(&t0().graph).unwrap();
        assert!(t0().graph.edges().all(|(u, v)| colors[u] != colors[v]));
        assert!(colors.iter().all(|&c| (1..=k).contains(&c)));
    }

    #[test]
    fn cutset_examples() {
        let two = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(clique_cutset_bf(&two).unwrap().unwrap().len(), 0);
        let p7 = Graph::path(7).unwrap();
        assert_eq!(clique_cutset_bf(&p7).unwrap().unwrap().to_vec(), vec![3]);
        assert!(clique_cutset_bf(&Graph::cycle(7).unwrap()).unwrap().is_none());
    }

    #[test]
    fn verdict_examples() {
        let v = class_verdict(&t0().graph).unwrap();
        assert!(v.in_class() && v.has_t0 && v.is_c7_free);
        let v = class_verdict(&Graph::cycle(6).unwrap()).unwrap();
        assert!(!v.is_c6_free && !v.in_class());
        let v = class_verdict(&m2().graph).unwrap();
        assert!(v.has_c7 && v.is_forbidden_free());
        assert!(class_verdict(&c7().graph).unwrap().in_class());
    }
}
