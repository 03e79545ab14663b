//! Dense simple graphs over positional vertex ids and the set predicates the
//! rest of the crate is built on.

use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A subset of `{0..n}` with O(1) membership.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(n: usize) -> Self {
        VertexSet {
            bits: FixedBitSet::with_capacity(n),
        }
    }

    pub fn full(n: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(n);
        bits.insert_range(..);
        VertexSet { bits }
    }

    /// Members outside `0..n` are rejected.
    pub fn from_iter<I: IntoIterator<Item = usize>>(n: usize, members: I) -> Result<Self> {
        let mut set = VertexSet::empty(n);
        for v in members {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.bits.insert(v);
        }
        Ok(set)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        VertexSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Size of the universe this set lives in.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn insert(&mut self, v: usize) {
        self.bits.insert(v);
    }

    pub fn remove(&mut self, v: usize) {
        self.bits.set(v, false);
    }

    pub fn contains(&self, v: usize) -> bool {
        self.bits.contains(v)
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.bits.ones().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.bits.minimum()
    }

    pub fn union_with(&mut self, other: &VertexSet) {
        self.bits.union_with(&other.bits);
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        self.bits.intersect_with(&other.bits);
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        self.bits.difference_with(&other.bits);
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.intersect_with(other);
        out
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.difference_with(other);
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        let mut out = self.clone();
        out.union_with(other);
        out
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// How two disjoint vertex sets see each other.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Complete,
    Anticomplete,
    Mixed,
}

/// Immutable simple graph on vertices `0..n`, `n >= 1`.
///
/// Adjacency is a dense symmetric bit matrix; row `v` is `N(v)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<FixedBitSet>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected with the offending pair.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NullGraph);
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for &(u, v) in edges {
            if u == v || u >= n || v >= n {
                return Err(Error::InvalidEdge { u, v, n });
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { rows })
    }

    /// Builds a graph by evaluating `adj(u, v)` for every `u < v`.
    pub fn from_fn(n: usize, mut adj: impl FnMut(usize, usize) -> bool) -> Result<Self> {
        if n == 0 {
            return Err(Error::NullGraph);
        }
        let mut rows = vec![FixedBitSet::with_capacity(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if adj(u, v) {
                    rows[u].insert(v);
                    rows[v].insert(u);
                }
            }
        }
        Ok(Graph { rows })
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_fn(n, |_, _| true)
    }

    pub fn empty(n: usize) -> Result<Self> {
        Graph::from_fn(n, |_, _| false)
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::from_fn(n, |u, v| v == u + 1)
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidArgument(format!("cycle needs at least 3 vertices, got {n}")));
        }
        Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1))
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet::from_bits(self.rows[v].clone())
    }

    pub(crate) fn row(&self, v: usize) -> &FixedBitSet {
        &self.rows[v]
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut bits = self.rows[v].clone();
        bits.insert(v);
        VertexSet::from_bits(bits)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].count_ones(..)
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.count_ones(..)).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|v| {
                let mut row = self.rows[v].clone();
                row.toggle_range(..);
                row.set(v, false);
                row
            })
            .collect();
        Graph { rows }
    }

    /// `G[S]`: vertex `i` of the result is the `i`-th smallest member of `S`.
    /// The returned map sends new ids to old ids.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_universe(s)?;
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        let map = s.to_vec();
        let k = map.len();
        let mut rows = vec![FixedBitSet::with_capacity(k); k];
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.rows[u].contains(v) {
                    rows[i].insert(j);
                    rows[j].insert(i);
                }
            }
        }
        Ok((Graph { rows }, map))
    }

    /// `G \ S` together with its new-to-old index map.
    pub fn without(&self, s: &VertexSet) -> Result<(Graph, Vec<usize>)> {
        let keep = self.vertices().difference(s);
        self.induced_subgraph(&keep)
    }

    fn check_universe(&self, s: &VertexSet) -> Result<()> {
        if s.universe() > self.n() && s.iter().any(|v| v >= self.n()) {
            let v = s.iter().find(|&v| v >= self.n()).unwrap_or_default();
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        Ok(())
    }

    /// Complete, anticomplete, or mixed between disjoint `a` and `b`.
    /// An empty side is reported as anticomplete.
    pub fn relation(&self, a: &VertexSet, b: &VertexSet) -> Result<Relation> {
        self.check_universe(a)?;
        self.check_universe(b)?;
        if !a.is_disjoint(b) {
            return Err(Error::OverlappingSets);
        }
        if a.is_empty() || b.is_empty() {
            return Ok(Relation::Anticomplete);
        }
        let mut any = false;
        let mut all = true;
        for u in a.iter() {
            let hits = self.rows[u].intersection_count(b.bits());
            any |= hits > 0;
            all &= hits == b.len();
        }
        Ok(match (all, any) {
            (true, _) => Relation::Complete,
            (false, false) => Relation::Anticomplete,
            _ => Relation::Mixed,
        })
    }

    /// Every `a`-`b` pair adjacent (vacuously true if either is empty).
    pub fn is_complete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        let blen = b.len();
        a.iter().all(|u| self.rows[u].intersection_count(b.bits()) == blen - usize::from(b.contains(u)))
    }

    /// No `a`-`b` pair adjacent.
    pub fn is_anticomplete_to(&self, a: &VertexSet, b: &VertexSet) -> bool {
        a.iter().all(|u| self.rows[u].is_disjoint(b.bits()))
    }

    /// First pair `(u, v)` with `u` in `a`, `v` in `b` that is non-adjacent.
    pub fn find_non_edge_between(&self, a: &VertexSet, b: &VertexSet) -> Option<(usize, usize)> {
        for u in a.iter() {
            if let Some(v) = b.iter().find(|&v| v != u && !self.rows[u].contains(v)) {
                return Some((u, v));
            }
        }
        None
    }

    /// First adjacent pair `(u, v)` with `u` in `a`, `v` in `b`.
    pub fn find_edge_between(&self, a: &VertexSet, b: &VertexSet) -> Option<(usize, usize)> {
        for u in a.iter() {
            let mut hit = self.rows[u].clone();
            hit.intersect_with(b.bits());
            if let Some(v) = hit.minimum() {
                return Some((u, v));
            }
        }
        None
    }

    /// Connected components, each a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(&self.vertices())
    }

    /// Components of `G[s]`.
    pub fn components_within(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut left = s.clone();
        let mut out = Vec::new();
        while let Some(root) = left.first() {
            let mut comp = VertexSet::empty(self.n());
            let mut frontier = vec![root];
            comp.insert(root);
            left.remove(root);
            while let Some(u) = frontier.pop() {
                let mut next = self.rows[u].clone();
                next.intersect_with(left.bits());
                for v in next.ones() {
                    left.remove(v);
                    comp.insert(v);
                    frontier.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Vertex sets of the anticomponents (components of the complement).
    pub fn anticomponents(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut left = self.vertices();
        let mut out = Vec::new();
        while let Some(root) = left.first() {
            let mut comp = VertexSet::empty(n);
            let mut frontier = vec![root];
            comp.insert(root);
            left.remove(root);
            while let Some(u) = frontier.pop() {
                let mut next = left.bits().clone();
                next.difference_with(&self.rows[u]);
                for v in next.ones() {
                    left.remove(v);
                    comp.insert(v);
                    frontier.push(v);
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Empty sets and singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        self.find_non_edge_in(s).is_none()
    }

    /// A non-adjacent pair inside `s`, if any.
    pub fn find_non_edge_in(&self, s: &VertexSet) -> Option<(usize, usize)> {
        let k = s.len();
        for u in s.iter() {
            if self.rows[u].intersection_count(s.bits()) + 1 != k {
                let v = s.iter().find(|&v| v != u && !self.rows[u].contains(v))?;
                return Some((u, v));
            }
        }
        None
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.neighbors(v))
    }

    pub fn simplicial_vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n());
        for v in 0..self.n() {
            if self.is_simplicial(v) {
                out.insert(v);
            }
        }
        out
    }

    /// `{v : N[v] = V(G)}`.
    pub fn universal_vertices(&self) -> VertexSet {
        let mut out = VertexSet::empty(self.n());
        for v in 0..self.n() {
            if self.degree(v) + 1 == self.n() {
                out.insert(v);
            }
        }
        out
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::InvalidArgument("permutation length mismatch".into()));
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidArgument("not a permutation".into()));
            }
        }
        let edges: Vec<_> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(n, &edges)
    }

    /// Toggles adjacency of one pair.
    pub fn with_flipped(&self, u: usize, v: usize) -> Result<Graph> {
        if u == v || u >= self.n() || v >= self.n() {
            return Err(Error::InvalidEdge { u, v, n: self.n() });
        }
        let mut out = self.clone();
        out.rows[u].toggle(v);
        out.rows[v].toggle(u);
        Ok(out)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n())?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}
