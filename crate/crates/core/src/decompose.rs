//! Strip-down steps: a maximal simplicial elimination prefix, removal of
//! universal vertices, and collapsing twins into a quotient.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A maximal sequence of vertices, each simplicial once its predecessors
/// are deleted, and what is left afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialPrefix {
    pub order: Vec<usize>,
    pub remainder: VertexSet,
}

impl SimplicialPrefix {
    /// An empty remainder means `order` is a simplicial elimination
    /// ordering, so the graph is chordal.
    pub fn is_chordal(&self) -> bool {
        self.remainder.is_empty()
    }
}

/// Removes the smallest-indexed simplicial vertex until none remains.
///
/// Each vertex tracks the number of non-adjacent pairs in its live
/// neighborhood; a vertex is simplicial exactly when that count is zero,
/// and deletions only ever lower it.
pub fn simplicial_prefix(g: &Graph) -> SimplicialPrefix {
    let n = g.n();
    let mut alive = FixedBitSet::with_capacity(n);
    alive.insert_range(..);
    let mut missing: Vec<usize> = (0..n)
        .map(|v| {
            let row = g.row(v);
            let inside: usize = row.ones().map(|w| row.intersection_count(g.row(w))).sum();
            let deg = row.count_ones(..);
            (deg * deg.saturating_sub(1) - inside) / 2
        })
        .collect();
    let mut heap: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| missing[v] == 0).map(Reverse).collect();
    let mut order = Vec::new();
    while let Some(Reverse(u)) = heap.pop() {
        if !alive.contains(u) {
            continue;
        }
        alive.set(u, false);
        order.push(u);
        // Pairs {u, w} disappear from the neighborhoods of u's neighbors.
        let mut live_nbrs = g.row(u).clone();
        live_nbrs.intersect_with(&alive);
        for v in live_nbrs.ones() {
            let mut nv = g.row(v).clone();
            nv.intersect_with(&alive);
            let non_adjacent_to_u = nv.count_ones(..) - nv.intersection_count(g.row(u));
            if missing[v] > 0 {
                missing[v] -= non_adjacent_to_u;
                if missing[v] == 0 {
                    heap.push(Reverse(v));
                }
            }
        }
    }
    SimplicialPrefix {
        order,
        remainder: VertexSet::from_bits(alive),
    }
}

/// Partition into closed-neighborhood classes, with the quotient graph on
/// one representative per class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwinDecomposition {
    /// Classes ordered by smallest member; members ascending.
    pub classes: Vec<Vec<usize>>,
    /// `class_of[v]` indexes `classes`.
    pub class_of: Vec<usize>,
    /// Smallest member of each class.
    pub reps: Vec<usize>,
    /// Graph on class indices.
    pub quotient: Graph,
}

impl TwinDecomposition {
    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }
}

/// Groups vertices with equal closed neighborhoods.
pub fn twin_classes(g: &Graph) -> TwinDecomposition {
    let n = g.n();
    let mut index: HashMap<FixedBitSet, usize> = HashMap::new();
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for (v, slot) in class_of.iter_mut().enumerate() {
        let mut closed = g.row(v).clone();
        closed.insert(v);
        let next = classes.len();
        let c = *index.entry(closed).or_insert(next);
        if c == next {
            classes.push(Vec::new());
        }
        classes[c].push(v);
        *slot = c;
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    let quotient = Graph::from_fn(reps.len(), |a, b| g.adjacent(reps[a], reps[b])).expect("at least one class");
    TwinDecomposition {
        classes,
        class_of,
        reps,
        quotient,
    }
}

/// Replaces vertex `v` of `h` by a clique of `sizes[v]` consecutive ids.
/// Returns the graph and the id list of each class.
pub fn expand_thickening(h: &Graph, sizes: &[usize]) -> Result<(Graph, Vec<Vec<usize>>)> {
    if sizes.len() != h.n() {
        return Err(Error::InvalidArgument(format!(
            "expected {} class sizes, got {}",
            h.n(),
            sizes.len()
        )));
    }
    if let Some(v) = sizes.iter().position(|&s| s == 0) {
        return Err(Error::InvalidArgument(format!("class size of vertex {v} is zero")));
    }
    let mut classes = Vec::with_capacity(h.n());
    let mut owner = Vec::new();
    for (v, &s) in sizes.iter().enumerate() {
        let start = owner.len();
        owner.extend(std::iter::repeat_n(v, s));
        classes.push((start..start + s).collect::<Vec<_>>());
    }
    let g = Graph::from_fn(owner.len(), |a, b| owner[a] == owner[b] || h.adjacent(owner[a], owner[b]))?;
    Ok((g, classes))
}

/// The universal vertices of a graph and what remains without them.
#[derive(Clone, Debug)]
pub struct UniversalSplit {
    pub universals: VertexSet,
    /// `G \ W` with its new-to-old map; `None` when `G` is complete.
    pub remainder: Option<(Graph, Vec<usize>)>,
}

impl UniversalSplit {
    pub fn is_complete(&self) -> bool {
        self.remainder.is_none()
    }
}

/// Removes all universal vertices at once (not iterated).
pub fn strip_universals(g: &Graph) -> UniversalSplit {
    let universals = g.universal_vertices();
    let remainder = if universals.len() == g.n() {
        None
    } else {
        Some(g.without(&universals).expect("some vertex is not universal"))
    };
    UniversalSplit { universals, remainder }
}

/// Serializable summary of a simplicial prefix.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PrefixSummary {
    pub order: Vec<usize>,
    pub remainder: Vec<usize>,
}

impl From<&SimplicialPrefix> for PrefixSummary {
    fn from(p: &SimplicialPrefix) -> Self {
        PrefixSummary {
            order: p.order.clone(),
            remainder: p.remainder.to_vec(),
        }
    }
}
