//! How a single vertex can attach to an induced 7-hole or an induced `T0`.

use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::catalog::{self, T0_LABELS};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::oracle::{self, Embedding};

/// Neighborhood of an outside vertex on a 7-hole `x0..x6`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type", content = "index")]
pub enum C7Attachment {
    Anticomplete,
    /// Sees `x(i-1), x(i), x(i+1)`.
    Twin(usize),
    /// Sees `x(i), x(i+1), x(i+4)`.
    YType(usize),
    /// Sees `x(i) .. x(i+4)`.
    ZType(usize),
    Complete,
}

impl C7Attachment {
    /// Hole indices this attachment sees, as a 7-bit mask.
    pub fn mask(self) -> u8 {
        let bits = |idx: &[usize]| idx.iter().fold(0u8, |m, &k| m | 1 << (k % 7));
        match self {
            C7Attachment::Anticomplete => 0,
            C7Attachment::Twin(i) => bits(&[i + 6, i, i + 1]),
            C7Attachment::YType(i) => bits(&[i, i + 1, i + 4]),
            C7Attachment::ZType(i) => bits(&[i, i + 1, i + 2, i + 3, i + 4]),
            C7Attachment::Complete => 0x7f,
        }
    }

    /// Inverse of [`C7Attachment::mask`] over the 23 admissible masks.
    pub fn from_mask(mask: u8) -> Option<Self> {
        let mask = mask & 0x7f;
        let mut all = vec![C7Attachment::Anticomplete, C7Attachment::Complete];
        for i in 0..7 {
            all.extend([C7Attachment::Twin(i), C7Attachment::YType(i), C7Attachment::ZType(i)]);
        }
        all.into_iter().find(|a| a.mask() == mask)
    }
}

/// Position of an outside vertex relative to an induced `T0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "type", content = "label")]
pub enum T0Attachment {
    /// Closed neighborhood on `T` equals `N_T[v]` for `T0` vertex `v`.
    Clone(usize),
    /// Sees everything except `b_i` and `c_i`, `i` in `{2, 3}`.
    AllButPair(usize),
    /// Sees exactly `c2` and `c3`.
    C2C3,
    Empty,
    All,
}

const B2: usize = 4;
const B3: usize = 5;
const C2: usize = 7;
const C3: usize = 8;

fn t0_closed_masks() -> &'static [u16; 9] {
    static MASKS: OnceLock<[u16; 9]> = OnceLock::new();
    MASKS.get_or_init(|| {
        let t = catalog::t0().graph;
        std::array::from_fn(|v| t.closed_neighborhood(v).iter().fold(0u16, |acc, u| acc | 1 << u))
    })
}

impl T0Attachment {
    /// `T0` vertices seen by the attachment, as a 9-bit mask.
    pub fn mask(self) -> u16 {
        match self {
            T0Attachment::Clone(v) => t0_closed_masks()[v],
            T0Attachment::AllButPair(2) => 0x1ff & !(1 << B2 | 1 << C2),
            T0Attachment::AllButPair(_) => 0x1ff & !(1 << B3 | 1 << C3),
            T0Attachment::C2C3 => 1 << C2 | 1 << C3,
            T0Attachment::Empty => 0,
            T0Attachment::All => 0x1ff,
        }
    }

    pub fn from_mask(mask: u16) -> Option<Self> {
        let mask = mask & 0x1ff;
        let mut all: Vec<T0Attachment> = (0..9).map(T0Attachment::Clone).collect();
        all.extend([
            T0Attachment::AllButPair(2),
            T0Attachment::AllButPair(3),
            T0Attachment::C2C3,
            T0Attachment::Empty,
            T0Attachment::All,
        ]);
        all.into_iter().find(|a| a.mask() == mask)
    }
}

/// A vertex whose attachment is not one of the admissible shapes, with
/// an induced forbidden pattern on the anchor plus the vertex when one
/// exists there.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AttachViolation {
    pub vertex: usize,
    /// Anchor vertices (host ids) adjacent to `vertex`.
    pub seen: Vec<usize>,
    pub witness: Option<Embedding>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Classification<T> {
    Attached(T),
    Forbidden(AttachViolation),
}

/// Checks that `hole` induces a 7-cycle in the given cyclic order.
pub fn check_hole(g: &Graph, hole: &[usize; 7]) -> Result<()> {
    check_anchor(g, hole, &catalog::c7().graph).map_err(Error::InvalidHole)
}

/// Checks that `t` (indexed by the `T0` labels) induces `T0`.
pub fn check_t0(g: &Graph, t: &[usize; 9]) -> Result<()> {
    check_anchor(g, t, &catalog::t0().graph).map_err(Error::InvalidEmbedding)
}

fn check_anchor(g: &Graph, anchor: &[usize], pattern: &Graph) -> std::result::Result<(), String> {
    for (i, &u) in anchor.iter().enumerate() {
        if u >= g.n() {
            return Err(format!("vertex {u} out of range"));
        }
        if anchor[..i].contains(&u) {
            return Err(format!("vertex {u} repeated"));
        }
    }
    for i in 0..anchor.len() {
        for j in i + 1..anchor.len() {
            if g.adjacent(anchor[i], anchor[j]) != pattern.adjacent(i, j) {
                return Err(format!("pair ({}, {}) has the wrong adjacency", anchor[i], anchor[j]));
            }
        }
    }
    Ok(())
}

fn anchor_mask(g: &Graph, anchor: &[usize], v: usize) -> u16 {
    anchor
        .iter()
        .enumerate()
        .fold(0u16, |m, (k, &x)| if g.adjacent(v, x) { m | 1 << k } else { m })
}

fn violation(g: &Graph, anchor: &[usize], v: usize, patterns: &[catalog::NamedGraph]) -> AttachViolation {
    let seen: Vec<usize> = anchor.iter().copied().filter(|&x| g.adjacent(v, x)).collect();
    let local = VertexSet::from_iter(g.n(), anchor.iter().copied().chain([v])).expect("anchor in range");
    let (sub, map) = g.induced_subgraph(&local).expect("nonempty");
    let witness = patterns.iter().find_map(|p| {
        oracle::find_induced(&sub, p)
            .ok()
            .flatten()
            .map(|e| Embedding {
                pattern: e.pattern,
                image: e.image.iter().map(|&i| map[i]).collect(),
            })
    });
    AttachViolation { vertex: v, seen, witness }
}

/// Classifies `v` (outside the hole) against the hole `x0..x6`.
pub fn classify_vs_c7(g: &Graph, hole: &[usize; 7], v: usize) -> Result<Classification<C7Attachment>> {
    check_hole(g, hole)?;
    if v >= g.n() || hole.contains(&v) {
        return Err(Error::InvalidArgument(format!("vertex {v} must lie outside the hole")));
    }
    Ok(classify_vs_c7_unchecked(g, hole, v))
}

pub(crate) fn classify_vs_c7_unchecked(g: &Graph, hole: &[usize; 7], v: usize) -> Classification<C7Attachment> {
    match C7Attachment::from_mask(anchor_mask(g, hole, v) as u8) {
        Some(a) => Classification::Attached(a),
        None => Classification::Forbidden(violation(
            g,
            hole,
            v,
            &[catalog::c4(), catalog::c6(), catalog::two_p3(), catalog::p7()],
        )),
    }
}

/// Classifies `x` (outside `t`) against an induced `T0` labeled as in
/// [`T0_LABELS`].
pub fn classify_vs_t0(g: &Graph, t: &[usize; 9], x: usize) -> Result<Classification<T0Attachment>> {
    check_t0(g, t)?;
    if x >= g.n() || t.contains(&x) {
        return Err(Error::InvalidArgument(format!("vertex {x} must lie outside the T0 copy")));
    }
    Ok(classify_vs_t0_unchecked(g, t, x))
}

pub(crate) fn classify_vs_t0_unchecked(g: &Graph, t: &[usize; 9], x: usize) -> Classification<T0Attachment> {
    match T0Attachment::from_mask(anchor_mask(g, t, x)) {
        Some(a) => Classification::Attached(a),
        None => Classification::Forbidden(violation(g, t, x, &[catalog::c4(), catalog::c6(), catalog::two_p3()])),
    }
}

/// Label of a `T0` vertex index.
pub fn t0_label(v: usize) -> &'static str {
    T0_LABELS[v]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{m1, t1};

    #[test]
    fn masks_round_trip() {
        let mut count = 0;
        for m in 0u8..128 {
            if let Some(a) = C7Attachment::from_mask(m) {
                assert_eq!(a.mask(), m);
                count += 1;
            }
        }
        assert_eq!(count, 23);
        let t_count = (0u16..512).filter(|&m| T0Attachment::from_mask(m).is_some()).count();
        assert_eq!(t_count, 14);
    }

    #[test]
    fn y0_of_m1_is_y_type() {
        let m = m1();
        let hole = [0, 1, 2, 3, 4, 5, 6];
        let y0 = m.vertex("y0").unwrap();
        assert_eq!(
            classify_vs_c7(&m.graph, &hole, y0).unwrap(),
            Classification::Attached(C7Attachment::YType(0))
        );
        let z2 = m.vertex("z2").unwrap();
        assert_eq!(
            classify_vs_c7(&m.graph, &hole, z2).unwrap(),
            Classification::Attached(C7Attachment::ZType(2))
        );
    }

    #[test]
    fn isolated_vertex_is_anticomplete() {
        let mut edges: Vec<_> = Graph::cycle(7).unwrap().edges().collect();
        edges.push((7, 8));
        let g = Graph::new(9, &edges).unwrap();
        let hole = [0, 1, 2, 3, 4, 5, 6];
        assert_eq!(
            classify_vs_c7(&g, &hole, 8).unwrap(),
            Classification::Attached(C7Attachment::Anticomplete)
        );
        assert!(classify_vs_c7(&g, &[0, 2, 1, 3, 4, 5, 6], 8).is_err());
    }

    #[test]
    fn f3_is_all_but_pair_three() {
        let t = t1();
        let anchor: [usize; 9] = std::array::from_fn(|i| i);
        assert_eq!(
            classify_vs_t0(&t.graph, &anchor, 9).unwrap(),
            Classification::Attached(T0Attachment::AllButPair(3))
        );
    }

    #[test]
    fn bad_mask_reports_witness() {
        // Pendant on x0: induces a P7 that contains a 2P3.
        let mut edges: Vec<_> = Graph::cycle(7).unwrap().edges().collect();
        edges.push((0, 7));
        let g = Graph::new(8, &edges).unwrap();
        match classify_vs_c7(&g, &[0, 1, 2, 3, 4, 5, 6], 7).unwrap() {
            Classification::Forbidden(v) => {
                assert_eq!(v.seen, vec![0]);
                assert!(v.witness.is_some());
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }
}
