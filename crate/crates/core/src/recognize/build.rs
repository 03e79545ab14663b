//! Reconstruction of saucer and tent partitions around a given induced
//! 7-hole or `T0`.

use serde::{Deserialize, Serialize};

use super::attach::{
    check_hole, check_t0, classify_vs_c7_unchecked, classify_vs_t0_unchecked, AttachViolation, C7Attachment,
    Classification, T0Attachment,
};
use super::partition::{
    verify_saucer_partition, verify_tent_partition, SaucerPartition, SpecialPartition, TentPartition, Violation,
};
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Why a reconstruction did not produce a valid partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BuildFailure {
    pub reason: String,
    pub attachment: Option<AttachViolation>,
    pub violations: Vec<Violation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Built<P> {
    Partition(P),
    Failed(BuildFailure),
}

/// Orders `members` by shrinking closed neighborhood (ties by id). The
/// verifier checks that the result is actually a chain.
fn nested_order(g: &Graph, members: &[usize]) -> Vec<usize> {
    let mut out = members.to_vec();
    out.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    out
}

/// Components of `G[set]`, each in nested order.
fn ordered_components(g: &Graph, set: &[usize]) -> Vec<Vec<usize>> {
    let s = VertexSet::from_iter(g.n(), set.iter().copied()).expect("ids come from g");
    g.components_within(&s)
        .iter()
        .map(|c| nested_order(g, &c.to_vec()))
        .collect()
}

/// Buckets every vertex by its attachment to `hole` and checks the result
/// against the 7-saucer definition.
pub fn build_saucer_from_hole(g: &Graph, hole: &[usize; 7]) -> Result<Built<SaucerPartition>> {
    check_hole(g, hole)?;
    let mut special = SpecialPartition::default();
    let mut a = Vec::new();
    for (i, &x) in hole.iter().enumerate() {
        special.x[i].push(x);
    }
    for v in 0..g.n() {
        if hole.contains(&v) {
            continue;
        }
        match classify_vs_c7_unchecked(g, hole, v) {
            Classification::Attached(C7Attachment::Anticomplete) => a.push(v),
            Classification::Attached(C7Attachment::Twin(i)) => special.x[i].push(v),
            Classification::Attached(C7Attachment::YType(i)) => special.y[i].push(v),
            Classification::Attached(C7Attachment::ZType(i)) => special.z[i].push(v),
            Classification::Attached(C7Attachment::Complete) => special.w.push(v),
            Classification::Forbidden(violation) => {
                return Ok(Built::Failed(BuildFailure {
                    reason: format!("vertex {v} attaches to the hole in a forbidden way"),
                    attachment: Some(violation),
                    violations: Vec::new(),
                }))
            }
        }
    }
    for s in special.x.iter_mut() {
        s.sort_unstable();
    }
    let a_components = ordered_components(g, &a);
    let p = SaucerPartition {
        special,
        a,
        a_components,
    };
    let violations = verify_saucer_partition(g, &p)?;
    if violations.is_empty() {
        Ok(Built::Partition(p))
    } else {
        Ok(Built::Failed(BuildFailure {
            reason: "the bucketing around the hole is not a 7-saucer partition".into(),
            attachment: None,
            violations,
        }))
    }
}

/// Buckets every vertex by its attachment to the labeled `T0` copy `t`
/// and checks the result against the tent definition.
pub fn build_tent_from_t0(g: &Graph, t: &[usize; 9]) -> Result<Built<TentPartition>> {
    check_t0(g, t)?;
    let mut core: [Vec<usize>; 9] = std::array::from_fn(|k| vec![t[k]]);
    let (mut f2, mut f3, mut w, mut y, mut z) = (Vec::new(), Vec::new(), Vec::new(), Vec::new(), Vec::new());
    for x in 0..g.n() {
        if t.contains(&x) {
            continue;
        }
        match classify_vs_t0_unchecked(g, t, x) {
            Classification::Attached(T0Attachment::Clone(k)) => core[k].push(x),
            Classification::Attached(T0Attachment::AllButPair(2)) => f2.push(x),
            Classification::Attached(T0Attachment::AllButPair(_)) => f3.push(x),
            Classification::Attached(T0Attachment::C2C3) => y.push(x),
            Classification::Attached(T0Attachment::Empty) => z.push(x),
            Classification::Attached(T0Attachment::All) => w.push(x),
            Classification::Forbidden(violation) => {
                return Ok(Built::Failed(BuildFailure {
                    reason: format!("vertex {x} attaches to the T0 copy in a forbidden way"),
                    attachment: Some(violation),
                    violations: Vec::new(),
                }))
            }
        }
    }
    for s in core.iter_mut() {
        s.sort_unstable();
    }
    let [a0, a1, b0, b1, b2, b3, c1, c2, c3] = core;
    let p = TentPartition {
        a0,
        a1,
        b0,
        b1,
        b2,
        b3,
        c1,
        c2,
        c3,
        f2,
        f3,
        w,
        y: nested_order(g, &y),
        z_components: ordered_components(g, &z),
    };
    let violations = verify_tent_partition(g, &p)?;
    if violations.is_empty() {
        Ok(Built::Partition(p))
    } else {
        Ok(Built::Failed(BuildFailure {
            reason: "the bucketing around the T0 copy is not a tent partition".into(),
            attachment: None,
            violations,
        }))
    }
}
