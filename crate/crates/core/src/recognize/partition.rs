//! Certificate types (special, 7-saucer and tent partitions) and verifiers
//! that check them clause by clause against the graph.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// One failed clause of a partition definition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    /// Short clause tag, e.g. `"b"` or `"tent-y-order"`.
    pub clause: String,
    pub detail: String,
    /// A vertex pair exhibiting the failure, when one exists.
    pub witness: Option<(usize, usize)>,
}

impl Violation {
    fn new(clause: &str, detail: String, witness: Option<(usize, usize)>) -> Self {
        Violation {
            clause: clause.to_string(),
            detail,
            witness,
        }
    }
}

/// Cliques `X0..X6`, `Y0..Y6`, `Z0..Z6` and `W`, indices mod 7.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecialPartition {
    pub x: [Vec<usize>; 7],
    pub y: [Vec<usize>; 7],
    pub z: [Vec<usize>; 7],
    pub w: Vec<usize>,
}

impl SpecialPartition {
    pub fn y_all(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.y.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    pub fn z_all(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.z.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    fn named_sets(&self) -> Vec<(String, &Vec<usize>)> {
        let mut out = Vec::with_capacity(22);
        for (tag, sets) in [("X", &self.x), ("Y", &self.y), ("Z", &self.z)] {
            for (i, s) in sets.iter().enumerate() {
                out.push((format!("{tag}{i}"), s));
            }
        }
        out.push(("W".to_string(), &self.w));
        out
    }

    pub fn vertex_count(&self) -> usize {
        self.named_sets().iter().map(|(_, s)| s.len()).sum()
    }
}

/// A special partition of `G \ A` plus the pendant part `A`, split into
/// clique components each listed in order of shrinking closed
/// neighborhood.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SaucerPartition {
    pub special: SpecialPartition,
    pub a: Vec<usize>,
    pub a_components: Vec<Vec<usize>>,
}

/// The fourteen sets of a tent, with `Y` and the `Z` components listed in
/// order of shrinking closed neighborhood.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct TentPartition {
    pub a0: Vec<usize>,
    pub a1: Vec<usize>,
    pub b0: Vec<usize>,
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
    pub b3: Vec<usize>,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
    pub c3: Vec<usize>,
    pub f2: Vec<usize>,
    pub f3: Vec<usize>,
    pub w: Vec<usize>,
    pub y: Vec<usize>,
    pub z_components: Vec<Vec<usize>>,
}

impl TentPartition {
    pub fn z_all(&self) -> Vec<usize> {
        let mut out: Vec<usize> = self.z_components.iter().flatten().copied().collect();
        out.sort_unstable();
        out
    }

    /// The nine sets that must be nonempty, in `T0` label order.
    pub fn core(&self) -> [&Vec<usize>; 9] {
        [
            &self.a0, &self.a1, &self.b0, &self.b1, &self.b2, &self.b3, &self.c1, &self.c2, &self.c3,
        ]
    }

    fn named_sets(&self) -> Vec<(&'static str, Vec<usize>)> {
        vec![
            ("A0", self.a0.clone()),
            ("A1", self.a1.clone()),
            ("B0", self.b0.clone()),
            ("B1", self.b1.clone()),
            ("B2", self.b2.clone()),
            ("B3", self.b3.clone()),
            ("C1", self.c1.clone()),
            ("C2", self.c2.clone()),
            ("C3", self.c3.clone()),
            ("F2", self.f2.clone()),
            ("F3", self.f3.clone()),
            ("W", self.w.clone()),
            ("Y", self.y.clone()),
            ("Z", self.z_all()),
        ]
    }
}

fn to_set(g: &Graph, members: &[usize]) -> Result<VertexSet> {
    VertexSet::from_iter(g.n(), members.iter().copied())
}

/// Checks that the named sets are disjoint and cover exactly `universe`.
fn check_partition<'a>(
    g: &Graph,
    sets: impl IntoIterator<Item = (String, &'a [usize])>,
    universe: &VertexSet,
) -> Result<()> {
    let mut owner: Vec<Option<String>> = vec![None; g.n()];
    for (name, members) in sets {
        for &v in members {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if !universe.contains(v) {
                return Err(Error::NotAPartition(format!("vertex {v} in {name} lies outside the partitioned set")));
            }
            if let Some(prev) = &owner[v] {
                return Err(Error::NotAPartition(format!("vertex {v} lies in both {prev} and {name}")));
            }
            owner[v] = Some(name.clone());
        }
    }
    if let Some(v) = universe.iter().find(|&v| owner[v].is_none()) {
        return Err(Error::NotAPartition(format!("vertex {v} is not covered")));
    }
    Ok(())
}

/// Collects violations while checking pairwise relations.
struct Checker<'g> {
    g: &'g Graph,
    out: Vec<Violation>,
}

impl<'g> Checker<'g> {
    fn clique(&mut self, clause: &str, name: &str, s: &VertexSet) {
        if let Some(pair) = self.g.find_non_edge_in(s) {
            self.out.push(Violation::new(clause, format!("{name} is not a clique"), Some(pair)));
        }
    }

    fn complete(&mut self, clause: &str, a_name: &str, a: &VertexSet, b_name: &str, b: &VertexSet) {
        if let Some(pair) = self.g.find_non_edge_between(a, b) {
            self.out.push(Violation::new(
                clause,
                format!("{a_name} is not complete to {b_name}"),
                Some(pair),
            ));
        }
    }

    fn anticomplete(&mut self, clause: &str, a_name: &str, a: &VertexSet, b_name: &str, b: &VertexSet) {
        if let Some(pair) = self.g.find_edge_between(a, b) {
            self.out.push(Violation::new(
                clause,
                format!("{a_name} is not anticomplete to {b_name}"),
                Some(pair),
            ));
        }
    }

    fn fail(&mut self, clause: &str, detail: String) {
        self.out.push(Violation::new(clause, detail, None));
    }

    /// `order` must be a clique listed so that closed neighborhoods shrink.
    fn nested(&mut self, clause: &str, name: &str, order: &[usize]) {
        for pair in order.windows(2) {
            let later = self.g.closed_neighborhood(pair[1]);
            let earlier = self.g.closed_neighborhood(pair[0]);
            if !later.is_subset(&earlier) {
                let outside = later.difference(&earlier).first();
                self.out.push(Violation::new(
                    clause,
                    format!(
                        "{name}: N[{}] is not contained in N[{}]",
                        pair[1], pair[0]
                    ),
                    outside.map(|o| (pair[0], o)),
                ));
            }
        }
    }

    /// Components must be cliques, pairwise anticomplete, and nested.
    fn clique_components(&mut self, clause: &str, name: &str, comps: &[Vec<usize>]) -> Result<()> {
        let sets: Vec<VertexSet> = comps.iter().map(|c| to_set(self.g, c)).collect::<Result<_>>()?;
        for (k, (c, s)) in comps.iter().zip(&sets).enumerate() {
            if c.is_empty() {
                self.fail(clause, format!("{name} component {k} is empty"));
            }
            self.clique(clause, &format!("{name} component {k}"), s);
            self.nested(clause, &format!("{name} component {k}"), c);
            for (l, t) in sets.iter().enumerate().skip(k + 1) {
                self.anticomplete(
                    clause,
                    &format!("{name} component {k}"),
                    s,
                    &format!("{name} component {l}"),
                    t,
                );
            }
        }
        Ok(())
    }
}

fn idx(i: usize, k: usize) -> usize {
    (i + k) % 7
}

/// Checks every clause of the special-partition definition. The sets must
/// partition `V(G)`.
pub fn verify_special_partition(g: &Graph, p: &SpecialPartition) -> Result<Vec<Violation>> {
    verify_special_within(g, p, &g.vertices())
}

/// As [`verify_special_partition`], for a partition of `universe` only.
pub(crate) fn verify_special_within(g: &Graph, p: &SpecialPartition, universe: &VertexSet) -> Result<Vec<Violation>> {
    let named = p.named_sets();
    check_partition(g, named.iter().map(|(n, s)| (n.clone(), s.as_slice())), universe)?;
    let to = |s: &Vec<usize>| to_set(g, s);
    let x: Vec<VertexSet> = p.x.iter().map(to).collect::<Result<_>>()?;
    let y: Vec<VertexSet> = p.y.iter().map(to).collect::<Result<_>>()?;
    let z: Vec<VertexSet> = p.z.iter().map(to).collect::<Result<_>>()?;
    let w = to(&p.w)?;
    let mut ck = Checker { g, out: Vec::new() };

    for (name, s) in &named {
        ck.clique("cliques", name, &to(s)?);
    }
    for (i, xi) in x.iter().enumerate() {
        if xi.is_empty() {
            ck.fail("a", format!("X{i} is empty"));
        }
    }
    for i in 0..7 {
        let xi = format!("X{i}");
        ck.complete("b", &xi, &x[i], &format!("X{}", idx(i, 1)), &x[idx(i, 1)]);
        for k in [2, 3] {
            ck.anticomplete("b", &xi, &x[i], &format!("X{}", idx(i, k)), &x[idx(i, k)]);
        }
        for k in [0, 3, 6] {
            ck.complete("c", &xi, &x[i], &format!("Y{}", idx(i, k)), &y[idx(i, k)]);
        }
        for k in [0, 3, 4, 5, 6] {
            ck.complete("c", &xi, &x[i], &format!("Z{}", idx(i, k)), &z[idx(i, k)]);
        }
        ck.complete("c", &xi, &x[i], "W", &w);
        for k in [1, 2, 4, 5] {
            ck.anticomplete("c", &xi, &x[i], &format!("Y{}", idx(i, k)), &y[idx(i, k)]);
        }
        for k in [1, 2] {
            ck.anticomplete("c", &xi, &x[i], &format!("Z{}", idx(i, k)), &z[idx(i, k)]);
        }
    }
    for i in 0..7 {
        if !y[i].is_empty() {
            for k in [1, 2, 5, 6] {
                if !y[idx(i, k)].is_empty() {
                    ck.fail("d", format!("Y{i} and Y{} are both nonempty", idx(i, k)));
                }
            }
            for k in [5, 6] {
                if !z[idx(i, k)].is_empty() {
                    ck.fail("d", format!("Y{i} and Z{} are both nonempty", idx(i, k)));
                }
            }
            if !y[idx(i, 3)].is_empty() && !y[idx(i, 4)].is_empty() {
                ck.fail(
                    "d",
                    format!("Y{i} is nonempty and both Y{} and Y{} are nonempty", idx(i, 3), idx(i, 4)),
                );
            }
        }
        if !z[i].is_empty() {
            for k in [2, 5] {
                if !z[idx(i, k)].is_empty() {
                    ck.fail("e", format!("Z{i} and Z{} are both nonempty", idx(i, k)));
                }
            }
        }
    }
    for i in 0..7 {
        let yi = format!("Y{i}");
        for k in [3, 4] {
            ck.complete("f", &yi, &y[i], &format!("Y{}", idx(i, k)), &y[idx(i, k)]);
        }
        for k in [0, 1, 3, 4] {
            ck.complete("f", &yi, &y[i], &format!("Z{}", idx(i, k)), &z[idx(i, k)]);
        }
        ck.complete("f", &yi, &y[i], "W", &w);
        ck.anticomplete("f", &yi, &y[i], &format!("Z{}", idx(i, 2)), &z[idx(i, 2)]);
        let zi = format!("Z{i}");
        for k in [1, 3, 4, 6] {
            ck.complete("g", &zi, &z[i], &format!("Z{}", idx(i, k)), &z[idx(i, k)]);
        }
        ck.complete("g", &zi, &z[i], "W", &w);
    }
    Ok(ck.out)
}

/// Checks the 7-saucer definition. The sets (including `A`) must
/// partition `V(G)`; the components of `A` must partition `A`.
pub fn verify_saucer_partition(g: &Graph, p: &SaucerPartition) -> Result<Vec<Violation>> {
    let a = to_set(g, &p.a)?;
    let core = g.vertices().difference(&a);
    let mut comp_members: Vec<usize> = p.a_components.iter().flatten().copied().collect();
    comp_members.sort_unstable();
    let mut a_sorted = p.a.clone();
    a_sorted.sort_unstable();
    if comp_members != a_sorted {
        return Err(Error::NotAPartition("A components do not partition A".into()));
    }
    if p.a.len() != a.len() {
        return Err(Error::NotAPartition("A lists a vertex twice".into()));
    }
    let mut out = verify_special_within(g, &p.special, &core)?;
    let mut ck = Checker { g, out: Vec::new() };
    for (i, xi) in p.special.x.iter().enumerate() {
        ck.anticomplete("saucer-a-x", "A", &a, &format!("X{i}"), &to_set(g, xi)?);
    }
    for i in 0..7 {
        let yi = to_set(g, &p.special.y[i])?;
        if !p.special.z[idx(i, 2)].is_empty() {
            if let Some(pair) = g.find_edge_between(&a, &yi) {
                ck.out.push(Violation::new(
                    "saucer-a-y",
                    format!("A has an edge to Y{i} while Z{} is nonempty", idx(i, 2)),
                    Some(pair),
                ));
            }
        }
    }
    ck.clique_components("saucer-a-components", "A", &p.a_components)?;
    out.extend(ck.out);
    Ok(out)
}

/// Checks every bullet of the tent definition. The fourteen sets must
/// partition `V(G)`.
pub fn verify_tent_partition(g: &Graph, p: &TentPartition) -> Result<Vec<Violation>> {
    let named = p.named_sets();
    check_partition(
        g,
        named.iter().map(|(n, s)| (n.to_string(), s.as_slice())),
        &g.vertices(),
    )?;
    let set = |s: &Vec<usize>| to_set(g, s);
    let [a0, a1, b0, b1, b2, b3, c1, c2, c3] = [
        set(&p.a0)?,
        set(&p.a1)?,
        set(&p.b0)?,
        set(&p.b1)?,
        set(&p.b2)?,
        set(&p.b3)?,
        set(&p.c1)?,
        set(&p.c2)?,
        set(&p.c3)?,
    ];
    let (f2, f3, w, y, z) = (set(&p.f2)?, set(&p.f3)?, set(&p.w)?, set(&p.y)?, set(&p.z_all())?);
    let mut ck = Checker { g, out: Vec::new() };

    let core: [(&str, &VertexSet); 9] = [
        ("A0", &a0),
        ("A1", &a1),
        ("B0", &b0),
        ("B1", &b1),
        ("B2", &b2),
        ("B3", &b3),
        ("C1", &c1),
        ("C2", &c2),
        ("C3", &c3),
    ];
    for (name, s) in core {
        if s.is_empty() {
            ck.fail("tent-core", format!("{name} is empty"));
        }
        ck.clique("tent-core", name, s);
    }
    for (name, s) in [("F2", &f2), ("F3", &f3), ("Y", &y), ("W", &w)] {
        ck.clique("tent-cliques", name, s);
    }
    let optional = [("F2", &f2), ("F3", &f3), ("Y", &y)];
    let nonempty: Vec<&str> = optional.iter().filter(|(_, s)| !s.is_empty()).map(|(n, _)| *n).collect();
    if nonempty.len() > 1 {
        ck.fail("tent-at-most-one", format!("{} are all nonempty", nonempty.join(", ")));
    }

    type Rule<'a> = (&'a str, &'a str, &'a VertexSet, &'a [(&'a str, &'a VertexSet)], &'a [(&'a str, &'a VertexSet)]);
    let rules: [Rule; 11] = [
        ("tent-a0a1", "A0", &a0, &[("A1", &a1)], &[]),
        (
            "tent-a0",
            "A0",
            &a0,
            &[("B0", &b0), ("B2", &b2), ("B3", &b3)],
            &[("B1", &b1), ("C1", &c1), ("C2", &c2), ("C3", &c3)],
        ),
        (
            "tent-a1",
            "A1",
            &a1,
            &[("B1", &b1), ("B2", &b2), ("B3", &b3)],
            &[("B0", &b0), ("C1", &c1), ("C2", &c2), ("C3", &c3)],
        ),
        (
            "tent-c1",
            "C1",
            &c1,
            &[("B0", &b0), ("B1", &b1), ("C2", &c2), ("C3", &c3)],
            &[("B2", &b2), ("B3", &b3)],
        ),
        (
            "tent-c2",
            "C2",
            &c2,
            &[("B2", &b2), ("C3", &c3)],
            &[("B0", &b0), ("B1", &b1), ("B3", &b3)],
        ),
        ("tent-c3", "C3", &c3, &[("B3", &b3)], &[("B0", &b0), ("B1", &b1), ("B2", &b2)]),
        (
            "tent-f2",
            "F2",
            &f2,
            &[("A0", &a0), ("A1", &a1), ("B0", &b0), ("B1", &b1), ("B3", &b3), ("C1", &c1), ("C3", &c3)],
            &[("B2", &b2), ("C2", &c2)],
        ),
        (
            "tent-f3",
            "F3",
            &f3,
            &[("A0", &a0), ("A1", &a1), ("B0", &b0), ("B1", &b1), ("B2", &b2), ("C1", &c1), ("C2", &c2)],
            &[("B3", &b3), ("C3", &c3)],
        ),
        (
            "tent-w",
            "W",
            &w,
            &[
                ("A0", &a0),
                ("A1", &a1),
                ("B0", &b0),
                ("B1", &b1),
                ("B2", &b2),
                ("B3", &b3),
                ("C1", &c1),
                ("C2", &c2),
                ("C3", &c3),
                ("F2", &f2),
                ("F3", &f3),
            ],
            &[],
        ),
        (
            "tent-y",
            "Y",
            &y,
            &[("C2", &c2), ("C3", &c3)],
            &[("A0", &a0), ("A1", &a1), ("B0", &b0), ("B1", &b1), ("B2", &b2), ("B3", &b3), ("C1", &c1)],
        ),
        (
            "tent-z",
            "Z",
            &z,
            &[],
            &[
                ("A0", &a0),
                ("A1", &a1),
                ("B0", &b0),
                ("B1", &b1),
                ("B2", &b2),
                ("B3", &b3),
                ("C1", &c1),
                ("C2", &c2),
                ("C3", &c3),
                ("Y", &y),
            ],
        ),
    ];
    for (clause, name, s, complete, anti) in rules {
        for (other, t) in complete {
            ck.complete(clause, name, s, other, t);
        }
        for (other, t) in anti {
            ck.anticomplete(clause, name, s, other, t);
        }
    }
    let bs = [("B0", &b0), ("B1", &b1), ("B2", &b2), ("B3", &b3)];
    for (k, (n1, s1)) in bs.iter().enumerate() {
        for (n2, s2) in &bs[k + 1..] {
            ck.anticomplete("tent-b", n1, s1, n2, s2);
        }
    }
    ck.nested("tent-y-order", "Y", &p.y);
    ck.clique_components("tent-z-components", "Z", &p.z_components)?;
    Ok(ck.out)
}

/// Which outcome of the `Y`/`Z` dichotomy holds, and at which indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct YzDichotomy {
    /// `i` with `Y = Y(i) + Y(i+3)` and `Z = Z(i) + Z(i+3) + Z(i+4)`.
    pub aligned: Vec<usize>,
    /// `i` with `Y = Y(i)`, `Z = Z(i+1) + Z(i+2) + Z(i+3)`, `Y(i)` and
    /// `Z(i+2)` nonempty, and at most one of `Z(i+1)`, `Z(i+3)` nonempty.
    pub split: Vec<usize>,
}

impl YzDichotomy {
    pub fn exactly_one(&self) -> bool {
        self.aligned.is_empty() != self.split.is_empty()
    }
}

/// Evaluates both outcomes of the dichotomy at every index.
pub fn yz_dichotomy(p: &SpecialPartition) -> YzDichotomy {
    let ne = |s: &Vec<usize>| !s.is_empty();
    let only = |sets: &[Vec<usize>; 7], allowed: &[usize]| (0..7).all(|j| allowed.contains(&j) || sets[j].is_empty());
    let mut out = YzDichotomy::default();
    for i in 0..7 {
        if only(&p.y, &[i, idx(i, 3)]) && only(&p.z, &[i, idx(i, 3), idx(i, 4)]) {
            out.aligned.push(i);
        }
        if only(&p.y, &[i])
            && only(&p.z, &[idx(i, 1), idx(i, 2), idx(i, 3)])
            && ne(&p.y[i])
            && ne(&p.z[idx(i, 2)])
            && !(ne(&p.z[idx(i, 1)]) && ne(&p.z[idx(i, 3)]))
        {
            out.split.push(i);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{m0, t0};

    fn c7_partition() -> SpecialPartition {
        SpecialPartition {
            x: std::array::from_fn(|i| vec![i]),
            ..Default::default()
        }
    }

    #[test]
    fn c7_singletons_are_clean() {
        let g = Graph::cycle(7).unwrap();
        assert!(verify_special_partition(&g, &c7_partition()).unwrap().is_empty());
    }

    #[test]
    fn chord_breaks_clause_b() {
        let mut edges: Vec<_> = Graph::cycle(7).unwrap().edges().collect();
        edges.push((0, 2));
        let g = Graph::new(7, &edges).unwrap();
        let v = verify_special_partition(&g, &c7_partition()).unwrap();
        assert!(v.iter().any(|v| v.clause == "b" && v.witness.is_some()));
    }

    #[test]
    fn m0_singletons_are_clean() {
        let m = m0();
        let at = |l: &str| vec![m.vertex(l).unwrap()];
        let mut p = c7_partition();
        p.y[0] = at("y0");
        p.y[3] = at("y3");
        p.z[0] = at("z0");
        p.z[3] = at("z3");
        p.z[4] = at("z4");
        assert!(verify_special_partition(&m.graph, &p).unwrap().is_empty());
        let d = yz_dichotomy(&p);
        assert_eq!(d.aligned, vec![0]);
        assert!(d.exactly_one());
    }

    #[test]
    fn non_partition_is_rejected() {
        let g = Graph::cycle(7).unwrap();
        let mut p = c7_partition();
        p.w = vec![0];
        assert!(matches!(verify_special_partition(&g, &p), Err(Error::NotAPartition(_))));
        p.w.clear();
        p.x[0].clear();
        assert!(matches!(verify_special_partition(&g, &p), Err(Error::NotAPartition(_))));
    }

    fn t0_tent() -> TentPartition {
        TentPartition {
            a0: vec![0],
            a1: vec![1],
            b0: vec![2],
            b1: vec![3],
            b2: vec![4],
            b3: vec![5],
            c1: vec![6],
            c2: vec![7],
            c3: vec![8],
            ..Default::default()
        }
    }

    #[test]
    fn t0_identity_tent_is_clean() {
        assert!(verify_tent_partition(&t0().graph, &t0_tent()).unwrap().is_empty());
    }

    #[test]
    fn tent_with_both_f_sets_fails() {
        // T0 plus one vertex of each F type, adjacent to each other.
        let t = t0().graph;
        let mut edges: Vec<_> = t.edges().collect();
        edges.extend([0, 1, 2, 3, 5, 6, 8].iter().map(|&v| (v, 9)));
        edges.extend([0, 1, 2, 3, 4, 6, 7].iter().map(|&v| (v, 10)));
        edges.push((9, 10));
        let g = Graph::new(11, &edges).unwrap();
        let mut p = t0_tent();
        p.f2 = vec![9];
        p.f3 = vec![10];
        let v = verify_tent_partition(&g, &p).unwrap();
        assert!(v.iter().any(|v| v.clause == "tent-at-most-one"));
    }

    #[test]
    fn tent_y_must_see_c2() {
        let t = t0().graph;
        let mut edges: Vec<_> = t.edges().collect();
        edges.push((8, 9));
        let g = Graph::new(10, &edges).unwrap();
        let mut p = t0_tent();
        p.y = vec![9];
        let v = verify_tent_partition(&g, &p).unwrap();
        assert!(v.iter().any(|v| v.clause == "tent-y" && v.witness == Some((9, 7))));
    }
}
