//! Optimal coloring of graphs in the class: an exact weighted coloring of
//! the twin quotient, fresh colors for the universal vertices, and a
//! greedy pass back over the simplicial prefix.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::recognize::{recognize, RecognitionReport, RejectStage, Rejection, Verdict};

/// Largest quotient [`solve_weighted`] accepts.
pub const WEIGHTED_LIMIT: usize = 12;

/// Failed-state memo entries kept before the table is cleared.
const MEMO_CAP: usize = 1 << 21;

/// A proper coloring with colors `1..=num_colors`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub assignment: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    fn from_assignment(assignment: Vec<usize>) -> Self {
        let mut used: Vec<usize> = assignment.clone();
        used.sort_unstable();
        used.dedup();
        Coloring {
            num_colors: used.len(),
            assignment,
        }
    }
}

/// `color_sets[v]` holds `weights[v]` distinct colors from `1..=num_colors`;
/// adjacent vertices get disjoint sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightedColoring {
    pub num_colors: usize,
    pub color_sets: Vec<Vec<usize>>,
}

/// Exact weighted coloring of a graph on at most twelve vertices.
///
/// Colors are built one independent set at a time. Each step covers the
/// remaining vertex with the largest residual weight using an
/// inclusion-maximal independent set of the vertices still needing
/// colors. The bound `max ceil(w(S) / alpha(S))` over all vertex subsets
/// prunes the search, and residual vectors that failed under a budget are
/// remembered.
pub fn solve_weighted(quotient: &Graph, weights: &[usize]) -> Result<WeightedColoring> {
    let n = quotient.n();
    if n > WEIGHTED_LIMIT {
        return Err(Error::size("weighted coloring", WEIGHTED_LIMIT, n));
    }
    if weights.len() != n {
        return Err(Error::InvalidArgument(format!("expected {n} weights, got {}", weights.len())));
    }
    if let Some(v) = weights.iter().position(|&w| w == 0) {
        return Err(Error::InvalidArgument(format!("weight of vertex {v} is zero")));
    }
    let solver = WeightedSolver::new(quotient);
    let residual: Vec<u32> = weights.iter().map(|&w| w as u32).collect();
    let mut k = solver.lower_bound(&residual);
    let mut memo: HashMap<Vec<u32>, u32> = HashMap::new();
    let mut path = Vec::new();
    loop {
        if solver.search(&residual, k, &mut memo, &mut path) {
            break;
        }
        k += 1;
    }
    let mut color_sets = vec![Vec::new(); n];
    for (c, &set) in path.iter().enumerate() {
        for (v, colors) in color_sets.iter_mut().enumerate() {
            if set >> v & 1 == 1 && colors.len() < weights[v] {
                colors.push(c + 1);
            }
        }
    }
    Ok(WeightedColoring {
        num_colors: path.len(),
        color_sets,
    })
}

struct WeightedSolver {
    n: usize,
    /// Maximal independent sets of the whole graph.
    maximal: Vec<u16>,
    /// Independence number of every vertex subset.
    alpha: Vec<u8>,
}

impl WeightedSolver {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj: Vec<u16> = (0..n)
            .map(|v| g.neighbors(v).iter().fold(0u16, |m, u| m | 1 << u))
            .collect();
        let size = 1usize << n;
        let mut alpha = vec![0u8; size];
        for m in 1..size {
            let v = m.trailing_zeros() as usize;
            let without = alpha[m & (m - 1)];
            let with = 1 + alpha[m & !(adj[v] as usize) & !(1 << v)];
            alpha[m] = without.max(with);
        }
        let full = (size - 1) as u16;
        let mut maximal = Vec::new();
        for m in 0..size as u16 {
            let independent = (0..n).all(|v| m >> v & 1 == 0 || adj[v] & m == 0);
            if !independent {
                continue;
            }
            let blocked = (0..n).fold(m, |acc, v| if m >> v & 1 == 1 { acc | adj[v] } else { acc });
            if blocked == full {
                maximal.push(m);
            }
        }
        WeightedSolver { n, maximal, alpha }
    }

    fn lower_bound(&self, r: &[u32]) -> usize {
        let size = 1usize << self.n;
        let mut sums = vec![0u32; size];
        let mut best = 0u32;
        for m in 1..size {
            let v = m.trailing_zeros() as usize;
            sums[m] = sums[m & (m - 1)] + r[v];
            let a = self.alpha[m] as u32;
            best = best.max(sums[m].div_ceil(a));
        }
        best as usize
    }

    fn search(&self, r: &[u32], budget: usize, memo: &mut HashMap<Vec<u32>, u32>, path: &mut Vec<u16>) -> bool {
        let support = r
            .iter()
            .enumerate()
            .fold(0u16, |m, (v, &w)| if w > 0 { m | 1 << v } else { m });
        if support == 0 {
            return true;
        }
        if self.lower_bound(r) > budget {
            return false;
        }
        if memo.get(r).is_some_and(|&b| b as usize >= budget) {
            return false;
        }
        let pivot = (0..self.n)
            .filter(|&v| r[v] > 0)
            .max_by_key(|&v| (r[v], std::cmp::Reverse(v)))
            .expect("support is nonempty");
        let mut options: Vec<u16> = self
            .maximal
            .iter()
            .filter(|&&s| s >> pivot & 1 == 1)
            .map(|&s| s & support)
            .collect();
        options.sort_unstable_by_key(|&s| (std::cmp::Reverse(s.count_ones()), s));
        options.dedup();
        let options: Vec<u16> = options
            .iter()
            .enumerate()
            .filter(|&(i, &s)| !options[..i].iter().any(|&t| t != s && t & s == s))
            .map(|(_, &s)| s)
            .collect();
        for s in options {
            let next: Vec<u32> = r
                .iter()
                .enumerate()
                .map(|(v, &w)| if s >> v & 1 == 1 { w - 1 } else { w })
                .collect();
            path.push(s);
            if self.search(&next, budget - 1, memo, path) {
                return true;
            }
            path.pop();
        }
        if memo.len() >= MEMO_CAP {
            memo.clear();
        }
        let entry = memo.entry(r.to_vec()).or_insert(0);
        *entry = (*entry).max(budget as u32);
        false
    }
}

/// Colors `order` greedily with the smallest color unused by already
/// colored neighbors. Entries of `assignment` that are nonzero are kept.
pub fn greedy_extend(g: &Graph, order: impl IntoIterator<Item = usize>, assignment: &mut [usize]) {
    for v in order {
        let mut taken: Vec<usize> = g.neighbors(v).iter().map(|u| assignment[u]).filter(|&c| c > 0).collect();
        taken.sort_unstable();
        taken.dedup();
        let mut c = 1;
        for t in taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        assignment[v] = c;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ColorOutcome {
    Colored(Coloring),
    NotInClass(Rejection),
}

/// Optimal coloring of a graph in the class, or of a chordal graph; any
/// other input is refused.
pub fn color_in_class(g: &Graph) -> Result<ColorOutcome> {
    color_with_report(g, &recognize(g))
}

/// As [`color_in_class`], reusing an existing recognition report.
pub fn color_with_report(g: &Graph, report: &RecognitionReport) -> Result<ColorOutcome> {
    let d = &report.decomposition;
    let mut assignment = vec![0usize; g.n()];
    match &report.verdict {
        Verdict::NotInClass(rej) if rej.stage == RejectStage::Chordal => {}
        Verdict::NotInClass(rej) => return Ok(ColorOutcome::NotInClass(rej.clone())),
        _ => {
            let reps = d.reps();
            let (quotient, _) = g.induced_subgraph(&VertexSet::from_iter(g.n(), reps.iter().copied())?)?;
            // induced_subgraph sorts by id; reps are increasing since
            // classes are ordered by smallest member.
            let weights: Vec<usize> = d.classes.iter().map(Vec::len).collect();
            let solved = solve_weighted(&quotient, &weights)?;
            for (class, colors) in d.classes.iter().zip(&solved.color_sets) {
                for (&v, &c) in class.iter().zip(colors) {
                    assignment[v] = c;
                }
            }
            for (k, &w) in d.universals.iter().enumerate() {
                assignment[w] = solved.num_colors + k + 1;
            }
        }
    }
    greedy_extend(g, d.prefix.iter().rev().copied(), &mut assignment);
    Ok(ColorOutcome::Colored(Coloring::from_assignment(assignment)))
}

/// True iff `c` is proper. A partial assignment is an error.
pub fn verify_coloring(g: &Graph, c: &Coloring) -> Result<bool> {
    if c.assignment.len() != g.n() {
        return Err(Error::InvalidArgument(format!(
            "coloring covers {} of {} vertices",
            c.assignment.len(),
            g.n()
        )));
    }
    if let Some(v) = c.assignment.iter().position(|&x| x == 0) {
        return Err(Error::InvalidArgument(format!("vertex {v} is uncolored")));
    }
    Ok(g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::t0;
    use crate::decompose::expand_thickening;
    use crate::oracle::chromatic_number_bf;

    #[test]
    fn weighted_small_cases() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(solve_weighted(&k3, &[1, 1, 1]).unwrap().num_colors, 3);
        let c7 = Graph::cycle(7).unwrap();
        assert_eq!(solve_weighted(&c7, &[1; 7]).unwrap().num_colors, 3);
    }

    #[test]
    fn weighted_c7_doubled_matches_blow_up() {
        let c7 = Graph::cycle(7).unwrap();
        let solved = solve_weighted(&c7, &[2; 7]).unwrap();
        let (blown, _) = expand_thickening(&c7, &[2; 7]).unwrap();
        assert_eq!(solved.num_colors, chromatic_number_bf(&blown).unwrap().0);
        for (u, v) in c7.edges() {
            assert!(solved.color_sets[u].iter().all(|c| !solved.color_sets[v].contains(c)));
        }
    }

    #[test]
    fn weighted_rejects_bad_input() {
        assert!(solve_weighted(&Graph::empty(13).unwrap(), &[1; 13]).is_err());
        assert!(solve_weighted(&Graph::complete(2).unwrap(), &[1, 0]).is_err());
    }

    #[test]
    fn complete_graphs_need_n_colors() {
        for n in 1..6 {
            let ColorOutcome::Colored(c) = color_in_class(&Graph::complete(n).unwrap()).unwrap() else {
                panic!("complete graphs are chordal");
            };
            assert_eq!(c.num_colors, n);
        }
    }

    #[test]
    fn t0_matches_oracle() {
        let g = t0().graph;
        let ColorOutcome::Colored(c) = color_in_class(&g).unwrap() else {
            panic!("T0 is in class");
        };
        assert!(verify_coloring(&g, &c).unwrap());
        assert_eq!(c.num_colors, chromatic_number_bf(&g).unwrap().0);
    }

    #[test]
    fn verify_examples() {
        let c7 = Graph::cycle(7).unwrap();
        let proper = Coloring::from_assignment(vec![1, 2, 1, 2, 1, 2, 3]);
        assert!(verify_coloring(&c7, &proper).unwrap());
        let k2 = Graph::complete(2).unwrap();
        assert!(!verify_coloring(&k2, &Coloring::from_assignment(vec![1, 1])).unwrap());
        assert!(verify_coloring(&k2, &Coloring::from_assignment(vec![1])).is_err());
    }
}
