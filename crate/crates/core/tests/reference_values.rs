//! Values computed once by brute force and frozen here, each rechecked
//! against an independent computation.

use evenhole::catalog::{catalog, m0, t0, t1};
use evenhole::color::{color_in_class, solve_weighted, ColorOutcome};
use evenhole::decompose::expand_thickening;
use evenhole::graph::Graph;
use evenhole::oracle::chromatic_number_bf;

/// Plain backtracking isomorphism test, kept separate from the library's
/// matcher.
fn isomorphic(g: &Graph, h: &Graph) -> bool {
    let n = g.n();
    if n != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut dg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut dh: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
    dg.sort_unstable();
    dh.sort_unstable();
    if dg != dh {
        return false;
    }
    fn go(g: &Graph, h: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let v = map.len();
        if v == g.n() {
            return true;
        }
        for w in 0..h.n() {
            if used[w] || g.degree(v) != h.degree(w) {
                continue;
            }
            if (0..v).all(|u| g.adjacent(u, v) == h.adjacent(map[u], w)) {
                map.push(w);
                used[w] = true;
                if go(g, h, map, used) {
                    return true;
                }
                used[w] = false;
                map.pop();
            }
        }
        false
    }
    go(g, h, &mut Vec::new(), &mut vec![false; n])
}

const HOLE_FAMILY_ENTRIES: usize = 35;
const HOLE_FAMILY_CLASSES: usize = 20;

#[test]
fn hole_family_isomorphism_classes() {
    let cat = catalog();
    assert_eq!(cat.family.len(), HOLE_FAMILY_ENTRIES);
    let mut reps: Vec<&Graph> = Vec::new();
    for entry in &cat.family {
        if !reps.iter().any(|r| isomorphic(r, &entry.graph)) {
            reps.push(&entry.graph);
        }
    }
    assert_eq!(reps.len(), HOLE_FAMILY_CLASSES);
    assert_eq!(cat.family_classes.len(), HOLE_FAMILY_CLASSES);
}

const CHI_T0: usize = 3;
const CHI_T1: usize = 4;
const CHI_M0: usize = 6;

#[test]
fn catalog_chromatic_numbers() {
    for (g, chi) in [(t0().graph, CHI_T0), (t1().graph, CHI_T1), (m0().graph, CHI_M0)] {
        assert_eq!(chromatic_number_bf(&g).unwrap().0, chi);
        let ColorOutcome::Colored(c) = color_in_class(&g).unwrap() else {
            panic!("catalog graphs are in class");
        };
        assert_eq!(c.num_colors, chi);
    }
}

/// Weighted coloring of C7 with every weight 2.
const C7_DOUBLED: usize = 5;

#[test]
fn doubled_c7() {
    let c7 = Graph::cycle(7).unwrap();
    assert_eq!(solve_weighted(&c7, &[2; 7]).unwrap().num_colors, C7_DOUBLED);
    let (blown, _) = expand_thickening(&c7, &[2; 7]).unwrap();
    assert_eq!(chromatic_number_bf(&blown).unwrap().0, C7_DOUBLED);
}
