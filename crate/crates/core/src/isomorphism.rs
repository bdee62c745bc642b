//! Isomorphism of colored graphs (and so of hypermaps): a vertex bijection
//! commuting with every color matching.
//!
//! On a connected graph the matchings generate a transitive group, so the
//! image of one vertex determines the whole bijection. Candidates are found
//! by propagating along color edges from a base vertex.

use std::collections::VecDeque;

use crate::colored::ColoredGraph;
use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A vertex bijection `phi` (1-based, `phi[x - 1]` is the image of `x`) with
/// `phi(m1_c(x)) = m2_c(phi(x))` for every color `c`, or `None`.
pub fn are_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph) -> Result<Option<Permutation>> {
    if g1.n_colors() != g2.n_colors() {
        return Err(Error::BadDimension {
            expected: g1.dimension(),
            found: g2.dimension(),
        });
    }
    if g1.n_vertices() != g2.n_vertices() {
        return Ok(None);
    }
    let n = g1.n_vertices();
    let comps1 = g1.components();
    let comps2 = g2.components();
    if comps1.len() != comps2.len() {
        return Ok(None);
    }
    let mut phi = vec![0usize; n + 1];
    let mut used_component = vec![false; comps2.len()];
    for c1 in &comps1 {
        let base = c1[0];
        let mut found = false;
        for (k, c2) in comps2.iter().enumerate() {
            if used_component[k] || c2.len() != c1.len() {
                continue;
            }
            for &candidate in c2 {
                if let Some(map) = propagate(g1, g2, base, candidate) {
                    for (x, y) in map {
                        phi[x] = y;
                    }
                    used_component[k] = true;
                    found = true;
                    break;
                }
            }
            if found {
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    let perm = Permutation::from_images(phi[1..].to_vec())
        .expect("component bijections assemble to a permutation");
    debug_assert!(commutes(g1, g2, &perm));
    Ok(Some(perm))
}

/// Extends `base -> candidate` along color edges. Returns the pairs of the
/// resulting bijection between the two components, or `None` on conflict.
fn propagate(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    base: usize,
    candidate: usize,
) -> Option<Vec<(usize, usize)>> {
    let n = g1.n_vertices();
    let mut fwd = vec![0usize; n + 1];
    let mut back = vec![0usize; n + 1];
    let mut pairs = Vec::new();
    let mut queue = VecDeque::new();
    fwd[base] = candidate;
    back[candidate] = base;
    pairs.push((base, candidate));
    queue.push_back(base);
    while let Some(x) = queue.pop_front() {
        let y = fwd[x];
        for c in 0..g1.n_colors() {
            let x2 = g1.matching(c).apply(x);
            let y2 = g2.matching(c).apply(y);
            match (fwd[x2], back[y2]) {
                (0, 0) => {
                    fwd[x2] = y2;
                    back[y2] = x2;
                    pairs.push((x2, y2));
                    queue.push_back(x2);
                }
                (a, b) if a == y2 && b == x2 => {}
                _ => return None,
            }
        }
    }
    Some(pairs)
}

/// Checks `phi m1_c = m2_c phi` for every color.
pub fn commutes(g1: &ColoredGraph, g2: &ColoredGraph, phi: &Permutation) -> bool {
    g1.n_colors() == g2.n_colors()
        && (0..g1.n_colors()).all(|c| {
            (1..=g1.n_vertices())
                .all(|x| phi.apply(g1.matching(c).apply(x)) == g2.matching(c).apply(phi.apply(x)))
        })
}

/// A relabeled copy of a graph that depends only on its isomorphism class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub graph: ColoredGraph,
    /// Maps the original labels to canonical ones.
    pub relabeling: Permutation,
}

/// Breadth-first labeling from `base`: visit colors in order, number vertices
/// as they are discovered. Returns the labeling (old -> new offset from 0)
/// and the code (each matching read in the new labels).
fn bfs_code(g: &ColoredGraph, base: usize) -> (Vec<(usize, usize)>, Vec<usize>) {
    let n = g.n_vertices();
    let mut label = vec![usize::MAX; n + 1];
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    label[base] = 0;
    order.push(base);
    queue.push_back(base);
    while let Some(x) = queue.pop_front() {
        for c in 0..g.n_colors() {
            let y = g.matching(c).apply(x);
            if label[y] == usize::MAX {
                label[y] = order.len();
                order.push(y);
                queue.push_back(y);
            }
        }
    }
    let mut code = Vec::with_capacity(order.len() * g.n_colors());
    for &x in &order {
        for c in 0..g.n_colors() {
            code.push(label[g.matching(c).apply(x)]);
        }
    }
    let mapping = order.iter().enumerate().map(|(k, &x)| (x, k)).collect();
    (mapping, code)
}

/// Component size, its smallest code, and the labeling achieving it.
type Block = (usize, Vec<usize>, Vec<(usize, usize)>);

/// Canonical relabeling: each component is labeled from the base vertex
/// whose breadth-first code is lexicographically smallest; components are
/// then ordered by (size, code).
pub fn canonical_form(g: &ColoredGraph) -> CanonicalForm {
    let mut blocks: Vec<Block> = g
        .components()
        .into_iter()
        .map(|comp| {
            let (mapping, code) = comp
                .iter()
                .map(|&b| bfs_code(g, b))
                .min_by(|a, b| a.1.cmp(&b.1))
                .expect("components are nonempty");
            (comp.len(), code, mapping)
        })
        .collect();
    blocks.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    let mut images = vec![0usize; g.n_vertices()];
    let mut offset = 0;
    for (size, _, mapping) in &blocks {
        for &(x, k) in mapping {
            images[x - 1] = offset + k + 1;
        }
        offset += size;
    }
    let relabeling = Permutation::from_images(images).expect("labels cover every vertex once");
    let graph = g.relabel(&relabeling).expect("same degree");
    CanonicalForm { graph, relabeling }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::model::CellType;

    fn g(hm: crate::tau::FlagHypermap) -> ColoredGraph {
        ColoredGraph::from(hm)
    }

    /// Exhaustive oracle over all n! bijections.
    fn brute_force_isomorphic(g1: &ColoredGraph, g2: &ColoredGraph) -> bool {
        fn rec(
            g1: &ColoredGraph,
            g2: &ColoredGraph,
            images: &mut Vec<usize>,
            used: &mut Vec<bool>,
        ) -> bool {
            let n = g1.n_vertices();
            if images.len() == n {
                let phi = Permutation::from_images(images.clone()).unwrap();
                return commutes(g1, g2, &phi);
            }
            for y in 1..=n {
                if !used[y] {
                    used[y] = true;
                    images.push(y);
                    if rec(g1, g2, images, used) {
                        return true;
                    }
                    images.pop();
                    used[y] = false;
                }
            }
            false
        }
        g1.n_vertices() == g2.n_vertices()
            && rec(
                g1,
                g2,
                &mut Vec::new(),
                &mut vec![false; g1.n_vertices() + 1],
            )
    }

    #[test]
    fn hm1_face_dual_is_isomorphic() {
        let hm1 = fixtures::hm1();
        let phi = are_isomorphic(&g(hm1.clone()), &g(hm1.total_dual(CellType::Face)))
            .unwrap()
            .unwrap();
        assert!(commutes(
            &g(hm1.clone()),
            &g(hm1.total_dual(CellType::Face)),
            &phi
        ));
    }

    #[test]
    fn self_isomorphism() {
        for hm in fixtures::all_tau() {
            assert!(are_isomorphic(&g(hm.clone()), &g(hm)).unwrap().is_some());
        }
    }

    #[test]
    fn hm0_vs_hm1_agrees_with_brute_force() {
        let (a, b) = (g(fixtures::hm0()), g(fixtures::hm1()));
        assert!(!brute_force_isomorphic(&a, &b));
        assert_eq!(are_isomorphic(&a, &b).unwrap(), None);
        let hm1 = fixtures::hm1();
        let (c, d) = (g(hm1.clone()), g(hm1.total_dual(CellType::Face)));
        assert!(brute_force_isomorphic(&c, &d));
    }

    #[test]
    fn dimension_mismatch() {
        let two =
            ColoredGraph::from_edges(2, 4, &[(1, 2, 0), (1, 2, 1), (1, 2, 2), (1, 2, 3)]).unwrap();
        assert!(matches!(
            are_isomorphic(&g(fixtures::hm1()), &two),
            Err(Error::BadDimension { .. })
        ));
    }

    #[test]
    fn disconnected_graphs_match_componentwise() {
        let a = fixtures::hm1().disjoint_union(&fixtures::hm0());
        let b = fixtures::hm0().disjoint_union(&fixtures::hm1());
        assert!(are_isomorphic(&g(a.clone()), &g(b)).unwrap().is_some());
        let c = fixtures::hm1().disjoint_union(&fixtures::hm1());
        assert!(are_isomorphic(&g(a), &g(c)).unwrap().is_none());
    }

    #[test]
    fn canonical_form_is_invariant() {
        let base = g(fixtures::m1());
        let canon = canonical_form(&base);
        assert_eq!(canonical_form(&canon.graph).graph, canon.graph);
        let shuffle = Permutation::parse("(1 7 3 12)(2 9)(4 11 5)", 12).unwrap();
        let moved = base.relabel(&shuffle).unwrap();
        assert_eq!(canonical_form(&moved).graph, canon.graph);
        assert_ne!(
            canonical_form(&g(fixtures::hm0())).graph,
            canonical_form(&g(fixtures::hm1())).graph
        );
    }
}
