//! Left-compression: down-sets of the descendant order.
//!
//! A hypergraph is left-compressed when every descendant of an edge is again
//! an edge. Because every descendant is reachable through a chain of direct
//! descendants, it suffices to check the direct ones.

use std::collections::BTreeSet;

use crate::hypergraph::RUniformHypergraph;
use crate::rset::RSet;

pub fn is_left_compressed(g: &RUniformHypergraph) -> bool {
    g.edges()
        .all(|e| e.descendants(true).iter().all(|d| g.contains(d)))
}

/// Moves edges down the descendant order until the edge set is a down-set.
///
/// Each round takes the colex-largest edge that has a missing descendant and
/// replaces it by its colex-smallest missing descendant. The coordinate sum of
/// the edge set drops every round, so the loop terminates; the edge count and
/// the vertex count are preserved.
pub fn left_compress(g: &RUniformHypergraph) -> RUniformHypergraph {
    let mut edges: BTreeSet<RSet> = g.edges().cloned().collect();
    while let Some((from, to)) = next_replacement(&edges) {
        edges.remove(&from);
        edges.insert(to);
    }
    RUniformHypergraph::new(g.r(), g.n(), edges)
        .expect("descendants stay inside the vertex set")
}

fn next_replacement(edges: &BTreeSet<RSet>) -> Option<(RSet, RSet)> {
    edges.iter().rev().find_map(|e| {
        e.descendants(false)
            .into_iter()
            .find(|d| !edges.contains(d))
            .map(|d| (e.clone(), d))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::link;

    fn graph(r: usize, n: usize, edges: &[&[u32]]) -> RUniformHypergraph {
        RUniformHypergraph::from_edge_lists(r, n, edges).unwrap()
    }

    fn brute_force_left_compressed(g: &RUniformHypergraph) -> bool {
        g.edges()
            .all(|e| e.descendants(false).iter().all(|d| g.contains(d)))
    }

    #[test]
    fn left_compressed_examples() {
        let c37 = RUniformHypergraph::colex(3, 7).unwrap();
        assert!(brute_force_left_compressed(&c37));
        assert!(is_left_compressed(&c37));
        assert!(!is_left_compressed(&graph(3, 4, &[&[1, 2, 4]])));
        assert!(is_left_compressed(&RUniformHypergraph::complete(5, 3).unwrap()));
        assert!(is_left_compressed(&RUniformHypergraph::empty(3, 5).unwrap()));
    }

    #[test]
    fn compress_examples() {
        let g = left_compress(&graph(3, 4, &[&[1, 2, 4]]));
        assert_eq!(g, graph(3, 4, &[&[1, 2, 3]]));

        let g = left_compress(&graph(3, 4, &[&[1, 3, 4], &[2, 3, 4]]));
        assert_eq!(g, graph(3, 4, &[&[1, 2, 3], &[1, 2, 4]]));
        assert!(is_left_compressed(&g));

        let c = RUniformHypergraph::colex(3, 9).unwrap();
        assert_eq!(left_compress(&c), c);
    }

    #[test]
    fn compressed_iff_difference_links_vanish() {
        for g in [
            RUniformHypergraph::colex(3, 7).unwrap().with_vertex_count(6).unwrap(),
            graph(3, 5, &[&[1, 2, 3], &[1, 2, 5]]),
            graph(3, 5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[1, 2, 5]]),
            graph(4, 6, &[&[1, 2, 3, 4], &[1, 2, 3, 6]]),
        ] {
            let mut all_empty = true;
            for i in 1..=g.n() as u32 {
                for j in i + 1..=g.n() as u32 {
                    all_empty &= link(&g, &[j], false, Some(i)).unwrap().is_empty();
                }
            }
            assert_eq!(all_empty, is_left_compressed(&g), "{g}");
            assert_eq!(brute_force_left_compressed(&g), is_left_compressed(&g));
        }
    }
}
