//! Independent reference implementations used by the integration tests.
//! Everything here is brute force and shares no code with the library.

#![allow(dead_code)]

use hyperlag::RUniformHypergraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// All k-subsets of [n] as sorted vectors, lexicographic.
pub fn subsets(n: u32, k: usize) -> Vec<Vec<u32>> {
    fn go(start: u32, n: u32, k: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in start..=n {
            cur.push(v);
            go(v + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// r-subsets of [n] in colex order: compare the reversed tuples lexicographically.
pub fn colex_list(n: u32, r: usize) -> Vec<Vec<u32>> {
    let mut all = subsets(n, r);
    all.sort_by(|a, b| a.iter().rev().cmp(b.iter().rev()));
    all
}

pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(t, r) / t^r` in floating point.
pub fn complete_value(t: u64, r: u32) -> f64 {
    binomial(t, r as u64) as f64 / (t as f64).powi(r as i32)
}

/// Sum of edge monomials, edges given as label lists.
pub fn monomial_sum(edges: &[Vec<u32>], x: &[f64]) -> f64 {
    edges
        .iter()
        .map(|e| e.iter().map(|&v| x[v as usize - 1]).product::<f64>())
        .sum()
}

pub fn edge_lists(g: &RUniformHypergraph) -> Vec<Vec<u32>> {
    g.edges().map(|e| e.elements().to_vec()).collect()
}

/// Left-compressed via the definition: every coordinatewise-smaller r-set
/// (with a smaller sum) is an edge.
pub fn is_down_set(edges: &[Vec<u32>], r: usize) -> bool {
    let n = edges.iter().flatten().copied().max().unwrap_or(r as u32);
    let set: std::collections::HashSet<&Vec<u32>> = edges.iter().collect();
    let all = subsets(n, r);
    edges.iter().all(|e| {
        all.iter()
            .filter(|d| *d != e && d.iter().zip(e).all(|(a, b)| a <= b))
            .all(|d| set.contains(d))
    })
}

/// Largest clique order of a 2-graph by scanning all vertex subsets.
pub fn max_clique_2graph(n: usize, edges: &[Vec<u32>]) -> usize {
    let mut adj = vec![0u32; n];
    for e in edges {
        let (a, b) = (e[0] as usize - 1, e[1] as usize - 1);
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let mut best = 1;
    for mask in 1u32..(1 << n) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let ok = (0..n)
            .filter(|&v| mask & (1 << v) != 0)
            .all(|v| (mask & !(1 << v)) & !adj[v] == 0);
        if ok {
            best = size;
        }
    }
    best
}

/// Random r-graph on [n], each r-set present with probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, r: usize, n: usize, p: f64) -> RUniformHypergraph {
    let edges: Vec<Vec<u32>> = subsets(n as u32, r)
        .into_iter()
        .filter(|_| rng.random_bool(p))
        .collect();
    RUniformHypergraph::from_edge_lists(r, n, &edges).unwrap()
}

/// Point of the simplex with Exp(1)-distributed coordinates, normalized.
pub fn random_simplex_point(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let raw: Vec<f64> = (0..n).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let sum: f64 = raw.iter().sum();
    raw.into_iter().map(|v| v / sum).collect()
}
