//! Cliques in r-graphs: vertex sets all of whose r-subsets are edges.
//!
//! Searches are exhaustive and meant for desk-scale instances. Left-compressed
//! graphs take a shortcut: if some t-set is a clique then so is `[t]`, because
//! the order-preserving map onto `[t]` only moves edges to their descendants.

use num_integer::binomial;

use crate::compression::is_left_compressed;
use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;
use crate::link::for_each_subset;

/// Vertex count above which exhaustive clique search refuses to run.
pub const DEFAULT_CLIQUE_VERTEX_LIMIT: usize = 20;

/// Order of a largest clique (at least `r - 1`, which every graph trivially has).
pub fn max_clique_order(g: &RUniformHypergraph) -> Result<usize> {
    max_clique_order_within(g, DEFAULT_CLIQUE_VERTEX_LIMIT)
}

pub fn max_clique_order_within(g: &RUniformHypergraph, vertex_limit: usize) -> Result<usize> {
    Ok(max_clique_within(g, vertex_limit)?.len())
}

/// A largest clique, as sorted labels.
pub fn max_clique(g: &RUniformHypergraph) -> Result<Vec<u32>> {
    max_clique_within(g, DEFAULT_CLIQUE_VERTEX_LIMIT)
}

pub fn max_clique_within(g: &RUniformHypergraph, vertex_limit: usize) -> Result<Vec<u32>> {
    if is_left_compressed(g) {
        return Ok((1..=left_compressed_clique_order(g) as u32).collect());
    }
    if g.n() > vertex_limit {
        return Err(Error::ResourceLimit {
            limit: "clique search vertices",
            requested: g.n(),
            allowed: vertex_limit,
        });
    }
    let r = g.r();
    let degrees: Vec<usize> = (1..=g.n() as u32).map(|v| g.degree(v)).collect();
    let mut order: Vec<u32> = (1..=g.n() as u32).collect();
    order.sort_by(|a, b| degrees[*b as usize - 1].cmp(&degrees[*a as usize - 1]).then(a.cmp(b)));

    let mut best: Vec<u32> = (1..r as u32).collect();
    let mut clique = Vec::new();
    search_max(g, &degrees, &mut clique, &order, &mut best);
    best.sort_unstable();
    Ok(best)
}

/// Largest t with `[t]^(r)` inside a left-compressed graph.
fn left_compressed_clique_order(g: &RUniformHypergraph) -> usize {
    let r = g.r() as u32;
    (r..=g.n() as u32)
        .take_while(|&t| g.contains_sorted(&((t - r + 1)..=t).collect::<Vec<_>>()))
        .last()
        .map_or(g.r() - 1, |t| t as usize)
}

fn search_max(
    g: &RUniformHypergraph,
    degrees: &[usize],
    clique: &mut Vec<u32>,
    candidates: &[u32],
    best: &mut Vec<u32>,
) {
    if clique.len() > best.len() {
        *best = clique.clone();
    }
    let r = g.r() as u64;
    for (idx, &v) in candidates.iter().enumerate() {
        if clique.len() + candidates.len() - idx <= best.len() {
            return;
        }
        // a vertex of a clique of order best+1 lies in C(best, r-1) of its edges
        if (degrees[v as usize - 1] as u64) < binomial(best.len() as u64, r - 1) {
            continue;
        }
        clique.push(v);
        let next: Vec<u32> = candidates[idx + 1..]
            .iter()
            .copied()
            .filter(|&u| extends(g, clique, u))
            .collect();
        search_max(g, degrees, clique, &next, best);
        clique.pop();
    }
}

/// Given that `clique` without its last vertex extended by `u` is complete,
/// whether `clique ∪ {u}` is complete: only r-sets through both `u` and the
/// last vertex need checking.
fn extends(g: &RUniformHypergraph, clique: &[u32], u: u32) -> bool {
    let r = g.r();
    let (&last, rest) = clique.split_last().expect("non-empty clique");
    if rest.len() + 2 < r {
        return true;
    }
    let mut ok = true;
    let mut buf = Vec::with_capacity(r);
    for_each_subset(rest, r - 2, &mut Vec::with_capacity(r), &mut |sub| {
        if !ok {
            return;
        }
        buf.clear();
        buf.extend_from_slice(sub);
        buf.push(last);
        buf.push(u);
        buf.sort_unstable();
        ok = g.contains_sorted(&buf);
    });
    ok
}

pub fn is_clique(g: &RUniformHypergraph, vertices: &[u32]) -> bool {
    let mut sorted = vertices.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut ok = true;
    for_each_subset(&sorted, g.r(), &mut Vec::new(), &mut |sub| {
        ok = ok && g.contains_sorted(sub);
    });
    ok
}

/// Maximal cliques of order at least `r`, largest first, then in
/// lexicographic order. At most `limit` are returned and the search visits at
/// most `node_budget` branches.
pub fn maximal_cliques(g: &RUniformHypergraph, limit: usize, node_budget: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    let mut nodes = 0usize;
    let all: Vec<u32> = (1..=g.n() as u32).collect();
    bron_kerbosch(
        g,
        &mut Vec::new(),
        all,
        Vec::new(),
        &mut out,
        &mut nodes,
        node_budget,
        limit,
    );
    out.sort_by(|a: &Vec<u32>, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

#[allow(clippy::too_many_arguments)]
fn bron_kerbosch(
    g: &RUniformHypergraph,
    current: &mut Vec<u32>,
    mut candidates: Vec<u32>,
    mut excluded: Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    nodes: &mut usize,
    node_budget: usize,
    limit: usize,
) {
    *nodes += 1;
    if *nodes > node_budget || out.len() >= limit {
        return;
    }
    if candidates.is_empty() {
        if excluded.is_empty() && current.len() >= g.r() {
            let mut c = current.clone();
            c.sort_unstable();
            out.push(c);
        }
        return;
    }
    while let Some(v) = candidates.first().copied() {
        current.push(v);
        let next_candidates = candidates[1..]
            .iter()
            .copied()
            .filter(|&u| extends(g, current, u))
            .collect();
        let next_excluded = excluded
            .iter()
            .copied()
            .filter(|&u| extends(g, current, u))
            .collect();
        bron_kerbosch(g, current, next_candidates, next_excluded, out, nodes, node_budget, limit);
        current.pop();
        candidates.remove(0);
        excluded.push(v);
        if *nodes > node_budget || out.len() >= limit {
            return;
        }
    }
}

/// Whether some `(t-1)`-set of vertices spans at least `C(t-1, r) - 1` edges,
/// i.e. contains a clique of order `t-1` with at most one edge removed.
pub fn contains_near_clique(g: &RUniformHypergraph, t: usize) -> bool {
    let Some(k) = t.checked_sub(1) else {
        return true;
    };
    if k > g.n() {
        return false;
    }
    let needed = binomial(k as u64, g.r() as u64).saturating_sub(1) as usize;
    if is_left_compressed(g) {
        let prefix: Vec<u32> = (1..=k as u32).collect();
        return g.induced_edge_count(&prefix) >= needed;
    }
    let vertices: Vec<u32> = (1..=g.n() as u32).collect();
    near_clique_search(g, &mut Vec::with_capacity(k), 0, &vertices, k)
}

fn near_clique_search(
    g: &RUniformHypergraph,
    chosen: &mut Vec<u32>,
    missing: usize,
    rest: &[u32],
    k: usize,
) -> bool {
    if chosen.len() == k {
        return true;
    }
    if chosen.len() + rest.len() < k {
        return false;
    }
    let r = g.r();
    for (idx, &v) in rest.iter().enumerate() {
        if chosen.len() + rest.len() - idx < k {
            return false;
        }
        let mut added = 0usize;
        if chosen.len() + 1 >= r {
            let mut buf = Vec::with_capacity(r);
            for_each_subset(chosen, r - 1, &mut Vec::with_capacity(r), &mut |sub| {
                if missing + added > 1 {
                    return;
                }
                buf.clear();
                buf.extend_from_slice(sub);
                buf.push(v);
                if !g.contains_sorted(&buf) {
                    added += 1;
                }
            });
        }
        if missing + added <= 1 {
            chosen.push(v);
            let found = near_clique_search(g, chosen, missing + added, &rest[idx + 1..], k);
            chosen.pop();
            if found {
                return true;
            }
        }
    }
    false
}
