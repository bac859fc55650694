//! Canonical enumeration of left-compressed r-graphs with a fixed edge count.
//!
//! Listing a down-set in colex order gives a sequence whose every prefix is a
//! down-set, because colex order extends the descendant order. Depth-first
//! search that only ever appends an addable r-set colex-larger than the last
//! one therefore reaches each down-set exactly once.

use std::collections::BTreeSet;

use num_integer::binomial;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;
use crate::link::for_each_subset;
use crate::rset::RSet;

/// Limits checked before and during enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct EnumerationBudget {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Graphs yielded per call.
    pub max_instances: usize,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        Self {
            max_vertices: 40,
            max_edges: 40,
            max_instances: 200_000,
        }
    }
}

/// The descendant poset on `[n]^(r)`, indexed by colex rank minus one.
struct Poset {
    r: usize,
    n: usize,
    sets: Vec<RSet>,
    /// Number of direct descendants of each set.
    below: Vec<u32>,
    /// Direct ancestors of each set, by index.
    above: Vec<Vec<u32>>,
}

impl Poset {
    fn new(r: usize, n: usize) -> Self {
        let mut sets = Vec::new();
        let pool: Vec<u32> = (1..=n as u32).collect();
        for_each_subset(&pool, r, &mut Vec::with_capacity(r), &mut |s| {
            sets.push(RSet::from_sorted_unchecked(s.to_vec()));
        });
        sets.sort_by_key(RSet::colex_rank);
        let index = |s: &RSet| s.colex_rank() as usize - 1;
        let below = sets.iter().map(|s| s.descendants(true).len() as u32).collect();
        let above = sets
            .iter()
            .map(|s| {
                s.direct_ancestors(n as u32)
                    .iter()
                    .map(|a| index(a) as u32)
                    .collect()
            })
            .collect();
        Self {
            r,
            n,
            sets,
            below,
            above,
        }
    }
}

struct Search<'a, F> {
    poset: &'a Poset,
    target: usize,
    limit: usize,
    missing: Vec<u32>,
    frontier: BTreeSet<u32>,
    chosen: Vec<u32>,
    yielded: usize,
    visit: F,
}

impl<F: FnMut(RUniformHypergraph)> Search<'_, F> {
    fn run(&mut self, last: Option<u32>) -> Result<()> {
        if self.chosen.len() == self.target {
            if self.yielded == self.limit {
                return Err(Error::ResourceLimit {
                    limit: "enumerated instances",
                    requested: self.yielded + 1,
                    allowed: self.limit,
                });
            }
            self.yielded += 1;
            let edges = self
                .chosen
                .iter()
                .map(|&i| self.poset.sets[i as usize].clone());
            let g = RUniformHypergraph::new(self.poset.r, self.poset.n, edges)
                .expect("poset sets are distinct and in range");
            (self.visit)(g);
            return Ok(());
        }
        let start = last.map_or(0, |l| l + 1);
        let candidates: Vec<u32> = self.frontier.range(start..).copied().collect();
        for c in candidates {
            self.frontier.remove(&c);
            self.chosen.push(c);
            for &u in &self.poset.above[c as usize] {
                self.missing[u as usize] -= 1;
                if self.missing[u as usize] == 0 {
                    self.frontier.insert(u);
                }
            }
            let outcome = self.run(Some(c));
            for &u in &self.poset.above[c as usize] {
                if self.missing[u as usize] == 0 {
                    self.frontier.remove(&u);
                }
                self.missing[u as usize] += 1;
            }
            self.chosen.pop();
            self.frontier.insert(c);
            outcome?;
        }
        Ok(())
    }
}

fn check_budget(r: usize, m: usize, n: usize, budget: &EnumerationBudget) -> Result<()> {
    if r < 2 || n < r {
        return Err(Error::InvalidParameters(format!(
            "need 2 <= r <= n, got r = {r}, n = {n}"
        )));
    }
    if n > budget.max_vertices {
        return Err(Error::ResourceLimit {
            limit: "max-vertices",
            requested: n,
            allowed: budget.max_vertices,
        });
    }
    if m > budget.max_edges {
        return Err(Error::ResourceLimit {
            limit: "max-edges",
            requested: m,
            allowed: budget.max_edges,
        });
    }
    if (binomial(n as u128, r as u128)) < m as u128 {
        return Err(Error::InvalidParameters(format!(
            "[{n}] has fewer than {m} subsets of size {r}"
        )));
    }
    Ok(())
}

/// Calls `visit` on every left-compressed r-graph on `[n]` with exactly `m`
/// edges, in the colex order of their sorted edge lists. Returns the count.
pub fn for_each_left_compressed(
    r: usize,
    m: usize,
    n: usize,
    budget: &EnumerationBudget,
    visit: impl FnMut(RUniformHypergraph),
) -> Result<usize> {
    check_budget(r, m, n, budget)?;
    let poset = Poset::new(r, n);
    let mut frontier = BTreeSet::new();
    frontier.insert(0);
    let mut search = Search {
        poset: &poset,
        target: m,
        limit: budget.max_instances,
        missing: poset.below.clone(),
        frontier,
        chosen: Vec::with_capacity(m),
        yielded: 0,
        visit,
    };
    search.run(None)?;
    Ok(search.yielded)
}

pub fn enumerate_left_compressed(
    r: usize,
    m: usize,
    n: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<RUniformHypergraph>> {
    let mut out = Vec::new();
    for_each_left_compressed(r, m, n, budget, |g| out.push(g))?;
    Ok(out)
}

/// Left-compressed r-graphs with `m` edges on any number of vertices, each
/// trimmed to its largest non-isolated vertex. A left-compressed graph with
/// `m` edges never uses a vertex above `m + r - 1`.
pub fn enumerate_left_compressed_any_order(
    r: usize,
    m: usize,
    budget: &EnumerationBudget,
) -> Result<Vec<RUniformHypergraph>> {
    let n = (m + r).saturating_sub(1).max(r);
    let mut out = Vec::new();
    for_each_left_compressed(r, m, n, budget, |g| out.push(g.trimmed()))?;
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compression::is_left_compressed;

    fn budget() -> EnumerationBudget {
        EnumerationBudget::default()
    }

    #[test]
    fn small_examples() {
        let one = enumerate_left_compressed(3, 1, 4, &budget()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].to_text(), "3 4 1\n1 2 3\n");
        let two = enumerate_left_compressed(3, 2, 4, &budget()).unwrap();
        assert_eq!(two.len(), 1);
        assert_eq!(two[0].to_text(), "3 4 2\n1 2 3\n1 2 4\n");
    }

    #[test]
    fn yields_distinct_left_compressed_graphs() {
        let all = enumerate_left_compressed(3, 8, 7, &budget()).unwrap();
        let distinct: BTreeSet<String> = all.iter().map(|g| g.to_text()).collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|g| is_left_compressed(g) && g.edge_count() == 8));
    }

    #[test]
    fn any_order_enumeration_counts() {
        assert_eq!(enumerate_left_compressed_any_order(3, 16, &budget()).unwrap().len(), 143);
    }

    #[test]
    fn budget_violations_name_the_limit() {
        let small = EnumerationBudget {
            max_instances: 3,
            ..budget()
        };
        assert!(matches!(
            enumerate_left_compressed(3, 6, 7, &small),
            Err(Error::ResourceLimit { limit: "enumerated instances", .. })
        ));
        assert!(matches!(
            enumerate_left_compressed(3, 6, 41, &budget()),
            Err(Error::ResourceLimit { limit: "max-vertices", .. })
        ));
        assert!(matches!(
            enumerate_left_compressed(3, 41, 30, &budget()),
            Err(Error::ResourceLimit { limit: "max-edges", .. })
        ));
        assert!(enumerate_left_compressed(3, 5, 4, &budget()).is_err());
    }
}
