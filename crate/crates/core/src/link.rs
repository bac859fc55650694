//! Links of one or two pinned vertices.
//!
//! For a vertex `i` the link `E_i` collects the (r-1)-sets that complete to an
//! edge through `i`; for a pair `{i, j}` the link `E_ij` collects the
//! (r-2)-sets completing through both. The complemented variants collect the
//! sets that complete to a non-edge instead, and `E_{i\j} = E_i ∩ E_j^c`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;

/// A link of a hypergraph, materialized as a list of sorted label sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkView {
    pub r: usize,
    pub n: usize,
    pub pinned: Vec<u32>,
    pub complemented: bool,
    /// The vertex `j` of `E_{i\j}`, when this is a difference link.
    pub minus: Option<u32>,
    pub sets: Vec<Vec<u32>>,
}

impl LinkView {
    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    /// Size of each member set.
    pub fn arity(&self) -> usize {
        self.r - self.pinned.len()
    }

    /// Sum over member sets of the product of their weights.
    pub fn value(&self, weights: &[f64]) -> Result<f64> {
        if weights.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: weights.len(),
            });
        }
        Ok(self
            .sets
            .iter()
            .map(|s| s.iter().map(|&v| weights[v as usize - 1]).product::<f64>())
            .sum())
    }

    /// One line per member set, labels separated by spaces (an empty set prints
    /// as an empty line).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for s in &self.sets {
            let line: Vec<String> = s.iter().map(u32::to_string).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }
}

/// Builds `E_i`, `E_ij`, their complements, or `E_{i\j}`.
pub fn link(
    g: &RUniformHypergraph,
    pinned: &[u32],
    complemented: bool,
    difference_against: Option<u32>,
) -> Result<LinkView> {
    let n = g.n();
    if pinned.is_empty() || pinned.len() > 2 {
        return Err(Error::InvalidParameters(format!(
            "a link pins one or two vertices, got {}",
            pinned.len()
        )));
    }
    for &v in pinned.iter().chain(difference_against.iter()) {
        if v == 0 || v as usize > n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
    }
    let mut pinned = pinned.to_vec();
    pinned.sort_unstable();
    if pinned.len() == 2 && pinned[0] == pinned[1] {
        return Err(Error::InvalidParameters("pinned vertices must be distinct".into()));
    }
    if let Some(j) = difference_against {
        if pinned.len() != 1 {
            return Err(Error::InvalidParameters(
                "a difference link pins exactly one vertex".into(),
            ));
        }
        if complemented {
            return Err(Error::InvalidParameters(
                "a difference link cannot also be complemented".into(),
            ));
        }
        if pinned[0] == j {
            return Err(Error::InvalidParameters(
                "difference vertex must differ from the pinned vertex".into(),
            ));
        }
    }

    let arity = g.r() - pinned.len();
    let pool: Vec<u32> = (1..=n as u32).filter(|v| !pinned.contains(v)).collect();
    let mut sets = Vec::new();
    let mut buf = Vec::with_capacity(g.r());
    for_each_subset(&pool, arity, &mut Vec::with_capacity(arity), &mut |member| {
        let through_pinned = completes_to_edge(g, member, &pinned, &mut buf);
        let keep = match difference_against {
            Some(j) => {
                through_pinned
                    && !member.contains(&j)
                    && !completes_to_edge(g, member, &[j], &mut buf)
            }
            None => through_pinned != complemented,
        };
        if keep {
            sets.push(member.to_vec());
        }
    });

    Ok(LinkView {
        r: g.r(),
        n,
        pinned,
        complemented,
        minus: difference_against,
        sets,
    })
}

/// Link value `λ(view, x)` on the weighting of `g`.
pub fn link_value(g: &RUniformHypergraph, view: &LinkView, weights: &[f64]) -> Result<f64> {
    if view.n != g.n() || view.r != g.r() {
        return Err(Error::InvalidParameters("link view belongs to a different graph".into()));
    }
    if weights.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: weights.len(),
        });
    }
    view.value(weights)
}

fn completes_to_edge(
    g: &RUniformHypergraph,
    member: &[u32],
    extra: &[u32],
    buf: &mut Vec<u32>,
) -> bool {
    buf.clear();
    buf.extend_from_slice(member);
    buf.extend_from_slice(extra);
    buf.sort_unstable();
    g.contains_sorted(buf)
}

/// Visits the k-subsets of `pool` (sorted) in lexicographic order.
pub(crate) fn for_each_subset(
    pool: &[u32],
    k: usize,
    prefix: &mut Vec<u32>,
    visit: &mut impl FnMut(&[u32]),
) {
    if k == 0 {
        visit(prefix);
        return;
    }
    if pool.len() < k {
        return;
    }
    for i in 0..=pool.len() - k {
        prefix.push(pool[i]);
        for_each_subset(&pool[i + 1..], k - 1, prefix, visit);
        prefix.pop();
    }
}
