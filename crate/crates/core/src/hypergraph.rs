//! r-uniform hypergraphs on the vertex set `[n]` and their text format.
//!
//! The text format is line oriented. The first non-comment line is `r n m`;
//! each of the following `m` lines holds one edge as `r` ascending 1-based
//! labels separated by spaces. Lines starting with `#` are comments.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::rset::RSet;

/// An r-uniform hypergraph with vertex set `[n]`. Edges iterate in colex order.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RUniformHypergraph {
    r: usize,
    n: usize,
    edges: BTreeSet<RSet>,
}

impl RUniformHypergraph {
    pub fn new(r: usize, n: usize, edges: impl IntoIterator<Item = RSet>) -> Result<Self> {
        check_shape(r, n)?;
        let mut set = BTreeSet::new();
        for edge in edges {
            validate_edge(&edge, r, n)?;
            if !set.insert(edge.clone()) {
                return Err(Error::InvalidParameters(format!("duplicate edge {edge:?}")));
            }
        }
        Ok(Self { r, n, edges: set })
    }

    /// Convenience constructor from raw label lists (any order inside an edge).
    pub fn from_edge_lists<E: AsRef<[u32]>>(r: usize, n: usize, edges: &[E]) -> Result<Self> {
        let edges = edges
            .iter()
            .map(|e| RSet::from_unsorted(e.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(r, n, edges)
    }

    pub fn empty(r: usize, n: usize) -> Result<Self> {
        Self::new(r, n, std::iter::empty())
    }

    /// `[t]^(r)`, all r-subsets of `[t]`.
    pub fn complete(t: usize, r: usize) -> Result<Self> {
        if r < 2 || t < r {
            return Err(Error::InvalidParameters(format!(
                "complete graph needs t >= r >= 2, got t = {t}, r = {r}"
            )));
        }
        let count = binomial(t as u64, r as u64);
        let edges = (1..=count).map(|k| RSet::colex_unrank(k, r)).collect::<Result<Vec<_>>>()?;
        Self::new(r, t, edges)
    }

    /// `C_{r,m}`: the first `m` r-sets in colex order, on the vertices they use.
    pub fn colex(r: usize, m: usize) -> Result<Self> {
        if r < 2 || m < 1 {
            return Err(Error::InvalidParameters(format!(
                "colex graph needs r >= 2 and m >= 1, got r = {r}, m = {m}"
            )));
        }
        let edges = (1..=m as u64)
            .map(|k| RSet::colex_unrank(k, r))
            .collect::<Result<Vec<_>>>()?;
        let n = edges.last().map_or(r, |e| e.max() as usize);
        Self::new(r, n, edges)
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    /// Edges in colex order.
    pub fn edges(&self) -> impl DoubleEndedIterator<Item = &RSet> + ExactSizeIterator + '_ {
        self.edges.iter()
    }


    pub fn contains(&self, edge: &RSet) -> bool {
        self.edges.contains(edge)
    }

    /// Membership for a sorted label slice.
    pub fn contains_sorted(&self, labels: &[u32]) -> bool {
        labels.len() == self.r
            && RSet::new(labels.to_vec()).is_ok_and(|e| self.edges.contains(&e))
    }

    pub fn with_edge(&self, edge: RSet) -> Result<Self> {
        validate_edge(&edge, self.r, self.n)?;
        let mut g = self.clone();
        if !g.edges.insert(edge.clone()) {
            return Err(Error::InvalidParameters(format!("edge {edge:?} already present")));
        }
        Ok(g)
    }

    pub fn without_edge(&self, edge: &RSet) -> Result<Self> {
        let mut g = self.clone();
        if !g.edges.remove(edge) {
            return Err(Error::InvalidParameters(format!("edge {edge:?} not present")));
        }
        Ok(g)
    }

    /// Same edges on a different vertex count; fails if an edge would fall outside.
    pub fn with_vertex_count(&self, n: usize) -> Result<Self> {
        Self::new(self.r, n, self.edges.iter().cloned())
    }

    /// Drops trailing vertices that no edge uses (keeping at least `r`).
    pub fn trimmed(&self) -> Self {
        let n = self.max_vertex().map_or(self.r, |v| (v as usize).max(self.r));
        Self {
            r: self.r,
            n,
            edges: self.edges.clone(),
        }
    }

    pub fn max_vertex(&self) -> Option<u32> {
        self.edges.iter().map(RSet::max).max()
    }

    pub fn degree(&self, vertex: u32) -> usize {
        self.edges.iter().filter(|e| e.contains(vertex)).count()
    }

    pub fn is_subgraph_of(&self, other: &Self) -> bool {
        self.r == other.r && self.n <= other.n && self.edges.is_subset(&other.edges)
    }

    /// Number of edges inside the given vertex subset.
    pub fn induced_edge_count(&self, vertices: &[u32]) -> usize {
        self.edges
            .iter()
            .filter(|e| e.elements().iter().all(|v| vertices.contains(v)))
            .count()
    }

    pub fn symmetric_difference_size(&self, other: &Self) -> usize {
        self.edges.symmetric_difference(&other.edges).count()
    }

    /// Canonical text form: header, then edges in colex order, trailing newline.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {} {}\n", self.r, self.n, self.edges.len());
        for e in &self.edges {
            out.push_str(&e.to_string());
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing `r n m` header".into(),
        })?;
        let fields = parse_numbers(header, header_line)?;
        let [r, n, m] = fields[..] else {
            return Err(Error::Parse {
                line: header_line,
                message: format!("header must be `r n m`, found {} fields", fields.len()),
            });
        };
        let (r, n, m) = (r as usize, n as usize, m as usize);
        check_shape(r, n).map_err(|e| Error::Parse {
            line: header_line,
            message: e.to_string(),
        })?;

        let mut edges = BTreeSet::new();
        let mut last_line = header_line;
        for (line, content) in lines {
            last_line = line;
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more edge lines than the declared m = {m}"),
                });
            }
            let labels = parse_numbers(content, line)?;
            if labels.len() != r {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {r} labels, found {}", labels.len()),
                });
            }
            if labels.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::Parse {
                    line,
                    message: "labels must be strictly ascending".into(),
                });
            }
            let edge = RSet::new(labels).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            validate_edge(&edge, r, n).map_err(|e| Error::Parse {
                line,
                message: e.to_string(),
            })?;
            if !edges.insert(edge.clone()) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate edge {edge}"),
                });
            }
        }
        if edges.len() != m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("declared m = {m} edges, found {}", edges.len()),
            });
        }
        Ok(Self { r, n, edges })
    }

    /// Short stable identifier of the canonical text form.
    pub fn edge_hash(&self) -> String {
        let digest = Sha256::digest(self.to_text().as_bytes());
        hex::encode(&digest[..8])
    }
}

fn check_shape(r: usize, n: usize) -> Result<()> {
    if r < 2 {
        return Err(Error::InvalidParameters(format!("uniformity r must be at least 2, got {r}")));
    }
    if n < r {
        return Err(Error::InvalidParameters(format!(
            "vertex count n = {n} is smaller than r = {r}"
        )));
    }
    if n > u32::MAX as usize {
        return Err(Error::InvalidParameters("vertex count too large".into()));
    }
    Ok(())
}

fn validate_edge(edge: &RSet, r: usize, n: usize) -> Result<()> {
    if edge.r() != r {
        return Err(Error::UniformityMismatch {
            expected: r,
            found: edge.r(),
        });
    }
    if edge.max() as usize > n {
        return Err(Error::VertexOutOfRange {
            vertex: edge.max(),
            n,
        });
    }
    Ok(())
}

fn parse_numbers(content: &str, line: usize) -> Result<Vec<u32>> {
    content
        .split_whitespace()
        .map(|tok| {
            tok.parse::<u32>().map_err(|_| Error::Parse {
                line,
                message: format!("`{tok}` is not a non-negative integer"),
            })
        })
        .collect()
}

impl FromStr for RUniformHypergraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_text(s)
    }
}

impl fmt::Display for RUniformHypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(g: &RUniformHypergraph) -> Vec<Vec<u32>> {
        g.edges().map(|e| e.elements().to_vec()).collect()
    }

    #[test]
    fn colex_graph_examples() {
        let g = RUniformHypergraph::colex(3, 4).unwrap();
        assert_eq!(labels(&g), vec![vec![1, 2, 3], vec![1, 2, 4], vec![1, 3, 4], vec![2, 3, 4]]);
        assert_eq!(g.n(), 4);

        let g = RUniformHypergraph::colex(3, 10).unwrap();
        assert_eq!(g, RUniformHypergraph::complete(5, 3).unwrap());

        let g = RUniformHypergraph::colex(2, 1).unwrap();
        assert_eq!(labels(&g), vec![vec![1, 2]]);
        assert_eq!(g.n(), 2);

        assert!(RUniformHypergraph::colex(3, 0).is_err());
    }

    #[test]
    fn complete_graph_examples() {
        let g = RUniformHypergraph::complete(3, 2).unwrap();
        assert_eq!(labels(&g), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        assert_eq!(RUniformHypergraph::complete(4, 3).unwrap().edge_count(), 4);
        assert_eq!(RUniformHypergraph::complete(5, 3).unwrap().edge_count(), 10);
        assert!(matches!(
            RUniformHypergraph::complete(2, 3),
            Err(Error::InvalidParameters(_))
        ));
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert!(matches!(
            RUniformHypergraph::from_edge_lists(3, 4, &[[1, 2, 5]]),
            Err(Error::VertexOutOfRange { vertex: 5, n: 4 })
        ));
        assert!(matches!(
            RUniformHypergraph::from_edge_lists(3, 4, &[vec![1, 2]]),
            Err(Error::UniformityMismatch { .. })
        ));
        assert!(RUniformHypergraph::from_edge_lists(3, 4, &[[1, 2, 3], [3, 2, 1]]).is_err());
        assert!(RUniformHypergraph::empty(3, 2).is_err());
        assert!(RUniformHypergraph::empty(1, 2).is_err());
    }

    #[test]
    fn text_round_trip_is_canonical() {
        let text = "# a comment\n3 5 3\n2 3 5\n\n1 2 3\n# inner\n1 2 4\n";
        let g: RUniformHypergraph = text.parse().unwrap();
        let canonical = g.to_text();
        assert_eq!(canonical, "3 5 3\n1 2 3\n1 2 4\n2 3 5\n");
        assert_eq!(RUniformHypergraph::from_text(&canonical).unwrap().to_text(), canonical);
    }

    #[test]
    fn text_parse_errors_carry_line_numbers() {
        let err = RUniformHypergraph::from_text("3 4 2\n1 2 3\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");

        let err = RUniformHypergraph::from_text("3 4 1\n1 3 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));

        let err = RUniformHypergraph::from_text("3 4 2\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { .. }));

        let err = RUniformHypergraph::from_text("3 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));

        let err = RUniformHypergraph::from_text("#only\n3 4 1\n1 2 x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));

        let err = RUniformHypergraph::from_text("3 4 1\n1 2 9\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn trimming_and_subgraphs() {
        let g = RUniformHypergraph::from_edge_lists(3, 9, &[[1, 2, 3], [1, 2, 4]]).unwrap();
        let t = g.trimmed();
        assert_eq!(t.n(), 4);
        assert!(t.is_subgraph_of(&RUniformHypergraph::complete(4, 3).unwrap()));
        assert_eq!(g.induced_edge_count(&[1, 2, 3]), 1);
        assert_eq!(g.degree(4), 1);
        assert_eq!(g.edge_hash().len(), 16);
    }
}
