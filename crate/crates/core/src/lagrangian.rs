//! The edge polynomial `λ(G, x) = Σ_{e ∈ E} Π_{i ∈ e} x_i`, its vertex links
//! (partial derivatives), the multiplicative growth step, first-order
//! residuals, and the closed forms for cliques.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{Pow, ToPrimitive};
use serde::Serialize;

use crate::clique::max_clique;
use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;
use crate::weighting::Weighting;

/// Flattened 0-based edge list for fast repeated evaluation.
#[derive(Clone, Debug)]
pub(crate) struct EdgePolynomial {
    r: usize,
    n: usize,
    flat: Vec<usize>,
}

impl EdgePolynomial {
    pub(crate) fn new(g: &RUniformHypergraph) -> Self {
        let flat = g
            .edges()
            .flat_map(|e| e.elements().iter().map(|&v| v as usize - 1))
            .collect();
        Self {
            r: g.r(),
            n: g.n(),
            flat,
        }
    }

    pub(crate) fn r(&self) -> usize {
        self.r
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    fn edges(&self) -> std::slice::ChunksExact<'_, usize> {
        self.flat.chunks_exact(self.r)
    }

    pub(crate) fn value(&self, x: &[f64]) -> f64 {
        self.edges()
            .map(|e| e.iter().map(|&i| x[i]).product::<f64>())
            .sum()
    }

    /// Fills `grad[i] = λ(E_i, x)` and returns `λ(G, x)`.
    pub(crate) fn gradient(&self, x: &[f64], grad: &mut [f64]) -> f64 {
        grad.iter_mut().for_each(|g| *g = 0.0);
        let mut value = 0.0;
        for e in self.edges() {
            value += e.iter().map(|&i| x[i]).product::<f64>();
            for (p, &i) in e.iter().enumerate() {
                let others: f64 = e
                    .iter()
                    .enumerate()
                    .filter(|&(q, _)| q != p)
                    .map(|(_, &j)| x[j])
                    .product();
                grad[i] += others;
            }
        }
        value
    }

    /// Second derivatives `λ(E_ij, x)` restricted to `support` (0-based).
    pub(crate) fn hessian_on(&self, x: &[f64], support: &[usize]) -> DMatrix<f64> {
        let k = support.len();
        let mut position = vec![usize::MAX; self.n];
        for (a, &i) in support.iter().enumerate() {
            position[i] = a;
        }
        let mut h = DMatrix::zeros(k, k);
        for e in self.edges() {
            for p in 0..self.r {
                let a = position[e[p]];
                if a == usize::MAX {
                    continue;
                }
                for q in p + 1..self.r {
                    let b = position[e[q]];
                    if b == usize::MAX {
                        continue;
                    }
                    let rest: f64 = e
                        .iter()
                        .enumerate()
                        .filter(|&(s, _)| s != p && s != q)
                        .map(|(_, &j)| x[j])
                        .product();
                    h[(a, b)] += rest;
                    h[(b, a)] += rest;
                }
            }
        }
        h
    }

    /// Whether some edge contains both 0-based vertices.
    pub(crate) fn covers_pair(&self, i: usize, j: usize) -> bool {
        self.edges().any(|e| e.contains(&i) && e.contains(&j))
    }
}

fn check_dimension(g: &RUniformHypergraph, x: &Weighting) -> Result<()> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: x.len(),
        });
    }
    Ok(())
}

/// `λ(G, x)`, summed over edges in colex order.
pub fn evaluate(g: &RUniformHypergraph, x: &Weighting) -> Result<f64> {
    check_dimension(g, x)?;
    Ok(EdgePolynomial::new(g).value(x.as_slice()))
}

/// One multiplicative ascent step `x_i <- x_i λ(E_i, x) / (r λ(G, x))`.
pub fn growth_step(g: &RUniformHypergraph, x: &Weighting) -> Result<Weighting> {
    check_dimension(g, x)?;
    let poly = EdgePolynomial::new(g);
    let mut next = x.as_slice().to_vec();
    let mut grad = vec![0.0; g.n()];
    if !growth_step_in_place(&poly, &mut next, &mut grad) {
        return Err(Error::ZeroValue);
    }
    Ok(Weighting::from_raw_unchecked(next))
}

/// Applies a growth step to `x`; returns false (leaving `x` unchanged) when
/// the current value is zero.
pub(crate) fn growth_step_in_place(poly: &EdgePolynomial, x: &mut [f64], grad: &mut [f64]) -> bool {
    let value = poly.gradient(x, grad);
    if value <= 0.0 {
        return false;
    }
    let scale = poly.r() as f64 * value;
    let mut sum = 0.0;
    for (xi, gi) in x.iter_mut().zip(grad.iter()) {
        *xi *= gi / scale;
        sum += *xi;
    }
    x.iter_mut().for_each(|xi| *xi /= sum);
    true
}

/// Deviation from the first-order conditions `λ(E_i, x) = r λ(G, x)`:
/// the largest violation on the support plus the largest excess off it.
pub fn kkt_residual(g: &RUniformHypergraph, x: &Weighting) -> Result<f64> {
    check_dimension(g, x)?;
    let poly = EdgePolynomial::new(g);
    let mut grad = vec![0.0; g.n()];
    Ok(kkt_residual_with(&poly, x.as_slice(), &mut grad))
}

pub(crate) fn kkt_residual_with(poly: &EdgePolynomial, x: &[f64], grad: &mut [f64]) -> f64 {
    let value = poly.gradient(x, grad);
    let target = poly.r() as f64 * value;
    let mut on_support = 0.0f64;
    let mut off_support = 0.0f64;
    for (&xi, &gi) in x.iter().zip(grad.iter()) {
        if xi > 0.0 {
            on_support = on_support.max((gi - target).abs());
        } else {
            off_support = off_support.max(gi - target);
        }
    }
    on_support + off_support.max(0.0)
}

/// `C(t, r) / t^r` as an exact rational: the value of `[t]^(r)` under the
/// uniform weighting, which is its Lagrangian.
pub fn complete_lagrangian_exact(t: usize, r: usize) -> Result<BigRational> {
    if r < 2 || t < r {
        return Err(Error::InvalidParameters(format!(
            "complete Lagrangian needs t >= r >= 2, got t = {t}, r = {r}"
        )));
    }
    let edges = BigInt::from(binomial(t as u64, r as u64));
    let scale = Pow::pow(BigInt::from(t), r as u32);
    Ok(BigRational::new(edges, scale))
}

/// `C(t, r) / t^r`, correctly rounded from the exact rational.
pub fn complete_lagrangian(t: usize, r: usize) -> Result<f64> {
    let exact = complete_lagrangian_exact(t, r)?;
    Ok(exact.to_f64().expect("finite ratio of integers"))
}

/// Exact value for 2-graphs from the clique number, with the witness that puts
/// `1/t` on a maximum clique.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CliqueBound {
    pub clique_order: usize,
    pub clique: Vec<u32>,
    pub value: f64,
    pub witness: Weighting,
}

pub fn motzkin_straus(g: &RUniformHypergraph) -> Result<CliqueBound> {
    if g.r() != 2 {
        return Err(Error::UniformityMismatch {
            expected: 2,
            found: g.r(),
        });
    }
    let clique = max_clique(g)?;
    let t = clique.len();
    // (1/2)(1 - 1/t) = (t - 1) / (2t)
    let value = BigRational::new(BigInt::from(t - 1), BigInt::from(2 * t))
        .to_f64()
        .expect("finite");
    let witness = Weighting::uniform_on(g.n(), &clique)?;
    Ok(CliqueBound {
        clique_order: t,
        clique,
        value,
        witness,
    })
}

pub fn motzkin_straus_value(g: &RUniformHypergraph) -> Result<f64> {
    Ok(motzkin_straus(g)?.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::link::{link, link_value};
    use approx::assert_abs_diff_eq;

    fn w(x: &[f64]) -> Weighting {
        Weighting::new(x.to_vec()).unwrap()
    }

    fn graph(r: usize, n: usize, edges: &[&[u32]]) -> RUniformHypergraph {
        RUniformHypergraph::from_edge_lists(r, n, edges).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let third = Weighting::uniform(3);
        assert_abs_diff_eq!(
            evaluate(&graph(3, 3, &[&[1, 2, 3]]), &third).unwrap(),
            1.0 / 27.0,
            epsilon = 1e-16
        );
        let triangle = RUniformHypergraph::complete(3, 2).unwrap();
        assert_abs_diff_eq!(evaluate(&triangle, &third).unwrap(), 1.0 / 3.0, epsilon = 1e-15);
        assert_eq!(evaluate(&RUniformHypergraph::empty(3, 3).unwrap(), &third).unwrap(), 0.0);
        assert!(matches!(
            evaluate(&triangle, &Weighting::uniform(4)),
            Err(Error::DimensionMismatch { expected: 3, found: 4 })
        ));
    }

    #[test]
    fn colex_17_under_split_weighting() {
        // oracle: enumerate monomials of the first 17 colex triples directly
        let x = [0.2, 0.2, 0.2, 0.2, 0.1, 0.1];
        let mut oracle = 0.0;
        let mut count = 0;
        'outer: for c in 3..=6u32 {
            for b in 2..c {
                for a in 1..b {
                    if count == 17 {
                        break 'outer;
                    }
                    oracle += x[a as usize - 1] * x[b as usize - 1] * x[c as usize - 1];
                    count += 1;
                }
            }
        }
        let g = RUniformHypergraph::colex(3, 17).unwrap();
        let value = evaluate(&g, &w(&x)).unwrap();
        assert_abs_diff_eq!(value, oracle, epsilon = 1e-15);
        assert_abs_diff_eq!(value, 0.082, epsilon = 1e-12);
    }

    #[test]
    fn growth_step_examples() {
        let triangle = RUniformHypergraph::complete(3, 2).unwrap();
        let fixed = growth_step(&triangle, &Weighting::uniform(3)).unwrap();
        for &v in fixed.as_slice() {
            assert_abs_diff_eq!(v, 1.0 / 3.0, epsilon = 1e-15);
        }

        // λ = 0.31, links (0.5, 0.7, 0.8)
        let next = growth_step(&triangle, &w(&[0.5, 0.3, 0.2])).unwrap();
        let expected = [0.25 / 0.62, 0.21 / 0.62, 0.16 / 0.62];
        for (a, b) in next.as_slice().iter().zip(expected) {
            assert_abs_diff_eq!(*a, b, epsilon = 1e-15);
        }
        assert!(evaluate(&triangle, &next).unwrap() >= 0.31);

        let edge = graph(2, 2, &[&[1, 2]]);
        let next = growth_step(&edge, &w(&[0.9, 0.1])).unwrap();
        assert_abs_diff_eq!(next.as_slice()[0], 0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(next.as_slice()[1], 0.5, epsilon = 1e-15);

        let star = graph(2, 3, &[&[1, 2]]);
        assert_eq!(
            growth_step(&star, &w(&[0.0, 0.0, 1.0])).unwrap_err(),
            Error::ZeroValue
        );
    }

    #[test]
    fn kkt_examples() {
        let triangle = RUniformHypergraph::complete(3, 2).unwrap();
        assert_abs_diff_eq!(
            kkt_residual(&triangle, &Weighting::uniform(3)).unwrap(),
            0.0,
            epsilon = 1e-15
        );
        let edge = graph(2, 2, &[&[1, 2]]);
        assert_eq!(kkt_residual(&edge, &w(&[0.5, 0.5])).unwrap(), 0.0);
        assert_abs_diff_eq!(kkt_residual(&edge, &w(&[0.9, 0.1])).unwrap(), 0.72, epsilon = 1e-15);
        // off-support excess counts too: uniform on {1,2} of a triangle
        assert_abs_diff_eq!(
            kkt_residual(&triangle, &w(&[0.5, 0.5, 0.0])).unwrap(),
            0.5,
            epsilon = 1e-15
        );
    }

    #[test]
    fn gradient_matches_links_and_finite_differences() {
        let g = graph(3, 5, &[&[1, 2, 3], &[1, 2, 4], &[1, 3, 5], &[2, 4, 5]]);
        let x = [0.3, 0.25, 0.2, 0.15, 0.1];
        let poly = EdgePolynomial::new(&g);
        let mut grad = vec![0.0; 5];
        poly.gradient(&x, &mut grad);
        for i in 0..5 {
            let view = link(&g, &[i as u32 + 1], false, None).unwrap();
            assert_abs_diff_eq!(grad[i], link_value(&g, &view, &x).unwrap(), epsilon = 1e-15);
            let h = 1e-6;
            let mut up = x;
            let mut down = x;
            up[i] += h;
            down[i] -= h;
            let fd = (poly.value(&up) - poly.value(&down)) / (2.0 * h);
            assert_abs_diff_eq!(grad[i], fd, epsilon = 1e-9);
        }
        let support = [0, 1, 2, 3, 4];
        let hess = poly.hessian_on(&x, &support);
        for i in 0..5 {
            for j in 0..5 {
                let expected = if i == j {
                    0.0
                } else {
                    let view = link(&g, &[i as u32 + 1, j as u32 + 1], false, None).unwrap();
                    link_value(&g, &view, &x).unwrap()
                };
                assert_abs_diff_eq!(hess[(i, j)], expected, epsilon = 1e-15);
            }
        }
    }

    #[test]
    fn complete_lagrangian_examples() {
        assert_eq!(complete_lagrangian(3, 2).unwrap(), 1.0 / 3.0);
        assert_eq!(complete_lagrangian(5, 4).unwrap(), 0.008);
        assert_eq!(complete_lagrangian(4, 3).unwrap(), 0.0625);
        assert_eq!(complete_lagrangian(5, 3).unwrap(), 0.08);
        assert!(complete_lagrangian(2, 3).is_err());
        // (t-2)(t-3)(t-4) / (24 (t-1)^3) at t = 6
        let exact = complete_lagrangian_exact(5, 4).unwrap();
        assert_eq!(exact, BigRational::new(BigInt::from(24), BigInt::from(24 * 125)));
        for t in 2..=12 {
            let half = BigRational::new(BigInt::from(t - 1), BigInt::from(2 * t));
            assert_eq!(complete_lagrangian_exact(t, 2).unwrap(), half);
        }
    }

    #[test]
    fn motzkin_straus_examples() {
        let triangle = RUniformHypergraph::complete(3, 2).unwrap();
        assert_eq!(motzkin_straus_value(&triangle).unwrap(), 1.0 / 3.0);
        let path = graph(2, 3, &[&[1, 2], &[2, 3]]);
        assert_eq!(motzkin_straus_value(&path).unwrap(), 0.25);

        let k6 = RUniformHypergraph::complete(6, 2).unwrap();
        let mut g = k6;
        for e in [[1u32, 2], [3, 4], [5, 6]] {
            g = g.without_edge(&crate::rset::RSet::new(e.to_vec()).unwrap()).unwrap();
        }
        let bound = motzkin_straus(&g).unwrap();
        assert_eq!(bound.clique_order, 3);
        assert_eq!(bound.value, 1.0 / 3.0);
        assert_abs_diff_eq!(evaluate(&g, &bound.witness).unwrap(), 1.0 / 3.0, epsilon = 1e-15);

        assert!(matches!(
            motzkin_straus_value(&RUniformHypergraph::complete(4, 3).unwrap()),
            Err(Error::UniformityMismatch { .. })
        ));
    }
}
