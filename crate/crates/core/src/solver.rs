//! Multistart maximization of `λ(G, x)` over the simplex.
//!
//! Each trial climbs with the multiplicative growth step, which keeps the
//! iterate on the simplex and never decreases the value. A converged trial is
//! then cleaned up:
//!
//! 1. weights below the support threshold are zeroed and pairs of support
//!    vertices that share no edge are merged (the value is linear along such
//!    a transfer, so it cannot drop);
//! 2. a Newton iteration on the support solves `λ(E_i, x) = μ`, `Σ x_i = 1`
//!    to full precision;
//! 3. if some vertex off the support still has `λ(E_i, x) > r λ`, the point is
//!    not a local maximum: a little weight is moved onto the violators and the
//!    climb restarts from there.
//!
//! Trials start from the uniform weighting, from the uniform weighting on each
//! maximal clique (when clique search is affordable), and from Dirichlet(1)
//! draws seeded by `(seed, restart index)`. The result does not depend on how
//! trials are scheduled.

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use serde::{Deserialize, Serialize};

use crate::clique::{max_clique_within, maximal_cliques};
use crate::compression::is_left_compressed;
use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;
use crate::lagrangian::{complete_lagrangian, kkt_residual_with, EdgePolynomial};
use crate::weighting::Weighting;

const MAX_ESCAPES: usize = 16;
const ESCAPE_STEP: f64 = 1e-3;
const NEWTON_STEPS: usize = 40;
const DROP_PERIOD: usize = 32;
const FINISH_PERIOD: usize = 64;
const SUPPORT_ROUNDS: usize = 4;
const CLIQUE_NODE_BUDGET: usize = 200_000;
const ZERO_START_REDRAWS: usize = 16;

/// Solver settings. Field names double as CLI flags and config-file keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct SolverConfig {
    /// Total number of trials, including the uniform and clique starts.
    pub restarts: usize,
    /// Growth steps allowed per climb.
    pub max_iterations: usize,
    /// A climb stops once one step gains less than this.
    pub step_gain_floor: f64,
    /// A trial counts as converged when its residual is at most this.
    pub kkt_tolerance: f64,
    /// Weights at or below this are treated as zero.
    pub support_threshold: f64,
    /// Band used by verification verdicts to call two values equal.
    pub equality_tolerance: f64,
    pub seed: u64,
    /// Seed trials on maximal cliques (searched only up to `clique_vertex_limit` vertices).
    pub clique_starts: bool,
    pub clique_vertex_limit: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        Self {
            restarts: 64,
            max_iterations: 50_000,
            step_gain_floor: 1e-14,
            kkt_tolerance: 1e-8,
            support_threshold: 1e-9,
            equality_tolerance: 1e-6,
            seed: 0,
            clique_starts: true,
            clique_vertex_limit: crate::clique::DEFAULT_CLIQUE_VERTEX_LIMIT,
        }
    }
}

impl SolverConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts == 0 {
            return Err(Error::InvalidParameters("restarts must be at least 1".into()));
        }
        for (name, v) in [
            ("step-gain-floor", self.step_gain_floor),
            ("kkt-tolerance", self.kkt_tolerance),
            ("support-threshold", self.support_threshold),
            ("equality-tolerance", self.equality_tolerance),
        ] {
            if !(v.is_finite() && v >= 0.0) {
                return Err(Error::InvalidParameters(format!(
                    "{name} must be a finite non-negative number, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Outcome of [`solve`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SolveReport {
    /// Best value found; a certified lower bound on the Lagrangian.
    pub value: f64,
    /// Support-minimized weighting attaining `value`.
    pub weighting: Weighting,
    /// The same trial before support minimization.
    pub raw_weighting: Weighting,
    pub support: Vec<u32>,
    pub kkt_residual: f64,
    /// Growth steps spent by the winning trial.
    pub iterations: usize,
    pub restarts_used: usize,
    pub best_restart: usize,
    pub converged: bool,
    /// Every pair of support vertices lies in a common edge.
    pub support_pairs_covered: bool,
    pub clique_order: Option<usize>,
    /// `C(s, r) / s^r` for the clique order `s`.
    pub clique_lower_bound: Option<f64>,
    /// Exact value from the clique number (2-graphs only).
    pub motzkin_straus_value: Option<f64>,
}

/// Result of [`minimize_support`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SupportReduction {
    pub weighting: Weighting,
    pub support: Vec<u32>,
    pub value: f64,
    pub pairs_covered: bool,
}

#[derive(Clone, Debug)]
struct Trial {
    value: f64,
    weighting: Vec<f64>,
    raw: Vec<f64>,
    kkt: f64,
    iterations: usize,
    converged: bool,
    pairs_covered: bool,
}

enum Start {
    Uniform,
    Clique(Vec<u32>),
    Random,
}

/// Maximizes `λ(G, x)` over the simplex.
pub fn solve(g: &RUniformHypergraph, config: &SolverConfig) -> Result<SolveReport> {
    config.validate()?;
    let n = g.n();
    let r = g.r();
    if g.is_edgeless() {
        let uniform = Weighting::uniform(n);
        return Ok(SolveReport {
            value: 0.0,
            support: uniform.support(config.support_threshold),
            weighting: uniform.clone(),
            raw_weighting: uniform,
            kkt_residual: 0.0,
            iterations: 0,
            restarts_used: 0,
            best_restart: 0,
            converged: true,
            support_pairs_covered: false,
            clique_order: None,
            clique_lower_bound: None,
            motzkin_straus_value: None,
        });
    }

    let left_compressed = is_left_compressed(g);
    let mut starts = vec![Start::Uniform];
    let mut clique_order = None;
    if config.clique_starts && (n <= config.clique_vertex_limit || left_compressed) {
        let best = max_clique_within(g, config.clique_vertex_limit)?;
        clique_order = Some(best.len());
        let mut cliques = Vec::new();
        if best.len() >= r {
            cliques.push(best.clone());
        }
        if n <= config.clique_vertex_limit {
            for c in maximal_cliques(g, config.restarts, CLIQUE_NODE_BUDGET) {
                if c != best {
                    cliques.push(c);
                }
            }
        }
        cliques.truncate(config.restarts - 1);
        starts.extend(cliques.into_iter().map(Start::Clique));
    }
    while starts.len() < config.restarts {
        starts.push(Start::Random);
    }

    let poly = EdgePolynomial::new(g);
    let run = |(index, start): (usize, &Start)| -> Trial {
        let mut rng = trial_rng(config.seed, index);
        let x0 = match start {
            Start::Uniform => vec![1.0 / n as f64; n],
            Start::Clique(c) => Weighting::uniform_on(n, c)
                .expect("clique vertices are in range")
                .into_vec(),
            Start::Random => dirichlet(&mut rng, n),
        };
        run_trial(&poly, config, x0, left_compressed, &mut rng)
    };

    #[cfg(feature = "parallel")]
    let trials: Vec<Trial> = {
        use rayon::prelude::*;
        starts.par_iter().enumerate().map(run).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let trials: Vec<Trial> = starts.iter().enumerate().map(run).collect();

    let best_index = pick_best(&trials);
    let best = &trials[best_index];
    let weighting = Weighting::from_raw_unchecked(best.weighting.clone());
    let clique_lower_bound = clique_order
        .filter(|&s| s >= r)
        .map(|s| complete_lagrangian(s, r))
        .transpose()?;
    let motzkin_straus_value = match (r, clique_order) {
        (2, Some(s)) => Some(complete_lagrangian(s, 2)?),
        _ => None,
    };
    Ok(SolveReport {
        value: best.value,
        support: weighting.support(0.0),
        weighting,
        raw_weighting: Weighting::from_raw_unchecked(best.raw.clone()),
        kkt_residual: best.kkt,
        iterations: best.iterations,
        restarts_used: trials.len(),
        best_restart: best_index,
        converged: best.converged,
        support_pairs_covered: best.pairs_covered,
        clique_order,
        clique_lower_bound,
        motzkin_straus_value,
    })
}

/// Largest value; values within 1e-12 of it prefer converged trials, then the
/// lowest restart index.
fn pick_best(trials: &[Trial]) -> usize {
    let top = trials.iter().map(|t| t.value).fold(f64::NEG_INFINITY, f64::max);
    let near: Vec<usize> = (0..trials.len())
        .filter(|&i| trials[i].value >= top - 1e-12)
        .collect();
    near.iter()
        .copied()
        .find(|&i| trials[i].converged)
        .unwrap_or(near[0])
}

fn trial_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

fn dirichlet(rng: &mut ChaCha8Rng, n: usize) -> Vec<f64> {
    let mut x: Vec<f64> = (0..n).map(|_| rng.sample::<f64, _>(Exp1)).collect();
    let sum: f64 = x.iter().sum();
    x.iter_mut().for_each(|v| *v /= sum);
    x
}

fn run_trial(
    poly: &EdgePolynomial,
    config: &SolverConfig,
    mut x: Vec<f64>,
    left_compressed: bool,
    rng: &mut ChaCha8Rng,
) -> Trial {
    let n = poly.n();
    let mut grad = vec![0.0; n];
    let mut redraws = 0;
    while poly.value(&x) <= 0.0 && redraws < ZERO_START_REDRAWS {
        x = dirichlet(rng, n);
        redraws += 1;
    }

    let mut iterations = 0;
    let mut best: Option<Trial> = None;
    for escape in 0..=MAX_ESCAPES {
        iterations += ascend(poly, &mut x, config, &mut grad);
        if left_compressed && sort_descending_if_not_worse(poly, &mut x) {
            iterations += ascend(poly, &mut x, config, &mut grad);
        }
        let raw = x.clone();
        let (mut y, pairs_covered) = match reduce_support(poly, &x, config, &mut grad) {
            Ok(reduced) => reduced,
            Err(_) => (x.clone(), false),
        };
        polish_with_newton(poly, &mut y, &mut grad);
        let value = poly.value(&y);
        let kkt = kkt_residual_with(poly, &y, &mut grad);
        let candidate = Trial {
            value,
            weighting: y.clone(),
            raw,
            kkt,
            iterations,
            converged: kkt <= config.kkt_tolerance,
            pairs_covered,
        };
        let improves = match &best {
            None => true,
            Some(b) => {
                candidate.value > b.value
                    || (candidate.value >= b.value - 1e-13 && candidate.converged && !b.converged)
            }
        };
        if improves {
            best = Some(candidate);
        }

        // off-support vertices whose link value beats r λ
        poly.gradient(&y, &mut grad);
        let target = poly.r() as f64 * value;
        let violators: Vec<usize> = (0..n)
            .filter(|&i| y[i] == 0.0 && grad[i] - target > config.kkt_tolerance)
            .collect();
        if violators.is_empty() || escape == MAX_ESCAPES || value <= 0.0 {
            break;
        }
        let share = ESCAPE_STEP / violators.len() as f64;
        x = y.iter().map(|v| v * (1.0 - ESCAPE_STEP)).collect();
        for i in violators {
            x[i] += share;
        }
    }
    let mut best = best.expect("at least one pass");
    best.iterations = iterations;
    best
}

/// Growth steps until the gain drops below the floor; returns the step count.
///
/// Every few steps, vertices whose removal does not lower the value are
/// dropped, and a Newton finish on the current support is attempted. Both
/// matter where the growth step alone converges sublinearly.
fn ascend(poly: &EdgePolynomial, x: &mut [f64], config: &SolverConfig, grad: &mut [f64]) -> usize {
    let mut value = poly.value(x);
    let mut steps = 0;
    while steps < config.max_iterations {
        if steps % DROP_PERIOD == DROP_PERIOD - 1 {
            value = drop_losing_vertices(poly, x, grad);
        }
        if steps % FINISH_PERIOD == FINISH_PERIOD - 1 {
            if let Some(y) = try_finish(poly, x, value, config, grad) {
                x.copy_from_slice(&y);
                break;
            }
        }
        if !crate::lagrangian::growth_step_in_place(poly, x, grad) {
            break;
        }
        steps += 1;
        let next = poly.value(x);
        let gain = next - value;
        value = next;
        if gain < config.step_gain_floor {
            break;
        }
    }
    steps
}

/// Zeroes vertex weights one at a time, smallest first, whenever the
/// renormalized result is at least as good. Since `λ` is affine in each
/// coordinate, removing `x_i` gives exactly `(λ - x_i g_i) / (1 - x_i)^r`.
fn drop_losing_vertices(poly: &EdgePolynomial, x: &mut [f64], grad: &mut [f64]) -> f64 {
    let r = poly.r() as i32;
    let mut value = poly.gradient(x, grad);
    let mut order: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 0.0).collect();
    order.sort_by(|&a, &b| x[a].total_cmp(&x[b]));
    for i in order {
        let xi = x[i];
        if xi >= 1.0 || grad[i] >= r as f64 * value {
            continue;
        }
        let dropped = (value - xi * grad[i]) / (1.0 - xi).powi(r);
        if dropped >= value && dropped > 0.0 {
            x[i] = 0.0;
            let sum: f64 = x.iter().sum();
            x.iter_mut().for_each(|w| *w /= sum);
            value = poly.gradient(x, grad);
        }
    }
    value
}

/// Newton on the current support, and on the support with light vertices
/// removed, after merging support pairs that share no edge; returns a point meeting the residual tolerance whose value is not
/// below `value`.
fn try_finish(
    poly: &EdgePolynomial,
    x: &[f64],
    value: f64,
    config: &SolverConfig,
    grad: &mut [f64],
) -> Option<Vec<f64>> {
    let heaviest = x.iter().copied().fold(0.0, f64::max);
    for cut in [0.0, 1e-6, 1e-3] {
        let mut y: Vec<f64> = x
            .iter()
            .map(|&w| if w > cut * heaviest { w } else { 0.0 })
            .collect();
        let sum: f64 = y.iter().sum();
        y.iter_mut().for_each(|w| *w /= sum);
        merge_uncovered_pairs(poly, &mut y, grad);
        if let Some(z) = newton_on_support(poly, &y, grad) {
            if poly.value(&z) >= value - 1e-13
                && kkt_residual_with(poly, &z, grad) <= config.kkt_tolerance
            {
                return Some(z);
            }
        }
    }
    None
}

/// Left-compressed graphs never lose value when heavier weights move to
/// smaller labels.
fn sort_descending_if_not_worse(poly: &EdgePolynomial, x: &mut [f64]) -> bool {
    if x.windows(2).all(|w| w[0] >= w[1]) {
        return false;
    }
    let mut sorted = x.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    if poly.value(&sorted) >= poly.value(x) {
        x.copy_from_slice(&sorted);
        true
    } else {
        false
    }
}

fn reduce_support(
    poly: &EdgePolynomial,
    x: &[f64],
    config: &SolverConfig,
    grad: &mut [f64],
) -> Result<(Vec<f64>, bool)> {
    let mut y = x.to_vec();
    for _ in 0..SUPPORT_ROUNDS {
        let mut dropped = false;
        for w in y.iter_mut() {
            if *w > 0.0 && *w <= config.support_threshold {
                *w = 0.0;
                dropped = true;
            }
        }
        let sum: f64 = y.iter().sum();
        if sum <= 0.0 {
            return Err(Error::DegenerateWeighting {
                threshold: config.support_threshold,
            });
        }
        y.iter_mut().for_each(|w| *w /= sum);
        let merged = merge_uncovered_pairs(poly, &mut y, grad);
        ascend(poly, &mut y, config, grad);
        let still_dusty = y.iter().any(|&w| w > 0.0 && w <= config.support_threshold);
        if !dropped && !merged && !still_dusty {
            break;
        }
    }
    let support: Vec<usize> = (0..y.len()).filter(|&i| y[i] > 0.0).collect();
    let covered = support.iter().enumerate().all(|(a, &i)| {
        support[a + 1..].iter().all(|&j| poly.covers_pair(i, j))
    });
    Ok((y, covered))
}

/// Moves all weight of one vertex onto the other for support pairs that share
/// no edge. Returns whether anything moved.
fn merge_uncovered_pairs(poly: &EdgePolynomial, y: &mut [f64], grad: &mut [f64]) -> bool {
    let mut moved = false;
    'scan: loop {
        poly.gradient(y, grad);
        let support: Vec<usize> = (0..y.len()).filter(|&i| y[i] > 0.0).collect();
        for (a, &i) in support.iter().enumerate() {
            for &j in &support[a + 1..] {
                if !poly.covers_pair(i, j) {
                    let (keep, drop) = if grad[i] >= grad[j] { (i, j) } else { (j, i) };
                    y[keep] += y[drop];
                    y[drop] = 0.0;
                    moved = true;
                    continue 'scan;
                }
            }
        }
        return moved;
    }
}

/// Polishes `x` with [`newton_on_support`], keeping the result only if it
/// lowers the residual without losing value.
fn polish_with_newton(poly: &EdgePolynomial, x: &mut [f64], grad: &mut [f64]) {
    let start_value = poly.value(x);
    let start_kkt = kkt_residual_with(poly, x, grad);
    if let Some(y) = newton_on_support(poly, x, grad) {
        if kkt_residual_with(poly, &y, grad) < start_kkt && poly.value(&y) >= start_value - 1e-13 {
            x.copy_from_slice(&y);
        }
    }
}

/// Newton's method on `λ(E_i, x) = μ (i ∈ S)`, `Σ_S x_i = 1` over the support
/// `S` of `x`. Returns the iterate with the smallest residual, or `None` if a
/// weight leaves the positive orthant or the system is singular.
fn newton_on_support(poly: &EdgePolynomial, x: &[f64], grad: &mut [f64]) -> Option<Vec<f64>> {
    let support: Vec<usize> = (0..x.len()).filter(|&i| x[i] > 0.0).collect();
    let k = support.len();
    if k < 2 {
        return None;
    }
    let mut y = x.to_vec();
    let mut mu = poly.r() as f64 * poly.value(x);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for _ in 0..NEWTON_STEPS {
        poly.gradient(&y, grad);
        let mut rhs = DVector::zeros(k + 1);
        for (a, &i) in support.iter().enumerate() {
            rhs[a] = -(grad[i] - mu);
        }
        rhs[k] = -(support.iter().map(|&i| y[i]).sum::<f64>() - 1.0);
        let norm = rhs.amax();
        match &best {
            Some((b, _)) if norm >= *b => break,
            _ => best = Some((norm, y.clone())),
        }
        if norm == 0.0 {
            break;
        }
        let mut jac = DMatrix::zeros(k + 1, k + 1);
        jac.view_mut((0, 0), (k, k)).copy_from(&poly.hessian_on(&y, &support));
        for a in 0..k {
            jac[(a, k)] = -1.0;
            jac[(k, a)] = 1.0;
        }
        let step = jac.lu().solve(&rhs)?;
        for (a, &i) in support.iter().enumerate() {
            y[i] += step[a];
            if y[i].is_nan() || y[i] <= 0.0 {
                return None;
            }
        }
        mu += step[k];
    }
    let (_, mut y) = best?;
    let sum: f64 = y.iter().sum();
    y.iter_mut().for_each(|w| *w /= sum);
    Some(y)
}

/// Zeroes weights at or below `threshold`, merges support pairs that share no
/// edge, and climbs again from the result.
pub fn minimize_support(
    g: &RUniformHypergraph,
    x: &Weighting,
    threshold: f64,
) -> Result<SupportReduction> {
    if x.len() != g.n() {
        return Err(Error::DimensionMismatch {
            expected: g.n(),
            found: x.len(),
        });
    }
    if x.as_slice().iter().all(|&w| w <= threshold) {
        return Err(Error::DegenerateWeighting { threshold });
    }
    let config = SolverConfig {
        support_threshold: threshold,
        ..SolverConfig::default()
    };
    let poly = EdgePolynomial::new(g);
    let mut grad = vec![0.0; g.n()];
    let (y, pairs_covered) = reduce_support(&poly, x.as_slice(), &config, &mut grad)?;
    let value = poly.value(&y);
    let weighting = Weighting::from_raw_unchecked(y);
    Ok(SupportReduction {
        support: weighting.support(0.0),
        weighting,
        value,
        pairs_covered,
    })
}
