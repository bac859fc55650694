//! Verification sweeps comparing Lagrangians of left-compressed graphs with
//! `λ([t-1]^(r))`.
//!
//! The solver certifies lower bounds only, so strict inequalities can be
//! refuted but a pass means "every certified value sits below the bound by
//! more than the tolerance". All enumerated families consist of
//! left-compressed graphs.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_integer::binomial;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::enumerate::{enumerate_left_compressed, enumerate_left_compressed_any_order, EnumerationBudget};
use super::report::{InstanceRecord, Relation, Verdict, VerificationReport, Witness};
use crate::clique::{contains_near_clique, max_clique_order};
use crate::error::{Error, Result};
use crate::hypergraph::RUniformHypergraph;
use crate::lagrangian::{complete_lagrangian, evaluate};
use crate::link::for_each_subset;
use crate::solver::{solve, SolveReport, SolverConfig};
use crate::weighting::Weighting;

/// The statements the harness can check. The string forms are the
/// identifiers used on the command line and in reports.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// `λ(C_{r,m}) = λ([t-1]^(r))` across the plateau range.
    ColexPlateau,
    /// Graphs with a `(t-1)`-clique on the plateau range match `λ([t-1]^(r))`.
    CliqueEquality,
    /// Graphs without a `(t-1)`-clique on the plateau range fall strictly below.
    CliqueFreeStrict,
    /// 3-graphs containing `K_{t-1}^-` but not `K_{t-1}` fall strictly below.
    NearCliqueStrict,
    /// 3-graphs on `[t]` without `K_{t-1}` and with at most three edges through `{t-1, t}`.
    SmallPairLinkStrict,
    /// 3-graphs on `[t]` without `K_{t-1}` within six edges of `C_{3,m}`.
    NearColexStrict,
    /// 3-graphs whose maximum clique has order exactly `t-2` fall strictly below.
    MaxCliqueTwoShortStrict,
    /// r-graphs (r ≥ 4) on `[t]` with a `(t-2)`-clique stay at or below.
    CliqueTwoShortBounded,
    /// 4-graphs containing `[t-1]^(4)` match `λ([t-1]^(4))`.
    FourGraphCliqueEquality,
    /// No left-compressed 3-graph beats `C_{3,m}`.
    ColexOptimal,
    /// One edge past the plateau, `C_{r,m}` exceeds `λ([t-1]^(r))`.
    Sharpness,
}

impl ClaimId {
    pub const ALL: [ClaimId; 11] = [
        ClaimId::ColexPlateau,
        ClaimId::CliqueEquality,
        ClaimId::CliqueFreeStrict,
        ClaimId::NearCliqueStrict,
        ClaimId::SmallPairLinkStrict,
        ClaimId::NearColexStrict,
        ClaimId::MaxCliqueTwoShortStrict,
        ClaimId::CliqueTwoShortBounded,
        ClaimId::FourGraphCliqueEquality,
        ClaimId::ColexOptimal,
        ClaimId::Sharpness,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            ClaimId::ColexPlateau => "lemma-2.2",
            ClaimId::CliqueEquality => "conjecture-2.1",
            ClaimId::CliqueFreeStrict => "conjecture-2.2",
            ClaimId::NearCliqueStrict => "theorem-3.1",
            ClaimId::SmallPairLinkStrict => "corollary-3.1",
            ClaimId::NearColexStrict => "corollary-3.2",
            ClaimId::MaxCliqueTwoShortStrict => "theorem-4.1",
            ClaimId::CliqueTwoShortBounded => "theorem-4.2",
            ClaimId::FourGraphCliqueEquality => "theorem-4.3",
            ClaimId::ColexOptimal => "theorem-5.1",
            ClaimId::Sharpness => "sharpness",
        }
    }

    fn fixed_r(self) -> Option<usize> {
        match self {
            ClaimId::NearCliqueStrict
            | ClaimId::SmallPairLinkStrict
            | ClaimId::NearColexStrict
            | ClaimId::MaxCliqueTwoShortStrict
            | ClaimId::ColexOptimal => Some(3),
            ClaimId::FourGraphCliqueEquality => Some(4),
            _ => None,
        }
    }

    fn default_r(self) -> usize {
        match self {
            ClaimId::CliqueTwoShortBounded => 4,
            other => other.fixed_r().unwrap_or(3),
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClaimId::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| {
                let known: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
                Error::InvalidParameters(format!("unknown claim `{s}`; expected one of {}", known.join(", ")))
            })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, rename_all = "kebab-case", deny_unknown_fields)]
pub struct HarnessConfig {
    pub solver: SolverConfig,
    pub budget: EnumerationBudget,
    /// For r = 3, every m is checked up to this t; above it the endpoints
    /// plus `samples` random values of m.
    pub exhaustive_max_t: usize,
    pub samples: usize,
    pub max_witnesses: usize,
}

impl Default for HarnessConfig {
    fn default() -> Self {
        Self {
            solver: SolverConfig::default(),
            budget: EnumerationBudget::default(),
            exhaustive_max_t: 7,
            samples: 3,
            max_witnesses: 16,
        }
    }
}

/// A claim with its parameters, as given on the command line.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimRequest {
    pub claim: ClaimId,
    pub t: usize,
    pub r: Option<usize>,
    pub m: Option<usize>,
}

pub fn run_claim(req: &ClaimRequest, cfg: &HarnessConfig) -> Result<VerificationReport> {
    let r = match (req.claim.fixed_r(), req.r) {
        (Some(fixed), Some(r)) if r != fixed => {
            return Err(Error::InvalidParameters(format!(
                "{} is stated for r = {fixed}, got r = {r}",
                req.claim
            )))
        }
        (_, r) => r.unwrap_or(req.claim.default_r()),
    };
    let (t, m) = (req.t, req.m);
    match req.claim {
        ClaimId::ColexPlateau => verify_colex_range(r, t, m, cfg),
        ClaimId::CliqueEquality => verify_clique_equality(r, t, m, cfg),
        ClaimId::CliqueFreeStrict => verify_clique_free_strict(r, t, m, cfg),
        ClaimId::NearCliqueStrict => verify_near_clique_strict(t, m, cfg),
        ClaimId::SmallPairLinkStrict => verify_small_pair_link_strict(t, m, cfg),
        ClaimId::NearColexStrict => verify_near_colex_strict(t, m, cfg),
        ClaimId::MaxCliqueTwoShortStrict => verify_max_clique_two_short_strict(t, m, cfg),
        ClaimId::CliqueTwoShortBounded => verify_clique_two_short_bounded(r, t, m, cfg),
        ClaimId::FourGraphCliqueEquality => verify_four_graph_clique_equality(t, m, cfg),
        ClaimId::ColexOptimal => verify_colex_optimality(t, m, cfg),
        ClaimId::Sharpness => {
            if m.is_some() {
                return Err(Error::InvalidParameters("sharpness fixes m; drop --m".into()));
            }
            verify_sharpness(r, t, cfg)
        }
    }
}

fn choose(n: usize, k: usize) -> i128 {
    binomial(n as i128, k as i128)
}

/// `C(t-1, r) + C(t-2, r-1)`, the top of the plateau.
fn plateau_top(r: usize, t: usize) -> i128 {
    choose(t - 1, r) + choose(t - 2, r - 1)
}

enum Source {
    Colex,
    AnyOrder,
    OnT,
}

type Filter<'a> = dyn Fn(&RUniformHypergraph) -> Result<bool> + Sync + 'a;

struct Sweep<'a> {
    claim: ClaimId,
    r: usize,
    t: usize,
    low: i128,
    high: i128,
    m: Option<usize>,
    relation: Relation,
    source: Source,
    filter: &'a Filter<'a>,
    structural: bool,
    colex_bound: bool,
    notes: Vec<String>,
}

struct Candidate {
    m: usize,
    graph: RUniformHypergraph,
    bound: f64,
    bound_converged: bool,
    structural: Option<bool>,
}

fn check_t(r: usize, t: usize) -> Result<()> {
    if r < 2 || t < r + 1 {
        return Err(Error::InvalidParameters(format!(
            "need r >= 2 and t >= r + 1, got r = {r}, t = {t}"
        )));
    }
    Ok(())
}

impl Sweep<'_> {
    fn values_of_m(&self, cfg: &HarnessConfig, parameters: &mut BTreeMap<String, u64>, notes: &mut Vec<String>) -> Result<Vec<usize>> {
        let (low, high) = (self.low, self.high);
        parameters.insert("m_min".into(), low as u64);
        if high >= 0 {
            parameters.insert("m_max".into(), high as u64);
        }
        if let Some(m) = self.m {
            parameters.insert("m".into(), m as u64);
            if high < low {
                notes.push(format!(
                    "the stated range is empty (upper end {high} is below {low}); m = {m} checked on request"
                ));
                return Ok(vec![m]);
            }
            if (m as i128) < low || (m as i128) > high {
                return Err(Error::InvalidParameters(format!(
                    "m = {m} lies outside [{low}, {high}]"
                )));
            }
            return Ok(vec![m]);
        }
        if high < low {
            notes.push(format!(
                "the stated range is empty (upper end {high} is below {low}); nothing to check"
            ));
            return Ok(Vec::new());
        }
        let (low, high) = (low as usize, high as usize);
        let all = matches!(self.claim, ClaimId::ColexPlateau)
            || (self.r == 3 && self.t <= cfg.exhaustive_max_t);
        if all {
            return Ok((low..=high).collect());
        }
        let mut ms = vec![low, high];
        if self.r == 3 {
            let mut rng = ChaCha8Rng::seed_from_u64(cfg.solver.seed);
            rng.set_stream(self.t as u64);
            for _ in 0..cfg.samples {
                ms.push(rng.random_range(low..=high));
            }
        }
        ms.sort_unstable();
        ms.dedup();
        let listed: Vec<String> = ms.iter().map(|m| m.to_string()).collect();
        let how = if self.r == 3 { "endpoints and random samples" } else { "endpoints only" };
        notes.push(format!("m in [{low}, {high}] checked at {how}: {}", listed.join(", ")));
        Ok(ms)
    }

    fn run(mut self, cfg: &HarnessConfig) -> Result<VerificationReport> {
        check_t(self.r, self.t)?;
        cfg.solver.validate()?;
        let (r, t) = (self.r, self.t);
        let reference = complete_lagrangian(t - 1, r)?;
        let mut parameters = BTreeMap::new();
        parameters.insert("r".to_string(), r as u64);
        parameters.insert("t".to_string(), t as u64);
        if matches!(self.source, Source::OnT) {
            parameters.insert("n".to_string(), t as u64);
        }
        let mut notes = std::mem::take(&mut self.notes);
        let ms = self.values_of_m(cfg, &mut parameters, &mut notes)?;

        let mut candidates = Vec::new();
        for &m in &ms {
            let graphs = match self.source {
                Source::Colex => vec![RUniformHypergraph::colex(r, m)?],
                Source::AnyOrder => enumerate_left_compressed_any_order(r, m, &cfg.budget)?,
                Source::OnT => enumerate_left_compressed(r, m, t, &cfg.budget)?,
            };
            let (bound, bound_converged) = if self.colex_bound {
                let rep = solve(&RUniformHypergraph::colex(r, m)?, &cfg.solver)?;
                (rep.value, rep.converged)
            } else {
                (reference, true)
            };
            for g in graphs {
                if !(self.filter)(&g)? {
                    continue;
                }
                let structural = if self.structural {
                    Some(vertex_pair_link_inequality(&g, t)?.holds)
                } else {
                    None
                };
                candidates.push(Candidate {
                    m,
                    graph: g,
                    bound,
                    bound_converged,
                    structural,
                });
                if candidates.len() > cfg.budget.max_instances {
                    return Err(Error::ResourceLimit {
                        limit: "enumerated instances",
                        requested: candidates.len(),
                        allowed: cfg.budget.max_instances,
                    });
                }
            }
        }

        let solved = solve_all(&candidates, &cfg.solver)?;
        let tol = cfg.solver.equality_tolerance;
        let records: Vec<InstanceRecord> = candidates
            .iter()
            .zip(&solved)
            .map(|(c, s)| {
                let converged = s.converged && c.bound_converged;
                InstanceRecord {
                    m: c.m,
                    n: c.graph.n(),
                    edge_hash: c.graph.edge_hash(),
                    value: s.value,
                    reference,
                    bound: c.bound,
                    margin: s.value - c.bound,
                    verdict: self.relation.judge(s.value, c.bound, tol, converged),
                    converged,
                    structural: c.structural,
                }
            })
            .collect();

        if self.structural && !records.is_empty() {
            let holding = records.iter().filter(|r| r.structural == Some(true)).count();
            notes.push(format!(
                "link-size inequality |[t-2]^(r-1) \\ E_t| >= 2^(r-3) |E_(t-1)t| holds for {holding} of {} instances",
                records.len()
            ));
        }
        if matches!(self.claim, ClaimId::ColexOptimal) {
            notes.extend(support_structure_notes(&ms, &candidates, &solved));
        }

        let witnesses = pick_witnesses(&candidates, &solved, &records, cfg.max_witnesses);
        Ok(VerificationReport::assemble(
            self.claim.as_str(),
            parameters,
            self.relation,
            records,
            witnesses,
            notes,
        ))
    }
}

fn solve_all(candidates: &[Candidate], cfg: &SolverConfig) -> Result<Vec<SolveReport>> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        candidates.par_iter().map(|c| solve(&c.graph, cfg)).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        candidates.iter().map(|c| solve(&c.graph, cfg)).collect()
    }
}

/// Every failing or inconclusive instance (up to `limit`), plus the instance
/// closest to violating the relation.
fn pick_witnesses(
    candidates: &[Candidate],
    solved: &[SolveReport],
    records: &[InstanceRecord],
    limit: usize,
) -> Vec<Witness> {
    let mut picked: Vec<usize> = (0..records.len())
        .filter(|&i| records[i].verdict == Verdict::Fail)
        .chain((0..records.len()).filter(|&i| records[i].verdict == Verdict::Inconclusive))
        .take(limit.max(1))
        .collect();
    if let Some(tightest) = (0..records.len()).max_by(|&a, &b| {
        records[a]
            .margin
            .total_cmp(&records[b].margin)
            .then(b.cmp(&a))
    }) {
        if !picked.contains(&tightest) {
            picked.push(tightest);
        }
    }
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|i| {
            let (c, s, rec) = (&candidates[i], &solved[i], &records[i]);
            Witness {
                m: rec.m,
                n: rec.n,
                edge_hash: rec.edge_hash.clone(),
                graph: c.graph.to_text(),
                value: rec.value,
                reference: rec.reference,
                bound: rec.bound,
                margin: rec.margin,
                verdict: rec.verdict,
                weighting: s.weighting.as_slice().to_vec(),
            }
        })
        .collect()
}

/// For the best graph at each m, with `k` positive weights, checks that
/// `[k-1]^(3)` misses at most `k-2` edges.
fn support_structure_notes(ms: &[usize], candidates: &[Candidate], solved: &[SolveReport]) -> Vec<String> {
    let mut notes = Vec::new();
    for &m in ms {
        let best = (0..candidates.len())
            .filter(|&i| candidates[i].m == m)
            .max_by(|&a, &b| solved[a].value.total_cmp(&solved[b].value).then(b.cmp(&a)));
        let Some(i) = best else { continue };
        let g = &candidates[i].graph;
        let k = solved[i].support.len();
        if k < 1 {
            continue;
        }
        let prefix: Vec<u32> = (1..k as u32).collect();
        let missing = choose(k - 1, 3) as usize - g.induced_edge_count(&prefix);
        let ok = missing + 2 <= k;
        notes.push(format!(
            "m = {m}: best graph {} has support size {k}, misses {missing} triples of [{}] (at most {} expected): {}",
            g.edge_hash(),
            k - 1,
            k.saturating_sub(2),
            if ok { "ok" } else { "violated" }
        ));
    }
    notes
}

fn accept_all(_: &RUniformHypergraph) -> Result<bool> {
    Ok(true)
}

pub fn verify_colex_range(r: usize, t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(r, t)?;
    Sweep {
        claim: ClaimId::ColexPlateau,
        r,
        t,
        low: choose(t - 1, r),
        high: plateau_top(r, t),
        m,
        relation: Relation::Equal,
        source: Source::Colex,
        filter: &accept_all,
        structural: false,
        colex_bound: false,
        notes: Vec::new(),
    }
    .run(cfg)
}

pub fn verify_clique_equality(r: usize, t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(r, t)?;
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 1 >= t);
    Sweep {
        claim: ClaimId::CliqueEquality,
        r,
        t,
        low: choose(t - 1, r),
        high: plateau_top(r, t),
        m,
        relation: Relation::Equal,
        source: Source::AnyOrder,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes: vec![restriction_note()],
    }
    .run(cfg)
}

pub fn verify_clique_free_strict(r: usize, t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(r, t)?;
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 1 < t);
    let mut notes = vec![restriction_note(), strict_note()];
    if r == 3 {
        let proven = plateau_top(3, t) - (t as i128 - 2);
        notes.push(format!(
            "for r = 3 the strict inequality is established for m <= {proven}; larger m test the open statement"
        ));
    }
    Sweep {
        claim: ClaimId::CliqueFreeStrict,
        r,
        t,
        low: choose(t - 1, r),
        high: plateau_top(r, t),
        m,
        relation: Relation::Less,
        source: Source::AnyOrder,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes,
    }
    .run(cfg)
}

pub fn verify_near_clique_strict(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    if t < 6 {
        return Err(Error::InvalidParameters(format!("requires t >= 6, got t = {t}")));
    }
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 1 < t && contains_near_clique(g, t));
    Sweep {
        claim: ClaimId::NearCliqueStrict,
        r: 3,
        t,
        low: choose(t - 1, 3),
        high: plateau_top(3, t),
        m,
        relation: Relation::Less,
        source: Source::AnyOrder,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes: vec![restriction_note(), strict_note()],
    }
    .run(cfg)
}

/// Number of edges containing both `i` and `j`.
fn pair_degree(g: &RUniformHypergraph, i: u32, j: u32) -> usize {
    g.edges().filter(|e| e.contains(i) && e.contains(j)).count()
}

pub fn verify_small_pair_link_strict(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(3, t)?;
    let top = t as u32;
    let filter = move |g: &RUniformHypergraph| {
        Ok(max_clique_order(g)? + 1 < t && pair_degree(g, top - 1, top) <= 3)
    };
    Sweep {
        claim: ClaimId::SmallPairLinkStrict,
        r: 3,
        t,
        low: choose(t - 1, 3),
        high: plateau_top(3, t),
        m,
        relation: Relation::Less,
        source: Source::OnT,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes: vec![restriction_note(), strict_note()],
    }
    .run(cfg)
}

pub fn verify_near_colex_strict(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(3, t)?;
    let filter = move |g: &RUniformHypergraph| {
        let colex = RUniformHypergraph::colex(3, g.edge_count())?;
        Ok(max_clique_order(g)? + 1 < t && g.symmetric_difference_size(&colex) <= 6)
    };
    Sweep {
        claim: ClaimId::NearColexStrict,
        r: 3,
        t,
        low: choose(t - 1, 3),
        high: plateau_top(3, t),
        m,
        relation: Relation::Less,
        source: Source::OnT,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes: vec![restriction_note(), strict_note()],
    }
    .run(cfg)
}

pub fn verify_max_clique_two_short_strict(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(3, t)?;
    // largest m with 2m <= 2 (C(t-1,3) + C(t-2,2)) - (t-2)
    let high = (2 * plateau_top(3, t) - (t as i128 - 2)).div_euclid(2);
    let mut notes = vec![restriction_note(), strict_note()];
    if t % 2 == 1 {
        notes.push(format!(
            "upper end {} - {}/2 is not an integer; m runs up to {high}",
            plateau_top(3, t),
            t - 2
        ));
    }
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 2 == t);
    Sweep {
        claim: ClaimId::MaxCliqueTwoShortStrict,
        r: 3,
        t,
        low: choose(t - 1, 3),
        high,
        m,
        relation: Relation::Less,
        source: Source::AnyOrder,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes,
    }
    .run(cfg)
}

pub fn verify_clique_two_short_bounded(r: usize, t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    if r < 4 {
        return Err(Error::InvalidParameters(format!("requires r >= 4, got r = {r}")));
    }
    check_t(r, t)?;
    let high = plateau_top(r, t) - (1i128 << (r - 2)) * (choose(t - 2, r - 2) - 1);
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 2 >= t);
    Sweep {
        claim: ClaimId::CliqueTwoShortBounded,
        r,
        t,
        low: choose(t - 1, r),
        high,
        m,
        relation: Relation::LessOrEqual,
        source: Source::OnT,
        filter: &filter,
        structural: true,
        colex_bound: false,
        notes: vec![restriction_note()],
    }
    .run(cfg)
}

pub fn verify_four_graph_clique_equality(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(4, t)?;
    let high = choose(t - 1, 4) + choose((t - 2) / 2, 3);
    let filter = move |g: &RUniformHypergraph| Ok(max_clique_order(g)? + 1 >= t);
    Sweep {
        claim: ClaimId::FourGraphCliqueEquality,
        r: 4,
        t,
        low: choose(t - 1, 4),
        high,
        m,
        relation: Relation::Equal,
        source: Source::AnyOrder,
        filter: &filter,
        structural: false,
        colex_bound: false,
        notes: vec![restriction_note()],
    }
    .run(cfg)
}

pub fn verify_colex_optimality(t: usize, m: Option<usize>, cfg: &HarnessConfig) -> Result<VerificationReport> {
    check_t(3, t)?;
    Sweep {
        claim: ClaimId::ColexOptimal,
        r: 3,
        t,
        low: choose(t - 1, 3),
        high: plateau_top(3, t) - (t as i128 - 4),
        m,
        relation: Relation::LessOrEqual,
        source: Source::AnyOrder,
        filter: &accept_all,
        structural: false,
        colex_bound: true,
        notes: vec![
            restriction_note(),
            "each graph is compared with the certified value of C_{3,m} (bound); reference is λ([t-1]^(3))".into(),
        ],
    }
    .run(cfg)
}

/// The weighting `1/(t-1)` on `1..=t-2` and `1/(2(t-1))` on `t-1` and `t`.
pub fn sharpness_weighting(t: usize) -> Result<Weighting> {
    if t < 3 {
        return Err(Error::InvalidParameters(format!("requires t >= 3, got t = {t}")));
    }
    let full = 1.0 / (t - 1) as f64;
    let mut w = vec![full; t - 2];
    w.extend([full / 2.0, full / 2.0]);
    Weighting::normalized(w)
}

pub fn verify_sharpness(r: usize, t: usize, cfg: &HarnessConfig) -> Result<VerificationReport> {
    if r < 2 || t < r + 2 {
        return Err(Error::InvalidParameters(format!(
            "requires t >= r + 2, got r = {r}, t = {t}"
        )));
    }
    let m = plateau_top(r, t) as usize + 1;
    let g = RUniformHypergraph::colex(r, m)?;
    let x = sharpness_weighting(t)?;
    let value = evaluate(&g, &x)?;
    let reference = complete_lagrangian(t - 1, r)?;
    let record = InstanceRecord {
        m,
        n: g.n(),
        edge_hash: g.edge_hash(),
        value,
        reference,
        bound: reference,
        margin: value - reference,
        verdict: Relation::Greater.judge(value, reference, cfg.solver.equality_tolerance, true),
        converged: true,
        structural: None,
    };
    let witness = Witness {
        m,
        n: g.n(),
        edge_hash: record.edge_hash.clone(),
        graph: g.to_text(),
        value,
        reference,
        bound: reference,
        margin: record.margin,
        verdict: record.verdict,
        weighting: x.into_vec(),
    };
    let mut parameters = BTreeMap::new();
    parameters.insert("r".to_string(), r as u64);
    parameters.insert("t".to_string(), t as u64);
    parameters.insert("m".to_string(), m as u64);
    Ok(VerificationReport::assemble(
        ClaimId::Sharpness.as_str(),
        parameters,
        Relation::Greater,
        vec![record],
        vec![witness],
        vec!["value is the exact evaluation of the listed weighting, a lower bound on λ(C_{r,m})".into()],
    ))
}

fn restriction_note() -> String {
    "instances are left-compressed graphs only; pass means no left-compressed counterexample".into()
}

fn strict_note() -> String {
    "values are certified lower bounds; a value within the tolerance of the bound is inconclusive".into()
}

/// Both sides of `|[t-2]^(r-1) \ E_t| >= 2^(r-3) |E_(t-1)t|`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairLinkInequality {
    pub left: u64,
    pub right: u64,
    pub holds: bool,
}

/// Compares the (r-1)-sets of `[t-2]` missing from the link of `t` with the
/// size of the pair link of `{t-1, t}`, scaled by `2^(r-3)`.
pub fn vertex_pair_link_inequality(g: &RUniformHypergraph, t: usize) -> Result<PairLinkInequality> {
    let r = g.r();
    if r < 3 {
        return Err(Error::InvalidParameters(format!("requires r >= 3, got r = {r}")));
    }
    if g.n() != t {
        return Err(Error::InvalidParameters(format!(
            "graph has {} vertices, expected exactly t = {t}",
            g.n()
        )));
    }
    let (top, second) = (t as u32, t as u32 - 1);
    let pool: Vec<u32> = (1..=t as u32 - 2).collect();
    let mut left = 0u64;
    let mut buf = Vec::with_capacity(r);
    for_each_subset(&pool, r - 1, &mut Vec::with_capacity(r), &mut |s| {
        buf.clear();
        buf.extend_from_slice(s);
        buf.push(top);
        if !g.contains_sorted(&buf) {
            left += 1;
        }
    });
    let mut pair = 0u64;
    for_each_subset(&pool, r - 2, &mut Vec::with_capacity(r), &mut |s| {
        buf.clear();
        buf.extend_from_slice(s);
        buf.extend([second, top]);
        if g.contains_sorted(&buf) {
            pair += 1;
        }
    });
    let right = (1u64 << (r - 3)) * pair;
    Ok(PairLinkInequality {
        left,
        right,
        holds: left >= right,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rset::RSet;

    #[test]
    fn claim_ids_round_trip() {
        for c in ClaimId::ALL {
            assert_eq!(c.as_str().parse::<ClaimId>().unwrap(), c);
        }
        assert!("lemma-9.9".parse::<ClaimId>().is_err());
    }

    #[test]
    fn pair_link_inequality_examples() {
        let complete = RUniformHypergraph::complete(6, 3).unwrap();
        let p = vertex_pair_link_inequality(&complete, 6).unwrap();
        assert_eq!((p.left, p.right, p.holds), (0, 4, false));

        let without_top: Vec<RSet> = complete.edges().filter(|e| !e.contains(6)).cloned().collect();
        let g = RUniformHypergraph::new(3, 6, without_top).unwrap();
        let p = vertex_pair_link_inequality(&g, 6).unwrap();
        assert_eq!((p.left, p.right, p.holds), (6, 0, true));

        // C_{3,12} on [6]: link of 6 is {12, 13}; no edge holds both 5 and 6
        let c = RUniformHypergraph::colex(3, 12).unwrap().with_vertex_count(6).unwrap();
        let p = vertex_pair_link_inequality(&c, 6).unwrap();
        assert_eq!((p.left, p.right), (4, 0));

        let k4 = RUniformHypergraph::complete(6, 4).unwrap();
        let p = vertex_pair_link_inequality(&k4, 6).unwrap();
        assert_eq!((p.left, p.right), (0, 2 * 6));

        assert!(vertex_pair_link_inequality(&c, 7).is_err());
    }

    #[test]
    fn sharpness_weighting_sums_to_one() {
        let w = sharpness_weighting(6).unwrap();
        assert_eq!(w.as_slice(), &[0.2, 0.2, 0.2, 0.2, 0.1, 0.1]);
    }

    #[test]
    fn fixed_uniformity_is_enforced() {
        let cfg = HarnessConfig::default();
        let req = ClaimRequest {
            claim: ClaimId::NearCliqueStrict,
            t: 6,
            r: Some(4),
            m: None,
        };
        assert!(run_claim(&req, &cfg).is_err());
        let req = ClaimRequest {
            claim: ClaimId::NearCliqueStrict,
            t: 5,
            r: None,
            m: None,
        };
        assert!(matches!(run_claim(&req, &cfg), Err(Error::InvalidParameters(_))));
    }

    #[test]
    fn empty_range_is_vacuous() {
        let rep = verify_clique_two_short_bounded(4, 8, None, &HarnessConfig::default()).unwrap();
        assert_eq!(rep.verdict, Verdict::Pass);
        assert_eq!(rep.instances_checked, 0);
        assert!(!rep.notes.is_empty());
    }
}
