use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        }
    }

    /// Fail dominates inconclusive, which dominates pass.
    pub fn combine(verdicts: impl IntoIterator<Item = Verdict>) -> Verdict {
        let mut out = Verdict::Pass;
        for v in verdicts {
            match v {
                Verdict::Fail => return Verdict::Fail,
                Verdict::Inconclusive => out = Verdict::Inconclusive,
                Verdict::Pass => {}
            }
        }
        out
    }
}

/// How a certified value is compared with its bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equal,
    Less,
    LessOrEqual,
    Greater,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Equal => "=",
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
            Relation::Greater => ">",
        }
    }

    /// Verdict for a value that is a lower bound on the true quantity.
    ///
    /// A value below a strict bound by less than `tolerance` is inconclusive,
    /// as is an equality target missed from below. Unconverged values can
    /// still fail but never pass.
    pub fn judge(self, value: f64, bound: f64, tolerance: f64, converged: bool) -> Verdict {
        let verdict = match self {
            Relation::Less if value < bound - tolerance => Verdict::Pass,
            Relation::Less if value > bound + tolerance => Verdict::Fail,
            Relation::Less => Verdict::Inconclusive,
            Relation::Equal if (value - bound).abs() <= tolerance => Verdict::Pass,
            Relation::Equal if value > bound => Verdict::Fail,
            Relation::Equal => Verdict::Inconclusive,
            Relation::LessOrEqual if value <= bound + tolerance => Verdict::Pass,
            Relation::LessOrEqual => Verdict::Fail,
            Relation::Greater if value > bound + tolerance => Verdict::Pass,
            Relation::Greater => Verdict::Fail,
        };
        if verdict == Verdict::Pass && !converged {
            Verdict::Inconclusive
        } else {
            verdict
        }
    }
}

/// One checked graph.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InstanceRecord {
    pub m: usize,
    pub n: usize,
    pub edge_hash: String,
    pub value: f64,
    pub reference: f64,
    /// The value is compared against this; equal to `reference` unless the
    /// claim compares against another graph.
    pub bound: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub converged: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub structural: Option<bool>,
}

/// A checked graph reported in full.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub m: usize,
    pub n: usize,
    pub edge_hash: String,
    /// The graph in the plain-text hypergraph format.
    pub graph: String,
    pub value: f64,
    pub reference: f64,
    pub bound: f64,
    pub margin: f64,
    pub verdict: Verdict,
    pub weighting: Vec<f64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictCounts {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MarginSummary {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub parameters: BTreeMap<String, u64>,
    pub relation: Relation,
    pub verdict: Verdict,
    pub instances_checked: usize,
    pub counts: VerdictCounts,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub margins: Option<MarginSummary>,
    pub witnesses: Vec<Witness>,
    pub notes: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runtime_seconds: Option<f64>,
    #[serde(skip)]
    pub instances: Vec<InstanceRecord>,
}

impl VerificationReport {
    pub(crate) fn assemble(
        claim_id: &str,
        parameters: BTreeMap<String, u64>,
        relation: Relation,
        instances: Vec<InstanceRecord>,
        witnesses: Vec<Witness>,
        notes: Vec<String>,
    ) -> Self {
        let mut counts = VerdictCounts::default();
        for rec in &instances {
            match rec.verdict {
                Verdict::Pass => counts.pass += 1,
                Verdict::Fail => counts.fail += 1,
                Verdict::Inconclusive => counts.inconclusive += 1,
            }
        }
        let margins = (!instances.is_empty()).then(|| MarginSummary {
            min: instances.iter().map(|r| r.margin).fold(f64::INFINITY, f64::min),
            max: instances.iter().map(|r| r.margin).fold(f64::NEG_INFINITY, f64::max),
            mean: instances.iter().map(|r| r.margin).sum::<f64>() / instances.len() as f64,
        });
        Self {
            claim_id: claim_id.to_owned(),
            parameters,
            relation,
            verdict: Verdict::combine(instances.iter().map(|r| r.verdict)),
            instances_checked: instances.len(),
            counts,
            margins,
            witnesses,
            notes,
            runtime_seconds: None,
            instances,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    /// One row per checked instance.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["m", "n", "edge_hash", "value", "reference", "bound", "margin", "verdict"])
            .map_err(csv_error)?;
        for rec in &self.instances {
            w.serialize((
                rec.m,
                rec.n,
                &rec.edge_hash,
                rec.value,
                rec.reference,
                rec.bound,
                rec.margin,
                rec.verdict.as_str(),
            ))
            .map_err(csv_error)?;
        }
        let bytes = w
            .into_inner()
            .map_err(|e| Error::InvalidParameters(format!("csv output: {}", e.error())))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        let _ = writeln!(s, "claim      {}", self.claim_id);
        let _ = writeln!(s, "parameters {}", params.join(" "));
        let _ = writeln!(s, "relation   value {} bound", self.relation.symbol());
        let _ = writeln!(s, "verdict    {}", self.verdict.as_str());
        let _ = writeln!(
            s,
            "instances  {} (pass {}, fail {}, inconclusive {})",
            self.instances_checked, self.counts.pass, self.counts.fail, self.counts.inconclusive
        );
        if let Some(m) = &self.margins {
            let _ = writeln!(
                s,
                "margins    min {} max {} mean {}",
                sig15(m.min),
                sig15(m.max),
                sig15(m.mean)
            );
        }
        if let Some(t) = self.runtime_seconds {
            let _ = writeln!(s, "runtime    {t:.3}s");
        }
        for note in &self.notes {
            let _ = writeln!(s, "note       {note}");
        }
        for w in &self.witnesses {
            let _ = writeln!(
                s,
                "witness    m={} n={} hash={} value={} reference={} bound={} margin={} verdict={}",
                w.m,
                w.n,
                w.edge_hash,
                sig15(w.value),
                sig15(w.reference),
                sig15(w.bound),
                sig15(w.margin),
                w.verdict.as_str()
            );
            for line in w.graph.lines() {
                let _ = writeln!(s, "    {line}");
            }
        }
        s
    }
}

fn csv_error(e: csv::Error) -> Error {
    Error::InvalidParameters(format!("csv output: {e}"))
}

/// Formats with 15 significant digits, dropping trailing zeros.
pub fn sig15(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let exp = v.abs().log10().floor() as i32;
    if (-5..15).contains(&exp) {
        let decimals = (14 - exp).max(0) as usize;
        let s = format!("{v:.decimals$}");
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_owned()
        } else {
            s
        }
    } else {
        let s = format!("{v:.14e}");
        let (mantissa, exponent) = s.split_once('e').expect("scientific format");
        let mantissa = mantissa.trim_end_matches('0').trim_end_matches('.');
        format!("{mantissa}e{exponent}")
    }
}
