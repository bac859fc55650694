use std::fs;
use std::path::Path;

use hyperlag::harness::{EnumerationBudget, HarnessConfig};
use hyperlag::SolverConfig;

use crate::{CliError, CliResult, SolverFlags};

pub const SEED_VAR: &str = "HYPERLAG_SEED";

/// Defaults, then `$HYPERLAG_SEED`, then the config file, then flags.
pub fn load(path: Option<&Path>) -> CliResult<HarnessConfig> {
    let mut table = match path {
        Some(p) => {
            let text = fs::read_to_string(p).map_err(|e| CliError(format!("{}: {e}", p.display())))?;
            text.parse::<toml::Table>()
                .map_err(|e| CliError(format!("{}: {e}", p.display())))?
        }
        None => toml::Table::new(),
    };
    if let Ok(raw) = std::env::var(SEED_VAR) {
        let seed: u64 = raw
            .trim()
            .parse()
            .map_err(|_| CliError(format!("{SEED_VAR} must be a non-negative integer, got `{raw}`")))?;
        let solver = table
            .entry("solver")
            .or_insert_with(|| toml::Value::Table(toml::Table::new()));
        if let toml::Value::Table(solver) = solver {
            solver
                .entry("seed")
                .or_insert(toml::Value::Integer(seed as i64));
        }
    }
    let label = path.map_or_else(|| "configuration".to_owned(), |p| p.display().to_string());
    toml::Value::Table(table)
        .try_into()
        .map_err(|e| CliError(format!("{label}: {e}")))
}

pub fn apply_flags(cfg: &mut SolverConfig, flags: &SolverFlags) {
    if let Some(v) = flags.seed {
        cfg.seed = v;
    }
    if let Some(v) = flags.restarts {
        cfg.restarts = v;
    }
    if let Some(v) = flags.max_iterations {
        cfg.max_iterations = v;
    }
    if let Some(v) = flags.kkt_tolerance {
        cfg.kkt_tolerance = v;
    }
    if let Some(v) = flags.equality_tolerance {
        cfg.equality_tolerance = v;
    }
}

/// Parses `key=value` pairs separated by commas; keys as in the `[budget]` table.
pub fn apply_budget(budget: &mut EnumerationBudget, spec: &str) -> CliResult<()> {
    for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (key, value) = item
            .split_once('=')
            .ok_or_else(|| CliError(format!("budget entry `{item}` is not key=value")))?;
        let value: usize = value
            .trim()
            .parse()
            .map_err(|_| CliError(format!("budget value in `{item}` is not a non-negative integer")))?;
        match key.trim().replace('_', "-").as_str() {
            "max-vertices" => budget.max_vertices = value,
            "max-edges" => budget.max_edges = value,
            "max-instances" => budget.max_instances = value,
            other => {
                return Err(CliError(format!(
                    "unknown budget key `{other}`; expected max-vertices, max-edges or max-instances"
                )))
            }
        }
    }
    Ok(())
}
