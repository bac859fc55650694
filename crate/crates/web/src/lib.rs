//! WebAssembly bindings for the demo page in `www/`.
//!
//! Each export wraps a plain function returning `Result<_, String>` so the
//! logic can be tested natively.

use hyperlag::harness::{sharpness_weighting, HarnessConfig};
use hyperlag::{complete_lagrangian, evaluate, solve, RUniformHypergraph, SolverConfig};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest m the curve export accepts.
pub const MAX_CURVE_EDGES: usize = 400;

/// `λ(C_{r,m})` for `m = 1..=m_max`.
pub fn colex_curve_values(r: usize, m_max: usize, restarts: usize) -> Result<Vec<f64>, String> {
    if m_max == 0 || m_max > MAX_CURVE_EDGES {
        return Err(format!("m must lie in [1, {MAX_CURVE_EDGES}], got {m_max}"));
    }
    let cfg = SolverConfig {
        restarts: restarts.max(1),
        ..SolverConfig::default()
    };
    (1..=m_max)
        .map(|m| {
            let g = RUniformHypergraph::colex(r, m).map_err(|e| e.to_string())?;
            solve(&g, &cfg).map(|rep| rep.value).map_err(|e| e.to_string())
        })
        .collect()
}

/// Plateaus `[C(t-1,r), C(t-1,r) + C(t-2,r-1)]` at height `λ([t-1]^(r))`
/// that start at or below `m_max`, flattened as `(m_low, m_high, value)`.
pub fn plateau_segments(r: usize, m_max: usize) -> Result<Vec<f64>, String> {
    if r < 2 {
        return Err(format!("r must be at least 2, got {r}"));
    }
    let mut out = Vec::new();
    let mut t = r + 1;
    loop {
        let low = binomial(t - 1, r);
        if low > m_max as u128 {
            break;
        }
        let high = low + binomial(t - 2, r - 1);
        let value = complete_lagrangian(t - 1, r).map_err(|e| e.to_string())?;
        out.extend([low as f64, high.min(m_max as u128) as f64, value]);
        t += 1;
    }
    Ok(out)
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k as u128).fold(1, |acc, i| acc * (n as u128 - i) / (i + 1))
}

/// Solver report for a graph in the plain-text format, as JSON.
pub fn solve_graph_json(text: &str, restarts: usize, seed: u64) -> Result<String, String> {
    let g = RUniformHypergraph::from_text(text).map_err(|e| e.to_string())?;
    let cfg = SolverConfig {
        restarts: restarts.max(1),
        seed,
        ..SolverConfig::default()
    };
    let rep = solve(&g, &cfg).map_err(|e| e.to_string())?;
    serde_json::to_string(&rep).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SharpnessView {
    r: usize,
    t: usize,
    m: usize,
    weighting: Vec<f64>,
    value: f64,
    reference: f64,
    margin: f64,
    graph: String,
}

/// Evaluates `C_{r,m}` one edge past the plateau at the weighting with
/// `1/(t-1)` on `1..=t-2` and `1/(2(t-1))` on `t-1`, `t`.
pub fn sharpness_json(r: usize, t: usize) -> Result<String, String> {
    let rep = hyperlag::harness::verify_sharpness(r, t, &HarnessConfig::default()).map_err(|e| e.to_string())?;
    let rec = &rep.instances[0];
    let g = RUniformHypergraph::colex(r, rec.m).map_err(|e| e.to_string())?;
    let x = sharpness_weighting(t).map_err(|e| e.to_string())?;
    let value = evaluate(&g, &x).map_err(|e| e.to_string())?;
    let view = SharpnessView {
        r,
        t,
        m: rec.m,
        weighting: x.into_vec(),
        value,
        reference: rec.reference,
        margin: value - rec.reference,
        graph: g.to_text(),
    };
    serde_json::to_string(&view).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = colexCurve)]
pub fn colex_curve(r: usize, m_max: usize, restarts: usize) -> Result<Vec<f64>, JsError> {
    colex_curve_values(r, m_max, restarts).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = plateaus)]
pub fn plateaus(r: usize, m_max: usize) -> Result<Vec<f64>, JsError> {
    plateau_segments(r, m_max).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = solveGraph)]
pub fn solve_graph(text: &str, restarts: usize, seed: u64) -> Result<String, JsError> {
    solve_graph_json(text, restarts, seed).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = sharpness)]
pub fn sharpness(r: usize, t: usize) -> Result<String, JsError> {
    sharpness_json(r, t).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn curve_is_flat_on_plateaus() {
        let curve = colex_curve_values(3, 17, 16).unwrap();
        for m in 10..=16 {
            assert!((curve[m - 1] - 0.08).abs() < 1e-9, "m = {m}");
        }
        assert!(curve[16] > 0.08 + 1e-4);
        assert!(curve.windows(2).all(|w| w[1] >= w[0] - 1e-12));
    }

    #[test]
    fn plateau_segments_for_triples() {
        let segs = plateau_segments(3, 20).unwrap();
        assert_eq!(&segs[..6], &[1.0, 2.0, 1.0 / 27.0, 4.0, 7.0, 0.0625]);
        assert_eq!(&segs[6..9], &[10.0, 16.0, 0.08]);
        assert_eq!(segs.len(), 12);
    }

    #[test]
    fn solve_json_round_trip() {
        let json = solve_graph_json("3 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n", 8, 0).unwrap();
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert!((v["value"].as_f64().unwrap() - 0.0625).abs() < 1e-12);
        assert!(solve_graph_json("3 4 1\n1 2\n", 8, 0).unwrap_err().contains("line 2"));
    }

    #[test]
    fn sharpness_at_six() {
        let v: serde_json::Value = serde_json::from_str(&sharpness_json(3, 6).unwrap()).unwrap();
        assert_eq!(v["m"], 17);
        assert!((v["value"].as_f64().unwrap() - 0.082).abs() < 1e-12);
        assert!(sharpness_json(3, 4).is_err());
    }
}
