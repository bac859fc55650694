use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of the standard simplex: non-negative weights summing to one.
/// Index `i` holds the weight of vertex `i + 1`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<f64>", into = "Vec<f64>")]
pub struct Weighting(Vec<f64>);

impl Weighting {
    /// Allowed deviation of the weight sum from one.
    pub const SUM_TOLERANCE: f64 = 1e-12;

    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::InvalidWeighting("no weights given".into()));
        }
        if let Some((i, w)) = weights
            .iter()
            .enumerate()
            .find(|(_, w)| !w.is_finite() || **w < 0.0)
        {
            return Err(Error::InvalidWeighting(format!(
                "weight of vertex {} is {w}, expected a finite non-negative number",
                i + 1
            )));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > Self::SUM_TOLERANCE {
            return Err(Error::InvalidWeighting(format!("weights sum to {sum}, not 1")));
        }
        Ok(Self(weights))
    }

    /// Scales a non-negative, non-zero vector onto the simplex.
    pub fn normalized(mut weights: Vec<f64>) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        if !(sum > 0.0 && sum.is_finite()) {
            return Err(Error::InvalidWeighting(format!("cannot normalize weights summing to {sum}")));
        }
        weights.iter_mut().for_each(|w| *w /= sum);
        Self::new(weights)
    }

    pub fn uniform(n: usize) -> Self {
        Self(vec![1.0 / n as f64; n])
    }

    /// Equal weight on the listed vertices (1-based), zero elsewhere.
    pub fn uniform_on(n: usize, vertices: &[u32]) -> Result<Self> {
        let mut w = vec![0.0; n];
        for &v in vertices {
            if v == 0 || v as usize > n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            w[v as usize - 1] = 1.0;
        }
        Self::normalized(w)
    }

    pub(crate) fn from_raw_unchecked(weights: Vec<f64>) -> Self {
        Self(weights)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    /// Weight of a 1-based vertex.
    pub fn weight(&self, vertex: u32) -> f64 {
        self.0[vertex as usize - 1]
    }

    /// Vertices whose weight exceeds `threshold`.
    pub fn support(&self, threshold: f64) -> Vec<u32> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &w)| w > threshold)
            .map(|(i, _)| i as u32 + 1)
            .collect()
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.0
    }
}

impl TryFrom<Vec<f64>> for Weighting {
    type Error = Error;

    fn try_from(value: Vec<f64>) -> Result<Self> {
        Weighting::new(value)
    }
}

impl From<Weighting> for Vec<f64> {
    fn from(value: Weighting) -> Self {
        value.0
    }
}
