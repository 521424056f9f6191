//! Running mean/variance over state vectors (Welford's single-pass update)
//! and the frozen snapshots policies normalize with.

use crate::error::{Error, Result};

/// Online per-coordinate mean and population variance of a vector stream.
#[derive(Debug, Clone, PartialEq)]
pub struct RunningStats {
    count: u64,
    mean: Vec<f64>,
    m2: Vec<f64>,
}

impl RunningStats {
    pub fn new(dim: usize) -> Self {
        RunningStats {
            count: 0,
            mean: vec![0.0; dim],
            m2: vec![0.0; dim],
        }
    }

    pub fn from_parts(count: u64, mean: Vec<f64>, m2: Vec<f64>) -> Result<Self> {
        if mean.len() != m2.len() {
            return Err(Error::DimensionMismatch {
                context: "RunningStats::from_parts",
                expected: mean.len(),
                got: m2.len(),
            });
        }
        Ok(RunningStats { count, mean, m2 })
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> &[f64] {
        &self.mean
    }

    pub fn m2(&self) -> &[f64] {
        &self.m2
    }

    /// Accumulate one vector (Welford update).
    pub fn update(&mut self, x: &[f64]) -> Result<()> {
        if x.len() != self.mean.len() {
            return Err(Error::DimensionMismatch {
                context: "RunningStats::update",
                expected: self.mean.len(),
                got: x.len(),
            });
        }
        self.count += 1;
        let n = self.count as f64;
        for i in 0..x.len() {
            let delta = x[i] - self.mean[i];
            self.mean[i] += delta / n;
            self.m2[i] += delta * (x[i] - self.mean[i]);
        }
        Ok(())
    }

    /// Population variance per coordinate: `m2 / count` (0 when empty).
    pub fn variance(&self) -> Vec<f64> {
        if self.count == 0 {
            return vec![0.0; self.mean.len()];
        }
        let n = self.count as f64;
        self.m2.iter().map(|v| v / n).collect()
    }

    /// Freeze the current statistics for use by a policy. An empty
    /// accumulator snapshots to the identity normalizer (zero mean, unit
    /// variance), which is the state every run starts from.
    pub fn snapshot(&self) -> NormalizerSnapshot {
        if self.count == 0 {
            return NormalizerSnapshot {
                version: 0,
                mean: vec![0.0; self.mean.len()],
                variance: vec![1.0; self.mean.len()],
            };
        }
        NormalizerSnapshot {
            version: self.count,
            mean: self.mean.clone(),
            variance: self.variance(),
        }
    }
}

/// Variance floor applied when normalizing, so constant state coordinates
/// (variance 0) stay well-defined.
pub const VARIANCE_FLOOR: f64 = 1e-8;

/// Immutable (mean, variance) snapshot a policy normalizes observations with.
/// `version` identifies which accumulator state it was taken from; both
/// members of an antithetic pair must carry the same version.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalizerSnapshot {
    pub version: u64,
    pub mean: Vec<f64>,
    pub variance: Vec<f64>,
}

impl NormalizerSnapshot {
    pub fn identity(dim: usize) -> Self {
        NormalizerSnapshot {
            version: 0,
            mean: vec![0.0; dim],
            variance: vec![1.0; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.mean.len()
    }

    /// `(s - mean) / sqrt(max(var, floor))`, elementwise.
    pub fn normalize(&self, s: &[f64]) -> Result<Vec<f64>> {
        if s.len() != self.mean.len() {
            return Err(Error::DimensionMismatch {
                context: "NormalizerSnapshot::normalize",
                expected: self.mean.len(),
                got: s.len(),
            });
        }
        Ok(s.iter()
            .enumerate()
            .map(|(i, &v)| (v - self.mean[i]) / self.variance[i].max(VARIANCE_FLOOR).sqrt())
            .collect())
    }
}
