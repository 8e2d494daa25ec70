use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// One comparison in a [`CheckReport`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckPoint {
    pub input: String,
    pub expected: Complex64,
    pub observed: Complex64,
    /// Absolute tolerance for this point.
    pub tolerance: f64,
}

impl CheckPoint {
    /// `|observed - expected| / tolerance`; infinite for a failed evaluation.
    pub fn ratio(&self) -> f64 {
        let err = (self.observed - self.expected).norm();
        if err == 0.0 {
            0.0
        } else if err.is_nan() {
            f64::INFINITY
        } else {
            err / self.tolerance
        }
    }
}

/// Outcome of a validation check.
///
/// `worst_ratio` is the error ratio at the pass quantile: with `pass_fraction`
/// 1 it is the largest ratio, for statistical checks that accept a fraction of
/// out-of-band points it is the ratio at that quantile. `passed` is exactly
/// `worst_ratio <= 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    pub points: Vec<CheckPoint>,
    pub passed: bool,
    pub worst_ratio: f64,
    pub max_ratio: f64,
    pub pass_fraction: f64,
    /// Evaluation errors, if any point could not be computed.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub errors: Vec<String>,
}

impl CheckReport {
    pub fn new(name: impl Into<String>, points: Vec<CheckPoint>, pass_fraction: f64) -> Self {
        Self::with_errors(name, points, pass_fraction, Vec::new())
    }

    pub fn with_errors(
        name: impl Into<String>,
        points: Vec<CheckPoint>,
        pass_fraction: f64,
        errors: Vec<String>,
    ) -> Self {
        let mut ratios: Vec<f64> = points.iter().map(CheckPoint::ratio).collect();
        ratios.sort_by(f64::total_cmp);
        let max_ratio = ratios.last().copied().unwrap_or(0.0);
        let worst_ratio = if ratios.is_empty() {
            0.0
        } else {
            let k = ((pass_fraction * ratios.len() as f64).ceil() as usize).clamp(1, ratios.len());
            ratios[k - 1]
        };
        let worst_ratio = if errors.is_empty() { worst_ratio } else { f64::INFINITY };
        CheckReport {
            name: name.into(),
            points,
            passed: worst_ratio <= 1.0,
            worst_ratio,
            max_ratio,
            pass_fraction,
            errors,
        }
    }

    /// One-line summary.
    pub fn summary(&self) -> String {
        format!(
            "{} {}: {} points, worst ratio {:.3e}",
            if self.passed { "PASS" } else { "FAIL" },
            self.name,
            self.points.len(),
            self.worst_ratio
        )
    }
}
