use serde::Serialize;

use crate::{Error, Result};

/// Numerical thresholds shared by every module.
///
/// `tol_group`, `tol_psd` and `tol_rank` are relative: they are scaled by
/// `max(1, spectral radius)`, `max(1, largest matrix entry)` and the largest
/// eigenvalue magnitude of the matrix under test, respectively. The rest are
/// absolute.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ToleranceConfig {
    /// Jacobi stopping threshold on the off-diagonal Frobenius norm, relative to `||A||_F`.
    pub tol_residual: f64,
    /// Consecutive eigenvalues closer than this belong to the same distinct eigenvalue.
    pub tol_group: f64,
    /// Main angles below this are exactly zero.
    pub tol_zero_angle: f64,
    /// Largest eigenvalue allowed in a negative semidefinite matrix.
    pub tol_psd: f64,
    /// Eigenvalues at or below this fraction of the largest one count as zero for rank.
    pub tol_rank: f64,
    /// Relative tolerance for equality tests (condition of the second critical ratio, distances).
    pub tol_equality: f64,
    /// Relative width at which the boundary bisection stops.
    pub tol_bisect: f64,
}

impl Default for ToleranceConfig {
    fn default() -> Self {
        ToleranceConfig {
            tol_residual: 1e-11,
            tol_group: 1e-7,
            tol_zero_angle: 1e-7,
            tol_psd: 1e-9,
            tol_rank: 1e-8,
            tol_equality: 1e-8,
            tol_bisect: 1e-12,
        }
    }
}

impl ToleranceConfig {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("tol_residual", self.tol_residual),
            ("tol_group", self.tol_group),
            ("tol_zero_angle", self.tol_zero_angle),
            ("tol_psd", self.tol_psd),
            ("tol_rank", self.tol_rank),
            ("tol_equality", self.tol_equality),
            ("tol_bisect", self.tol_bisect),
        ];
        for (name, v) in fields {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidInput(format!("{name} must be positive, got {v}")));
            }
        }
        if self.tol_group <= self.tol_residual {
            return Err(Error::InvalidInput("tol_group must exceed tol_residual".into()));
        }
        Ok(())
    }
}
