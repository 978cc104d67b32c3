//! Independent checks on the theorem engine and the embedder.
//!
//! Nothing here consults the case analysis in [`crate::repnum`]: the b-scan
//! uses only EDM tests and raw spectra, the identity checks only spectra.

use nalgebra::DMatrix;
use serde::Serialize;

use crate::embed::{affine_rank, boundary_b_bisection, build_distance_matrix, schoenberg_test, Embedding};
use crate::exec::Exec;
use crate::graph::Graph;
use crate::repnum::Side;
use crate::spectral::{eigendecompose, summarize, SpectrumSummary};
use crate::{Error, Result, ToleranceConfig};

pub const DEFAULT_GRID: usize = 1000;
const MIN_GRID: usize = 100;
/// Grid points this close (relative) to a critical ratio count as critical.
const CRITICAL_MATCH: f64 = 1e-9;
/// Charpoly samples closer than this to a pole are rejected.
const POLE_GUARD: f64 = 1e-3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SampleKind {
    Critical,
    Grid,
    Boundary,
}

/// One tested ratio.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct OracleSample {
    pub side: Side,
    pub kind: SampleKind,
    pub b: f64,
    pub is_edm: bool,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OracleReport {
    pub rep_oracle: usize,
    /// Whether every non-critical grid ratio giving an EDM had dimension at least `n - 2`.
    pub critical_only: bool,
    pub details: Vec<OracleSample>,
}

/// Minimum embedding dimension over a scan of ratios `b` on both `g` and
/// its complement: every critical ratio `tau / (tau + 1)` with `tau < -1`,
/// `grid_points` uniform ratios in `(1, max(4, 2 tau2 / (tau2 + 1))]`, and
/// the EDM boundary.
pub fn brute_force_rep(g: &Graph, grid_points: usize, cfg: &ToleranceConfig) -> Result<OracleReport> {
    brute_force_rep_with(g, grid_points, cfg, Exec::default())
}

pub fn brute_force_rep_with(g: &Graph, grid_points: usize, cfg: &ToleranceConfig, exec: Exec) -> Result<OracleReport> {
    let n = g.n();
    if n < 3 || g.is_complete() || g.is_empty() {
        return Err(Error::InvalidInput("oracle needs n >= 3 and a graph with edges and non-edges".into()));
    }
    if grid_points < MIN_GRID {
        return Err(Error::InvalidInput(format!("grid must have at least {MIN_GRID} points")));
    }
    let complement = g.complement();
    let mut plan: Vec<(Side, SampleKind, f64)> = Vec::new();
    for (side, h) in [(Side::G, g), (Side::Complement, &complement)] {
        let s = summarize(h, cfg)?;
        let critical: Vec<f64> = s
            .distinct
            .iter()
            .filter(|d| d.tau < -1.0 - 1e-9)
            .map(|d| d.tau / (d.tau + 1.0))
            .collect();
        let second = s.distinct.get(1).map(|d| d.tau).filter(|&t| t < -1.0 - 1e-9);
        let b_max = second.map_or(4.0, |t| (2.0 * t / (t + 1.0)).max(4.0));
        plan.extend(critical.iter().map(|&b| (side, SampleKind::Critical, b)));
        for k in 1..=grid_points {
            let b = 1.0 + (b_max - 1.0) * k as f64 / grid_points as f64;
            let kind = if critical.iter().any(|&c| (b - c).abs() <= CRITICAL_MATCH * c) {
                SampleKind::Critical
            } else {
                SampleKind::Grid
            };
            plan.push((side, kind, b));
        }
        match boundary_b_bisection(h, cfg) {
            Ok(b) => plan.push((side, SampleKind::Boundary, b)),
            Err(Error::Inconsistency(_)) => {}
            Err(e) => return Err(e),
        }
    }

    let graph_of = |side: Side| if side == Side::G { g } else { &complement };
    let results = exec.map(&plan, |&(side, kind, b)| -> Result<OracleSample> {
        let r = schoenberg_test(&build_distance_matrix(graph_of(side), b)?, cfg)?;
        Ok(OracleSample { side, kind, b, is_edm: r.is_edm, dim: r.embedding_dim })
    });
    let details = results.into_iter().collect::<Result<Vec<_>>>()?;

    let best = details.iter().filter(|s| s.is_edm).map(|s| s.dim).min().unwrap_or(n - 1);
    let critical_only = details
        .iter()
        .filter(|s| s.kind == SampleKind::Grid && s.is_edm)
        .all(|s| s.dim + 2 >= n);
    Ok(OracleReport { rep_oracle: best.min(n - 2), critical_only, details })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub ok: bool,
    pub reasons: Vec<String>,
}

/// Checks that `e` places edges of `g` at `alpha`, non-edges at `beta`,
/// with `alpha != beta`, and spans exactly `e.dim` dimensions. Distances are
/// compared with relative tolerance `tol_equality`.
pub fn verify_embedding(g: &Graph, e: &Embedding, cfg: &ToleranceConfig) -> VerifyReport {
    let n = g.n();
    let mut reasons = Vec::new();
    if e.points.len() != n {
        reasons.push(format!("{} points for {n} vertices", e.points.len()));
        return VerifyReport { ok: false, reasons };
    }
    let width = e.points.first().map_or(0, Vec::len);
    if e.points.iter().any(|p| p.len() != width) {
        reasons.push("points have inconsistent coordinate counts".into());
        return VerifyReport { ok: false, reasons };
    }
    if e.points.iter().flatten().any(|x| !x.is_finite()) {
        reasons.push("non-finite coordinate".into());
        return VerifyReport { ok: false, reasons };
    }
    let tol = cfg.tol_equality * e.alpha.abs().max(e.beta.abs()).max(1.0);
    if (e.alpha - e.beta).abs() <= tol {
        reasons.push(format!("alpha and beta coincide ({} vs {})", e.alpha, e.beta));
    }
    for i in 0..n {
        for j in i + 1..n {
            let d = e.points[i].iter().zip(&e.points[j]).map(|(a, b)| (a - b).powi(2)).sum::<f64>().sqrt();
            let (want, what) = if g.has_edge(i, j) { (e.alpha, "edge") } else { (e.beta, "non-edge") };
            if (d - want).abs() > tol {
                reasons.push(format!("{what} ({i}, {j}) at distance {d}, expected {want}"));
            }
        }
    }
    let pts = DMatrix::from_fn(n, width, |i, j| e.points[i][j]);
    match affine_rank(&pts, cfg) {
        Ok(r) if r == e.dim => {}
        Ok(r) => reasons.push(format!("points span {r} dimensions, claimed {}", e.dim)),
        Err(err) => reasons.push(format!("rank computation failed: {err}")),
    }
    VerifyReport { ok: reasons.is_empty(), reasons }
}

/// Largest relative residual of the complement characteristic polynomial
/// identity `P_Gbar(x) = (-1)^n P_G(-x-1) (1 - n sum beta_i^2 / (x + 1 + tau_i))`
/// over `samples`, evaluated from the two summaries alone.
pub fn complement_charpoly_residual(s_g: &SpectrumSummary, s_gbar: &SpectrumSummary, samples: &[f64]) -> Result<f64> {
    if s_g.n != s_gbar.n {
        return Err(Error::InvalidInput(format!("summaries of orders {} and {}", s_g.n, s_gbar.n)));
    }
    let n = s_g.n as f64;
    let sign = if s_g.n.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut worst = 0.0f64;
    for &x in samples {
        if let Some(d) = s_g.distinct.iter().find(|d| (x + 1.0 + d.tau).abs() < POLE_GUARD) {
            return Err(Error::InvalidInput(format!("sample {x} is at the pole {}", -1.0 - d.tau)));
        }
        let sum: f64 = s_g.distinct.iter().map(|d| d.main_angle.powi(2) / (x + 1.0 + d.tau)).sum();
        let lhs = s_gbar.char_poly(x);
        let rhs = sign * s_g.char_poly(-x - 1.0) * (1.0 - n * sum);
        worst = worst.max((lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(1.0));
    }
    Ok(worst)
}

/// For `g` regular of degree `k`: the complement spectrum is `n - k - 1`
/// together with `-lambda - 1` for every other eigenvalue `lambda` of `g`.
pub fn sachs_complement_check(g: &Graph, cfg: &ToleranceConfig) -> Result<bool> {
    let k = g
        .regularity()
        .ok_or_else(|| Error::Inapplicable("graph is not regular".into()))?;
    let n = g.n();
    let mut own = eigendecompose(&g.adjacency_matrix(), cfg)?.values;
    own.pop();
    let mut predicted: Vec<f64> = own.iter().map(|l| -l - 1.0).collect();
    predicted.push((n - k) as f64 - 1.0);
    predicted.sort_by(f64::total_cmp);
    let actual = eigendecompose(&g.complement().adjacency_matrix(), cfg)?.values;
    let tol = 1e-8 * (n as f64).max(1.0);
    Ok(predicted.len() == actual.len() && predicted.iter().zip(&actual).all(|(p, a)| (p - a).abs() <= tol))
}
