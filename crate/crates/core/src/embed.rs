//! Euclidean distance matrices and explicit two-distance embeddings.
//!
//! A representation with edge length 1 and non-edge length `sqrt(b)` exists
//! in dimension `m` iff `M = A + b * (J - I - A)` is a Euclidean distance
//! matrix of embedding dimension `m`. `M` is an EDM iff `P M P` is negative
//! semidefinite, `P` the projection onto the complement of the all-ones
//! vector, and the embedding dimension is the rank of `P M P`.

use nalgebra::{DMatrix, DVector};
use serde::Serialize;

use crate::exec::Exec;
use crate::graph::Graph;
use crate::repnum::{critical_ratio, representation_number, tau2_condition, Branch, RepResult, Side, Tau2Verdict};
use crate::spectral::{check_symmetric, eigendecompose, spectrum, SpectrumSummary};
use crate::{Error, Result, ToleranceConfig};

/// Outcome of an EDM test.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistanceMatrixReport {
    pub is_edm: bool,
    /// Rank of the centred matrix; the embedding dimension when `is_edm`.
    pub embedding_dim: usize,
    /// Most positive eigenvalue of the centred matrix.
    pub witness: f64,
}

/// `n` points with edges at distance `alpha` and non-edges at `beta`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Embedding {
    pub dim: usize,
    pub alpha: f64,
    pub beta: f64,
    /// `beta^2 / alpha^2`.
    #[serde(skip)]
    pub b: f64,
    pub points: Vec<Vec<f64>>,
}

impl Embedding {
    /// One point per line, coordinates comma separated.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for p in &self.points {
            let row: Vec<String> = p.iter().map(|x| format!("{x:.11e}")).collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

/// Squared-distance matrix `A + b * Abar`: 1 on edges, `b` on non-edges.
pub fn build_distance_matrix(g: &Graph, b: f64) -> Result<DMatrix<f64>> {
    if !(b.is_finite() && b > 0.0) {
        return Err(Error::InvalidInput(format!("distance ratio must be positive, got {b}")));
    }
    let n = g.n();
    Ok(DMatrix::from_fn(n, n, |i, j| {
        if i == j {
            0.0
        } else if g.has_edge(i, j) {
            1.0
        } else {
            b
        }
    }))
}

fn check_predistance(m: &DMatrix<f64>, cfg: &ToleranceConfig) -> Result<()> {
    check_symmetric(m, cfg.tol_residual)?;
    let n = m.nrows();
    for i in 0..n {
        if m[(i, i)].abs() > cfg.tol_residual {
            return Err(Error::InvalidInput(format!("nonzero diagonal entry at {i}")));
        }
        for j in 0..n {
            if i != j && m[(i, j)] <= 0.0 {
                return Err(Error::InvalidInput(format!("non-positive off-diagonal entry at ({i}, {j})")));
            }
        }
    }
    Ok(())
}

/// `P M P` with `P = I - 11^T / n`.
fn double_centre(m: &DMatrix<f64>) -> DMatrix<f64> {
    let n = m.nrows();
    if n == 0 {
        return DMatrix::zeros(0, 0);
    }
    let nf = n as f64;
    let row: Vec<f64> = (0..n).map(|i| m.row(i).sum() / nf).collect();
    let col: Vec<f64> = (0..n).map(|j| m.column(j).sum() / nf).collect();
    let all = row.iter().sum::<f64>() / nf;
    let c = DMatrix::from_fn(n, n, |i, j| m[(i, j)] - row[i] - col[j] + all);
    (&c + c.transpose()) * 0.5
}

fn report(centred: &DMatrix<f64>, scale: f64, cfg: &ToleranceConfig) -> Result<DistanceMatrixReport> {
    let dec = eigendecompose(centred, cfg)?;
    let witness = dec.max_value();
    Ok(DistanceMatrixReport {
        is_edm: witness <= cfg.tol_psd * scale,
        embedding_dim: dec.numerical_rank(cfg.tol_rank),
        witness,
    })
}

/// Schoenberg's criterion on a symmetric zero-diagonal matrix with positive
/// off-diagonal entries.
pub fn schoenberg_test(m: &DMatrix<f64>, cfg: &ToleranceConfig) -> Result<DistanceMatrixReport> {
    check_predistance(m, cfg)?;
    report(&double_centre(m), m.amax().max(1.0), cfg)
}

/// Gower's criterion: `F = (I - 1 v^T) M (I - v 1^T)` for any `v` with
/// `v^T 1 = 1`. Agrees with [`schoenberg_test`] for every such `v`.
pub fn gower_test(m: &DMatrix<f64>, v: &DVector<f64>, cfg: &ToleranceConfig) -> Result<DistanceMatrixReport> {
    check_predistance(m, cfg)?;
    let n = m.nrows();
    if v.len() != n {
        return Err(Error::InvalidInput(format!("weight vector has length {}, expected {n}", v.len())));
    }
    if (v.sum() - 1.0).abs() > 1e-9 {
        return Err(Error::InvalidInput(format!("weights sum to {}, expected 1", v.sum())));
    }
    let ones = DVector::from_element(n, 1.0);
    let right = DMatrix::identity(n, n) - v * ones.transpose();
    let f = right.transpose() * m * &right;
    let f = (&f + f.transpose()) * 0.5;
    let scale = m.amax().max(f.amax()).max(1.0);
    report(&f, scale, cfg)
}

/// Orthonormal basis of the complement of the all-ones vector (Helmert
/// contrasts), as an `n x (n - 1)` matrix.
fn helmert_basis(n: usize) -> DMatrix<f64> {
    DMatrix::from_fn(n, n.saturating_sub(1), |i, k| {
        let k1 = k + 1;
        let norm = ((k1 * (k1 + 1)) as f64).sqrt();
        if i < k1 {
            1.0 / norm
        } else if i == k1 {
            -(k1 as f64) / norm
        } else {
            0.0
        }
    })
}

/// Largest eigenvalue of `M` restricted to the complement of the all-ones vector.
fn restricted_max_eigenvalue(m: &DMatrix<f64>, basis: &DMatrix<f64>, cfg: &ToleranceConfig) -> Result<f64> {
    let c = basis.transpose() * m * basis;
    let c = (&c + c.transpose()) * 0.5;
    Ok(eigendecompose(&c, cfg)?.max_value())
}

/// Points realizing an EDM, one row per point, in its embedding dimension
/// (classical scaling of `-P M P / 2`).
pub fn realize(m: &DMatrix<f64>, cfg: &ToleranceConfig) -> Result<DMatrix<f64>> {
    let rep = schoenberg_test(m, cfg)?;
    if !rep.is_edm {
        return Err(Error::InvalidInput(format!(
            "not a Euclidean distance matrix (witness eigenvalue {:.3e})",
            rep.witness
        )));
    }
    let gram = double_centre(m) * -0.5;
    let dec = eigendecompose(&gram, cfg)?;
    let cut = cfg.tol_rank * dec.spectral_radius();
    let keep: Vec<usize> = (0..dec.dim()).rev().filter(|&i| dec.values[i] > cut).collect();
    let n = m.nrows();
    Ok(DMatrix::from_fn(n, keep.len(), |i, k| {
        let c = keep[k];
        dec.vectors[(i, c)] * dec.values[c].sqrt()
    }))
}

/// Dimension of the affine hull of the rows of `points`.
pub fn affine_rank(points: &DMatrix<f64>, cfg: &ToleranceConfig) -> Result<usize> {
    let n = points.nrows();
    if n == 0 || points.ncols() == 0 {
        return Ok(0);
    }
    let mean = points.row_mean();
    let centred = DMatrix::from_fn(n, points.ncols(), |i, j| points[(i, j)] - mean[j]);
    let scatter = centred.transpose() * &centred;
    let scatter = (&scatter + scatter.transpose()) * 0.5;
    Ok(eigendecompose(&scatter, cfg)?.numerical_rank(cfg.tol_rank))
}

/// `tau1 / (tau1 + 1)`; requires the smallest eigenvalue to lie below -1.
pub fn critical_b_tau1(s: &SpectrumSummary, cfg: &ToleranceConfig) -> Result<f64> {
    if !s.below_minus_one(0, cfg) {
        return Err(Error::Inapplicable(
            "smallest eigenvalue is not below -1 (disjoint union of cliques)".into(),
        ));
    }
    Ok(critical_ratio(s.smallest().tau))
}

/// `tau2 / (tau2 + 1)` when the second smallest eigenvalue lies below -1.
pub fn critical_b_tau2(s: &SpectrumSummary, cfg: &ToleranceConfig) -> Option<f64> {
    s.below_minus_one(1, cfg).then(|| critical_ratio(s.distinct[1].tau))
}

const MAX_DOUBLINGS: usize = 60;

/// Ratio `b* > 1` on the boundary of the EDM region: `A + b Abar` is an EDM
/// for `1 < b <= b*` and not beyond. At `b*` the restricted matrix is
/// singular, so its embedding dimension is at most `n - 2`.
///
/// The bracket `[1 + 1e-9, b_hi]` grows by doubling until the test fails;
/// bisection then stops once the bracket is narrower than `tol_bisect * b`.
/// Returns the valid end of the final bracket.
pub fn boundary_b_bisection(g: &Graph, cfg: &ToleranceConfig) -> Result<f64> {
    if g.is_complete() || g.is_empty() {
        return Err(Error::InvalidInput("boundary ratio needs a graph with edges and non-edges".into()));
    }
    let basis = helmert_basis(g.n());
    let excess = |b: f64| -> Result<f64> {
        let m = build_distance_matrix(g, b)?;
        Ok(restricted_max_eigenvalue(&m, &basis, cfg)? / b.max(1.0))
    };

    let mut lo = 1.0 + 1e-9;
    if excess(lo)? > 0.0 {
        return Err(Error::Inconsistency("distance matrix invalid just above b = 1".into()));
    }
    let mut hi = 2.0;
    let mut doublings = 0;
    while excess(hi)? <= cfg.tol_psd {
        lo = hi;
        hi *= 2.0;
        doublings += 1;
        if doublings > MAX_DOUBLINGS {
            return Err(Error::Inconsistency(
                "no EDM boundary found: matrix stays valid for every ratio".into(),
            ));
        }
    }
    while hi - lo > cfg.tol_bisect * hi {
        let mid = 0.5 * (lo + hi);
        if excess(mid)? > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(lo)
}

#[derive(Clone, Copy, Debug)]
struct Candidate {
    side: Side,
    branch: Branch,
    b: f64,
    dim: usize,
}

fn evaluate(h: &Graph, side: Side, branch: Branch, b: f64, cfg: &ToleranceConfig) -> Result<Option<Candidate>> {
    let m = build_distance_matrix(h, b)?;
    let rep = schoenberg_test(&m, cfg)?;
    Ok(rep.is_edm.then_some(Candidate { side, branch, b, dim: rep.embedding_dim }))
}

fn simplex(g: &Graph, cfg: &ToleranceConfig) -> Result<Embedding> {
    // Every pair has the same distance; non-edges nominally at sqrt(2).
    let b = 2.0;
    let m = build_distance_matrix(g, b)?;
    let pts = realize(&m, cfg)?;
    Ok(Embedding {
        dim: pts.ncols(),
        alpha: 1.0,
        beta: b.sqrt(),
        b,
        points: rows(&pts),
    })
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows()).map(|i| m.row(i).iter().copied().collect()).collect()
}

/// Explicit representation in the minimum dimension, with the theorem's
/// answer it was checked against.
pub fn minimal_embedding(g: &Graph, cfg: &ToleranceConfig) -> Result<(Embedding, RepResult)> {
    minimal_embedding_with(g, cfg, Exec::default())
}

/// [`minimal_embedding`] with an explicit execution strategy for the
/// candidate evaluations.
pub fn minimal_embedding_with(g: &Graph, cfg: &ToleranceConfig, exec: Exec) -> Result<(Embedding, RepResult)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::InvalidInput("embedding needs at least 2 vertices".into()));
    }
    let mut result = representation_number(g, cfg)?;
    if g.is_complete() || g.is_empty() {
        let e = simplex(g, cfg)?;
        if e.dim != result.rep {
            return Err(Error::Inconsistency(format!("simplex has dimension {}, expected {}", e.dim, result.rep)));
        }
        return Ok((e, result));
    }

    let complement = g.complement();
    let sides = [(Side::G, g), (Side::Complement, &complement)];

    let mut critical = Vec::new();
    for (side, h) in sides {
        let s = spectrum(h, cfg)?.summary;
        if let Ok(b) = critical_b_tau1(&s, cfg) {
            critical.push((side, Branch::Tau1, b));
        }
        if matches!(tau2_condition(&s, cfg), Tau2Verdict::StrictInequality | Tau2Verdict::Equality) {
            if let Some(b) = critical_b_tau2(&s, cfg) {
                critical.push((side, Branch::Tau2, b));
            }
        }
    }
    // Tie-break: Tau1 before Tau2, then G before the complement.
    critical.sort_by_key(|&(side, branch, _)| (branch as u8, side as u8));

    let graph_of = |side: Side| if side == Side::G { g } else { &complement };
    let evaluated = exec.map(&critical, |&(side, branch, b)| evaluate(graph_of(side), side, branch, b, cfg));
    let mut candidates = Vec::new();
    for c in evaluated {
        candidates.extend(c?);
    }
    let reaches_generic = candidates.iter().any(|c| c.dim + 2 <= n);
    if !reaches_generic {
        let fallbacks = exec.map(&sides.map(|s| s.0), |&side| -> Result<Option<Candidate>> {
            match boundary_b_bisection(graph_of(side), cfg) {
                Ok(b) => evaluate(graph_of(side), side, Branch::Fallback, b, cfg),
                Err(Error::Inconsistency(_)) => Ok(None),
                Err(e) => Err(e),
            }
        });
        for c in fallbacks {
            candidates.extend(c?);
        }
    }

    let best = candidates
        .iter()
        .copied()
        .reduce(|a, c| if c.dim < a.dim { c } else { a })
        .ok_or_else(|| Error::Inconsistency("no candidate distance matrix is valid".into()))?;
    if best.dim != result.rep {
        return Err(Error::Inconsistency(format!(
            "constructed dimension {} differs from representation number {}",
            best.dim, result.rep
        )));
    }

    let m = build_distance_matrix(graph_of(best.side), best.b)?;
    let mut pts = realize(&m, cfg)?;
    let embedding = match best.side {
        Side::G => Embedding { dim: pts.ncols(), alpha: 1.0, beta: best.b.sqrt(), b: best.b, points: vec![] },
        Side::Complement => {
            // Complement edges sit at 1 and g-edges at sqrt(b); rescale so g-edges are at 1.
            pts /= best.b.sqrt();
            Embedding { dim: pts.ncols(), alpha: 1.0, beta: 1.0 / best.b.sqrt(), b: 1.0 / best.b, points: vec![] }
        }
    };
    // rotation noise in coordinates that are exactly zero
    pts.apply(|x| {
        if x.abs() < 1e-12 {
            *x = 0.0;
        }
    });
    let embedding = Embedding { points: rows(&pts), ..embedding };
    let hull = affine_rank(&pts, cfg)?;
    if embedding.dim != best.dim || hull != best.dim {
        return Err(Error::Inconsistency(format!(
            "realized {} coordinates spanning {hull} dimensions, expected {}",
            embedding.dim, best.dim
        )));
    }

    if let Some(cert) = result.certificate.as_mut() {
        cert.side = best.side;
        cert.branch = best.branch;
        cert.b = Some(best.b);
    }
    Ok((embedding, result))
}
