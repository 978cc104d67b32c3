//! The representation number: the smallest dimension in which a graph has a
//! two-distance embedding (edges at one distance, non-edges at another).
//!
//! Outside the complete/empty and clique-union cases the answer is
//! `n - max{m1', m2', m1'_bar, m2'_bar, 2}`, where the primed quantities are
//! read off the smallest two distinct eigenvalues of the graph and of its
//! complement:
//!
//! * `m1' = m1 + 1` if the smallest eigenspace is orthogonal to the all-ones
//!   vector, else `m1`;
//! * `m2' = m2 + 2` / `m2 + 1` when `tau2 < -1`, `m1 = 1`, `beta2 = 0` and
//!   `beta1^2 / (tau2 - tau1)` equals / exceeds
//!   `sum_{i >= 3} beta_i^2 / (tau_i - tau2)`; otherwise 0.

use serde::Serialize;

use crate::graph::{bipartite_component_count, classify_clique_union, Graph};
use crate::spectral::{summarize, SpectrumSummary};
use crate::{Error, Result, ToleranceConfig};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RepCase {
    Complete,
    Empty,
    /// The graph is a disjoint union of at least two cliques.
    CliqueUnion,
    /// The complement is a disjoint union of at least two cliques.
    CliqueUnionComplement,
    Spectral,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    G,
    Complement,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Branch {
    /// Squared-distance ratio `tau1 / (tau1 + 1)`.
    Tau1,
    /// Squared-distance ratio `tau2 / (tau2 + 1)`.
    Tau2,
    /// The generic `n - 2` realization.
    Fallback,
}

/// Which construction achieves the minimum, and the quantities behind it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Certificate {
    pub side: Side,
    pub branch: Branch,
    /// Squared-distance ratio on `side` (non-edge over edge), when known.
    pub b: Option<f64>,
    pub m1p: usize,
    pub m2p: usize,
    pub m1p_bar: usize,
    pub m2p_bar: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RepResult {
    pub rep: usize,
    pub case: RepCase,
    /// Absent for complete and empty graphs, where a regular simplex works.
    pub certificate: Option<Certificate>,
}

/// Outcome of the condition under which the second critical ratio yields a
/// distance matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Tau2Verdict {
    NotApplicable,
    StrictInequality,
    Equality,
    Violated,
}

/// `tau / (tau + 1)`: the squared-distance ratio at which
/// `(1 - b) A - b I` becomes singular along the eigenspace of `tau`.
pub fn critical_ratio(tau: f64) -> f64 {
    tau / (tau + 1.0)
}

/// `m1 + 1` if the smallest eigenvalue has main angle zero, else `m1`.
/// Meaningful when the smallest eigenvalue is below -1.
pub fn m1_prime(s: &SpectrumSummary) -> usize {
    let first = s.smallest();
    if first.main_angle == 0.0 {
        first.mult + 1
    } else {
        first.mult
    }
}

pub fn tau2_condition(s: &SpectrumSummary, cfg: &ToleranceConfig) -> Tau2Verdict {
    if s.len() < 3 || !s.below_minus_one(1, cfg) {
        return Tau2Verdict::NotApplicable;
    }
    let (t1, t2) = (s.distinct[0], s.distinct[1]);
    if t1.mult != 1 || t2.main_angle != 0.0 {
        return Tau2Verdict::NotApplicable;
    }
    let lhs = t1.main_angle.powi(2) / (t2.tau - t1.tau);
    let rhs: f64 = s.distinct[2..]
        .iter()
        .map(|d| d.main_angle.powi(2) / (d.tau - t2.tau))
        .sum();
    let scale = 1f64.max(lhs.abs()).max(rhs.abs());
    if (lhs - rhs).abs() <= cfg.tol_equality * scale {
        Tau2Verdict::Equality
    } else if lhs > rhs {
        Tau2Verdict::StrictInequality
    } else {
        Tau2Verdict::Violated
    }
}

pub fn m2_prime(s: &SpectrumSummary, cfg: &ToleranceConfig) -> usize {
    let m2 = s.get(1).map_or(0, |d| d.mult);
    match tau2_condition(s, cfg) {
        Tau2Verdict::Equality => m2 + 2,
        Tau2Verdict::StrictInequality => m2 + 1,
        Tau2Verdict::NotApplicable | Tau2Verdict::Violated => 0,
    }
}

/// Lower and upper bounds from multiplicities alone:
/// `n - 1 - max{m1, m1_bar, m2 + 1, m2_bar + 1} <= Rep <= n - max{m1, m1_bar, 2}`.
pub fn multiplicity_bounds(s: &SpectrumSummary, s_bar: &SpectrumSummary) -> (usize, usize) {
    let n = s.n;
    let m = |x: &SpectrumSummary, i: usize| x.get(i).map_or(0, |d| d.mult);
    let lo_max = m(s, 0).max(m(s_bar, 0)).max(m(s, 1) + 1).max(m(s_bar, 1) + 1);
    let hi_max = m(s, 0).max(m(s_bar, 0)).max(2);
    ((n - 1).saturating_sub(lo_max), n.saturating_sub(hi_max))
}

fn side_primes(s: &SpectrumSummary, cfg: &ToleranceConfig) -> (usize, usize) {
    (m1_prime(s), m2_prime(s, cfg))
}

/// Certificate for the spectral formula with the documented tie-break:
/// `Tau1` before `Tau2` before `Fallback`, then `G` before the complement.
fn pick_certificate(
    s: &SpectrumSummary,
    s_bar: &SpectrumSummary,
    (m1p, m2p): (usize, usize),
    (m1p_bar, m2p_bar): (usize, usize),
    best: usize,
) -> Certificate {
    let candidates = [
        (Branch::Tau1, Side::G, m1p),
        (Branch::Tau1, Side::Complement, m1p_bar),
        (Branch::Tau2, Side::G, m2p),
        (Branch::Tau2, Side::Complement, m2p_bar),
    ];
    let (branch, side) = candidates
        .iter()
        .find(|c| c.2 == best)
        .map_or((Branch::Fallback, Side::G), |c| (c.0, c.1));
    let summary = if side == Side::G { s } else { s_bar };
    let b = match branch {
        Branch::Tau1 => Some(critical_ratio(summary.smallest().tau)),
        Branch::Tau2 => Some(critical_ratio(summary.distinct[1].tau)),
        Branch::Fallback => None,
    };
    Certificate { side, branch, b, m1p, m2p, m1p_bar, m2p_bar }
}

/// Representation number of `g` by the full case analysis.
pub fn representation_number(g: &Graph, cfg: &ToleranceConfig) -> Result<RepResult> {
    let n = g.n();
    if n == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    if g.is_complete() {
        return Ok(RepResult { rep: n - 1, case: RepCase::Complete, certificate: None });
    }
    if g.is_empty() {
        return Ok(RepResult { rep: n - 1, case: RepCase::Empty, certificate: None });
    }

    let complement = g.complement();
    let clique_side = [(g, RepCase::CliqueUnion, Side::Complement), (&complement, RepCase::CliqueUnionComplement, Side::G)]
        .into_iter()
        .find_map(|(h, case, other)| {
            classify_clique_union(h)
                .filter(|info| info.components() >= 2)
                .map(|info| (info.r, case, other))
        });

    if let Some((r, case, other)) = clique_side {
        // Realized on the side that is not a clique union.
        let other_graph = if other == Side::G { g } else { &complement };
        let s = summarize(other_graph, cfg)?;
        let primes = side_primes(&s, cfg);
        let (branch, b) = if r >= 2 {
            (Branch::Tau1, Some(critical_ratio(s.smallest().tau)))
        } else {
            (Branch::Fallback, None)
        };
        let (g_primes, bar_primes) = if other == Side::G { (primes, (0, 0)) } else { ((0, 0), primes) };
        let certificate = Certificate {
            side: other,
            branch,
            b,
            m1p: g_primes.0,
            m2p: g_primes.1,
            m1p_bar: bar_primes.0,
            m2p_bar: bar_primes.1,
        };
        return Ok(RepResult { rep: n - r.max(2), case, certificate: Some(certificate) });
    }

    let s = summarize(g, cfg)?;
    let s_bar = summarize(&complement, cfg)?;
    let primes = side_primes(&s, cfg);
    let primes_bar = side_primes(&s_bar, cfg);
    let best = primes.0.max(primes.1).max(primes_bar.0).max(primes_bar.1).max(2);
    let certificate = pick_certificate(&s, &s_bar, primes, primes_bar, best);
    Ok(RepResult {
        rep: n.saturating_sub(best),
        case: RepCase::Spectral,
        certificate: Some(certificate),
    })
}

/// Representation number of a regular graph from multiplicities alone:
/// `n - 1 - max{m1, m_(s-1)}` if connected, `n - 1 - max{m1, r - 1}` with
/// `r` components otherwise.
pub fn representation_number_regular(g: &Graph, cfg: &ToleranceConfig) -> Result<usize> {
    if g.regularity().is_none() {
        return Err(Error::Inapplicable("graph is not regular".into()));
    }
    let complement = g.complement();
    if classify_clique_union(g).is_some() || classify_clique_union(&complement).is_some() {
        return Err(Error::Inapplicable(
            "graph or its complement is a union of equal cliques".into(),
        ));
    }
    let s = summarize(g, cfg)?;
    let n = g.n();
    let m1 = s.smallest().mult;
    let comps = g.components().len();
    let other = if comps == 1 {
        s.distinct[s.len() - 2].mult
    } else {
        comps - 1
    };
    Ok(n - 1 - m1.max(other))
}

/// Representation number of a strongly regular graph with parameters
/// `(n, k, lambda, mu)` that is neither complete multipartite nor a union
/// of cliques.
pub fn srg_rep(n: usize, k: usize, lambda: usize, mu: usize) -> Result<usize> {
    let infeasible = |why: &str| Error::InvalidInput(format!("infeasible parameters ({n},{k},{lambda},{mu}): {why}"));
    if n < 2 || k == 0 || k >= n - 1 || lambda >= k || mu > k {
        return Err(infeasible("out of range"));
    }
    if k * (k - lambda - 1) != (n - k - 1) * mu {
        return Err(infeasible("k(k - lambda - 1) != (n - k - 1) mu"));
    }
    if mu == 0 {
        return Err(Error::Inapplicable("mu = 0: disjoint union of cliques".into()));
    }
    if mu == k {
        return Err(Error::Inapplicable("mu = k: complete multipartite".into()));
    }
    let (nf, kf, lf, mf) = (n as f64, k as f64, lambda as f64, mu as f64);
    let disc = (mf - lf).powi(2) + 4.0 * (kf - mf);
    let skew = ((nf - 1.0) * (mf - lf) - 2.0 * kf) / disc.sqrt();
    for m in [0.5 * (nf - 1.0 + skew), 0.5 * (nf - 1.0 - skew)] {
        if (m - m.round()).abs() > 1e-9 || m.round() < 1.0 {
            return Err(infeasible("eigenvalue multiplicities are not positive integers"));
        }
    }
    let rep = 0.5 * (nf - 1.0 - skew.abs());
    Ok(rep.round() as usize)
}

/// Upper bound `n - 1 - r` on the representation number of the line graph
/// (`r` = bipartite components), and whether `e >= 2(n - r)` makes it exact.
pub fn line_graph_bound(g: &Graph) -> Result<(usize, bool)> {
    let e = g.edge_count();
    if e == 0 {
        return Err(Error::InvalidInput("line graph of an edgeless graph".into()));
    }
    let n = g.n();
    let r = bipartite_component_count(g);
    Ok((n - 1 - r, e >= 2 * (n - r)))
}
