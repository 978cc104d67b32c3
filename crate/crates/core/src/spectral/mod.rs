//! Adjacency spectra: distinct eigenvalues, multiplicities and main angles.
//!
//! The main angle of an eigenvalue is the length of the projection of the
//! normalized all-ones vector onto its eigenspace. It vanishes exactly when
//! the eigenspace is orthogonal to the all-ones vector, which is the
//! distinction the representation-number formula turns on.

mod jacobi;

pub use jacobi::{eigendecompose, EigenDecomposition};
pub(crate) use jacobi::check_symmetric;

use std::ops::Range;

use nalgebra::DMatrix;
use serde::Serialize;

use crate::graph::Graph;
use crate::{Error, Result, ToleranceConfig};

/// One distinct eigenvalue.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DistinctEigenvalue {
    pub tau: f64,
    pub mult: usize,
    #[serde(rename = "beta")]
    pub main_angle: f64,
}

/// Distinct eigenvalues in strictly ascending order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectrumSummary {
    pub n: usize,
    pub distinct: Vec<DistinctEigenvalue>,
}

impl SpectrumSummary {
    /// Builds a summary from raw `(tau, mult, main_angle)` data, e.g. a
    /// tabulated spectrum. `n` is the sum of the multiplicities.
    pub fn from_parts(parts: &[(f64, usize, f64)]) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("spectrum has no eigenvalues".into()));
        }
        for w in parts.windows(2) {
            if w[0].0.partial_cmp(&w[1].0) != Some(std::cmp::Ordering::Less) {
                return Err(Error::InvalidInput("eigenvalues must be strictly ascending".into()));
            }
        }
        let mut distinct = Vec::with_capacity(parts.len());
        for &(tau, mult, main_angle) in parts {
            if mult == 0 || !tau.is_finite() || !(0.0..=1.0).contains(&main_angle) {
                return Err(Error::InvalidInput(format!(
                    "invalid eigenvalue entry ({tau}, {mult}, {main_angle})"
                )));
            }
            distinct.push(DistinctEigenvalue { tau, mult, main_angle });
        }
        let n = distinct.iter().map(|d| d.mult).sum();
        Ok(SpectrumSummary { n, distinct })
    }

    /// Number of distinct eigenvalues.
    pub fn len(&self) -> usize {
        self.distinct.len()
    }

    pub fn is_empty(&self) -> bool {
        self.distinct.is_empty()
    }

    /// `i`-th smallest distinct eigenvalue, 0-based.
    pub fn get(&self, i: usize) -> Option<&DistinctEigenvalue> {
        self.distinct.get(i)
    }

    pub fn smallest(&self) -> &DistinctEigenvalue {
        &self.distinct[0]
    }

    pub fn largest(&self) -> &DistinctEigenvalue {
        self.distinct.last().expect("non-empty spectrum")
    }

    /// Smallest gap between consecutive distinct eigenvalues (`None` if
    /// there is only one). A gap close to the grouping tolerance signals a
    /// possibly misjudged multiplicity.
    pub fn min_gap(&self) -> Option<f64> {
        self.distinct
            .windows(2)
            .map(|w| w[1].tau - w[0].tau)
            .min_by(f64::total_cmp)
    }

    /// Characteristic polynomial `prod (x - tau)^mult` evaluated at `x`.
    pub fn char_poly(&self, x: f64) -> f64 {
        self.distinct
            .iter()
            .map(|d| (x - d.tau).powi(d.mult as i32))
            .product()
    }

    /// Whether the eigenvalue `i` is strictly below -1 by more than the
    /// grouping resolution (the exact value -1 belongs to clique unions).
    pub fn below_minus_one(&self, i: usize, cfg: &ToleranceConfig) -> bool {
        let radius = self
            .distinct
            .iter()
            .fold(1.0f64, |m, d| m.max(d.tau.abs()));
        self.get(i)
            .is_some_and(|d| d.tau < -1.0 - cfg.tol_group * radius)
    }
}

/// Full spectral data of a graph: the decomposition plus the grouping into
/// distinct eigenvalues.
#[derive(Clone, Debug)]
pub struct Spectrum {
    pub decomposition: EigenDecomposition,
    pub summary: SpectrumSummary,
    /// Column range of `decomposition.vectors` spanning each eigenspace.
    pub groups: Vec<Range<usize>>,
}

impl Spectrum {
    /// Orthonormal basis of the eigenspace of the `i`-th distinct eigenvalue.
    pub fn eigenspace(&self, i: usize) -> DMatrix<f64> {
        let r = self.groups[i].clone();
        self.decomposition.vectors.columns(r.start, r.len()).into_owned()
    }

    /// Largest spread of raw eigenvalues within one group.
    pub fn max_group_spread(&self) -> f64 {
        self.groups
            .iter()
            .map(|r| self.decomposition.values[r.end - 1] - self.decomposition.values[r.start])
            .fold(0.0, f64::max)
    }
}

/// Groups an ascending decomposition into distinct eigenvalues.
pub fn group(dec: &EigenDecomposition, cfg: &ToleranceConfig) -> Spectrum {
    let n = dec.dim();
    let gap = cfg.tol_group * dec.spectral_radius().max(1.0);
    let mut groups = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || dec.values[i] - dec.values[i - 1] > gap {
            groups.push(start..i);
            start = i;
        }
    }
    let sqrt_n = (n as f64).sqrt();
    let distinct = groups
        .iter()
        .map(|r| {
            let vals = &dec.values[r.clone()];
            let tau = vals.iter().sum::<f64>() / vals.len() as f64;
            let beta_sq: f64 = r
                .clone()
                .map(|c| (dec.vectors.column(c).sum() / sqrt_n).powi(2))
                .sum();
            let mut beta = beta_sq.sqrt().min(1.0);
            if beta < cfg.tol_zero_angle {
                beta = 0.0;
            }
            DistinctEigenvalue { tau, mult: r.len(), main_angle: beta }
        })
        .collect();
    Spectrum {
        decomposition: dec.clone(),
        summary: SpectrumSummary { n, distinct },
        groups,
    }
}

/// Eigendecomposes the adjacency matrix of `g` and groups the result.
pub fn spectrum(g: &Graph, cfg: &ToleranceConfig) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::InvalidInput("graph has no vertices".into()));
    }
    let dec = eigendecompose(&g.adjacency_matrix(), cfg)?;
    Ok(group(&dec, cfg))
}

/// Distinct eigenvalues, multiplicities and main angles of `g`.
pub fn summarize(g: &Graph, cfg: &ToleranceConfig) -> Result<SpectrumSummary> {
    spectrum(g, cfg).map(|s| s.summary)
}
