//! The mixing parameter of a class: the largest normalised discrepancy
//! `|e(S,T) - p*s*t| / sqrt(s*t)` over non-empty subset pairs, computed
//! exactly, bounded above spectrally, or bounded below by search.

mod exact;
mod oracle;
mod score;
mod search;
mod spectral;
mod theorem;

pub use exact::{ExactConfig, DEFAULT_EXACT_CAP, MAX_EXACT_CAP};
pub use oracle::ORACLE_CAP;
pub use score::Baseline;
pub use search::SearchConfig;
pub use spectral::{SpectralConfig, SpectralEstimate};
pub use theorem::{check_theorem1_preconditions, Theorem1Report};

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::Result;
use crate::hypothesis_graph::{HypothesisClass, SubsetPair};
use crate::report::{sig12, sig12_opt};
use exact::Found;
use score::Score;

/// How to obtain the mixing parameter.
#[derive(Clone, Debug, PartialEq)]
pub enum Method {
    Exact(ExactConfig),
    Oracle,
    Spectral(SpectralConfig),
    Search(SearchConfig),
}

impl Method {
    pub fn exact() -> Self {
        Method::Exact(ExactConfig::default())
    }

    pub fn spectral() -> Self {
        Method::Spectral(SpectralConfig::default())
    }

    pub fn search(seed: u64) -> Self {
        Method::Search(SearchConfig {
            seed,
            ..SearchConfig::default()
        })
    }

    pub fn kind(&self) -> MethodKind {
        match self {
            Method::Exact(_) => MethodKind::Exact,
            Method::Oracle => MethodKind::Oracle,
            Method::Spectral(_) => MethodKind::Spectral,
            Method::Search(_) => MethodKind::Search,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodKind {
    Exact,
    Oracle,
    Spectral,
    Search,
}

/// Whether the reported mixing complexity is the true value or a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum McKind {
    Exact,
    Lower,
    Upper,
}

/// Known interval for the true mixing parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct DBounds {
    #[serde(serialize_with = "sig12_opt")]
    pub lower: Option<f64>,
    #[serde(serialize_with = "sig12_opt")]
    pub upper: Option<f64>,
}

#[derive(Clone, Debug, Serialize)]
pub struct MixingReport {
    pub method: MethodKind,
    #[serde(serialize_with = "sig12")]
    pub d_value: f64,
    /// `+inf` when `d_value == 0`; serialised as `null`.
    #[serde(rename = "mc", serialize_with = "sig12")]
    pub mixing_complexity: f64,
    pub mc_kind: McKind,
    #[serde(serialize_with = "sig12")]
    pub density_baseline: f64,
    pub is_mixing: bool,
    #[serde(serialize_with = "sig12")]
    pub mixing_constant: f64,
    pub witness: Option<SubsetPair>,
    pub bounds: DBounds,
    pub warnings: Vec<String>,
    #[serde(skip)]
    pub spectral: Option<SpectralEstimate>,
    #[serde(skip)]
    score: Option<Score>,
    #[serde(skip)]
    num_examples: usize,
}

impl MixingReport {
    fn new(class: &HypothesisClass, method: MethodKind, d_value: f64, p: f64) -> Self {
        let cells = (class.num_hypotheses() * class.num_examples()) as f64;
        let (mixing_complexity, warnings) = if d_value > 0.0 {
            (cells.sqrt() / d_value, Vec::new())
        } else {
            (
                f64::INFINITY,
                vec!["mixing parameter is 0; mixing complexity is infinite".to_string()],
            )
        };
        let (mc_kind, bounds) = match method {
            MethodKind::Exact | MethodKind::Oracle => (
                McKind::Exact,
                DBounds {
                    lower: Some(d_value),
                    upper: Some(d_value),
                },
            ),
            MethodKind::Spectral => (
                McKind::Lower,
                DBounds {
                    lower: None,
                    upper: Some(d_value),
                },
            ),
            MethodKind::Search => (
                McKind::Upper,
                DBounds {
                    lower: Some(d_value),
                    upper: None,
                },
            ),
        };
        MixingReport {
            method,
            d_value,
            mixing_complexity,
            mc_kind,
            density_baseline: p,
            is_mixing: false,
            mixing_constant: 1.0,
            witness: None,
            bounds,
            warnings,
            spectral: None,
            score: None,
            num_examples: class.num_examples(),
        }
        .with_mixing_constant(1.0)
    }

    fn from_found(class: &HypothesisClass, method: MethodKind, found: Found, p: f64) -> Self {
        let mut r = MixingReport::new(class, method, found.score.value(), p);
        r.witness = Some(found.witness);
        r.score = Some(found.score);
        r
    }

    /// Re-evaluates the verdict `d <= c * sqrt(|X|)`.
    pub fn with_mixing_constant(mut self, c: f64) -> Self {
        self.mixing_constant = c;
        self.is_mixing = self.d_value <= c * (self.num_examples as f64).sqrt();
        self
    }

    /// Exact comparison of the underlying discrepancies, when both reports
    /// come from enumeration or search.
    pub fn cmp_exact(&self, other: &MixingReport) -> Option<Ordering> {
        match (&self.score, &other.score) {
            (Some(a), Some(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }

    pub fn to_json(&self) -> String {
        crate::report::to_json(self)
    }
}

/// `|e(S,T) - p*s*t| / sqrt(s*t)` for one pair.
pub fn discrepancy(class: &HypothesisClass, pair: &SubsetPair, baseline: Baseline) -> Result<f64> {
    pair.validate(class)?;
    pair.require_non_empty()?;
    let scorer = baseline.resolve(class)?;
    let e = class.edge_count(pair)? as u64;
    Ok(scorer.score(e, pair.s() as u64, pair.t() as u64).value())
}

pub fn d_min_exact(class: &HypothesisClass, baseline: Baseline, cfg: &ExactConfig) -> Result<MixingReport> {
    let scorer = baseline.resolve(class)?;
    let found = exact::exact_max(class, &scorer, cfg)?;
    Ok(MixingReport::from_found(class, MethodKind::Exact, found, scorer.p()))
}

pub fn d_min_bruteforce_oracle(class: &HypothesisClass, baseline: Baseline) -> Result<MixingReport> {
    let scorer = baseline.resolve(class)?;
    let found = oracle::bruteforce_max(class, &scorer)?;
    Ok(MixingReport::from_found(class, MethodKind::Oracle, found, scorer.p()))
}

/// Upper bound `sigma_max(M - pJ)`; the true value is at most
/// `bounds.upper = d_value * (1 + tol)`.
pub fn d_spectral_bound(
    class: &HypothesisClass,
    baseline: Baseline,
    cfg: &SpectralConfig,
) -> Result<MixingReport> {
    let scorer = baseline.resolve(class)?;
    let est = spectral::top_singular_value(class, scorer.p(), cfg)?;
    let mut r = MixingReport::new(class, MethodKind::Spectral, est.sigma, scorer.p());
    r.bounds.upper = Some(est.sigma * (1.0 + cfg.tol));
    r.spectral = Some(est);
    Ok(r)
}

pub fn d_search_lower_bound(
    class: &HypothesisClass,
    baseline: Baseline,
    cfg: &SearchConfig,
) -> Result<MixingReport> {
    let scorer = baseline.resolve(class)?;
    let found = search::hill_climb(class, &scorer, cfg)?;
    Ok(MixingReport::from_found(class, MethodKind::Search, found, scorer.p()))
}

pub fn compute(class: &HypothesisClass, method: &Method, baseline: Baseline) -> Result<MixingReport> {
    match method {
        Method::Exact(cfg) => d_min_exact(class, baseline, cfg),
        Method::Oracle => d_min_bruteforce_oracle(class, baseline),
        Method::Spectral(cfg) => d_spectral_bound(class, baseline, cfg),
        Method::Search(cfg) => d_search_lower_bound(class, baseline, cfg),
    }
}

/// `sqrt(|H||X|) / d` with the half baseline. Spectral `d` gives a lower
/// bound on the true value, search `d` an upper bound.
pub fn mixing_complexity(class: &HypothesisClass, method: &Method) -> Result<f64> {
    Ok(compute(class, method, Baseline::Half)?.mixing_complexity)
}

/// `d <= c * sqrt(|X|)`, with the half baseline.
pub fn is_mixing(class: &HypothesisClass, method: &Method, mixing_constant: f64) -> Result<bool> {
    Ok(compute(class, method, Baseline::Half)?
        .with_mixing_constant(mixing_constant)
        .is_mixing)
}

#[cfg(test)]
mod tests;
