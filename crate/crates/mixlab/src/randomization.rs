//! Label-corruption sweep: re-draw a growing fraction of the labels with
//! fair coins and watch the mixing complexity move towards the random regime.

use rand::seq::index;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::mixing::{compute, Baseline, McKind, Method, MethodKind, DEFAULT_EXACT_CAP};
use crate::perturbation::{Cell, BOUND_SLACK};
use crate::report::{sig12, sig12_vec};
use crate::rng;

#[derive(Clone, Debug, PartialEq)]
pub struct RandomizationConfig {
    /// Corruption fractions are `0, 1/levels, ..., 1`.
    pub levels: usize,
    pub trials: usize,
    pub seed: u64,
    /// `None` picks exact enumeration when the smaller side is at most
    /// [`DEFAULT_EXACT_CAP`], otherwise the spectral bound.
    pub method: Option<Method>,
}

impl Default for RandomizationConfig {
    fn default() -> Self {
        RandomizationConfig {
            levels: 4,
            trials: 1,
            seed: 0,
            method: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevelReport {
    pub level: usize,
    #[serde(serialize_with = "sig12")]
    pub fraction: f64,
    /// Cells re-drawn per trial.
    pub resampled: usize,
    /// Cells whose label actually changed, per trial.
    pub flipped: Vec<usize>,
    #[serde(serialize_with = "sig12_vec")]
    pub d: Vec<f64>,
    #[serde(serialize_with = "sig12_vec")]
    pub mc: Vec<f64>,
    #[serde(serialize_with = "sig12")]
    pub mean_mc: f64,
    /// `d_level <= d_0 + sqrt(flipped)` in every trial.
    pub flip_bound_holds: bool,
    #[serde(serialize_with = "sig12")]
    pub max_flip_gap: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RandomizationReport {
    pub method: MethodKind,
    pub mc_kind: McKind,
    pub trials: usize,
    pub seed: u64,
    #[serde(serialize_with = "sig12")]
    pub d_original: f64,
    #[serde(serialize_with = "sig12")]
    pub mc_original: f64,
    pub levels: Vec<LevelReport>,
    pub flip_bound_holds: bool,
}

impl RandomizationReport {
    pub fn to_json(&self) -> String {
        crate::report::to_json(self)
    }
}

fn auto_method(class: &HypothesisClass) -> Method {
    if class.num_hypotheses().min(class.num_examples()) <= DEFAULT_EXACT_CAP {
        Method::exact()
    } else {
        Method::spectral()
    }
}

/// Re-draws `count` distinct random cells with fair coins and returns the
/// cells whose label changed.
pub fn resample_cells(class: &HypothesisClass, count: usize, seed: u64) -> Result<Vec<Cell>> {
    let nx = class.num_examples();
    let total = class.num_hypotheses() * nx;
    if count > total {
        return Err(Error::input(format!("cannot re-draw {count} of {total} cells")));
    }
    let mut rng = rng::seeded(seed);
    let mut picked = index::sample(&mut rng, total, count).into_vec();
    picked.sort_unstable();
    Ok(picked
        .into_iter()
        .map(|i| (i / nx, i % nx))
        .filter(|&(h, x)| rng.gen::<bool>() != class.label(h, x))
        .collect())
}

/// Trial `j` of level `i` uses seed `derive_seed(derive_seed(seed, i), j)`.
pub fn randomization_test(class: &HypothesisClass, cfg: &RandomizationConfig) -> Result<RandomizationReport> {
    if cfg.levels == 0 || cfg.trials == 0 {
        return Err(Error::input("levels and trials must be positive"));
    }
    let method = cfg.method.clone().unwrap_or_else(|| auto_method(class));
    let original = compute(class, &method, Baseline::Half)?;
    let d0 = original.d_value;
    // the spectral estimate may fall short of the true norm by a factor (1 + tol)
    let slack = match &method {
        Method::Spectral(s) => s.tol * (d0 + 1.0) + BOUND_SLACK,
        _ => BOUND_SLACK,
    };
    let total = class.num_hypotheses() * class.num_examples();

    let mut levels = Vec::with_capacity(cfg.levels + 1);
    for level in 0..=cfg.levels {
        let fraction = level as f64 / cfg.levels as f64;
        let resampled = (fraction * total as f64).round() as usize;
        let runs = (0..cfg.trials)
            .into_par_iter()
            .map(|j| {
                let seed = rng::derive_seed(rng::derive_seed(cfg.seed, level as u64), j as u64);
                let cells = resample_cells(class, resampled, seed)?;
                let r = compute(&class.with_cells_toggled(&cells), &method, Baseline::Half)?;
                Ok((cells.len(), r.d_value, r.mixing_complexity))
            })
            .collect::<Result<Vec<_>>>()?;
        let flipped: Vec<usize> = runs.iter().map(|r| r.0).collect();
        let d: Vec<f64> = runs.iter().map(|r| r.1).collect();
        let mc: Vec<f64> = runs.iter().map(|r| r.2).collect();
        let gaps = flipped.iter().zip(&d).map(|(&b, &dl)| dl - d0 - (b as f64).sqrt());
        let max_flip_gap = gaps.clone().fold(f64::NEG_INFINITY, f64::max);
        levels.push(LevelReport {
            level,
            fraction,
            resampled,
            mean_mc: mc.iter().sum::<f64>() / mc.len() as f64,
            flip_bound_holds: gaps.into_iter().all(|g| g <= slack),
            max_flip_gap,
            flipped,
            d,
            mc,
        });
    }
    Ok(RandomizationReport {
        method: original.method,
        mc_kind: original.mc_kind,
        trials: cfg.trials,
        seed: cfg.seed,
        d_original: d0,
        mc_original: original.mixing_complexity,
        flip_bound_holds: levels.iter().all(|l| l.flip_bound_holds),
        levels,
    })
}
