//! Label flips and the robustness bound `d' <= d + sqrt(b)` after changing
//! `b` cells of the incidence matrix.

use std::collections::HashSet;

use rand::seq::index;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::mixing::{compute, Baseline, Method};
use crate::report::{sig12, sig12_vec};
use crate::rng;

/// Floating-point slack when comparing `d'` against `d + sqrt(b)`.
pub const BOUND_SLACK: f64 = 1e-12;

/// A cell of the incidence matrix: (hypothesis, example).
pub type Cell = (usize, usize);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flips {
    Cells(Vec<Cell>),
    /// `count` distinct cells drawn uniformly without replacement.
    Random { count: usize, seed: u64 },
}

pub fn flip_labels(class: &HypothesisClass, flips: &Flips) -> Result<HypothesisClass> {
    match flips {
        Flips::Cells(cells) => flip_cells(class, cells),
        Flips::Random { count, seed } => {
            let cells = random_cells(class, *count, *seed)?;
            Ok(class.with_cells_toggled(&cells))
        }
    }
}

/// Complements exactly the listed cells; they must be distinct and in range.
pub fn flip_cells(class: &HypothesisClass, cells: &[Cell]) -> Result<HypothesisClass> {
    let mut seen = HashSet::with_capacity(cells.len());
    for &(h, x) in cells {
        if h >= class.num_hypotheses() || x >= class.num_examples() {
            return Err(Error::input(format!(
                "cell ({h}, {x}) out of range for a {}x{} class",
                class.num_hypotheses(),
                class.num_examples()
            )));
        }
        if !seen.insert((h, x)) {
            return Err(Error::input(format!("cell ({h}, {x}) listed twice")));
        }
    }
    Ok(class.with_cells_toggled(cells))
}

/// `count` distinct cells, sorted, drawn without replacement.
pub fn random_cells(class: &HypothesisClass, count: usize, seed: u64) -> Result<Vec<Cell>> {
    let nx = class.num_examples();
    let total = class.num_hypotheses() * nx;
    if count > total {
        return Err(Error::input(format!("cannot flip {count} of {total} cells")));
    }
    let mut rng = rng::seeded(seed);
    let mut picked: Vec<usize> = index::sample(&mut rng, total, count).into_vec();
    picked.sort_unstable();
    Ok(picked.into_iter().map(|i| (i / nx, i % nx)).collect())
}

/// One perturbation compared against the bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FlipReport {
    pub b: usize,
    #[serde(serialize_with = "sig12")]
    pub d_before: f64,
    #[serde(serialize_with = "sig12")]
    pub d_after: f64,
    /// `d_before + sqrt(b)`.
    #[serde(serialize_with = "sig12")]
    pub bound: f64,
    pub holds: bool,
}

impl FlipReport {
    pub fn new(b: usize, d_before: f64, d_after: f64) -> Self {
        let bound = d_before + (b as f64).sqrt();
        FlipReport {
            b,
            d_before,
            d_after,
            bound,
            holds: d_after <= bound + BOUND_SLACK,
        }
    }
}

/// Mixing parameters before and after flipping `cells`, by `method`.
pub fn flip_report(class: &HypothesisClass, cells: &[Cell], method: &Method) -> Result<(HypothesisClass, FlipReport)> {
    let after = flip_cells(class, cells)?;
    let d_before = compute(class, method, Baseline::Half)?.d_value;
    let d_after = compute(&after, method, Baseline::Half)?.d_value;
    Ok((after, FlipReport::new(cells.len(), d_before, d_after)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PerturbationReport {
    pub b: usize,
    pub trials: usize,
    pub seed: u64,
    #[serde(serialize_with = "sig12")]
    pub d_before: f64,
    #[serde(serialize_with = "sig12_vec")]
    pub d_after: Vec<f64>,
    #[serde(serialize_with = "sig12")]
    pub sqrt_b: f64,
    /// Largest `d_after - d_before` observed (0 with no trials).
    #[serde(serialize_with = "sig12")]
    pub max_gap: f64,
    pub violations: usize,
    pub holds: bool,
}

/// Runs `trials` random `b`-cell perturbations; trial `i` draws its cells
/// with seed `derive_seed(seed, i)`.
pub fn check_perturbation_bound(
    class: &HypothesisClass,
    b: usize,
    trials: usize,
    seed: u64,
    method: &Method,
) -> Result<PerturbationReport> {
    let d_before = compute(class, method, Baseline::Half)?.d_value;
    let d_after = (0..trials)
        .into_par_iter()
        .map(|i| {
            let cells = random_cells(class, b, rng::derive_seed(seed, i as u64))?;
            let after = class.with_cells_toggled(&cells);
            Ok(compute(&after, method, Baseline::Half)?.d_value)
        })
        .collect::<Result<Vec<f64>>>()?;
    let violations = d_after
        .iter()
        .filter(|&&d| !FlipReport::new(b, d_before, d).holds)
        .count();
    let max_gap = d_after.iter().map(|d| d - d_before).fold(0.0f64, f64::max);
    Ok(PerturbationReport {
        b,
        trials,
        seed,
        d_before,
        d_after,
        sqrt_b: (b as f64).sqrt(),
        max_gap,
        violations,
        holds: violations == 0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypothesis_graph::{gen_parity, gen_random};

    #[test]
    fn zero_flips_is_identity() {
        let c = gen_random(5, 6, 1).unwrap();
        assert_eq!(flip_labels(&c, &Flips::Random { count: 0, seed: 3 }).unwrap(), c);
        assert_eq!(flip_cells(&c, &[]).unwrap(), c);
    }

    #[test]
    fn flipping_twice_restores() {
        let c = gen_random(5, 6, 1).unwrap();
        let once = flip_cells(&c, &[(2, 3), (0, 0)]).unwrap();
        assert_ne!(once, c);
        assert_eq!(flip_cells(&once, &[(2, 3), (0, 0)]).unwrap(), c);
    }

    #[test]
    fn parity_zero_column_changes() {
        let p = gen_parity(2).unwrap();
        let q = flip_cells(&p, &[(0, 0)]).unwrap();
        assert_eq!(q.col_ones(0), 1);
        assert_eq!(p.col_ones(0), 0);
    }

    #[test]
    fn invalid_flips() {
        let c = gen_random(3, 3, 0).unwrap();
        assert!(matches!(flip_cells(&c, &[(3, 0)]), Err(Error::Input(_))));
        assert!(matches!(flip_cells(&c, &[(1, 1), (1, 1)]), Err(Error::Input(_))));
        assert!(random_cells(&c, 10, 0).is_err());
    }

    #[test]
    fn random_cells_are_distinct_and_exact() {
        let c = gen_random(7, 9, 2).unwrap();
        for b in [0, 1, 5, 63] {
            let cells = random_cells(&c, b, 11).unwrap();
            assert_eq!(cells.len(), b);
            let flipped = flip_cells(&c, &cells).unwrap();
            let diff = (0..7)
                .flat_map(|h| (0..9).map(move |x| (h, x)))
                .filter(|&(h, x)| c.label(h, x) != flipped.label(h, x))
                .count();
            assert_eq!(diff, b);
        }
        assert_eq!(random_cells(&c, 5, 11).unwrap(), random_cells(&c, 5, 11).unwrap());
    }

    #[test]
    fn edge_count_changes_by_flipped_cells() {
        let c = gen_random(6, 6, 4).unwrap();
        let cells = random_cells(&c, 10, 1).unwrap();
        let ones = cells.iter().filter(|&&(h, x)| c.label(h, x)).count();
        let after = flip_cells(&c, &cells).unwrap();
        assert_eq!(after.total_edges() + ones, c.total_edges() + (cells.len() - ones));
    }

    #[test]
    fn bound_with_no_flips_is_tight() {
        let c = gen_random(6, 6, 0).unwrap();
        let r = check_perturbation_bound(&c, 0, 5, 1, &Method::exact()).unwrap();
        assert_eq!(r.max_gap, 0.0);
        assert!(r.holds);
        assert!(r.d_after.iter().all(|&d| d == r.d_before));
    }

    #[test]
    fn parity_bound_holds() {
        let p = gen_parity(3).unwrap();
        let r = check_perturbation_bound(&p, 4, 50, 9, &Method::exact()).unwrap();
        assert_eq!(r.trials, 50);
        assert!(r.holds, "{r:?}");
    }

    #[test]
    fn concentrated_row_flips_hold() {
        for seed in 0..10 {
            let c = gen_random(8, 8, seed).unwrap();
            let row: Vec<Cell> = (0..8).map(|x| (seed as usize % 8, x)).collect();
            let (_, rep) = flip_report(&c, &row, &Method::exact()).unwrap();
            assert!(rep.holds, "{rep:?}");
        }
    }
}
