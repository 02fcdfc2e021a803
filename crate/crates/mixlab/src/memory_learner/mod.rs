//! Bounded-memory learners as finite state machines over labelled examples,
//! and a simulator measuring how many i.i.d. examples they need.

mod learners;
mod simulate;
mod table;

pub use learners::{ThresholdIntervalLearner, VersionSpaceLearner, MAX_VERSION_SPACE_HYPOTHESES};
pub use simulate::{
    run_learner, run_targets, sample_complexity, Sampling, SimulationConfig, SimulationOutcome,
    TargetSummary, TrialOutcome, TrialRow,
};
pub use table::{
    read_table_learner, read_table_learner_path, write_table_learner, write_table_learner_path, TableLearner,
    MAX_TABLE_CELLS,
};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;

pub type StateId = u64;

/// A learner whose whole memory is one of `num_states()` states.
///
/// The learner starts in `initial_state()`, moves on every labelled example,
/// and at any time answers with the hypothesis `output(state)`.
pub trait FiniteStateLearner: Sync {
    fn num_states(&self) -> u64;
    fn initial_state(&self) -> StateId;
    /// Size of the example domain the transition function is defined on.
    fn num_examples(&self) -> usize;
    fn transition(&self, state: StateId, example: usize, label: bool) -> StateId;
    fn output(&self, state: StateId) -> usize;

    /// `ceil(log2(num_states))`.
    fn memory_bits(&self) -> u32 {
        let n = self.num_states();
        if n <= 1 {
            0
        } else {
            64 - (n - 1).leading_zeros()
        }
    }
}

/// Distribution over the examples.
#[derive(Clone, Debug, PartialEq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Distribution {
    #[default]
    Uniform,
    Weights(Vec<f64>),
}

impl Distribution {
    pub fn validate(&self, num_examples: usize) -> Result<()> {
        if let Distribution::Weights(w) = self {
            if w.len() != num_examples {
                return Err(Error::input(format!(
                    "distribution has {} entries for {num_examples} examples",
                    w.len()
                )));
            }
            if w.iter().any(|&p| !(p >= 0.0)) {
                return Err(Error::input("distribution entries must be non-negative"));
            }
            let total: f64 = w.iter().sum();
            if (total - 1.0).abs() > 1e-12 {
                return Err(Error::input(format!("distribution sums to {total}, not 1")));
            }
        }
        Ok(())
    }
}

/// `Pr_{x ~ D}[h(x) != f(x)]`, summed exactly over the finite domain.
pub fn test_error(class: &HypothesisClass, h: usize, f: usize, distribution: &Distribution) -> Result<f64> {
    check_hypothesis(class, h)?;
    check_hypothesis(class, f)?;
    distribution.validate(class.num_examples())?;
    Ok(test_error_unchecked(class, h, f, distribution))
}

pub(crate) fn test_error_unchecked(class: &HypothesisClass, h: usize, f: usize, distribution: &Distribution) -> f64 {
    if h == f {
        return 0.0;
    }
    let (a, b) = (class.row_bits(h), class.row_bits(f));
    match distribution {
        Distribution::Uniform => {
            let diff: usize = a.iter().zip(b).map(|(x, y)| (x ^ y).count_ones() as usize).sum();
            diff as f64 / class.num_examples() as f64
        }
        Distribution::Weights(w) => (0..class.num_examples())
            .filter(|&x| class.label(h, x) != class.label(f, x))
            .map(|x| w[x])
            .sum(),
    }
}

/// Fraction of `sample` that `h` labels differently.
pub fn training_error(class: &HypothesisClass, h: usize, sample: &[(usize, bool)]) -> Result<f64> {
    check_hypothesis(class, h)?;
    if sample.is_empty() {
        return Err(Error::input("training sample must be non-empty"));
    }
    if let Some(&(x, _)) = sample.iter().find(|&&(x, _)| x >= class.num_examples()) {
        return Err(Error::input(format!("example index {x} out of range")));
    }
    let wrong = sample.iter().filter(|&&(x, y)| class.label(h, x) != y).count();
    Ok(wrong as f64 / sample.len() as f64)
}

fn check_hypothesis(class: &HypothesisClass, h: usize) -> Result<()> {
    if h >= class.num_hypotheses() {
        return Err(Error::input(format!(
            "hypothesis index {h} out of range (class has {})",
            class.num_hypotheses()
        )));
    }
    Ok(())
}
