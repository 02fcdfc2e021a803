use std::io::Write;

use rand::distributions::{Distribution as _, WeightedIndex};
use rand::seq::SliceRandom;
use rand::Rng as _;
use rayon::prelude::*;
use serde::Serialize;

use super::{test_error_unchecked, Distribution, FiniteStateLearner, StateId};
use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::report::{sig12, sig12_opt};
use crate::rng;

/// How examples are presented to the learner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Sampling {
    /// Independent draws with replacement.
    #[default]
    Iid,
    /// Repeated passes over a fixed pool of examples, each pass in a fresh
    /// random order. This reuses examples and is not i.i.d.; the pool is
    /// the whole domain, so it requires the uniform distribution.
    Epochs,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationConfig {
    #[serde(serialize_with = "sig12")]
    pub epsilon: f64,
    #[serde(serialize_with = "sig12")]
    pub delta: f64,
    pub distribution: Distribution,
    pub max_examples: usize,
    pub trials: usize,
    pub seed: u64,
    pub sampling: Sampling,
    /// Targets tested by [`sample_complexity`]; all of them when the class is
    /// at most this large, otherwise a seeded sample of this many.
    pub max_targets: usize,
}

impl Default for SimulationConfig {
    fn default() -> Self {
        SimulationConfig {
            epsilon: 0.25,
            delta: 0.25,
            distribution: Distribution::Uniform,
            max_examples: 1000,
            trials: 20,
            seed: 0,
            sampling: Sampling::Iid,
            max_targets: 64,
        }
    }
}

impl SimulationConfig {
    fn validate(&self, class: &HypothesisClass) -> Result<()> {
        for (name, v) in [("epsilon", self.epsilon), ("delta", self.delta)] {
            if !(v > 0.0 && v < 1.0) {
                return Err(Error::input(format!("{name} must lie in (0,1), got {v}")));
            }
        }
        self.distribution.validate(class.num_examples())?;
        if self.sampling == Sampling::Epochs && self.distribution != Distribution::Uniform {
            return Err(Error::input("epoch sampling requires the uniform distribution"));
        }
        Ok(())
    }
}

/// One run of a learner against one target.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialOutcome {
    pub target: usize,
    pub seed: u64,
    /// Examples consumed when the test error first dropped to `epsilon`.
    pub examples_to_success: Option<usize>,
    pub budget_exhausted: bool,
    #[serde(serialize_with = "sig12")]
    pub final_error: f64,
    /// Examples drawn, in order.
    pub examples: Vec<usize>,
    /// States visited, starting with the initial state.
    pub states: Vec<StateId>,
}

fn check_compatible(learner: &dyn FiniteStateLearner, class: &HypothesisClass, target: usize) -> Result<()> {
    if learner.num_examples() != class.num_examples() {
        return Err(Error::input(format!(
            "learner is defined on {} examples, class has {}",
            learner.num_examples(),
            class.num_examples()
        )));
    }
    if target >= class.num_hypotheses() {
        return Err(Error::input(format!("target {target} out of range")));
    }
    Ok(())
}

/// Feeds `(x, target(x))` for i.i.d. `x ~ D` until the output hypothesis is
/// within `epsilon` of the target or the budget runs out. Labels always
/// come from a hypothesis of the class.
pub fn run_learner(
    learner: &dyn FiniteStateLearner,
    class: &HypothesisClass,
    target: usize,
    config: &SimulationConfig,
    seed: u64,
) -> Result<TrialOutcome> {
    check_compatible(learner, class, target)?;
    config.validate(class)?;
    run_unchecked(learner, class, target, config, seed)
}

fn run_unchecked(
    learner: &dyn FiniteStateLearner,
    class: &HypothesisClass,
    target: usize,
    config: &SimulationConfig,
    seed: u64,
) -> Result<TrialOutcome> {
    let nh = class.num_hypotheses();
    let nx = class.num_examples();
    let error_of = |state: StateId| -> Result<f64> {
        let h = learner.output(state);
        if h >= nh {
            return Err(Error::input(format!(
                "learner outputs hypothesis {h} from state {state}, class has {nh}"
            )));
        }
        Ok(test_error_unchecked(class, h, target, &config.distribution))
    };

    let mut rng = rng::seeded(seed);
    let weighted = match &config.distribution {
        Distribution::Weights(w) => Some(WeightedIndex::new(w).map_err(|e| Error::input(e.to_string()))?),
        Distribution::Uniform => None,
    };
    let mut pool: Vec<usize> = (0..nx).collect();
    let mut pos = nx;
    let mut draw = |rng: &mut rng::Rng| match (config.sampling, &weighted) {
        (Sampling::Epochs, _) => {
            if pos == nx {
                pool.shuffle(rng);
                pos = 0;
            }
            pos += 1;
            pool[pos - 1]
        }
        (Sampling::Iid, Some(w)) => w.sample(rng),
        (Sampling::Iid, None) => rng.gen_range(0..nx),
    };

    let mut state = learner.initial_state();
    let mut states = vec![state];
    let mut examples = Vec::new();
    let mut error = error_of(state)?;
    let mut success = (error <= config.epsilon).then_some(0);
    while success.is_none() && examples.len() < config.max_examples {
        let x = draw(&mut rng);
        state = learner.transition(state, x, class.label(target, x));
        examples.push(x);
        states.push(state);
        error = error_of(state)?;
        if error <= config.epsilon {
            success = Some(examples.len());
        }
    }
    Ok(TrialOutcome {
        target,
        seed,
        examples_to_success: success,
        budget_exhausted: success.is_none(),
        final_error: error,
        examples,
        states,
    })
}

/// One CSV/JSON row per trial.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialRow {
    pub target: usize,
    pub trial: usize,
    pub seed: u64,
    pub examples_to_success: Option<usize>,
    pub budget_exhausted: bool,
    #[serde(serialize_with = "sig12")]
    pub final_error: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TargetSummary {
    pub target: usize,
    pub successes: usize,
    pub trials: usize,
    /// Smallest `m` with at least `(1 - delta) * trials` successes within
    /// `m` examples.
    pub m_hat: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationOutcome {
    pub config: SimulationConfig,
    pub learner_states: u64,
    pub learner_bits: u32,
    pub rows: Vec<TrialRow>,
    pub per_target: Vec<TargetSummary>,
    #[serde(serialize_with = "sig12")]
    pub success_probability: f64,
    /// Worst case of `m_hat` over the tested targets; `None` if some target
    /// never reached the success frequency within the budget.
    pub m_hat: Option<usize>,
    #[serde(serialize_with = "sig12_opt")]
    pub median_examples: Option<f64>,
}

impl SimulationOutcome {
    pub fn to_json(&self) -> String {
        crate::report::to_json(self)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row).map_err(|e| Error::Io(std::io::Error::other(e)))?;
        }
        w.flush()?;
        Ok(())
    }
}

/// `config.trials` runs against each listed target. Trial `j` of target `f`
/// uses seed `derive_seed(derive_seed(config.seed, f), j)`.
pub fn run_targets(
    learner: &dyn FiniteStateLearner,
    class: &HypothesisClass,
    targets: &[usize],
    config: &SimulationConfig,
) -> Result<SimulationOutcome> {
    if config.trials == 0 {
        return Err(Error::input("at least one trial is required"));
    }
    config.validate(class)?;
    for &f in targets {
        check_compatible(learner, class, f)?;
    }
    let jobs: Vec<(usize, usize)> = targets
        .iter()
        .flat_map(|&f| (0..config.trials).map(move |j| (f, j)))
        .collect();
    let rows = jobs
        .par_iter()
        .map(|&(f, j)| {
            let seed = rng::derive_seed(rng::derive_seed(config.seed, f as u64), j as u64);
            let t = run_unchecked(learner, class, f, config, seed)?;
            Ok(TrialRow {
                target: f,
                trial: j,
                seed,
                examples_to_success: t.examples_to_success,
                budget_exhausted: t.budget_exhausted,
                final_error: t.final_error,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    let needed = ((1.0 - config.delta) * config.trials as f64 - 1e-9).ceil().max(1.0) as usize;
    let per_target: Vec<TargetSummary> = rows
        .chunks(config.trials)
        .map(|chunk| {
            let mut counts: Vec<usize> = chunk.iter().filter_map(|r| r.examples_to_success).collect();
            counts.sort_unstable();
            TargetSummary {
                target: chunk[0].target,
                successes: counts.len(),
                trials: chunk.len(),
                m_hat: counts.get(needed - 1).copied(),
            }
        })
        .collect();
    let m_hat = per_target
        .iter()
        .map(|t| t.m_hat)
        .collect::<Option<Vec<_>>>()
        .and_then(|v| v.into_iter().max());
    let successes: usize = per_target.iter().map(|t| t.successes).sum();
    let mut counts: Vec<usize> = rows.iter().filter_map(|r| r.examples_to_success).collect();
    counts.sort_unstable();
    let median_examples = (!counts.is_empty() && counts.len() * 2 > rows.len()).then(|| {
        // median over all trials, failures counting as +inf
        let n = rows.len();
        if n % 2 == 1 {
            counts[n / 2] as f64
        } else {
            let hi = counts.get(n / 2).map_or(f64::INFINITY, |&c| c as f64);
            (counts[n / 2 - 1] as f64 + hi) / 2.0
        }
    });
    Ok(SimulationOutcome {
        config: config.clone(),
        learner_states: learner.num_states(),
        learner_bits: learner.memory_bits(),
        success_probability: successes as f64 / rows.len() as f64,
        rows,
        per_target,
        m_hat,
        median_examples,
    })
}

/// Worst case over targets: every hypothesis when the class has at most
/// `config.max_targets`, otherwise a seeded sample of that many.
pub fn sample_complexity(
    learner: &dyn FiniteStateLearner,
    class: &HypothesisClass,
    config: &SimulationConfig,
) -> Result<SimulationOutcome> {
    let nh = class.num_hypotheses();
    let targets: Vec<usize> = if nh <= config.max_targets {
        (0..nh).collect()
    } else {
        let mut rng = rng::seeded(rng::derive_seed(config.seed, u64::MAX));
        let mut t = rand::seq::index::sample(&mut rng, nh, config.max_targets).into_vec();
        t.sort_unstable();
        t
    };
    run_targets(learner, class, &targets, config)
}
