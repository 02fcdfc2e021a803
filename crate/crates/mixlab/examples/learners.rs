//! Bounded-memory learners: the threshold interval learner needs a handful
//! of examples, while random learners with |H| states cannot learn parities
//! from the same budget.

use mixlab::hypothesis_graph::{gen_parity, gen_threshold};
use mixlab::memory_learner::{sample_complexity, FiniteStateLearner, SimulationConfig, TableLearner, ThresholdIntervalLearner};

fn main() -> mixlab::Result<()> {
    for n in [64, 256, 1024] {
        let class = gen_threshold(n)?;
        let learner = ThresholdIntervalLearner::for_class(&class)?;
        let cfg = SimulationConfig { trials: 40, seed: 5, ..Default::default() };
        let out = sample_complexity(&learner, &class, &cfg)?;
        println!(
            "threshold({n}): {} bits of memory, m_hat={:?}, success rate {:.3}",
            learner.memory_bits(),
            out.m_hat,
            out.success_probability
        );
    }

    let parity = gen_parity(8)?;
    let h = parity.num_hypotheses();
    let budget = (10.0 * (h as f64).log2()) as usize;
    let cfg = SimulationConfig { trials: 12, max_examples: budget, max_targets: 16, seed: 5, ..Default::default() };
    let mut best = 0.0f64;
    for seed in 0..20 {
        let table = TableLearner::random(h, parity.num_examples(), h, seed)?;
        best = best.max(sample_complexity(&table, &parity, &cfg)?.success_probability);
    }
    println!("parity(8): best success rate of 20 random {h}-state learners within {budget} examples: {best:.3}");
    Ok(())
}
