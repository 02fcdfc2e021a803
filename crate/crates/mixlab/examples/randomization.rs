//! Mixing complexity of a structured class as its labels are progressively
//! replaced by coin flips.

use mixlab::hypothesis_graph::gen_partitioned;
use mixlab::randomization::{randomization_test, RandomizationConfig};

fn main() -> mixlab::Result<()> {
    let class = gen_partitioned(32, 32, 4, 1)?;
    let cfg = RandomizationConfig { levels: 8, trials: 4, seed: 1, method: None };
    let report = randomization_test(&class, &cfg)?;
    println!("method {:?} (mc is a {:?} bound)", report.method, report.mc_kind);
    for l in &report.levels {
        println!("level {:.3}: mean mc {:.3}  d {:?}", l.fraction, l.mean_mc, l.d.iter().map(|d| (d * 1e3).round() / 1e3).collect::<Vec<_>>());
    }
    println!("flip bound held at every level: {}", report.flip_bound_holds);
    Ok(())
}
