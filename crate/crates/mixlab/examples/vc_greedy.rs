//! Exact VC-dimension next to the greedy shattered set driven by balanced
//! splits.

use mixlab::hypothesis_graph::{gen_parity, gen_random};
use mixlab::mixing::{d_spectral_bound, Baseline, SpectralConfig};
use mixlab::vc::{balanced_split_exceptions, greedy_shattered_set, vc_dim_exact, Side};

fn main() -> mixlab::Result<()> {
    for (name, class) in [("parity(5)", gen_parity(5)?), ("random(64x20)", gen_random(64, 20, 11)?)] {
        let exact = vc_dim_exact(&class)?;
        let d = d_spectral_bound(&class, Baseline::Half, &SpectralConfig::default())?.d_value;
        let greedy = greedy_shattered_set(&class, 0.25, d)?;
        println!(
            "{name:<14} vc={} witness={:?}  greedy={:?} ({:?})",
            exact.dimension, exact.witness, greedy.certificate.example_set, greedy.stop
        );
        for step in &greedy.trace {
            println!(
                "  step {} chose {:>2}  parts {:?}  removed {} (bound {:.1})",
                step.step, step.chosen, step.part_sizes, step.removed, step.exception_bound
            );
        }
    }

    let class = gen_parity(4)?;
    let all: Vec<usize> = (0..class.num_hypotheses()).collect();
    let bad = balanced_split_exceptions(&class, Side::Hypotheses, &all, 0.25)?;
    println!("\nexamples splitting all of parity(4) unevenly: {bad:?}");
    Ok(())
}
