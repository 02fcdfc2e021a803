//! Check the hypotheses of the bounded-memory lower bound on a class and
//! report the memory it would rule out.

use mixlab::hypothesis_graph::gen_parity;
use mixlab::mixing::{check_theorem1_preconditions, d_spectral_bound, Baseline, SpectralConfig};

fn main() -> mixlab::Result<()> {
    let class = gen_parity(10)?;
    let d = d_spectral_bound(&class, Baseline::Half, &SpectralConfig::default())?.d_value;
    for a in [0.0, 0.05, 0.2] {
        let r = check_theorem1_preconditions(&class, a, 0.1, d)?;
        println!(
            "a={a:<5} preconditions={} states>={:.1} ({:.1} bits) interesting={} smallest a={:?}",
            r.preconditions_hold, r.memory_state_bound, r.memory_bits, r.interesting, r.smallest_a
        );
    }
    Ok(())
}
