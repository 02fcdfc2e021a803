//! Bracket the mixing parameter of classes too large to enumerate.

use mixlab::hypothesis_graph::{gen_parity, gen_random};
use mixlab::mixing::{d_search_lower_bound, d_spectral_bound, Baseline, SearchConfig, SpectralConfig};

fn main() -> mixlab::Result<()> {
    for (name, class) in [("parity(8)", gen_parity(8)?), ("random(128x128)", gen_random(128, 128, 3)?)] {
        let up = d_spectral_bound(&class, Baseline::Half, &SpectralConfig::default())?;
        let lo = d_search_lower_bound(&class, Baseline::Half, &SearchConfig { seed: 1, ..Default::default() })?;
        println!(
            "{name:<16} {:.4} <= d <= {:.4}   mc in [{:.3}, {:.3}]",
            lo.d_value, up.d_value, up.mixing_complexity, lo.mixing_complexity
        );
    }
    Ok(())
}
