//! Exact mixing parameters: thresholds have constant mixing complexity,
//! parities grow like sqrt(|H|).

use mixlab::hypothesis_graph::{gen_parity, gen_threshold};
use mixlab::mixing::{d_min_exact, Baseline, ExactConfig};

fn main() -> mixlab::Result<()> {
    let cfg = ExactConfig::default();
    println!("{:<14} {:>10} {:>8} {:>10}", "class", "d", "mc", "mixing(C=1)");
    for n in [4, 8, 16] {
        let r = d_min_exact(&gen_threshold(n)?, Baseline::Half, &cfg)?;
        println!("{:<14} {:>10.4} {:>8.3} {:>10}", format!("threshold({n})"), r.d_value, r.mixing_complexity, r.is_mixing);
    }
    for n in [2, 3, 4] {
        let r = d_min_exact(&gen_parity(n)?, Baseline::Half, &cfg)?;
        println!("{:<14} {:>10.4} {:>8.3} {:>10}", format!("parity({n})"), r.d_value, r.mixing_complexity, r.is_mixing);
    }

    let r = d_min_exact(&gen_parity(2)?, Baseline::Half, &cfg)?;
    println!("\n{}", r.to_json());
    Ok(())
}
