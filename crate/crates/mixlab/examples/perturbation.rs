//! Flipping b labels moves the mixing parameter by at most sqrt(b).

use mixlab::hypothesis_graph::gen_threshold;
use mixlab::mixing::Method;
use mixlab::perturbation::check_perturbation_bound;

fn main() -> mixlab::Result<()> {
    let class = gen_threshold(12)?;
    for b in [0, 1, 4, 16, 64] {
        let r = check_perturbation_bound(&class, b, 50, 9, &Method::exact())?;
        println!(
            "b={b:<3} d={:.4} max gap={:+.4} sqrt(b)={:.4} violations={}",
            r.d_before, r.max_gap, r.sqrt_b, r.violations
        );
    }
    Ok(())
}
