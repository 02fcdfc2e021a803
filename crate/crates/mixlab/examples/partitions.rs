//! Classes constant on a few blocks of examples have mixing complexity
//! O(sqrt(r)).

use mixlab::hypothesis_graph::gen_partitioned;
use mixlab::mixing::ExactConfig;
use mixlab::partition::{check_partition_mc_bound, verify_partition};

fn main() -> mixlab::Result<()> {
    for r in [1, 2, 4, 8] {
        let class = gen_partitioned(16, 16, r, 42)?;
        let report = check_partition_mc_bound(&class, &ExactConfig::default())?;
        assert!(verify_partition(&class, &report.partition)?);
        println!(
            "r={r}: found r={} mc={:.3} bound={:.3} holds={}",
            report.r, report.mc, report.bound, report.holds
        );
    }
    Ok(())
}
