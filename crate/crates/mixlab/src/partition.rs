//! Sufficient partitions: groupings of the examples on which every
//! hypothesis is constant. Only column equality is detected; the coarsest
//! such partition groups identical label columns.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::mixing::{d_min_exact, Baseline, ExactConfig};
use crate::report::sig12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SufficientPartition {
    pub r: usize,
    /// Each part sorted; parts ordered by their smallest member.
    pub parts: Vec<Vec<usize>>,
}

impl SufficientPartition {
    pub fn new(mut parts: Vec<Vec<usize>>) -> Self {
        parts.iter_mut().for_each(|p| p.sort_unstable());
        parts.sort_by_key(|p| p.first().copied());
        SufficientPartition { r: parts.len(), parts }
    }

    /// Every example in its own part.
    pub fn singletons(num_examples: usize) -> Self {
        SufficientPartition::new((0..num_examples).map(|x| vec![x]).collect())
    }

    pub fn to_json(&self) -> String {
        crate::report::to_json(self)
    }
}

/// Groups examples with identical label columns.
pub fn coarsest_partition(class: &HypothesisClass) -> SufficientPartition {
    let mut groups: HashMap<&[u64], usize> = HashMap::new();
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for x in 0..class.num_examples() {
        let next = parts.len();
        let id = *groups.entry(class.col_bits(x)).or_insert(next);
        if id == next {
            parts.push(Vec::new());
        }
        parts[id].push(x);
    }
    SufficientPartition::new(parts)
}

/// True iff every hypothesis is constant on every part. Errors when `parts`
/// is not a partition of the examples.
pub fn verify_partition(class: &HypothesisClass, partition: &SufficientPartition) -> Result<bool> {
    let nx = class.num_examples();
    let mut owner = vec![usize::MAX; nx];
    for (i, part) in partition.parts.iter().enumerate() {
        if part.is_empty() {
            return Err(Error::input(format!("part {i} is empty")));
        }
        for &x in part {
            if x >= nx {
                return Err(Error::input(format!("example {x} out of range (class has {nx})")));
            }
            if owner[x] != usize::MAX {
                return Err(Error::input(format!("example {x} appears in more than one part")));
            }
            owner[x] = i;
        }
    }
    if let Some(x) = owner.iter().position(|&o| o == usize::MAX) {
        return Err(Error::input(format!("example {x} is not covered")));
    }
    Ok(partition.parts.iter().all(|part| {
        let first = class.col_bits(part[0]);
        part[1..].iter().all(|&x| class.col_bits(x) == first)
    }))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PartitionBoundReport {
    pub r: usize,
    #[serde(serialize_with = "sig12")]
    pub d_min: f64,
    #[serde(serialize_with = "sig12")]
    pub mc: f64,
    /// `2 * sqrt(2r)`.
    #[serde(serialize_with = "sig12")]
    pub bound: f64,
    pub holds: bool,
    pub partition: SufficientPartition,
}

/// Checks `MC <= 2 sqrt(2r)` with `r` from [`coarsest_partition`] and the
/// exact mixing parameter.
pub fn check_partition_mc_bound(class: &HypothesisClass, cfg: &ExactConfig) -> Result<PartitionBoundReport> {
    let partition = coarsest_partition(class);
    let report = d_min_exact(class, Baseline::Half, cfg)?;
    let bound = 2.0 * (2.0 * partition.r as f64).sqrt();
    Ok(PartitionBoundReport {
        r: partition.r,
        d_min: report.d_value,
        mc: report.mixing_complexity,
        bound,
        holds: report.mixing_complexity <= bound,
        partition,
    })
}
