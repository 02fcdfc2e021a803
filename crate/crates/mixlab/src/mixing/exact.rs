//! Exact maximum discrepancy by one-sided enumeration.
//!
//! Every non-empty subset of the smaller side is visited in Gray-code order,
//! keeping the neighbour counts `c_v` of the larger side (and their histogram)
//! up to date with one adjacency list per step. For a fixed subset and a
//! fixed size `s`, the best opposite subset takes either the `s` largest or
//! the `s` smallest counts, since `|v - p*s*t|` is convex in the achieved
//! sum `v`. Inside a run of equal counts the objective `(a + b*s)^2 / s` is
//! convex in `s`, so only the two ends of each histogram bucket are scored.

use std::cmp::Ordering;

use rayon::prelude::*;

use super::score::{Score, Scorer};
use crate::bits::{iter_ones, mask_indices};
use crate::error::{Error, Result};
use crate::hypothesis_graph::{HypothesisClass, SubsetPair};

pub const DEFAULT_EXACT_CAP: usize = 22;
/// Enumerated subsets are `u64` masks; anything near this is infeasible anyway.
pub const MAX_EXACT_CAP: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExactConfig {
    /// Largest allowed size of the enumerated (smaller) side.
    pub cap: usize,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            cap: DEFAULT_EXACT_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub(crate) struct Found {
    pub score: Score,
    pub witness: SubsetPair,
}

impl Found {
    /// Larger score wins; equal scores go to the lexicographically smaller
    /// witness (hypothesis subset first).
    pub(crate) fn better(self, other: Found) -> Found {
        match self.score.cmp(&other.score) {
            Ordering::Greater => self,
            Ordering::Less => other,
            Ordering::Equal => {
                if other.witness < self.witness {
                    other
                } else {
                    self
                }
            }
        }
    }
}

const CHUNK_BITS: usize = 12;

pub(crate) fn exact_max(class: &HypothesisClass, scorer: &Scorer, cfg: &ExactConfig) -> Result<Found> {
    let small_is_hyp = class.num_hypotheses() <= class.num_examples();
    let (k, m) = if small_is_hyp {
        (class.num_hypotheses(), class.num_examples())
    } else {
        (class.num_examples(), class.num_hypotheses())
    };
    let cap = cfg.cap.min(MAX_EXACT_CAP);
    if k > cap {
        return Err(Error::capacity(format!(
            "exact enumeration needs min(|H|, |X|) <= {cap}, class is {}x{}; \
             use the spectral upper bound or the search lower bound instead",
            class.num_hypotheses(),
            class.num_examples()
        )));
    }

    let small_side = |b: usize| {
        if small_is_hyp {
            class.row_bits(b)
        } else {
            class.col_bits(b)
        }
    };
    let large_side = |v: usize| {
        if small_is_hyp {
            class.col_bits(v)[0]
        } else {
            class.row_bits(v)[0]
        }
    };
    let engine = Engine {
        scorer: *scorer,
        small_is_hyp,
        k,
        m,
        small_bits: (0..m).map(large_side).collect(),
        adjacency: (0..k).map(|b| iter_ones(small_side(b)).map(|v| v as u32).collect()).collect(),
    };

    let total: u64 = 1 << k;
    let chunk_bits = k.min(CHUNK_BITS);
    let chunks = total >> chunk_bits;
    let best = (0..chunks)
        .into_par_iter()
        .filter_map(|c| engine.run_chunk(c << chunk_bits, (c + 1) << chunk_bits))
        .reduce_with(Found::better)
        .expect("at least one non-empty subset");

    if best.score.is_zero() {
        // Every pair attains the maximum.
        return Ok(Found {
            score: best.score,
            witness: SubsetPair::new([0], [0]),
        });
    }
    Ok(best)
}

struct Engine {
    scorer: Scorer,
    small_is_hyp: bool,
    k: usize,
    m: usize,
    /// For each large-side vertex, its neighbours on the small side.
    small_bits: Vec<u64>,
    /// For each small-side vertex, its neighbours on the large side.
    adjacency: Vec<Vec<u32>>,
}

#[derive(Clone, Copy)]
enum Direction {
    Top,
    Bottom,
}

impl Engine {
    fn run_chunk(&self, start: u64, end: u64) -> Option<Found> {
        let start = start.max(1);
        if start >= end {
            return None;
        }
        let mut mask = start ^ (start >> 1);
        let mut counts: Vec<u32> = self
            .small_bits
            .iter()
            .map(|&b| (b & mask).count_ones())
            .collect();
        let mut hist = vec![0u32; self.k + 1];
        for &c in &counts {
            hist[c as usize] += 1;
        }

        let mut best: Option<Found> = None;
        for i in start..end {
            if i > start {
                let b = i.trailing_zeros() as usize;
                mask ^= 1 << b;
                if mask >> b & 1 == 1 {
                    for &v in &self.adjacency[b] {
                        let c = &mut counts[v as usize];
                        hist[*c as usize] -= 1;
                        *c += 1;
                        hist[*c as usize] += 1;
                    }
                } else {
                    for &v in &self.adjacency[b] {
                        let c = &mut counts[v as usize];
                        hist[*c as usize] -= 1;
                        *c -= 1;
                        hist[*c as usize] += 1;
                    }
                }
            }
            self.evaluate(mask, &counts, &hist, &mut best);
        }
        best
    }

    fn evaluate(&self, mask: u64, counts: &[u32], hist: &[u32], best: &mut Option<Found>) {
        let t = mask.count_ones() as u64;
        let mut consider = |score: Score, dir: Direction, level: u32, take: u64| {
            if let Some(b) = best {
                if score.cmp(&b.score) == Ordering::Less {
                    return;
                }
            }
            let found = Found {
                score,
                witness: self.witness(mask, counts, dir, level, take),
            };
            *best = Some(match best.take() {
                Some(b) => b.better(found),
                None => found,
            });
        };

        // Largest counts first.
        let (mut taken, mut sum) = (0u64, 0u64);
        for level in (0..=t as usize).rev() {
            let h = hist[level] as u64;
            if h == 0 {
                continue;
            }
            let c = level as u64;
            consider(self.scorer.score(sum + c, taken + 1, t), Direction::Top, level as u32, 1);
            if h > 1 {
                consider(self.scorer.score(sum + c * h, taken + h, t), Direction::Top, level as u32, h);
            }
            taken += h;
            sum += c * h;
        }
        // Smallest counts first.
        let (mut taken, mut sum) = (0u64, 0u64);
        for level in 0..=t as usize {
            let h = hist[level] as u64;
            if h == 0 {
                continue;
            }
            let c = level as u64;
            consider(self.scorer.score(sum + c, taken + 1, t), Direction::Bottom, level as u32, 1);
            if h > 1 {
                consider(self.scorer.score(sum + c * h, taken + h, t), Direction::Bottom, level as u32, h);
            }
            taken += h;
            sum += c * h;
        }
        debug_assert_eq!(taken as usize, self.m);
    }

    /// All large-side vertices strictly beyond `level` in the given direction,
    /// plus the `take` lowest-indexed vertices at exactly `level`.
    fn witness(&self, mask: u64, counts: &[u32], dir: Direction, level: u32, take: u64) -> SubsetPair {
        let mut left = take;
        let large: Vec<usize> = counts
            .iter()
            .enumerate()
            .filter(|&(_, &c)| {
                let beyond = match dir {
                    Direction::Top => c > level,
                    Direction::Bottom => c < level,
                };
                if beyond {
                    true
                } else if c == level && left > 0 {
                    left -= 1;
                    true
                } else {
                    false
                }
            })
            .map(|(v, _)| v)
            .collect();
        let small = mask_indices(mask);
        if self.small_is_hyp {
            SubsetPair::new(small, large)
        } else {
            SubsetPair::new(large, small)
        }
    }
}
