//! Restrictions, shattering and VC-dimension, plus the greedy construction
//! of a shattered set for mixing classes.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::bits::{mask_from_indices, popcount_and, words_for};
use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::report::sig12;

/// Labels of one hypothesis on an ordered example set.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(pub Vec<bool>);

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl Serialize for Pattern {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

fn check_examples(class: &HypothesisClass, example_set: &[usize]) -> Result<()> {
    if example_set.is_empty() {
        return Err(Error::input("example set must be non-empty"));
    }
    let mut seen = BTreeSet::new();
    for &x in example_set {
        if x >= class.num_examples() {
            return Err(Error::input(format!(
                "example index {x} out of range (class has {})",
                class.num_examples()
            )));
        }
        if !seen.insert(x) {
            return Err(Error::input(format!("example {x} appears twice")));
        }
    }
    Ok(())
}

/// The distinct label patterns the class induces on `example_set`, in the
/// given example order.
pub fn restriction(class: &HypothesisClass, example_set: &[usize]) -> Result<BTreeSet<Pattern>> {
    check_examples(class, example_set)?;
    Ok((0..class.num_hypotheses())
        .map(|h| Pattern(example_set.iter().map(|&x| class.label(h, x)).collect()))
        .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShatterCertificate {
    pub example_set: Vec<usize>,
    pub realized_patterns: Vec<Pattern>,
    pub shattered: bool,
}

impl ShatterCertificate {
    fn empty() -> Self {
        ShatterCertificate {
            example_set: Vec::new(),
            realized_patterns: vec![Pattern(Vec::new())],
            shattered: true,
        }
    }

    /// Re-derives the certificate from the class and checks it matches.
    pub fn verify(&self, class: &HypothesisClass) -> bool {
        let recomputed = if self.example_set.is_empty() {
            Ok(ShatterCertificate::empty())
        } else {
            shatters(class, &self.example_set)
        };
        recomputed.is_ok_and(|c| c == *self)
    }
}

pub fn shatters(class: &HypothesisClass, example_set: &[usize]) -> Result<ShatterCertificate> {
    let patterns = restriction(class, example_set)?;
    let k = example_set.len() as u32;
    let shattered = k < usize::BITS && patterns.len() == 1usize << k;
    Ok(ShatterCertificate {
        example_set: example_set.to_vec(),
        realized_patterns: patterns.into_iter().collect(),
        shattered,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VcDimension {
    pub dimension: usize,
    /// Lexicographically first shattered set of that size.
    pub witness: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VcConfig {
    /// Classes with more examples than this are only searched when the
    /// worst-case number of candidate sets stays under `max_candidate_sets`.
    pub free_examples: usize,
    pub max_candidate_sets: u128,
}

impl Default for VcConfig {
    fn default() -> Self {
        VcConfig {
            free_examples: 24,
            max_candidate_sets: 100_000_000,
        }
    }
}

pub fn vc_dim_exact(class: &HypothesisClass) -> Result<VcDimension> {
    vc_dim_exact_with(class, &VcConfig::default())
}

/// Sizes are tried in increasing order up to `floor(log2 |H|)`; the search
/// stops at the first size with no shattered set.
pub fn vc_dim_exact_with(class: &HypothesisClass, cfg: &VcConfig) -> Result<VcDimension> {
    let nx = class.num_examples();
    let max_k = (usize::BITS - 1 - class.num_hypotheses().leading_zeros()) as usize;
    let max_k = max_k.min(nx);
    if nx > cfg.free_examples {
        let total: u128 = (1..=max_k).map(|k| binomial(nx, k)).sum();
        if total > cfg.max_candidate_sets {
            return Err(Error::capacity(format!(
                "exact VC-dimension would test up to {total} example sets; \
                 use the greedy construction for a lower bound"
            )));
        }
    }

    // Constant columns can never be in a shattered set.
    let useful: Vec<usize> = (0..nx)
        .filter(|&x| {
            let ones = class.col_ones(x);
            ones > 0 && ones < class.num_hypotheses()
        })
        .collect();
    let mut best = VcDimension {
        dimension: 0,
        witness: Vec::new(),
    };
    let mut seen = Vec::new();
    for k in 1..=max_k.min(useful.len()) {
        let found = Combinations::new(useful.len(), k)
            .map(|idx| idx.iter().map(|&i| useful[i]).collect::<Vec<_>>())
            .find(|set| shattered_fast(class, set, &mut seen));
        match found {
            Some(set) => {
                best = VcDimension {
                    dimension: k,
                    witness: set,
                }
            }
            None => break,
        }
    }
    Ok(best)
}

fn shattered_fast(class: &HypothesisClass, set: &[usize], seen: &mut Vec<u64>) -> bool {
    let k = set.len();
    let needed = 1usize << k;
    if class.num_hypotheses() < needed {
        return false;
    }
    seen.clear();
    seen.resize(words_for(needed), 0);
    let mut distinct = 0;
    for h in 0..class.num_hypotheses() {
        let p = set
            .iter()
            .enumerate()
            .fold(0usize, |acc, (j, &x)| acc | (class.label(h, x) as usize) << j);
        let (w, b) = (p / 64, p % 64);
        if seen[w] >> b & 1 == 0 {
            seen[w] |= 1 << b;
            distinct += 1;
            if distinct == needed {
                return true;
            }
        }
    }
    false
}

fn binomial(n: usize, k: usize) -> u128 {
    let k = k.min(n - k.min(n));
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// k-subsets of `0..n` in lexicographic order.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Self {
        Combinations {
            n,
            idx: (0..k).collect(),
            done: k > n,
        }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.idx.clone();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Which side of the bipartite graph a vertex subset lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Hypotheses,
    Examples,
}

/// Vertices `a` on the opposite side of `subset` whose neighbourhood splits
/// it unevenly: `| |N(a) ∩ T| - |T|/2 | > epsilon * |T|`.
pub fn balanced_split_exceptions(
    class: &HypothesisClass,
    side: Side,
    subset: &[usize],
    epsilon: f64,
) -> Result<Vec<usize>> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::input(format!("epsilon must lie in (0,1), got {epsilon}")));
    }
    if subset.is_empty() {
        return Err(Error::input("subset must be non-empty"));
    }
    let (own, opposite) = match side {
        Side::Hypotheses => (class.num_hypotheses(), class.num_examples()),
        Side::Examples => (class.num_examples(), class.num_hypotheses()),
    };
    if let Some(&i) = subset.iter().find(|&&i| i >= own) {
        return Err(Error::input(format!("index {i} out of range (side has {own})")));
    }
    let mask = mask_from_indices(own, subset);
    let t = subset.len();
    Ok((0..opposite)
        .filter(|&a| {
            let bits = match side {
                Side::Hypotheses => class.col_bits(a),
                Side::Examples => class.row_bits(a),
            };
            unbalanced(popcount_and(bits, &mask), t, epsilon)
        })
        .collect())
}

#[inline]
fn unbalanced(c: usize, t: usize, epsilon: f64) -> bool {
    (2 * c).abs_diff(t) as f64 > 2.0 * epsilon * t as f64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyStop {
    /// Every remaining example splits some part too unevenly.
    NoCandidate,
    /// The best remaining example would leave a part empty.
    EmptyPart,
}

/// One round of the construction.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreedyStep {
    pub step: usize,
    pub chosen: usize,
    /// Part sizes before the split, in part order.
    pub part_sizes: Vec<usize>,
    /// Candidates removed as exceptions in this round.
    pub removed: usize,
    /// Sum over current parts `P` of `2 d^2 / (|P| eps^2)`.
    #[serde(serialize_with = "sig12")]
    pub exception_bound: f64,
    /// `2^(i+1) d^2 4^i / (|H| eps^2)` for round `i` (0-based).
    #[serde(serialize_with = "sig12")]
    pub worst_case_removal_bound: f64,
    /// Largest `|2c - |P|| / |P|` over parts for the chosen example.
    #[serde(serialize_with = "sig12")]
    pub imbalance: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GreedyOutcome {
    pub certificate: ShatterCertificate,
    pub trace: Vec<GreedyStep>,
    pub stop: GreedyStop,
    #[serde(serialize_with = "sig12")]
    pub epsilon: f64,
    #[serde(serialize_with = "sig12")]
    pub d: f64,
    /// Final part sizes.
    pub part_sizes: Vec<usize>,
}

/// Builds a shattered set by repeatedly choosing an example that splits every
/// current part of the hypotheses nearly in half.
///
/// `d` is any upper bound on the mixing parameter; it only feeds the bounds
/// recorded in the trace. Candidates that unbalance some part by more than
/// `epsilon` are dropped from the pool for good. Among the survivors the one
/// with the smallest worst-part imbalance is taken (lowest index on ties).
pub fn greedy_shattered_set(class: &HypothesisClass, epsilon: f64, d: f64) -> Result<GreedyOutcome> {
    if !(epsilon > 0.0 && epsilon < 1.0) {
        return Err(Error::input(format!("epsilon must lie in (0,1), got {epsilon}")));
    }
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::input(format!("d must be finite and non-negative, got {d}")));
    }
    let nh = class.num_hypotheses();
    let nx = class.num_examples();
    let mut parts: Vec<Vec<u64>> = vec![mask_from_indices(nh, &(0..nh).collect::<Vec<_>>())];
    let mut sizes = vec![nh];
    let mut alive = vec![true; nx];
    let mut selected = Vec::new();
    let mut trace = Vec::new();
    let eps2 = epsilon * epsilon;

    let stop = loop {
        let i = trace.len();
        let mut removed = 0;
        for x in 0..nx {
            if alive[x] {
                let bad = parts
                    .iter()
                    .zip(&sizes)
                    .any(|(p, &size)| unbalanced(popcount_and(class.col_bits(x), p), size, epsilon));
                if bad {
                    alive[x] = false;
                    removed += 1;
                }
            }
        }

        let mut pick: Option<(usize, f64, bool)> = None;
        for x in (0..nx).filter(|&x| alive[x]) {
            let mut worst = 0.0f64;
            let mut empties = false;
            for (p, &size) in parts.iter().zip(&sizes) {
                let c = popcount_and(class.col_bits(x), p);
                worst = worst.max((2 * c).abs_diff(size) as f64 / size as f64);
                empties |= c == 0 || c == size;
            }
            if pick.is_none_or(|(_, w, _)| worst < w) {
                pick = Some((x, worst, empties));
            }
        }
        let Some((chosen, imbalance, empties)) = pick else {
            break GreedyStop::NoCandidate;
        };
        if empties {
            break GreedyStop::EmptyPart;
        }

        trace.push(GreedyStep {
            step: i + 1,
            chosen,
            part_sizes: sizes.clone(),
            removed,
            exception_bound: sizes.iter().map(|&s| 2.0 * d * d / (s as f64 * eps2)).sum(),
            worst_case_removal_bound: 2f64.powi(i as i32 + 1) * d * d * 4f64.powi(i as i32) / (nh as f64 * eps2),
            imbalance,
        });

        let col = class.col_bits(chosen);
        let mut next_parts = Vec::with_capacity(parts.len() * 2);
        let mut next_sizes = Vec::with_capacity(parts.len() * 2);
        for p in &parts {
            let ones: Vec<u64> = p.iter().zip(col).map(|(a, b)| a & b).collect();
            let zeros: Vec<u64> = p.iter().zip(col).map(|(a, b)| a & !b).collect();
            for half in [ones, zeros] {
                next_sizes.push(half.iter().map(|w| w.count_ones() as usize).sum());
                next_parts.push(half);
            }
        }
        parts = next_parts;
        sizes = next_sizes;
        alive[chosen] = false;
        selected.push(chosen);
    };

    let certificate = if selected.is_empty() {
        ShatterCertificate::empty()
    } else {
        shatters(class, &selected)?
    };
    debug_assert!(certificate.shattered);
    Ok(GreedyOutcome {
        certificate,
        trace,
        stop,
        epsilon,
        d,
        part_sizes: sizes,
    })
}
