use rand::Rng as _;

use super::HypothesisClass;
use crate::bits::BitMatrix;
use crate::error::{Error, Result};
use crate::rng;

pub const MAX_PARITY_BITS: u32 = 20;

/// Discrete thresholds on the grid `i / (n - 1)`, `i = 0..n`.
///
/// Examples are stored by grid index. Row `k` (for `k = 0..=n`) labels the
/// first `k` grid points with 1: row 0 is the threshold below the grid
/// (all zeros), row `n` the threshold above it (all ones), and rows in between
/// sit halfway between consecutive grid points.
pub fn gen_threshold(num_examples: usize) -> Result<HypothesisClass> {
    if num_examples < 2 {
        return Err(Error::input(format!(
            "threshold class needs at least 2 examples, got {num_examples}"
        )));
    }
    Ok(
        HypothesisClass::from_fn(num_examples + 1, num_examples, |k, x| x < k)?
            .with_name(format!("threshold(x={num_examples})")),
    )
}

/// Parities over `{0,1}^n`.
///
/// Example `j` is the bit string with coordinate `x_i` equal to bit `i - 1` of
/// `j`. Row `c - 1` is the parity of the coordinates in the non-empty index
/// set encoded by the mask `c`, for `c = 1..2^n`.
pub fn gen_parity(n: u32) -> Result<HypothesisClass> {
    if !(1..=MAX_PARITY_BITS).contains(&n) {
        return Err(Error::input(format!(
            "parity dimension must be in 1..={MAX_PARITY_BITS}, got {n}"
        )));
    }
    let size = 1usize << n;
    Ok(
        HypothesisClass::from_fn(size - 1, size, |h, x| ((h + 1) & x).count_ones() % 2 == 1)?
            .with_name(format!("parity(n={n})")),
    )
}

/// Every label an independent fair bit drawn from the seeded generator.
pub fn gen_random(num_hypotheses: usize, num_examples: usize, seed: u64) -> Result<HypothesisClass> {
    let mut rng = rng::seeded(seed);
    let mut m = BitMatrix::zeros(num_hypotheses, num_examples);
    for h in 0..num_hypotheses {
        for x in 0..num_examples {
            if rng.gen::<bool>() {
                m.set(h, x, true);
            }
        }
    }
    Ok(HypothesisClass::from_bit_matrix(m)?
        .with_name(format!("random(h={num_hypotheses},x={num_examples},seed={seed})")))
}

/// Half-open index ranges splitting `0..n` into `r` contiguous parts whose
/// sizes differ by at most one.
pub fn contiguous_parts(n: usize, r: usize) -> Vec<std::ops::Range<usize>> {
    (0..r).map(|j| j * n / r..(j + 1) * n / r).collect()
}

/// Random class with an `r`-sufficient partition: the examples are split
/// into `r` contiguous parts and every hypothesis draws one fair label per
/// part.
pub fn gen_partitioned(
    num_hypotheses: usize,
    num_examples: usize,
    r: usize,
    seed: u64,
) -> Result<HypothesisClass> {
    if r == 0 || r > num_examples {
        return Err(Error::input(format!(
            "number of parts must be in 1..={num_examples}, got {r}"
        )));
    }
    let parts = contiguous_parts(num_examples, r);
    let mut rng = rng::seeded(seed);
    let mut m = BitMatrix::zeros(num_hypotheses, num_examples);
    for h in 0..num_hypotheses {
        for part in &parts {
            if rng.gen::<bool>() {
                for x in part.clone() {
                    m.set(h, x, true);
                }
            }
        }
    }
    Ok(HypothesisClass::from_bit_matrix(m)?.with_name(format!(
        "partitioned(h={num_hypotheses},x={num_examples},r={r},seed={seed})"
    )))
}
