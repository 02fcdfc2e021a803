//! Brute-force maximum discrepancy over every pair of non-empty subsets.
//! Used to validate the one-sided engine.

use std::cmp::Ordering;

use super::exact::Found;
use super::score::{Score, Scorer};
use crate::bits::{lex_cmp_masks, mask_indices};
use crate::error::{Error, Result};
use crate::hypothesis_graph::{HypothesisClass, SubsetPair};

pub const ORACLE_CAP: usize = 12;

pub(crate) fn bruteforce_max(class: &HypothesisClass, scorer: &Scorer) -> Result<Found> {
    let (nh, nx) = (class.num_hypotheses(), class.num_examples());
    if nh > ORACLE_CAP || nx > ORACLE_CAP {
        return Err(Error::capacity(format!(
            "the brute-force oracle handles at most {ORACLE_CAP}x{ORACLE_CAP}, class is {nh}x{nx}"
        )));
    }
    let rows: Vec<u64> = (0..nh).map(|h| class.row_bits(h)[0]).collect();

    let mut best: Option<(Score, u64, u64)> = None;
    for t_mask in 1u64..1 << nh {
        let t = t_mask.count_ones() as u64;
        for s_mask in 1u64..1 << nx {
            let s = s_mask.count_ones() as u64;
            let mut e = 0u64;
            for (h, row) in rows.iter().enumerate() {
                if t_mask >> h & 1 == 1 {
                    e += (row & s_mask).count_ones() as u64;
                }
            }
            let score = scorer.score(e, s, t);
            let replace = match &best {
                None => true,
                Some((b, bt, bs)) => match score.cmp(b) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => {
                        lex_cmp_masks(t_mask, *bt).then(lex_cmp_masks(s_mask, *bs)) == Ordering::Less
                    }
                },
            };
            if replace {
                best = Some((score, t_mask, s_mask));
            }
        }
    }
    let (score, t_mask, s_mask) = best.expect("non-empty dimensions");
    Ok(Found {
        score,
        witness: SubsetPair::new(mask_indices(t_mask), mask_indices(s_mask)),
    })
}
