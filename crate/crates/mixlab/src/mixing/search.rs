//! Seeded hill climbing over subset pairs. Any pair it reports is feasible,
//! so its discrepancy is a lower bound on the mixing parameter.

use std::cmp::Ordering;

use rand::Rng as _;

use super::exact::Found;
use super::score::{Score, Scorer};
use crate::error::Result;
use crate::hypothesis_graph::{HypothesisClass, SubsetPair};
use crate::rng;

#[derive(Clone, Debug, PartialEq)]
pub struct SearchConfig {
    pub seed: u64,
    /// Random starts in addition to the first one.
    pub restarts: usize,
    /// Total number of single-element moves across all starts.
    pub budget: usize,
    /// First start; a seeded random pair when absent.
    pub initial: Option<SubsetPair>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            seed: 0,
            restarts: 16,
            budget: 20_000,
            initial: None,
        }
    }
}

pub(crate) fn hill_climb(class: &HypothesisClass, scorer: &Scorer, cfg: &SearchConfig) -> Result<Found> {
    if let Some(init) = &cfg.initial {
        init.validate(class)?;
        init.require_non_empty()?;
    }
    let mut rng = rng::seeded(cfg.seed);
    let mut budget = cfg.budget;
    let mut best: Option<Found> = None;
    for start in 0..=cfg.restarts {
        let pair = match (&cfg.initial, start) {
            (Some(init), 0) => init.clone(),
            _ => random_pair(class, &mut rng),
        };
        let mut state = Climber::new(class, scorer, &pair);
        while budget > 0 && state.step() {
            budget -= 1;
        }
        let found = Found {
            score: state.score(),
            witness: state.pair(),
        };
        best = Some(match best {
            Some(b) if b.score.cmp(&found.score) != Ordering::Less => b,
            _ => found,
        });
    }
    Ok(best.expect("at least one start"))
}

fn random_pair(class: &HypothesisClass, rng: &mut rng::Rng) -> SubsetPair {
    let mut pick = |n: usize| {
        let mut v: Vec<usize> = (0..n).filter(|_| rng.gen::<bool>()).collect();
        if v.is_empty() {
            v.push(rng.gen_range(0..n));
        }
        v
    };
    let t = pick(class.num_hypotheses());
    let s = pick(class.num_examples());
    SubsetPair::new(t, s)
}

struct Climber<'a> {
    class: &'a HypothesisClass,
    scorer: &'a Scorer,
    in_t: Vec<bool>,
    in_s: Vec<bool>,
    /// `|row_h ∩ S|` for every hypothesis.
    row_counts: Vec<u64>,
    /// `|col_x ∩ T|` for every example.
    col_counts: Vec<u64>,
    e: u64,
    s: u64,
    t: u64,
}

enum Move {
    Hyp(usize),
    Ex(usize),
}

impl<'a> Climber<'a> {
    fn new(class: &'a HypothesisClass, scorer: &'a Scorer, pair: &SubsetPair) -> Self {
        let mut in_t = vec![false; class.num_hypotheses()];
        let mut in_s = vec![false; class.num_examples()];
        pair.hyp_subset.iter().for_each(|&h| in_t[h] = true);
        pair.ex_subset.iter().for_each(|&x| in_s[x] = true);
        let row_counts: Vec<u64> = (0..class.num_hypotheses())
            .map(|h| class.neighbours_of_hypothesis(h).filter(|&x| in_s[x]).count() as u64)
            .collect();
        let mut col_counts = vec![0u64; class.num_examples()];
        for &h in &pair.hyp_subset {
            class.neighbours_of_hypothesis(h).for_each(|x| col_counts[x] += 1);
        }
        let e = pair.hyp_subset.iter().map(|&h| row_counts[h]).sum();
        Climber {
            class,
            scorer,
            in_t,
            in_s,
            row_counts,
            col_counts,
            e,
            s: pair.s() as u64,
            t: pair.t() as u64,
        }
    }

    fn score(&self) -> Score {
        self.scorer.score(self.e, self.s, self.t)
    }

    fn pair(&self) -> SubsetPair {
        let on = |v: &[bool]| v.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect::<Vec<_>>();
        SubsetPair::new(on(&self.in_t), on(&self.in_s))
    }

    /// Applies the best strictly improving single toggle; false at a local
    /// optimum.
    fn step(&mut self) -> bool {
        let mut best = self.score();
        let mut chosen = None;
        for h in 0..self.in_t.len() {
            let (e, t) = if self.in_t[h] {
                (self.e - self.row_counts[h], self.t - 1)
            } else {
                (self.e + self.row_counts[h], self.t + 1)
            };
            if t == 0 {
                continue;
            }
            let sc = self.scorer.score(e, self.s, t);
            if sc.cmp(&best) == Ordering::Greater {
                best = sc;
                chosen = Some(Move::Hyp(h));
            }
        }
        for x in 0..self.in_s.len() {
            let (e, s) = if self.in_s[x] {
                (self.e - self.col_counts[x], self.s - 1)
            } else {
                (self.e + self.col_counts[x], self.s + 1)
            };
            if s == 0 {
                continue;
            }
            let sc = self.scorer.score(e, s, self.t);
            if sc.cmp(&best) == Ordering::Greater {
                best = sc;
                chosen = Some(Move::Ex(x));
            }
        }
        match chosen {
            None => false,
            Some(Move::Hyp(h)) => {
                let adding = !self.in_t[h];
                self.in_t[h] = adding;
                if adding {
                    self.e += self.row_counts[h];
                    self.t += 1;
                } else {
                    self.e -= self.row_counts[h];
                    self.t -= 1;
                }
                for x in self.class.neighbours_of_hypothesis(h) {
                    if adding {
                        self.col_counts[x] += 1;
                    } else {
                        self.col_counts[x] -= 1;
                    }
                }
                true
            }
            Some(Move::Ex(x)) => {
                let adding = !self.in_s[x];
                self.in_s[x] = adding;
                if adding {
                    self.e += self.col_counts[x];
                    self.s += 1;
                } else {
                    self.e -= self.col_counts[x];
                    self.s -= 1;
                }
                for h in crate::bits::iter_ones(self.class.col_bits(x)) {
                    if adding {
                        self.row_counts[h] += 1;
                    } else {
                        self.row_counts[h] -= 1;
                    }
                }
                true
            }
        }
    }
}
