//! Baselines and the discrepancy comparator.
//!
//! For a rational baseline `p = num/den` the deviation `|e - p*s*t|` is kept
//! as the integer `|den*e - num*s*t|`, and two discrepancies are compared by
//! cross-multiplying `dev^2 * st'` against `dev'^2 * st`. Only when those
//! products overflow `u128` (or the baseline is irrational) do comparisons
//! fall back to doubles.

use std::cmp::Ordering;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;

/// The expected edge fraction `p` subtracted in `|e(S,T) - p*s*t|`.
#[derive(Clone, Copy, Debug, PartialEq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Baseline {
    /// `p = 1/2`.
    #[default]
    Half,
    /// `p = e(H,X) / (|H||X|)`.
    Density,
    Ratio { num: u64, den: u64 },
    Real(f64),
}

impl Baseline {
    pub(crate) fn resolve(self, class: &HypothesisClass) -> Result<Scorer> {
        let (num, den) = match self {
            Baseline::Half => (1, 2),
            Baseline::Density => {
                let d = class.density();
                (d.edges, d.cells)
            }
            Baseline::Ratio { num, den } => {
                if den == 0 || num > den {
                    return Err(Error::input(format!("baseline {num}/{den} is not in [0,1]")));
                }
                (num, den)
            }
            Baseline::Real(p) => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::input(format!("baseline {p} is not in [0,1]")));
                }
                return Ok(Scorer::Float(p));
            }
        };
        let g = gcd(num, den);
        Ok(Scorer::Exact {
            num: (num / g) as u128,
            den: (den / g) as u128,
        })
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) enum Scorer {
    Exact { num: u128, den: u128 },
    Float(f64),
}

impl Scorer {
    pub(crate) fn p(&self) -> f64 {
        match *self {
            Scorer::Exact { num, den } => num as f64 / den as f64,
            Scorer::Float(p) => p,
        }
    }

    #[inline]
    pub(crate) fn score(&self, e: u64, s: u64, t: u64) -> Score {
        let st = s * t;
        match *self {
            Scorer::Exact { num, den } => Score::Exact {
                dev: (den * e as u128).abs_diff(num * st as u128),
                st,
                den,
            },
            Scorer::Float(p) => {
                Score::Float((e as f64 - p * st as f64).abs() / (st as f64).sqrt())
            }
        }
    }
}

/// A discrepancy value `dev / (den * sqrt(st))` with an exact ordering.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Score {
    Exact { dev: u128, st: u64, den: u128 },
    Float(f64),
}

impl Score {

    pub(crate) fn value(&self) -> f64 {
        match *self {
            Score::Exact { dev, st, den } => dev as f64 / den as f64 / (st as f64).sqrt(),
            Score::Float(v) => v,
        }
    }

    pub(crate) fn is_zero(&self) -> bool {
        match *self {
            Score::Exact { dev, .. } => dev == 0,
            Score::Float(v) => v == 0.0,
        }
    }

    /// Exact when both sides share a denominator and the cross products fit.
    pub(crate) fn cmp(&self, other: &Score) -> Ordering {
        if let (
            &Score::Exact { dev: a, st: sa, den: da },
            &Score::Exact { dev: b, st: sb, den: db },
        ) = (self, other)
        {
            if da == db {
                let lhs = a.checked_mul(a).and_then(|x| x.checked_mul(sb as u128));
                let rhs = b.checked_mul(b).and_then(|x| x.checked_mul(sa as u128));
                if let (Some(l), Some(r)) = (lhs, rhs) {
                    return l.cmp(&r);
                }
            }
        }
        self.value().total_cmp(&other.value())
    }
}

impl PartialEq for Score {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}
