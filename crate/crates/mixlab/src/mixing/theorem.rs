//! Hypotheses of the bounded-memory lower bound for `d`-mixing classes, and
//! the memory-state count it rules out.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::report::{sig12, sig12_opt};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Theorem1Report {
    #[serde(serialize_with = "sig12")]
    pub a: f64,
    #[serde(serialize_with = "sig12")]
    pub s: f64,
    #[serde(serialize_with = "sig12")]
    pub d: f64,
    /// `d^2 <= |X| * |H|^a`.
    pub mixing_condition: bool,
    #[serde(serialize_with = "sig12")]
    pub mixing_rhs: f64,
    /// `|e(H,X)/|H| - |X|/2| <= d * sqrt(|X|/|H|)`.
    pub density_condition: bool,
    #[serde(serialize_with = "sig12")]
    pub density_lhs: f64,
    #[serde(serialize_with = "sig12")]
    pub density_rhs: f64,
    /// `|H|^(1.25 - s - 3a)` memory states.
    #[serde(serialize_with = "sig12")]
    pub memory_state_bound: f64,
    #[serde(serialize_with = "sig12")]
    pub memory_bits: f64,
    /// The bound only says something when it exceeds `|H|`, i.e. `a < 1/12`.
    pub interesting: bool,
    /// Smallest `a >= 0` with `d^2 <= |X| * |H|^a`, if one in `[0,1]` exists.
    #[serde(serialize_with = "sig12_opt")]
    pub smallest_a: Option<f64>,
    pub preconditions_hold: bool,
}

pub fn check_theorem1_preconditions(class: &HypothesisClass, a: f64, s: f64, d: f64) -> Result<Theorem1Report> {
    if !(0.0..=1.0).contains(&a) {
        return Err(Error::input(format!("a must lie in [0,1], got {a}")));
    }
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::input(format!("s must lie in (0,1), got {s}")));
    }
    if !(d >= 0.0 && d.is_finite()) {
        return Err(Error::input(format!("d must be a finite non-negative number, got {d}")));
    }
    let nh = class.num_hypotheses() as f64;
    let nx = class.num_examples() as f64;

    let mixing_rhs = nx * nh.powf(a);
    let mixing_condition = d * d <= mixing_rhs;
    let density_lhs = (class.total_edges() as f64 / nh - nx / 2.0).abs();
    let density_rhs = d * (nx / nh).sqrt();
    let density_condition = density_lhs <= density_rhs;
    let memory_state_bound = nh.powf(1.25 - s - 3.0 * a);

    let smallest_a = if d * d <= nx {
        Some(0.0)
    } else if nh > 1.0 {
        Some((d * d / nx).ln() / nh.ln()).filter(|&x| x <= 1.0)
    } else {
        None
    };

    Ok(Theorem1Report {
        a,
        s,
        d,
        mixing_condition,
        mixing_rhs,
        density_condition,
        density_lhs,
        density_rhs,
        memory_state_bound,
        memory_bits: memory_state_bound.log2(),
        interesting: a < 1.0 / 12.0,
        smallest_a,
        preconditions_hold: mixing_condition && density_condition,
    })
}
