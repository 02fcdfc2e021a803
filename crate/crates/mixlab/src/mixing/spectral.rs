//! Largest singular value of the centred incidence matrix `M - pJ`.
//!
//! For indicator vectors, `|1_T^T (M - pJ) 1_S| <= sigma_max * sqrt(s t)`, so
//! `sigma_max` bounds the mixing parameter from above.

use rand::Rng as _;

use crate::error::{Error, Result};
use crate::hypothesis_graph::HypothesisClass;
use crate::rng;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralConfig {
    /// Relative tolerance on successive Rayleigh quotients.
    pub tol: f64,
    pub max_iters: usize,
    /// Seed of the start vector.
    pub seed: u64,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            tol: 1e-9,
            max_iters: 10_000,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SpectralEstimate {
    pub sigma: f64,
    pub iterations: usize,
    /// `||G v - lambda v||` at the final unit iterate, `G` the Gram operator.
    pub residual: f64,
}

/// Power iteration on the Gram operator of `M - pJ`, on whichever side is
/// smaller.
pub(crate) fn top_singular_value(
    class: &HypothesisClass,
    p: f64,
    cfg: &SpectralConfig,
) -> Result<SpectralEstimate> {
    if !(cfg.tol > 0.0) {
        return Err(Error::input("spectral tolerance must be positive"));
    }
    let op = Centred { class, p };
    let on_examples = class.num_examples() <= class.num_hypotheses();
    let dim = if on_examples {
        class.num_examples()
    } else {
        class.num_hypotheses()
    };
    let gram = |v: &[f64]| -> Vec<f64> {
        if on_examples {
            op.apply_t(&op.apply(v))
        } else {
            op.apply(&op.apply_t(v))
        }
    };

    let mut rng = rng::seeded(cfg.seed);
    let mut v: Vec<f64> = (0..dim).map(|_| rng.gen_range(-1.0..1.0)).collect();
    normalize(&mut v);

    let mut prev: Option<f64> = None;
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    for it in 1..=cfg.max_iters {
        let mut u = gram(&v);
        lambda = dot(&v, &u);
        residual = u
            .iter()
            .zip(&v)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum::<f64>()
            .sqrt();
        let norm = normalize(&mut u);
        if norm == 0.0 {
            return Ok(SpectralEstimate {
                sigma: 0.0,
                iterations: it,
                residual: 0.0,
            });
        }
        if let Some(prev) = prev {
            if (lambda - prev).abs() <= cfg.tol * lambda.abs() {
                return Ok(SpectralEstimate {
                    sigma: lambda.max(0.0).sqrt(),
                    iterations: it,
                    residual,
                });
            }
        }
        prev = Some(lambda);
        v = u;
    }
    Err(Error::Convergence {
        iterations: cfg.max_iters,
        last: lambda.max(0.0).sqrt(),
        residual,
    })
}

struct Centred<'a> {
    class: &'a HypothesisClass,
    p: f64,
}

impl Centred<'_> {
    /// `(M - pJ) v` for `v` over examples.
    fn apply(&self, v: &[f64]) -> Vec<f64> {
        let shift = self.p * v.iter().sum::<f64>();
        (0..self.class.num_hypotheses())
            .map(|h| self.class.neighbours_of_hypothesis(h).map(|x| v[x]).sum::<f64>() - shift)
            .collect()
    }

    /// `(M - pJ)^T w` for `w` over hypotheses.
    fn apply_t(&self, w: &[f64]) -> Vec<f64> {
        let shift = self.p * w.iter().sum::<f64>();
        let mut out = vec![-shift; self.class.num_examples()];
        for (h, &wh) in w.iter().enumerate() {
            if wh != 0.0 {
                for x in self.class.neighbours_of_hypothesis(h) {
                    out[x] += wh;
                }
            }
        }
        out
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn normalize(v: &mut [f64]) -> f64 {
    let n = dot(v, v).sqrt();
    if n > 0.0 {
        v.iter_mut().for_each(|x| *x /= n);
    }
    n
}
