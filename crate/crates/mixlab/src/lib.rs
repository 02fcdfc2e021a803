//! Mixing complexity of finite hypothesis classes.
//!
//! A hypothesis class over a finite domain is a bipartite graph between
//! hypotheses and examples. This crate measures how close that graph is to
//! random (the mixing parameter `d` and the mixing complexity
//! `sqrt(|H||X|)/d`), relates it to VC-dimension, sufficient partitions and
//! label perturbations, and simulates bounded-memory learners on it.

pub mod bits;
pub mod cli;
pub mod error;
pub mod hypothesis_graph;
pub mod memory_learner;
pub mod mixing;
pub mod partition;
pub mod perturbation;
pub mod randomization;
pub mod report;
pub mod rng;
pub mod vc;

pub use error::{Error, Result};
pub use hypothesis_graph::{HypothesisClass, SubsetPair};
pub use mixing::{Baseline, Method, MixingReport};
