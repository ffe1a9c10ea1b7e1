//! Exact 0-1 knapsack instances, exact and greedy oracles, and evolutionary
//! algorithms built from mutation, repair and selection operators.
//!
//! All fitness arithmetic is exact: profits, weights and capacities are
//! [`Rational`]s, and every run is reproducible from its seed.

pub mod engine;
pub mod error;
pub mod harness;
pub mod instance;
pub mod operators;
pub mod oracles;
pub mod rational;
pub mod rng;

pub use engine::{
    run, run_with_observer, AlgorithmConfig, Family, InitMode, Preset, RunTrace, StopRule,
    TraceDetail,
};
pub use error::{Error, Result};
pub use instance::{Bitstring, KnapsackInstance};
pub use operators::{Individual, RepairMethod, RepairMixture};
pub use oracles::{
    brute_force_opt, dp_opt, exact_opt, greedy_baseline, GreedyBaseline, OptimumCertificate,
};
pub use rational::Rational;
