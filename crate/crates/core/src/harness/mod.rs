//! Instance generators and batch experiments.

pub mod experiment;
pub mod generators;

pub use experiment::{
    read_seed_file, run_experiment, Aggregates, AlgorithmSpec, Budget, ExperimentConfig,
    ExperimentReport, InitSpec, InstanceReport, InstanceSource, InstanceStatus, LabeledInstance,
    PopSize, Predicate, PredicateScope, SuccessCriterion, TrialRecord,
};
pub use generators::{
    profit_trap, random_instance, ratio_trap, showcase, AdversarialSpec, Showcase, TrapFamily,
};
