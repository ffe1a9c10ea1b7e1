//! Variation, repair, helper-objective and selection operators.
//!
//! Every operator that needs randomness takes the random stream as an
//! explicit argument; none of them hold state between calls.

mod helpers;
mod mutation;
mod repair;
mod selection;

pub use helpers::helper_values;
pub use mutation::bitwise_mutation;
pub use repair::{repair, RepairMethod, RepairMixture};
pub use selection::{multi_criteria_select, truncation_select};

pub(crate) use mutation::mutate_in_place;
pub(crate) use repair::repair_in_place;
pub(crate) use selection::{multi_criteria_indices, truncate_in_place};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::rational::Rational;

/// A feasible genome with its cached objective values `f`, `h1`, `h2`, `h3`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Individual {
    genome: Bitstring,
    f: Rational,
    h1: Rational,
    h2: Rational,
    h3: u32,
}

impl Individual {
    /// Evaluates a feasible genome. Infeasible genomes are rejected.
    pub fn evaluate(inst: &KnapsackInstance, genome: Bitstring) -> Result<Self> {
        let f = inst.fitness(&genome)?;
        let (h1, h2, h3) = helper_values(inst, &genome)?;
        Ok(Individual {
            genome,
            f,
            h1,
            h2,
            h3,
        })
    }

    /// Evaluation for a genome already known to be feasible, with its scaled
    /// profit sum precomputed.
    pub(crate) fn from_feasible(
        inst: &KnapsackInstance,
        genome: Bitstring,
        scaled_profit: i128,
    ) -> Self {
        let (h1, h2, h3) = helpers::helper_values_unchecked(inst, &genome);
        Individual {
            f: inst.profit_of_scaled(scaled_profit),
            genome,
            h1,
            h2,
            h3,
        }
    }

    pub fn genome(&self) -> &Bitstring {
        &self.genome
    }

    pub fn into_genome(self) -> Bitstring {
        self.genome
    }

    /// Fitness `f(x)`.
    pub fn f(&self) -> Rational {
        self.f
    }

    /// Mean profit rank of the packed items.
    pub fn h1(&self) -> Rational {
        self.h1
    }

    /// Mean ratio rank of the packed items.
    pub fn h2(&self) -> Rational {
        self.h2
    }

    /// Number of packed items.
    pub fn h3(&self) -> u32 {
        self.h3
    }
}

pub(crate) fn check_population(parents: &[Individual], n: usize) -> Result<()> {
    if parents.len() != n {
        return Err(Error::Config(format!(
            "parent population has {} individuals, expected {n}",
            parents.len()
        )));
    }
    Ok(())
}
