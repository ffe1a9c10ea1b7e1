use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::rational::{lcm_i128, Rational};

/// How an infeasible knapsack picks the next item to evict.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RepairMethod {
    /// Evict the packed item with the smallest profit.
    ProfitGreedy,
    /// Evict the packed item with the smallest profit-to-weight ratio.
    RatioGreedy,
    /// Evict a uniformly random packed item.
    Random,
}

impl fmt::Display for RepairMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepairMethod::ProfitGreedy => "profit-greedy",
            RepairMethod::RatioGreedy => "ratio-greedy",
            RepairMethod::Random => "random",
        })
    }
}

impl FromStr for RepairMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "profit-greedy" | "profit" => Ok(RepairMethod::ProfitGreedy),
            "ratio-greedy" | "ratio" => Ok(RepairMethod::RatioGreedy),
            "random" => Ok(RepairMethod::Random),
            other => Err(Error::Config(format!("unknown repair method `{other}`"))),
        }
    }
}

/// A probability distribution over repair methods.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RepairMixture {
    entries: Vec<(RepairMethod, Rational)>,
    // common denominator of the probabilities, and cumulative numerators
    #[serde(skip)]
    scale: u64,
    #[serde(skip)]
    cumulative: Vec<u64>,
}

impl RepairMixture {
    /// Probabilities must be positive and sum to exactly one.
    pub fn new(entries: Vec<(RepairMethod, Rational)>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::Config("repair mixture is empty".into()));
        }
        if entries.iter().any(|(_, p)| !p.is_positive()) {
            return Err(Error::Config(
                "repair probabilities must be positive".into(),
            ));
        }
        let total: Rational = entries.iter().map(|(_, p)| *p).sum();
        if total != Rational::ONE {
            return Err(Error::Config(format!(
                "repair probabilities sum to {total}, not 1"
            )));
        }
        let scale = entries
            .iter()
            .try_fold(1i128, |acc, (_, p)| lcm_i128(acc, p.denom()))
            .filter(|&s| s <= u64::MAX as i128)
            .ok_or(Error::Overflow("repair probability denominators"))?;
        let mut acc = 0u64;
        let cumulative = entries
            .iter()
            .map(|(_, p)| {
                acc += (p.numer() * (scale / p.denom())) as u64;
                acc
            })
            .collect();
        Ok(RepairMixture {
            entries,
            scale: scale as u64,
            cumulative,
        })
    }

    /// The single-method mixture of a pure-strategy algorithm.
    pub fn pure(method: RepairMethod) -> Self {
        Self::new(vec![(method, Rational::ONE)]).expect("valid singleton mixture")
    }

    /// Uniform choice over the given methods.
    pub fn uniform(methods: &[RepairMethod]) -> Result<Self> {
        let p = Rational::new(1, methods.len().max(1) as i128);
        Self::new(methods.iter().map(|&m| (m, p)).collect())
    }

    pub fn entries(&self) -> &[(RepairMethod, Rational)] {
        &self.entries
    }

    pub fn is_pure(&self) -> bool {
        self.entries.len() == 1
    }

    /// Draws a method. A singleton mixture consumes no randomness; otherwise
    /// one `gen_range(0..D)` is drawn, `D` being the common denominator.
    pub fn draw<R: Rng + ?Sized>(&self, rng: &mut R) -> RepairMethod {
        if self.entries.len() == 1 {
            return self.entries[0].0;
        }
        let u = rng.gen_range(0..self.scale);
        let k = self.cumulative.partition_point(|&c| c <= u);
        self.entries[k].0
    }
}

/// Evicts items one at a time until `x` is feasible. Feasible input is
/// returned unchanged. Greedy ties go to the highest item index.
pub fn repair<R: Rng + ?Sized>(
    inst: &KnapsackInstance,
    x: &Bitstring,
    method: RepairMethod,
    rng: &mut R,
) -> Result<Bitstring> {
    if x.len() != inst.n() {
        return Err(Error::LengthMismatch {
            expected: inst.n(),
            found: x.len(),
        });
    }
    let mut out = x.clone();
    let weight = inst.scaled_weight(&out);
    repair_in_place(inst, &mut out, weight, method, rng);
    Ok(out)
}

/// In-place repair given the current scaled weight; returns the new scaled
/// weight. Random repair draws one `gen_range(0..k)` per eviction over the
/// `k` packed items listed in increasing index order.
pub(crate) fn repair_in_place<R: Rng + ?Sized>(
    inst: &KnapsackInstance,
    x: &mut Bitstring,
    mut weight: i128,
    method: RepairMethod,
    rng: &mut R,
) -> i128 {
    if inst.fits(weight) {
        return weight;
    }
    let weights = inst.scaled_weights();
    let greedy_order = match method {
        RepairMethod::ProfitGreedy => inst.profit_eviction_order(),
        RepairMethod::RatioGreedy => inst.ratio_eviction_order(),
        RepairMethod::Random => {
            let mut packed: Vec<usize> = x.ones_indices().collect();
            while !inst.fits(weight) {
                let item = packed.remove(rng.gen_range(0..packed.len()));
                x.set(item, false);
                weight -= weights[item];
            }
            return weight;
        }
    };
    for &item in greedy_order {
        if x.get(item) {
            x.set(item, false);
            weight -= weights[item];
            if inst.fits(weight) {
                break;
            }
        }
    }
    weight
}
