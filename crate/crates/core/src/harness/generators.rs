//! Instance generators: the two adversarial trap families, the three
//! five-item helper-objective showcases and uniform random instances.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::rational::Rational;
use crate::rng::rng_from_seed;

/// The adversarial constructions. `RatioTrap` stalls ratio-greedy and random
/// repair; `ProfitTrap` stalls profit-greedy repair and the two- and
/// three-way repair mixtures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TrapFamily {
    #[serde(alias = "prop1")]
    RatioTrap,
    #[serde(alias = "prop3")]
    ProfitTrap,
}

/// A trap family with its size `n` and approximation level `alpha`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct AdversarialSpec {
    pub family: TrapFamily,
    pub n: usize,
    pub alpha: Rational,
}

impl AdversarialSpec {
    pub fn new(family: TrapFamily, n: usize, alpha: Rational) -> Result<Self> {
        let spec = AdversarialSpec { family, n, alpha };
        spec.validate()?;
        Ok(spec)
    }

    /// `αn` for the ratio trap, `α(n−1)` for the profit trap.
    fn block(&self) -> Rational {
        match self.family {
            TrapFamily::RatioTrap => self.alpha * Rational::from(self.n),
            TrapFamily::ProfitTrap => self.alpha * Rational::from(self.n - 1),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.alpha <= Rational::ZERO || self.alpha >= Rational::ONE {
            return Err(Error::Config(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        let (min_n, min_block, what) = match self.family {
            TrapFamily::RatioTrap => (4, 2, "alpha * n"),
            TrapFamily::ProfitTrap => (3, 1, "alpha * (n - 1)"),
        };
        if self.n < min_n {
            return Err(Error::Config(format!(
                "n must be at least {min_n}, got {}",
                self.n
            )));
        }
        let block = self.block();
        if !block.is_integer() || block < Rational::from(min_block) {
            return Err(Error::Config(format!(
                "{what} must be an integer of at least {min_block}, got {block}"
            )));
        }
        Ok(())
    }

    pub fn instance(&self) -> Result<KnapsackInstance> {
        self.validate()?;
        let n = self.n;
        let block = self.block().numer() as usize;
        let n_r = Rational::from(n);
        match self.family {
            TrapFamily::RatioTrap => {
                let mut profits = vec![n_r];
                let mut weights = vec![n_r];
                let small = Rational::new(1, block as i128);
                for _ in 1..block {
                    profits.push(Rational::ONE);
                    weights.push(small);
                }
                for _ in block..n {
                    profits.push(n_r.recip());
                    weights.push(n_r);
                }
                KnapsackInstance::new(profits, weights, n_r)
            }
            TrapFamily::ProfitTrap => {
                let mut profits = vec![self.block()];
                let mut weights = vec![Rational::from(n - 1)];
                profits.extend(std::iter::repeat_n(Rational::ONE, n - 1));
                weights.extend(std::iter::repeat_n(Rational::ONE, n - 1));
                // capacity n - 1: item 1 alone fills the knapsack exactly
                KnapsackInstance::new(profits, weights, Rational::from(n - 1))
            }
        }
    }

    /// The solution the analyzed algorithm gets stuck at.
    pub fn local_optimum(&self) -> Bitstring {
        match self.family {
            TrapFamily::RatioTrap => {
                Bitstring::from_indices(self.n, 1..self.block().numer() as usize)
            }
            TrapFamily::ProfitTrap => Bitstring::from_indices(self.n, [0]),
        }
    }

    pub fn global_optimum(&self) -> Bitstring {
        match self.family {
            TrapFamily::RatioTrap => Bitstring::from_indices(self.n, [0]),
            TrapFamily::ProfitTrap => Bitstring::from_indices(self.n, 1..self.n),
        }
    }
}

/// Builds the ratio trap: item 1 is `(n, n)`, items `2..αn` are
/// `(1, 1/(αn))`, the rest are `(1/n, n)`, capacity `n`.
pub fn ratio_trap(n: usize, alpha: Rational) -> Result<KnapsackInstance> {
    AdversarialSpec::new(TrapFamily::RatioTrap, n, alpha)?.instance()
}

/// Builds the profit trap: item 1 is `(α(n−1), n−1)`, items `2..n` are
/// `(1, 1)`, capacity `n − 1`.
pub fn profit_trap(n: usize, alpha: Rational) -> Result<KnapsackInstance> {
    AdversarialSpec::new(TrapFamily::ProfitTrap, n, alpha)?.instance()
}

/// Five-item instances on which exactly one helper objective points at the
/// optimum: mean profit (A), mean ratio (B) and item count (C).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Showcase {
    A,
    B,
    C,
}

impl fmt::Display for Showcase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Showcase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Showcase::A),
            "B" | "b" => Ok(Showcase::B),
            "C" | "c" => Ok(Showcase::C),
            other => Err(Error::Config(format!(
                "unknown showcase instance `{other}`"
            ))),
        }
    }
}

pub fn showcase(which: Showcase) -> KnapsackInstance {
    let (profits, weights, capacity): (&[i64], &[i64], i64) = match which {
        Showcase::A => (&[10, 10, 10, 12, 12], &[10, 10, 10, 10, 10], 20),
        Showcase::B => (&[15, 15, 20, 20, 20], &[10, 10, 20, 20, 20], 20),
        Showcase::C => (&[40, 40, 40, 40, 150], &[30, 30, 30, 30, 100], 120),
    };
    KnapsackInstance::from_integers(profits, weights, capacity).expect("valid showcase data")
}

/// Uniform integer profits in `[1, profit_max]` and weights in
/// `[1, weight_max]` (drawn item by item, profit first), capacity
/// `⌈cap_fraction · Σ w_i⌉`.
pub fn random_instance(
    n: usize,
    profit_max: u32,
    weight_max: u32,
    cap_fraction: Rational,
    seed: u64,
) -> Result<KnapsackInstance> {
    if n == 0 {
        return Err(Error::Config(
            "a random instance needs at least one item".into(),
        ));
    }
    if profit_max == 0 || weight_max == 0 {
        return Err(Error::Config(
            "profit and weight bounds must be at least 1".into(),
        ));
    }
    if cap_fraction <= Rational::ZERO || cap_fraction > Rational::ONE {
        return Err(Error::Config(format!(
            "capacity fraction must lie in (0, 1], got {cap_fraction}"
        )));
    }
    let mut rng = rng_from_seed(seed);
    let mut profits = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for _ in 0..n {
        profits.push(Rational::from(rng.gen_range(1..=profit_max)));
        weights.push(Rational::from(rng.gen_range(1..=weight_max)));
    }
    let total: Rational = weights.iter().sum();
    let capacity = Rational::from_integer((cap_fraction * total).ceil());
    KnapsackInstance::new(profits, weights, capacity)
}
