//! The (N+1) evolutionary algorithms: pure strategy, mixed strategy and the
//! helper-objective MOEA.
//!
//! A generation picks a uniform parent, applies bitwise mutation, repairs the
//! child if it is infeasible (drawing the repair method from the configured
//! mixture), evaluates it, and selects `N` survivors out of the `N + 1`.
//! Random draws are consumed in this fixed order: parent index, `n` mutation
//! draws, the repair-method draw and random-repair draws (only for an
//! infeasible child), then selection draws (tie-break or fill).
//! Initialization draws, per individual, `n` booleans for a random genome
//! followed by repair draws when that genome is infeasible.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rand::Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::operators::{
    multi_criteria_indices, mutate_in_place, repair_in_place, truncate_in_place, Individual,
    RepairMethod, RepairMixture,
};
use crate::rational::Rational;
use crate::rng::rng_from_seed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PureStrategy,
    MixedStrategy,
    Moea,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitMode {
    /// Uniform random bitstrings, each repaired with a method drawn from the mixture.
    RandomFeasible,
    /// `N` null knapsacks.
    AllZero,
    /// The given bitstrings, cycled to fill `N` slots and repaired if needed.
    Seeded(Vec<Bitstring>),
}

/// Optional early termination. Both rules depend only on the best fitness,
/// which never decreases, so stopping does not change whether a run would
/// have met the same condition by the end of its budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StopRule {
    /// Stop once the best fitness reaches the value.
    AtLeast(Rational),
    /// Stop once the best fitness exceeds the best of the initial population.
    AboveInitial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TraceDetail {
    /// One record per generation.
    #[default]
    EveryGeneration,
    /// The initial record, every improvement of the best fitness and the last generation.
    Improvements,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgorithmConfig {
    pub family: Family,
    pub repair: RepairMixture,
    pub pop_size: usize,
    pub seed: u64,
    /// Maximum number of fitness evaluations, initialization included.
    pub budget: u64,
    pub init: InitMode,
    /// Fitness levels whose first hitting time is recorded.
    pub thresholds: Vec<Rational>,
    pub stop: Option<StopRule>,
    pub detail: TraceDetail,
}

impl AlgorithmConfig {
    pub fn new(
        family: Family,
        repair: RepairMixture,
        pop_size: usize,
        seed: u64,
        budget: u64,
    ) -> Self {
        AlgorithmConfig {
            family,
            repair,
            pop_size,
            seed,
            budget,
            init: InitMode::RandomFeasible,
            thresholds: Vec::new(),
            stop: None,
            detail: TraceDetail::EveryGeneration,
        }
    }

    pub fn pure(method: RepairMethod, pop_size: usize, seed: u64, budget: u64) -> Self {
        Self::new(
            Family::PureStrategy,
            RepairMixture::pure(method),
            pop_size,
            seed,
            budget,
        )
    }

    pub fn mixed(repair: RepairMixture, pop_size: usize, seed: u64, budget: u64) -> Self {
        Self::new(Family::MixedStrategy, repair, pop_size, seed, budget)
    }

    /// The helper-objective MOEA with its uniform profit/ratio repair mixture.
    pub fn moea(pop_size: usize, seed: u64, budget: u64) -> Self {
        let repair =
            RepairMixture::uniform(&[RepairMethod::RatioGreedy, RepairMethod::ProfitGreedy])
                .expect("two-way mixture");
        Self::new(Family::Moea, repair, pop_size, seed, budget)
    }

    pub fn with_init(mut self, init: InitMode) -> Self {
        self.init = init;
        self
    }

    pub fn with_thresholds(mut self, thresholds: Vec<Rational>) -> Self {
        self.thresholds = thresholds;
        self
    }

    pub fn with_stop(mut self, stop: StopRule) -> Self {
        self.stop = Some(stop);
        self
    }

    pub fn with_detail(mut self, detail: TraceDetail) -> Self {
        self.detail = detail;
        self
    }

    pub fn validate(&self, inst: &KnapsackInstance) -> Result<()> {
        if self.pop_size == 0 {
            return Err(Error::Config("population size must be at least 1".into()));
        }
        if self.family == Family::Moea && self.pop_size < 3 {
            return Err(Error::Config(
                "the MOEA needs a population of at least 3".into(),
            ));
        }
        if self.budget < self.pop_size as u64 {
            return Err(Error::Config(format!(
                "budget {} is smaller than the population size {}",
                self.budget, self.pop_size
            )));
        }
        if self.family == Family::PureStrategy && !self.repair.is_pure() {
            return Err(Error::Config(
                "a pure strategy uses exactly one repair method".into(),
            ));
        }
        if let InitMode::Seeded(seeds) = &self.init {
            if seeds.is_empty() {
                return Err(Error::Config(
                    "seeded initialization needs at least one bitstring".into(),
                ));
            }
            if let Some(bad) = seeds.iter().find(|s| s.len() != inst.n()) {
                return Err(Error::LengthMismatch {
                    expected: inst.n(),
                    found: bad.len(),
                });
            }
        }
        Ok(())
    }
}

/// Named algorithm variants, as accepted on the command line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    PureProfit,
    PureRatio,
    PureRandom,
    /// Uniform choice between ratio-greedy and profit-greedy repair.
    Mixed2,
    /// Uniform choice among all three repair methods.
    Mixed3,
    Moea,
}

impl Preset {
    pub fn config(self, pop_size: usize, seed: u64, budget: u64) -> AlgorithmConfig {
        use RepairMethod::*;
        match self {
            Preset::PureProfit => AlgorithmConfig::pure(ProfitGreedy, pop_size, seed, budget),
            Preset::PureRatio => AlgorithmConfig::pure(RatioGreedy, pop_size, seed, budget),
            Preset::PureRandom => AlgorithmConfig::pure(Random, pop_size, seed, budget),
            Preset::Mixed2 => AlgorithmConfig::mixed(
                RepairMixture::uniform(&[RatioGreedy, ProfitGreedy]).expect("two-way mixture"),
                pop_size,
                seed,
                budget,
            ),
            Preset::Mixed3 => AlgorithmConfig::mixed(
                RepairMixture::uniform(&[RatioGreedy, ProfitGreedy, Random])
                    .expect("three-way mixture"),
                pop_size,
                seed,
                budget,
            ),
            Preset::Moea => AlgorithmConfig::moea(pop_size, seed, budget),
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::PureProfit => "pure-profit",
            Preset::PureRatio => "pure-ratio",
            Preset::PureRandom => "pure-random",
            Preset::Mixed2 => "mixed2",
            Preset::Mixed3 => "mixed3",
            Preset::Moea => "moea",
        })
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "pure-profit" => Preset::PureProfit,
            "pure-ratio" => Preset::PureRatio,
            "pure-random" => Preset::PureRandom,
            "mixed2" => Preset::Mixed2,
            "mixed3" => Preset::Mixed3,
            "moea" => Preset::Moea,
            other => return Err(Error::Config(format!("unknown algorithm `{other}`"))),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GenerationRecord {
    pub eval_count: u64,
    pub best_f: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunTrace {
    pub generations: Vec<GenerationRecord>,
    /// Smallest evaluation count at which the best fitness reached each threshold.
    pub first_hits: BTreeMap<Rational, Option<u64>>,
    pub final_best: Individual,
    pub initial_best: Rational,
    pub evaluations: u64,
    pub rng_seed: u64,
}

impl RunTrace {
    pub fn best_f(&self) -> Rational {
        self.final_best.f()
    }

    /// The per-generation records as JSON lines.
    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for record in &self.generations {
            out.push_str(&serde_json::to_string(record).expect("serializable record"));
            out.push('\n');
        }
        out
    }
}

fn best_index(pop: &[Individual]) -> usize {
    let mut best = 0;
    for (i, ind) in pop.iter().enumerate().skip(1) {
        if ind.f() > pop[best].f() {
            best = i;
        }
    }
    best
}

fn evaluate_child<R: Rng + ?Sized>(
    inst: &KnapsackInstance,
    mut genome: Bitstring,
    repair: &RepairMixture,
    rng: &mut R,
) -> Individual {
    let mut weight = inst.scaled_weight(&genome);
    if !inst.fits(weight) {
        let method = repair.draw(rng);
        weight = repair_in_place(inst, &mut genome, weight, method, rng);
        debug_assert!(inst.fits(weight));
    }
    let profit = inst.scaled_profit(&genome);
    Individual::from_feasible(inst, genome, profit)
}

/// Runs one seeded execution until the evaluation budget is spent (or the
/// stop rule fires). Identical inputs give identical traces.
pub fn run(inst: &KnapsackInstance, cfg: &AlgorithmConfig) -> Result<RunTrace> {
    run_with_observer(inst, cfg, |_, _| {})
}

/// [`run`], calling `observe(evaluations, population)` after initialization
/// and after every selection step.
pub fn run_with_observer(
    inst: &KnapsackInstance,
    cfg: &AlgorithmConfig,
    mut observe: impl FnMut(u64, &[Individual]),
) -> Result<RunTrace> {
    cfg.validate(inst)?;
    let mut rng = rng_from_seed(cfg.seed);
    let n = inst.n();
    let pop_size = cfg.pop_size;

    let mut pop: Vec<Individual> = (0..pop_size)
        .map(|k| {
            let genome = match &cfg.init {
                InitMode::RandomFeasible => {
                    Bitstring::from((0..n).map(|_| rng.gen::<bool>()).collect::<Vec<_>>())
                }
                InitMode::AllZero => Bitstring::zeros(n),
                InitMode::Seeded(seeds) => seeds[k % seeds.len()].clone(),
            };
            evaluate_child(inst, genome, &cfg.repair, &mut rng)
        })
        .collect();

    let mut evaluations = pop_size as u64;
    observe(evaluations, &pop);
    let initial_best = pop[best_index(&pop)].f();
    let mut best_f = initial_best;
    let mut generations = vec![GenerationRecord {
        eval_count: evaluations,
        best_f,
    }];
    let mut first_hits: BTreeMap<Rational, Option<u64>> = cfg
        .thresholds
        .iter()
        .map(|&t| (t, (best_f >= t).then_some(evaluations)))
        .collect();

    let stop_reached = |best: Rational| match cfg.stop {
        None => false,
        Some(StopRule::AtLeast(t)) => best >= t,
        Some(StopRule::AboveInitial) => best > initial_best,
    };

    let mut merged: Vec<Individual> = Vec::with_capacity(pop_size + 1);
    while evaluations < cfg.budget && !stop_reached(best_f) {
        let parent = rng.gen_range(0..pop_size);
        let mut genome = pop[parent].genome().clone();
        mutate_in_place(&mut genome, &mut rng);
        let child = evaluate_child(inst, genome, &cfg.repair, &mut rng);
        evaluations += 1;

        match cfg.family {
            Family::PureStrategy | Family::MixedStrategy => {
                truncate_in_place(&mut pop, child, &mut rng)
            }
            Family::Moea => {
                merged.clear();
                merged.append(&mut pop);
                merged.push(child);
                let picks = multi_criteria_indices(&merged, pop_size, &mut rng);
                pop.extend(picks.into_iter().map(|i| merged[i].clone()));
            }
        }

        observe(evaluations, &pop);
        let current = pop[best_index(&pop)].f();
        debug_assert!(current >= best_f, "elitism violated");
        let improved = current > best_f;
        best_f = current;
        for (t, hit) in first_hits.iter_mut() {
            if hit.is_none() && best_f >= *t {
                *hit = Some(evaluations);
            }
        }
        let last = evaluations == cfg.budget || stop_reached(best_f);
        if cfg.detail == TraceDetail::EveryGeneration || improved || last {
            generations.push(GenerationRecord {
                eval_count: evaluations,
                best_f,
            });
        }
    }

    let final_best = pop.swap_remove(best_index(&pop));
    Ok(RunTrace {
        generations,
        first_hits,
        final_best,
        initial_best,
        evaluations,
        rng_seed: cfg.seed,
    })
}

/// `min_x h2(ref) − h2(x)` over the population, where `ref` packs only the
/// item of highest profit-to-weight ratio (lowest index on ties).
pub fn drift_distance(inst: &KnapsackInstance, pop: &[Individual]) -> Result<Rational> {
    if pop.is_empty() {
        return Err(Error::EmptyPopulation);
    }
    let ranks = inst.ratio_ranks();
    let reference = (0..inst.n()).fold(0, |best, i| {
        if inst.ratio(i) > inst.ratio(best) {
            i
        } else {
            best
        }
    });
    let h2_ref = Rational::from(ranks[reference]);
    Ok(pop
        .iter()
        .map(|x| h2_ref - x.h2())
        .min()
        .expect("non-empty population"))
}
