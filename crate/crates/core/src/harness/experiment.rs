//! Declarative batch experiments: many seeded trials of one algorithm on one
//! or more instances, scored against exact optima and the greedy baseline.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generators::{random_instance, showcase, AdversarialSpec, Showcase, TrapFamily};
use crate::engine::{run, InitMode, Preset, StopRule, TraceDetail};
use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::oracles::{exact_opt, greedy_baseline, SolveMethod};
use crate::rational::Rational;
use crate::rng::{derive_seed, INSTANCE_STREAM, TRIAL_STREAM};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub name: String,
    #[serde(default)]
    pub master_seed: u64,
    pub trials: usize,
    pub instances: Vec<InstanceSource>,
    pub algorithm: AlgorithmSpec,
    pub success: SuccessCriterion,
    #[serde(default)]
    pub predicate: Option<Predicate>,
    /// End a trial as soon as it meets the success criterion.
    #[serde(default)]
    pub stop_on_success: bool,
}

impl ExperimentConfig {
    pub fn from_toml(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Config(e.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "source", rename_all = "kebab-case", deny_unknown_fields)]
pub enum InstanceSource {
    #[serde(alias = "prop1")]
    RatioTrap {
        n: usize,
        alpha: Rational,
    },
    #[serde(alias = "prop3")]
    ProfitTrap {
        n: usize,
        alpha: Rational,
    },
    #[serde(alias = "section5")]
    Showcase {
        which: Vec<Showcase>,
    },
    Random {
        n: usize,
        profit_max: u32,
        weight_max: u32,
        cap_fraction: Rational,
        seed: u64,
        #[serde(default = "one")]
        count: usize,
    },
    File {
        path: PathBuf,
    },
}

fn one() -> usize {
    1
}

/// A concrete instance produced by a source.
#[derive(Debug, Clone)]
pub struct LabeledInstance {
    pub label: String,
    pub instance: KnapsackInstance,
    /// Known trap optimum for sources that have one.
    pub local_optimum: Option<Bitstring>,
}

impl InstanceSource {
    pub fn expand(&self) -> Result<Vec<LabeledInstance>> {
        let trap = |family, n, alpha, tag: &str| -> Result<Vec<LabeledInstance>> {
            let spec = AdversarialSpec::new(family, n, alpha)?;
            Ok(vec![LabeledInstance {
                label: format!("{tag}(n={n}, alpha={alpha})"),
                instance: spec.instance()?,
                local_optimum: Some(spec.local_optimum()),
            }])
        };
        match self {
            InstanceSource::RatioTrap { n, alpha } => {
                trap(TrapFamily::RatioTrap, *n, *alpha, "ratio-trap")
            }
            InstanceSource::ProfitTrap { n, alpha } => {
                trap(TrapFamily::ProfitTrap, *n, *alpha, "profit-trap")
            }
            InstanceSource::Showcase { which } => Ok(which
                .iter()
                .map(|&w| LabeledInstance {
                    label: format!("showcase-{w}"),
                    instance: showcase(w),
                    local_optimum: None,
                })
                .collect()),
            InstanceSource::Random {
                n,
                profit_max,
                weight_max,
                cap_fraction,
                seed,
                count,
            } => (0..*count)
                .map(|k| {
                    let s = derive_seed(*seed, INSTANCE_STREAM, k as u64);
                    Ok(LabeledInstance {
                        label: format!("random(n={n}, seed={seed}, #{k})"),
                        instance: random_instance(*n, *profit_max, *weight_max, *cap_fraction, s)?,
                        local_optimum: None,
                    })
                })
                .collect(),
            InstanceSource::File { path } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
                Ok(vec![LabeledInstance {
                    label: path.display().to_string(),
                    instance: KnapsackInstance::parse(&text)?,
                    local_optimum: None,
                }])
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PopSize {
    Fixed(usize),
    /// `N = per_item · n`.
    PerItem {
        per_item: usize,
    },
}

impl PopSize {
    pub fn resolve(&self, n: usize) -> usize {
        match *self {
            PopSize::Fixed(size) => size,
            PopSize::PerItem { per_item } => per_item * n,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Budget {
    Fixed(u64),
    /// `factor · N · n³` evaluations.
    PopTimesCube {
        pop_n_cubed: u64,
    },
}

impl Budget {
    pub fn resolve(&self, pop_size: usize, n: usize) -> u64 {
        match *self {
            Budget::Fixed(b) => b,
            Budget::PopTimesCube { pop_n_cubed } => {
                pop_n_cubed * pop_size as u64 * (n as u64).pow(3)
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InitSpec {
    Random,
    Zero,
    /// Every individual starts at the source's trap optimum.
    LocalOptimum,
    File(PathBuf),
}

impl FromStr for InitSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "random" => Ok(InitSpec::Random),
            "zero" => Ok(InitSpec::Zero),
            "local-optimum" => Ok(InitSpec::LocalOptimum),
            other => match other.strip_prefix("file:") {
                Some(path) if !path.is_empty() => Ok(InitSpec::File(path.into())),
                _ => Err(Error::Config(format!("unknown init mode `{other}`"))),
            },
        }
    }
}

impl std::fmt::Display for InitSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            InitSpec::Random => f.write_str("random"),
            InitSpec::Zero => f.write_str("zero"),
            InitSpec::LocalOptimum => f.write_str("local-optimum"),
            InitSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl Serialize for InitSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for InitSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Reads seed bitstrings, one per line; blank lines and `#` comments are skipped.
pub fn read_seed_file(path: &std::path::Path) -> Result<Vec<Bitstring>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Config(format!("cannot read {}: {e}", path.display())))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim().starts_with('#'))
        .map(|(i, l)| {
            l.parse::<Bitstring>().map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse {
                    line: i + 1,
                    message,
                },
                other => other,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgorithmSpec {
    pub algo: Preset,
    pub pop_size: PopSize,
    pub budget: Budget,
    #[serde(default = "default_init")]
    pub init: InitSpec,
}

fn default_init() -> InitSpec {
    InitSpec::Random
}

/// What makes a single trial a success. Every criterion is monotone in the
/// best fitness found so far.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum SuccessCriterion {
    /// Final best strictly above the best initial individual.
    ImprovesOnInit,
    /// Final best at least `max(f(a*), f(b*))`.
    AtLeastGreedy,
    /// Final best at least `ratio · OPT`.
    RatioAtLeast {
        ratio: Rational,
    },
    ReachesOptimum,
    /// Best fitness reaches `fraction · OPT` within the given number of evaluations.
    HitWithin {
        fraction: Rational,
        evaluations: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PredicateScope {
    /// The bound must hold for every instance separately.
    #[default]
    PerInstance,
    /// The bound applies to the success frequency over all trials.
    Pooled,
}

/// Bounds on the success frequency.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Predicate {
    #[serde(default)]
    pub min_fraction: Option<Rational>,
    #[serde(default)]
    pub max_fraction: Option<Rational>,
    #[serde(default)]
    pub scope: PredicateScope,
}

impl Predicate {
    /// Zero trials satisfy any bound.
    pub fn holds(&self, agg: &Aggregates) -> bool {
        let Some(freq) = agg.success_frequency else {
            return true;
        };
        self.min_fraction.is_none_or(|m| freq >= m) && self.max_fraction.is_none_or(|m| freq <= m)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrialRecord {
    pub trial: usize,
    pub seed: u64,
    pub initial_f: Rational,
    pub final_f: Rational,
    pub final_ratio: Rational,
    pub evaluations: u64,
    pub first_hit_half_opt: Option<u64>,
    pub first_hit_opt: Option<u64>,
    pub success: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct Aggregates {
    pub trials: usize,
    pub successes: usize,
    pub success_frequency: Option<Rational>,
    /// Lower median of the first-hit evaluation count at OPT, over trials that hit it.
    pub median_evals_to_opt: Option<u64>,
    pub min_ratio: Option<Rational>,
    pub max_ratio: Option<Rational>,
}

impl Aggregates {
    pub fn from_records<'a>(records: impl IntoIterator<Item = &'a TrialRecord>) -> Self {
        let records: Vec<&TrialRecord> = records.into_iter().collect();
        let trials = records.len();
        let successes = records.iter().filter(|r| r.success).count();
        let mut hits: Vec<u64> = records.iter().filter_map(|r| r.first_hit_opt).collect();
        hits.sort_unstable();
        Aggregates {
            trials,
            successes,
            success_frequency: (trials > 0)
                .then(|| Rational::new(successes as i128, trials as i128)),
            median_evals_to_opt: (!hits.is_empty()).then(|| hits[(hits.len() - 1) / 2]),
            min_ratio: records.iter().map(|r| r.final_ratio).min(),
            max_ratio: records.iter().map(|r| r.final_ratio).max(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "state", rename_all = "kebab-case")]
pub enum InstanceStatus {
    Ok,
    Skipped { reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceReport {
    pub label: String,
    pub n: usize,
    pub pop_size: usize,
    pub budget: u64,
    pub status: InstanceStatus,
    pub opt_value: Option<Rational>,
    pub opt_method: Option<SolveMethod>,
    pub greedy_value: Rational,
    pub records: Vec<TrialRecord>,
    pub aggregates: Aggregates,
    pub predicate_holds: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExperimentReport {
    pub name: String,
    pub master_seed: u64,
    pub algorithm: String,
    pub trials_per_instance: usize,
    pub instances: Vec<InstanceReport>,
    pub pooled: Aggregates,
    pub predicate: Option<Predicate>,
    pub all_predicates_hold: bool,
}

fn trial_seed(master: u64, instance_index: usize, trial: usize) -> u64 {
    derive_seed(
        derive_seed(master, TRIAL_STREAM, instance_index as u64),
        TRIAL_STREAM,
        trial as u64,
    )
}

fn run_instance(
    cfg: &ExperimentConfig,
    index: usize,
    labeled: LabeledInstance,
) -> Result<InstanceReport> {
    let inst = &labeled.instance;
    let n = inst.n();
    let pop_size = cfg.algorithm.pop_size.resolve(n);
    let budget = cfg.algorithm.budget.resolve(pop_size, n);
    let greedy = greedy_baseline(inst);

    let mut report = InstanceReport {
        label: labeled.label.clone(),
        n,
        pop_size,
        budget,
        status: InstanceStatus::Ok,
        opt_value: None,
        opt_method: None,
        greedy_value: greedy.value,
        records: Vec::new(),
        aggregates: Aggregates::default(),
        predicate_holds: None,
    };

    let opt = match exact_opt(inst) {
        Ok(opt) if opt.value.is_positive() => opt,
        Ok(_) => {
            report.status = InstanceStatus::Skipped {
                reason: "optimum is zero, ratios are undefined".into(),
            };
            report.predicate_holds = cfg.predicate.as_ref().map(|_| false);
            return Ok(report);
        }
        Err(e @ (Error::CapacityExceeded { .. } | Error::Overflow(_))) => {
            report.status = InstanceStatus::Skipped {
                reason: e.to_string(),
            };
            report.predicate_holds = cfg.predicate.as_ref().map(|_| false);
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.opt_value = Some(opt.value);
    report.opt_method = Some(opt.method);

    let init = match &cfg.algorithm.init {
        InitSpec::Random => InitMode::RandomFeasible,
        InitSpec::Zero => InitMode::AllZero,
        InitSpec::LocalOptimum => match &labeled.local_optimum {
            Some(local) => InitMode::Seeded(vec![local.clone()]),
            None => {
                return Err(Error::Config(format!(
                    "instance {} has no known local optimum to start from",
                    labeled.label
                )))
            }
        },
        InitSpec::File(path) => InitMode::Seeded(read_seed_file(path)?),
    };

    let half_opt = opt.value * Rational::new(1, 2);
    let stop = match &cfg.success {
        SuccessCriterion::ImprovesOnInit => StopRule::AboveInitial,
        SuccessCriterion::AtLeastGreedy => StopRule::AtLeast(greedy.value),
        SuccessCriterion::RatioAtLeast { ratio } => StopRule::AtLeast(*ratio * opt.value),
        SuccessCriterion::ReachesOptimum => StopRule::AtLeast(opt.value),
        SuccessCriterion::HitWithin { fraction, .. } => StopRule::AtLeast(*fraction * opt.value),
    };
    let mut thresholds = vec![half_opt, opt.value];
    if let SuccessCriterion::HitWithin { fraction, .. } = &cfg.success {
        thresholds.push(*fraction * opt.value);
    }

    let template = cfg
        .algorithm
        .algo
        .config(pop_size, 0, budget)
        .with_init(init)
        .with_thresholds(thresholds)
        .with_detail(TraceDetail::Improvements);
    template.validate(inst)?;

    let records = (0..cfg.trials)
        .into_par_iter()
        .map(|trial| {
            let seed = trial_seed(cfg.master_seed, index, trial);
            let mut run_cfg = template.clone();
            run_cfg.seed = seed;
            if cfg.stop_on_success {
                run_cfg.stop = Some(stop);
            }
            let trace = run(inst, &run_cfg)?;
            let final_f = trace.best_f();
            let success = match &cfg.success {
                SuccessCriterion::ImprovesOnInit => final_f > trace.initial_best,
                SuccessCriterion::AtLeastGreedy => final_f >= greedy.value,
                SuccessCriterion::RatioAtLeast { ratio } => final_f >= *ratio * opt.value,
                SuccessCriterion::ReachesOptimum => final_f == opt.value,
                SuccessCriterion::HitWithin {
                    fraction,
                    evaluations,
                } => trace.first_hits[&(*fraction * opt.value)].is_some_and(|e| e <= *evaluations),
            };
            Ok(TrialRecord {
                trial,
                seed,
                initial_f: trace.initial_best,
                final_f,
                final_ratio: final_f / opt.value,
                evaluations: trace.evaluations,
                first_hit_half_opt: trace.first_hits[&half_opt],
                first_hit_opt: trace.first_hits[&opt.value],
                success,
            })
        })
        .collect::<Result<Vec<_>>>()?;

    report.aggregates = Aggregates::from_records(&records);
    report.records = records;
    if let Some(pred) = &cfg.predicate {
        if pred.scope == PredicateScope::PerInstance {
            report.predicate_holds = Some(pred.holds(&report.aggregates));
        }
    }
    Ok(report)
}

/// Runs every trial on every instance. The report depends only on the
/// configuration: trial seeds are derived from the master seed, and records
/// are folded in instance and trial order.
pub fn run_experiment(cfg: &ExperimentConfig) -> Result<ExperimentReport> {
    let algorithm = cfg.algorithm.algo.to_string();
    let mut labeled = Vec::new();
    for source in &cfg.instances {
        labeled.extend(source.expand()?);
    }
    let instances = labeled
        .into_iter()
        .enumerate()
        .map(|(i, l)| run_instance(cfg, i, l))
        .collect::<Result<Vec<_>>>()?;

    let pooled = Aggregates::from_records(instances.iter().flat_map(|r| &r.records));
    let all_predicates_hold = match &cfg.predicate {
        None => true,
        Some(pred) => match pred.scope {
            PredicateScope::PerInstance => {
                instances.iter().all(|r| r.predicate_holds != Some(false))
            }
            PredicateScope::Pooled => {
                pred.holds(&pooled) && instances.iter().all(|r| r.status == InstanceStatus::Ok)
            }
        },
    };
    Ok(ExperimentReport {
        name: cfg.name.clone(),
        master_seed: cfg.master_seed,
        algorithm,
        trials_per_instance: cfg.trials,
        instances,
        pooled,
        predicate: cfg.predicate.clone(),
        all_predicates_hold,
    })
}

impl ExperimentReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable report");
        s.push('\n');
        s
    }

    /// Aligned plain-text summary, one row per instance.
    pub fn to_table(&self) -> String {
        let opt = |v: Option<Rational>| v.map_or("-".to_string(), |r| r.to_string());
        let header = [
            "instance",
            "n",
            "N",
            "budget",
            "status",
            "OPT",
            "greedy",
            "success",
            "freq",
            "min ratio",
            "max ratio",
            "median evals",
            "predicate",
        ];
        let mut rows: Vec<Vec<String>> = vec![header.iter().map(|h| h.to_string()).collect()];
        for r in &self.instances {
            let agg = &r.aggregates;
            rows.push(vec![
                r.label.clone(),
                r.n.to_string(),
                r.pop_size.to_string(),
                r.budget.to_string(),
                match &r.status {
                    InstanceStatus::Ok => "ok".into(),
                    InstanceStatus::Skipped { .. } => "skipped".into(),
                },
                opt(r.opt_value),
                r.greedy_value.to_string(),
                format!("{}/{}", agg.successes, agg.trials),
                agg.success_frequency
                    .map_or("-".into(), |f| format!("{:.3}", f.to_f64())),
                agg.min_ratio
                    .map_or("-".into(), |x| format!("{:.4}", x.to_f64())),
                agg.max_ratio
                    .map_or("-".into(), |x| format!("{:.4}", x.to_f64())),
                agg.median_evals_to_opt
                    .map_or("-".into(), |e| e.to_string()),
                match r.predicate_holds {
                    None => "-".into(),
                    Some(true) => "pass".into(),
                    Some(false) => "FAIL".into(),
                },
            ]);
        }
        let widths: Vec<usize> = (0..header.len())
            .map(|c| {
                rows.iter()
                    .map(|row| row[c].chars().count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let mut out = format!("# {} ({})\n", self.name, self.algorithm);
        for row in &rows {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .enumerate()
                .map(|(c, (cell, w))| {
                    if c == 0 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect();
            let _ = writeln!(out, "{}", line.join("  ").trim_end());
        }
        let _ = writeln!(
            out,
            "pooled: {}/{} successes; all predicates hold: {}",
            self.pooled.successes, self.pooled.trials, self.all_predicates_hold
        );
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const TRAP: &str = r#"
        name = "trap"
        master_seed = 3
        trials = 4
        stop_on_success = true

        [[instances]]
        source = "profit-trap"
        n = 21
        alpha = "1/2"

        [algorithm]
        algo = "pure-profit"
        pop_size = 2
        budget = 2000
        init = "local-optimum"

        [success]
        kind = "improves-on-init"

        [predicate]
        max_fraction = "1/100"
    "#;

    #[test]
    fn parses_and_runs_a_trap_config() {
        let cfg = ExperimentConfig::from_toml(TRAP).unwrap();
        assert_eq!(
            cfg.instances,
            vec![InstanceSource::ProfitTrap {
                n: 21,
                alpha: Rational::new(1, 2)
            }]
        );
        let report = run_experiment(&cfg).unwrap();
        assert_eq!(report.instances.len(), 1);
        let inst = &report.instances[0];
        assert_eq!(inst.records.len(), 4);
        assert!(inst.records.iter().all(|r| r.initial_f == 10.into()));
        assert_eq!(inst.opt_value, Some(20.into()));
        assert!(report.all_predicates_hold, "{}", report.to_table());
        assert_eq!(report, run_experiment(&cfg).unwrap());
    }

    #[test]
    fn zero_trials_give_an_empty_report() {
        let mut cfg = ExperimentConfig::from_toml(TRAP).unwrap();
        cfg.trials = 0;
        let report = run_experiment(&cfg).unwrap();
        assert!(report.instances[0].records.is_empty());
        assert_eq!(report.pooled.trials, 0);
        assert_eq!(report.pooled.success_frequency, None);
        assert!(report.all_predicates_hold);
        serde_json::from_str::<serde_json::Value>(&report.to_json()).unwrap();
    }

    #[test]
    fn oracle_limits_skip_the_instance() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("big.txt");
        // too many items for enumeration, too much scaled capacity for the table
        let mut text = String::from("31\n100000000\n");
        for _ in 0..31 {
            text.push_str("1 1/3\n");
        }
        std::fs::write(&path, text).unwrap();
        let cfg = ExperimentConfig {
            name: "big".into(),
            master_seed: 0,
            trials: 3,
            instances: vec![InstanceSource::File { path }],
            algorithm: AlgorithmSpec {
                algo: Preset::Moea,
                pop_size: PopSize::Fixed(3),
                budget: Budget::Fixed(10),
                init: InitSpec::Random,
            },
            success: SuccessCriterion::ReachesOptimum,
            predicate: Some(Predicate {
                min_fraction: Some(Rational::ONE),
                max_fraction: None,
                scope: PredicateScope::PerInstance,
            }),
            stop_on_success: false,
        };
        let report = run_experiment(&cfg).unwrap();
        assert!(matches!(
            report.instances[0].status,
            InstanceStatus::Skipped { .. }
        ));
        assert!(report.instances[0].records.is_empty());
        assert!(!report.all_predicates_hold);
    }

    #[test]
    fn resolves_scaled_sizes() {
        assert_eq!(PopSize::PerItem { per_item: 3 }.resolve(10), 30);
        assert_eq!(
            Budget::PopTimesCube { pop_n_cubed: 10 }.resolve(15, 5),
            18_750
        );
        let spec: AlgorithmSpec = toml::from_str(
            "algo = \"moea\"\npop_size = { per_item = 3 }\nbudget = { pop_n_cubed = 10 }\n",
        )
        .unwrap();
        assert_eq!(spec.init, InitSpec::Random);
        assert_eq!(spec.pop_size, PopSize::PerItem { per_item: 3 });
    }

    #[test]
    fn init_spec_parsing() {
        assert_eq!("zero".parse::<InitSpec>().unwrap(), InitSpec::Zero);
        assert_eq!(
            "file:a/b.txt".parse::<InitSpec>().unwrap(),
            InitSpec::File("a/b.txt".into())
        );
        assert!("file:".parse::<InitSpec>().is_err());
        assert!("best".parse::<InitSpec>().is_err());
    }

    #[test]
    fn aggregates_are_recomputable() {
        let rec = |success, hit: Option<u64>, ratio: Rational| TrialRecord {
            trial: 0,
            seed: 0,
            initial_f: Rational::ZERO,
            final_f: Rational::ZERO,
            final_ratio: ratio,
            evaluations: 0,
            first_hit_half_opt: None,
            first_hit_opt: hit,
            success,
        };
        let records = [
            rec(true, Some(40), Rational::ONE),
            rec(false, None, Rational::new(1, 2)),
            rec(true, Some(10), Rational::ONE),
            rec(true, Some(30), Rational::ONE),
        ];
        let agg = Aggregates::from_records(&records);
        assert_eq!(agg.successes, 3);
        assert_eq!(agg.success_frequency, Some(Rational::new(3, 4)));
        assert_eq!(agg.median_evals_to_opt, Some(30));
        assert_eq!(agg.min_ratio, Some(Rational::new(1, 2)));
    }
}
