//! Mixed-strategy EAs with custom repair distributions on the profit trap.

use knapsack_lab::harness::{AdversarialSpec, TrapFamily};
use knapsack_lab::{run, AlgorithmConfig, InitMode, Rational, RepairMethod, RepairMixture};

fn main() -> knapsack_lab::Result<()> {
    let spec = AdversarialSpec::new(TrapFamily::ProfitTrap, 21, Rational::new(1, 2))?;
    let inst = spec.instance()?;
    let mixtures = [
        RepairMixture::uniform(&[RepairMethod::RatioGreedy, RepairMethod::ProfitGreedy])?,
        RepairMixture::uniform(&[
            RepairMethod::RatioGreedy,
            RepairMethod::ProfitGreedy,
            RepairMethod::Random,
        ])?,
        RepairMixture::new(vec![
            (RepairMethod::ProfitGreedy, Rational::new(9, 10)),
            (RepairMethod::Random, Rational::new(1, 10)),
        ])?,
    ];
    for mixture in mixtures {
        let names: Vec<String> = mixture
            .entries()
            .iter()
            .map(|(m, p)| format!("{m}:{p}"))
            .collect();
        let cfg = AlgorithmConfig::mixed(mixture, 4, 3, 300_000)
            .with_init(InitMode::Seeded(vec![spec.local_optimum()]));
        let trace = run(&inst, &cfg)?;
        println!(
            "[{}] start {} -> best {}",
            names.join(", "),
            trace.initial_best,
            trace.best_f()
        );
    }
    Ok(())
}
