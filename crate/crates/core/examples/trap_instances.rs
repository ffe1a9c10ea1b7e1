//! Pure-strategy EAs started at the local optimum of each trap instance,
//! next to the MOEA started from random solutions. Greedy repair stays stuck;
//! random repair on the ratio trap escapes at this size.

use knapsack_lab::harness::{AdversarialSpec, TrapFamily};
use knapsack_lab::{exact_opt, run, InitMode, Preset, Rational};

fn main() -> knapsack_lab::Result<()> {
    let half = Rational::new(1, 2);
    let cases = [
        (
            AdversarialSpec::new(TrapFamily::ProfitTrap, 21, half)?,
            Preset::PureProfit,
        ),
        (
            AdversarialSpec::new(TrapFamily::RatioTrap, 16, half)?,
            Preset::PureRatio,
        ),
        (
            AdversarialSpec::new(TrapFamily::RatioTrap, 16, half)?,
            Preset::PureRandom,
        ),
    ];
    for (spec, algo) in cases {
        let inst = spec.instance()?;
        let opt = exact_opt(&inst)?;
        let stuck = algo
            .config(1, 11, 200_000)
            .with_init(InitMode::Seeded(vec![spec.local_optimum()]));
        let trace = run(&inst, &stuck)?;
        let moea = run(&inst, &Preset::Moea.config(3 * inst.n(), 11, 200_000))?;
        println!(
            "{:?} n={} OPT={}: {algo} from the local optimum ends at {}, moea ends at {}",
            spec.family,
            spec.n,
            opt.value,
            trace.best_f(),
            moea.best_f()
        );
    }
    Ok(())
}
