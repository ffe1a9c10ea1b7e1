//! The three repair methods applied to the same overfull knapsack.

use knapsack_lab::harness::{profit_trap, random_instance};
use knapsack_lab::operators::repair;
use knapsack_lab::rng::rng_from_seed;
use knapsack_lab::{Bitstring, Rational, RepairMethod};

fn main() -> knapsack_lab::Result<()> {
    let inst = profit_trap(11, Rational::new(1, 2))?;
    let full = Bitstring::ones(inst.n());
    let mut rng = rng_from_seed(5);
    println!(
        "profit trap n=11, all items packed (weight {})",
        inst.total_weight(&full)?
    );
    for method in [
        RepairMethod::ProfitGreedy,
        RepairMethod::RatioGreedy,
        RepairMethod::Random,
    ] {
        let fixed = repair(&inst, &full, method, &mut rng)?;
        println!("  {method:>13}: {fixed}  f = {}", inst.fitness(&fixed)?);
    }

    let inst = random_instance(12, 50, 50, Rational::new(1, 3), 9)?;
    let full = Bitstring::ones(inst.n());
    println!("random n=12, capacity {}", inst.capacity());
    for method in [
        RepairMethod::ProfitGreedy,
        RepairMethod::RatioGreedy,
        RepairMethod::Random,
    ] {
        let fixed = repair(&inst, &full, method, &mut rng)?;
        println!("  {method:>13}: {fixed}  f = {}", inst.fitness(&fixed)?);
    }
    Ok(())
}
