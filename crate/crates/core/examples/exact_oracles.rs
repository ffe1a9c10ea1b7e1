//! Exact optimum by enumeration and by dynamic programming, next to the
//! greedy half-approximation, on the three showcase instances.

use knapsack_lab::harness::{showcase, Showcase};
use knapsack_lab::oracles::approximation_ratio;
use knapsack_lab::{brute_force_opt, dp_opt, greedy_baseline};

fn main() -> knapsack_lab::Result<()> {
    for which in [Showcase::A, Showcase::B, Showcase::C] {
        let inst = showcase(which);
        let brute = brute_force_opt(&inst)?;
        let dp = dp_opt(&inst)?;
        assert_eq!(brute.value, dp.value);
        let greedy = greedy_baseline(&inst);
        let best_greedy = if inst.fitness(&greedy.a_star)? >= inst.fitness(&greedy.b_star)? {
            &greedy.a_star
        } else {
            &greedy.b_star
        };
        println!(
            "{which}: OPT = {} at {} | a* = {} b* = {} greedy = {} (ratio {})",
            brute.value,
            brute.witness,
            greedy.a_star,
            greedy.b_star,
            greedy.value,
            approximation_ratio(&inst, best_greedy, &brute)?,
        );
    }
    Ok(())
}
