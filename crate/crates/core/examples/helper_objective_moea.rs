//! Helper objectives of a few solutions, one multi-criteria selection step,
//! and a full MOEA run with its fitness trace.

use knapsack_lab::harness::{random_instance, showcase, Showcase};
use knapsack_lab::operators::{helper_values, multi_criteria_select};
use knapsack_lab::rng::rng_from_seed;
use knapsack_lab::{greedy_baseline, run, Bitstring, Individual, Preset, Rational};

fn main() -> knapsack_lab::Result<()> {
    let inst = showcase(Showcase::C);
    println!(
        "instance C: profit ranks {:?}, ratio ranks {:?}",
        inst.profit_ranks(),
        inst.ratio_ranks()
    );
    for s in ["11110", "00001", "10001"] {
        let x: Bitstring = s.parse()?;
        if inst.is_feasible(&x)? {
            let (h1, h2, h3) = helper_values(&inst, &x)?;
            println!(
                "  {s}: f = {}  h1 = {h1}  h2 = {h2}  h3 = {h3}",
                inst.fitness(&x)?
            );
        }
    }

    let parents: Vec<Individual> = ["00001", "10000", "11000", "00000", "01000", "00100"]
        .iter()
        .map(|s| Individual::evaluate(&inst, s.parse().unwrap()))
        .collect::<Result<_, _>>()?;
    let child = Individual::evaluate(&inst, "11100".parse()?)?;
    let mut rng = rng_from_seed(1);
    let survivors = multi_criteria_select(&parents, child, 6, &mut rng)?;
    let genomes: Vec<String> = survivors.iter().map(|i| i.genome().to_string()).collect();
    println!("survivors: {}", genomes.join(" "));

    let inst = random_instance(15, 100, 100, Rational::new(1, 2), 42)?;
    let cfg = Preset::Moea
        .config(45, 42, 100_000)
        .with_thresholds(vec![greedy_baseline(&inst).value]);
    let trace = run(&inst, &cfg)?;
    let mut last = None;
    for record in &trace.generations {
        if last != Some(record.best_f) {
            println!(
                "  eval {:>6}: best f = {}",
                record.eval_count, record.best_f
            );
            last = Some(record.best_f);
        }
    }
    println!(
        "greedy level first reached at {:?}",
        trace.first_hits.values().next().unwrap()
    );
    Ok(())
}
