//! Runs a batch experiment described in TOML and prints the summary table.
//! Pass a path to run one of the files under `experiments/` instead.

use knapsack_lab::harness::{run_experiment, ExperimentConfig};

const DEFAULT: &str = r#"
name = "moea-on-random"
master_seed = 9
trials = 20

[[instances]]
source = "random"
n = 8
profit_max = 50
weight_max = 50
cap_fraction = "1/2"
seed = 1
count = 4

[algorithm]
algo = "moea"
pop_size = { per_item = 3 }
budget = { pop_n_cubed = 2 }

[success]
kind = "reaches-optimum"

[predicate]
min_fraction = "1/2"
"#;

fn main() -> anyhow::Result<()> {
    let text = match std::env::args().nth(1) {
        Some(path) => std::fs::read_to_string(path)?,
        None => DEFAULT.to_string(),
    };
    let report = run_experiment(&ExperimentConfig::from_toml(&text)?)?;
    print!("{}", report.to_table());
    Ok(())
}
