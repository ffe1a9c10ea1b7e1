use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use knapsack_lab::harness::{
    random_instance, read_seed_file, run_experiment, AdversarialSpec, ExperimentConfig, InitSpec,
    Showcase, TrapFamily,
};
use knapsack_lab::{exact_opt, greedy_baseline, run, InitMode, KnapsackInstance, Preset, Rational};

#[derive(Parser)]
#[command(
    name = "knapsack-lab",
    version,
    about = "Evolutionary algorithms and exact oracles for 0-1 knapsack"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum GenFamily {
    #[value(alias = "ratio-trap")]
    Prop1,
    #[value(alias = "profit-trap")]
    Prop3,
    #[value(alias = "showcase")]
    Section5,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Write an instance file.
    Gen {
        #[arg(long, value_enum)]
        family: GenFamily,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        alpha: Option<Rational>,
        /// A, B or C (showcase family only).
        #[arg(long)]
        which: Option<Showcase>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        profit_max: u32,
        #[arg(long, default_value_t = 100)]
        weight_max: u32,
        #[arg(long, default_value = "1/2")]
        cap_fraction: Rational,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the exact optimum and the greedy baseline as JSON.
    Solve {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Run one algorithm once and emit its per-generation trace as JSON lines.
    Run {
        #[arg(long)]
        algo: Preset,
        #[arg(long)]
        pop_size: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        budget: u64,
        /// random, zero or file:PATH (one bitstring per line).
        #[arg(long, default_value = "random")]
        init: InitSpec,
        #[arg(long)]
        instance: PathBuf,
        /// Write the trace here and print a JSON summary to standard output.
        #[arg(long)]
        trace: Option<PathBuf>,
    },
    /// Run a batch experiment; exits non-zero unless every predicate holds.
    Experiment {
        #[arg(long)]
        config: PathBuf,
        #[arg(long)]
        report: Option<PathBuf>,
    },
}

fn read_instance(path: &Path) -> anyhow::Result<KnapsackInstance> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    KnapsackInstance::parse(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_or_print(out: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match dispatch(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn dispatch(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Gen {
            family,
            n,
            alpha,
            which,
            seed,
            profit_max,
            weight_max,
            cap_fraction,
            out,
        } => {
            let inst = match family {
                GenFamily::Prop1 | GenFamily::Prop3 => {
                    let trap = if matches!(family, GenFamily::Prop1) {
                        TrapFamily::RatioTrap
                    } else {
                        TrapFamily::ProfitTrap
                    };
                    let n = n.context("--n is required")?;
                    let alpha = alpha.context("--alpha is required")?;
                    AdversarialSpec::new(trap, n, alpha)?.instance()?
                }
                GenFamily::Section5 => {
                    knapsack_lab::harness::showcase(which.context("--which is required")?)
                }
                GenFamily::Random => random_instance(
                    n.context("--n is required")?,
                    profit_max,
                    weight_max,
                    cap_fraction,
                    seed,
                )?,
            };
            write_or_print(out.as_deref(), &inst.to_text())?;
        }
        Command::Solve { instance } => {
            let inst = read_instance(&instance)?;
            let opt = exact_opt(&inst)?;
            let greedy = greedy_baseline(&inst);
            let report = json!({
                "opt_value": opt.value,
                "witness": opt.witness,
                "greedy_value": greedy.value,
                "a_star": greedy.a_star,
                "b_star": greedy.b_star,
            });
            println!("{report}");
        }
        Command::Run {
            algo,
            pop_size,
            seed,
            budget,
            init,
            instance,
            trace,
        } => {
            let inst = read_instance(&instance)?;
            let init = match init {
                InitSpec::Random => InitMode::RandomFeasible,
                InitSpec::Zero => InitMode::AllZero,
                InitSpec::File(path) => InitMode::Seeded(read_seed_file(&path)?),
                InitSpec::LocalOptimum => {
                    bail!("local-optimum init is only available in experiments")
                }
            };
            let cfg = algo.config(pop_size, seed, budget).with_init(init);
            let result = run(&inst, &cfg)?;
            write_or_print(trace.as_deref(), &result.to_json_lines())?;
            if trace.is_some() {
                let summary = json!({
                    "algo": algo.to_string(),
                    "seed": seed,
                    "evaluations": result.evaluations,
                    "initial_best": result.initial_best,
                    "final_best": result.best_f(),
                    "final_genome": result.final_best.genome(),
                });
                println!("{summary}");
            }
        }
        Command::Experiment { config, report } => {
            let text = fs::read_to_string(&config)
                .with_context(|| format!("reading {}", config.display()))?;
            let cfg = ExperimentConfig::from_toml(&text)?;
            let result = run_experiment(&cfg)?;
            if let Some(path) = &report {
                fs::write(path, result.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            print!("{}", result.to_table());
            if !result.all_predicates_hold {
                return Ok(ExitCode::FAILURE);
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
