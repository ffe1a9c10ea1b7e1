mod common;

use common::{instance, instance_with_bits};
use knapsack_lab::operators::{helper_values, multi_criteria_select, repair, truncation_select};
use knapsack_lab::rng::rng_from_seed;
use knapsack_lab::{Bitstring, Individual, KnapsackInstance, Rational, RepairMethod};
use proptest::prelude::*;

fn method() -> impl Strategy<Value = RepairMethod> {
    prop_oneof![
        Just(RepairMethod::ProfitGreedy),
        Just(RepairMethod::RatioGreedy),
        Just(RepairMethod::Random)
    ]
}

/// A population of `n` feasible individuals plus a child, all produced by
/// repairing random bitstrings.
fn population(
    max_n: usize,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (KnapsackInstance, Vec<Individual>, Individual)> {
    (instance(max_n), sizes, any::<u64>()).prop_flat_map(|(inst, n, seed)| {
        let items = inst.n();
        (
            Just(inst),
            prop::collection::vec(prop::collection::vec(any::<bool>(), items), n + 1),
            Just(seed),
        )
            .prop_map(|(inst, genomes, seed)| {
                let mut rng = rng_from_seed(seed);
                let mut all: Vec<Individual> = genomes
                    .into_iter()
                    .map(|g| {
                        let x = repair(&inst, &Bitstring::from(g), RepairMethod::Random, &mut rng)
                            .unwrap();
                        Individual::evaluate(&inst, x).unwrap()
                    })
                    .collect();
                let child = all.pop().unwrap();
                (inst, all, child)
            })
    })
}

fn max_f(pop: &[Individual]) -> Rational {
    pop.iter().map(Individual::f).max().unwrap()
}

proptest! {
    #[test]
    fn repair_yields_a_feasible_subset((inst, x) in instance_with_bits(12), m in method(), seed in any::<u64>()) {
        let mut rng = rng_from_seed(seed);
        let y = repair(&inst, &x, m, &mut rng).unwrap();
        prop_assert!(inst.is_feasible(&y).unwrap());
        prop_assert!(y.is_subset_of(&x));
        if inst.is_feasible(&x).unwrap() {
            prop_assert_eq!(&y, &x);
        }
    }

    #[test]
    fn greedy_repair_is_idempotent((inst, x) in instance_with_bits(12), greedy in prop_oneof![Just(RepairMethod::ProfitGreedy), Just(RepairMethod::RatioGreedy)]) {
        let mut rng = rng_from_seed(0);
        let once = repair(&inst, &x, greedy, &mut rng).unwrap();
        let twice = repair(&inst, &once, greedy, &mut rng).unwrap();
        prop_assert_eq!(once, twice);
    }

    #[test]
    fn greedy_repair_evicts_the_smallest_keys_first((inst, x) in instance_with_bits(12)) {
        let mut rng = rng_from_seed(0);
        for (m, key) in [
            (RepairMethod::ProfitGreedy, inst.profits().to_vec()),
            (RepairMethod::RatioGreedy, inst.ratios().to_vec()),
        ] {
            let y = repair(&inst, &x, m, &mut rng).unwrap();
            let evicted: Vec<usize> = x.ones_indices().filter(|&i| !y.get(i)).collect();
            for &e in &evicted {
                for s in y.ones_indices() {
                    prop_assert!(key[e] <= key[s], "{} evicted {} before {}", m, e, s);
                }
            }
            // the eviction sequence stops as soon as the knapsack fits
            if let Some(&last) = evicted.iter().max_by(|&&a, &&b| key[a].cmp(&key[b]).then(b.cmp(&a))) {
                let mut back = y.clone();
                back.set(last, true);
                prop_assert!(!inst.is_feasible(&back).unwrap());
            }
        }
    }

    #[test]
    fn individuals_cache_consistent_values((inst, x) in instance_with_bits(12), seed in any::<u64>()) {
        let y = repair(&inst, &x, RepairMethod::Random, &mut rng_from_seed(seed)).unwrap();
        let ind = Individual::evaluate(&inst, y.clone()).unwrap();
        let (h1, h2, h3) = helper_values(&inst, &y).unwrap();
        prop_assert_eq!(ind.f(), inst.fitness(&y).unwrap());
        prop_assert_eq!((ind.h1(), ind.h2(), ind.h3()), (h1, h2, h3));
        prop_assert_eq!(h3 as usize, y.count_ones());
        if h3 > 0 {
            let p: u32 = y.ones_indices().map(|i| inst.profit_ranks()[i]).sum();
            let r: u32 = y.ones_indices().map(|i| inst.ratio_ranks()[i]).sum();
            prop_assert_eq!(h1, Rational::new(p as i128, h3 as i128));
            prop_assert_eq!(h2, Rational::new(r as i128, h3 as i128));
        } else {
            prop_assert_eq!((h1, h2), (Rational::ZERO, Rational::ZERO));
        }
    }

    #[test]
    fn profit_ranks_ignore_common_scaling((inst, x) in instance_with_bits(10), k in 1i128..=7, d in 1i128..=5) {
        let factor = Rational::new(k, d);
        let scaled = KnapsackInstance::new(
            inst.profits().iter().map(|&p| p * factor).collect(),
            inst.weights().to_vec(),
            inst.capacity(),
        ).unwrap();
        prop_assert_eq!(inst.profit_ranks(), scaled.profit_ranks());
        prop_assert_eq!(inst.ratio_ranks(), scaled.ratio_ranks());
        let y = repair(&inst, &x, RepairMethod::RatioGreedy, &mut rng_from_seed(0)).unwrap();
        prop_assert_eq!(helper_values(&inst, &y).unwrap().0, helper_values(&scaled, &y).unwrap().0);
    }

    #[test]
    fn truncation_keeps_size_and_the_best((_inst, parents, child) in population(8, 1..=8), seed in any::<u64>()) {
        let n = parents.len();
        let out = truncation_select(&parents, child.clone(), n, &mut rng_from_seed(seed)).unwrap();
        prop_assert_eq!(out.len(), n);
        let mut all = parents.clone();
        all.push(child);
        prop_assert_eq!(max_f(&out), max_f(&all));
        // survivors are the n best of the n + 1
        let dropped_f = all.iter().map(Individual::f).sum::<Rational>() - out.iter().map(Individual::f).sum::<Rational>();
        prop_assert_eq!(dropped_f, all.iter().map(Individual::f).min().unwrap());
    }

    #[test]
    fn multi_criteria_keeps_size_and_the_best((_inst, parents, child) in population(6, 3..=9), seed in any::<u64>()) {
        let n = parents.len();
        let out = multi_criteria_select(&parents, child.clone(), n, &mut rng_from_seed(seed)).unwrap();
        prop_assert_eq!(out.len(), n);
        let mut all = parents.clone();
        all.push(child);
        prop_assert_eq!(max_f(&out), max_f(&all));
        for x in &out {
            prop_assert!(all.contains(x));
        }
    }

    #[test]
    fn stage_a_chain_trades_fitness_for_helpers((_inst, parents, child) in population(6, 3..=9), seed in any::<u64>()) {
        let n = parents.len();
        let out = multi_criteria_select(&parents, child, n, &mut rng_from_seed(seed)).unwrap();
        // the first members form the Stage A chain; it is non-empty and at most n/3 long
        let mut chain = vec![&out[0]];
        for x in &out[1..n / 3] {
            let last = chain[chain.len() - 1];
            if x.f() <= last.f() && (x.h1() > last.h1() || x.h2() > last.h2()) {
                chain.push(x);
            } else {
                break;
            }
        }
        for pair in chain.windows(2) {
            prop_assert!(pair[1].f() <= pair[0].f());
            prop_assert!(pair[1].h1() > pair[0].h1() || pair[1].h2() > pair[0].h2());
        }
    }
}

#[test]
fn mutation_flips_each_bit_at_rate_one_over_n() {
    let n = 10;
    let trials = 20_000;
    let x = Bitstring::zeros(n);
    let mut rng = rng_from_seed(3);
    let mut flips = vec![0usize; n];
    for _ in 0..trials {
        let y = knapsack_lab::operators::bitwise_mutation(&x, &mut rng);
        for i in y.ones_indices() {
            flips[i] += 1;
        }
    }
    let p = 1.0 / n as f64;
    let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
    for (i, f) in flips.iter().enumerate() {
        assert!(
            (*f as f64 - trials as f64 * p).abs() < 4.0 * sigma,
            "bit {i}: {f}"
        );
    }
}
