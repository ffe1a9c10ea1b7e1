mod common;

use common::{big, enumerate_opt, instance, integer_instance};
use knapsack_lab::oracles::{approximation_ratio, BRUTE_FORCE_MAX_ITEMS};
use knapsack_lab::{
    brute_force_opt, dp_opt, exact_opt, greedy_baseline, Bitstring, Error, KnapsackInstance,
    Rational,
};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn dp_agrees_with_brute_force(inst in integer_instance(15, 100)) {
        let dp = dp_opt(&inst).unwrap();
        let bf = brute_force_opt(&inst).unwrap();
        prop_assert_eq!(dp.value, bf.value);
        prop_assert_eq!(inst.fitness(&dp.witness).unwrap(), dp.value);
    }

    #[test]
    fn brute_force_matches_plain_enumeration(inst in instance(10)) {
        let bf = brute_force_opt(&inst).unwrap();
        prop_assert_eq!(big(bf.value), enumerate_opt(&inst));
        prop_assert_eq!(inst.fitness(&bf.witness).unwrap(), bf.value);
    }

    #[test]
    fn exact_opt_certificate_is_sound(inst in instance(10)) {
        let opt = exact_opt(&inst).unwrap();
        prop_assert!(inst.is_feasible(&opt.witness).unwrap());
        prop_assert_eq!(big(opt.value), enumerate_opt(&inst));
    }

    #[test]
    fn greedy_is_at_least_half_the_optimum(inst in instance(12)) {
        let opt = exact_opt(&inst).unwrap();
        let g = greedy_baseline(&inst);
        prop_assert!(inst.is_feasible(&g.a_star).unwrap());
        prop_assert!(inst.is_feasible(&g.b_star).unwrap());
        let fa = inst.fitness(&g.a_star).unwrap();
        let fb = inst.fitness(&g.b_star).unwrap();
        prop_assert_eq!(g.value, fa.max(fb));
        prop_assert!(g.value * Rational::from(2) >= opt.value);
        prop_assert!(g.a_star.count_ones() <= 1);
    }

    #[test]
    fn b_star_replays_as_a_ratio_scan(inst in instance(12)) {
        let g = greedy_baseline(&inst);
        let mut order: Vec<usize> = (0..inst.n()).collect();
        order.sort_by(|&a, &b| inst.ratio(b).cmp(&inst.ratio(a)).then(a.cmp(&b)));
        let mut load = Rational::ZERO;
        for i in order {
            let fits = load + inst.weights()[i] <= inst.capacity();
            prop_assert_eq!(g.b_star.get(i), fits, "item {}", i);
            if fits {
                load += inst.weights()[i];
            }
        }
    }

    #[test]
    fn ratios_lie_in_the_unit_interval((inst, mask) in instance(10).prop_flat_map(|i| { let n = i.n(); (Just(i), prop::collection::vec(any::<bool>(), n)) })) {
        let opt = exact_opt(&inst).unwrap();
        prop_assume!(opt.value.is_positive());
        let x = Bitstring::from(mask);
        if inst.is_feasible(&x).unwrap() {
            let r = approximation_ratio(&inst, &x, &opt).unwrap();
            prop_assert!(r >= Rational::ZERO && r <= Rational::ONE);
        }
        prop_assert_eq!(approximation_ratio(&inst, &opt.witness, &opt).unwrap(), Rational::ONE);
    }
}

#[test]
fn fractional_capacity_beyond_the_table_falls_back_to_enumeration() {
    // coprime denominators push the common scale far past the table limit
    let primes = [1009, 1013, 1019, 1021, 1031, 1033];
    let weights: Vec<Rational> = primes.iter().map(|&p| Rational::new(1, p)).collect();
    let profits: Vec<Rational> = (1..=6).map(Rational::from).collect();
    let capacity = Rational::new(1, 250);
    let inst = KnapsackInstance::new(profits, weights, capacity).unwrap();
    assert!(matches!(dp_opt(&inst), Err(Error::CapacityExceeded { .. })));
    let opt = exact_opt(&inst).unwrap();
    assert_eq!(opt.value, brute_force_opt(&inst).unwrap().value);
    assert!(inst.n() <= BRUTE_FORCE_MAX_ITEMS);
}
