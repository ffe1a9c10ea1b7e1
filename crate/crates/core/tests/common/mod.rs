#![allow(dead_code)]

use knapsack_lab::{Bitstring, KnapsackInstance, Rational};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (1i128..=60, 1i128..=6).prop_map(|(n, d)| Rational::new(n, d))
}

/// Instances with 1..=max_n items of small rational data and a capacity
/// somewhere between a tenth of and the full total weight.
pub fn instance(max_n: usize) -> impl Strategy<Value = KnapsackInstance> {
    (1..=max_n)
        .prop_flat_map(|n| {
            (
                prop::collection::vec(small_rational(), n),
                prop::collection::vec(small_rational(), n),
                1i128..=10,
            )
        })
        .prop_map(|(profits, weights, tenth)| {
            let total: Rational = weights.iter().sum();
            let capacity = total * Rational::new(tenth, 10);
            KnapsackInstance::new(profits, weights, capacity).unwrap()
        })
}

pub fn instance_with_bits(max_n: usize) -> impl Strategy<Value = (KnapsackInstance, Bitstring)> {
    instance(max_n).prop_flat_map(|inst| {
        let n = inst.n();
        (
            Just(inst),
            prop::collection::vec(any::<bool>(), n).prop_map(Bitstring::from),
        )
    })
}

/// Integer-data instances, the shape the dynamic program is meant for.
pub fn integer_instance(max_n: usize, max_value: i64) -> impl Strategy<Value = KnapsackInstance> {
    (1..=max_n)
        .prop_flat_map(move |n| {
            (
                prop::collection::vec(1..=max_value, n),
                prop::collection::vec(1..=max_value, n),
                1..=max_value * n as i64,
            )
        })
        .prop_map(|(p, w, c)| KnapsackInstance::from_integers(&p, &w, c).unwrap())
}

pub fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(r.numer()), BigInt::from(r.denom()))
}

pub fn big_sum(values: &[Rational], x: &Bitstring) -> BigRational {
    values
        .iter()
        .zip(x.bits())
        .filter(|(_, &b)| b)
        .fold(BigRational::from_integer(BigInt::from(0)), |acc, (v, _)| {
            acc + big(*v)
        })
}

/// Plain 2^n enumeration, independent of the library's Gray-code search.
pub fn enumerate_opt(inst: &KnapsackInstance) -> BigRational {
    let n = inst.n();
    let cap = big(inst.capacity());
    let mut best = BigRational::from_integer(BigInt::from(0));
    for mask in 0u64..(1 << n) {
        let x = Bitstring::from((0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>());
        if big_sum(inst.weights(), &x) <= cap {
            let p = big_sum(inst.profits(), &x);
            if p > best {
                best = p;
            }
        }
    }
    best
}
