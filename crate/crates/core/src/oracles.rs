//! Exact optima and the greedy 1/2-approximation baseline.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::rational::Rational;

/// Largest item count accepted by [`brute_force_opt`].
pub const BRUTE_FORCE_MAX_ITEMS: usize = 30;

/// Largest scaled capacity accepted by [`dp_opt`].
pub const DP_MAX_SCALED_CAPACITY: i128 = 10_000_000;

// n * (C + 1) keep-bits for witness reconstruction
const DP_MAX_TABLE_BITS: u128 = 1 << 32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SolveMethod {
    BruteForce,
    DynamicProgram,
}

/// An optimal value together with a feasible solution attaining it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OptimumCertificate {
    pub value: Rational,
    pub witness: Bitstring,
    pub method: SolveMethod,
}

/// The two greedy candidates `a*` (best single item) and `b*` (ratio-greedy
/// fill). The better of the two is at least half the optimum.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GreedyBaseline {
    pub a_star: Bitstring,
    pub b_star: Bitstring,
    pub value: Rational,
}

/// Exhaustive search over all `2^n` bitstrings.
///
/// Among optimal solutions the lexicographically smallest bitstring (reading
/// `x_1` first) is returned. Subsets are visited in Gray-code order so each
/// step updates the running sums by one item.
pub fn brute_force_opt(inst: &KnapsackInstance) -> Result<OptimumCertificate> {
    let n = inst.n();
    if n > BRUTE_FORCE_MAX_ITEMS {
        return Err(Error::CapacityExceeded {
            what: "item count",
            value: n.to_string(),
            limit: BRUTE_FORCE_MAX_ITEMS.to_string(),
            hint: "use the dynamic program instead",
        });
    }
    let weights = inst.scaled_weights();
    let profits = inst.scaled_profits();
    let capacity = inst.scaled_capacity();

    // mask bit (n - 1 - i) holds x_i, so numeric order is lexicographic order
    let item_of_bit = |bit: u32| n - 1 - bit as usize;

    let (mut weight, mut profit) = (0i128, 0i128);
    let (mut best_profit, mut best_mask) = (0i128, 0u64);
    let mut gray = 0u64;
    for k in 1..(1u64 << n) {
        let bit = k.trailing_zeros();
        let item = item_of_bit(bit);
        gray ^= 1 << bit;
        if gray & (1 << bit) != 0 {
            weight += weights[item];
            profit += profits[item];
        } else {
            weight -= weights[item];
            profit -= profits[item];
        }
        if weight <= capacity
            && (profit > best_profit || (profit == best_profit && gray < best_mask))
        {
            best_profit = profit;
            best_mask = gray;
        }
    }

    let witness = Bitstring::from_indices(
        n,
        (0..n as u32)
            .filter(|&b| best_mask & (1 << b) != 0)
            .map(item_of_bit),
    );
    Ok(OptimumCertificate {
        value: inst.profit_of_scaled(best_profit),
        witness,
        method: SolveMethod::BruteForce,
    })
}

/// Weight-indexed dynamic program over the integer-scaled weights.
pub fn dp_opt(inst: &KnapsackInstance) -> Result<OptimumCertificate> {
    let n = inst.n();
    let capacity = inst.scaled_capacity();
    if capacity > DP_MAX_SCALED_CAPACITY {
        return Err(Error::CapacityExceeded {
            what: "scaled capacity",
            value: capacity.to_string(),
            limit: DP_MAX_SCALED_CAPACITY.to_string(),
            hint: "use brute force for small item counts",
        });
    }
    let cap = capacity as usize;
    let table_bits = n as u128 * (cap as u128 + 1);
    if table_bits > DP_MAX_TABLE_BITS {
        return Err(Error::CapacityExceeded {
            what: "dynamic program table size (bits)",
            value: table_bits.to_string(),
            limit: DP_MAX_TABLE_BITS.to_string(),
            hint: "use brute force for small item counts",
        });
    }
    let profits: Vec<i64> = inst
        .scaled_profits()
        .iter()
        .map(|&p| i64::try_from(p))
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Overflow("scaled profits exceed the dynamic program's range"))?;
    profits
        .iter()
        .try_fold(0i64, |acc, &p| acc.checked_add(p))
        .ok_or(Error::Overflow(
            "scaled profit total exceeds the dynamic program's range",
        ))?;

    let words = cap / 64 + 1;
    let mut keep = vec![0u64; n * words];
    let mut best = vec![0i64; cap + 1];
    for (i, (&w, &p)) in inst.scaled_weights().iter().zip(&profits).enumerate() {
        if w > capacity {
            continue;
        }
        let w = w as usize;
        let row = &mut keep[i * words..(i + 1) * words];
        for c in (w..=cap).rev() {
            let with = best[c - w] + p;
            if with > best[c] {
                best[c] = with;
                row[c / 64] |= 1 << (c % 64);
            }
        }
    }

    let mut witness = Bitstring::zeros(n);
    let mut c = cap;
    for i in (0..n).rev() {
        if keep[i * words + c / 64] & (1 << (c % 64)) != 0 {
            witness.set(i, true);
            c -= inst.scaled_weights()[i] as usize;
        }
    }
    Ok(OptimumCertificate {
        value: inst.profit_of_scaled(best[cap] as i128),
        witness,
        method: SolveMethod::DynamicProgram,
    })
}

/// Dynamic program when the scaled capacity allows it, brute force otherwise.
pub fn exact_opt(inst: &KnapsackInstance) -> Result<OptimumCertificate> {
    match dp_opt(inst) {
        Ok(cert) => Ok(cert),
        Err(Error::CapacityExceeded { .. }) if inst.n() <= BRUTE_FORCE_MAX_ITEMS => {
            brute_force_opt(inst)
        }
        Err(e) => Err(e),
    }
}

/// `a*` and `b*`. `a*` packs only the most profitable item that fits on its
/// own (lowest index on ties); `b*` scans items by decreasing ratio (lower
/// index first on ties) and packs each one that still fits.
pub fn greedy_baseline(inst: &KnapsackInstance) -> GreedyBaseline {
    let n = inst.n();
    let capacity = inst.scaled_capacity();
    let weights = inst.scaled_weights();

    let mut a_star = Bitstring::zeros(n);
    let best_single = (0..n)
        .filter(|&i| weights[i] <= capacity)
        .fold(None::<usize>, |best, i| match best {
            Some(b) if inst.profits()[b] >= inst.profits()[i] => Some(b),
            _ => Some(i),
        });
    if let Some(i) = best_single {
        a_star.set(i, true);
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inst.ratio(b).cmp(&inst.ratio(a)).then(a.cmp(&b)));
    let mut b_star = Bitstring::zeros(n);
    let mut load = 0i128;
    for i in order {
        if load + weights[i] <= capacity {
            load += weights[i];
            b_star.set(i, true);
        }
    }

    let fa = inst.profit_of_scaled(inst.scaled_profit(&a_star));
    let fb = inst.profit_of_scaled(inst.scaled_profit(&b_star));
    GreedyBaseline {
        a_star,
        b_star,
        value: fa.max(fb),
    }
}

/// `f(x) / OPT`.
pub fn approximation_ratio(
    inst: &KnapsackInstance,
    x: &Bitstring,
    opt: &OptimumCertificate,
) -> Result<Rational> {
    let f = inst.fitness(x)?;
    if !opt.value.is_positive() {
        return Err(Error::ZeroOptimum);
    }
    Ok(f / opt.value)
}
