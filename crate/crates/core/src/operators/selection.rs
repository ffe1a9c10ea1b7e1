use std::cmp::Ordering;

use rand::Rng;

use super::{check_population, Individual};
use crate::error::{Error, Result};

/// Keeps the `n` fittest of the `n` parents plus the child.
///
/// Exactly one of the `n + 1` individuals is dropped: the one with the lowest
/// `f`, or a uniformly random one among those tied for lowest (one
/// `gen_range` draw, only when there is a tie). Survivors keep their order,
/// with the child appended last.
pub fn truncation_select<R: Rng + ?Sized>(
    parents: &[Individual],
    child: Individual,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    check_population(parents, n)?;
    if n == 0 {
        return Err(Error::Config("population size must be at least 1".into()));
    }
    let mut pop = parents.to_vec();
    truncate_in_place(&mut pop, child, rng);
    Ok(pop)
}

pub(crate) fn truncate_in_place<R: Rng + ?Sized>(
    pop: &mut Vec<Individual>,
    child: Individual,
    rng: &mut R,
) {
    let worst_parent = pop.iter().map(|i| i.f).min().expect("non-empty population");
    match child.f.cmp(&worst_parent) {
        Ordering::Less => {}
        Ordering::Greater => {
            let ties: Vec<usize> = (0..pop.len())
                .filter(|&i| pop[i].f == worst_parent)
                .collect();
            let drop = if ties.len() == 1 {
                ties[0]
            } else {
                ties[rng.gen_range(0..ties.len())]
            };
            pop.remove(drop);
            pop.push(child);
        }
        Ordering::Equal => {
            let ties: Vec<usize> = (0..pop.len())
                .filter(|&i| pop[i].f == worst_parent)
                .collect();
            // index ties.len() stands for the child
            let k = rng.gen_range(0..ties.len() + 1);
            if k < ties.len() {
                pop.remove(ties[k]);
                pop.push(child);
            }
        }
    }
}

/// Multi-criteria truncation selection over the merged population
/// `T = parents ++ [child]`.
///
/// * Stage A: sort `T` by `f` descending (stable), keep the first individual
///   and every later one whose `h1` or `h2` strictly exceeds that of the last
///   kept individual; cut the chain at `⌊n/3⌋`.
/// * Stage B: resort `T` by `h1` descending and keep a chain of strictly
///   increasing `h3`; cut at `⌊n/3⌋`.
/// * Stage C: the same as B with `h2` as the sort key.
/// * Fill: while fewer than `n` are selected, add a uniformly random member
///   of `T` (with replacement, one `gen_range(0..n+1)` per pick).
///
/// The result is a multiset: the stages may select the same individual.
pub fn multi_criteria_select<R: Rng + ?Sized>(
    parents: &[Individual],
    child: Individual,
    n: usize,
    rng: &mut R,
) -> Result<Vec<Individual>> {
    if n < 3 {
        return Err(Error::Config(format!(
            "multi-criteria selection needs a population of at least 3, got {n}"
        )));
    }
    check_population(parents, n)?;
    let mut merged = Vec::with_capacity(n + 1);
    merged.extend_from_slice(parents);
    merged.push(child);
    let picks = multi_criteria_indices(&merged, n, rng);
    Ok(picks.into_iter().map(|i| merged[i].clone()).collect())
}

/// Indices into `merged` (length `n + 1`) of the selected multiset.
pub(crate) fn multi_criteria_indices<R: Rng + ?Sized>(
    merged: &[Individual],
    n: usize,
    rng: &mut R,
) -> Vec<usize> {
    let cap = n / 3;
    let mut out = Vec::with_capacity(n);

    let by_f = sorted_desc(merged, |x| x.f);
    out.extend(chain(&by_f, cap, |last, next| {
        merged[next].h1 > merged[last].h1 || merged[next].h2 > merged[last].h2
    }));

    let more_items = |last: usize, next: usize| merged[next].h3 > merged[last].h3;
    out.extend(chain(&sorted_desc(merged, |x| x.h1), cap, more_items));
    out.extend(chain(&sorted_desc(merged, |x| x.h2), cap, more_items));

    while out.len() < n {
        out.push(rng.gen_range(0..merged.len()));
    }
    out
}

fn sorted_desc<K: Ord>(merged: &[Individual], key: impl Fn(&Individual) -> K) -> Vec<usize> {
    let mut order: Vec<usize> = (0..merged.len()).collect();
    order.sort_by(|&a, &b| key(&merged[b]).cmp(&key(&merged[a])));
    order
}

fn chain(order: &[usize], cap: usize, accept: impl Fn(usize, usize) -> bool) -> Vec<usize> {
    let mut kept: Vec<usize> = Vec::with_capacity(cap);
    for &i in order {
        if kept.len() == cap {
            break;
        }
        match kept.last() {
            None => kept.push(i),
            Some(&last) if accept(last, i) => kept.push(i),
            Some(_) => {}
        }
    }
    kept
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::{Bitstring, KnapsackInstance};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn inst() -> KnapsackInstance {
        KnapsackInstance::from_integers(&[1, 2, 3, 4, 5], &[1, 1, 1, 1, 1], 5).unwrap()
    }

    fn ind(s: &str) -> Individual {
        Individual::evaluate(&inst(), s.parse::<Bitstring>().unwrap()).unwrap()
    }

    #[test]
    fn worse_child_is_rejected() {
        let parents = vec![ind("00011"), ind("00110")];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let out = truncation_select(&parents, ind("10000"), 2, &mut rng).unwrap();
        assert_eq!(out, parents);
    }

    #[test]
    fn better_child_replaces_the_worst() {
        let parents = vec![ind("00011"), ind("01000"), ind("00110")];
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let out = truncation_select(&parents, ind("11100"), 3, &mut rng).unwrap();
        assert_eq!(out, vec![ind("00011"), ind("00110"), ind("11100")]);
    }

    #[test]
    fn tie_break_is_uniform_over_subsets() {
        // f = 5 for all three: 00001, 10010, 01100
        let parents = vec![ind("00001"), ind("10010")];
        let child = ind("01100");
        let mut rng = ChaCha8Rng::seed_from_u64(77);
        let trials = 10_000;
        let mut dropped = [0usize; 3];
        for _ in 0..trials {
            let out = truncation_select(&parents, child.clone(), 2, &mut rng).unwrap();
            let all = [&parents[0], &parents[1], &child];
            let k = all.iter().position(|x| !out.contains(x)).unwrap();
            dropped[k] += 1;
        }
        let p = 1.0 / 3.0;
        let sigma = (trials as f64 * p * (1.0 - p)).sqrt();
        for d in dropped {
            assert!(
                (d as f64 - trials as f64 * p).abs() <= 3.0 * sigma,
                "{dropped:?}"
            );
        }
    }

    #[test]
    fn wrong_population_size_is_rejected() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!(truncation_select(&[ind("00001")], ind("00010"), 2, &mut rng).is_err());
        assert!(multi_criteria_select(&[ind("00001")], ind("00010"), 2, &mut rng).is_err());
        let three = vec![ind("00001"); 3];
        assert!(multi_criteria_select(&three, ind("00010"), 4, &mut rng).is_err());
    }

    #[test]
    fn unique_f_maximum_always_survives() {
        let parents = vec![ind("00001"), ind("00010"), ind("00100"), ind("01000")];
        let child = ind("00111");
        for seed in 0..50 {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let out = multi_criteria_select(&parents, child.clone(), 4, &mut rng).unwrap();
            assert_eq!(out.len(), 4);
            assert_eq!(out[0], child);
        }
    }

    #[test]
    fn copies_and_dominated_child_stay_closed() {
        let parents = vec![ind("00011"); 3];
        let child = ind("10000");
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let out = multi_criteria_select(&parents, child.clone(), 3, &mut rng).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.iter().all(|x| *x == parents[0] || *x == child));
        assert_eq!(out[0], parents[0]);
    }

    #[test]
    fn stage_chains_follow_the_rules() {
        // ranks: p̂ = (1,2,3,4,5), r̂ = (1,2,3,4,5)
        let merged = vec![
            ind("11111"), // f 15, h1 3, h3 5
            ind("00011"), // f 9, h1 9/2
            ind("00001"), // f 5, h1 5
            ind("11000"), // f 3, h1 3/2
            ind("10000"), // f 1, h1 1
            ind("00110"), // f 7, h1 7/2
            ind("01100"), // f 5, h1 5/2
        ];
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let picks = multi_criteria_indices(&merged, 6, &mut rng);
        // n = 6 -> cap 2
        // A: f order 0,1,5,2|6,3,4 -> chain 0 (h1 3), 1 (h1 9/2)
        assert_eq!(&picks[0..2], &[0, 1]);
        // B: h1 order 2 (5), 1 (9/2), 5, 0, 6, 3, 4 -> h3 chain 2 (1), 1 (2)
        assert_eq!(&picks[2..4], &[2, 1]);
        // C: identical ranks -> same chain
        assert_eq!(&picks[4..6], &[2, 1]);
    }
}
