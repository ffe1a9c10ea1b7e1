//! Knapsack instances, candidate bitstrings and their exact evaluation.
//!
//! Besides the rational data, every instance keeps an integer image of its
//! weights and profits, scaled by the least common multiple of the
//! respective denominators. Subset sums over the scaled values are exact and
//! cheap, which is what the search loops rely on; the public rational
//! surface is recovered by dividing by the scale.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rational::{lcm_i128, Rational};

/// A candidate solution `x ∈ {0,1}^n`; bit `i` set means item `i` is packed.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bitstring(Vec<bool>);

impl Bitstring {
    pub fn zeros(n: usize) -> Self {
        Bitstring(vec![false; n])
    }

    pub fn ones(n: usize) -> Self {
        Bitstring(vec![true; n])
    }

    /// Bitstring of length `n` with exactly the listed (zero-based) items packed.
    pub fn from_indices(n: usize, packed: impl IntoIterator<Item = usize>) -> Self {
        let mut bits = vec![false; n];
        for i in packed {
            bits[i] = true;
        }
        Bitstring(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> bool {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, value: bool) {
        self.0[i] = value;
    }

    pub fn flip(&mut self, i: usize) {
        self.0[i] = !self.0[i];
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    /// `‖x‖₁`, the number of packed items.
    pub fn count_ones(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn ones_indices(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(i, _)| i)
    }

    /// True if every item packed in `self` is also packed in `other`.
    pub fn is_subset_of(&self, other: &Bitstring) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(&a, &b)| !a || b)
    }
}

impl From<Vec<bool>> for Bitstring {
    fn from(bits: Vec<bool>) -> Self {
        Bitstring(bits)
    }
}

impl fmt::Display for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bitstring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bitstring({self})")
    }
}

impl FromStr for Bitstring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse {
                    line: 1,
                    message: format!("unexpected character `{other}` in bitstring"),
                }),
            })
            .collect::<Result<Vec<_>>>()
            .map(Bitstring)
    }
}

impl Serialize for Bitstring {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Bitstring {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A 0-1 knapsack instance with exact rational data.
#[derive(Clone, PartialEq, Eq)]
pub struct KnapsackInstance {
    profits: Vec<Rational>,
    weights: Vec<Rational>,
    capacity: Rational,
    ratios: Vec<Rational>,
    scaled: Scaled,
    profit_ranks: Vec<u32>,
    ratio_ranks: Vec<u32>,
    profit_eviction: Vec<usize>,
    ratio_eviction: Vec<usize>,
}

#[derive(Clone, PartialEq, Eq)]
struct Scaled {
    profit_scale: i128,
    weight_scale: i128,
    profits: Vec<i128>,
    weights: Vec<i128>,
    capacity: i128,
}

fn scale_all(values: &[Rational], extra: Option<Rational>) -> Result<(i128, Vec<i128>)> {
    let overflow = || Error::Overflow("instance data cannot be brought to a common denominator");
    let scale = values
        .iter()
        .chain(extra.iter())
        .try_fold(1i128, |acc, v| lcm_i128(acc, v.denom()))
        .ok_or_else(overflow)?;
    let to_int = |v: &Rational| {
        v.numer()
            .checked_mul(scale / v.denom())
            .ok_or_else(overflow)
    };
    let scaled = values.iter().map(to_int).collect::<Result<Vec<_>>>()?;
    // all subset sums must fit, so the full sum must
    scaled
        .iter()
        .try_fold(0i128, |acc, &v| acc.checked_add(v))
        .ok_or_else(overflow)?;
    Ok((scale, scaled))
}

/// Dense ranks: equal keys share a rank, the smallest key has rank 1 and the
/// ranks of distinct keys are consecutive.
fn dense_ranks(keys: &[Rational]) -> Vec<u32> {
    let mut distinct: Vec<Rational> = keys.to_vec();
    distinct.sort();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("key present") as u32 + 1)
        .collect()
}

/// Items in eviction order: smallest key first, ties broken by highest index.
fn eviction_order(keys: &[Rational]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]).then(b.cmp(&a)));
    order
}

impl KnapsackInstance {
    /// Validates and builds an instance. All profits, weights and the
    /// capacity must be positive; items heavier than the capacity are allowed.
    pub fn new(profits: Vec<Rational>, weights: Vec<Rational>, capacity: Rational) -> Result<Self> {
        if profits.is_empty() {
            return Err(Error::InvalidInstance(
                "an instance needs at least one item".into(),
            ));
        }
        if profits.len() != weights.len() {
            return Err(Error::InvalidInstance(format!(
                "{} profits but {} weights",
                profits.len(),
                weights.len()
            )));
        }
        if let Some(i) = profits.iter().position(|p| !p.is_positive()) {
            return Err(Error::InvalidInstance(format!(
                "profit of item {} is not positive",
                i + 1
            )));
        }
        if let Some(i) = weights.iter().position(|w| !w.is_positive()) {
            return Err(Error::InvalidInstance(format!(
                "weight of item {} is not positive",
                i + 1
            )));
        }
        if !capacity.is_positive() {
            return Err(Error::InvalidInstance("capacity is not positive".into()));
        }

        let (profit_scale, scaled_profits) = scale_all(&profits, None)?;
        let (weight_scale, scaled_weights) = scale_all(&weights, Some(capacity))?;
        let scaled_capacity = capacity
            .numer()
            .checked_mul(weight_scale / capacity.denom())
            .ok_or(Error::Overflow(
                "capacity does not fit the common denominator",
            ))?;

        let ratios: Vec<Rational> = profits
            .iter()
            .zip(&weights)
            .map(|(&p, &w)| {
                p.checked_div(w)
                    .ok_or(Error::Overflow("profit-to-weight ratio"))
            })
            .collect::<Result<_>>()?;

        Ok(KnapsackInstance {
            profit_ranks: dense_ranks(&profits),
            ratio_ranks: dense_ranks(&ratios),
            profit_eviction: eviction_order(&profits),
            ratio_eviction: eviction_order(&ratios),
            scaled: Scaled {
                profit_scale,
                weight_scale,
                profits: scaled_profits,
                weights: scaled_weights,
                capacity: scaled_capacity,
            },
            ratios,
            profits,
            weights,
            capacity,
        })
    }

    /// Convenience constructor for integer data.
    pub fn from_integers(profits: &[i64], weights: &[i64], capacity: i64) -> Result<Self> {
        Self::new(
            profits.iter().map(|&p| p.into()).collect(),
            weights.iter().map(|&w| w.into()).collect(),
            capacity.into(),
        )
    }

    /// Number of items.
    pub fn n(&self) -> usize {
        self.profits.len()
    }

    pub fn profits(&self) -> &[Rational] {
        &self.profits
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn capacity(&self) -> Rational {
        self.capacity
    }

    /// `p_i / w_i`.
    pub fn ratio(&self, i: usize) -> Rational {
        self.ratios[i]
    }

    pub fn ratios(&self) -> &[Rational] {
        &self.ratios
    }

    fn check_len(&self, x: &Bitstring) -> Result<()> {
        if x.len() != self.n() {
            return Err(Error::LengthMismatch {
                expected: self.n(),
                found: x.len(),
            });
        }
        Ok(())
    }

    /// `Σ w_i x_i`.
    pub fn total_weight(&self, x: &Bitstring) -> Result<Rational> {
        self.check_len(x)?;
        Ok(Rational::new(
            self.scaled_weight(x),
            self.scaled.weight_scale,
        ))
    }

    pub fn is_feasible(&self, x: &Bitstring) -> Result<bool> {
        self.check_len(x)?;
        Ok(self.fits(self.scaled_weight(x)))
    }

    /// `f(x) = Σ p_i x_i` of a feasible solution. Infeasible input is a
    /// contract violation: repair it first.
    pub fn fitness(&self, x: &Bitstring) -> Result<Rational> {
        self.check_len(x)?;
        let weight = self.scaled_weight(x);
        if !self.fits(weight) {
            return Err(Error::Infeasible {
                weight: Rational::new(weight, self.scaled.weight_scale).to_string(),
                capacity: self.capacity.to_string(),
            });
        }
        Ok(self.profit_of_scaled(self.scaled_profit(x)))
    }

    /// Dense profit ranks `p̂_i` (smallest distinct profit has rank 1).
    pub fn profit_ranks(&self) -> &[u32] {
        &self.profit_ranks
    }

    /// Dense profit-to-weight ranks `r̂_i`.
    pub fn ratio_ranks(&self) -> &[u32] {
        &self.ratio_ranks
    }

    pub(crate) fn profit_eviction_order(&self) -> &[usize] {
        &self.profit_eviction
    }

    pub(crate) fn ratio_eviction_order(&self) -> &[usize] {
        &self.ratio_eviction
    }

    pub(crate) fn scaled_weights(&self) -> &[i128] {
        &self.scaled.weights
    }

    pub(crate) fn scaled_profits(&self) -> &[i128] {
        &self.scaled.profits
    }

    pub(crate) fn scaled_capacity(&self) -> i128 {
        self.scaled.capacity
    }

    pub(crate) fn scaled_weight(&self, x: &Bitstring) -> i128 {
        x.ones_indices().map(|i| self.scaled.weights[i]).sum()
    }

    pub(crate) fn scaled_profit(&self, x: &Bitstring) -> i128 {
        x.ones_indices().map(|i| self.scaled.profits[i]).sum()
    }

    pub(crate) fn fits(&self, scaled_weight: i128) -> bool {
        scaled_weight <= self.scaled.capacity
    }

    pub(crate) fn profit_of_scaled(&self, scaled_profit: i128) -> Rational {
        Rational::new(scaled_profit, self.scaled.profit_scale)
    }

    /// Parses the line-oriented instance format: `n`, then the capacity, then
    /// `n` lines of `profit weight`. Tokens are integers or `num/den`; lines
    /// starting with `#` and blank lines are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let rational = |line: usize, tok: &str| {
            tok.parse::<Rational>()
                .map_err(|e| parse_err(line, e.to_string()))
        };

        let (line, first) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing item count".into()))?;
        let n: usize = first
            .parse()
            .map_err(|_| parse_err(line, format!("invalid item count `{first}`")))?;

        let (line, cap) = lines
            .next()
            .ok_or_else(|| parse_err(line + 1, "missing capacity".into()))?;
        let capacity = rational(line, cap)?;

        let mut profits = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        let mut last = line;
        for k in 0..n {
            let (line, item) = lines
                .next()
                .ok_or_else(|| parse_err(last + 1, format!("expected {n} items, found {k}")))?;
            let tokens: Vec<&str> = item.split_whitespace().collect();
            if tokens.len() != 2 {
                return Err(parse_err(
                    line,
                    format!("expected `profit weight`, found `{item}`"),
                ));
            }
            profits.push(rational(line, tokens[0])?);
            weights.push(rational(line, tokens[1])?);
            last = line;
        }
        if let Some((line, extra)) = lines.next() {
            return Err(parse_err(
                line,
                format!("unexpected trailing content `{extra}`"),
            ));
        }
        Self::new(profits, weights, capacity)
    }

    /// Canonical text serialization, readable by [`KnapsackInstance::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n{}\n", self.n(), self.capacity);
        for (p, w) in self.profits.iter().zip(&self.weights) {
            out.push_str(&format!("{p} {w}\n"));
        }
        out
    }
}

impl fmt::Debug for KnapsackInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("KnapsackInstance")
            .field("profits", &self.profits)
            .field("weights", &self.weights)
            .field("capacity", &self.capacity)
            .finish()
    }
}

impl FromStr for KnapsackInstance {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}
