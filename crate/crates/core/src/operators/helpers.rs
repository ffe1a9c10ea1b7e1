use crate::error::{Error, Result};
use crate::instance::{Bitstring, KnapsackInstance};
use crate::rational::Rational;

/// Helper objectives `(h1, h2, h3)`: the mean profit rank and mean ratio rank
/// of the packed items, and the number of packed items. The null knapsack
/// maps to `(0, 0, 0)`.
pub fn helper_values(inst: &KnapsackInstance, x: &Bitstring) -> Result<(Rational, Rational, u32)> {
    if x.len() != inst.n() {
        return Err(Error::LengthMismatch {
            expected: inst.n(),
            found: x.len(),
        });
    }
    Ok(helper_values_unchecked(inst, x))
}

pub(crate) fn helper_values_unchecked(
    inst: &KnapsackInstance,
    x: &Bitstring,
) -> (Rational, Rational, u32) {
    let (p_ranks, r_ranks) = (inst.profit_ranks(), inst.ratio_ranks());
    let (mut count, mut p_sum, mut r_sum) = (0i128, 0i128, 0i128);
    for i in x.ones_indices() {
        count += 1;
        p_sum += p_ranks[i] as i128;
        r_sum += r_ranks[i] as i128;
    }
    if count == 0 {
        return (Rational::ZERO, Rational::ZERO, 0);
    }
    (
        Rational::new(p_sum, count),
        Rational::new(r_sum, count),
        count as u32,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn showcase_examples() {
        let a = KnapsackInstance::from_integers(&[10, 10, 10, 12, 12], &[10; 5], 20).unwrap();
        let (h1, _, h3) = helper_values(&a, &"00011".parse().unwrap()).unwrap();
        assert_eq!((h1, h3), (2.into(), 2));

        let b = KnapsackInstance::from_integers(&[15, 15, 20, 20, 20], &[10, 10, 20, 20, 20], 20)
            .unwrap();
        let (_, h2, _) = helper_values(&b, &"11000".parse().unwrap()).unwrap();
        assert_eq!(h2, 2.into());

        assert_eq!(
            helper_values(&b, &Bitstring::zeros(5)).unwrap(),
            (Rational::ZERO, Rational::ZERO, 0)
        );
    }

    #[test]
    fn fractional_means() {
        let a = KnapsackInstance::from_integers(&[10, 10, 10, 12, 12], &[10; 5], 20).unwrap();
        let (h1, _, h3) = helper_values(&a, &"10010".parse().unwrap()).unwrap();
        assert_eq!((h1, h3), (Rational::new(3, 2), 2));
    }
}
