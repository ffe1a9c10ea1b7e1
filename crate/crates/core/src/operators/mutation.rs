use rand::Rng;

use crate::instance::Bitstring;

/// Flips every bit independently with probability exactly `1/n`.
///
/// Draws one `gen_range(0..n)` (as `u32`) per bit in index order and flips
/// the bit when the draw is zero, so a seeded stream replays exactly.
pub fn bitwise_mutation<R: Rng + ?Sized>(x: &Bitstring, rng: &mut R) -> Bitstring {
    let mut child = x.clone();
    mutate_in_place(&mut child, rng);
    child
}

pub(crate) fn mutate_in_place<R: Rng + ?Sized>(x: &mut Bitstring, rng: &mut R) {
    let n = x.len() as u32;
    for i in 0..x.len() {
        if rng.gen_range(0..n) == 0 {
            x.flip(i);
        }
    }
}
