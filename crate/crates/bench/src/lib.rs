//! Fixtures shared by the criterion benches.

use lefschetz_core::symplectic::{chain_curves, transvection, SymplecticForm};
use lefschetz_core::{CurveClass, SymplecticMatrix};

/// The chain word `c1 c2 ... c_{2h+1}` repeated `reps` times, as curve classes.
pub fn chain_cycles(genus: usize, reps: usize) -> Vec<CurveClass> {
    let chain = chain_curves(genus);
    (0..reps).flat_map(|_| chain.iter().cloned()).collect()
}

/// Image of the first `len` letters of the repeated chain word.
pub fn chain_product(genus: usize, len: usize) -> SymplecticMatrix {
    let form = SymplecticForm::new(genus).expect("positive genus");
    chain_cycles(genus, len / (2 * genus + 1) + 1).iter().take(len).fold(SymplecticMatrix::identity(genus), |acc, c| {
        acc.mul(&transvection(&form, c).expect("valid chain curve")).expect("same genus")
    })
}
