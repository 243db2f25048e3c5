//! Lefschetz fibrations described by monodromy factorizations.
//!
//! A fibration over a closed genus-`g` base is recorded as the ordered
//! vanishing cycles of its singular fibers (all lying over a disk `D`) plus
//! `g` commutator pairs describing the flat bundle over the complement of
//! `D`. Everything is evaluated on homology.

use crate::error::{Error, Result};
use crate::meyer::meyer_cocycle;
use crate::symplectic::{transvection, CurveClass, SymplecticForm, SymplecticMatrix};
use crate::word::{FibrationFile, Word};

/// The numerical data `(g, h, s, n)` of a fibration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FibrationCounts {
    pub base_genus: i64,
    pub fiber_genus: i64,
    pub separating: i64,
    pub nonseparating: i64,
}

impl FibrationCounts {
    pub fn new(base_genus: i64, fiber_genus: i64, separating: i64, nonseparating: i64) -> Self {
        Self { base_genus, fiber_genus, separating, nonseparating }
    }

    /// `chi(X) = 4(g-1)(h-1) + s + n`.
    pub fn euler_characteristic(&self) -> i64 {
        4 * (self.base_genus - 1) * (self.fiber_genus - 1) + self.separating + self.nonseparating
    }
}

pub fn euler_characteristic(counts: &FibrationCounts) -> i64 {
    counts.euler_characteristic()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FibrationData {
    fiber_genus: usize,
    base_genus: usize,
    vanishing_cycles: Vec<CurveClass>,
    flat_pairs: Vec<(Word, Word)>,
}

impl FibrationData {
    pub fn new(
        fiber_genus: usize,
        base_genus: usize,
        vanishing_cycles: Vec<CurveClass>,
        flat_pairs: Vec<(Word, Word)>,
    ) -> Result<Self> {
        if fiber_genus == 0 {
            return Err(Error::InvalidParameter("fiber genus must be at least 1".into()));
        }
        for c in &vanishing_cycles {
            c.validate(fiber_genus)?;
        }
        for (a, b) in &flat_pairs {
            if a.genus() != fiber_genus {
                return Err(Error::GenusMismatch(fiber_genus, a.genus()));
            }
            if b.genus() != fiber_genus {
                return Err(Error::GenusMismatch(fiber_genus, b.genus()));
            }
        }
        Ok(Self { fiber_genus, base_genus, vanishing_cycles, flat_pairs })
    }

    pub fn from_file(file: &FibrationFile) -> Result<Self> {
        Self::new(file.fiber_genus, file.base_genus, file.word.vanishing_cycles()?, file.flat.clone())
    }

    pub fn fiber_genus(&self) -> usize {
        self.fiber_genus
    }

    pub fn base_genus(&self) -> usize {
        self.base_genus
    }

    pub fn vanishing_cycles(&self) -> &[CurveClass] {
        &self.vanishing_cycles
    }

    pub fn flat_pairs(&self) -> &[(Word, Word)] {
        &self.flat_pairs
    }

    pub fn separating_count(&self) -> usize {
        self.vanishing_cycles.iter().filter(|c| c.is_separating()).count()
    }

    pub fn nonseparating_count(&self) -> usize {
        self.vanishing_cycles.len() - self.separating_count()
    }

    pub fn counts(&self) -> FibrationCounts {
        FibrationCounts::new(
            self.base_genus as i64,
            self.fiber_genus as i64,
            self.separating_count() as i64,
            self.nonseparating_count() as i64,
        )
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.counts().euler_characteristic()
    }

    /// Signature of the part of the total space over the disk containing
    /// all critical values.
    pub fn signature_over_disk(&self) -> Result<i64> {
        signature_of_cycles(self.fiber_genus, &self.vanishing_cycles)
    }
}

/// Product, in order, of the twists along the given cycles.
pub fn monodromy_of_cycles(genus: usize, cycles: &[CurveClass]) -> Result<SymplecticMatrix> {
    let form = SymplecticForm::new(genus)?;
    cycles.iter().try_fold(SymplecticMatrix::identity(genus), |acc, c| acc.mul(&transvection(&form, c)?))
}

/// Image of a word in `Sp(2h, Z)`; inverses and commutators are expanded first.
pub fn monodromy_image(word: &Word) -> Result<SymplecticMatrix> {
    let genus = word.genus();
    let form = SymplecticForm::new(genus)?;
    word.elaborate().iter().try_fold(SymplecticMatrix::identity(genus), |acc, s| {
        let t = transvection(&form, &s.letter.curve_class(genus))?;
        let t = if s.inverse { t.inverse() } else { t };
        acc.mul(&t)
    })
}

/// Whether the boundary monodromy of the disk part equals the product of
/// the flat-part commutators on homology. Necessary, not sufficient, for
/// the closed fibration to exist.
pub fn sp_consistency(data: &FibrationData) -> Result<bool> {
    if data.flat_pairs.len() != data.base_genus {
        return Err(Error::FlatPairCountMismatch { expected: data.base_genus, got: data.flat_pairs.len() });
    }
    let h = data.fiber_genus;
    let disk = monodromy_of_cycles(h, &data.vanishing_cycles)?;
    let flat = data.flat_pairs.iter().try_fold(SymplecticMatrix::identity(h), |acc, (a, b)| {
        acc.mul(&monodromy_image(a)?.commutator(&monodromy_image(b)?)?)
    })?;
    Ok(disk == flat)
}

/// Signature over the disk of a positive factorization:
/// `-sum_{j=1}^{m-1} tau(P_j, T_{j+1}) - s`, where `P_j` is the product of
/// the first `j` twists.
pub fn signature_over_disk(word: &Word) -> Result<i64> {
    signature_of_cycles(word.genus(), &word.vanishing_cycles()?)
}

pub fn signature_of_cycles(genus: usize, cycles: &[CurveClass]) -> Result<i64> {
    let form = SymplecticForm::new(genus)?;
    let mut partial = SymplecticMatrix::identity(genus);
    let mut meyer_sum = 0i64;
    let mut separating = 0i64;
    for (j, c) in cycles.iter().enumerate() {
        let t = transvection(&form, c)?;
        if c.is_separating() {
            separating += 1;
        }
        if j > 0 {
            meyer_sum += meyer_cocycle(&partial, &t)?.value;
        }
        partial = partial.mul(&t)?;
    }
    Ok(-meyer_sum - separating)
}

/// Upper bound `2h(2g-2) + n - s` for the signature of a closed fibration.
pub fn signature_upper_closed(counts: &FibrationCounts) -> Result<i64> {
    if counts.base_genus < 1 {
        return Err(Error::BaseGenusTooSmall(counts.base_genus));
    }
    let FibrationCounts { base_genus: g, fiber_genus: h, separating: s, nonseparating: n } = *counts;
    Ok(2 * h * (2 * g - 2) + n - s)
}

/// `k` singular fibers, all with the same separating vanishing cycle,
/// glued to a flat bundle over a genus-`N` surface with one boundary
/// component. The flat words are left empty: separating twists act
/// trivially on homology, so the data is consistent there.
pub fn build_separating_power(
    fiber_genus: usize,
    power: usize,
    side_genus: i64,
    commutators: usize,
) -> Result<FibrationData> {
    if fiber_genus < 2 {
        return Err(Error::InvalidParameter(format!("fiber genus {fiber_genus} < 2 has no separating curves")));
    }
    if power < 1 {
        return Err(Error::InvalidParameter("power must be at least 1".into()));
    }
    let cycle = CurveClass::Separating(side_genus);
    cycle.validate(fiber_genus)?;
    let flat = (0..commutators).map(|_| (Word::empty(fiber_genus), Word::empty(fiber_genus))).collect();
    FibrationData::new(fiber_genus, commutators, vec![cycle; power], flat)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::{parse_commutator_pair, parse_word};

    #[test]
    fn euler_examples() {
        assert_eq!(FibrationCounts::new(1, 2, 3, 4).euler_characteristic(), 7);
        assert_eq!(FibrationCounts::new(2, 3, 0, 0).euler_characteristic(), 8);
        let w = parse_word("(c1 c2)^6", 1).unwrap();
        let data = FibrationData::new(1, 0, w.vanishing_cycles().unwrap(), vec![]).unwrap();
        assert_eq!(data.counts(), FibrationCounts::new(0, 1, 0, 12));
        assert_eq!(data.euler_characteristic(), 12);
    }

    #[test]
    fn monodromy_examples() {
        assert!(monodromy_image(&Word::empty(2)).unwrap().is_identity());
        assert!(monodromy_image(&parse_word("S{1}^5", 2).unwrap()).unwrap().is_identity());
        assert!(monodromy_image(&parse_word("(c1 c2)^6", 1).unwrap()).unwrap().is_identity());
        assert!(!monodromy_image(&parse_word("(c1 c2)^3", 1).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn consistency_examples() {
        let torus =
            FibrationData::new(1, 0, parse_word("(c1 c2)^6", 1).unwrap().vanishing_cycles().unwrap(), vec![]).unwrap();
        assert!(sp_consistency(&torus).unwrap());
        let single =
            FibrationData::new(1, 0, parse_word("c1", 1).unwrap().vanishing_cycles().unwrap(), vec![]).unwrap();
        assert!(!sp_consistency(&single).unwrap());
        let sep = FibrationData::new(
            2,
            1,
            parse_word("S{1}^3", 2).unwrap().vanishing_cycles().unwrap(),
            vec![parse_commutator_pair("[,]", 2).unwrap()],
        )
        .unwrap();
        assert!(sp_consistency(&sep).unwrap());
        let missing = FibrationData::new(2, 1, vec![], vec![]).unwrap();
        assert_eq!(sp_consistency(&missing), Err(Error::FlatPairCountMismatch { expected: 1, got: 0 }));
    }

    #[test]
    fn commutator_of_twists_matches_disk_word() {
        // [c1, c2] flat part against a disk word with the same homology image
        let h = 1;
        let (a, b) = parse_commutator_pair("[c1, c2]", h).unwrap();
        let flat = monodromy_image(&a).unwrap().commutator(&monodromy_image(&b).unwrap()).unwrap();
        let data = FibrationData::new(h, 1, vec![], vec![(a, b)]).unwrap();
        assert_eq!(sp_consistency(&data).unwrap(), flat.is_identity());
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature_over_disk(&Word::empty(2)).unwrap(), 0);
        assert_eq!(signature_over_disk(&parse_word("S{1}", 2).unwrap()).unwrap(), -1);
        assert_eq!(signature_over_disk(&parse_word("(c1 c2)^6", 1).unwrap()).unwrap(), -8);
        assert_eq!(signature_over_disk(&parse_word("c1", 1).unwrap()).unwrap(), 0);
    }

    #[test]
    fn signature_rejects_inverses() {
        let w = crate::word::parse_flat_word("c1'", 1).unwrap();
        assert_eq!(signature_over_disk(&w), Err(Error::InverseInPositivePart));
    }

    #[test]
    fn closed_signature_bound() {
        assert_eq!(signature_upper_closed(&FibrationCounts::new(1, 2, 0, 0)).unwrap(), 0);
        assert_eq!(signature_upper_closed(&FibrationCounts::new(2, 2, 1, 0)).unwrap(), 7);
        assert_eq!(signature_upper_closed(&FibrationCounts::new(1, 3, 2, 5)).unwrap(), 3);
        assert_eq!(signature_upper_closed(&FibrationCounts::new(0, 3, 2, 5)), Err(Error::BaseGenusTooSmall(0)));
    }

    #[test]
    fn separating_power_construction() {
        let d = build_separating_power(2, 1, 1, 2).unwrap();
        assert_eq!(d.counts(), FibrationCounts::new(2, 2, 1, 0));
        assert_eq!(d.euler_characteristic(), 5);
        assert!(sp_consistency(&d).unwrap());
        let d = build_separating_power(3, 5, 2, 1).unwrap();
        assert_eq!(d.counts(), FibrationCounts::new(1, 3, 5, 0));
        assert!(build_separating_power(1, 1, 1, 1).is_err());
        assert!(build_separating_power(2, 0, 1, 1).is_err());
        assert!(build_separating_power(3, 1, 3, 1).is_err());
        assert_eq!(build_separating_power(2, 4, 1, 0).unwrap().base_genus(), 0);
    }
}
