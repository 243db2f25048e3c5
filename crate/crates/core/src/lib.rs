//! Exact computations for Lefschetz fibrations over surfaces.
//!
//! The crate works at the level of homology throughout: Dehn twists act on
//! `H_1` of the fiber as symplectic transvections, monodromy words are
//! multiplied out in `Sp(2h, Z)`, and the signature of the total space over
//! a disk is assembled from values of the Meyer signature cocycle. On top of
//! that sit the separating-fiber inequality, its Torelli refinement, and the
//! commutator-length / stable-commutator-length lower bounds that follow
//! from it.
//!
//! No floating point is used anywhere; matrices carry arbitrary-precision
//! integers or reduced rationals.
//!
//! ```
//! use lefschetz_core::{fibration, word};
//!
//! let w = word::parse_word("(c1 c2)^6", 1).unwrap();
//! assert_eq!(fibration::signature_over_disk(&w).unwrap(), -8);
//! assert!(fibration::monodromy_image(&w).unwrap().is_identity());
//! ```

pub mod bounds;
pub mod error;
pub mod fibration;
pub mod linalg;
pub mod meyer;
pub mod scl;
pub mod symplectic;
pub mod word;

pub use bounds::{BoundReport, Verdict};
pub use error::{Error, ParseError, ParseErrorKind, Result};
pub use fibration::{FibrationCounts, FibrationData};
pub use linalg::{IntMatrix, RatMatrix, SignatureTriple};
pub use meyer::MeyerValue;
pub use scl::{SclFlavor, SclQuery};
pub use symplectic::{CurveClass, SymplecticForm, SymplecticMatrix};
pub use word::{Letter, Word};
