//! Stratified bisimilarity and the largest respectful function on finite
//! labelled transition systems, with the same constructions lifted to finite
//! complete lattices.
//!
//! The strata `∼_0 ⊇ ∼_1 ⊇ …` of a finite [`Lts`] stabilise at bisimilarity
//! `∼_ε`. The largest respectful up-to function maps a relation `R` to the
//! smallest stratum containing it ([`lrf`]), which makes it the most
//! permissive target for bisimulation-up-to proofs ([`check_companion`]).
//! The [`lattice`] module repeats the construction for an arbitrary
//! progression on a finite lattice and provides brute-force oracles for it.
//!
//! ```
//! use upto::{compute_strata, gallery::build_t, lrf, Relation};
//!
//! let t2 = build_t(2).lts;
//! let seq = compute_strata(&t2);
//! assert_eq!(seq.epsilon(), 2);
//! let r = Relation::from_pairs(3, [(1, 2)]).unwrap();
//! assert_eq!(&lrf(&seq, &r).unwrap(), seq.stratum(1));
//! ```

pub mod companion;
mod error;
pub mod gallery;
pub mod io;
pub mod lattice;
pub mod lts;
pub mod progress;
mod relation;
pub mod sample;
pub mod strata;
pub mod suite;
pub mod upto;

pub use companion::{
    catalog, check_lrf_largest, is_respectful_on_samples, lrf, lrf_index, RespectfulnessVerdict,
    UpToFunction,
};
pub use error::{Error, Result};
pub use lts::{Label, LabelId, Lts, LtsBuilder, StateId, Transition};
pub use progress::{largest_progressing_to, progresses, progresses_to, Direction, ProgressDiagnosis};
pub use relation::Relation;
pub use strata::{bisimilarity, compute_strata, StrataSequence};
pub use upto::{check_companion, check_upto, Conclusion, ProofReport};
