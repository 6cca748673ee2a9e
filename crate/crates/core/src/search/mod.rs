//! Enumeration of tiling complements and symplectic spectra, plus the
//! verification sweeps for the counting, disjointness and main-theorem
//! statements.

mod enumerate;
mod verify;

pub use enumerate::{
    enumerate_symplectic_spectra, enumerate_tiling_complements, sample_transversals,
};
pub use verify::{
    noncyclic_lagrangian, search_counterexamples_cyclic, verify_counting_lemma, verify_lemma_diff,
    verify_lemma_self, verify_theorem_main, TheoremCase,
};

pub use crate::report::{SearchConfig, SearchMode, VerificationReport, Witness};

/// Any enumeration whose estimated candidate count exceeds this bound aborts
/// with [`crate::Error::SearchSpaceTooLarge`] instead of running open-ended.
pub const ENUMERATION_BOUND: u128 = 10_000_000;
