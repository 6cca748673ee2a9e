//! Exact-arithmetic tiling and spectral-set analysis on Z_n x Z_n.
//!
//! Fourier transforms of indicator functions are held as integer combinations
//! of roots of unity and tested for vanishing by divisibility by cyclotomic
//! polynomials, so tiling and spectrality predicates are decided exactly at
//! desk scale; floating point enters only as a cross-validation oracle. On
//! top of the exact core sit enumeration of tiling complements and symplectic
//! spectra, and reproducible verification sweeps for the structural
//! statements relating them.

pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod render;
pub mod report;
pub mod search;
pub mod setfile;
pub mod setops;
pub mod transform;

pub use error::{Error, Result};
pub use group::{
    enumerate_lagrangians, enumerate_subgroups, euclidean_inner, find_symplectic_basis_partner,
    symplectic_form, GroupElement, PointSet, Subgroup, Symplectomorphism,
};
pub use report::{SearchConfig, SearchMode, VerificationReport, Witness};
pub use setops::{complements_subgroup, difference_set, is_spectral_pair, is_tiling_pair, PairVerdict};
pub use transform::{ft_at, rotate_euclidean_to_symplectic, zero_set, Form, ZeroSet};

/// Largest modulus accepted by subgroup enumeration and grid rendering.
pub const MAX_MODULUS: u32 = 64;
