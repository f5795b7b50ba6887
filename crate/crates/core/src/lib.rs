//! Lattice dynamics of quasi-local defect vibrations in diamond-structure
//! crystals.
//!
//! The crate builds periodic supercells with a split-vacancy impurity,
//! assembles block-sparse interatomic force constants (from a built-in
//! nearest-neighbor valence model or from external files), splices small-cell
//! defect force constants into large host cells with a two-radius rule,
//! solves the mass-weighted eigenproblem, classifies every mode under the
//! D3d point group, and extracts localization measures, quasi-local
//! resonance energies, isotope shifts, and zero-point-vibration differences.

pub mod analysis;
pub mod constants;
pub mod crystal;
pub mod embed;
pub mod error;
pub mod forcefield;
pub mod modes;
pub mod symmetry;

pub use error::{Error, Result};
