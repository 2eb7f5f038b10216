//! Exact combinatorics of ribbon tableaux.
//!
//! The crate covers the abacus (edge sequences, `n`-cores and `n`-quotients),
//! semistandard ribbon tableaux with their spin and inversion statistics,
//! exact Laurent/symmetric polynomial arithmetic, ribbon (LLT) functions,
//! strip series of lattice paths, domino q-Littlewood-Richardson
//! coefficients via Yamanouchi tableaux, and `(1,2,∅)`-words. The
//! [`verify`] module bundles exhaustive checks of the identities relating
//! them.

pub mod domino;
pub mod error;
pub mod functions;
pub mod polynomials;
pub mod shapes;
pub mod tableaux;
pub mod verify;
pub mod words;

pub use error::{Error, Result};
pub use shapes::{LatticePath, Partition, SkewShape};
