//! Exact verifier for duality identities on finite R-group scenarios.
//!
//! The crate builds root-space geometry (root systems, Levi split components,
//! Weyl groups), exact character theory over cyclotomic numbers, and scenario
//! data for a finite group acting on a split component.  On top of those it
//! assembles the duality operator `D = sum_L (-1)^{dim A_L} Ind . Res`, the
//! Steinberg class function, and a battery of identity checks that are
//! reported with witnesses instead of being assumed.
//!
//! All arithmetic is exact: rationals, cyclotomic integers, and canonical
//! reduced-echelon bases.  No floating point anywhere.

pub mod chartheory;
pub mod cli;
pub mod cyclotomic;
pub mod duality;
pub mod error;
pub mod linalg;
pub mod rgroup;
pub mod rootspace;

pub use error::Error;
