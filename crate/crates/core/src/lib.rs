//! Exact Whitehead-torsion calculus over Z[Z/n].
//!
//! The crate computes in the Whitehead group Wh(Z/n) with unit representatives
//! in the integral group ring, applies the torsion formulas for composition,
//! products, duality and concordance of invertible cobordisms, and answers
//! classification questions with dimension-gated, citation-carrying verdicts.
//! All decisions are exact: floating point only ever proposes, the group ring
//! disposes.

pub mod classify;
pub mod cobordism;
pub mod error;
pub mod group_ring;
pub mod numeric;
pub mod tables;
pub mod text;
pub mod torsion;
pub mod verdict;
pub mod whitehead;
mod zmatrix;

pub use astro_float::BigFloat;
pub use error::{Error, Result};
pub use group_ring::{CyclicGroupSpec, GroupRingElement};
