//! State-sum Alexander polynomials and a vector-valued invariant of oriented
//! tangles.
//!
//! A tangle is written as a [`tangle::MorseWord`]. Each crossing expands into
//! a sum of crossingless diagrams ([`statesum`]) living in a diagram space with
//! a canonical basis ([`diagram`]). For two-endpoint tangles the resulting
//! scalar, corrected by the turning number, is the Conway-normalized Alexander
//! polynomial of the closure ([`invariant`]). [`oracle`] is an independent
//! Burau determinant used for cross-checking, and [`check`] collects the
//! identities behind `tanglex check`.

pub mod check;
pub mod cli;
pub mod diagram;
pub mod error;
pub mod invariant;
pub mod laurent;
pub mod oracle;
pub mod statesum;
pub mod tangle;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
