//! Exact computations with fusion rings.
//!
//! The crate models fusion rings (based rings with nonnegative integer
//! structure constants and a duality involution), computes their
//! Frobenius-Perron dimensions as exact real algebraic numbers, runs a
//! battery of necessary conditions for a ring to come from a fusion
//! category, builds and checks S-matrix data through the Verlinde
//! formula, and computes the finite-group cohomology needed to count
//! module categories and fiber functors over `Rep G`.

#![allow(clippy::needless_range_loop)]

pub mod algebraic;
pub mod cyclotomic;
pub mod enumerate;
pub mod error;
pub mod factor;
pub mod fp;
pub mod galois;
pub mod group;
pub mod library;
pub mod modular;
pub mod numeric;
pub mod numfield;
pub mod poly;
pub mod ring;

pub use algebraic::AlgebraicNumber;
pub use error::{Error, Result};
pub use group::FiniteGroup;
pub use ring::FusionRing;
