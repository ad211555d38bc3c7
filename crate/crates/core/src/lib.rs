//! Exponent semigroups `S(A) = {n ∈ ℕ : Aⁿ has integer entries}` of rational
//! square matrices, in exact arithmetic.
//!
//! - [`exponent::exponent_semigroup`] computes `S(A)` exactly.
//! - [`integrality::tfae_report`] decides whether some positive power of `A`
//!   can be integral and produces certificates either way.
//! - [`construct::represent`] builds a matrix realizing a given semigroup.
//! - [`bounds::bounds`] bounds the smallest size of such a matrix.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod error;
pub mod exponent;
pub mod fixtures;
pub mod integrality;
pub mod interchange;
pub mod lattice;
pub mod matrix;
pub mod poly;
pub mod rational;
pub mod semigroup;

pub use bounds::{bounds, derived_bounds, DimensionBounds, RuleTag};
pub use construct::{represent, ConstructionResult, SuperdiagonalVector};
pub use error::{Error, Result};
pub use exponent::{exponent_semigroup, ExponentAnalysis, StateBudget};
pub use integrality::{tfae_report, TfaeReport};
pub use matrix::{IntMatrix, RationalMatrix};
pub use poly::Polynomial;
pub use rational::Rational;
pub use semigroup::{SemigroupKind, SubsemigroupDesc};
