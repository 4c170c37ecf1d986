//! Finite groups, saturated fusion systems, mod-p group cohomology and
//! amalgam models.

pub mod cohomology;
pub mod corpus;
pub mod error;
pub mod fusion;
pub mod group;
pub mod io;
pub mod lab;
pub mod linalg;
pub mod models;

pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupHom, Subgroup};

/// Exact rationals used for Euler characteristics.
pub type Rational = num_rational::BigRational;
/// Arbitrary-precision integers used for Smith normal forms.
pub type Integer = num_bigint::BigInt;
