//! Exact-arithmetic laboratory for the meta Hahn and trio Hahn algebras.
//!
//! The algebras are realized as difference operators on the space of
//! polynomials of degree at most `N`. Every relation, Casimir value,
//! eigenbasis claim, connection formula and (bi)orthogonality identity is
//! checked as an exact identity between matrices or scalars.
//!
//! The math is generic over [`Scalar`]; the verification front end works
//! with [`Rational`], an arbitrary-precision rational number, so residuals
//! are compared against exact zero.

pub mod algebra;
pub mod bases;
pub mod error;
pub mod exact;
pub mod polyspace;
pub mod report;
pub mod scalar;
pub mod specialfn;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Arbitrary-precision exact rational, the scalar field of the verifier.
pub type Rational = num_rational::BigRational;

pub type RationalPoly = polyspace::Poly<Rational>;
pub type RationalMatrix = polyspace::Matrix<Rational>;
pub type RationalOperator = polyspace::Operator<Rational>;
pub type RationalParams = algebra::ParamSet<Rational>;
pub type RationalModel = bases::Model<Rational>;
