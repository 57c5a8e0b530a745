//! Exact computation of equivariant Ehrhart h*-polynomials and equivariant
//! gamma-polynomials of order polytopes of sign-graded posets, with a
//! decomposition of both over saturations and an effectiveness verdict.

pub mod demo;
pub mod ehrhart;
pub mod error;
pub mod gamma;
pub mod io;
pub mod poly;
pub mod poset;
pub mod reptheory;

pub use error::{Error, Result};
pub use poly::Polynomial;
pub use reptheory::{CharacterTable, ClassFunction, Cyclotomic, PermGroup, Permutation, VirtualCharacter};

/// Integer-coefficient polynomial in `t`.
pub type IntPolynomial = Polynomial<i64>;

/// Polynomial in `t` with class-function coefficients over a fixed group.
pub type CharPolynomial = Polynomial<ClassFunction>;
