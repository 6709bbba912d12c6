//! Degree growth of monomial maps.
//!
//! A `k x k` integer matrix `A` of full rank defines the monomial map
//! `x -> x^A`; its n-th iterate has exponent matrix `A^n`. This crate
//! computes the exact degree sequence `D(A^n)`, looks for linear
//! recurrences in it, tracks which linear piece of the degree formula is
//! active as `n` grows, and decides from certified spectral data of `A`
//! whether a recurrence provably exists, provably does not exist, or is not
//! settled by the available criteria.

pub mod cells;
pub mod degree;
pub mod error;
pub mod exact;
pub mod recur;
pub mod scalar;
pub mod spectra;
pub mod verdict;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, Result};
pub use exact::{Matrix, Poly};

/// Exponent matrix with arbitrary-precision integer entries.
pub type IntMatrix = Matrix<BigInt>;
/// Integer polynomial, ascending coefficients.
pub type IntPoly = Poly<BigInt>;
/// Rational polynomial, ascending coefficients.
pub type RatPoly = Poly<BigRational>;
/// Bivariate integer polynomial: a polynomial in `y` with coefficients in `Z[x]`.
pub type BiPoly = Poly<IntPoly>;
/// Exact rational number.
pub type Rational = BigRational;
