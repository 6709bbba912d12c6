//! Exact arithmetic kernel: matrices, polynomials, resultants, and
//! cyclotomic polynomials. Nothing here touches machine-precision numbers
//! when instantiated at the crate-root aliases.

pub mod cyclotomic;
mod intpoly;
pub mod matrix;
pub mod poly;
pub mod resultant;

pub use cyclotomic::{cyclotomic, totient};
pub use matrix::Matrix;
pub use poly::Poly;
pub use resultant::{resultant, resultant_in_y};
