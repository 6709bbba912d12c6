//! Scalar traits shared by the generic matrix and polynomial types.
//!
//! The analysis code runs on [`num_bigint::BigInt`] and
//! [`num_rational::BigRational`], but the containers only ask for ring
//! structure, so machine scalars (`i64`, `f64`) also work where an exact
//! answer is not required.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Commutative ring with identity.
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn from_i64(v: i64) -> Self;

    fn pow_usize(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }
}

/// Integral domain with an exact-division operation.
///
/// `div_exact(a, b)` is only called when `b` divides `a`; the result is
/// unspecified otherwise (implementations for exact types panic).
pub trait Domain: Ring {
    /// `Some(self / rhs)` when `rhs` divides `self`, `None` otherwise.
    fn div_checked(&self, rhs: &Self) -> Option<Self>;

    fn div_exact(&self, rhs: &Self) -> Self {
        self.div_checked(rhs)
            .unwrap_or_else(|| panic!("inexact division {self:?} / {rhs:?}"))
    }
}

/// A field: every nonzero element is invertible.
pub trait Field: Domain + std::ops::Div<Output = Self> {}

macro_rules! impl_int_scalar {
    ($($t:ty),*) => {$(
        impl Ring for $t {
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        }
        impl Domain for $t {
            fn div_checked(&self, rhs: &Self) -> Option<Self> {
                if *rhs == 0 || self % rhs != 0 {
                    None
                } else {
                    Some(self / rhs)
                }
            }
        }
    )*};
}

impl_int_scalar!(i64, i128);

impl Ring for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }
}

impl Domain for f64 {
    fn div_checked(&self, rhs: &Self) -> Option<Self> {
        (*rhs != 0.0).then(|| self / rhs)
    }
}

impl Field for f64 {}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }

    fn pow_usize(&self, e: usize) -> Self {
        num_traits::pow(self.clone(), e)
    }
}

impl Domain for BigInt {
    fn div_checked(&self, rhs: &Self) -> Option<Self> {
        if rhs.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(rhs);
        r.is_zero().then_some(q)
    }
}

impl Ring for BigRational {
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
}

impl Domain for BigRational {
    fn div_checked(&self, rhs: &Self) -> Option<Self> {
        (!rhs.is_zero()).then(|| self / rhs)
    }
}

impl Field for BigRational {}
