//! Cyclotomic polynomials and totients.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::IntPoly;

fn cache() -> &'static RwLock<HashMap<u64, IntPoly>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, IntPoly>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `m`-th cyclotomic polynomial, by dividing `x^m - 1` by `Phi_d` for
/// every proper divisor `d`. Results are cached process-wide; concurrent
/// fills compute the same value.
pub fn cyclotomic(m: u64) -> Result<IntPoly> {
    if m == 0 {
        return Err(Error::InvalidArgument(
            "cyclotomic order must be positive".into(),
        ));
    }
    if let Some(p) = cache().read().expect("cache poisoned").get(&m) {
        return Ok(p.clone());
    }
    let mut num = IntPoly::monomial(BigInt::one(), m as usize);
    num = &num - &IntPoly::one();
    for d in divisors(m).into_iter().filter(|&d| d < m) {
        let phi_d = cyclotomic(d)?;
        num = num.exact_quotient(&phi_d).expect("Phi_d divides x^m - 1");
    }
    cache()
        .write()
        .expect("cache poisoned")
        .entry(m)
        .or_insert_with(|| num.clone());
    Ok(num)
}

pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m.is_multiple_of(d) {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Euler's totient.
pub fn totient(mut m: u64) -> u64 {
    let mut out = m;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

/// Every `m` with `phi(m) <= bound`, ascending. Since `phi(m) >= sqrt(m/2)`,
/// all such `m` are at most `2 * bound^2`.
pub fn orders_with_totient_at_most(bound: u64) -> Vec<u64> {
    (1..=2 * bound * bound)
        .filter(|&m| totient(m) <= bound)
        .collect()
}

/// Whether `Phi_m` divides `p` (equivalently `gcd(p, Phi_m) != 1`, as
/// `Phi_m` is irreducible).
pub fn shares_cyclotomic_factor(p: &IntPoly, m: u64) -> bool {
    if p.is_zero() {
        return true;
    }
    let phi = cyclotomic(m).expect("m > 0");
    !p.gcd(&phi).is_one()
}
