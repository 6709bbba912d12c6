//! Closed disks with exact rational centers and radii.

use num_bigint::{BigInt, Sign};
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type ComplexRational = Complex<BigRational>;

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn pow2(bits: u64) -> BigInt {
    BigInt::one() << bits
}

/// `2^-bits`
pub fn eps(bits: u64) -> BigRational {
    BigRational::new(BigInt::one(), pow2(bits))
}

/// Lower bound on `sqrt(q)` with `bits` fractional bits (`q >= 0`).
pub fn sqrt_lower(q: &BigRational, bits: u64) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let scaled = (q * BigRational::from_integer(pow2(2 * bits)))
        .floor()
        .to_integer();
    BigRational::new(scaled.sqrt(), pow2(bits))
}

/// Upper bound on `sqrt(q)` with `bits` fractional bits (`q >= 0`).
pub fn sqrt_upper(q: &BigRational, bits: u64) -> BigRational {
    if !q.is_positive() {
        return BigRational::zero();
    }
    let scaled = (q * BigRational::from_integer(pow2(2 * bits)))
        .ceil()
        .to_integer();
    BigRational::new(scaled.sqrt() + 1, pow2(bits))
}

/// Nearest multiple of `2^-bits`; the error is at most `2^-(bits+1)`.
pub fn round_dyadic(q: &BigRational, bits: u64) -> BigRational {
    let scaled = q * BigRational::from_integer(pow2(bits));
    BigRational::new(scaled.round().to_integer(), pow2(bits))
}

pub fn round_complex(z: &ComplexRational, bits: u64) -> ComplexRational {
    Complex::new(round_dyadic(&z.re, bits), round_dyadic(&z.im, bits))
}

pub fn norm_sqr(z: &ComplexRational) -> BigRational {
    &z.re * &z.re + &z.im * &z.im
}

pub fn conj(z: &ComplexRational) -> ComplexRational {
    Complex::new(z.re.clone(), -&z.im)
}

pub fn cdiv(a: &ComplexRational, b: &ComplexRational) -> ComplexRational {
    let d = norm_sqr(b);
    let num = a * conj(b);
    Complex::new(&num.re / &d, &num.im / &d)
}

/// Decimal rendering of a rational with `digits` digits after the point.
pub fn to_decimal(q: &BigRational, digits: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10), digits);
    let v = (q * BigRational::from_integer(scale.clone()))
        .round()
        .to_integer();
    let neg = v.sign() == Sign::Minus;
    let mag = v.abs();
    let int_part = &mag / &scale;
    let frac = &mag % &scale;
    let mut s = String::new();
    if neg && !mag.is_zero() {
        s.push('-');
    }
    s.push_str(&int_part.to_string());
    if digits > 0 {
        s.push('.');
        s.push_str(&format!("{:0>width$}", frac.to_string(), width = digits));
    }
    s
}

pub fn complex_to_decimal(z: &ComplexRational, digits: usize) -> String {
    let re = to_decimal(&z.re, digits);
    if z.im.is_zero() {
        return re;
    }
    let im = to_decimal(&z.im.abs(), digits);
    let sign = if z.im.is_negative() { '-' } else { '+' };
    format!("{re} {sign} {im}i")
}

/// Closed disk `|z - center| <= radius`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Disk {
    pub center: ComplexRational,
    pub radius: BigRational,
}

impl Disk {
    pub fn new(center: ComplexRational, radius: BigRational) -> Self {
        Disk { center, radius }
    }

    pub fn intersects(&self, other: &Disk) -> bool {
        let d = norm_sqr(&(&self.center - &other.center));
        let r = &self.radius + &other.radius;
        d <= &r * &r
    }

    pub fn contains(&self, z: &ComplexRational) -> bool {
        norm_sqr(&(&self.center - z)) <= &self.radius * &self.radius
    }

    /// Whether the disk meets the real segment `[lo, hi]`.
    pub fn meets_segment(&self, lo: &BigRational, hi: &BigRational) -> bool {
        let x = &self.center.re;
        let dx = if x < lo {
            lo - x
        } else if x > hi {
            x - hi
        } else {
            BigRational::zero()
        };
        &dx * &dx + &self.center.im * &self.center.im <= &self.radius * &self.radius
    }

    pub fn is_centered_on_real_axis(&self) -> bool {
        self.center.im.is_zero()
    }

    pub fn conj(&self) -> Disk {
        Disk::new(conj(&self.center), self.radius.clone())
    }

    /// Real interval enclosing `|z|^2` for every `z` in the disk.
    pub fn modulus_sq_bounds(&self, bits: u64) -> (BigRational, BigRational) {
        let c2 = norm_sqr(&self.center);
        let c_up = sqrt_upper(&c2, bits);
        let cross = rat(2) * &self.radius * &c_up;
        let lo = &c2 - &cross;
        let hi = &c2 + &cross + &self.radius * &self.radius;
        (
            if lo.is_negative() {
                BigRational::zero()
            } else {
                lo
            },
            hi,
        )
    }

    /// Lower bound on `|z|` over the disk (zero if it contains the origin).
    pub fn abs_lower(&self, bits: u64) -> BigRational {
        let l = sqrt_lower(&norm_sqr(&self.center), bits) - &self.radius;
        if l.is_negative() {
            BigRational::zero()
        } else {
            l
        }
    }

    /// Disk containing `conj(z) / z` for every `z` in this disk, or `None`
    /// if the disk is too close to the origin.
    pub fn conj_ratio(&self, bits: u64) -> Option<Disk> {
        let lower = self.abs_lower(bits);
        if !lower.is_positive() {
            return None;
        }
        // |a/b - a0/b0| <= (|a - a0| |b0| + |a0| |b - b0|) / (|b| |b0|)
        // with |a - a0| = |b - b0| <= r and |a0| = |b0| = |c|
        let radius = rat(2) * &self.radius / &lower;
        // rounding the center moves it by less than 2^-(bits+8)
        let center = cdiv(&conj(&self.center), &self.center);
        Some(Disk::new(
            round_complex(&center, bits + 8),
            radius + eps(bits + 7),
        ))
    }
}

impl std::fmt::Display for Disk {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{} ± {}",
            complex_to_decimal(&self.center, 12),
            to_decimal(&self.radius, 3)
        )
    }
}
