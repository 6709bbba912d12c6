//! Integer-coefficient polynomial algorithms: content, primitive gcd, and
//! squarefree decomposition.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::exact::poly::Poly;

impl Poly<BigInt> {
    /// Nonnegative gcd of the coefficients (zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        self.coeffs()
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    /// `self / content`, with positive leading coefficient.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().unwrap().sign() == Sign::Minus {
            c = -c;
        }
        self.div_scalar_exact(&c)
    }

    /// Greatest common divisor over the rationals, returned primitive with
    /// positive leading coefficient. `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = (self.primitive_part(), other.primitive_part());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.prem(&b);
            a = b;
            b = r.primitive_part();
        }
        if a.degree() == Some(0) {
            Self::one()
        } else {
            a
        }
    }

    /// Quotient when `d` divides `self` over the integers.
    pub fn exact_quotient(&self, d: &Self) -> Option<Self> {
        self.div_checked_poly(d)
    }

    /// Squarefree decomposition `p = c * prod f_i^i` (Yun). Returns the
    /// nonconstant factors `(f_i, i)`, each primitive with positive leading
    /// coefficient and pairwise coprime.
    pub fn squarefree_factors(&self) -> Vec<(Self, usize)> {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Vec::new();
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.exact_quotient(&a0).expect("gcd divides f");
        let c = df.exact_quotient(&a0).expect("gcd divides f'");
        let mut d = &c - &b.derivative();
        let mut out = Vec::new();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.exact_quotient(&a).expect("gcd divides b");
            let c = d.exact_quotient(&a).expect("gcd divides d");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// Product of the distinct irreducible factors: `p / gcd(p, p')`, primitive.
    pub fn squarefree_part(&self) -> Self {
        let f = self.primitive_part();
        if f.degree().unwrap_or(0) == 0 {
            return Self::one();
        }
        let g = f.gcd(&f.derivative());
        f.exact_quotient(&g)
            .expect("gcd divides f")
            .primitive_part()
    }

    pub fn to_rational(&self) -> Poly<BigRational> {
        self.map(|c| BigRational::from_integer(c.clone()))
    }

    /// Sign of `p` at a rational point.
    pub fn sign_at(&self, x: &BigRational) -> Sign {
        let v = self.eval_with(x, |c| BigRational::from_integer(c.clone()));
        if v.is_zero() {
            Sign::NoSign
        } else if v.is_positive() {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// True when `self == +-other`.
    pub fn eq_up_to_sign(&self, other: &Self) -> bool {
        self == other || *self == -other
    }

    /// Sum of squared coefficients.
    pub fn norm2_squared(&self) -> BigInt {
        self.coeffs().iter().map(|c| c * c).sum()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs().len() == 1 && self.coeffs()[0].is_one()
    }
}
