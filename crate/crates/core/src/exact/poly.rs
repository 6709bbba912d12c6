//! Dense univariate polynomials over a [`Ring`].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::scalar::{Domain, Ring};

/// Dense polynomial, coefficients in ascending degree.
///
/// Always canonical: the last stored coefficient is nonzero, and the zero
/// polynomial has no coefficients at all.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> Poly<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| T::from_i64(c)).collect())
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c * x^deg`
    pub fn monomial(c: T, deg: usize) -> Self {
        let mut coeffs = vec![T::zero(); deg + 1];
        coeffs[deg] = c;
        Self::new(coeffs)
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Coefficient of `x^i` (zero past the degree).
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&T> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &T) -> T {
        self.coeffs
            .iter()
            .rev()
            .fold(T::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    /// Horner evaluation at a point of another ring, lifting coefficients
    /// through `lift`.
    pub fn eval_with<U: Ring>(&self, x: &U, lift: impl Fn(&T) -> U) -> U {
        self.coeffs
            .iter()
            .rev()
            .fold(U::zero(), |acc, c| acc * x.clone() + lift(c))
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Poly<U> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| T::from_i64(i as i64) * c.clone())
                .collect(),
        )
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// `x^deg * p(1/x)`; the coefficient list read backwards.
    pub fn reversed(&self) -> Self {
        Self::new(self.coeffs.iter().rev().cloned().collect())
    }

    /// `p(-x)`
    pub fn negate_var(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c.clone() } else { c.clone() })
                .collect(),
        )
    }

    /// `p(x^k)`
    pub fn inflate(&self, k: usize) -> Self {
        assert!(k >= 1);
        let Some(d) = self.degree() else {
            return Self::zero();
        };
        let mut coeffs = vec![T::zero(); d * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Multiplicity of `x` as a factor.
    pub fn trailing_zeros(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// `p / x^k`, dropping the low coefficients.
    pub fn shift_down(&self, k: usize) -> Self {
        Self::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn pow(&self, e: usize) -> Self {
        Ring::pow_usize(self, e)
    }

    /// Pseudo-remainder: `lc(d)^(deg self - deg d + 1) * self mod d`.
    pub fn prem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo-division by zero polynomial");
        let Some(ds) = self.degree() else {
            return Self::zero();
        };
        if ds < dd {
            return self.clone();
        }
        let lc = d.leading().unwrap().clone();
        let mut r = self.coeffs.clone();
        let mut steps = ds - dd + 1;
        while r.len() > dd && !r.is_empty() {
            let top = r.len() - 1;
            let t = r[top].clone();
            for c in r.iter_mut() {
                *c = c.clone() * lc.clone();
            }
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - t.clone() * dc.clone();
            }
            debug_assert!(r[top].is_zero());
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
            steps -= 1;
        }
        let rem = Self::new(r);
        if steps > 0 {
            rem.scale(&lc.pow_usize(steps))
        } else {
            rem
        }
    }
}

impl<T: Domain> Poly<T> {
    /// Quotient when `d` divides `self` exactly, `None` otherwise.
    pub fn div_checked_poly(&self, d: &Self) -> Option<Self> {
        let dd = d.degree()?;
        let Some(ds) = self.degree() else {
            return Some(Self::zero());
        };
        if ds < dd {
            return None;
        }
        let lc = d.leading().unwrap();
        let mut r = self.coeffs.clone();
        let mut q = vec![T::zero(); ds - dd + 1];
        for top in (dd..=ds).rev() {
            if r[top].is_zero() {
                continue;
            }
            let t = r[top].div_checked(lc)?;
            let shift = top - dd;
            for (i, dc) in d.coeffs.iter().enumerate() {
                r[shift + i] = r[shift + i].clone() - t.clone() * dc.clone();
            }
            q[shift] = t;
        }
        r.iter().all(|c| c.is_zero()).then(|| Self::new(q))
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub fn div_scalar_exact(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.div_exact(c)).collect())
    }
}

impl<T: Ring> Zero for Poly<T> {
    fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<T: Ring> One for Poly<T> {
    fn one() -> Self {
        Poly {
            coeffs: vec![T::one()],
        }
    }
}

impl<T: Ring> Add for &Poly<T> {
    type Output = Poly<T>;

    fn add(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Sub for &Poly<T> {
    type Output = Poly<T>;

    fn sub(self, rhs: &Poly<T>) -> Poly<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<T: Ring> Mul for &Poly<T> {
    type Output = Poly<T>;

    fn mul(self, rhs: &Poly<T>) -> Poly<T> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<T: Ring> Neg for &Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident::$m:ident),*) => {$(
        impl<T: Ring> $tr for Poly<T> {
            type Output = Poly<T>;
            fn $m(self, rhs: Poly<T>) -> Poly<T> {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl<T: Ring> Neg for Poly<T> {
    type Output = Poly<T>;

    fn neg(self) -> Poly<T> {
        -&self
    }
}

impl<T: Ring> Ring for Poly<T> {
    fn from_i64(v: i64) -> Self {
        Poly::constant(T::from_i64(v))
    }
}

impl<T: Domain> Domain for Poly<T> {
    fn div_checked(&self, rhs: &Self) -> Option<Self> {
        self.div_checked_poly(rhs)
    }
}

impl<T: Ring + fmt::Display + PartialOrd> Poly<T> {
    /// Renders with the given variable name, highest degree first.
    pub fn display_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let zero = T::zero();
        let one = T::one();
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = *c < zero;
            let mag = if neg { -c.clone() } else { c.clone() };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = i == 0 || mag != one;
            if show_coeff {
                out.push_str(&mag.to_string());
            }
            match i {
                0 => {}
                1 => out.push_str(var),
                _ => {
                    out.push_str(var);
                    out.push('^');
                    out.push_str(&i.to_string());
                }
            }
        }
        out
    }
}

impl<T: Ring + fmt::Display + PartialOrd> fmt::Display for Poly<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_var("x"))
    }
}
