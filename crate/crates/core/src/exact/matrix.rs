//! Square matrices over a [`Ring`].

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::poly::Poly;
use crate::scalar::{Domain, Ring};

/// A `k x k` matrix stored row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix<T> {
    k: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let k = rows.len();
        if k == 0 {
            return Err(Error::Empty);
        }
        let mut data = Vec::with_capacity(k * k);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != k {
                return Err(Error::NotSquare {
                    row,
                    len: r.len(),
                    expected: k,
                });
            }
            data.extend(r);
        }
        Ok(Matrix { k, data })
    }

    /// Builds from a fixed-size integer literal.
    pub fn from_i64<const N: usize>(rows: [[i64; N]; N]) -> Self {
        assert!(N > 0, "empty matrix literal");
        Matrix {
            k: N,
            data: rows.iter().flatten().map(|&v| T::from_i64(v)).collect(),
        }
    }

    pub fn from_fn(k: usize, f: impl Fn(usize, usize) -> T) -> Self {
        assert!(k > 0);
        Matrix {
            k,
            data: (0..k * k).map(|i| f(i / k, i % k)).collect(),
        }
    }

    pub fn identity(k: usize) -> Self {
        Self::from_fn(k, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn dim(&self) -> usize {
        self.k
    }

    /// Entry at row `i`, column `j` (zero-based).
    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.k + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.k..(i + 1) * self.k]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.k)
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    pub fn map<U: Ring>(&self, f: impl Fn(&T) -> U) -> Matrix<U> {
        Matrix {
            k: self.k,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.k, |i, j| self.get(j, i).clone())
    }

    pub fn trace(&self) -> T {
        (0..self.k).fold(T::zero(), |acc, i| acc + self.get(i, i).clone())
    }

    pub fn scale(&self, c: &T) -> Self {
        self.map(|v| v.clone() * c.clone())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        Ok(Matrix {
            k: self.k,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.check_dim(rhs)?;
        let k = self.k;
        let mut data = vec![T::zero(); k * k];
        for i in 0..k {
            for l in 0..k {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..k {
                    let idx = i * k + j;
                    data[idx] = data[idx].clone() + a.clone() * rhs.get(l, j).clone();
                }
            }
        }
        Ok(Matrix { k, data })
    }

    /// `self^n` by binary powering; `self^0` is the identity.
    pub fn pow(&self, mut n: u64) -> Self {
        let mut acc = Self::identity(self.k);
        let mut base = self.clone();
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base).expect("same dimension");
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base).expect("same dimension");
            }
        }
        acc
    }

    /// Evaluates a polynomial at this matrix (Horner).
    pub fn eval_poly(&self, p: &Poly<T>) -> Self {
        let zero = Self::from_fn(self.k, |_, _| T::zero());
        p.coeffs().iter().rev().fold(zero, |acc, c| {
            acc.mul(self)
                .expect("same dimension")
                .add(&Self::identity(self.k).scale(c))
                .expect("same dimension")
        })
    }

    fn check_dim(&self, rhs: &Self) -> Result<()> {
        if self.k != rhs.k {
            return Err(Error::DimensionMismatch {
                left: self.k,
                right: rhs.k,
            });
        }
        Ok(())
    }
}

impl<T: Domain> Matrix<T> {
    /// Determinant by Bareiss fraction-free elimination.
    pub fn det(&self) -> T {
        let k = self.k;
        let mut m: Vec<Vec<T>> = self.rows().map(|r| r.to_vec()).collect();
        let mut sign_flip = false;
        let mut prev = T::one();
        for p in 0..k {
            if m[p][p].is_zero() {
                match (p + 1..k).find(|&r| !m[r][p].is_zero()) {
                    Some(r) => {
                        m.swap(p, r);
                        sign_flip = !sign_flip;
                    }
                    None => return T::zero(),
                }
            }
            for i in p + 1..k {
                for j in p + 1..k {
                    let num = m[i][j].clone() * m[p][p].clone() - m[i][p].clone() * m[p][j].clone();
                    m[i][j] = num.div_exact(&prev);
                }
            }
            prev = m[p][p].clone();
        }
        let d = m[k - 1][k - 1].clone();
        if sign_flip {
            -d
        } else {
            d
        }
    }

    /// Characteristic polynomial `det(tI - A)` and the adjugate of `A`, by
    /// Faddeev-LeVerrier. Divisions by `m = 1..k` are exact over the
    /// integers.
    pub fn char_poly_and_adjugate(&self) -> (Poly<T>, Self) {
        let k = self.k;
        let mut coeffs = vec![T::zero(); k + 1];
        coeffs[k] = T::one();
        let mut m = Self::from_fn(k, |_, _| T::zero());
        for step in 1..=k {
            m = self
                .mul(&m)
                .and_then(|am| am.add(&Self::identity(k).scale(&coeffs[k - step + 1])))
                .expect("same dimension");
            let tr = self.mul(&m).expect("same dimension").trace();
            coeffs[k - step] = -tr.div_exact(&T::from_i64(step as i64));
        }
        let adj = if k % 2 == 1 { m } else { m.scale(&-T::one()) };
        (Poly::new(coeffs), adj)
    }

    pub fn char_poly(&self) -> Poly<T> {
        self.char_poly_and_adjugate().0
    }
}

impl Matrix<BigInt> {
    /// Exact inverse of a matrix with determinant `+-1`.
    pub fn inverse_unimodular(&self) -> Result<Self> {
        let (cp, adj) = self.char_poly_and_adjugate();
        // det(A) = (-1)^k * chi(0)
        let c0 = cp.coeff(0);
        let det = if self.k.is_multiple_of(2) { c0 } else { -c0 };
        if !det.abs().is_one() {
            return Err(Error::NotUnimodular {
                det: det.to_string(),
            });
        }
        Ok(adj.scale(&det))
    }

    /// Rejects singular matrices; returns the determinant otherwise.
    pub fn require_full_rank(&self) -> Result<BigInt> {
        let d = self.det();
        if d.is_zero() {
            if self.is_zero() {
                return Err(Error::ZeroMatrix);
            }
            return Err(Error::RankDeficient);
        }
        Ok(d)
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        use num_traits::ToPrimitive;
        self.rows()
            .map(|r| r.iter().map(|v| v.to_i64()).collect())
            .collect()
    }
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.data.chunks(self.k).enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, v) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{v}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}
