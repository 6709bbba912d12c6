//! Resultants by the subresultant polynomial remainder sequence.
//!
//! Convention: `res(f, g) = lc(f)^deg(g) * prod g(a)` over the roots `a` of
//! `f`, i.e. the determinant of the Sylvester matrix with the coefficients
//! of `f` in the first `deg g` rows. Callers here only ask whether the
//! resultant vanishes or where its roots lie, so any fixed unit
//! convention would do; this one matches the textbook determinant.

use num_traits::Zero;

use crate::exact::poly::Poly;
use crate::scalar::Domain;
use crate::{BiPoly, IntPoly};

/// Resultant of two polynomials over an integral domain.
pub fn resultant<T: Domain>(f: &Poly<T>, g: &Poly<T>) -> T {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return T::zero();
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut negate = false;
    if df < dg {
        std::mem::swap(&mut a, &mut b);
        if df % 2 == 1 && dg % 2 == 1 {
            negate = true;
        }
    }
    let signed = |v: T, neg: bool| if neg { -v } else { v };

    let da = a.degree().unwrap();
    if b.degree() == Some(0) {
        return signed(b.leading().unwrap().pow_usize(da), negate);
    }

    let mut g_acc = T::one();
    let mut h = T::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.prem(&b);
        a = b;
        if r.is_zero() {
            return T::zero();
        }
        b = r.div_scalar_exact(&(g_acc.clone() * h.pow_usize(delta)));
        g_acc = a.leading().unwrap().clone();
        if delta > 0 {
            h = g_acc.pow_usize(delta).div_exact(&h.pow_usize(delta - 1));
        }
        if b.degree() == Some(0) {
            let da = a.degree().unwrap();
            let res = b
                .leading()
                .unwrap()
                .pow_usize(da)
                .div_exact(&h.pow_usize(da - 1));
            return signed(res, negate);
        }
    }
}

/// `Res_y(f, g)` for bivariate integer polynomials stored as polynomials in
/// `y` whose coefficients are polynomials in `x`.
pub fn resultant_in_y(f: &BiPoly, g: &BiPoly) -> IntPoly {
    resultant(f, g)
}

/// Lifts a univariate polynomial in `y` to a bivariate one with constant
/// coefficients in `x`.
pub fn lift_to_y(p: &IntPoly) -> BiPoly {
    p.map(|c| IntPoly::constant(c.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{IntMatrix, IntPoly};
    use num_bigint::BigInt;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    /// Sylvester determinant, computed with Bareiss over the coefficient domain.
    fn sylvester<T: Domain>(f: &Poly<T>, g: &Poly<T>) -> T {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let size = m + n;
        let mut rows = Vec::new();
        for i in 0..n {
            let mut row = vec![T::zero(); size];
            for (j, c) in f.coeffs().iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        for i in 0..m {
            let mut row = vec![T::zero(); size];
            for (j, c) in g.coeffs().iter().rev().enumerate() {
                row[i + j] = c.clone();
            }
            rows.push(row);
        }
        crate::exact::matrix::Matrix::from_rows(rows).unwrap().det()
    }

    #[test]
    fn scalar_resultant_matches_sylvester() {
        let cases = [
            (p(&[-1, 1, 1, 1]), p(&[-1, -1, -1, 1])),
            (p(&[1, 0, 1]), p(&[1, -1, 1])),
            (p(&[3, -2, 5, 7, 1]), p(&[2, 9])),
            (p(&[6, -5, 1]), p(&[-2, 1])),
            (p(&[0, 1, 2, 3, 4, 5]), p(&[1, 1, 0, 1])),
        ];
        for (f, g) in cases {
            assert_eq!(resultant(&f, &g), sylvester(&f, &g), "{f} / {g}");
            assert_eq!(resultant(&g, &f), sylvester(&g, &f), "{g} / {f}");
        }
    }

    #[test]
    fn common_root_gives_zero() {
        let f = &p(&[-2, 1]) * &p(&[1, 0, 1]);
        let g = &p(&[-2, 1]) * &p(&[5, 3]);
        assert_eq!(resultant(&f, &g), BigInt::from(0));
    }

    #[test]
    fn res_y_of_y2_plus_1_and_xy_squared_plus_1() {
        let f = lift_to_y(&p(&[1, 0, 1]));
        // (xy)^2 + 1: coefficient of y^2 is x^2
        let g = BiPoly::new(vec![p(&[1]), p(&[]), p(&[0, 0, 1])]);
        let r = resultant_in_y(&f, &g);
        let expect = p(&[-1, 0, 1]).pow(2);
        assert!(r.eq_up_to_sign(&expect), "{r}");
        assert_eq!(r, sylvester(&f, &g));
    }

    #[test]
    fn res_y_degree_one_and_constant() {
        // Res_y(y - 3, y^2 + x) = 9 + x
        let f = lift_to_y(&p(&[-3, 1]));
        let g = BiPoly::new(vec![p(&[0, 1]), p(&[]), p(&[1])]);
        assert_eq!(resultant_in_y(&f, &g), p(&[9, 1]));
        // Res_y(f, c) = c^deg f
        let f = lift_to_y(&p(&[1, 2, 3]));
        let c = BiPoly::new(vec![p(&[0, 2])]);
        assert_eq!(resultant_in_y(&f, &c), p(&[0, 0, 4]));
    }

    #[test]
    fn sylvester_oracle_bivariate() {
        let f = BiPoly::new(vec![p(&[1, 1]), p(&[0, 2]), p(&[3])]);
        let g = BiPoly::new(vec![p(&[-1]), p(&[0, 0, 1]), p(&[1]), p(&[2, 1])]);
        assert_eq!(resultant_in_y(&f, &g), sylvester(&f, &g));
        let _ = IntMatrix::identity(1);
    }
}
