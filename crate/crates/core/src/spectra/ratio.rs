//! Resultant constructions over the eigenvalues of an integer polynomial.

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exact::cyclotomic::{cyclotomic, orders_with_totient_at_most};
use crate::exact::resultant::lift_to_y;
use crate::exact::resultant_in_y;
use crate::{BiPoly, IntPoly};

/// `p = c * prod f_i^(m_i)` with pairwise coprime squarefree `f_i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SquarefreeDecomposition {
    /// `prod f_i`, primitive with positive leading coefficient.
    pub part: IntPoly,
    /// `(f_i, m_i)` by increasing multiplicity.
    pub factors: Vec<(IntPoly, usize)>,
}

impl SquarefreeDecomposition {
    /// Multiplicity of `x` as a root of the original polynomial.
    pub fn multiplicity_at(&self, x: &BigRational) -> usize {
        self.factors
            .iter()
            .find(|(f, _)| f.sign_at(x) == Sign::NoSign)
            .map_or(0, |(_, m)| *m)
    }

    pub fn total_degree(&self) -> usize {
        self.factors
            .iter()
            .map(|(f, m)| f.degree().unwrap_or(0) * m)
            .sum()
    }
}

pub fn squarefree_part(p: &IntPoly) -> SquarefreeDecomposition {
    let factors = p.squarefree_factors();
    let part = factors
        .iter()
        .fold(IntPoly::one(), |acc, (f, _)| &acc * f)
        .primitive_part();
    SquarefreeDecomposition { part, factors }
}

fn nonzero_constant_term(p: &IntPoly) -> Result<usize> {
    let k = p.degree().unwrap_or(0);
    if k == 0 {
        return Err(Error::InvalidArgument(
            "polynomial must have degree >= 1".into(),
        ));
    }
    if p.coeff(0).is_zero() {
        return Err(Error::InvalidArgument("polynomial vanishes at 0".into()));
    }
    Ok(k)
}

fn positive_leading(p: IntPoly) -> IntPoly {
    match p.leading() {
        Some(c) if c.is_negative() => -p,
        _ => p,
    }
}

/// `(full, reduced)`: `full = Res_y(p(y), p(xy))` has the ratios
/// `lambda_i / lambda_j` as roots, and `reduced = full / (x - 1)^k`.
/// Both are scaled to a positive leading coefficient.
pub fn ratio_polynomial(p: &IntPoly) -> Result<(IntPoly, IntPoly)> {
    let k = nonzero_constant_term(p)?;
    let scaled: BiPoly = BiPoly::new(
        p.coeffs()
            .iter()
            .enumerate()
            .map(|(i, c)| IntPoly::monomial(c.clone(), i))
            .collect(),
    );
    let full = positive_leading(resultant_in_y(&lift_to_y(p), &scaled));
    let diag = IntPoly::from_i64s(&[-1, 1]).pow(k);
    let reduced = full
        .exact_quotient(&diag)
        .expect("diagonal ratios divide the ratio polynomial");
    Ok((full, reduced))
}

/// `Res_y(p(y), y^k p(z/y))`, whose roots are the products
/// `lambda_i lambda_j`.
pub fn product_polynomial(p: &IntPoly) -> Result<IntPoly> {
    let k = nonzero_constant_term(p)?;
    let mut coeffs = vec![IntPoly::zero(); k + 1];
    for (i, c) in p.coeffs().iter().enumerate() {
        coeffs[k - i] = IntPoly::monomial(c.clone(), i);
    }
    Ok(positive_leading(resultant_in_y(
        &lift_to_y(p),
        &BiPoly::new(coeffs),
    )))
}

/// Orders `m` of the primitive roots of unity among the ratio polynomial's
/// off-diagonal roots, ascending.
pub fn unity_ratio_orders(p: &IntPoly) -> Result<Vec<u64>> {
    let k = nonzero_constant_term(p)? as u64;
    let (_, reduced) = ratio_polynomial(p)?;
    Ok(cyclotomic_orders(&reduced, k * k))
}

/// Every `m` with `phi(m) <= bound` such that `Phi_m` divides `p`.
pub(crate) fn cyclotomic_orders(p: &IntPoly, bound: u64) -> Vec<u64> {
    if p.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    orders_with_totient_at_most(bound)
        .into_iter()
        .filter(|&m| {
            let phi = cyclotomic(m).expect("m > 0");
            !p.gcd(&phi).is_one()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::IntMatrix;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn eval_int(p: &IntPoly, x: i64) -> BigInt {
        p.eval(&BigInt::from(x))
    }

    #[test]
    fn squarefree_examples() {
        let d = squarefree_part(&p(&[1, -2, 1]));
        assert_eq!(d.part, p(&[-1, 1]));
        assert_eq!(d.multiplicity_at(&BigRational::one()), 2);

        let f = p(&[-1, 1, 1, 1]);
        let d = squarefree_part(&f);
        assert_eq!(d.part, f);
        assert!(d.factors.iter().all(|(_, m)| *m == 1));

        // t^2 (t - 1)
        let d = squarefree_part(&p(&[0, 0, -1, 1]));
        assert_eq!(d.part, p(&[0, -1, 1]));
        assert_eq!(d.multiplicity_at(&BigRational::zero()), 2);
        assert_eq!(d.multiplicity_at(&BigRational::one()), 1);
        assert_eq!(d.total_degree(), 3);
    }

    #[test]
    fn ratio_examples() {
        let (full, reduced) = ratio_polynomial(&p(&[1, 0, 1])).unwrap();
        assert_eq!(full, p(&[-1, 0, 1]).pow(2));
        assert_eq!(reduced, p(&[1, 1]).pow(2));

        let (_, reduced) = ratio_polynomial(&p(&[3, -2, 1])).unwrap();
        assert_eq!(reduced.primitive_part(), p(&[3, 2, 3]));
        assert_eq!(reduced.degree(), Some(2));

        let (_, reduced) = ratio_polynomial(&p(&[6, -5, 1])).unwrap();
        assert_eq!(reduced.primitive_part(), p(&[6, -13, 6]));

        assert!(ratio_polynomial(&p(&[0, 1, 1])).is_err());
        assert!(ratio_polynomial(&p(&[4])).is_err());
    }

    #[test]
    fn unity_order_examples() {
        assert_eq!(unity_ratio_orders(&p(&[1, 0, 1])).unwrap(), vec![2]);
        assert_eq!(
            unity_ratio_orders(&p(&[3, -2, 1])).unwrap(),
            Vec::<u64>::new()
        );
        assert_eq!(
            unity_ratio_orders(&p(&[-1, 1, 1, 1])).unwrap(),
            Vec::<u64>::new()
        );
        // t^2 + t + 1: ratios are primitive cube roots of unity
        assert_eq!(unity_ratio_orders(&p(&[1, 1, 1])).unwrap(), vec![3]);
    }

    #[test]
    fn product_polynomial_roots() {
        // roots 2, 3: products 4, 6, 6, 9
        let q = product_polynomial(&p(&[6, -5, 1])).unwrap();
        let expect = &(&p(&[-4, 1]) * &p(&[-6, 1]).pow(2)) * &p(&[-9, 1]);
        assert!(q.primitive_part().eq_up_to_sign(&expect));
        // +-i: products -1, 1, 1, -1
        let q = product_polynomial(&p(&[1, 0, 1])).unwrap();
        assert_eq!(q.squarefree_part(), p(&[-1, 0, 1]));
    }

    fn small_matrix(k: usize) -> impl Strategy<Value = IntMatrix> {
        proptest::collection::vec(-3i64..=3, k * k).prop_filter_map("singular", move |v| {
            let m = IntMatrix::from_fn(k, |i, j| BigInt::from(v[i * k + j]));
            m.require_full_rank().ok().map(|_| m)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn ratio_structure(a in (1usize..=4).prop_flat_map(small_matrix)) {
            let k = a.dim();
            let chi = a.char_poly();
            let (full, reduced) = ratio_polynomial(&chi).unwrap();
            prop_assert_eq!(full.degree(), Some(k * k));
            let one = p(&[-1, 1]);
            prop_assert!(full.exact_quotient(&one.pow(k)).is_some());
            prop_assert!(reduced.reversed().eq_up_to_sign(&reduced));
            prop_assert_eq!(eval_int(&chi, 0).abs(), a.det().abs());
        }

        #[test]
        fn unity_orders_invariant_under_reversal(
            c in proptest::collection::vec(-4i64..=4, 2..=5)
        ) {
            let f = p(&c);
            prop_assume!(f.degree().unwrap_or(0) >= 1 && !f.coeff(0).is_zero());
            let r = f.reversed();
            prop_assert_eq!(unity_ratio_orders(&f).unwrap(), unity_ratio_orders(&r).unwrap());
        }

        #[test]
        fn full_rank_matrices_have_nonzero_constant_term(a in small_matrix(3)) {
            prop_assert!(!a.char_poly().coeff(0).is_zero());
        }
    }
}
