mod support;

use monodeg::spectra::ball::{eps, norm_sqr, sqrt_upper};
use monodeg::spectra::{isolate_roots, spectral_summary, spectral_summary_with_cap};
use monodeg::{IntPoly, Rational};
use num_complex::Complex;
use num_traits::{Signed, Zero};
use support::{random_full_rank, rng};

type C = Complex<Rational>;

fn eval(p: &IntPoly, z: &C) -> C {
    p.coeffs()
        .iter()
        .rev()
        .fold(C::new(Rational::zero(), Rational::zero()), |acc, c| {
            acc * z + C::new(Rational::from_integer(c.clone()), Rational::zero())
        })
}

/// `|p(c_i)| <= |a| r_i prod_{j != i} (|c_i - c_j| + r_j)` for every box:
/// `p(c_i) = a prod_j (c_i - lambda_j)` with each `lambda_j` in box `j`.
#[test]
fn residuals_respect_the_boxes() {
    let mut r = rng(41);
    for k in 2..=4 {
        for _ in 0..8 {
            let chi = random_full_rank(&mut r, k, 3).char_poly().squarefree_part();
            let boxes = isolate_roots(&chi, &eps(60)).unwrap();
            assert_eq!(boxes.len(), chi.degree().unwrap());
            let lead = Rational::from_integer(chi.leading().unwrap().abs());
            for (i, b) in boxes.iter().enumerate() {
                let mut bound = &lead * &b.radius;
                for (_, o) in boxes.iter().enumerate().filter(|(j, _)| *j != i) {
                    bound *= sqrt_upper(&norm_sqr(&(&b.center - &o.center)), 80) + &o.radius;
                }
                assert!(norm_sqr(&eval(&chi, &b.center)) <= &bound * &bound);
            }
        }
    }
}

#[test]
fn doubling_precision_shrinks_boxes() {
    let mut r = rng(42);
    for k in 2..=4 {
        for _ in 0..5 {
            let chi = random_full_rank(&mut r, k, 3).char_poly().squarefree_part();
            let coarse = isolate_roots(&chi, &eps(40)).unwrap();
            let fine = isolate_roots(&chi, &eps(80)).unwrap();
            for (a, b) in coarse.iter().zip(&fine) {
                assert!(b.radius <= a.radius);
                assert!(a.disk().intersects(&b.disk()));
                assert_eq!(a.is_real, b.is_real);
            }
        }
    }
}

#[test]
fn summaries_are_certified_and_precision_independent() {
    let corpus = support::verdict_corpus();
    for a in corpus.iter().step_by(3) {
        let s = spectral_summary(a).unwrap();
        let k = a.dim();
        assert_eq!(s.roots.iter().map(|r| r.multiplicity).sum::<usize>(), k);
        assert_eq!(s.char_poly.coeff(0).abs(), a.det().abs());
        for i in 0..s.roots.len() {
            for j in i + 1..s.roots.len() {
                assert!(!s.roots[i].disk().intersects(&s.roots[j].disk()), "A = {a}");
            }
        }
        let classes: Vec<usize> = s
            .modulus_classes
            .iter()
            .flat_map(|c| c.members.clone())
            .collect();
        assert_eq!(classes.len(), s.roots.len());
        for (i, flag) in s.ratio_flags.iter().enumerate() {
            if let monodeg::spectra::RatioFlag::RootOfUnity(m) = flag {
                if !s.roots[i].is_real {
                    assert!(s.unity_orders.contains(m));
                }
            }
        }
        let t = spectral_summary_with_cap(a, 512).unwrap();
        assert_eq!(s.modulus_classes.len(), t.modulus_classes.len());
        for (x, y) in s.modulus_classes.iter().zip(&t.modulus_classes) {
            assert_eq!((&x.members, x.cmp_one), (&y.members, y.cmp_one));
        }
        assert_eq!(s.ratio_flags, t.ratio_flags);
    }
}
