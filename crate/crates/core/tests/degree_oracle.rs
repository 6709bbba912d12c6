mod support;

use monodeg::degree::{degree, degree_sequence, dual_degree_sequence, Powers};
use monodeg::IntMatrix;
use proptest::prelude::*;
use support::{homogenized_degree, random_full_rank, random_matrix, rng};

#[test]
fn degree_matches_homogenization_on_random_matrices() {
    let mut r = rng(11);
    for k in 1..=5 {
        for _ in 0..40 {
            let a = random_matrix(&mut r, k, 5);
            if a.is_zero() {
                continue;
            }
            assert_eq!(degree(&a).unwrap(), homogenized_degree(&a), "A = {a}");
        }
    }
}

#[test]
fn sequences_match_homogenization_of_powers() {
    let mut r = rng(12);
    for k in 2..=4 {
        for _ in 0..10 {
            let a = random_full_rank(&mut r, k, 3);
            let seq = degree_sequence(&a, 15).unwrap();
            for (n, p) in Powers::new(a.clone()).take(15).enumerate() {
                assert_eq!(
                    seq.terms[n],
                    homogenized_degree(&p),
                    "A = {a}, n = {}",
                    n + 1
                );
            }
        }
    }
}

#[test]
fn dual_sequence_is_the_inverse_sequence() {
    let mut r = rng(13);
    for _ in 0..20 {
        let a = support::random_unimodular(&mut r, 3, 12);
        let inv = a.inverse_unimodular().unwrap();
        let dual = dual_degree_sequence(&a, 12).unwrap();
        for (n, p) in Powers::new(inv).take(12).enumerate() {
            assert_eq!(dual.terms[n], homogenized_degree(&p));
        }
    }
}

fn matrix(k: usize) -> impl Strategy<Value = IntMatrix> {
    proptest::collection::vec(-6i64..=6, k * k)
        .prop_map(move |v| IntMatrix::from_fn(k, |i, j| v[i * k + j].into()))
        .prop_filter("zero matrix", |m| !m.is_zero())
}

proptest! {
    #[test]
    fn oracle_agrees(a in (1usize..=4).prop_flat_map(matrix)) {
        prop_assert_eq!(degree(&a).unwrap(), homogenized_degree(&a));
    }
}
