//! Independent oracles and corpus generators shared by the integration tests.
#![allow(dead_code)]

use monodeg::{IntMatrix, Matrix, Rational};
use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Degree of the iterate computed from the map itself: write each
/// coordinate `prod_j (x_j / x_0)^{a_ij}` of the homogeneous form as a
/// Laurent monomial in `x_0..x_k`, clear denominators with the least common
/// monomial multiple, and read off the common total degree.
pub fn homogenized_degree(a: &IntMatrix) -> BigInt {
    let k = a.dim();
    // exponent vectors over x_0..x_k; coordinate 0 is the constant 1
    let mut coords: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); k + 1]];
    for i in 0..k {
        let mut e = vec![BigInt::zero(); k + 1];
        for j in 0..k {
            e[j + 1] += a.get(i, j);
            e[0] -= a.get(i, j);
        }
        coords.push(e);
    }
    for v in 0..=k {
        let low = coords.iter().map(|c| c[v].clone()).min().unwrap();
        for c in &mut coords {
            c[v] -= &low;
        }
    }
    let degrees: Vec<BigInt> = coords.iter().map(|c| c.iter().sum()).collect();
    assert!(
        degrees.iter().all(|d| *d == degrees[0]),
        "coordinates not homogeneous"
    );
    for v in 0..=k {
        assert!(coords.iter().any(|c| c[v].is_zero()), "common factor left");
    }
    degrees[0].clone()
}

/// Order of the shortest linear recurrence satisfied by the whole of
/// `seq`, from Hankel ranks: the least `L` such that the `L+1` columns
/// `(s_i, .., s_{i+L})`, `i < len - L`, are dependent.
pub fn hankel_order(seq: &[BigInt]) -> Option<usize> {
    let len = seq.len();
    for order in 0..=len / 2 {
        let rows = len - order;
        if rows < order + 1 {
            return None;
        }
        let m: Vec<Vec<Rational>> = (0..rows)
            .map(|i| {
                (0..=order)
                    .map(|j| Rational::from_integer(seq[i + j].clone()))
                    .collect()
            })
            .collect();
        if rank(m) <= order {
            return Some(order);
        }
    }
    None
}

fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[r][c];
                let pivot = m[r].clone();
                for (x, y) in m[i][c..cols].iter_mut().zip(&pivot[c..cols]) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut StdRng, k: usize, bound: i64) -> IntMatrix {
    let v: Vec<i64> = (0..k * k).map(|_| rng.gen_range(-bound..=bound)).collect();
    Matrix::from_fn(k, |i, j| BigInt::from(v[i * k + j]))
}

/// A random matrix of full rank.
pub fn random_full_rank(rng: &mut StdRng, k: usize, bound: i64) -> IntMatrix {
    loop {
        let m = random_matrix(rng, k, bound);
        if m.require_full_rank().is_ok() {
            return m;
        }
    }
}

/// A random matrix with determinant +-1, built from elementary operations.
pub fn random_unimodular(rng: &mut StdRng, k: usize, steps: usize) -> IntMatrix {
    let mut m: Vec<Vec<i64>> = (0..k)
        .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
        .collect();
    for _ in 0..steps {
        let (i, j) = (rng.gen_range(0..k), rng.gen_range(0..k));
        match rng.gen_range(0..3) {
            0 if i != j => {
                let c = rng.gen_range(-1..=1);
                let src = m[j].clone();
                for (x, y) in m[i].iter_mut().zip(&src) {
                    *x += c * y;
                }
            }
            1 => m.swap(i, j),
            _ => m[i].iter_mut().for_each(|x| *x = -*x),
        }
        if m.iter().flatten().any(|x| x.abs() > 4) {
            m = (0..k)
                .map(|i| (0..k).map(|j| i64::from(i == j)).collect())
                .collect();
        }
    }
    Matrix::from_fn(k, |i, j| BigInt::from(m[i][j]))
}

/// The corpus used by the corpus-wide verdict properties: 300 matrices of
/// full rank, `k` cycling through 1..=4, entries in `[-3, 3]`.
pub fn verdict_corpus() -> Vec<IntMatrix> {
    let mut r = rng(0x5eed_0001);
    (0..300)
        .map(|i| random_full_rank(&mut r, 1 + i % 4, 3))
        .collect()
}

pub fn is_nonnegative(x: &BigInt) -> bool {
    !x.is_negative()
}
