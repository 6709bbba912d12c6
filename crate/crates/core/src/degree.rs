//! The degree formula and its linear pieces.
//!
//! For an exponent matrix `A` the iterate degree is
//!
//! ```text
//! D(A) = max(0, rowsum_1, ..., rowsum_k) + sum_j max(0, -a_1j, ..., -a_kj)
//! ```
//!
//! Picking one branch in each of the `k + 1` maxima gives a linear
//! functional `L_C`; `D` is the maximum of all `(k+1)^(k+1)` of them, and
//! the functionals that attain it at `A` are the cells containing `A`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::IntMatrix;

/// One branch choice per maximum in the degree formula.
///
/// `row_choice == 0` selects the constant 0 of the first maximum and
/// `row_choice == i` selects the sum of row `i` (1-based). Likewise
/// `column_choices[j] == 0` selects 0 for column `j` and `i` selects
/// `-a_{i,j}`. The derived ordering is lexicographic with the row choice
/// most significant.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct FunctionalIndex {
    pub row_choice: usize,
    pub column_choices: Vec<usize>,
}

impl FunctionalIndex {
    pub fn new(row_choice: usize, column_choices: Vec<usize>) -> Result<Self> {
        let k = column_choices.len();
        if k == 0 {
            return Err(Error::InvalidArgument(
                "functional index needs k >= 1".into(),
            ));
        }
        if row_choice > k || column_choices.iter().any(|&c| c > k) {
            return Err(Error::InvalidArgument(format!(
                "functional index components must lie in 0..={k}"
            )));
        }
        Ok(FunctionalIndex {
            row_choice,
            column_choices,
        })
    }

    pub fn dim(&self) -> usize {
        self.column_choices.len()
    }

    /// All `k + 1` components, row choice first.
    pub fn components(&self) -> impl Iterator<Item = usize> + '_ {
        std::iter::once(self.row_choice).chain(self.column_choices.iter().copied())
    }
}

impl fmt::Display for FunctionalIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({};", self.row_choice)?;
        for (j, c) in self.column_choices.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// All functional indices for dimension `k`, in lexicographic order.
pub fn functional_set(k: usize) -> Vec<FunctionalIndex> {
    assert!(k >= 1, "dimension must be positive");
    let base = k + 1;
    let total = base.pow(base as u32);
    (0..total)
        .map(|mut code| {
            let mut digits = vec![0; base];
            for d in digits.iter_mut().rev() {
                *d = code % base;
                code /= base;
            }
            FunctionalIndex {
                row_choice: digits[0],
                column_choices: digits[1..].to_vec(),
            }
        })
        .collect()
}

/// `L_C(A)`.
pub fn functional_value(c: &FunctionalIndex, a: &IntMatrix) -> Result<BigInt> {
    let k = a.dim();
    if c.dim() != k {
        return Err(Error::DimensionMismatch {
            left: c.dim(),
            right: k,
        });
    }
    let mut v = match c.row_choice {
        0 => BigInt::zero(),
        i => a.row(i - 1).iter().sum(),
    };
    for (j, &choice) in c.column_choices.iter().enumerate() {
        if choice > 0 {
            v -= a.get(choice - 1, j);
        }
    }
    Ok(v)
}

/// Candidate values of each of the `k + 1` maxima, indexed by branch.
fn branch_values(a: &IntMatrix) -> Vec<Vec<BigInt>> {
    let k = a.dim();
    let mut out = Vec::with_capacity(k + 1);
    let mut first = vec![BigInt::zero()];
    first.extend(a.rows().map(|r| r.iter().sum::<BigInt>()));
    out.push(first);
    for j in 0..k {
        let mut col = vec![BigInt::zero()];
        col.extend((0..k).map(|i| -a.get(i, j)));
        out.push(col);
    }
    out
}

/// Per-maximum argmax branches and the attained maxima.
fn argmax_sets(a: &IntMatrix) -> (BigInt, Vec<Vec<usize>>) {
    let mut total = BigInt::zero();
    let mut sets = Vec::new();
    for vals in branch_values(a) {
        let max = vals.iter().max().expect("nonempty").clone();
        sets.push(
            vals.iter()
                .enumerate()
                .filter(|(_, v)| **v == max)
                .map(|(i, _)| i)
                .collect(),
        );
        total += max;
    }
    (total, sets)
}

fn reject_zero(a: &IntMatrix) -> Result<()> {
    if a.is_zero() {
        Err(Error::ZeroMatrix)
    } else {
        Ok(())
    }
}

/// `D(A)`, the degree of the homogenized monomial map.
pub fn degree(a: &IntMatrix) -> Result<BigInt> {
    reject_zero(a)?;
    Ok(argmax_sets(a).0)
}

/// Every functional attaining `D(A)`, in lexicographic order.
///
/// The attaining set is the product of the argmax sets of the individual
/// maxima, so it is enumerated directly rather than by scanning all
/// `(k+1)^(k+1)` functionals.
pub fn achieving_cells(a: &IntMatrix) -> Result<Vec<FunctionalIndex>> {
    reject_zero(a)?;
    let (_, sets) = argmax_sets(a);
    let mut out = vec![Vec::new()];
    for set in &sets {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<usize>| {
                set.iter().map(move |&c| {
                    let mut p = prefix.clone();
                    p.push(c);
                    p
                })
            })
            .collect();
    }
    Ok(out
        .into_iter()
        .map(|d| FunctionalIndex {
            row_choice: d[0],
            column_choices: d[1..].to_vec(),
        })
        .collect())
}

/// Lexicographically least attaining functional and the number of
/// attaining functionals.
pub fn canonical_cell(a: &IntMatrix) -> Result<(FunctionalIndex, u64)> {
    reject_zero(a)?;
    let (_, sets) = argmax_sets(a);
    let ties = sets.iter().map(|s| s.len() as u64).product();
    Ok((
        FunctionalIndex {
            row_choice: sets[0][0],
            column_choices: sets[1..].iter().map(|s| s[0]).collect(),
        },
        ties,
    ))
}

/// The successive powers `A, A^2, A^3, ...`, each computed from the last.
pub struct Powers {
    base: IntMatrix,
    current: Option<IntMatrix>,
}

impl Powers {
    pub fn new(base: IntMatrix) -> Self {
        Powers {
            base,
            current: None,
        }
    }
}

impl Iterator for Powers {
    type Item = IntMatrix;

    fn next(&mut self) -> Option<IntMatrix> {
        let next = match &self.current {
            None => self.base.clone(),
            Some(m) => m.mul(&self.base).expect("same dimension"),
        };
        self.current = Some(next.clone());
        Some(next)
    }
}

/// `D(A^n)` for `n = 1..=N`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DegreeSequence {
    pub terms: Vec<BigInt>,
    /// The matrix whose powers were taken (the inverse, for a dual sequence).
    pub source: IntMatrix,
    /// Set when the terms come from the inverse matrix.
    pub dual: bool,
}

impl DegreeSequence {
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Term `n`, 1-based.
    pub fn term(&self, n: usize) -> &BigInt {
        &self.terms[n - 1]
    }
}

/// The first `n_terms` degrees of the iterates of `f_A`.
pub fn degree_sequence(a: &IntMatrix, n_terms: usize) -> Result<DegreeSequence> {
    a.require_full_rank()?;
    if n_terms == 0 {
        return Err(Error::InvalidArgument(
            "sequence length must be at least 1".into(),
        ));
    }
    let terms = Powers::new(a.clone())
        .take(n_terms)
        .map(|m| argmax_sets(&m).0)
        .collect();
    Ok(DegreeSequence {
        terms,
        source: a.clone(),
        dual: false,
    })
}

/// Degrees of the iterates of the inverse map, i.e. the codimension
/// `k - 1` degrees of `f_A`. Requires `|det A| = 1`.
pub fn dual_degree_sequence(a: &IntMatrix, n_terms: usize) -> Result<DegreeSequence> {
    let inv = a.inverse_unimodular()?;
    let mut seq = degree_sequence(&inv, n_terms)?;
    seq.dual = true;
    Ok(seq)
}

/// Convenience for tests and reports: a term list as plain integers.
pub fn terms_from_i64(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

impl DegreeSequence {
    /// All terms are at least one.
    pub fn is_positive(&self) -> bool {
        self.terms.iter().all(|t| *t >= BigInt::one())
    }
}
