//! Linear recurrences with constant coefficients.
//!
//! A recurrence of order `m` is stored in monic form
//!
//! ```text
//! s(n+m) + a(m-1) s(n+m-1) + ... + a(0) s(n) = 0      for n >= valid_from
//! ```
//!
//! with exact rational coefficients. Sequence indices are 1-based
//! throughout, so `valid_from == 1` means the relation holds from the first
//! term on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::{IntPoly, RatPoly};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Recurrence {
    /// `a(0), ..., a(m-1)`.
    pub coefficients: Vec<BigRational>,
    /// First index `n` from which the relation was observed to hold.
    pub valid_from: usize,
}

impl Recurrence {
    pub fn order(&self) -> usize {
        self.coefficients.len()
    }

    /// The monic characteristic polynomial `x^m + a(m-1) x^(m-1) + ... + a(0)`.
    pub fn polynomial(&self) -> RatPoly {
        let mut c = self.coefficients.clone();
        c.push(BigRational::one());
        RatPoly::new(c)
    }

    /// Same polynomial when all coefficients are integers.
    pub fn int_polynomial(&self) -> Option<IntPoly> {
        self.polynomial()
            .coeffs()
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect::<Option<Vec<_>>>()
            .map(IntPoly::new)
    }

    pub fn from_monic(p: &RatPoly, valid_from: usize) -> Result<Self> {
        match p.degree() {
            Some(d) if d >= 1 && p.is_monic() => Ok(Recurrence {
                coefficients: p.coeffs()[..d].to_vec(),
                valid_from,
            }),
            _ => Err(Error::InvalidArgument(
                "recurrence polynomial must be monic of degree >= 1".into(),
            )),
        }
    }

    pub fn from_int_poly(p: &IntPoly, valid_from: usize) -> Result<Self> {
        Self::from_monic(&p.to_rational(), valid_from)
    }

    /// Whether the relation holds at 0-based position `i`, i.e. with
    /// `s[i]` as the oldest term.
    fn holds_at(&self, seq: &[BigRational], i: usize) -> bool {
        let m = self.order();
        let mut acc = seq[i + m].clone();
        for (j, a) in self.coefficients.iter().enumerate() {
            if !a.is_zero() {
                acc += a * &seq[i + j];
            }
        }
        acc.is_zero()
    }

    /// Removes factors of `x` from the characteristic polynomial; each one
    /// removed lowers the order by one and delays validity by one index.
    fn strip_x_factors(mut self) -> Self {
        while self.order() > 1 && self.coefficients[0].is_zero() {
            self.coefficients.remove(0);
            self.valid_from += 1;
        }
        self
    }

    /// Human-readable relation, e.g. `d(n+3) = d(n+2) + d(n+1) + d(n)`.
    pub fn relation_string(&self) -> String {
        let m = self.order();
        let shift = |j: usize| {
            if j == 0 {
                "d(n)".to_string()
            } else {
                format!("d(n+{j})")
            }
        };
        let mut rhs = String::new();
        for j in (0..m).rev() {
            let c = -&self.coefficients[j];
            if c.is_zero() {
                continue;
            }
            let neg = c < BigRational::zero();
            let mag = if neg { -c } else { c };
            if rhs.is_empty() {
                if neg {
                    rhs.push('-');
                }
            } else {
                rhs.push_str(if neg { " - " } else { " + " });
            }
            if !mag.is_one() {
                rhs.push_str(&format!("{mag}*"));
            }
            rhs.push_str(&shift(j));
        }
        if rhs.is_empty() {
            rhs.push('0');
        }
        format!("{} = {rhs}", shift(m))
    }
}

/// Berlekamp-Massey over any field. Returns the connection polynomial
/// `1 + c(1) x + ... + c(L) x^L` (ascending, padded to length `L + 1`) and
/// the linear complexity `L`.
pub fn berlekamp_massey_generic<F: Field>(seq: &[F]) -> (Vec<F>, usize) {
    let mut c = vec![F::one()];
    let mut b = vec![F::one()];
    let mut l = 0usize;
    let mut shift = 1usize;
    let mut last_disc = F::one();
    for n in 0..seq.len() {
        let mut d = seq[n].clone();
        for i in 1..=l.min(c.len() - 1) {
            d = d + c[i].clone() * seq[n - i].clone();
        }
        if d.is_zero() {
            shift += 1;
            continue;
        }
        let coef = d.clone() / last_disc.clone();
        let prev = c.clone();
        if c.len() < b.len() + shift {
            c.resize(b.len() + shift, F::zero());
        }
        for (i, bi) in b.iter().enumerate() {
            c[i + shift] = c[i + shift].clone() - coef.clone() * bi.clone();
        }
        if 2 * l <= n {
            l = n + 1 - l;
            b = prev;
            last_disc = d;
            shift = 1;
        } else {
            shift += 1;
        }
    }
    c.resize(l + 1, F::zero());
    (c, l)
}

/// Minimal recurrence annihilating the whole window, or `None` when the
/// minimal order exceeds half the window length (too little evidence).
pub fn berlekamp_massey(seq: &[BigRational]) -> Option<Recurrence> {
    if seq.is_empty() {
        return None;
    }
    let (c, l) = berlekamp_massey_generic(seq);
    if l == 0 {
        // identically zero window
        return Some(Recurrence {
            coefficients: vec![BigRational::zero()],
            valid_from: 1,
        });
    }
    if l > seq.len() / 2 {
        return None;
    }
    // s(n+L) + c(1) s(n+L-1) + ... + c(L) s(n) = 0
    let coefficients = (0..l).map(|j| c[l - j].clone()).collect();
    Some(Recurrence {
        coefficients,
        valid_from: 1,
    })
}

fn to_rationals(seq: &[BigInt]) -> Vec<BigRational> {
    seq.iter()
        .map(|v| BigRational::from_integer(v.clone()))
        .collect()
}

fn least_valid_from(seq: &[BigRational], rec: &Recurrence) -> Option<usize> {
    let m = rec.order();
    let len = seq.len();
    if len <= m {
        return None;
    }
    // positions 0..=len-m-1 (0-based) carry a relation
    let last_fail = (0..len - m).rev().find(|&i| !rec.holds_at(seq, i));
    let from = last_fail.map_or(0, |i| i + 1);
    let required = (2 * m).min(len);
    (len - from >= required).then_some(from + 1)
}

/// Least `N >= 1` such that the relation holds for every `n` in
/// `[N, len - m]`, provided the validated suffix has at least
/// `min(2m, len)` terms; `None` otherwise.
pub fn verify_recurrence(seq: &[BigInt], rec: &Recurrence) -> Option<usize> {
    least_valid_from(&to_rationals(seq), rec)
}

/// Treats a monic integer polynomial as a recurrence and returns its least
/// valid offset in `seq`, as [`verify_recurrence`] does.
pub fn check_candidate(seq: &[BigInt], p: &IntPoly) -> Result<Option<usize>> {
    let rec = Recurrence::from_int_poly(p, 1)?;
    let needed = rec.order() + 2;
    if seq.len() < needed {
        return Err(Error::WindowTooShort {
            needed,
            got: seq.len(),
        });
    }
    Ok(verify_recurrence(seq, &rec))
}

/// Outcome of a bounded recurrence search; the bounds travel with the
/// result so that "nothing found" is never mistaken for "none exists".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceSearch {
    pub found: Option<Recurrence>,
    pub max_order: usize,
    pub guard: usize,
    pub window: usize,
}

/// Searches for an (eventual) recurrence of order at most `max_order`.
///
/// For each dropped head `h` (up to `max_order` terms, and never eating
/// into the guard), Berlekamp-Massey is fitted on the `2 * max_order` terms
/// after the head and the candidate is checked exactly against every later
/// term, which includes at least `guard` terms it was not fitted on. The
/// least-order survivor wins, ties broken by earliest validity.
pub fn find_recurrence(seq: &[BigInt], max_order: usize, guard: usize) -> Result<RecurrenceSearch> {
    if max_order == 0 {
        return Err(Error::InvalidArgument("max_order must be positive".into()));
    }
    let needed = 2 * max_order + guard;
    if seq.len() < needed {
        return Err(Error::WindowTooShort {
            needed,
            got: seq.len(),
        });
    }
    let rats = to_rationals(seq);
    let max_head = max_order.min(seq.len() - needed);
    let mut best: Option<Recurrence> = None;
    for head in 0..=max_head {
        let Some(fit) = berlekamp_massey(&rats[head..head + 2 * max_order]) else {
            continue;
        };
        if fit.order() > max_order {
            continue;
        }
        let cand = Recurrence {
            valid_from: head + 1,
            ..fit
        }
        .strip_x_factors();
        let Some(from) = least_valid_from(&rats, &cand) else {
            continue;
        };
        if from > cand.valid_from {
            continue;
        }
        let cand = Recurrence {
            valid_from: from,
            ..cand
        };
        let better = match &best {
            None => true,
            Some(b) => (cand.order(), cand.valid_from) < (b.order(), b.valid_from),
        };
        if better {
            best = Some(cand);
        }
    }
    Ok(RecurrenceSearch {
        found: best,
        max_order,
        guard,
        window: seq.len(),
    })
}

/// Minimal `(preperiod, period)` describing the first `window` symbols as
/// eventually periodic, requiring the periodic part to cover at least
/// `ceil(window/2)` symbols and at least two full periods.
pub fn eventually_periodic<T: PartialEq>(symbols: &[T], window: usize) -> Option<(usize, usize)> {
    let w = window.min(symbols.len());
    let s = &symbols[..w];
    for pre in 0..=w / 2 {
        let tail = w - pre;
        for period in 1..=tail / 2 {
            if (pre..w - period).all(|i| s[i] == s[i + period]) {
                return Some((pre, period));
            }
        }
    }
    None
}
