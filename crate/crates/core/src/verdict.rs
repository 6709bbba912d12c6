//! Recurrence verdicts backed by spectral criteria, and their empirical
//! cross-check.
//!
//! `classify_d1` only answers when a criterion applies literally:
//!
//! * every eigenvalue of modulus at least 1 is real or has
//!   `conj(lambda)/lambda` a root of unity: a recurrence exists;
//! * the eigenvalues of largest modulus are a single simple conjugate pair
//!   whose ratio is not a root of unity: no recurrence exists;
//!
//! and returns `Unknown` otherwise, including whenever a needed fact could
//! not be certified.

use std::fmt;

use num_bigint::Sign;
use num_integer::Integer;

use crate::cells::{cell_trace, TraceStatus};
use crate::degree::degree_sequence;
use crate::error::{Error, Result};
use crate::recur::{check_candidate, find_recurrence, RecurrenceSearch};
use crate::spectra::ball::complex_to_decimal;
use crate::spectra::{
    spectral_summary_with_cap, Cmp1, RatioFlag, SpectralSummary, DEFAULT_CAP_BITS,
};
use crate::{IntMatrix, IntPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Classification {
    RecurrenceProven,
    NoRecurrenceProven,
    Unknown,
}

impl Classification {
    pub fn name(&self) -> &'static str {
        match self {
            Classification::RecurrenceProven => "RECURRENCE_PROVEN",
            Classification::NoRecurrenceProven => "NO_RECURRENCE_PROVEN",
            Classification::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The criterion a verdict rests on.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum Basis {
    /// Eigenvalues of modulus `>= 1` are real or have unity ratio.
    Thm11Part1,
    /// Eigenvalues of modulus `>= 1` are real and positive; the
    /// characteristic polynomial itself is a recurrence.
    Thm27CharPoly,
    /// Simple dominant conjugate pair with non-unity ratio.
    Prop31,
    /// Codegree of a 3x3 unimodular matrix, via its inverse.
    DualityThm12,
    /// Codegree of a 4x4 unimodular matrix, via its inverse.
    DualityThm13,
    /// Codegree in other dimensions, via the inverse.
    Duality,
}

impl Basis {
    pub fn name(&self) -> &'static str {
        match self {
            Basis::Thm11Part1 => "THM_1_1_PART1",
            Basis::Thm27CharPoly => "THM_2_7_CHARPOLY",
            Basis::Prop31 => "PROP_3_1",
            Basis::DualityThm12 => "DUALITY_THM_1_2",
            Basis::DualityThm13 => "DUALITY_THM_1_3",
            Basis::Duality => "DUALITY",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Verdict {
    pub classification: Classification,
    /// `None` exactly when the classification is `Unknown`.
    pub basis: Option<Basis>,
    /// For duality verdicts, the criterion applied to the inverse.
    pub via: Option<Basis>,
    /// Certified spectral facts the verdict used, or why none applied.
    pub facts: Vec<String>,
    /// Annihilating polynomial attached to a `RecurrenceProven` verdict:
    /// the characteristic polynomial, or `chi_{A^tau}(t^tau)`.
    pub recurrence: Option<IntPoly>,
    /// The interleaving period `tau` of the attached polynomial.
    pub period: Option<u64>,
    /// Orders of the roots of unity `conj(lambda)/lambda` over the
    /// non-real eigenvalues of modulus `>= 1`.
    pub unity_orders: Vec<u64>,
    /// Set when a fact the criteria need could not be certified within the
    /// precision cap.
    pub unresolved: bool,
}

impl Verdict {
    fn unknown(facts: Vec<String>, unresolved: bool) -> Self {
        Verdict {
            classification: Classification::Unknown,
            basis: None,
            via: None,
            facts,
            recurrence: None,
            period: None,
            unity_orders: Vec::new(),
            unresolved,
        }
    }
}

fn describe_root(s: &SpectralSummary, i: usize) -> String {
    let r = &s.roots[i];
    let cmp = s.cmp_one(i).map_or("?", |c| c.name());
    let kind = if r.is_real { "real" } else { "non-real" };
    format!(
        "eigenvalue {} ({kind}, multiplicity {}, |.| {cmp} 1, ratio {})",
        complex_to_decimal(&r.center, 6),
        r.multiplicity,
        s.ratio_flags[i]
    )
}

/// Applies the criteria to an already computed summary.
pub fn classify_summary(a: &IntMatrix, s: &SpectralSummary) -> Verdict {
    let relevant: Vec<usize> = (0..s.roots.len())
        .filter(|&i| matches!(s.cmp_one(i), Some(Cmp1::Gt | Cmp1::Eq)))
        .collect();
    let facts: Vec<String> = relevant.iter().map(|&i| describe_root(s, i)).collect();

    let unresolved = relevant
        .iter()
        .any(|&i| s.ratio_flags[i] == RatioFlag::Unresolved);
    let h1 = relevant
        .iter()
        .all(|&i| s.roots[i].is_real || matches!(s.ratio_flags[i], RatioFlag::RootOfUnity(_)));
    if h1 && !unresolved {
        let mut tau = 1u64;
        let mut orders = Vec::new();
        let mut positive = true;
        for &i in &relevant {
            let step = match (s.real_sign(i), s.ratio_flags[i]) {
                (Some(Sign::Plus), _) => 1,
                (Some(_), _) => {
                    positive = false;
                    2
                }
                (None, RatioFlag::RootOfUnity(m)) => {
                    positive = false;
                    orders.push(m);
                    2 * m
                }
                (None, _) => unreachable!("checked by h1"),
            };
            tau = tau.lcm(&step);
        }
        orders.sort_unstable();
        orders.dedup();
        let (basis, recurrence) = if positive {
            (Basis::Thm27CharPoly, s.char_poly.clone())
        } else {
            let t = usize::try_from(tau).expect("period fits in usize");
            (Basis::Thm11Part1, a.pow(tau).char_poly().inflate(t))
        };
        return Verdict {
            classification: Classification::RecurrenceProven,
            basis: Some(basis),
            via: None,
            facts,
            recurrence: Some(recurrence),
            period: Some(tau),
            unity_orders: orders,
            unresolved: false,
        };
    }

    if let (Some((i, j)), Some(top)) = (s.dominant_pair, s.modulus_classes.first()) {
        let simple = s.roots[i].multiplicity == 1 && s.roots[j].multiplicity == 1;
        if simple && s.ratio_flags[i] == RatioFlag::NotRootOfUnity && top.cmp_one != Cmp1::Lt {
            return Verdict {
                classification: Classification::NoRecurrenceProven,
                basis: Some(Basis::Prop31),
                via: None,
                facts: vec![describe_root(s, i), describe_root(s, j)],
                recurrence: None,
                period: None,
                unity_orders: Vec::new(),
                unresolved: false,
            };
        }
    }

    let mut facts = facts;
    facts.push(if unresolved {
        "a needed ratio flag is unresolved at the precision cap".to_string()
    } else {
        "no criterion applies".to_string()
    });
    Verdict::unknown(facts, unresolved)
}

pub fn classify_d1(a: &IntMatrix) -> Result<Verdict> {
    classify_d1_with_cap(a, DEFAULT_CAP_BITS)
}

pub fn classify_d1_with_cap(a: &IntMatrix, cap_bits: u64) -> Result<Verdict> {
    Ok(classify_with_summary(a, cap_bits)?.0)
}

/// The verdict together with the summary it was derived from; the summary
/// is `None` when certification gave up, in which case the verdict is
/// `Unknown`.
pub fn classify_with_summary(
    a: &IntMatrix,
    cap_bits: u64,
) -> Result<(Verdict, Option<SpectralSummary>)> {
    match spectral_summary_with_cap(a, cap_bits) {
        Ok(s) => Ok((classify_summary(a, &s), Some(s))),
        Err(e @ (Error::UnresolvedClass { .. } | Error::RefinementFailed { .. })) => {
            Ok((Verdict::unknown(vec![e.to_string()], true), None))
        }
        Err(e) => Err(e),
    }
}

/// Verdict for the codegree sequence, i.e. the degree sequence of `A^-1`.
pub fn classify_dual(a: &IntMatrix) -> Result<Verdict> {
    classify_dual_with_cap(a, DEFAULT_CAP_BITS)
}

pub fn classify_dual_with_cap(a: &IntMatrix, cap_bits: u64) -> Result<Verdict> {
    let inv = a.inverse_unimodular()?;
    let (mut v, summary) = classify_with_summary(&inv, cap_bits)?;
    if let Some(inner) = v.basis {
        v.via = Some(inner);
        v.basis = Some(match a.dim() {
            3 => Basis::DualityThm12,
            4 => Basis::DualityThm13,
            _ => Basis::Duality,
        });
    }
    let unit_modulus = summary
        .as_ref()
        .is_some_and(|s| s.modulus_classes.iter().any(|c| c.cmp_one == Cmp1::Eq));
    if a.dim() == 3 && unit_modulus {
        v.facts.push(
            "modulus-one eigenvalue present: the forward/inverse dichotomy is not guaranteed"
                .into(),
        );
    }
    Ok(v)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Consistency {
    Consistent,
    Inconsistent,
}

impl Consistency {
    pub fn name(&self) -> &'static str {
        match self {
            Consistency::Consistent => "CONSISTENT",
            Consistency::Inconsistent => "INCONSISTENT",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ConsistencyReport {
    pub status: Consistency,
    pub verdict: Verdict,
    pub search: RecurrenceSearch,
    /// Least offset of the characteristic polynomial as a recurrence.
    pub charpoly_offset: Option<usize>,
    pub trace_status: TraceStatus,
    /// Window of the cell trace actually used (doubled on a suspicious
    /// stabilization).
    pub trace_window: usize,
    /// Conflicting evidence; empty when consistent.
    pub conflicts: Vec<String>,
}

/// Guard used by [`cross_check`]: `min(4 M, N - 2 M)`.
pub fn default_guard(window: usize, max_order: usize) -> usize {
    (4 * max_order).min(window.saturating_sub(2 * max_order))
}

/// Runs the verdict engine and the empirical analyses on `N = window`
/// terms and compares them.
pub fn cross_check(a: &IntMatrix, window: usize, max_order: usize) -> Result<ConsistencyReport> {
    cross_check_with_cap(a, window, max_order, DEFAULT_CAP_BITS)
}

pub fn cross_check_with_cap(
    a: &IntMatrix,
    window: usize,
    max_order: usize,
    cap_bits: u64,
) -> Result<ConsistencyReport> {
    let verdict = classify_d1_with_cap(a, cap_bits)?;
    let seq = degree_sequence(a, window)?;
    let search = find_recurrence(&seq.terms, max_order, default_guard(window, max_order))?;
    let mut trace = cell_trace(a, window.max(2))?;
    let mut conflicts = Vec::new();

    let charpoly_offset = if verdict.basis == Some(Basis::Thm27CharPoly) {
        check_candidate(&seq.terms, &a.char_poly()).ok().flatten()
    } else {
        None
    };

    match verdict.classification {
        Classification::RecurrenceProven => {
            if search.found.is_none() {
                conflicts.push(format!(
                    "recurrence proven but none of order <= {max_order} found in {window} terms"
                ));
            }
            if verdict.basis == Some(Basis::Thm27CharPoly) && charpoly_offset.is_none() {
                conflicts
                    .push("characteristic polynomial does not annihilate the sequence tail".into());
            }
        }
        Classification::NoRecurrenceProven => {
            if let Some(r) = &search.found {
                conflicts.push(format!(
                    "no recurrence proven but an order-{} recurrence holds from n = {}",
                    r.order(),
                    r.valid_from
                ));
            }
            if trace.status.is_stabilized() {
                trace = cell_trace(a, 2 * window.max(2))?;
                if trace.status.is_stabilized() {
                    conflicts.push(format!(
                        "no recurrence proven but the cell trace stabilizes within {} steps",
                        trace.window()
                    ));
                }
            }
        }
        Classification::Unknown => {}
    }

    Ok(ConsistencyReport {
        status: if conflicts.is_empty() {
            Consistency::Consistent
        } else {
            Consistency::Inconsistent
        },
        verdict,
        search,
        charpoly_offset,
        trace_window: trace.window(),
        trace_status: trace.status,
        conflicts,
    })
}
