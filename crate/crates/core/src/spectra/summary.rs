//! Certified spectral summary of an exponent matrix.
//!
//! Every eigenvalue is isolated in a disk; equal moduli are detected
//! exactly through the real roots of the product polynomial (each
//! `|lambda|^2 = lambda * conj(lambda)` is one of them), and `conj(lambda) /
//! lambda` is located among the roots of the ratio polynomial, whose
//! cyclotomic factors are isolated separately.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::Sign;
use num_rational::BigRational;
use num_traits::{One, Signed};

use super::ball::{rat, sqrt_lower, to_decimal, ComplexRational, Disk};
use super::isolate::{separation_bits, IsolatedRoot, Isolator, RootBox, START_PREC};
use super::ratio::{
    cyclotomic_orders, product_polynomial, ratio_polynomial, squarefree_part, unity_ratio_orders,
};
use crate::error::{Error, Result};
use crate::exact::cyclotomic::cyclotomic;
use crate::{IntMatrix, IntPoly};

/// Default refinement cap: attribution gives up at radius about `2^-256`.
pub const DEFAULT_CAP_BITS: u64 = 256;

/// Certified comparison of a modulus with 1.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord)]
pub enum Cmp1 {
    Gt,
    Eq,
    Lt,
}

impl Cmp1 {
    pub fn name(&self) -> &'static str {
        match self {
            Cmp1::Gt => "GT",
            Cmp1::Eq => "EQ",
            Cmp1::Lt => "LT",
        }
    }
}

/// Roots of exactly equal modulus.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ModulusClass {
    /// Root indices, ascending.
    pub members: Vec<usize>,
    pub cmp_one: Cmp1,
    /// Isolating disk (centered on the real axis) of the common `|lambda|^2`.
    pub modulus_sq: Disk,
}

impl ModulusClass {
    /// Decimal approximation of the modulus.
    pub fn modulus_decimal(&self, digits: usize) -> String {
        to_decimal(
            &sqrt_lower(&self.modulus_sq.center.re, 4 * digits as u64 + 16),
            digits,
        )
    }
}

/// Whether `conj(lambda) / lambda` is a root of unity.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RatioFlag {
    /// A primitive root of unity of the given order.
    RootOfUnity(u64),
    NotRootOfUnity,
    Unresolved,
}

impl fmt::Display for RatioFlag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RatioFlag::RootOfUnity(m) => write!(f, "ROOT_OF_UNITY({m})"),
            RatioFlag::NotRootOfUnity => f.write_str("NOT_ROOT_OF_UNITY"),
            RatioFlag::Unresolved => f.write_str("UNRESOLVED"),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SpectralSummary {
    pub char_poly: IntPoly,
    /// Distinct eigenvalues; within each squarefree factor the real ones
    /// come first by increasing value, then conjugate pairs.
    pub roots: Vec<RootBox>,
    /// Ordered by decreasing modulus.
    pub modulus_classes: Vec<ModulusClass>,
    /// Set when the top class is exactly one conjugate pair.
    pub dominant_pair: Option<(usize, usize)>,
    /// One flag per root; real roots carry `RootOfUnity(1)`.
    pub ratio_flags: Vec<RatioFlag>,
    /// Result of [`unity_ratio_orders`] on the characteristic polynomial.
    pub unity_orders: Vec<u64>,
    /// Working precision (bits) at which everything was certified.
    pub precision: u64,
}

impl SpectralSummary {
    /// Class index of each root.
    pub fn class_of(&self, root: usize) -> Option<usize> {
        self.modulus_classes
            .iter()
            .position(|c| c.members.contains(&root))
    }

    pub fn cmp_one(&self, root: usize) -> Option<Cmp1> {
        self.class_of(root).map(|c| self.modulus_classes[c].cmp_one)
    }

    /// Sign of a real root (`Plus` or `Minus`); `None` for non-real roots.
    pub fn real_sign(&self, root: usize) -> Option<Sign> {
        let r = &self.roots[root];
        r.is_real.then(|| {
            if r.center.re.is_positive() {
                Sign::Plus
            } else {
                Sign::Minus
            }
        })
    }

    /// Upper members of the conjugate pairs, with their partners.
    pub fn conjugate_pairs(&self) -> Vec<(usize, usize)> {
        self.roots
            .iter()
            .enumerate()
            .filter_map(|(i, r)| r.conjugate_partner.filter(|&j| j > i).map(|j| (i, j)))
            .collect()
    }
}

/// Everything the refinement loop needs for one squarefree decomposition.
struct Engine {
    mults: Vec<usize>,
    eig: Isolator,
    q: IntPoly,
    q_iso: Isolator,
    ratios: Option<(Isolator, Vec<Option<u64>>)>,
    limit: u64,
}

struct Outcome {
    roots: Vec<RootBox>,
    classes: Vec<ModulusClass>,
    flags: Vec<RatioFlag>,
    precision: u64,
}

impl Engine {
    fn new(factors: Vec<(IntPoly, usize)>, with_ratios: bool, cap: u64) -> Result<Self> {
        let s = factors.iter().fold(IntPoly::one(), |acc, (f, _)| &acc * f);
        let q = product_polynomial(&s)?.squarefree_part();
        let mut bits = separation_bits(&s).max(separation_bits(&q));
        let ratios = if with_ratios && s.degree().unwrap_or(0) >= 2 {
            let (_, reduced) = ratio_polynomial(&s)?;
            let h = reduced.squarefree_part();
            bits = bits.max(separation_bits(&h));
            let d = s.degree().unwrap_or(0) as u64;
            let orders = cyclotomic_orders(&h, d * d);
            let mut polys = Vec::new();
            let mut labels = Vec::new();
            let mut rest = h;
            for m in orders {
                let phi = cyclotomic(m)?;
                rest = rest
                    .exact_quotient(&phi)
                    .expect("cyclotomic factor divides");
                polys.push(phi);
                labels.push(Some(m));
            }
            if rest.degree().unwrap_or(0) > 0 {
                polys.push(rest);
                labels.push(None);
            }
            Some((Isolator::new(polys), labels))
        } else {
            None
        };
        let (polys, mults): (Vec<_>, Vec<_>) = factors.into_iter().unzip();
        Ok(Engine {
            mults,
            eig: Isolator::new(polys),
            q_iso: Isolator::new(vec![q.clone()]),
            q,
            ratios,
            limit: 4 * bits + cap + 256,
        })
    }

    fn run(mut self, cap: u64) -> Result<Outcome> {
        let mut prec = START_PREC;
        while prec <= self.limit {
            if let Some(out) = self.attempt(prec, cap)? {
                return Ok(out);
            }
            prec *= 2;
        }
        Err(Error::RefinementFailed { bits: self.limit })
    }

    /// `Ok(None)` means "refine further".
    fn attempt(&mut self, prec: u64, cap: u64) -> Result<Option<Outcome>> {
        let Some(eig) = self.eig.certify_at(prec) else {
            return Ok(None);
        };
        // real roots must have a certified sign
        if eig
            .iter()
            .any(|r| r.is_real && r.disk.center.re.abs() <= r.disk.radius)
        {
            return Ok(None);
        }
        let Some(q_roots) = self.q_iso.certify_at(prec) else {
            return Ok(None);
        };
        let ratio_roots = match &mut self.ratios {
            Some((iso, _)) => match iso.certify_at(prec) {
                Some(r) => Some(r),
                None => return Ok(None),
            },
            None => None,
        };
        let exhausted = prec >= cap;
        let bits = prec + 8;
        let Some(classes) = modulus_classes_of(&eig, &q_roots, &self.q, bits) else {
            return if exhausted {
                Err(Error::UnresolvedClass { bits: prec })
            } else {
                Ok(None)
            };
        };
        let labels = self
            .ratios
            .as_ref()
            .map(|(_, l)| l.as_slice())
            .unwrap_or(&[]);
        let flags = ratio_flags_of(&eig, ratio_roots.as_deref().unwrap_or(&[]), labels, bits);
        if flags.contains(&RatioFlag::Unresolved) && !exhausted {
            return Ok(None);
        }
        let roots = eig
            .into_iter()
            .map(|r| RootBox {
                center: r.disk.center,
                radius: r.disk.radius,
                multiplicity: self.mults[r.factor],
                is_real: r.is_real,
                conjugate_partner: r.partner,
            })
            .collect();
        Ok(Some(Outcome {
            roots,
            classes,
            flags,
            precision: prec,
        }))
    }
}

fn modulus_classes_of(
    eig: &[IsolatedRoot],
    q_roots: &[IsolatedRoot],
    q: &IntPoly,
    bits: u64,
) -> Option<Vec<ModulusClass>> {
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (i, r) in eig.iter().enumerate() {
        let (lo, hi) = r.disk.modulus_sq_bounds(bits);
        let mut hits = q_roots
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_real && s.disk.meets_segment(&lo, &hi));
        let (qi, _) = hits.next()?;
        if hits.next().is_some() {
            return None;
        }
        groups.entry(qi).or_default().push(i);
    }
    let one = ComplexRational::new(rat(1), rat(0));
    let one_is_root = q.sign_at(&BigRational::one()) == Sign::NoSign;
    let mut classes = Vec::with_capacity(groups.len());
    for (qi, members) in groups {
        let disk = q_roots[qi].disk.clone();
        let cmp_one = if one_is_root && disk.contains(&one) {
            Cmp1::Eq
        } else if &disk.center.re - &disk.radius > rat(1) {
            Cmp1::Gt
        } else if &disk.center.re + &disk.radius < rat(1) {
            Cmp1::Lt
        } else {
            return None;
        };
        classes.push(ModulusClass {
            members,
            cmp_one,
            modulus_sq: disk,
        });
    }
    // the disks are disjoint and real-centered, so centers order the moduli
    classes.sort_by(|a, b| b.modulus_sq.center.re.cmp(&a.modulus_sq.center.re));
    Some(classes)
}

fn ratio_flags_of(
    eig: &[IsolatedRoot],
    ratio_roots: &[IsolatedRoot],
    labels: &[Option<u64>],
    bits: u64,
) -> Vec<RatioFlag> {
    let mut flags = vec![RatioFlag::RootOfUnity(1); eig.len()];
    for (i, r) in eig.iter().enumerate() {
        let Some(j) = r.partner.filter(|&j| j > i) else {
            continue;
        };
        let flag = match r.disk.conj_ratio(bits) {
            None => RatioFlag::Unresolved,
            Some(enclosure) => {
                let mut hits = ratio_roots.iter().filter(|s| s.disk.intersects(&enclosure));
                match (hits.next(), hits.next()) {
                    (Some(s), None) => match labels[s.factor] {
                        Some(m) => RatioFlag::RootOfUnity(m),
                        None => RatioFlag::NotRootOfUnity,
                    },
                    _ => RatioFlag::Unresolved,
                }
            }
        };
        flags[i] = flag;
        flags[j] = flag;
    }
    flags
}

fn require_isolable(p: &IntPoly) -> Result<()> {
    if p.degree().unwrap_or(0) == 0 {
        return Err(Error::InvalidArgument(
            "polynomial must have degree >= 1".into(),
        ));
    }
    if p.coeff(0).sign() == Sign::NoSign {
        return Err(Error::InvalidArgument("polynomial vanishes at 0".into()));
    }
    if !p.gcd(&p.derivative()).is_one() {
        return Err(Error::InvalidArgument(
            "polynomial must be squarefree".into(),
        ));
    }
    Ok(())
}

/// Roots of a squarefree `p` with `p(0) != 0`, grouped by exactly equal
/// modulus in decreasing order. Member indices refer to the roots in the
/// order produced by [`super::isolate_roots`].
pub fn modulus_classes(p: &IntPoly) -> Result<Vec<ModulusClass>> {
    require_isolable(p)?;
    let p = p.primitive_part();
    Ok(Engine::new(vec![(p, 1)], false, DEFAULT_CAP_BITS)?
        .run(DEFAULT_CAP_BITS)?
        .classes)
}

pub fn spectral_summary(a: &IntMatrix) -> Result<SpectralSummary> {
    spectral_summary_with_cap(a, DEFAULT_CAP_BITS)
}

/// As [`spectral_summary`], giving up on ratio attribution once the working
/// precision reaches `cap_bits`.
pub fn spectral_summary_with_cap(a: &IntMatrix, cap_bits: u64) -> Result<SpectralSummary> {
    a.require_full_rank()?;
    let char_poly = a.char_poly();
    let decomposition = squarefree_part(&char_poly);
    let out = Engine::new(decomposition.factors, true, cap_bits)?.run(cap_bits)?;
    let dominant_pair = out.classes.first().and_then(|c| match c.members[..] {
        [i, j] if out.roots[i].conjugate_partner == Some(j) => Some((i, j)),
        _ => None,
    });
    Ok(SpectralSummary {
        unity_orders: unity_ratio_orders(&char_poly)?,
        char_poly,
        roots: out.roots,
        modulus_classes: out.classes,
        dominant_pair,
        ratio_flags: out.flags,
        precision: out.precision,
    })
}
