//! Certified isolation of the complex roots of integer polynomials.
//!
//! Approximations come from Aberth-Ehrlich iteration, first in `f64` and
//! then in binary fixed point at increasing precision. They are never
//! trusted directly. Given distinct approximations `z_1..z_n` of the roots
//! of a degree-`n` polynomial `p` with leading coefficient `a`, set
//!
//! ```text
//! W_i = p(z_i) / (a * prod_{j != i} (z_i - z_j))
//! ```
//!
//! The roots of `p` are the eigenvalues of `diag(z) - W 1^T`, so by
//! Gerschgorin every root lies in some disk `|z - (z_i - W_i)| <= (n-1)|W_i|`,
//! and when these disks are pairwise disjoint each holds exactly one root.
//! All of this is evaluated exactly on the dyadic approximations, so a
//! returned disk is a proof, whatever the quality of the numerics.
//!
//! Approximations whose imaginary part is negligible are snapped onto the
//! real axis and the rest are forced into exact conjugate pairs. A
//! snapped disk is symmetric about the axis, so if it isolates a root of a
//! real polynomial that root is real; a disk and its mirror image that are
//! disjoint hold a conjugate pair of non-real roots.

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ball::{eps, pow2, rat, round_dyadic, sqrt_upper, ComplexRational, Disk};
use crate::error::{Error, Result};
use crate::IntPoly;

/// Fixed-point complex number `(re + i im) / 2^prec`; the precision is
/// carried by the caller.
#[derive(Clone, PartialEq, Debug)]
struct Fx {
    re: BigInt,
    im: BigInt,
}

impl Fx {
    fn zero() -> Self {
        Fx {
            re: BigInt::zero(),
            im: BigInt::zero(),
        }
    }

    /// Exact conversion, rounded to `prec` fractional bits.
    fn from_f64(z: Complex64, prec: u64) -> Self {
        let conv = |x: f64| -> BigInt {
            BigRational::from_float(x)
                .map(|q| {
                    (q * BigRational::from_integer(pow2(prec)))
                        .round()
                        .to_integer()
                })
                .unwrap_or_default()
        };
        Fx {
            re: conv(z.re),
            im: conv(z.im),
        }
    }

    fn rescale(&self, from: u64, to: u64) -> Self {
        if to >= from {
            Fx {
                re: &self.re << (to - from),
                im: &self.im << (to - from),
            }
        } else {
            Fx {
                re: &self.re >> (from - to),
                im: &self.im >> (from - to),
            }
        }
    }

    fn add(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    fn sub(&self, o: &Fx) -> Fx {
        Fx {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    fn mul(&self, o: &Fx, prec: u64) -> Fx {
        Fx {
            re: (&self.re * &o.re - &self.im * &o.im) >> prec,
            im: (&self.re * &o.im + &self.im * &o.re) >> prec,
        }
    }

    fn div(&self, o: &Fx, prec: u64) -> Option<Fx> {
        let den = &o.re * &o.re + &o.im * &o.im;
        if den.is_zero() {
            return None;
        }
        let re = (&self.re * &o.re + &self.im * &o.im) << prec;
        let im = (&self.im * &o.re - &self.re * &o.im) << prec;
        Some(Fx {
            re: re / &den,
            im: im / &den,
        })
    }

    fn one(prec: u64) -> Fx {
        Fx {
            re: pow2(prec),
            im: BigInt::zero(),
        }
    }

    /// Bit length of the larger component of the mantissa.
    fn mag_bits(&self) -> u64 {
        self.re.bits().max(self.im.bits())
    }

    fn to_c64(&self, prec: u64) -> Complex64 {
        let conv = |m: &BigInt| -> f64 {
            let shift = prec.saturating_sub(60);
            let v = (m >> shift).to_f64().unwrap_or(f64::NAN);
            v / 2f64.powi((prec - shift) as i32)
        };
        Complex64::new(conv(&self.re), conv(&self.im))
    }
}

fn eval_fx(coeffs: &[BigInt], z: &Fx, prec: u64) -> (Fx, Fx) {
    let n = coeffs.len() - 1;
    let lift = |c: &BigInt| Fx {
        re: c << prec,
        im: BigInt::zero(),
    };
    let mut val = lift(&coeffs[n]);
    let mut der = Fx::zero();
    for c in coeffs[..n].iter().rev() {
        der = der.mul(z, prec).add(&val);
        val = val.mul(z, prec).add(&lift(c));
    }
    (val, der)
}

/// `log2 |c|` for a nonzero integer, accurate far beyond the `f64` range.
fn log2_abs(c: &BigInt) -> f64 {
    let shift = c.bits().saturating_sub(60);
    let top = (c.abs() >> shift).to_f64().unwrap_or(1.0);
    top.log2() + shift as f64
}

/// Starting points whose moduli follow the Newton polygon of the
/// coefficients: every edge of the upper hull of `(i, log2 |c_i|)` with
/// slope `s` contributes as many points as its width on the circle of
/// radius `2^-s`.
fn newton_start(coeffs: &[BigInt]) -> Vec<Complex64> {
    let pts: Vec<(usize, f64)> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, log2_abs(c)))
        .collect();
    let mut hull: Vec<(usize, f64)> = Vec::new();
    for &p in &pts {
        while hull.len() >= 2 {
            let (i0, l0) = hull[hull.len() - 2];
            let (i1, l1) = hull[hull.len() - 1];
            // drop the middle point when it lies on or below the chord
            if (l1 - l0) * (p.0 - i0) as f64 <= (p.1 - l0) * (i1 - i0) as f64 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(p);
    }
    let n = coeffs.len() - 1;
    let mut out = Vec::with_capacity(n);
    for (e, w) in hull.windows(2).enumerate() {
        let (i0, l0) = w[0];
        let (i1, l1) = w[1];
        let width = i1 - i0;
        let radius = (-(l1 - l0) / width as f64).exp2();
        for k in 0..width {
            let angle = std::f64::consts::TAU * k as f64 / width as f64 + 0.4 + 0.7 * e as f64;
            out.push(Complex64::from_polar(radius, angle));
        }
    }
    // roots at zero have been excluded by the callers; pad defensively
    while out.len() < n {
        out.push(Complex64::new(0.0, 0.0));
    }
    out
}

/// Aberth iteration in `f64` from `start`; `None` unless it converges.
fn aberth_f64(coeffs: &[f64], start: &[Complex64]) -> Option<Vec<Complex64>> {
    let n = coeffs.len() - 1;
    let mut z = start.to_vec();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(coeffs[n], 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for c in coeffs[..n].iter().rev() {
            d = d * x + v;
            v = v * x + c;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut worst = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let s: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| 1.0 / (z[i] - z[j]))
                .sum();
            let w = ratio / (1.0 - ratio * s);
            if w.is_finite() {
                z[i] -= w;
                worst = worst.max(w.norm() / (1.0 + z[i].norm()));
            }
        }
        if worst < 1e-15 {
            return z.iter().all(|v| v.is_finite()).then_some(z);
        }
    }
    None
}

/// Approximations and working precision for one squarefree factor.
#[derive(Clone, Debug)]
struct FactorState {
    poly: IntPoly,
    /// Floating-point starting values, converted at the first refinement
    /// so that tiny roots are not rounded together.
    start: Vec<Complex64>,
    approx: Vec<Fx>,
    prec: u64,
    /// Least working precision.
    floor: u64,
}

pub(crate) const START_PREC: u64 = 64;

impl FactorState {
    fn new(poly: IntPoly) -> Self {
        let n = poly.degree().unwrap_or(0);
        let f64s: Vec<f64> = poly
            .coeffs()
            .iter()
            .map(|c| c.to_f64().unwrap_or(f64::INFINITY))
            .collect();
        let guess = if n > 0 {
            newton_start(poly.coeffs())
        } else {
            Vec::new()
        };
        let start = if n > 0 && f64s.iter().all(|c| c.is_finite()) {
            aberth_f64(&f64s, &guess)
        } else {
            None
        };
        let start = start.unwrap_or(guess);
        // enough fractional bits for the smallest start to keep its leading bits
        let smallest = start
            .iter()
            .map(|z| z.norm())
            .filter(|r| *r > 0.0)
            .fold(f64::INFINITY, f64::min);
        let floor = if smallest.is_finite() && smallest < 1.0 {
            START_PREC + (-smallest.log2()).ceil() as u64
        } else {
            START_PREC
        };
        FactorState {
            poly,
            start,
            approx: Vec::new(),
            prec: 0,
            floor,
        }
    }

    fn degree(&self) -> usize {
        self.start.len()
    }

    /// Runs fixed-point Aberth steps at `prec` until the corrections drop
    /// below `2^(16 - prec)` or the iteration budget runs out.
    fn refine(&mut self, prec: u64) {
        let prec = prec.max(self.floor);
        if self.approx.len() != self.start.len() {
            self.approx = self.start.iter().map(|&z| Fx::from_f64(z, prec)).collect();
            self.prec = prec;
        } else if prec != self.prec {
            for z in &mut self.approx {
                *z = z.rescale(self.prec, prec);
            }
            self.prec = prec;
        }
        let n = self.degree();
        if n == 0 {
            return;
        }
        let coeffs = self.poly.coeffs().to_vec();
        let one = Fx::one(prec);
        for _ in 0..200 {
            let mut worst = 0u64;
            for i in 0..n {
                let (v, d) = eval_fx(&coeffs, &self.approx[i], prec);
                if v.re.is_zero() && v.im.is_zero() {
                    continue;
                }
                let Some(ratio) = v.div(&d, prec) else {
                    // stationary point: nudge
                    self.approx[i].re += BigInt::one() << (prec / 2);
                    worst = u64::MAX;
                    continue;
                };
                let mut s = Fx::zero();
                for j in (0..n).filter(|&j| j != i) {
                    let diff = self.approx[i].sub(&self.approx[j]);
                    match one.div(&diff, prec) {
                        Some(q) => s = s.add(&q),
                        None => {
                            self.approx[j].im += BigInt::one() << (prec / 2);
                        }
                    }
                }
                let denom = one.sub(&ratio.mul(&s, prec));
                let Some(w) = ratio.div(&denom, prec) else {
                    continue;
                };
                worst = worst.max(w.mag_bits());
                self.approx[i] = self.approx[i].sub(&w);
            }
            if worst <= 16 {
                break;
            }
        }
    }

    /// Copies of the approximations with the nearly real ones snapped onto
    /// the axis and the rest made exact conjugate pairs, with the partner
    /// of each (`None` for real ones); `None` if the pairing is
    /// inconsistent. The working approximations stay untouched so that a
    /// pair snapped too early can still leave the axis.
    fn symmetrize(&self) -> Option<(Vec<Fx>, Vec<Option<usize>>)> {
        let mut approx = self.approx.clone();
        let tol_bits = self.prec / 2;
        let n = self.degree();
        let mut partner = vec![None; n];
        let mut upper = Vec::new();
        let mut lower = Vec::new();
        for (i, z) in approx.iter_mut().enumerate() {
            if z.im.bits() <= tol_bits {
                z.im = BigInt::zero();
            } else if z.im.sign() == Sign::Plus {
                upper.push(i);
            } else {
                lower.push(i);
            }
        }
        if upper.len() != lower.len() {
            return None;
        }
        let mut used = vec![false; lower.len()];
        for &i in &upper {
            let target = approx[i].to_c64(self.prec).conj();
            let (best, _) = lower
                .iter()
                .enumerate()
                .filter(|(k, _)| !used[*k])
                .map(|(k, &j)| (k, (approx[j].to_c64(self.prec) - target).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))?;
            used[best] = true;
            let j = lower[best];
            approx[j] = Fx {
                re: approx[i].re.clone(),
                im: -approx[i].im.clone(),
            };
            partner[i] = Some(j);
            partner[j] = Some(i);
        }
        Some((approx, partner))
    }

    /// Inclusion disks for the current approximations (exact arithmetic).
    fn inclusion_disks(&self, approx: &[Fx]) -> Option<Vec<Disk>> {
        let n = self.degree();
        let prec = self.prec;
        let coeffs = self.poly.coeffs();
        let lead = coeffs[n].clone();
        let out_bits = prec + 8;
        let mut disks = Vec::with_capacity(n);
        for i in 0..n {
            let z = &approx[i];
            // S = 2^(prec n) p(z), exactly
            let mut s_re = lead.clone();
            let mut s_im = BigInt::zero();
            for (k, c) in coeffs[..n].iter().enumerate().rev() {
                let re = &s_re * &z.re - &s_im * &z.im;
                let im = &s_re * &z.im + &s_im * &z.re;
                s_re = re + (c << (prec * (n - k) as u64));
                s_im = im;
            }
            // P = 2^(prec (n-1)) prod (z_i - z_j)
            let mut p_re = BigInt::one();
            let mut p_im = BigInt::zero();
            for j in (0..n).filter(|&j| j != i) {
                let d_re = &z.re - &approx[j].re;
                let d_im = &z.im - &approx[j].im;
                let re = &p_re * &d_re - &p_im * &d_im;
                let im = &p_re * &d_im + &p_im * &d_re;
                p_re = re;
                p_im = im;
            }
            let p_norm = &p_re * &p_re + &p_im * &p_im;
            if p_norm.is_zero() {
                return None;
            }
            // W = S / (2^prec * lead * P) = S conj(P) / (2^prec lead |P|^2)
            let den = (&lead * &p_norm) << prec;
            let w_re = BigRational::new(&s_re * &p_re + &s_im * &p_im, den.clone());
            let w_im = BigRational::new(&s_im * &p_re - &s_re * &p_im, den);
            let w_abs_sq = &w_re * &w_re + &w_im * &w_im;
            let zr = BigRational::new(z.re.clone(), pow2(prec));
            let zi = BigRational::new(z.im.clone(), pow2(prec));
            let center = ComplexRational::new(
                round_dyadic(&(zr - w_re), out_bits),
                round_dyadic(&(zi - w_im), out_bits),
            );
            let radius = rat((n - 1) as i64) * sqrt_upper(&w_abs_sq, out_bits) + eps(out_bits - 1);
            disks.push(Disk::new(center, radius));
        }
        Some(disks)
    }
}

/// A certified root of one factor in a joint isolation.
#[derive(Clone, Debug)]
pub(crate) struct IsolatedRoot {
    pub disk: Disk,
    pub is_real: bool,
    /// Global index of the conjugate root.
    pub partner: Option<usize>,
    /// Which input factor the root belongs to.
    pub factor: usize,
}

/// Joint isolation of the roots of several squarefree, pairwise coprime
/// integer polynomials: every disk holds exactly one root of the product.
#[derive(Clone, Debug)]
pub(crate) struct Isolator {
    factors: Vec<FactorState>,
}

impl Isolator {
    pub fn new(factors: Vec<IntPoly>) -> Self {
        Isolator {
            factors: factors
                .into_iter()
                .filter(|f| f.degree().unwrap_or(0) > 0)
                .map(FactorState::new)
                .collect(),
        }
    }

    /// Refines to `prec` bits and tries to certify. Roots come out per
    /// factor: real roots by increasing center, then conjugate pairs with
    /// the upper member first.
    pub fn certify_at(&mut self, prec: u64) -> Option<Vec<IsolatedRoot>> {
        let mut out: Vec<IsolatedRoot> = Vec::new();
        for (fi, f) in self.factors.iter_mut().enumerate() {
            f.refine(prec);
            let (approx, partner) = f.symmetrize()?;
            let disks = f.inclusion_disks(&approx)?;
            let mut order: Vec<usize> =
                (0..disks.len()).filter(|&i| partner[i].is_none()).collect();
            order.sort_by(|&a, &b| disks[a].center.re.cmp(&disks[b].center.re));
            let mut pairs: Vec<usize> = (0..disks.len())
                .filter(|&i| partner[i].is_some() && approx[i].im.sign() == Sign::Plus)
                .collect();
            pairs.sort_by(|&a, &b| {
                (&disks[a].center.re, &disks[a].center.im)
                    .cmp(&(&disks[b].center.re, &disks[b].center.im))
            });
            let base = out.len();
            for &i in &order {
                out.push(IsolatedRoot {
                    disk: disks[i].clone(),
                    is_real: true,
                    partner: None,
                    factor: fi,
                });
            }
            for (k, &i) in pairs.iter().enumerate() {
                let j = partner[i].unwrap();
                let upper = base + order.len() + 2 * k;
                out.push(IsolatedRoot {
                    disk: disks[i].clone(),
                    is_real: false,
                    partner: Some(upper + 1),
                    factor: fi,
                });
                out.push(IsolatedRoot {
                    disk: disks[j].clone(),
                    is_real: false,
                    partner: Some(upper),
                    factor: fi,
                });
            }
        }
        for i in 0..out.len() {
            for j in i + 1..out.len() {
                if out[i].disk.intersects(&out[j].disk) {
                    return None;
                }
            }
        }
        Some(out)
    }
}

/// Rational lower bound on the minimum distance between distinct roots of
/// a squarefree integer polynomial of degree `d >= 2` (Mahler):
/// `sep >= sqrt(3) d^(-(d+2)/2) ||p||_2^(1-d)`, using `|disc| >= 1`.
pub fn separation_bound(p: &IntPoly) -> BigRational {
    let d = p.degree().unwrap_or(0);
    if d < 2 {
        return BigRational::one();
    }
    let norm_up = sqrt_upper(&BigRational::from_integer(p.norm2_squared()), 8);
    let d_pow = num_traits::pow(BigInt::from(d), (d + 3) / 2);
    let denom = BigRational::from_integer(d_pow) * num_traits::pow(norm_up, d - 1);
    BigRational::new(3.into(), 2.into()) / denom
}

/// Number of fractional bits at which approximations are accurate to a
/// small fraction of the separation bound.
pub fn separation_bits(p: &IntPoly) -> u64 {
    let sep = separation_bound(p);
    let inv = (BigRational::one() / sep).ceil().to_integer();
    inv.bits() + 2 * (p.degree().unwrap_or(1) as u64).max(1).ilog2() as u64 + 8
}

/// Certified root box of a polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RootBox {
    pub center: ComplexRational,
    pub radius: BigRational,
    pub multiplicity: usize,
    pub is_real: bool,
    pub conjugate_partner: Option<usize>,
}

impl RootBox {
    pub fn disk(&self) -> Disk {
        Disk::new(self.center.clone(), self.radius.clone())
    }
}

/// Isolates every complex root of a squarefree polynomial in a disk of
/// radius at most `eps`.
pub fn isolate_roots(p: &IntPoly, eps: &BigRational) -> Result<Vec<RootBox>> {
    let deg = p.degree().unwrap_or(0);
    if deg == 0 {
        return Err(Error::InvalidArgument(
            "polynomial must have degree >= 1".into(),
        ));
    }
    if !eps.is_positive() {
        return Err(Error::InvalidArgument("precision must be positive".into()));
    }
    if !p.gcd(&p.derivative()).is_one() {
        return Err(Error::InvalidArgument(
            "polynomial must be squarefree".into(),
        ));
    }
    let eps_bits = (BigRational::one() / eps).ceil().to_integer().bits() + 1;
    let limit = 4 * (separation_bits(p) + eps_bits) + 256;
    let mut iso = Isolator::new(vec![p.clone()]);
    let mut prec = START_PREC;
    while prec <= limit {
        if let Some(roots) = iso.certify_at(prec) {
            if roots.iter().all(|r| r.disk.radius <= *eps) {
                return Ok(roots
                    .into_iter()
                    .map(|r| RootBox {
                        center: r.disk.center,
                        radius: r.disk.radius,
                        multiplicity: 1,
                        is_real: r.is_real,
                        conjugate_partner: r.partner,
                    })
                    .collect());
            }
        }
        prec *= 2;
    }
    Err(Error::RefinementFailed { bits: limit })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectra::ball::to_decimal;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn tiny() -> BigRational {
        eps(40)
    }

    #[test]
    fn plus_minus_i() {
        let roots = isolate_roots(&p(&[1, 0, 1]), &tiny()).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.iter().all(|r| !r.is_real));
        assert_eq!(roots[0].conjugate_partner, Some(1));
        assert_eq!(roots[1].conjugate_partner, Some(0));
        let i = ComplexRational::new(rat(0), rat(1));
        assert!(roots[0].disk().contains(&i));
    }

    #[test]
    fn hp_char_poly_roots() {
        let roots = isolate_roots(&p(&[-1, 1, 1, 1]), &tiny()).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots[0].is_real);
        assert_eq!(to_decimal(&roots[0].center.re, 4), "0.5437");
        assert!(!roots[1].is_real);
        assert_eq!(to_decimal(&roots[1].center.re, 4), "-0.7718");
        assert_eq!(to_decimal(&roots[1].center.im, 4), "1.1151");
        assert_eq!(to_decimal(&roots[2].center.im, 4), "-1.1151");
    }

    #[test]
    fn integer_roots() {
        let roots = isolate_roots(&p(&[6, -5, 1]), &tiny()).unwrap();
        assert!(roots.iter().all(|r| r.is_real));
        assert!(roots[0]
            .disk()
            .contains(&ComplexRational::new(rat(2), rat(0))));
        assert!(roots[1]
            .disk()
            .contains(&ComplexRational::new(rat(3), rat(0))));
    }

    #[test]
    fn radii_shrink_with_precision() {
        let f = p(&[-1, -1, -1, 1]);
        let coarse = isolate_roots(&f, &eps(20)).unwrap();
        let fine = isolate_roots(&f, &eps(200)).unwrap();
        for (a, b) in coarse.iter().zip(&fine) {
            assert!(b.radius <= a.radius);
            assert!(b.radius <= eps(200));
            assert!(a.disk().intersects(&b.disk()));
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(isolate_roots(&p(&[1, -2, 1]), &tiny()).is_err());
        assert!(isolate_roots(&p(&[5]), &tiny()).is_err());
    }

    #[test]
    fn newton_start_follows_magnitudes() {
        // roots 1 and 2^100
        let big: BigInt = BigInt::one() << 100;
        let f = IntPoly::new(vec![big.clone(), -(&big + BigInt::one()), BigInt::one()]);
        let mut radii: Vec<f64> = newton_start(f.coeffs())
            .iter()
            .map(|z| z.norm().log2())
            .collect();
        radii.sort_by(f64::total_cmp);
        assert!(radii[0].abs() < 1.0, "{radii:?}");
        assert!((radii[1] - 100.0).abs() < 1.0, "{radii:?}");
    }

    #[test]
    fn wide_dynamic_range() {
        // t^3 - 2 (a t - 1)^2 with a = 2^100: two real roots near 2^-100,
        // about 2^-150 apart, and one near 2^201
        let a: BigInt = BigInt::one() << 100;
        let f = IntPoly::new(vec![
            BigInt::from(-2),
            &a * BigInt::from(4),
            -(&a * &a * BigInt::from(2)),
            BigInt::one(),
        ]);
        let roots = isolate_roots(&f, &eps(200)).unwrap();
        assert_eq!(roots.len(), 3);
        assert!(roots.iter().all(|r| r.is_real));
        for (i, r) in roots.iter().enumerate() {
            for s in &roots[i + 1..] {
                assert!(!r.disk().intersects(&s.disk()));
            }
        }
    }

    #[test]
    fn close_roots_separate() {
        // (1000x - 1)(1001x - 1)
        let f = &p(&[-1, 1000]) * &p(&[-1, 1001]);
        let roots = isolate_roots(&f, &eps(30)).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(!roots[0].disk().intersects(&roots[1].disk()));
    }

    #[test]
    fn near_real_pair_is_not_called_real() {
        // x^2 - 2x + 1 + 10^-12 scaled: 10^12 x^2 - 2 10^12 x + 10^12 + 1
        let t = 1_000_000_000_000i64;
        let f = p(&[t + 1, -2 * t, t]);
        let roots = isolate_roots(&f, &eps(60)).unwrap();
        assert!(roots.iter().all(|r| !r.is_real));
    }

    #[test]
    fn separation_bound_is_below_true_gap() {
        let f = p(&[-1, 1000]) * p(&[-1, 1001]);
        let gap = BigRational::new(1.into(), (1000 * 1001).into());
        assert!(separation_bound(&f) <= gap);
        assert!(separation_bits(&f) > 0);
    }
}
