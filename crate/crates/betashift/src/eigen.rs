//! The power series φ_t and the leading transfer-operator eigenvalue.
//!
//! Everything downstream hangs off one scalar equation: with q the
//! quasi-greedy digits of 1 and H_{n−1} = exp(t·#{ones among q_1…q_{n−1}}),
//! the series φ_t(z) = Σ q_n H_{n−1} z^n has a unique positive zero η_t of
//! 1 − φ_t, and λ_t = 1/η_t is the leading eigenvalue of the weighted
//! transfer operator. This module evaluates φ_t (exactly, via geometric
//! resummation, whenever the digits are eventually periodic; otherwise by a
//! guarded truncated sum), solves for λ_t, computes the normalizer
//! F(t) = Σ n q_n H_{n−1}/λ_t^n, and locates subleading zeros of 1 − φ_t,
//! which control the mixing rate.
//!
//! Numerical posture: all sums run in log space (terms are exp(t·S + n·u)
//! with u = ln z), so nothing overflows for |t| ≤ 40; the resummation
//! denominator 1 − e^w is computed as −expm1(w), which keeps full relative
//! precision even when the per-period weight is within an ulp of 1.

use alloc::vec;
use alloc::vec::Vec;

pub use num_complex::Complex64;

use crate::beta::BetaContext;
use crate::error::{Error, Result};
use crate::math;
use crate::T_CAP;

/// Residual target used by the convenience wrappers that take no tolerance.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Window length for the adaptive tail guard of truncated series (blocks of
/// this many indices are compared to estimate the decay ratio).
const GUARD_WINDOW: usize = 64;

/// Lazy view of the series coefficients c_n = q_n(1)·exp(t·S_{n−1}).
/// Coefficients are produced on demand rather than materialized because
/// exp(t·S_{n−1}) overflows binary64 for large t·n while every quantity we
/// actually need stays finite in log space.
#[derive(Clone, Debug)]
pub struct PhiCoefficients {
    pub t: f64,
    digits: Vec<u8>,
    prefix_ones: Vec<u32>,
    pub length: usize,
}

impl PhiCoefficients {
    pub fn new(ctx: &BetaContext, t: f64, length: usize) -> Self {
        let digits = ctx.expand_one(length);
        let mut prefix_ones = Vec::with_capacity(digits.len() + 1);
        prefix_ones.push(0u32);
        for &d in &digits {
            prefix_ones.push(prefix_ones.last().unwrap() + d as u32);
        }
        let length = digits.len();
        PhiCoefficients { t, digits, prefix_ones, length }
    }

    /// c_n for 1-based n ≤ length. May overflow to infinity for large
    /// positive t·n; use `log_coefficient` in that regime.
    pub fn coefficient(&self, n: usize) -> f64 {
        if self.digits[n - 1] == 0 {
            0.0
        } else {
            math::exp(self.t * self.prefix_ones[n - 1] as f64)
        }
    }

    /// ln c_n for indices with q_n = 1; `None` where the coefficient is 0.
    pub fn log_coefficient(&self, n: usize) -> Option<f64> {
        if self.digits[n - 1] == 0 {
            None
        } else {
            Some(self.t * self.prefix_ones[n - 1] as f64)
        }
    }
}

/// The leading eigenvalue at one parameter value, with its certification.
#[derive(Clone, Copy, Debug)]
pub struct LeadingEigen {
    pub t: f64,
    pub lambda: f64,
    pub eta: f64,
    /// Series length used (period length for resummed evaluations).
    pub truncation: usize,
    /// Certified bound on |φ_t(η) − 1|.
    pub err_bound: f64,
    /// Normalizer F(t) = Σ n q_n H_{n−1}/λ^n, computed at the same η.
    pub f_t: f64,
}

/// φ_t in closed form for eventually periodic digits:
/// φ_t(z) = A(z, e^t) + B(z, e^t)/(1 − e^{st} z^p), where A collects the
/// preperiod terms, B one period's worth, p is the period length and s the
/// number of ones per period. Term tables hold (power of z, power of e^t).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalPhi {
    pub a_terms: Vec<(u32, u32)>,
    pub b_terms: Vec<(u32, u32)>,
    pub period_len: u32,
    pub period_ones: u32,
}

impl RationalPhi {
    /// Evaluate at real (t, z); +∞ when the geometric factor does not
    /// converge (e^{st} z^p ≥ 1).
    pub fn eval(&self, t: f64, z: f64) -> f64 {
        if z < 0.0 {
            return f64::NAN;
        }
        if z == 0.0 {
            return 0.0;
        }
        let u = math::ln(z);
        let mut a = 0.0;
        for &(j, s) in &self.a_terms {
            a += math::exp(t * s as f64 + j as f64 * u);
        }
        let mut b = 0.0;
        for &(j, s) in &self.b_terms {
            b += math::exp(t * s as f64 + j as f64 * u);
        }
        let w = t * self.period_ones as f64 + self.period_len as f64 * u;
        if w >= 0.0 {
            return f64::INFINITY;
        }
        a + b / (-math::expm1(w))
    }

    /// Evaluate at complex z (used for zero residuals).
    pub fn eval_complex(&self, t: f64, z: Complex64) -> Complex64 {
        let mut a = Complex64::new(0.0, 0.0);
        for &(j, s) in &self.a_terms {
            a += z.powu(j) * math::exp(t * s as f64);
        }
        let mut b = Complex64::new(0.0, 0.0);
        for &(j, s) in &self.b_terms {
            b += z.powu(j) * math::exp(t * s as f64);
        }
        let r = z.powu(self.period_len) * math::exp(t * self.period_ones as f64);
        a + b / (Complex64::new(1.0, 0.0) - r)
    }
}

/// Rational (resummed) form of φ_t, available exactly when the digits of 1
/// are eventually periodic.
pub fn rationalize_phi(ctx: &BetaContext) -> Result<RationalPhi> {
    let seq = &ctx.one_digits;
    let period = match &seq.period {
        Some(p) => p,
        None => {
            return Err(Error::Unsupported(
                "no detected period in the digits of 1; rational form unavailable",
            ))
        }
    };
    let p0 = seq.preperiod.len();
    let mut a_terms = Vec::new();
    let mut ones = 0u32;
    for (i, &d) in seq.preperiod.iter().enumerate() {
        if d == 1 {
            a_terms.push(((i + 1) as u32, ones));
            ones += 1;
        }
    }
    let mut b_terms = Vec::new();
    let ones_at_period_start = ones;
    for (i, &d) in period.iter().enumerate() {
        if d == 1 {
            b_terms.push(((p0 + i + 1) as u32, ones));
            ones += 1;
        }
    }
    Ok(RationalPhi {
        a_terms,
        b_terms,
        period_len: period.len() as u32,
        period_ones: ones - ones_at_period_start,
    })
}

/// The three sums every consumer needs, all at the same point u = ln z:
/// φ itself, dφ/du = Σ n c_n z^n (which *is* the normalizer sum when
/// z = η), and the frequency numerator Σ S_{n−1} c_n z^n.
#[derive(Clone, Copy, Debug)]
struct PhiParts {
    phi: f64,
    dphi_du: f64,
    freq_num: f64,
    /// Certified bound on the truncation tail of φ (0 for resummed forms up
    /// to rounding, which is folded in by the caller).
    tail: f64,
}

pub(crate) enum PhiEvaluator {
    Periodic(PeriodicPhi),
    Truncated(TruncatedPhi),
}

pub(crate) struct PeriodicPhi {
    t: f64,
    /// (index j as f64, ones before j) for preperiod positions with digit 1.
    pre: Vec<(f64, f64)>,
    /// Same for one period's worth of positions (absolute indices).
    per: Vec<(f64, f64)>,
    period_len: f64,
    period_ones: f64,
}

pub(crate) struct TruncatedPhi {
    t: f64,
    /// (index n as f64, ones before n) over indices with q_n = 1, ascending.
    ones: Vec<(f64, f64)>,
    /// Total index range covered (known digits), not just the one-count.
    len: f64,
    /// Length of the longest run of consecutive ones in the digit data.
    /// Admissibility forbids longer runs anywhere in the (unknown) tail,
    /// which yields a last-resort rigorous tail bound.
    max_run: f64,
}

impl PeriodicPhi {
    fn parts(&self, u: f64) -> PhiParts {
        let t = self.t;
        let w = t * self.period_ones + self.period_len * u;
        if w >= 0.0 {
            return PhiParts {
                phi: f64::INFINITY,
                dphi_du: f64::INFINITY,
                freq_num: f64::INFINITY,
                tail: 0.0,
            };
        }
        let one_minus_r = -math::expm1(w); // 1 − R, full relative precision
        let r = math::exp(w);
        let geo = 1.0 / one_minus_r;
        let geo_k = r / (one_minus_r * one_minus_r); // Σ k R^k
        let mut phi = 0.0;
        let mut dphi = 0.0;
        let mut num = 0.0;
        for &(j, s) in &self.pre {
            let term = math::exp(t * s + j * u);
            phi += term;
            dphi += j * term;
            num += s * term;
        }
        for &(j, s) in &self.per {
            let term = math::exp(t * s + j * u);
            phi += term * geo;
            dphi += term * (j * geo + self.period_len * geo_k);
            num += term * (s * geo + self.period_ones * geo_k);
        }
        PhiParts { phi, dphi_du: dphi, freq_num: num, tail: 0.0 }
    }

    /// Is φ(e^u) > 1? Exact up to rounding — the closed form has no tail.
    fn pred_gt_one(&self, u: f64) -> bool {
        self.parts(u).phi > 1.0
    }
}

impl TruncatedPhi {
    fn parts(&self, u: f64) -> Result<PhiParts> {
        let t = self.t;
        if self.ones.is_empty() {
            return Ok(PhiParts { phi: 0.0, dphi_du: 0.0, freq_num: 0.0, tail: 0.0 });
        }
        // log-sum-exp over l_n = t·S_{n−1} + n·u so no intermediate
        // over/underflows regardless of t
        let mut peak = f64::NEG_INFINITY;
        for &(n, s) in &self.ones {
            peak = peak.max(t * s + n * u);
        }
        if peak > 700.0 {
            // a single term already exceeds f64 range: the value is beyond
            // representation, which only the >1 predicate cares about
            return Ok(PhiParts {
                phi: f64::INFINITY,
                dphi_du: f64::INFINITY,
                freq_num: f64::INFINITY,
                tail: 0.0,
            });
        }
        let scale = math::exp(peak);
        let mut phi = 0.0;
        let mut dphi = 0.0;
        let mut num = 0.0;
        let mut last_term = 0.0;
        // last index whose (scaled) term is numerically alive: guard
        // windows anchor there rather than at the end of the data, which
        // may sit hundreds of orders of magnitude below the peak
        let mut live_end = self.len;
        for &(n, s) in &self.ones {
            let term = math::exp(t * s + n * u - peak);
            phi += term;
            dphi += n * term;
            num += s * term;
            last_term = term;
            if term >= 1e-280 {
                live_end = n;
            }
        }
        let (tail_scaled, ratio) = self.tail_bound(u, peak, last_term, live_end)?;
        // majorant for the tails of the n- and S-weighted sums:
        // Σ_k (L+k)ρ^k = L·ρ/(1−ρ) + ρ/(1−ρ)² over the extra indices
        let dtail = tail_scaled * (self.len + 2.0 / (1.0 - ratio));
        Ok(PhiParts {
            phi: scale * phi,
            dphi_du: scale * (dphi + dtail),
            freq_num: scale * num,
            tail: scale * tail_scaled,
        })
    }

    /// Tail bound (in the scaled space of `parts`), or a divergence error
    /// when no geometric control is available at this z.
    ///
    /// Three rungs:
    /// 1. consecutive nonzero terms differ by e^{t·Δones}·z^{gap} ≤ z·e^t
    ///    for z ≤ 1, any t — rigorous whenever that is < 1;
    /// 2. block-sum decay over windows (64/256/1024 indices) anchored at
    ///    the last numerically live term: the empirical per-block ratio
    ///    ρ̂ < 0.999 bounds everything past the anchor by the geometric
    ///    formula — the documented practical surrogate when rung 1 fails;
    /// 3. run-length combinatorics: no admissible continuation packs ones
    ///    denser than runs of max_run separated by single zeros, so the
    ///    tail is geometric with log-ratio κ = t⁺·max_run/(max_run+1) + u
    ///    whenever κ < 0 — rigorous, and independent of the data.
    fn tail_bound(&self, u: f64, peak: f64, last_term: f64, live_end: f64) -> Result<(f64, f64)> {
        let t = self.t;
        let z = math::exp(u);
        let ratio = z * math::exp(t);
        if z <= 1.0 && ratio < 0.999 {
            return Ok((last_term * ratio / (1.0 - ratio), ratio));
        }
        let mut seen = 0.0f64;
        for w in [GUARD_WINDOW as f64, 256.0, 1024.0] {
            let mut prev = 0.0;
            let mut last = 0.0;
            for &(n, s) in &self.ones {
                if n > live_end - w && n <= live_end {
                    last += math::exp(t * s + n * u - peak);
                } else if n > live_end - 2.0 * w && n <= live_end - w {
                    prev += math::exp(t * s + n * u - peak);
                }
            }
            if prev > 0.0 && last > 0.0 {
                let rho = last / prev;
                seen = rho;
                if rho < 0.999 {
                    return Ok((last * rho / (1.0 - rho), rho));
                }
            }
        }
        if z <= 1.0 {
            let r = self.max_run;
            let kappa = t.max(0.0) * r / (r + 1.0) + u;
            if kappa < -1e-9 {
                // a continuation window of w indices has at most
                // w·r/(r+1) + 1 ones (runs of ≤ r need separating zeros),
                // so tail terms are ≤ exp(t(S_L+1) + (L+k)u + t⁺·k·r/(r+1))
                let rho = math::exp(kappa);
                let s_end = self.ones.last().map(|&(_, s)| s + 1.0).unwrap_or(1.0);
                let log_head =
                    t.max(0.0) * (s_end + 1.0) + t.min(0.0) * s_end + self.len * u;
                let bound = math::exp(log_head - peak) * rho / (1.0 - rho);
                return Ok((bound, rho));
            }
        }
        Err(Error::Divergence { t, z, ratio: if seen > 0.0 { seen } else { ratio } })
    }

    /// Is φ(e^u) > 1? Early-exits on the partial sum (terms are positive,
    /// so a partial sum above 1 is conclusive). When the partial stays
    /// below 1 and the tail cannot be certified, answer "no": bisection
    /// then brackets the partial-sum root from above, and the Newton polish
    /// (whose evaluations near the root do have certifiable tails) absorbs
    /// the difference into the reported residual.
    fn pred_gt_one(&self, u: f64) -> bool {
        let t = self.t;
        let mut partial = 0.0;
        for &(n, s) in &self.ones {
            partial += math::exp(t * s + n * u);
            if partial > 1.0 {
                return true;
            }
        }
        match self.parts(u) {
            Ok(p) => p.phi + p.tail >= 1.0,
            Err(_) => false,
        }
    }
}

impl PhiEvaluator {
    pub(crate) fn new(ctx: &BetaContext, t: f64) -> Self {
        let seq = &ctx.one_digits;
        match &seq.period {
            Some(period) => {
                let mut pre = Vec::new();
                let mut ones = 0.0f64;
                for (i, &d) in seq.preperiod.iter().enumerate() {
                    if d == 1 {
                        pre.push(((i + 1) as f64, ones));
                        ones += 1.0;
                    }
                }
                let start_ones = ones;
                let mut per = Vec::new();
                for (i, &d) in period.iter().enumerate() {
                    if d == 1 {
                        per.push(((seq.preperiod.len() + i + 1) as f64, ones));
                        ones += 1.0;
                    }
                }
                PhiEvaluator::Periodic(PeriodicPhi {
                    t,
                    pre,
                    per,
                    period_len: period.len() as f64,
                    period_ones: ones - start_ones,
                })
            }
            None => {
                let mut ones = Vec::new();
                let mut s = 0.0f64;
                let mut run = 0u32;
                let mut max_run = 0u32;
                for (i, &d) in seq.preperiod.iter().enumerate() {
                    if d == 1 {
                        ones.push(((i + 1) as f64, s));
                        s += 1.0;
                        run += 1;
                        max_run = max_run.max(run);
                    } else {
                        run = 0;
                    }
                }
                PhiEvaluator::Truncated(TruncatedPhi {
                    t,
                    ones,
                    len: seq.preperiod.len() as f64,
                    max_run: max_run.max(1) as f64,
                })
            }
        }
    }

    fn parts(&self, u: f64) -> Result<PhiParts> {
        match self {
            PhiEvaluator::Periodic(p) => Ok(p.parts(u)),
            PhiEvaluator::Truncated(p) => p.parts(u),
        }
    }

    fn pred_gt_one(&self, u: f64) -> bool {
        match self {
            PhiEvaluator::Periodic(p) => p.pred_gt_one(u),
            PhiEvaluator::Truncated(p) => p.pred_gt_one(u),
        }
    }

    fn series_len(&self) -> usize {
        match self {
            PhiEvaluator::Periodic(p) => (p.pre.len() + p.per.len()).max(1),
            PhiEvaluator::Truncated(p) => p.ones.len(),
        }
    }
}

/// Everything the leading-eigenvalue solve produces in one pass.
pub(crate) struct Solved {
    pub eigen: LeadingEigen,
    /// Digit frequency α(t) = freq_num / F at η (certified by the same
    /// tails as F itself).
    pub alpha: f64,
}

fn check_t(t: f64) -> Result<()> {
    if !t.is_finite() || math::abs(t) > T_CAP {
        return Err(Error::Range { what: "t (|t| capped at 40)", value: t });
    }
    Ok(())
}

/// Solve φ_t(e^u) = 1 for u = ln η: bisection on the guaranteed bracket
/// [−ln(1+e^t), 0] down to width 1e−6, then safeguarded Newton in u.
pub(crate) fn solve_leading(ctx: &BetaContext, t: f64, tol: f64) -> Result<Solved> {
    check_t(t)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain { what: "tol", value: tol });
    }
    let eval = PhiEvaluator::new(ctx, t);
    let u_floor = -math::ln_1p_exp(t);
    let (mut lo, mut hi);
    if eval.pred_gt_one(u_floor) {
        // φ already ≥ 1 at the theoretical floor: the root sits at the
        // floor itself up to rounding (the full-shift case). Hand Newton a
        // pinhole bracket around it.
        lo = u_floor - 1e-9 * (1.0 + math::abs(u_floor));
        hi = u_floor + 1e-9 * (1.0 + math::abs(u_floor));
    } else {
        lo = u_floor;
        hi = 0.0;
        while hi - lo > 1e-6 {
            let mid = 0.5 * (lo + hi);
            if eval.pred_gt_one(mid) {
                hi = mid;
            } else {
                lo = mid;
            }
        }
    }

    let mut u = 0.5 * (lo + hi);
    let mut best = (u, f64::INFINITY, PhiParts { phi: 0.0, dphi_du: 1.0, freq_num: 0.0, tail: 0.0 });
    let mut guard_failures = 0;
    for _ in 0..100 {
        let p = match eval.parts(u) {
            Ok(p) => p,
            Err(_) => {
                // tail not certifiable here; nudge toward the bracket floor
                // a few times, then settle for the best certified point
                guard_failures += 1;
                if guard_failures > 8 {
                    break;
                }
                u = 0.75 * lo + 0.25 * u;
                continue;
            }
        };
        if !p.phi.is_finite() {
            hi = u;
            u = 0.5 * (lo + hi);
            continue;
        }
        let g = p.phi - 1.0;
        let residual = math::abs(g) + p.tail;
        if residual < best.1 {
            best = (u, residual, p);
        }
        if g > 0.0 {
            hi = u;
        } else {
            lo = u;
        }
        if residual <= tol.min(DEFAULT_TOL) {
            break;
        }
        let step = g / p.dphi_du;
        let next = u - step;
        let next = if next > lo && next < hi { next } else { 0.5 * (lo + hi) };
        if math::abs(next - u) < 1e-17 * (1.0 + math::abs(u)) {
            break;
        }
        u = next;
    }

    let (u_star, residual, p) = best;
    let eta = math::exp(u_star);
    let lambda = math::exp(-u_star);
    let f_t = p.dphi_du;
    Ok(Solved {
        eigen: LeadingEigen {
            t,
            lambda,
            eta,
            truncation: eval.series_len(),
            err_bound: residual + 8.0 * f64::EPSILON,
            f_t,
        },
        alpha: p.freq_num / f_t,
    })
}

/// Evaluate φ_t(z) with a certified error bound.
///
/// Eventually periodic digit data evaluates through the exact rational
/// form; otherwise a truncated sum with a geometric (or windowed-ratio)
/// tail bound. Fails with a divergence error when z is beyond reach of the
/// tail guard.
pub fn phi_eval(ctx: &BetaContext, t: f64, z: f64, tol: f64) -> Result<(f64, f64)> {
    check_t(t)?;
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::Domain { what: "tol", value: tol });
    }
    if z.is_nan() || z < 0.0 {
        return Err(Error::Domain { what: "z", value: z });
    }
    if z == 0.0 {
        return Ok((0.0, 0.0));
    }
    let eval = PhiEvaluator::new(ctx, t);
    let p = eval.parts(math::ln(z))?;
    let err = p.tail + 4.0 * f64::EPSILON * (1.0 + math::abs(p.phi));
    if err > tol && p.phi.is_finite() {
        return Err(Error::Divergence { t, z, ratio: err / tol });
    }
    Ok((p.phi, err))
}

/// Leading eigenvalue λ_t with certification; also carries F(t).
pub fn leading_lambda(ctx: &BetaContext, t: f64, tol: f64) -> Result<LeadingEigen> {
    solve_leading(ctx, t, tol).map(|s| s.eigen)
}

/// Pressure P(t) = ln λ_t.
pub fn pressure(ctx: &BetaContext, t: f64) -> Result<f64> {
    Ok(math::ln(leading_lambda(ctx, t, DEFAULT_TOL)?.lambda))
}

/// The normalizer F(t) = Σ n q_n(1) H_{n−1}(t)/λ_t^n carried by a solved
/// eigenvalue (it is the u-derivative of φ at the root, so the solve
/// produces it as a byproduct).
pub fn normalizer_f(_ctx: &BetaContext, eig: &LeadingEigen) -> f64 {
    eig.f_t
}

/// Zeros of 1 − φ_t(z) other than η_t with η_t < |z| ≤ modulus_cap.
///
/// Periodic digit data reduces to the polynomial
/// (1 − A(z))(1 − e^{st} z^p) − B(z); otherwise the degree-512 truncation
/// of the series is used and every candidate must pass a residual check
/// against the degree-1024 truncation, failing which the whole query is
/// reported unsupported.
pub fn subleading_zeros(ctx: &BetaContext, t: f64, modulus_cap: f64) -> Result<Vec<Complex64>> {
    check_t(t)?;
    if modulus_cap.is_nan() || modulus_cap <= 0.0 {
        return Err(Error::Domain { what: "modulus_cap", value: modulus_cap });
    }
    let eig = leading_lambda(ctx, t, DEFAULT_TOL)?;
    let eta = eig.eta;
    match rationalize_phi(ctx) {
        Ok(rat) => {
            // numerator of 1 − φ over the common denominator (1 − R):
            // M(z) = (1 − A)(1 − R) − B
            let et = math::exp(t);
            let mut one_minus_a = vec![0.0f64; 1];
            one_minus_a[0] = 1.0;
            for &(j, s) in &rat.a_terms {
                let j = j as usize;
                if one_minus_a.len() <= j {
                    one_minus_a.resize(j + 1, 0.0);
                }
                one_minus_a[j] -= math::powi(et, s as i32);
            }
            let p = rat.period_len as usize;
            let rw = math::powi(et, rat.period_ones as i32);
            // m = (1 − A) − R·(1 − A)
            let mut m = one_minus_a.clone();
            m.resize(one_minus_a.len() + p, 0.0);
            for (j, &c) in one_minus_a.iter().enumerate() {
                m[j + p] -= rw * c;
            }
            for &(j, s) in &rat.b_terms {
                let j = j as usize;
                if m.len() <= j {
                    m.resize(j + 1, 0.0);
                }
                m[j] -= math::powi(et, s as i32);
            }
            let roots = polynomial_roots(&m);
            let mut out = Vec::new();
            for z in roots {
                if (z - Complex64::new(eta, 0.0)).norm() <= 1e-6 * (1.0 + eta) {
                    continue; // the leading zero itself
                }
                if z.norm() > modulus_cap {
                    continue;
                }
                let residual = (Complex64::new(1.0, 0.0) - rat.eval_complex(t, z)).norm();
                if residual <= 1e-8 {
                    out.push(z);
                }
            }
            out.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
            Ok(out)
        }
        Err(_) => {
            // truncation polynomial, rescaled by η so coefficients stay
            // bounded (c_n η^n ≤ 1 term by term since φ(η) = 1)
            let degree = 512usize;
            let coeffs = PhiCoefficients::new(ctx, t, degree.max(1024));
            let avail = coeffs.length;
            let build = |deg: usize| -> Vec<f64> {
                let deg = deg.min(avail);
                let mut c = vec![0.0f64; deg + 1];
                c[0] = 1.0;
                for (n, cn) in c.iter_mut().enumerate().skip(1) {
                    if let Some(lc) = coeffs.log_coefficient(n) {
                        *cn -= math::exp(lc + n as f64 * math::ln(eta));
                    }
                }
                c
            };
            let poly = build(degree);
            let check = build(degree * 2);
            let roots = polynomial_roots(&poly);
            let mut out = Vec::new();
            for w in roots {
                let z = w * eta;
                if (z - Complex64::new(eta, 0.0)).norm() <= 1e-6 * (1.0 + eta) {
                    continue;
                }
                if z.norm() > modulus_cap {
                    continue;
                }
                // residual of the longer truncation at the same point
                let mut v = Complex64::new(0.0, 0.0);
                for c in check.iter().rev() {
                    v = v * w + c;
                }
                if v.norm() < 1e-6 {
                    out.push(z);
                } else {
                    return Err(Error::Unsupported(
                        "truncation root failed the long-truncation residual check",
                    ));
                }
            }
            out.sort_by(|a, b| a.norm().partial_cmp(&b.norm()).unwrap());
            Ok(out)
        }
    }
}

/// Upper bound on the mixing rate, normalized by λ_t:
/// max(r̂_t, max |1/z| over subleading zeros)/λ_t where
/// r̂_t = exp(t⁺·digit_frequency_estimate) is the documented proxy for the
/// growth rate r_t. Since r̂_t ≥ 1, only zeros with |z| ≤ 1 can matter, so
/// the internal zero search is capped at modulus 1.
pub fn mixing_rate_bound(ctx: &BetaContext, t: f64) -> Result<f64> {
    let eig = leading_lambda(ctx, t, DEFAULT_TOL)?;
    let r_hat = math::exp(t.max(0.0) * ctx.digit_frequency_estimate);
    let zeros = subleading_zeros(ctx, t, 1.0)?;
    let mut m = r_hat;
    for z in zeros {
        m = m.max(1.0 / z.norm());
    }
    Ok(m / eig.lambda)
}

/// All roots of a real-coefficient polynomial (ascending coefficients) by
/// Durand–Kerner iteration. Degenerate leading/trailing coefficients are
/// stripped; degree ≤ 2 is closed-form.
fn polynomial_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let scale = coeffs.iter().fold(0.0f64, |a, &c| a.max(math::abs(c)));
    if scale == 0.0 {
        return Vec::new();
    }
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.len() > 1 && math::abs(*c.last().unwrap()) < 1e-14 * scale {
        c.pop();
    }
    let deg = c.len() - 1;
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![Complex64::new(-c[0] / c[1], 0.0)];
    }
    if deg == 2 {
        return quadratic_roots(c[2], c[1], c[0]);
    }
    durand_kerner(&c)
}

/// Roots of a z² + b z + c, cancellation-free in the small real root.
fn quadratic_roots(a: f64, b: f64, c: f64) -> Vec<Complex64> {
    let disc = b * b - 4.0 * a * c;
    if disc >= 0.0 {
        let sq = math::sqrt(disc);
        let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
        let r1 = q / a;
        let r2 = if q != 0.0 { c / q } else { 0.0 };
        vec![Complex64::new(r1, 0.0), Complex64::new(r2, 0.0)]
    } else {
        let sq = math::sqrt(-disc);
        vec![
            Complex64::new(-b / (2.0 * a), sq / (2.0 * a)),
            Complex64::new(-b / (2.0 * a), -sq / (2.0 * a)),
        ]
    }
}

fn durand_kerner(c: &[f64]) -> Vec<Complex64> {
    let deg = c.len() - 1;
    let lead = c[deg];
    let monic: Vec<f64> = c.iter().map(|&x| x / lead).collect();
    let eval = |z: Complex64| -> Complex64 {
        let mut v = Complex64::new(0.0, 0.0);
        for &co in monic.iter().rev() {
            v = v * z + co;
        }
        v
    };
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..deg).map(|k| seed.powu(k as u32 + 1)).collect();
    for _ in 0..600 {
        let mut moved = 0.0f64;
        for i in 0..deg {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..deg {
                if j != i {
                    denom *= roots[i] - roots[j];
                }
            }
            if denom.norm() == 0.0 {
                // perturb coincident iterates
                roots[i] += Complex64::new(1e-8, 1e-8);
                continue;
            }
            let delta = eval(roots[i]) / denom;
            roots[i] -= delta;
            moved = moved.max(delta.norm());
        }
        if moved < 1e-13 {
            break;
        }
    }
    roots
}
