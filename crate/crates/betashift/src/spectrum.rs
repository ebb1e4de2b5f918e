//! Digit-frequency function α(t), the Hausdorff dimension spectrum of
//! digit-frequency level sets, its inversion t(p), rigorous bounds on the
//! maximal frequency c_β, and classical closed-form baselines
//! (Besicovitch for β = 2, Fan–Zhu for the golden ratio, and the general
//! Parry-family formula).

use crate::beta::BetaContext;
use crate::eigen::{self, LeadingEigen};
use crate::error::{Error, Result};
use crate::math;
use crate::T_CAP;

use alloc::vec::Vec;

/// Default inversion tolerance on |α(t) − p|.
pub const DEFAULT_ALPHA_TOL: f64 = 1e-10;

/// One row of a dimension-spectrum sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumPoint {
    pub t: f64,
    pub lambda: f64,
    pub pressure: f64,
    pub alpha: f64,
    pub dim: f64,
}

/// Dimension-spectrum value at a requested frequency α, with the
/// parameter t used (when the value came from inversion) and a flag for
/// boundary values resolved by one-sided limits instead of inversion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimOfAlpha {
    pub alpha: f64,
    pub dim: f64,
    pub t: Option<f64>,
    pub extrapolated: bool,
}

/// Rigorous and numeric information about c_β, the supremum of digit-1
/// frequencies over the shift.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CBetaReport {
    /// Length of the leading run of 1s in the expansion of 1.
    pub n_ones: u32,
    /// Length of the following run of 0s (0 when no zero occurs).
    pub m_zeros: u32,
    pub lower: f64,
    pub upper: f64,
    /// Exact value when the expansion matches a recognized family.
    pub exact: Option<f64>,
    /// α(t_max) with t_max = 30, a numeric stand-in for the supremum.
    pub numeric_estimate: f64,
}

/// Closed-form dimension baselines.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Baseline {
    /// β = 2: binary-digit frequency sets, dim = H(α)/log 2.
    Besicovitch,
    /// Golden ratio: identical to `ParryFamily(1)`.
    FanZhu,
    /// β the root in (1,2) of x^{N+1} = x^N + 1.
    ParryFamily(u32),
}

/// Digit-1 frequency α(t) of the equilibrium state, computed from the
/// certified series at the leading eigenvalue.
pub fn alpha_of_t(ctx: &BetaContext, t: f64) -> Result<f64> {
    let solved = eigen::solve_leading(ctx, t, eigen::DEFAULT_TOL)?;
    check_alpha(solved.alpha)
}

fn check_alpha(alpha: f64) -> Result<f64> {
    if !alpha.is_finite() || alpha <= 0.0 || alpha >= 1.0 {
        return Err(Error::Inconsistent {
            what: "digit frequency outside (0,1)",
            value: alpha,
        });
    }
    Ok(alpha)
}

/// Central finite difference (P(t+h) − P(t−h)) / 2h of the pressure —
/// a cross-check oracle for `alpha_of_t`, second order in h.
pub fn alpha_fd(ctx: &BetaContext, t: f64, h: f64) -> Result<f64> {
    if h.is_nan() || h <= 0.0 {
        return Err(Error::Domain {
            what: "finite-difference step must be positive",
            value: h,
        });
    }
    let hi = eigen::pressure(ctx, t + h)?;
    let lo = eigen::pressure(ctx, t - h)?;
    Ok((hi - lo) / (2.0 * h))
}

/// Full spectrum point at parameter t: λ_t, P(t), α(t) and
/// dim = (P(t) − t·α(t)) / log β, clamped into [0,1] when within 1e−9
/// of the interval and rejected as inconsistent otherwise.
pub fn dim_at_t(ctx: &BetaContext, t: f64) -> Result<SpectrumPoint> {
    let solved = eigen::solve_leading(ctx, t, eigen::DEFAULT_TOL)?;
    point_from_solution(ctx, t, &solved.eigen, solved.alpha)
}

fn point_from_solution(
    ctx: &BetaContext,
    t: f64,
    eig: &LeadingEigen,
    alpha: f64,
) -> Result<SpectrumPoint> {
    let alpha = check_alpha(alpha)?;
    let pressure = math::ln(eig.lambda);
    let dim = (pressure - t * alpha) / ctx.ln_beta();
    if !(-1e-9..=1.0 + 1e-9).contains(&dim) {
        return Err(Error::Inconsistent {
            what: "dimension outside [0,1]",
            value: dim,
        });
    }
    Ok(SpectrumPoint {
        t,
        lambda: eig.lambda,
        pressure,
        alpha,
        dim: dim.clamp(0.0, 1.0),
    })
}

/// Inverse of the digit-frequency function: a parameter t with
/// |α(t) − p| ≤ tol, found by monotone bisection after expanding the
/// initial bracket [−1, 1] by doubling. Fails with a range error when p
/// is not bracketed within |t| ≤ 40.
pub fn invert_alpha(ctx: &BetaContext, p: f64, tol: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Range {
            what: "frequency target outside (0,1)",
            value: p,
        });
    }
    let tol = if tol > 0.0 { tol } else { DEFAULT_ALPHA_TOL };
    let mut lo = -1.0f64;
    let mut hi = 1.0f64;
    let mut alpha_lo = alpha_of_t(ctx, lo)?;
    let mut alpha_hi = alpha_of_t(ctx, hi)?;
    while alpha_lo > p && lo > -T_CAP {
        lo = (2.0 * lo).max(-T_CAP);
        alpha_lo = alpha_of_t(ctx, lo)?;
    }
    while alpha_hi < p && hi < T_CAP {
        hi = (2.0 * hi).min(T_CAP);
        alpha_hi = alpha_of_t(ctx, hi)?;
    }
    if alpha_lo > p || alpha_hi < p {
        return Err(Error::Range {
            what: "frequency not attained for |t| <= 40",
            value: p,
        });
    }
    let mut best_t = if (alpha_lo - p).abs() <= (alpha_hi - p).abs() { lo } else { hi };
    let mut best_err = (alpha_of_t(ctx, best_t)? - p).abs();
    for _ in 0..200 {
        if best_err <= tol || hi - lo < 1e-14 {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let alpha_mid = alpha_of_t(ctx, mid)?;
        let err = (alpha_mid - p).abs();
        if err < best_err {
            best_err = err;
            best_t = mid;
        }
        if alpha_mid < p {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if best_err > tol {
        return Err(Error::Range {
            what: "frequency inversion did not reach tolerance",
            value: p,
        });
    }
    Ok(best_t)
}

/// Dimension of the level set of frequency α: inversion composed with
/// `dim_at_t` on the open support (0, c_β), zero outside [0, c_β], and
/// one-sided limits (flagged `extrapolated`) at the boundary or when the
/// inversion bracket saturates at |t| = 40.
pub fn dim_of_alpha(ctx: &BetaContext, alpha: f64) -> Result<DimOfAlpha> {
    let (_, _, upper, exact) = c_bounds(ctx);
    let out = |dim: f64, t: Option<f64>, extrapolated: bool| DimOfAlpha {
        alpha,
        dim,
        t,
        extrapolated,
    };
    if alpha < 0.0 || alpha > upper + 1e-12 {
        return Ok(out(0.0, None, false));
    }
    if let Some(c) = exact {
        if alpha > c + 1e-12 {
            return Ok(out(0.0, None, false));
        }
        // at the exact edge of the support the inversion parameter is
        // infinite; the one-sided limit of the spectrum is 0
        if (alpha - c).abs() <= 1e-12 {
            return Ok(out(0.0, None, true));
        }
    }
    if alpha <= 1e-12 {
        return Ok(out(0.0, None, true));
    }
    match invert_alpha(ctx, alpha, DEFAULT_ALPHA_TOL) {
        Ok(t) => {
            let point = dim_at_t(ctx, t)?;
            Ok(out(point.dim, Some(t), false))
        }
        Err(Error::Range { .. }) => {
            // not bracketed within |t| ≤ 40: report the nearer one-sided
            // limit of the sweep
            let alpha_mid = alpha_of_t(ctx, 0.0)?;
            let t_edge = if alpha < alpha_mid { -T_CAP } else { T_CAP };
            let point = dim_at_t(ctx, t_edge)?;
            Ok(out(point.dim, Some(t_edge), true))
        }
        Err(e) => Err(e),
    }
}

/// Parse the leading 1-run and following 0-run of the expansion of 1 and
/// derive rigorous bounds and (when the pattern is a recognized family)
/// the exact value of c_β. Returns (N, M, upper, exact); lower is
/// recomputed by `c_beta_report`.
fn c_bounds(ctx: &BetaContext) -> (u32, u32, f64, Option<f64>) {
    let digits = ctx.expand_one(256);
    let n_ones = digits.iter().take_while(|&&d| d == 1).count();
    let m_zeros = digits[n_ones.min(digits.len())..]
        .iter()
        .take_while(|&&d| d == 0)
        .count();
    if m_zeros == 0 {
        // no zero in the window: the full shift, frequency 1 attained
        return (n_ones as u32, 0, 1.0, Some(1.0));
    }
    let n = n_ones as u32;
    let m = m_zeros as u32;
    let upper = if n >= 2 {
        n as f64 / (n as f64 + 1.0)
    } else {
        1.0 / (m as f64 + 1.0)
    };
    let exact = match &ctx.one_digits.period {
        Some(period) if ctx.one_digits.preperiod.is_empty() => {
            let k = period.len();
            let ones = period.iter().filter(|&&d| d == 1).count();
            if ones == k - 1 && period[..k - 1].iter().all(|&d| d == 1) && period[k - 1] == 0 {
                // period 1…10: the multinacci family, c = N/(N+1)
                Some((k as f64 - 1.0) / k as f64)
            } else if ones == 1 && period[0] == 1 {
                // period 10…0: c = 1/(M+1)
                Some(1.0 / (k as f64 - 1.0 + 1.0))
            } else {
                None
            }
        }
        Some(period) if period.iter().all(|&d| d == 1) => Some(1.0),
        _ => None,
    };
    (n, m, upper, exact)
}

/// Bounds, exact family values when recognized, and a numeric estimate
/// (α at t = 30) for the maximal digit frequency c_β.
pub fn c_beta_report(ctx: &BetaContext) -> Result<CBetaReport> {
    let (n_ones, m_zeros, upper, exact) = c_bounds(ctx);
    let lower = if m_zeros == 0 {
        1.0
    } else if n_ones >= 2 {
        (n_ones as f64 - 1.0) / n_ones as f64
    } else {
        1.0 / (m_zeros as f64 + 2.0)
    };
    let numeric_estimate = alpha_of_t(ctx, 30.0)?;
    Ok(CBetaReport {
        n_ones,
        m_zeros,
        lower,
        upper,
        exact,
        numeric_estimate,
    })
}

fn xlnx(x: f64) -> f64 {
    if x > 0.0 {
        x * math::ln(x)
    } else {
        0.0
    }
}

/// The root in (1, 2] of x^{N+1} = x^N + 1 used by the Parry-family
/// closed form.
fn parry_beta(n: u32) -> Result<f64> {
    crate::beta::BetaSpec::parry(n).resolve_beta()
}

/// Closed-form dimension baselines with the entropy convention
/// 0·log 0 = 0 at the boundary. Domain errors outside the stated range:
/// [0, 1] for Besicovitch, [0, 1/2] for Fan–Zhu, [0, 1/(N+1)] for the
/// Parry family.
pub fn closed_form_baseline(name: Baseline, alpha: f64) -> Result<f64> {
    match name {
        Baseline::Besicovitch => {
            if !(0.0..=1.0).contains(&alpha) {
                return Err(Error::Domain {
                    what: "Besicovitch frequency outside [0,1]",
                    value: alpha,
                });
            }
            Ok((-xlnx(alpha) - xlnx(1.0 - alpha)) / math::ln(2.0))
        }
        Baseline::FanZhu => closed_form_baseline(Baseline::ParryFamily(1), alpha),
        Baseline::ParryFamily(n) => {
            if n == 0 {
                return Err(Error::Domain {
                    what: "Parry-family index must be at least 1",
                    value: 0.0,
                });
            }
            let nf = n as f64;
            let cap = 1.0 / (nf + 1.0);
            if !(0.0..=cap).contains(&alpha) {
                return Err(Error::Domain {
                    what: "frequency outside [0, 1/(N+1)]",
                    value: alpha,
                });
            }
            let beta = parry_beta(n)?;
            // (1−Nα)log((1−Nα)/(1−(N+1)α)) − α log(α/(1−(N+1)α)), expanded
            // into pure entropy terms so the 0·log 0 convention applies
            let value = xlnx(1.0 - nf * alpha) - xlnx(alpha) - xlnx(1.0 - (nf + 1.0) * alpha);
            Ok(value / math::ln(beta))
        }
    }
}

/// Symmetric t-grid with geometric refinement near 0: n odd points on
/// [−t_max, t_max] with |t| = t_max·(e^{6u} − 1)/(e^6 − 1) for u uniform
/// on [0, 1].
pub fn t_grid(n: usize, t_max: f64) -> Vec<f64> {
    let n = if n < 3 { 3 } else { n | 1 };
    let half = n / 2;
    let mut grid = Vec::with_capacity(n);
    let denom = math::exp(6.0) - 1.0;
    for i in 0..n {
        let signed = i as f64 - half as f64;
        let u = signed.abs() / half as f64;
        let mag = t_max * (math::exp(6.0 * u) - 1.0) / denom;
        grid.push(if signed < 0.0 { -mag } else { mag });
    }
    grid
}
