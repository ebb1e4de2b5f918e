//! Distribution functions of the leading eigenmeasure and the
//! generalized Takagi function.
//!
//! `D_t(x)` is the eigenmeasure of the coding preimage of `[0, x]`,
//! computed as the greedy-digit series Σ g_n(x)·e^{t·S_{n−1}}/λ_t^n with
//! S_n = g_1 + … + g_n. Its partial sums carry an exact remainder
//! representation: truncating after L terms leaves e^{t·S_L}/λ^L times
//! the measure of another interval, so e^{t·S_L − L·log λ} is a rigorous
//! tail bound. `F_p = D_{f(p)}` reparametrizes by p = 1/λ_t, and the
//! generalized Takagi function G_β is (1/β)·∂F_p/∂p at p = 1/β, with the
//! classical Takagi function and the Lebesgue singular function as β = 2
//! oracles.

use crate::beta::{self, BetaContext};
use crate::eigen;
use crate::error::{Error, Result};
use crate::math;
use crate::spectrum;
use crate::T_CAP;

pub use crate::Evaluated;

/// Default digit depth for distribution-function and Takagi series.
pub const DEFAULT_DEPTH: usize = 256;

/// Cap for the automatic depth doubling used by `eval_auto` drivers.
pub const MAX_AUTO_DEPTH: usize = 16384;

fn check_unit_interval(x: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain {
            what: "argument outside [0,1]",
            value: x,
        });
    }
    Ok(())
}

fn check_depth(depth: usize) -> Result<()> {
    if depth == 0 {
        return Err(Error::Domain {
            what: "series depth must be at least 1",
            value: 0.0,
        });
    }
    Ok(())
}

/// The temperature map f(p): the unique t with λ_t = 1/p, found by
/// monotone bisection on t. `tol` is relative: |λ_t − 1/p| ≤ tol/p.
pub fn f_of_p(ctx: &BetaContext, p: f64, tol: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain {
            what: "p outside (0,1)",
            value: p,
        });
    }
    let tol = if tol > 0.0 { tol } else { eigen::DEFAULT_TOL };
    let target = 1.0 / p;
    let mut lo = -T_CAP;
    let mut hi = T_CAP;
    if eigen::leading_lambda(ctx, lo, tol)?.lambda > target
        || eigen::leading_lambda(ctx, hi, tol)?.lambda < target
    {
        return Err(Error::Range {
            what: "1/p not attained by the eigenvalue for |t| <= 40",
            value: p,
        });
    }
    let mut best = (f64::INFINITY, 0.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let lambda = eigen::leading_lambda(ctx, mid, tol)?.lambda;
        let err = (lambda - target).abs();
        if err < best.0 {
            best = (err, mid);
        }
        if err <= tol * target || hi - lo < 1e-15 {
            break;
        }
        if lambda < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    if best.0 > tol * target {
        return Err(Error::Range {
            what: "eigenvalue bisection did not reach tolerance",
            value: p,
        });
    }
    Ok(best.1)
}

/// Evaluator for the distribution function D_t at a fixed parameter:
/// solves for λ_t once, then evaluates at any x.
#[derive(Debug, Clone)]
pub struct DistFn<'a> {
    ctx: &'a BetaContext,
    pub t: f64,
    pub lambda: f64,
    ln_lambda: f64,
}

impl<'a> DistFn<'a> {
    pub fn new(ctx: &'a BetaContext, t: f64) -> Result<Self> {
        let eig = eigen::leading_lambda(ctx, t, eigen::DEFAULT_TOL)?;
        Ok(DistFn {
            ctx,
            t,
            lambda: eig.lambda,
            ln_lambda: math::ln(eig.lambda),
        })
    }

    /// Partial sum of the distribution series over the first `depth`
    /// greedy digits of x. The error bound is the exact remainder factor
    /// e^{t·S_L − L·log λ}, intersected with 1 − value (the measure is a
    /// probability).
    pub fn eval(&self, x: f64, depth: usize) -> Result<Evaluated> {
        check_unit_interval(x)?;
        check_depth(depth)?;
        let digits = beta::greedy_digits(self.ctx, x, depth)?;
        let mut value = 0.0;
        let mut ones = 0.0f64;
        for (i, &d) in digits.iter().enumerate() {
            let n = (i + 1) as f64;
            if d == 1 {
                value += math::exp(self.t * ones - n * self.ln_lambda);
                ones += 1.0;
            }
        }
        let remainder = math::exp(self.t * ones - digits.len() as f64 * self.ln_lambda);
        let err_bound = remainder.min((1.0 - value).max(0.0));
        Ok(Evaluated { value, err_bound })
    }

    /// `eval` with depth doubling from `DEFAULT_DEPTH` until the tail
    /// bound reaches `tol` or the depth cap; the last evaluation is
    /// returned either way, with its honest bound.
    pub fn eval_auto(&self, x: f64, tol: f64) -> Result<Evaluated> {
        let mut depth = DEFAULT_DEPTH;
        loop {
            let out = self.eval(x, depth)?;
            if out.err_bound <= tol || depth >= MAX_AUTO_DEPTH {
                return Ok(out);
            }
            depth *= 2;
        }
    }
}

/// Distribution function D_t(x) of the leading eigenmeasure.
pub fn d_t(ctx: &BetaContext, t: f64, x: f64, depth: usize) -> Result<Evaluated> {
    DistFn::new(ctx, t)?.eval(x, depth)
}

/// F_p(x) = D_{f(p)}(x), the eigenmeasure distribution reparametrized by
/// p = 1/λ_t.
pub fn f_p(ctx: &BetaContext, p: f64, x: f64, depth: usize) -> Result<Evaluated> {
    let t = f_of_p(ctx, p, eigen::DEFAULT_TOL)?;
    DistFn::new(ctx, t)?.eval(x, depth)
}

/// The β = 2 closed series for F_p: the Lebesgue singular function
/// (p/(1−p))·Σ g_n(x)·p^{n−S_n}·(1−p)^{S_n} over binary digits g of x —
/// an oracle independent of the eigenvalue pipeline.
pub fn lebesgue_singular(p: f64, x: f64, depth: usize) -> Result<Evaluated> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::Domain {
            what: "p outside (0,1)",
            value: p,
        });
    }
    check_unit_interval(x)?;
    check_depth(depth)?;
    let ctx = beta::BetaSpec::dyadic().context()?;
    let digits = beta::greedy_digits(&ctx, x, depth)?;
    let ln_p = math::ln(p);
    let ln_q = math::ln(1.0 - p);
    let prefactor = p / (1.0 - p);
    let mut value = 0.0;
    let mut ones = 0.0f64;
    for (i, &d) in digits.iter().enumerate() {
        let n = (i + 1) as f64;
        if d == 1 {
            ones += 1.0;
            value += prefactor * math::exp((n - ones) * ln_p + ones * ln_q);
        }
    }
    // terms are ≤ prefactor·max(p, 1−p)^n
    let r = p.max(1.0 - p);
    let tail = prefactor * math::exp((digits.len() + 1) as f64 * math::ln(r)) / (1.0 - r);
    Ok(Evaluated {
        value,
        err_bound: tail.min((1.0 - value).max(0.0)),
    })
}

/// Evaluator for the generalized Takagi function: caches the frequency
/// ratio m = α(0) (the invariant measure of the digit-1 cylinder) once
/// per context.
#[derive(Debug, Clone)]
pub struct TakagiSeries<'a> {
    ctx: &'a BetaContext,
    pub m_ratio: f64,
}

impl<'a> TakagiSeries<'a> {
    pub fn new(ctx: &'a BetaContext) -> Result<Self> {
        let m_ratio = spectrum::alpha_of_t(ctx, 0.0)?;
        Ok(TakagiSeries { ctx, m_ratio })
    }

    fn series(&self, digits: &[u8]) -> Evaluated {
        let beta = self.ctx.beta;
        let inv = 1.0 / beta;
        let mut power = 1.0;
        let mut ones = 0.0f64;
        let mut value = 0.0;
        for (i, &d) in digits.iter().enumerate() {
            let n = (i + 1) as f64;
            power *= inv;
            if d == 1 {
                value += power * (n - ones / self.m_ratio);
                ones += 1.0;
            }
        }
        // |n − S_{n−1}/m| ≤ n(1 + 1/m) and Σ_{n>L} n·x^n has a closed form
        let len = digits.len() as f64;
        let x = inv;
        let tail_n = math::exp((len + 1.0) * math::ln(x)) * ((len + 1.0) * (1.0 - x) + x)
            / ((1.0 - x) * (1.0 - x));
        Evaluated {
            value,
            err_bound: (1.0 + 1.0 / self.m_ratio) * tail_n,
        }
    }

    /// G_β(x) from the greedy digits of x ∈ [0,1].
    pub fn eval(&self, x: f64, depth: usize) -> Result<Evaluated> {
        check_unit_interval(x)?;
        check_depth(depth)?;
        let digits = beta::greedy_digits(self.ctx, x, depth)?;
        Ok(self.series(&digits))
    }

    /// The same series over quasi-greedy digits of x ∈ (0,1]; equals
    /// `eval` within combined tails.
    pub fn eval_quasi(&self, x: f64, depth: usize) -> Result<Evaluated> {
        if !(x > 0.0 && x <= 1.0) {
            return Err(Error::Domain {
                what: "argument outside (0,1]",
                value: x,
            });
        }
        check_depth(depth)?;
        let digits = beta::quasi_greedy_digits(self.ctx, x, depth)?;
        Ok(self.series(&digits))
    }

    /// `eval` with automatic depth doubling, as in `DistFn::eval_auto`.
    pub fn eval_auto(&self, x: f64, tol: f64) -> Result<Evaluated> {
        let mut depth = DEFAULT_DEPTH;
        loop {
            let out = self.eval(x, depth)?;
            if out.err_bound <= tol || depth >= MAX_AUTO_DEPTH {
                return Ok(out);
            }
            depth *= 2;
        }
    }
}

/// Generalized Takagi function
/// G_β(x) = g_1(x)/β + Σ_{n≥2} (g_n(x)/β^n)(n − S_{n−1}/m), m = α(0).
pub fn g_beta(ctx: &BetaContext, x: f64, depth: usize) -> Result<Evaluated> {
    TakagiSeries::new(ctx)?.eval(x, depth)
}

/// G_β evaluated over quasi-greedy digits (identical on non-simple
/// points; equal within tails everywhere on (0,1], and 0 at x = 1).
pub fn g_quasi(ctx: &BetaContext, x: f64, depth: usize) -> Result<Evaluated> {
    TakagiSeries::new(ctx)?.eval_quasi(x, depth)
}

/// Classical Takagi function 𝒯(x) = Σ_{n≥1} T^n(x)/2^n over iterates of
/// the tent map T(x) = 1 − |1 − 2x|; exact (zero tail) once the orbit
/// hits 0, hence exact on dyadic rationals.
pub fn takagi_oracle(x: f64, depth: usize) -> Result<Evaluated> {
    check_unit_interval(x)?;
    check_depth(depth)?;
    let mut y = x;
    let mut value = 0.0;
    let mut weight = 1.0;
    for _ in 0..depth {
        y = 1.0 - (1.0 - 2.0 * y).abs();
        weight *= 0.5;
        value += weight * y;
        if y == 0.0 {
            return Ok(Evaluated {
                value,
                err_bound: 0.0,
            });
        }
    }
    Ok(Evaluated {
        value,
        err_bound: weight,
    })
}

/// Central-difference oracle for G_β:
/// (1/β)·(F_{1/β+h}(x) − F_{1/β−h}(x))/(2h).
pub fn fd_hata_yamaguchi(ctx: &BetaContext, x: f64, h: f64) -> Result<f64> {
    let inv = 1.0 / ctx.beta;
    if h.is_nan() || h <= 0.0 || inv + h >= 1.0 || inv - h <= 0.0 {
        return Err(Error::Domain {
            what: "step must satisfy 1/beta ± h inside (0,1)",
            value: h,
        });
    }
    check_unit_interval(x)?;
    let hi = DistFn::new(ctx, f_of_p(ctx, inv + h, eigen::DEFAULT_TOL)?)?.eval_auto(x, 1e-11)?;
    let lo = DistFn::new(ctx, f_of_p(ctx, inv - h, eigen::DEFAULT_TOL)?)?.eval_auto(x, 1e-11)?;
    Ok(inv * (hi.value - lo.value) / (2.0 * h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::beta::BetaSpec;
    use crate::math;

    fn ctx(spec: BetaSpec) -> BetaContext {
        spec.context().expect("context")
    }

    fn all_specs() -> [BetaSpec; 5] {
        [
            BetaSpec::dyadic(),
            BetaSpec::golden(),
            BetaSpec::tribonacci(),
            BetaSpec::parry(2),
            BetaSpec::numeric(1.8),
        ]
    }

    #[test]
    fn temperature_map_examples() {
        for spec in all_specs() {
            let ctx = ctx(spec);
            let t = f_of_p(&ctx, 1.0 / ctx.beta, 1e-13).expect("f(1/beta)");
            assert!(t.abs() <= 1e-9, "beta={} t={t}", ctx.beta);
        }
        let dyadic = ctx(BetaSpec::dyadic());
        for p in [0.1, 0.3, 0.5, 0.62, 0.9] {
            let t = f_of_p(&dyadic, p, 1e-13).expect("f(p)");
            let closed = math::ln((1.0 - p) / p);
            assert!((t - closed).abs() <= 1e-9, "p={p} t={t} closed={closed}");
        }
    }

    #[test]
    fn temperature_map_domain_and_range() {
        let golden = ctx(BetaSpec::golden());
        assert!(matches!(
            f_of_p(&golden, 0.0, 1e-12),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            f_of_p(&golden, 1.0, 1e-12),
            Err(Error::Domain { .. })
        ));
        assert!(matches!(
            f_of_p(&golden, 1e-18, 1e-12),
            Err(Error::Range { .. })
        ));
    }

    #[test]
    fn distribution_is_identity_at_t_zero_full_shift() {
        let dyadic = ctx(BetaSpec::dyadic());
        let dist = DistFn::new(&dyadic, 0.0).expect("dist");
        for k in 0..=64 {
            let x = k as f64 / 64.0;
            let out = dist.eval(x, 128).expect("eval");
            assert!(
                (out.value - x).abs() <= out.err_bound + 1e-12,
                "x={x} value={}",
                out.value
            );
        }
    }

    #[test]
    fn distribution_endpoints_and_monotonicity() {
        for spec in all_specs() {
            let ctx = ctx(spec);
            for t in [-2.0, 0.0, 1.7] {
                let dist = DistFn::new(&ctx, t).expect("dist");
                let zero = dist.eval(0.0, 64).expect("at 0");
                assert_eq!(zero.value, 0.0);
                let one = dist.eval(1.0, 256).expect("at 1");
                assert!(
                    (one.value - 1.0).abs() <= one.err_bound + 1e-9,
                    "beta={} t={t} D(1)={} err={}",
                    ctx.beta,
                    one.value,
                    one.err_bound
                );
                let mut prev = 0.0;
                for k in 0..=40 {
                    let x = k as f64 / 40.0;
                    let out = dist.eval(x, 256).expect("eval");
                    assert!(
                        out.value + out.err_bound + 1e-12 >= prev,
                        "beta={} t={t} x={x}",
                        ctx.beta
                    );
                    prev = out.value;
                }
            }
        }
    }

    #[test]
    fn lebesgue_singular_matches_eigen_distribution() {
        let dyadic = ctx(BetaSpec::dyadic());
        for p in [0.3, 0.5, 0.62] {
            let t = f_of_p(&dyadic, p, 1e-14).expect("t");
            let dist = DistFn::new(&dyadic, t).expect("dist");
            for k in 0..=32 {
                let x = k as f64 / 32.0;
                let series = dist.eval(x, 128).expect("series");
                let closed = lebesgue_singular(p, x, 128).expect("closed");
                assert!(
                    (series.value - closed.value).abs()
                        <= 1e-10 + series.err_bound + closed.err_bound,
                    "p={p} x={x} series={} closed={}",
                    series.value,
                    closed.value
                );
            }
        }
        let spot = lebesgue_singular(0.3, 0.5, 64).expect("spot");
        assert!((spot.value - 0.3).abs() <= 1e-10);
        let via_eigen = f_p(&dyadic, 0.3, 0.5, 64).expect("f_p");
        assert!((via_eigen.value - 0.3).abs() <= 1e-10);
    }

    #[test]
    fn f_p_at_inverse_beta_is_the_coding_identity() {
        for spec in all_specs() {
            let ctx = ctx(spec);
            for k in 1..8 {
                let x = k as f64 / 8.0;
                let out = f_p(&ctx, 1.0 / ctx.beta, x, 256).expect("f_p");
                assert!(
                    (out.value - x).abs() <= out.err_bound + 1e-9,
                    "beta={} x={x} value={}",
                    ctx.beta,
                    out.value
                );
            }
        }
    }

    #[test]
    fn takagi_lattice_identity() {
        for spec in all_specs() {
            let ctx = ctx(spec);
            let series = TakagiSeries::new(&ctx).expect("series");
            for m in 1..=10 {
                let x = math::powi(1.0 / ctx.beta, m);
                let out = series.eval(x, 256).expect("eval");
                let expect = m as f64 * math::powi(1.0 / ctx.beta, m);
                assert!(
                    (out.value - expect).abs() <= out.err_bound + 1e-12,
                    "beta={} M={m} value={} expect={expect}",
                    ctx.beta,
                    out.value
                );
            }
        }
    }

    #[test]
    fn takagi_matches_classical_oracle_at_two() {
        let dyadic = ctx(BetaSpec::dyadic());
        let series = TakagiSeries::new(&dyadic).expect("series");
        for k in 0..=256 {
            let x = k as f64 / 256.0;
            let ours = series.eval(x, 64).expect("eval");
            let oracle = takagi_oracle(x, 64).expect("oracle");
            assert!(
                (ours.value - oracle.value).abs() <= 1e-9,
                "x={x} ours={} oracle={}",
                ours.value,
                oracle.value
            );
        }
    }

    #[test]
    fn quasi_series_agrees_with_greedy_series() {
        for spec in [BetaSpec::golden(), BetaSpec::numeric(1.8)] {
            let ctx = ctx(spec);
            let series = TakagiSeries::new(&ctx).expect("series");
            let simple = 1.0 / ctx.beta;
            for x in [0.3, simple, 0.7, 1.0] {
                let greedy = series.eval(x, 512).expect("greedy");
                let quasi = series.eval_quasi(x, 512).expect("quasi");
                assert!(
                    (greedy.value - quasi.value).abs()
                        <= greedy.err_bound + quasi.err_bound + 1e-10,
                    "beta={} x={x} greedy={} quasi={}",
                    ctx.beta,
                    greedy.value,
                    quasi.value
                );
            }
            let at_one = series.eval_quasi(1.0, 512).expect("H(1)");
            assert!(
                at_one.value.abs() <= at_one.err_bound + 1e-9,
                "H(1)={}",
                at_one.value
            );
        }
    }

    #[test]
    fn takagi_oracle_examples() {
        assert_eq!(takagi_oracle(0.0, 8).expect("zero").value, 0.0);
        let half = takagi_oracle(0.5, 8).expect("half");
        assert_eq!((half.value, half.err_bound), (0.5, 0.0));
        let quarter = takagi_oracle(0.25, 8).expect("quarter");
        assert_eq!((quarter.value, quarter.err_bound), (0.5, 0.0));
        let third = takagi_oracle(1.0 / 3.0, 80).expect("third");
        assert!((third.value - 2.0 / 3.0).abs() <= 1e-9);
        assert!(matches!(takagi_oracle(0.5, 0), Err(Error::Domain { .. })));
        assert!(matches!(takagi_oracle(1.5, 8), Err(Error::Domain { .. })));
    }

    #[test]
    fn hata_yamaguchi_difference_recovers_takagi() {
        let dyadic = ctx(BetaSpec::dyadic());
        let fd = fd_hata_yamaguchi(&dyadic, 1.0 / 3.0, 1e-4).expect("fd");
        let oracle = takagi_oracle(1.0 / 3.0, 200).expect("oracle");
        assert!((fd - oracle.value).abs() <= 1e-4, "fd={fd}");

        let golden = ctx(BetaSpec::golden());
        let fd = fd_hata_yamaguchi(&golden, 0.4, 1e-4).expect("fd");
        let series = g_beta(&golden, 0.4, 512).expect("series");
        assert!((fd - series.value).abs() <= 1e-4, "fd={fd} series={}", series.value);

        assert_eq!(fd_hata_yamaguchi(&golden, 0.0, 1e-4).expect("at 0"), 0.0);
        assert!(matches!(
            fd_hata_yamaguchi(&golden, 0.4, 0.5),
            Err(Error::Domain { .. })
        ));
    }

    #[test]
    fn auto_depth_reports_honest_bounds() {
        let golden = ctx(BetaSpec::golden());
        let dist = DistFn::new(&golden, -2.0).expect("dist");
        let out = dist.eval_auto(0.37, 1e-12).expect("auto");
        assert!(out.err_bound <= 1e-12, "err={}", out.err_bound);
        let series = TakagiSeries::new(&golden).expect("series");
        let out = series.eval_auto(0.37, 1e-12).expect("auto");
        assert!(out.err_bound <= 1e-12, "err={}", out.err_bound);
    }
}
