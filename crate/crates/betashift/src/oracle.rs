//! Independent brute-force cross-checks for the series pipeline:
//! admissible-word enumeration, cylinder-sum pressure, the eigenmeasure
//! value/recursion identities, and the eigenfunction equation.
//!
//! Everything here deliberately avoids the power-series machinery of
//! [`crate::eigen`] except for the single λ_t solve, so agreement between
//! the two paths exercises digits, admissibility, and eigendata at once.

use crate::beta::{self, BetaContext, DigitSequence};
use crate::eigen;
use crate::error::{Error, Result};
use crate::math;
use crate::Evaluated;

use alloc::vec;
use alloc::vec::Vec;

/// Memory guard for word enumeration (2^26 words at the full shift).
pub const MAX_ENUMERATION: usize = 26;

/// All admissible words of one length, as packed bit-integers
/// (most-significant bit = first digit) with parallel digit sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleWordSet {
    pub n: usize,
    pub words: Vec<u32>,
    pub digit_sums: Vec<u32>,
}

fn check_enumeration_size(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain {
            what: "word length must be at least 1",
            value: 0.0,
        });
    }
    if n > MAX_ENUMERATION {
        return Err(Error::SizeGuard {
            n,
            max: MAX_ENUMERATION,
        });
    }
    Ok(())
}

/// Breadth-first enumeration of admissible words of length `n`: a word
/// survives iff every suffix is lexicographically at most the matching
/// prefix of the expansion of 1, maintained incrementally through the
/// failure automaton of that expansion.
pub fn enumerate_admissible(ctx: &BetaContext, n: usize) -> Result<AdmissibleWordSet> {
    check_enumeration_size(n)?;
    let automaton = ctx.automaton(n);
    // (packed word, automaton state); digit sums recovered via popcount
    let mut level: Vec<(u32, u32)> = vec![(0, 0)];
    for _ in 0..n {
        let mut next = Vec::with_capacity(level.len() * 2);
        for &(word, state) in &level {
            for d in 0..=1u8 {
                if let Some(state_next) = automaton.step(state as usize, d) {
                    next.push(((word << 1) | d as u32, state_next as u32));
                }
            }
        }
        level = next;
    }
    let words: Vec<u32> = level.iter().map(|&(w, _)| w).collect();
    let digit_sums: Vec<u32> = words.iter().map(|w| w.count_ones()).collect();
    Ok(AdmissibleWordSet {
        n,
        words,
        digit_sums,
    })
}

/// Finite-cylinder pressure approximation
/// (1/n)·log Σ_{admissible w of length n} e^{t·digitsum(w)}.
///
/// Exact for the potential t·χ_{C_1} because the Birkhoff sum is constant
/// on each cylinder. Computed by dynamic programming over (automaton
/// state, digit sum) so only counts are stored, never the word set.
pub fn brute_pressure(ctx: &BetaContext, t: f64, n: usize) -> Result<f64> {
    check_enumeration_size(n)?;
    let automaton = ctx.automaton(n);
    let states = automaton.state_count();
    // counts[state][ones]: exact u64 word counts (≤ 2^26 total)
    let mut counts = vec![vec![0u64; n + 1]; states];
    counts[0][0] = 1;
    for _ in 0..n {
        let mut next = vec![vec![0u64; n + 1]; states];
        for (state, row) in counts.iter().enumerate() {
            for (ones, &count) in row.iter().enumerate() {
                if count == 0 {
                    continue;
                }
                for d in 0..=1u8 {
                    if let Some(state_next) = automaton.step(state, d) {
                        next[state_next][ones + d as usize] += count;
                    }
                }
            }
        }
        counts = next;
    }
    let mut by_ones = vec![0u64; n + 1];
    for row in &counts {
        for (ones, &count) in row.iter().enumerate() {
            by_ones[ones] += count;
        }
    }
    // log Σ count(ones)·e^{t·ones}, summed in log space around the peak
    let mut peak = f64::NEG_INFINITY;
    for (ones, &count) in by_ones.iter().enumerate() {
        if count > 0 {
            peak = peak.max(t * ones as f64 + math::ln(count as f64));
        }
    }
    let mut total = 0.0;
    for (ones, &count) in by_ones.iter().enumerate() {
        if count > 0 {
            total += math::exp(t * ones as f64 + math::ln(count as f64) - peak);
        }
    }
    Ok((peak + math::ln(total)) / n as f64)
}

/// True iff `y ⪯ σ^n(1̄)` lexicographically, comparing the exact digit
/// streams in place. The scan window covers both preperiods, one least
/// common multiple of the period lengths, and any truncated prefixes,
/// which decides the order exactly for eventually periodic inputs; the
/// loop exits at the first differing digit.
fn dominated_by_shift(y: &DigitSequence, one: &DigitSequence, n: usize) -> bool {
    let py = y.period.as_ref().map_or(1, |p| p.len());
    let p1 = one.period.as_ref().map_or(1, |p| p.len());
    let pre = y
        .preperiod
        .len()
        .max(one.preperiod.len().saturating_sub(n));
    let window = (pre + beta::lcm(py, p1) + 1)
        .max(y.truncation_length)
        .max(one.truncation_length.saturating_sub(n));
    for i in 0..window {
        let a = y.digit_or_zero(i);
        let b = one.digit_or_zero(n + i);
        if a != b {
            return a < b;
        }
    }
    true
}

/// Shared eigendata for the functional/functional-equation checks: one
/// λ_t solve reused across evaluations.
#[derive(Debug, Clone)]
pub struct EigenOracle<'a> {
    ctx: &'a BetaContext,
    pub t: f64,
    pub lambda: f64,
    ln_lambda: f64,
}

impl<'a> EigenOracle<'a> {
    pub fn new(ctx: &'a BetaContext, t: f64) -> Result<Self> {
        let eig = eigen::leading_lambda(ctx, t, eigen::DEFAULT_TOL)?;
        Ok(EigenOracle {
            ctx,
            t,
            lambda: eig.lambda,
            ln_lambda: math::ln(eig.lambda),
        })
    }

    fn check_admissible(&self, seq: &DigitSequence, depth: usize) -> Result<()> {
        let digits = seq.expand(depth);
        if !beta::is_admissible(self.ctx, &digits) {
            return Err(Error::InadmissibleDigits { suffix_start: 0 });
        }
        Ok(())
    }

    /// Eigenfunctional value ν([0, a]) = Σ a_n·e^{t·A_{n−1}}/λ^n over the
    /// digits of `seq` (A = digit partial sums of `seq` itself), already
    /// normalized: the same series at 1̄ sums to 1. The tail beyond
    /// `depth` is exactly e^{t·A_L}/λ^L times the measure of an interval.
    pub fn nu_value(&self, seq: &DigitSequence, depth: usize) -> Result<Evaluated> {
        if depth == 0 {
            return Err(Error::Domain {
                what: "series depth must be at least 1",
                value: 0.0,
            });
        }
        self.check_admissible(seq, depth)?;
        let digits = seq.expand(depth);
        let mut value = 0.0;
        let mut ones = 0.0f64;
        for (i, &d) in digits.iter().enumerate() {
            if d == 1 {
                value += math::exp(self.t * ones - (i + 1) as f64 * self.ln_lambda);
                ones += 1.0;
            }
        }
        let remainder = math::exp(self.t * ones - digits.len() as f64 * self.ln_lambda);
        Ok(Evaluated {
            value,
            err_bound: remainder.min((1.0 - value).max(0.0)),
        })
    }

    /// Residual of the one-step eigenfunctional recursion
    /// ν([0,a]) = (a_1 + l(a_1)·ν([0,σa]))/λ with l(0)=1, l(1)=e^t.
    /// `value` is the residual, `err_bound` the combined series tails.
    pub fn nu_recursion_check(&self, seq: &DigitSequence, depth: usize) -> Result<Evaluated> {
        let lhs = self.nu_value(seq, depth)?;
        let shifted = seq.shift(1);
        let rhs = self.nu_value(&shifted, depth)?;
        let a1 = seq.digit_or_zero(0) as f64;
        let weight = math::exp(self.t * a1);
        let assembled = (a1 + weight * rhs.value) / self.lambda;
        Ok(Evaluated {
            value: (lhs.value - assembled).abs(),
            err_bound: lhs.err_bound + weight * rhs.err_bound / self.lambda,
        })
    }

    /// Unnormalized eigenfunction value
    /// h(y) = Σ_{n≥0} e^{t·S_n}/λ^n · [y ⪯ σ^n(1̄)], with S_n the digit
    /// sums of the expansion of 1. Indicators are evaluated on exact
    /// (pre)periodic representations without materializing the shifts.
    pub fn h_value(&self, y: &DigitSequence, depth: usize) -> Result<Evaluated> {
        if depth == 0 {
            return Err(Error::Domain {
                what: "series depth must be at least 1",
                value: 0.0,
            });
        }
        self.check_admissible(y, depth)?;
        let one_digits = self.ctx.expand_one(depth);
        let mut value = 1.0; // n = 0: H_0 = 1, indicator [y ⪯ 1̄] holds
        let mut ones = 0.0f64;
        for n in 1..depth {
            ones += one_digits[n - 1] as f64;
            if dominated_by_shift(y, &self.ctx.one_digits, n) {
                value += math::exp(self.t * ones - n as f64 * self.ln_lambda);
            }
        }
        let err_bound = self.h_tail_bound(depth);
        Ok(Evaluated { value, err_bound })
    }

    /// Upper bound on the dropped part Σ_{n≥depth} e^{t·S_n − n·ln λ}
    /// (every indicator is at most 1).
    ///
    /// For a periodic expansion of 1 the terms scale by the exact factor
    /// R = e^{t·s_P − p·ln λ} per period once past the preperiod, so the
    /// tail is one explicit period block divided by 1 − R (and R < 1
    /// whenever λ is the leading root, since the series converges there).
    /// For a truncated expansion the known digits are summed explicitly
    /// and the unknown continuation is capped by the run-length bound
    /// S_m ≤ S_n + 1 + c₁·(m − n) with c₁ = max_run/(max_run+1).
    fn h_tail_bound(&self, depth: usize) -> f64 {
        let one = &self.ctx.one_digits;
        let t_plus = self.t.max(0.0);
        if let Some(period) = one.period.clone() {
            let p = period.len();
            let start = depth.max(one.preperiod.len());
            let digits = self.ctx.expand_one(start + p);
            let s_period: f64 = period.iter().map(|&d| d as f64).sum();
            let log_ratio = self.t * s_period - p as f64 * self.ln_lambda;
            if log_ratio >= 0.0 {
                return f64::INFINITY;
            }
            let ratio = math::exp(log_ratio);
            let mut s_n: f64 = digits[..depth].iter().map(|&d| d as f64).sum();
            let mut head = 0.0;
            let mut block = 0.0;
            for (n, &d) in digits.iter().enumerate().take(start + p).skip(depth) {
                let term = math::exp(self.t * s_n - n as f64 * self.ln_lambda);
                if n < start {
                    head += term;
                } else {
                    block += term;
                }
                s_n += d as f64;
            }
            head + block / (1.0 - ratio)
        } else {
            let known = one.truncation_length.max(depth);
            let digits = self.ctx.expand_one(known);
            let max_run = digits.iter().take_while(|&&d| d == 1).count().max(1) as f64;
            let c1 = max_run / (max_run + 1.0);
            let log_rho = t_plus * c1 - self.ln_lambda;
            if log_rho >= 0.0 {
                return f64::INFINITY;
            }
            let rho = math::exp(log_rho);
            let geo = math::exp(t_plus * (1.0 - c1)) * rho / (1.0 - rho);
            let mut s_n: f64 = digits[..depth].iter().map(|&d| d as f64).sum();
            let mut tail = 0.0;
            let mut n = depth;
            while n < known {
                let term = math::exp(self.t * s_n - n as f64 * self.ln_lambda);
                let rest = term * geo;
                if rest < 1e-30 {
                    return tail + term + rest;
                }
                tail += term;
                s_n += digits[n] as f64;
                n += 1;
            }
            let at_known = math::exp(self.t * s_n - n as f64 * self.ln_lambda);
            tail + at_known * math::exp(t_plus) / (1.0 - rho)
        }
    }

    /// Residual of the eigenfunction equation at `y`:
    /// |h(0y) + [y ⪯ σ(1̄)]·e^t·h(1y) − λ·h(y)|, with the combined series
    /// tails in `err_bound`.
    pub fn eigen_equation_check(&self, y: &DigitSequence, depth: usize) -> Result<Evaluated> {
        let hy = self.h_value(y, depth)?;
        let h0 = self.h_value(&y.prepend(0), depth)?;
        let one_allowed = dominated_by_shift(y, &self.ctx.one_digits, 1);
        let (h1_value, h1_err) = if one_allowed {
            let h1 = self.h_value(&y.prepend(1), depth)?;
            (h1.value, h1.err_bound)
        } else {
            (0.0, 0.0)
        };
        let weight = math::exp(self.t);
        let residual = (h0.value + weight * h1_value - self.lambda * hy.value).abs();
        Ok(Evaluated {
            value: residual,
            err_bound: h0.err_bound + weight * h1_err + self.lambda * hy.err_bound,
        })
    }
}

/// Free-function forms of the [`EigenOracle`] checks.
pub fn nu_value(ctx: &BetaContext, t: f64, seq: &DigitSequence, depth: usize) -> Result<Evaluated> {
    EigenOracle::new(ctx, t)?.nu_value(seq, depth)
}

pub fn nu_recursion_check(
    ctx: &BetaContext,
    t: f64,
    seq: &DigitSequence,
    depth: usize,
) -> Result<Evaluated> {
    EigenOracle::new(ctx, t)?.nu_recursion_check(seq, depth)
}

pub fn h_value(ctx: &BetaContext, t: f64, y: &DigitSequence, depth: usize) -> Result<Evaluated> {
    EigenOracle::new(ctx, t)?.h_value(y, depth)
}

pub fn eigen_equation_check(
    ctx: &BetaContext,
    t: f64,
    y: &DigitSequence,
    depth: usize,
) -> Result<Evaluated> {
    EigenOracle::new(ctx, t)?.eigen_equation_check(y, depth)
}
