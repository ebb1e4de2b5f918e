//! Digit sequences and admissibility for beta-shifts on two symbols.
//!
//! The beta-map x ↦ βx mod 1 generates greedy base-β digits; the
//! quasi-greedy expansion of 1 (the left-limit expansion) characterizes the
//! shift: a word is admissible exactly when each of its suffixes is
//! lexicographically at most the matching prefix of that expansion. This
//! module produces digits, tests admissibility with a KMP-style automaton,
//! evaluates the coding map, and detects eventual periodicity of the digit
//! sequence of 1 (the case in which every downstream series has an exact
//! rational closed form).

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::math;

/// Orbit points this close to 1/β take the terminating branch (digit 1,
/// remainder 0). Iterating the beta-map in binary64 drifts by a few ulps per
/// step, so the boundary cannot be resolved any finer.
pub const SIMPLICITY_TOL: f64 = 1e-11;

/// Near-misses of the terminating branch within this window (but outside
/// [`SIMPLICITY_TOL`]) are flagged as ambiguous rather than silently decided.
pub const AMBIGUITY_TOL: f64 = 1e-8;

/// Number of digits of the expansion of 1 kept when no period is detected.
/// Gives series tails far below 1e-12 for every β used in tests.
pub const DEFAULT_TRUNCATION: usize = 4096;

/// Largest f64 strictly below 1; drifted remainders are clamped here so the
/// orbit stays in [0, 1).
const ONE_MINUS: f64 = 1.0 - f64::EPSILON / 2.0;

/// How β is specified.
#[derive(Clone, Debug, PartialEq)]
pub enum BetaKind {
    /// β given directly as a float in (1, 2].
    Numeric(f64),
    /// β is the unique root in (1, 2] of Σ cᵢ xⁱ (coefficients ascending,
    /// constant term first). Checked by a sign-change scan.
    Polynomial(Vec<i64>),
    /// Root in (1, 2) of x^{N+1} = x^N + … + x + 1. N = 1 is the golden
    /// ratio, N = 2 the tribonacci constant. The expansion of 1 is (1^N 0)^∞.
    Multinacci(u32),
    /// Root in (1, 2] of x^{M+1} = x^M + 1. M = 1 is again the golden
    /// ratio; M = 0 degenerates to β = 2. The expansion of 1 is (1 0^M)^∞.
    Parry(u32),
    /// β = 2, the full shift on two symbols.
    Dyadic,
}

/// A beta specification: the value (in one of several forms) plus an
/// optional explicit digit override that bypasses orbit iteration entirely,
/// so exact eventually-periodic digit data can be injected.
#[derive(Clone, Debug, PartialEq)]
pub struct BetaSpec {
    pub kind: BetaKind,
    pub digit_override: Option<DigitSequence>,
}

impl BetaSpec {
    pub fn numeric(beta: f64) -> Self {
        BetaSpec { kind: BetaKind::Numeric(beta), digit_override: None }
    }

    /// Coefficients ascending: `polynomial(&[-1, -1, 1])` is x² − x − 1.
    pub fn polynomial(coeffs: &[i64]) -> Self {
        BetaSpec { kind: BetaKind::Polynomial(coeffs.to_vec()), digit_override: None }
    }

    pub fn multinacci(n: u32) -> Self {
        BetaSpec { kind: BetaKind::Multinacci(n), digit_override: None }
    }

    pub fn parry(m: u32) -> Self {
        BetaSpec { kind: BetaKind::Parry(m), digit_override: None }
    }

    pub fn dyadic() -> Self {
        BetaSpec { kind: BetaKind::Dyadic, digit_override: None }
    }

    /// The golden ratio, as the N = 1 multinacci number.
    pub fn golden() -> Self {
        Self::multinacci(1)
    }

    pub fn tribonacci() -> Self {
        Self::multinacci(2)
    }

    pub fn with_digits(mut self, digits: DigitSequence) -> Self {
        self.digit_override = Some(digits);
        self
    }

    /// Resolve the numeric value of β.
    pub fn resolve_beta(&self) -> Result<f64> {
        match &self.kind {
            BetaKind::Numeric(b) => {
                if *b > 1.0 && *b <= 2.0 + 1e-14 {
                    Ok(b.min(2.0))
                } else {
                    Err(Error::InvalidSpec("numeric beta must lie in (1, 2]"))
                }
            }
            BetaKind::Polynomial(c) => unique_root_in_1_2(c),
            BetaKind::Multinacci(n) => {
                if *n == 0 {
                    return Err(Error::InvalidSpec("multinacci index must be at least 1"));
                }
                // x^{N+1} - x^N - ... - x - 1
                let mut c = vec![-1i64; *n as usize + 1];
                c.push(1);
                unique_root_in_1_2(&c)
            }
            BetaKind::Parry(m) => {
                if *m == 0 {
                    return Ok(2.0);
                }
                // x^{M+1} - x^M - 1
                let mut c = vec![0i64; *m as usize + 2];
                c[0] = -1;
                c[*m as usize] = -1;
                c[*m as usize + 1] = 1;
                unique_root_in_1_2(&c)
            }
            BetaKind::Dyadic => Ok(2.0),
        }
    }

    /// Build a context with the default truncation length.
    pub fn context(self) -> Result<BetaContext> {
        BetaContext::new(self, DEFAULT_TRUNCATION)
    }
}

fn eval_poly(c: &[i64], x: f64) -> f64 {
    let mut v = 0.0;
    for &ci in c.iter().rev() {
        v = v * x + ci as f64;
    }
    v
}

/// Locate the unique root of the polynomial in (1, 2] by a sign-change scan
/// (4096 cells) followed by bisection. Errors if the scan does not find
/// exactly one crossing.
fn unique_root_in_1_2(c: &[i64]) -> Result<f64> {
    if c.iter().all(|&x| x == 0) {
        return Err(Error::InvalidSpec("zero polynomial"));
    }
    const CELLS: usize = 4096;
    let mut crossings = 0usize;
    let mut bracket = (1.0f64, 2.0f64);
    let mut prev = eval_poly(c, 1.0);
    for i in 1..=CELLS {
        let x = 1.0 + i as f64 / CELLS as f64;
        let v = eval_poly(c, x);
        if prev == 0.0 && i > 1 {
            // root exactly on a grid point
            crossings += 1;
            bracket = (x - 2.0 / CELLS as f64, x);
        } else if prev * v < 0.0 {
            crossings += 1;
            bracket = (x - 1.0 / CELLS as f64, x);
        }
        prev = v;
    }
    if prev == 0.0 {
        crossings += 1;
        bracket = (2.0 - 1.0 / CELLS as f64, 2.0);
    }
    if crossings != 1 {
        return Err(Error::InvalidSpec("polynomial must have exactly one root in (1, 2]"));
    }
    let (mut lo, mut hi) = bracket;
    let flo = eval_poly(c, lo);
    for _ in 0..100 {
        let mid = 0.5 * (lo + hi);
        let v = eval_poly(c, mid);
        if v == 0.0 {
            lo = mid;
            hi = mid;
            break;
        }
        if (v > 0.0) == (flo > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let root = 0.5 * (lo + hi);
    if root <= 1.0 + 1e-12 {
        return Err(Error::InvalidSpec("polynomial root is not strictly above 1"));
    }
    Ok(root.min(2.0))
}

/// A digit sequence over {0, 1}: a finite preperiod, an optional period
/// (making the sequence infinite), and the truncation length that applies
/// when no period is known. With `period == None` the preperiod holds all
/// known digits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DigitSequence {
    pub preperiod: Vec<u8>,
    pub period: Option<Vec<u8>>,
    pub truncation_length: usize,
}

impl DigitSequence {
    pub fn periodic(preperiod: &[u8], period: &[u8]) -> Self {
        DigitSequence {
            preperiod: preperiod.to_vec(),
            period: Some(period.to_vec()),
            truncation_length: preperiod.len() + period.len(),
        }
    }

    pub fn truncated(digits: &[u8]) -> Self {
        DigitSequence {
            preperiod: digits.to_vec(),
            period: None,
            truncation_length: digits.len(),
        }
    }

    /// A finite word extended by zeros (the terminating expansion of the
    /// point it codes).
    pub fn zero_extended(word: &[u8]) -> Self {
        DigitSequence::periodic(word, &[0])
    }

    /// Digit at 0-based index `i`, or `None` past the known range.
    pub fn digit(&self, i: usize) -> Option<u8> {
        if i < self.preperiod.len() {
            return Some(self.preperiod[i]);
        }
        self.period.as_ref().map(|p| p[(i - self.preperiod.len()) % p.len()])
    }

    /// Digit at index `i`, with unknown digits read as 0. Only sound for
    /// weighted sums where the truncation tail is separately bounded.
    pub fn digit_or_zero(&self, i: usize) -> u8 {
        self.digit(i).unwrap_or(0)
    }

    /// Number of known digits, `None` meaning the sequence is infinite.
    pub fn known_len(&self) -> Option<usize> {
        if self.period.is_some() {
            None
        } else {
            Some(self.preperiod.len())
        }
    }

    pub fn is_periodic(&self) -> bool {
        self.period.is_some()
    }

    /// First `len` digits (shorter when the sequence is truncated earlier).
    pub fn expand(&self, len: usize) -> Vec<u8> {
        let n = match self.known_len() {
            Some(k) => len.min(k),
            None => len,
        };
        (0..n).map(|i| self.digit(i).unwrap()).collect()
    }

    /// Prefix a single digit.
    pub fn prepend(&self, d: u8) -> DigitSequence {
        let mut preperiod = Vec::with_capacity(self.preperiod.len() + 1);
        preperiod.push(d);
        preperiod.extend_from_slice(&self.preperiod);
        DigitSequence {
            preperiod,
            period: self.period.clone(),
            truncation_length: self.truncation_length + 1,
        }
    }

    /// Drop the first `n` digits.
    pub fn shift(&self, n: usize) -> DigitSequence {
        if n < self.preperiod.len() {
            return DigitSequence {
                preperiod: self.preperiod[n..].to_vec(),
                period: self.period.clone(),
                truncation_length: self.truncation_length.saturating_sub(n),
            };
        }
        match &self.period {
            Some(p) => {
                let k = (n - self.preperiod.len()) % p.len();
                let mut rotated = p[k..].to_vec();
                rotated.extend_from_slice(&p[..k]);
                DigitSequence {
                    preperiod: Vec::new(),
                    period: Some(rotated),
                    truncation_length: p.len(),
                }
            }
            None => DigitSequence {
                preperiod: Vec::new(),
                period: None,
                truncation_length: 0,
            },
        }
    }

    /// Lexicographic comparison of the infinite (or zero-extended) digit
    /// streams. For two eventually periodic sequences the comparison is
    /// exact: agreement over max preperiod + lcm of periods forces equality.
    /// Truncated sequences are compared with unknown digits read as zero.
    pub fn cmp_lex(&self, other: &DigitSequence) -> core::cmp::Ordering {
        let pre = self.preperiod.len().max(other.preperiod.len());
        let pa = self.period.as_ref().map_or(1, |p| p.len());
        let pb = other.period.as_ref().map_or(1, |p| p.len());
        let window = pre + lcm(pa, pb).min(1 << 20) + 1;
        let window = window.max(self.truncation_length.max(other.truncation_length));
        for i in 0..window {
            let a = self.digit_or_zero(i);
            let b = other.digit_or_zero(i);
            if a != b {
                return a.cmp(&b);
            }
        }
        core::cmp::Ordering::Equal
    }

    /// Value of Σ dₙ β⁻ⁿ. Exact geometric resummation when periodic;
    /// otherwise the finite sum over known digits (absolute error at most
    /// β^{-L}·β/(β-1) with L the number of known digits).
    pub fn value(&self, beta: f64) -> f64 {
        let pre_sum = horner_value(&self.preperiod, beta);
        match &self.period {
            Some(p) => {
                let per_sum = horner_value(p, beta);
                let scale = math::powi(beta, -(self.preperiod.len() as i32));
                let ratio = math::powi(beta, -(p.len() as i32));
                pre_sum + scale * per_sum / (1.0 - ratio)
            }
            None => pre_sum,
        }
    }

    /// Check that every proper suffix of the stream is lexicographically at
    /// most the stream itself (the self-admissibility of an expansion of 1).
    /// Returns the start index of the first offending suffix.
    pub fn check_self_admissible(&self) -> core::result::Result<(), usize> {
        match &self.period {
            Some(p) => {
                // Shifts repeat modulo the period once past the preperiod,
                // so finitely many exact comparisons suffice.
                let distinct = self.preperiod.len() + p.len();
                for k in 1..=distinct {
                    if self.shift(k).cmp_lex(self) == core::cmp::Ordering::Greater {
                        return Err(k);
                    }
                }
                Ok(())
            }
            None => {
                // Linear-time self-scan: maintain the longest proper suffix
                // of the processed prefix that matches a leading prefix, and
                // verify each new digit against the cap that state imposes.
                let d = &self.preperiod;
                if d.is_empty() {
                    return Ok(());
                }
                let aut = Automaton::new(d.clone());
                let mut s = 0usize;
                for (i, &digit) in d.iter().enumerate().skip(1) {
                    match aut.step(s, digit) {
                        Some(next) => s = next,
                        None => return Err(i - s),
                    }
                }
                Ok(())
            }
        }
    }
}

fn horner_value(digits: &[u8], beta: f64) -> f64 {
    let mut v = 0.0;
    for &d in digits.iter().rev() {
        v = (v + d as f64) / beta;
    }
    v
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub(crate) fn lcm(a: usize, b: usize) -> usize {
    if a == 0 || b == 0 { 0 } else { a / gcd(a, b) * b }
}

/// Result of computing the quasi-greedy expansion of 1.
#[derive(Clone, Debug)]
pub struct OneExpansion {
    pub digits: DigitSequence,
    /// Whether the orbit of 1 hit 1/β (the expansion of 1 terminates and the
    /// quasi-greedy form is purely periodic by construction).
    pub is_simple: bool,
    /// Set when some orbit point came within [`AMBIGUITY_TOL`] of 1/β but
    /// outside [`SIMPLICITY_TOL`]: the simplicity decision is then not
    /// numerically trustworthy.
    pub ambiguous: bool,
}

/// Compute the quasi-greedy expansion of 1 for this spec.
///
/// Named families bypass iteration and use their exact periodic patterns; a
/// digit override short-circuits everything (after validation). Otherwise
/// the orbit of 1 is iterated: if it hits 1/β within `max_len` steps the
/// terminating expansion g₁…g_S is folded into the period g₁…g_{S−1}0;
/// otherwise the digits are kept as a truncated sequence, with eventual
/// periodicity detected over a drift-aware window and accepted only when the
/// periodic continuation still codes 1 exactly.
pub fn quasi_greedy_of_one(spec: &BetaSpec, max_len: usize) -> Result<OneExpansion> {
    if max_len < 8 {
        return Err(Error::Domain { what: "max_len", value: max_len as f64 });
    }
    let beta = spec.resolve_beta()?;

    if let Some(seq) = &spec.digit_override {
        validate_one_digits(seq, beta)?;
        return Ok(OneExpansion { digits: seq.clone(), is_simple: false, ambiguous: false });
    }

    match &spec.kind {
        BetaKind::Dyadic => {
            return Ok(OneExpansion {
                digits: DigitSequence::periodic(&[], &[1]),
                is_simple: true,
                ambiguous: false,
            });
        }
        BetaKind::Multinacci(n) => {
            let mut p = vec![1u8; *n as usize];
            p.push(0);
            return Ok(OneExpansion {
                digits: DigitSequence::periodic(&[], &p),
                is_simple: true,
                ambiguous: false,
            });
        }
        BetaKind::Parry(m) => {
            if *m == 0 {
                return Ok(OneExpansion {
                    digits: DigitSequence::periodic(&[], &[1]),
                    is_simple: true,
                    ambiguous: false,
                });
            }
            let mut p = vec![0u8; *m as usize + 1];
            p[0] = 1;
            return Ok(OneExpansion {
                digits: DigitSequence::periodic(&[], &p),
                is_simple: true,
                ambiguous: false,
            });
        }
        BetaKind::Numeric(_) | BetaKind::Polynomial(_) => {}
    }

    // Iterate the orbit of 1.
    let mut digits: Vec<u8> = Vec::with_capacity(max_len);
    let mut r = 1.0f64;
    let mut simple = false;
    let mut ambiguous = false;
    for _ in 0..max_len {
        let y = beta * r;
        if math::abs(y - 1.0) < SIMPLICITY_TOL {
            digits.push(1);
            simple = true;
            break;
        }
        if math::abs(y - 1.0) < AMBIGUITY_TOL {
            ambiguous = true;
        }
        let d = if y >= 1.0 { 1u8 } else { 0u8 };
        digits.push(d);
        r = y - d as f64;
    }

    let seq = if simple {
        // terminating expansion g₁…g_S with g_S = 1 folds into the period
        // g₁…g_{S−1}0
        let mut p = digits;
        *p.last_mut().unwrap() = 0;
        DigitSequence::periodic(&[], &p)
    } else {
        detect_and_fold(&digits, beta, max_len)
    };

    validate_one_digits(&seq, beta)?;
    Ok(OneExpansion { digits: seq, is_simple: simple, ambiguous })
}

/// Try to fold numerically iterated digits into an eventually periodic form.
/// Detection runs over the prefix still unaffected by float drift (the
/// per-step error grows like β^k·ε), and a candidate is accepted only when
/// its periodic continuation codes 1 to within 1e-10.
fn detect_and_fold(digits: &[u8], beta: f64, max_len: usize) -> DigitSequence {
    let horizon = (math::ln(1e-4 / f64::EPSILON) / math::ln(beta)) as usize;
    let w = horizon.clamp(32, digits.len());
    let window = &digits[..w];
    if let Some((pre, per)) = detect_period(window, w / 6, w / 3) {
        let candidate = DigitSequence {
            preperiod: digits[..pre].to_vec(),
            period: Some(digits[pre..pre + per].to_vec()),
            truncation_length: max_len,
        };
        let has_one = candidate.period.as_ref().unwrap().contains(&1);
        if has_one
            && math::abs(candidate.value(beta) - 1.0) < 1e-10
            && candidate.check_self_admissible().is_ok()
        {
            return candidate;
        }
    }
    DigitSequence::truncated(digits)
}

fn validate_one_digits(seq: &DigitSequence, beta: f64) -> Result<()> {
    if seq.digit(0) != Some(1) {
        return Err(Error::InvalidSpec("expansion of 1 must start with digit 1"));
    }
    if seq.preperiod.iter().any(|&d| d > 1)
        || seq.period.as_ref().is_some_and(|p| p.iter().any(|&d| d > 1))
    {
        return Err(Error::InvalidSpec("digits must be 0 or 1"));
    }
    if let Some(p) = &seq.period {
        if p.is_empty() || !p.contains(&1) {
            return Err(Error::InvalidSpec(
                "period of the expansion of 1 must be nonempty and contain a 1",
            ));
        }
    } else if !seq.preperiod.contains(&1) {
        return Err(Error::InvalidSpec("expansion of 1 must contain a 1"));
    }
    if let Err(k) = seq.check_self_admissible() {
        return Err(Error::InadmissibleDigits { suffix_start: k });
    }
    // The digits must actually code 1.
    let v = seq.value(beta);
    let slack = match seq.known_len() {
        Some(l) => math::powi(beta, -(l as i32)) * beta / (beta - 1.0) + 1e-9,
        None => 1e-9,
    };
    if math::abs(v - 1.0) > slack {
        return Err(Error::InvalidSpec("digit sequence does not code 1 for this beta"));
    }
    Ok(())
}

/// Smallest eventually-periodic description of `digits`: the minimal period
/// length, paired with the minimal preperiod for that period, verified over
/// the whole available window. `None` if nothing fits within the bounds.
/// The window should be at least 2·(max_pre + max_per) digits long to make
/// the verification meaningful.
pub fn detect_period(
    digits: &[u8],
    max_pre: usize,
    max_per: usize,
) -> Option<(usize, usize)> {
    if digits.len() < 2 * (max_pre + max_per) {
        return None;
    }
    for l in 1..=max_per {
        let mut pre = 0usize;
        for i in (0..digits.len() - l).rev() {
            if digits[i] != digits[i + l] {
                pre = i + 1;
                break;
            }
        }
        if pre <= max_pre {
            return Some((pre, l));
        }
    }
    None
}

/// Suffix-matching automaton against a prefix of the expansion of 1.
///
/// State s means: the longest suffix of the processed word equal to a
/// leading prefix of the pattern has length s. Appending digit d is
/// admissible iff d ≤ pattern[s]; the longest match is the binding one
/// because the expansion of 1 dominates all of its own shifts.
pub(crate) struct Automaton {
    pat: Vec<u8>,
    fail: Vec<usize>,
}

impl Automaton {
    pub(crate) fn new(pat: Vec<u8>) -> Self {
        // fail[len] = length of the longest proper border of pat[..len]
        let mut fail = vec![0usize; pat.len() + 1];
        let mut k = 0usize;
        for i in 1..pat.len() {
            while k > 0 && pat[i] != pat[k] {
                k = fail[k];
            }
            if pat[i] == pat[k] {
                k += 1;
            }
            fail[i + 1] = k;
        }
        Automaton { pat, fail }
    }

    /// Maximal digit appendable from `state` without violating
    /// admissibility. Walks borders first if the pattern is exhausted.
    pub(crate) fn cap(&self, mut state: usize) -> u8 {
        while state >= self.pat.len() {
            state = self.fail[state];
        }
        self.pat[state]
    }

    /// Number of reachable states (pattern prefixes, including empty).
    pub(crate) fn state_count(&self) -> usize {
        self.pat.len() + 1
    }

    /// Transition: `None` when appending `d` is inadmissible.
    pub(crate) fn step(&self, mut state: usize, d: u8) -> Option<usize> {
        while state >= self.pat.len() {
            state = self.fail[state];
        }
        loop {
            if d == self.pat[state] {
                return Some(state + 1);
            }
            if d > self.pat[state] {
                return None;
            }
            if state == 0 {
                return Some(0);
            }
            state = self.fail[state];
        }
    }
}

/// The resolved context a computation runs against: β, the quasi-greedy
/// expansion of 1, and a couple of cheap summaries. Immutable once built;
/// freely shareable.
#[derive(Clone, Debug)]
pub struct BetaContext {
    pub spec: BetaSpec,
    pub beta: f64,
    pub one_digits: DigitSequence,
    pub is_simple: bool,
    pub ambiguous_simplicity: bool,
    /// Empirical frequency of digit 1 in the expansion of 1 (exact over one
    /// period when periodic). Used in tail-ratio estimates.
    pub digit_frequency_estimate: f64,
}

impl BetaContext {
    pub fn new(spec: BetaSpec, max_len: usize) -> Result<BetaContext> {
        let beta = spec.resolve_beta()?;
        let one = quasi_greedy_of_one(&spec, max_len)?;
        let freq = match &one.digits.period {
            Some(p) => p.iter().filter(|&&d| d == 1).count() as f64 / p.len() as f64,
            None => {
                let d = &one.digits.preperiod;
                d.iter().filter(|&&x| x == 1).count() as f64 / d.len().max(1) as f64
            }
        };
        Ok(BetaContext {
            spec,
            beta,
            one_digits: one.digits,
            is_simple: one.is_simple,
            ambiguous_simplicity: one.ambiguous,
            digit_frequency_estimate: freq,
        })
    }

    pub fn ln_beta(&self) -> f64 {
        math::ln(self.beta)
    }

    /// First `len` digits of the expansion of 1 (possibly fewer when
    /// truncated).
    pub fn expand_one(&self, len: usize) -> Vec<u8> {
        self.one_digits.expand(len)
    }

    pub(crate) fn automaton(&self, len: usize) -> Automaton {
        Automaton::new(self.expand_one(len))
    }
}

/// Greedy digits g₁…gₙ of x, by iterating the beta-map.
///
/// The word returned is admissible for every x < 1 (for x = 1 the greedy
/// expansion of 1 itself legitimately dominates the quasi-greedy one). Near
/// the terminating boundary the iteration snaps to the branch "digit 1,
/// remainder 0", which keeps simple points exact; a drift guard clamps any
/// digit that float error pushed above the admissible cap.
pub fn greedy_digits(ctx: &BetaContext, x: f64, n: usize) -> Result<Vec<u8>> {
    greedy_digits_inner(ctx, x, n).map(|(d, _)| d)
}

/// Shared orbit loop. The second component is the 0-based index of the
/// terminating step (snap to 1/β with digit 1), when one occurred.
fn greedy_digits_inner(ctx: &BetaContext, x: f64, n: usize) -> Result<(Vec<u8>, Option<usize>)> {
    if !(0.0..=1.0).contains(&x) {
        return Err(Error::Domain { what: "x", value: x });
    }
    if n == 0 {
        return Err(Error::Domain { what: "n", value: 0.0 });
    }
    let beta = ctx.beta;
    let guard = x < 1.0;
    let aut = if guard { Some(ctx.automaton(n + 1)) } else { None };
    let mut state = 0usize;
    let mut digits = Vec::with_capacity(n);
    let mut term_at = None;
    let mut r = x;
    for k in 0..n {
        let y = beta * r;
        let snapped = math::abs(y - 1.0) < SIMPLICITY_TOL;
        let (mut d, mut rnext) = if snapped {
            (1u8, 0.0)
        } else {
            let f = math::floor(y);
            let d = if f >= 1.0 { 1u8 } else { 0u8 };
            (d, y - d as f64)
        };
        if let Some(aut) = &aut {
            let cap = aut.cap(state);
            if d > cap {
                // float drift pushed the orbit across a forbidden boundary;
                // take the admissible digit and clamp the remainder into [0, 1)
                d = cap;
                rnext = (y - d as f64).min(ONE_MINUS);
            }
            state = aut.step(state, d).expect("capped digit is admissible");
        }
        if guard && rnext >= 1.0 {
            rnext = ONE_MINUS;
        }
        if snapped && d == 1 && rnext == 0.0 && term_at.is_none() {
            term_at = Some(k);
        }
        digits.push(d);
        r = rnext;
    }
    Ok((digits, term_at))
}

/// Quasi-greedy digits q₁…qₙ of x: identical to the greedy digits unless
/// the expansion of x terminates, in which case the last nonzero digit
/// drops by one and the expansion of 1 is appended (the left-limit form).
pub fn quasi_greedy_digits(ctx: &BetaContext, x: f64, n: usize) -> Result<Vec<u8>> {
    if !(x > 0.0 && x <= 1.0) {
        return Err(Error::Domain { what: "x", value: x });
    }
    if x == 1.0 {
        let d = ctx.expand_one(n);
        if d.len() < n {
            return Err(Error::Unsupported(
                "not enough known digits of the expansion of 1 for this length",
            ));
        }
        return Ok(d);
    }
    let (greedy, term_at) = greedy_digits_inner(ctx, x, n)?;
    match term_at {
        None => Ok(greedy),
        Some(k) => {
            // q₁…q_{S−1} = g₁…g_{S−1}, q_S = 0, then the expansion of 1
            let mut q = greedy[..k].to_vec();
            q.push(0);
            let mut i = 0usize;
            while q.len() < n {
                match ctx.one_digits.digit(i) {
                    Some(d) => q.push(d),
                    None => {
                        return Err(Error::Unsupported(
                            "not enough known digits of the expansion of 1 for this length",
                        ))
                    }
                }
                i += 1;
            }
            Ok(q)
        }
    }
}

/// Parry's criterion on a finite word: true iff every suffix is
/// lexicographically at most the matching prefix of the expansion of 1.
/// (Any admissible word extends by zeros, so this is also cylinder
/// nonemptiness.)
pub fn is_admissible(ctx: &BetaContext, word: &[u8]) -> bool {
    let aut = ctx.automaton(word.len() + 1);
    let mut state = 0usize;
    for &d in word {
        match aut.step(state, d) {
            Some(s) => state = s,
            None => return false,
        }
    }
    true
}

/// Value of the coding map on a finite word: Σ wᵢ β⁻ⁱ.
pub fn pi_beta(ctx: &BetaContext, word: &[u8]) -> f64 {
    horner_value(word, ctx.beta)
}

/// Value of the coding map on a digit sequence (exact geometric resummation
/// when the sequence is periodic).
pub fn pi_beta_seq(ctx: &BetaContext, seq: &DigitSequence) -> f64 {
    seq.value(ctx.beta)
}
