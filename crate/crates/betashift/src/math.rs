//! Float helpers routed through `libm` so the crate works without `std`.

#[inline]
pub fn exp(x: f64) -> f64 {
    libm::exp(x)
}

#[inline]
pub fn ln(x: f64) -> f64 {
    libm::log(x)
}

#[inline]
pub fn floor(x: f64) -> f64 {
    libm::floor(x)
}

#[inline]
pub fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

/// e^x − 1 without cancellation for x near 0. Evaluating 1 − e^w through
/// this keeps full relative precision even when e^w is within an ulp of 1,
/// which happens in the geometric resummation at large |t|.
#[inline]
pub fn expm1(x: f64) -> f64 {
    libm::expm1(x)
}

/// ln(1 + x) without cancellation for x near 0.
#[inline]
pub fn log1p(x: f64) -> f64 {
    libm::log1p(x)
}

/// ln(1 + e^t), stable for both signs of t.
#[inline]
pub fn ln_1p_exp(t: f64) -> f64 {
    if t > 0.0 {
        t + log1p(exp(-t))
    } else {
        log1p(exp(t))
    }
}

/// Integer power by repeated squaring; exact for exactly representable
/// intermediate products, and avoids the rounding of a general `pow`.
pub fn powi(x: f64, n: i32) -> f64 {
    if n < 0 {
        return 1.0 / powi(x, -n);
    }
    let mut base = x;
    let mut acc = 1.0;
    let mut k = n as u32;
    while k > 0 {
        if k & 1 == 1 {
            acc *= base;
        }
        base *= base;
        k >>= 1;
    }
    acc
}
