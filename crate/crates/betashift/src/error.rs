//! Error taxonomy for the whole crate.
//!
//! Variants are grouped by what the caller can do about them: fix an input
//! (`Domain`, `InvalidSpec`), widen a guard (`Divergence`, `SizeGuard`,
//! `Range`), or report a bug (`Inconsistent`). The CLI maps each variant to
//! a distinct exit code.

use core::fmt;

#[derive(Clone, Debug, PartialEq)]
pub enum Error {
    /// An input lies outside its documented domain (e.g. x outside [0,1]).
    Domain { what: &'static str, value: f64 },
    /// A series tail could not be certified below tolerance; carries the
    /// offending evaluation point and the last observed term ratio.
    Divergence { t: f64, z: f64, ratio: f64 },
    /// The operation needs structure this context does not have (for
    /// example a detected period, or enough known digits).
    Unsupported(&'static str),
    /// An enumeration would exceed the memory guard.
    SizeGuard { n: usize, max: usize },
    /// A bracketing search hit the |t| cap before enclosing its target.
    Range { what: &'static str, value: f64 },
    /// An internal consistency check failed; reported rather than clamped.
    Inconsistent { what: &'static str, value: f64 },
    /// The beta specification itself is unusable (β outside (1,2], a
    /// polynomial without a unique root there, ...).
    InvalidSpec(&'static str),
    /// A user-supplied digit sequence has an inadmissible suffix; the index
    /// is where the offending suffix starts (0-based).
    InadmissibleDigits { suffix_start: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => {
                write!(f, "domain error: {what} = {value} is out of range")
            }
            Error::Divergence { t, z, ratio } => write!(
                f,
                "series tail not certifiable at t = {t}, z = {z} (term ratio {ratio})"
            ),
            Error::Unsupported(what) => write!(f, "unsupported: {what}"),
            Error::SizeGuard { n, max } => {
                write!(f, "size guard: n = {n} exceeds maximum {max}")
            }
            Error::Range { what, value } => {
                write!(f, "range error: {what} = {value} not bracketed within the t-cap")
            }
            Error::Inconsistent { what, value } => {
                write!(f, "internal consistency violated: {what} = {value}")
            }
            Error::InvalidSpec(reason) => write!(f, "invalid beta specification: {reason}"),
            Error::InadmissibleDigits { suffix_start } => write!(
                f,
                "digit sequence is inadmissible: suffix starting at index {suffix_start} \
                 exceeds the expansion of 1"
            ),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
