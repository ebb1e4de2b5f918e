//! Thermodynamics of beta-shifts on two symbols, for 1 < β ≤ 2.
//!
//! The pipeline starts from the quasi-greedy digit sequence of 1, which
//! determines the shift completely. From it we build a power series whose
//! unique positive zero is the reciprocal of the leading transfer-operator
//! eigenvalue λ_t; pressure, digit-frequency, and the Hausdorff dimension
//! spectrum of digit-frequency level sets all follow from λ_t and its
//! derivative data. The same eigendata yields the distribution function of
//! the leading eigenmeasure and a generalized Takagi function obtained by
//! differentiating that distribution in its parameter.
//!
//! Modules:
//!
//! - [`beta`]: greedy/quasi-greedy digits, admissibility, the coding map,
//!   periodicity detection.
//! - [`eigen`]: series evaluation with certified tails, the leading
//!   eigenvalue and normalizer, rational closed forms for eventually
//!   periodic digit data, subleading zeros and a mixing-rate bound.
//! - [`spectrum`]: digit-frequency α(t), dimension spectrum, inversion
//!   α ↦ t, frequency caps, and closed-form baselines.
//! - [`singular`]: distribution functions D_t and F_p, the temperature map
//!   f(p), and the generalized Takagi function G_β.
//! - [`oracle`]: brute-force cross-checks (word enumeration, cylinder-sum
//!   pressure, eigenfunctional recursion, eigenfunction equation).
//!
//! The crate is `no_std` with `alloc`; IO, the command line, and file
//! formats live in the companion `betashift-cli` crate. All arithmetic is
//! binary64, and every series reports an explicit absolute error bound.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;
#[cfg(any(test, feature = "std"))]
extern crate std;

pub mod beta;
pub mod eigen;
pub mod error;
pub mod oracle;
pub mod singular;
pub mod spectrum;

pub(crate) mod math;

pub use beta::{BetaContext, BetaKind, BetaSpec, DigitSequence};
pub use error::{Error, Result};

/// Hard cap on |t| for bracketing searches (inverting α or λ). Tolerances
/// beyond this range are untested territory.
pub const T_CAP: f64 = 40.0;

/// A series value with a rigorous absolute error bound for the
/// truncation (floating-point roundoff not included).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Evaluated {
    pub value: f64,
    pub err_bound: f64,
}
