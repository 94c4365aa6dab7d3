//! Series evaluators sharing one truncation rule.
//!
//! A series stops once two consecutive terms (or anti-diagonals, for the
//! double series) are below `tol · |partial sum|` and the first neglected term
//! is small as well. The hard cap is 10,000 terms unless the `MSM_MAX_TERMS`
//! environment variable says otherwise; hitting the cap returns
//! `converged = false` rather than an error.

mod appell;
mod bessel;
mod gauss;
mod pfq;
mod wright;

use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

pub use appell::appell_f3;
pub use bessel::{bessel_w, bessel_w_entire, BesselParams};
pub use gauss::{gauss_2f1, hyp2f1_one_minus};
pub use pfq::{hyp_pfq, HypergeometricSpec};
pub use wright::{wright_psi, WrightSpec};

const DEFAULT_MAX_TERMS: usize = 10_000;

/// Outcome of a truncated series.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesResult {
    pub value: Complex64,
    pub terms_used: usize,
    /// Absolute size of the first neglected term.
    pub tail_estimate: f64,
    pub converged: bool,
}

impl SeriesResult {
    /// Multiply value and tail by a constant prefactor.
    pub fn scaled(self, factor: Complex64) -> Self {
        Self {
            value: self.value * factor,
            tail_estimate: self.tail_estimate * factor.norm(),
            ..self
        }
    }
}

/// Term cap: `MSM_MAX_TERMS` if set to a positive integer, else 10,000.
pub fn max_terms() -> usize {
    static CAP: OnceLock<usize> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("MSM_MAX_TERMS")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
            .unwrap_or(DEFAULT_MAX_TERMS)
    })
}

pub(crate) fn check_tol(tol: f64) -> Result<()> {
    if tol > 0.0 && tol.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("tolerance must be positive, got {tol}")))
    }
}

/// Sum terms produced in order by `next(k)`, which returns the term and the
/// magnitude used for the smallness test (the two differ for anti-diagonals).
///
/// Terms with index below `min_terms` never count towards the stopping rule.
pub(crate) fn sum_series<F>(tol: f64, min_terms: usize, mut next: F) -> Result<SeriesResult>
where
    F: FnMut(usize) -> Result<(Complex64, f64)>,
{
    let cap = max_terms();
    let mut sum = Complex64::new(0.0, 0.0);
    let mut pending: Option<(Complex64, f64)> = None;
    let mut streak = 0;
    let mut last = 0.0;
    let mut k = 0;
    while k < cap {
        let (term, size) = match pending.take() {
            Some(t) => t,
            None => next(k)?,
        };
        sum += term;
        k += 1;
        last = size;
        if !(sum.re.is_finite() && sum.im.is_finite()) {
            return Err(Error::convergence(format!("non-finite partial sum after {k} terms")));
        }
        if k > min_terms && size <= tol * sum.norm() {
            streak += 1;
        } else {
            streak = 0;
        }
        if streak >= 2 {
            let peek = next(k)?;
            if peek.1 <= tol * sum.norm() {
                return Ok(SeriesResult {
                    value: sum,
                    terms_used: k,
                    tail_estimate: peek.1,
                    converged: true,
                });
            }
            pending = Some(peek);
            streak = 0;
        }
    }
    Ok(SeriesResult { value: sum, terms_used: k, tail_estimate: last, converged: false })
}
