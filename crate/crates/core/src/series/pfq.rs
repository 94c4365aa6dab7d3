use num_complex::Complex64;

use super::{check_tol, sum_series, SeriesResult};
use crate::error::{Error, Result};
use crate::gamma::is_pole;

/// Generalized hypergeometric series `pFq(a_1..a_p; c_1..c_q; z)`.
#[derive(Debug, Clone, PartialEq)]
pub struct HypergeometricSpec {
    pub upper: Vec<Complex64>,
    pub lower: Vec<Complex64>,
    pub argument: Complex64,
}

impl HypergeometricSpec {
    pub fn new(upper: Vec<Complex64>, lower: Vec<Complex64>, argument: Complex64) -> Self {
        Self { upper, lower, argument }
    }

    fn terminates(&self) -> bool {
        self.upper.iter().any(|&a| is_pole(a))
    }
}

/// Forward recurrence `t_{k+1} = t_k · Π(a_i+k) / (Π(c_j+k) (k+1)) · z`.
pub fn hyp_pfq(spec: &HypergeometricSpec, tol: f64) -> Result<SeriesResult> {
    check_tol(tol)?;
    if let Some(c) = spec.lower.iter().find(|&&c| is_pole(c)) {
        return Err(Error::domain(format!("lower parameter {c} is a non-positive integer")));
    }
    let (p, q) = (spec.upper.len(), spec.lower.len());
    let z = spec.argument;
    if !spec.terminates() && z.norm() > 0.0 {
        if p == q + 1 && z.norm() >= 1.0 {
            return Err(Error::convergence(format!("{p}F{q} diverges for |z| = {} ≥ 1", z.norm())));
        }
        if p > q + 1 {
            return Err(Error::convergence(format!("{p}F{q} diverges for z ≠ 0")));
        }
    }
    hyp_pfq_unchecked(&spec.upper, &spec.lower, z, tol)
}

pub(crate) fn hyp_pfq_unchecked(
    upper: &[Complex64],
    lower: &[Complex64],
    z: Complex64,
    tol: f64,
) -> Result<SeriesResult> {
    let mut term = Complex64::new(1.0, 0.0);
    sum_series(tol, 0, |k| {
        if k > 0 {
            let j = (k - 1) as f64;
            let num = upper.iter().fold(z, |acc, &a| acc * (a + j));
            let den = lower.iter().fold(Complex64::new(j + 1.0, 0.0), |acc, &c| acc * (c + j));
            term *= num / den;
        }
        Ok((term, term.norm()))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn zero_argument_is_one() {
        let spec = HypergeometricSpec::new(vec![r(0.3), r(2.0)], vec![r(1.5)], r(0.0));
        assert_eq!(hyp_pfq(&spec, 1e-15).unwrap().value, r(1.0));
    }

    #[test]
    fn binomial_series() {
        let spec = HypergeometricSpec::new(vec![r(2.0)], vec![], r(0.3));
        let v = hyp_pfq(&spec, 1e-16).unwrap();
        assert!((v.value.re - 1.0 / 0.49).abs() < 1e-12 / 0.49);
    }

    #[test]
    fn logarithmic_closed_form() {
        let spec = HypergeometricSpec::new(vec![r(1.0), r(1.0)], vec![r(2.0)], r(0.5));
        let v = hyp_pfq(&spec, 1e-16).unwrap();
        let want = 2.0 * 2f64.ln();
        assert!((v.value.re - want).abs() < 1e-12 * want);
    }

    #[test]
    fn domain_and_convergence_errors() {
        let bad_lower = HypergeometricSpec::new(vec![r(1.0)], vec![r(-2.0)], r(0.1));
        assert!(matches!(hyp_pfq(&bad_lower, 1e-12), Err(Error::Domain(_))));
        let outside = HypergeometricSpec::new(vec![r(1.0), r(1.0)], vec![r(2.0)], r(1.0));
        assert!(matches!(hyp_pfq(&outside, 1e-12), Err(Error::Convergence(_))));
        // terminating series are fine anywhere
        let poly = HypergeometricSpec::new(vec![r(-2.0), r(1.0)], vec![r(1.0)], r(3.0));
        // 1 − 2·3 + 9 = 4
        assert!((hyp_pfq(&poly, 1e-15).unwrap().value - r(4.0)).norm() < 1e-13);
    }
}
