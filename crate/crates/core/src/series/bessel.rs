use num_complex::Complex64;

use super::{check_tol, sum_series, SeriesResult};
use crate::error::{Error, Result};
use crate::gamma::{is_pole, reciprocal_gamma};

/// Parameters of the generalized Bessel function
/// `W_{p,b,c}(z) = Σ_k (−1)^k c^k / (Γ(κ+k) k!) (z/2)^{2k+p}`, with κ = p + (b+1)/2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BesselParams {
    pub p: Complex64,
    pub b: Complex64,
    pub c: Complex64,
}

impl BesselParams {
    pub fn new(p: Complex64, b: Complex64, c: Complex64) -> Self {
        Self { p, b, c }
    }

    pub fn real(p: f64, b: f64, c: f64) -> Self {
        Self::new(Complex64::new(p, 0.0), Complex64::new(b, 0.0), Complex64::new(c, 0.0))
    }

    pub fn kappa(&self) -> Complex64 {
        self.p + (self.b + 1.0) / 2.0
    }

    pub fn check_kappa(&self) -> Result<()> {
        let kappa = self.kappa();
        if is_pole(kappa) {
            Err(Error::domain(format!("κ = p + (b+1)/2 = {kappa} is a non-positive integer")))
        } else {
            Ok(())
        }
    }
}

/// The entire factor `(z/2)^{−p} W_{p,b,c}(z) = Σ_k (−c z²/4)^k / (Γ(κ+k) k!)`.
pub fn bessel_w_entire(params: &BesselParams, z: Complex64, tol: f64) -> Result<SeriesResult> {
    check_tol(tol)?;
    params.check_kappa()?;
    let kappa = params.kappa();
    let ratio = -params.c * z * z / 4.0;
    let mut term = reciprocal_gamma(kappa);
    sum_series(tol, 0, |k| {
        if k > 0 {
            let j = (k - 1) as f64;
            term *= ratio / ((kappa + j) * (j + 1.0));
        }
        Ok((term, term.norm()))
    })
}

/// `W_{p,b,c}(z)` with the principal branch `(z/2)^p = exp(p · Log(z/2))`.
pub fn bessel_w(params: &BesselParams, z: Complex64, tol: f64) -> Result<SeriesResult> {
    let entire = bessel_w_entire(params, z, tol)?;
    let p = params.p;
    let prefactor = if z == Complex64::new(0.0, 0.0) {
        if p == Complex64::new(0.0, 0.0) {
            Complex64::new(1.0, 0.0)
        } else if p.re > 0.0 {
            Complex64::new(0.0, 0.0)
        } else {
            return Err(Error::Branch(format!("(z/2)^p is singular at z = 0 for p = {p}")));
        }
    } else {
        (p * (z / 2.0).ln()).exp()
    };
    Ok(entire.scaled(prefactor))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn r(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn value_at_origin() {
        let w = bessel_w(&BesselParams::real(0.0, 1.0, 1.0), r(0.0), 1e-15).unwrap();
        assert_eq!(w.value, r(1.0));
        let w = bessel_w(&BesselParams::real(1.5, 1.0, 1.0), r(0.0), 1e-15).unwrap();
        assert_eq!(w.value, r(0.0));
        assert!(matches!(
            bessel_w(&BesselParams::real(-0.5, 2.0, 1.0), r(0.0), 1e-15),
            Err(Error::Branch(_))
        ));
    }

    #[test]
    fn j0_at_one_matches_direct_sum() {
        // Σ (−1)^k / (k!)² (1/2)^{2k}
        let mut oracle = 0.0;
        let mut fact = 1.0;
        for k in 0..30 {
            if k > 0 {
                fact *= k as f64;
            }
            oracle += (-1f64).powi(k) / (fact * fact) * 0.25f64.powi(k);
        }
        let w = bessel_w(&BesselParams::real(0.0, 1.0, 1.0), r(1.0), 1e-16).unwrap();
        assert!((w.value.re - oracle).abs() < 1e-13 * oracle.abs());
        assert!(w.converged);
    }

    #[test]
    fn half_order_is_cosine() {
        let w = bessel_w(&BesselParams::real(-0.5, 1.0, 1.0), r(1.0), 1e-16).unwrap();
        let want = (2.0 / PI).sqrt() * 1f64.cos();
        assert!((w.value.re - want).abs() < 1e-12 * want);
    }

    #[test]
    fn kappa_pole_is_rejected() {
        // p = −2, b = 1 → κ = −1
        assert!(matches!(
            bessel_w(&BesselParams::real(-2.0, 1.0, 1.0), r(1.0), 1e-12),
            Err(Error::Domain(_))
        ));
    }
}
