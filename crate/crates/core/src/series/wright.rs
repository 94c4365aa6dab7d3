use num_complex::Complex64;

use super::{check_tol, sum_series, SeriesResult};
use crate::error::{Error, Result};
use crate::gamma::{exp_checked, is_pole, log_gamma};

/// Generalized (Fox–)Wright function
/// `pψq[(a_i, A_i); (b_j, B_j) | z] = Σ_k Π Γ(a_i + A_i k) / Π Γ(b_j + B_j k) · z^k / k!`.
#[derive(Debug, Clone, PartialEq)]
pub struct WrightSpec {
    pub upper: Vec<(Complex64, f64)>,
    pub lower: Vec<(Complex64, f64)>,
    pub argument: Complex64,
}

impl WrightSpec {
    pub fn new(
        upper: Vec<(Complex64, f64)>,
        lower: Vec<(Complex64, f64)>,
        argument: Complex64,
    ) -> Self {
        Self { upper, lower, argument }
    }

    /// Δ = Σ B_j − Σ A_i; the series is entire when Δ > −1.
    pub fn convergence_index(&self) -> f64 {
        self.lower.iter().map(|&(_, w)| w).sum::<f64>()
            - self.upper.iter().map(|&(_, w)| w).sum::<f64>()
    }

    /// Index after which no lower gamma with positive weight can sit on a pole.
    fn last_lower_pole(&self) -> usize {
        self.lower
            .iter()
            .filter(|&&(b, w)| w > 0.0 && b.re <= 0.0)
            .map(|&(b, w)| (-b.re / w).ceil() as usize + 1)
            .max()
            .unwrap_or(0)
    }
}

/// Sums the Wright series term by term in log space.
///
/// Lower gammas on a pole make their term vanish; an upper gamma on a pole is
/// an error.
pub fn wright_psi(spec: &WrightSpec, tol: f64) -> Result<SeriesResult> {
    check_tol(tol)?;
    if spec.upper.iter().chain(&spec.lower).any(|&(_, w)| !w.is_finite()) {
        return Err(Error::domain("Wright weights must be finite reals"));
    }
    let delta = spec.convergence_index();
    if delta <= -1.0 {
        return Err(Error::convergence(format!(
            "Wright series needs Σ B_j − Σ A_i > −1, got {delta}"
        )));
    }
    let z = spec.argument;
    let zero = Complex64::new(0.0, 0.0);
    let log_z = if z == zero { zero } else { z.ln() };
    sum_series(tol, spec.last_lower_pole(), |k| {
        if z == zero && k > 0 {
            return Ok((zero, 0.0));
        }
        let kf = k as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for &(a, w) in &spec.upper {
            acc += log_gamma(a + w * kf)?;
        }
        for &(b, w) in &spec.lower {
            let arg = b + w * kf;
            if is_pole(arg) {
                return Ok((zero, 0.0));
            }
            acc -= log_gamma(arg)?;
        }
        acc -= log_gamma(Complex64::new(kf + 1.0, 0.0))?;
        if k > 0 {
            acc += kf * log_z;
        }
        let term = exp_checked(acc)?;
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
    fn reduces_to_exponential() {
        let spec = WrightSpec::new(vec![(r(1.0), 1.0)], vec![(r(1.0), 1.0)], r(2.0));
        let v = wright_psi(&spec, 1e-16).unwrap();
        assert!((v.value.re - 2f64.exp()).abs() < 1e-12 * 2f64.exp());
    }

    #[test]
    fn zero_argument_gives_leading_gamma_ratio() {
        let spec = WrightSpec::new(
            vec![(r(2.5), 2.0), (r(0.7), 1.0)],
            vec![(r(1.5), 2.0), (r(3.0), 1.0)],
            r(0.0),
        );
        let v = wright_psi(&spec, 1e-15).unwrap();
        let want = crate::gamma::gamma(r(2.5)).unwrap() * crate::gamma::gamma(r(0.7)).unwrap()
            / (crate::gamma::gamma(r(1.5)).unwrap() * crate::gamma::gamma(r(3.0)).unwrap());
        assert!((v.value - want).norm() < 1e-14 * want.norm());
    }

    #[test]
    fn shifted_exponential() {
        // Σ z^k/(k+1)! at z = 1 is e − 1
        let spec = WrightSpec::new(vec![(r(1.0), 1.0)], vec![(r(2.0), 1.0)], r(1.0));
        let v = wright_psi(&spec, 1e-16).unwrap();
        let want = 1f64.exp() - 1.0;
        assert!((v.value.re - want).abs() < 1e-12 * want);
    }

    #[test]
    fn convergence_condition_is_enforced() {
        let spec = WrightSpec::new(vec![(r(1.0), 2.0)], vec![(r(1.0), 1.0)], r(0.5));
        assert_eq!(spec.convergence_index(), -1.0);
        assert!(matches!(wright_psi(&spec, 1e-12), Err(Error::Convergence(_))));
    }

    #[test]
    fn lower_poles_give_zero_terms() {
        // 1/Γ(k−1): terms k = 0, 1 vanish; Σ_{k≥2} z^k/(k!(k−2)!)
        let spec = WrightSpec::new(vec![], vec![(r(-1.0), 1.0)], r(0.5));
        let v = wright_psi(&spec, 1e-16).unwrap();
        let mut want = 0.0;
        let mut fk = 2.0;
        let mut fk2 = 1.0;
        for k in 2..40 {
            if k > 2 {
                fk *= k as f64;
                fk2 *= (k - 2) as f64;
            }
            want += 0.5f64.powi(k) / (fk * fk2);
        }
        assert!((v.value.re - want).abs() < 1e-14);
    }

    #[test]
    fn upper_pole_is_an_error() {
        let spec = WrightSpec::new(vec![(r(-1.0), 1.0)], vec![(r(1.0), 1.0)], r(0.5));
        assert!(matches!(wright_psi(&spec, 1e-12), Err(Error::Pole(_))));
    }
}
