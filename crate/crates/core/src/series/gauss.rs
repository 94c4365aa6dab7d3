//! Gauss hypergeometric function on the real line left of 1.
//!
//! * `|z| ≤ 1/2`: direct series.
//! * `1/2 < z < 1`: connection formula in `1 − z`. When `c − a − b` is close
//!   to an integer the two connection terms cancel; the value is then
//!   recovered from a Cauchy average over a circle in the perturbed parameter
//!   `a' = c − b − ζ`, on which the connection formula is well conditioned.
//! * `z < −1/2`: Pfaff transformation onto `z/(z−1) ∈ (1/3, 1)`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::pfq::hyp_pfq_unchecked;
use super::{check_tol, SeriesResult};
use crate::error::{Error, Result};
use crate::gamma::{exp_checked, is_pole, log_gamma_ratio};

const CONTOUR_POINTS: usize = 40;

/// `2F1(a, b; c; z)` for real `z < 1`, or any real `z` when the series terminates.
pub fn gauss_2f1(a: Complex64, b: Complex64, c: Complex64, z: f64, tol: f64) -> Result<SeriesResult> {
    check_tol(tol)?;
    if is_pole(c) {
        return Err(Error::domain(format!("c = {c} is a non-positive integer")));
    }
    // a terminating series is a polynomial, valid for every finite z
    if (is_pole(a) || is_pole(b)) && z.is_finite() {
        return hyp_pfq_unchecked(&[a, b], &[c], Complex64::new(z, 0.0), tol);
    }
    if !z.is_finite() || z >= 1.0 {
        return Err(Error::convergence(format!("2F1 requires real z < 1, got {z}")));
    }
    if z.abs() <= 0.5 {
        return hyp_pfq_unchecked(&[a, b], &[c], Complex64::new(z, 0.0), tol);
    }
    if z > 0.5 {
        return connection(a, b, c, 1.0 - z, 0.0, tol);
    }
    // Pfaff: (1−z)^{−a} 2F1(a, c−b; c; z/(z−1))
    let w = z / (z - 1.0);
    let factor = (-a * (1.0 - z).ln()).exp();
    let inner = if w <= 0.5 {
        hyp_pfq_unchecked(&[a, c - b], &[c], Complex64::new(w, 0.0), tol)?
    } else {
        connection(a, c - b, c, 1.0 / (1.0 - z), 0.0, tol)?
    };
    Ok(inner.scaled(factor))
}

/// `s^shift · 2F1(a, b; c; 1 − s)` for `s > 0`, with `s` supplied exactly so the
/// argument can sit arbitrarily close to 1.
///
/// The `shift` exponent lets callers strip the `s^{c−a−b}` singularity without
/// overflowing for tiny `s`.
pub fn hyp2f1_one_minus(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    s: f64,
    shift: f64,
    tol: f64,
) -> Result<SeriesResult> {
    check_tol(tol)?;
    if is_pole(c) {
        return Err(Error::domain(format!("c = {c} is a non-positive integer")));
    }
    if !(s > 0.0 && s.is_finite()) {
        return Err(Error::domain(format!("complement argument must be positive, got {s}")));
    }
    if s < 0.5 && !is_pole(a) && !is_pole(b) {
        return connection(a, b, c, s, shift, tol);
    }
    let plain = gauss_2f1(a, b, c, 1.0 - s, tol)?;
    Ok(plain.scaled(Complex64::new(s.powf(shift), 0.0)))
}

fn connection(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    s: f64,
    shift: f64,
    tol: f64,
) -> Result<SeriesResult> {
    let delta = c - a - b;
    let nearest = delta.re.round();
    let dist = (delta - nearest).norm();
    let radius = (2.0 / (-s.ln()).max(1.0)).min(0.25);
    if dist >= 0.4 * radius {
        return connection_direct(a, b, c, s, shift, tol);
    }
    // f(ζ) = 2F1(c−b−ζ, b; c; 1−s) is entire in ζ and equals the target at ζ = δ.
    let centre = Complex64::new(nearest, 0.0);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut terms = 0;
    let mut tail: f64 = 0.0;
    let mut converged = true;
    for j in 0..CONTOUR_POINTS {
        let theta = 2.0 * PI * (j as f64 + 0.5) / CONTOUR_POINTS as f64;
        let zeta = centre + Complex64::from_polar(radius, theta);
        let v = connection_direct(c - b - zeta, b, c, s, shift, tol)?;
        let w = (zeta - centre) / (zeta - delta);
        acc += v.value * w;
        terms += v.terms_used;
        tail = tail.max(v.tail_estimate * w.norm());
        converged &= v.converged;
    }
    Ok(SeriesResult {
        value: acc / CONTOUR_POINTS as f64,
        terms_used: terms,
        tail_estimate: tail,
        converged,
    })
}

fn connection_direct(
    a: Complex64,
    b: Complex64,
    c: Complex64,
    s: f64,
    shift: f64,
    tol: f64,
) -> Result<SeriesResult> {
    let delta = c - a - b;
    let ln_s = s.ln();
    let zero = Complex64::new(0.0, 0.0);

    let mut value = zero;
    let mut terms = 0;
    let mut tail = 0.0;
    let mut converged = true;

    if let Some(g1) = log_gamma_ratio(&[c, delta], &[c - a, c - b])? {
        let f1 = hyp_pfq_unchecked(&[a, b], &[1.0 - delta], Complex64::new(s, 0.0), tol)?;
        let coef = exp_checked(g1 + shift * ln_s)?;
        value += coef * f1.value;
        terms += f1.terms_used;
        tail += f1.tail_estimate * coef.norm();
        converged &= f1.converged;
    }
    if let Some(g2) = log_gamma_ratio(&[c, -delta], &[a, b])? {
        let f2 = hyp_pfq_unchecked(&[c - a, c - b], &[1.0 + delta], Complex64::new(s, 0.0), tol)?;
        let coef = exp_checked(g2 + (delta + shift) * ln_s)?;
        value += coef * f2.value;
        terms += f2.terms_used;
        tail += f2.tail_estimate * coef.norm();
        converged &= f2.converged;
    }
    Ok(SeriesResult { value, terms_used: terms, tail_estimate: tail, converged })
}
