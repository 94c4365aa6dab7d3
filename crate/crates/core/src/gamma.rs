//! Complex gamma machinery: log-gamma, reciprocal gamma, Pochhammer symbols
//! and the three-over-three gamma ratio used by the power-image formulas.
//!
//! Every product of gamma functions is accumulated as a sum of log-gammas and
//! exponentiated once, so prefactors that would overflow term by term stay
//! representable as long as the final value does.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Distance (in both the real and imaginary direction) within which a point
/// is classified as one of the poles 0, −1, −2, … of Γ.
pub const POLE_TOL: f64 = 1e-12;

// Lanczos approximation, g = 607/128, 15 terms (Godfrey's coefficient set).
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    0.339_946_499_848_118_9e-4,
    0.465_236_289_270_485_8e-4,
    -0.983_744_753_048_795_6e-4,
    0.158_088_703_224_912_5e-3,
    -0.210_264_441_724_103_1e-3,
    0.217_439_618_115_212_6e-3,
    -0.164_318_106_536_763_9e-3,
    0.844_182_239_838_527_4e-4,
    -0.261_908_384_015_814_1e-4,
    0.368_991_826_595_316_2e-5,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;
/// Largest x with exp(x) finite.
const LN_MAX: f64 = 709.782_712_893_384;

/// Below this real part the shift recurrence would need too many steps and
/// the reflection formula is used instead.
const SHIFT_LIMIT: f64 = -200.0;

/// True when `z` lies within [`POLE_TOL`] of a non-positive integer.
pub fn is_pole(z: Complex64) -> bool {
    let n = z.re.round();
    n <= 0.0 && (z.re - n).abs() <= POLE_TOL && z.im.abs() <= POLE_TOL
}

/// Principal branch of ln Γ(z).
///
/// For `Re z >= 1/2` the Lanczos sum is used directly. Down to `Re z = -200`
/// the argument is shifted right with `ln Γ(z) = ln Γ(z+n) − Σ Log(z+k)`, which
/// keeps the branch cut on the negative real axis. Further left the
/// reflection formula is applied and the imaginary part is only fixed modulo
/// 2π.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::domain(format!("log_gamma of non-finite argument {z}")));
    }
    if is_pole(z) {
        return Err(Error::Pole(z));
    }
    if z.im == 0.0 && z.re.fract() == 0.0 && (1.0..=170.0).contains(&z.re) {
        let fact: f64 = (2..z.re as u32).map(f64::from).product();
        return Ok(Complex64::new(fact.ln(), 0.0));
    }
    if z.re >= 0.5 {
        return Ok(lanczos_log_gamma(z));
    }
    if z.re > SHIFT_LIMIT {
        let steps = (0.5 - z.re).ceil() as usize;
        let mut acc = Complex64::new(0.0, 0.0);
        for k in 0..steps {
            acc += (z + k as f64).ln();
        }
        return Ok(lanczos_log_gamma(z + steps as f64) - acc);
    }
    // Γ(z) Γ(1−z) = π / sin(πz)
    Ok(Complex64::new(LN_PI, 0.0) - ln_sin_pi(z) - lanczos_log_gamma(1.0 - z))
}

fn lanczos_log_gamma(z: Complex64) -> Complex64 {
    let w = z - 1.0;
    let mut sum = Complex64::new(LANCZOS_COEF[0], 0.0);
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        sum += c / (w + k as f64);
    }
    let t = w + LANCZOS_G + 0.5;
    LN_SQRT_2PI + (w + 0.5) * t.ln() - t + sum.ln()
}

/// ln sin(πz) modulo 2πi, safe for large |Im z|.
fn ln_sin_pi(z: Complex64) -> Complex64 {
    let n = z.re.round();
    let d = Complex64::new(z.re - n, z.im);
    let i = Complex64::i();
    let parity = if (n as i64).rem_euclid(2) == 1 {
        Complex64::new(0.0, PI)
    } else {
        Complex64::new(0.0, 0.0)
    };
    let core = if d.im.abs() < 20.0 {
        (d * PI).sin().ln()
    } else if d.im > 0.0 {
        let small = (2.0 * i * PI * d).exp();
        -i * PI * d + ((small - 1.0) / (2.0 * i)).ln()
    } else {
        let small = (-2.0 * i * PI * d).exp();
        i * PI * d + ((1.0 - small) / (2.0 * i)).ln()
    };
    core + parity
}

/// Γ(z), with an overflow error when |Γ(z)| leaves the f64 range.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    exp_checked(log_gamma(z)?)
}

/// 1/Γ(z); exactly zero at the poles of Γ.
pub fn reciprocal_gamma(z: Complex64) -> Complex64 {
    match log_gamma(z) {
        Ok(l) => (-l).exp(),
        Err(_) => Complex64::new(0.0, 0.0),
    }
}

/// Exponentiate a log-magnitude, reporting overflow instead of returning inf.
pub(crate) fn exp_checked(log_value: Complex64) -> Result<Complex64> {
    if log_value.re > LN_MAX {
        return Err(Error::Overflow { log_magnitude: log_value.re });
    }
    Ok(log_value.exp())
}

const DIRECT_POCHHAMMER_MAX: u64 = 64;

/// Rising factorial (z)_k = z(z+1)⋯(z+k−1).
pub fn pochhammer(z: Complex64, k: u64) -> Complex64 {
    if k == 0 {
        return Complex64::new(1.0, 0.0);
    }
    // A factor z+j vanishes for some j < k: the product is exactly zero.
    if is_pole(z) && -z.re.round() < k as f64 {
        return Complex64::new(0.0, 0.0);
    }
    if k <= DIRECT_POCHHAMMER_MAX || is_pole(z) {
        return (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z + j as f64));
    }
    match (log_gamma(z + k as f64), log_gamma(z)) {
        (Ok(a), Ok(b)) => (a - b).exp(),
        _ => (0..k).fold(Complex64::new(1.0, 0.0), |acc, j| acc * (z + j as f64)),
    }
}

/// |(z)_{2k} − 4^k (z/2)_k ((z+1)/2)_k| / max(1, |(z)_{2k}|).
pub fn pochhammer_duplication_check(z: Complex64, k: u64) -> f64 {
    let lhs = pochhammer(z, 2 * k);
    let rhs = pochhammer(z / 2.0, k) * pochhammer((z + 1.0) / 2.0, k) * 4f64.powi(k as i32);
    (lhs - rhs).norm() / lhs.norm().max(1.0)
}

/// Relative discrepancy between Γ(2z) and 2^{2z−1} π^{−1/2} Γ(z) Γ(z+1/2).
pub fn legendre_duplication_check(z: Complex64) -> Result<f64> {
    let lhs = log_gamma(2.0 * z)?;
    let rhs = (2.0 * z - 1.0) * std::f64::consts::LN_2 - 0.5 * LN_PI
        + log_gamma(z)?
        + log_gamma(z + 0.5)?;
    Ok(((rhs - lhs).exp() - 1.0).norm())
}

/// The bracket Γ[a, b, c; d, e, f] = Γ(a)Γ(b)Γ(c) / (Γ(d)Γ(e)Γ(f)).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRatioSpec {
    pub numerator: [Complex64; 3],
    pub denominator: [Complex64; 3],
}

impl GammaRatioSpec {
    pub fn new(numerator: [Complex64; 3], denominator: [Complex64; 3]) -> Self {
        Self { numerator, denominator }
    }

    pub fn from_real(numerator: [f64; 3], denominator: [f64; 3]) -> Self {
        Self {
            numerator: numerator.map(|v| Complex64::new(v, 0.0)),
            denominator: denominator.map(|v| Complex64::new(v, 0.0)),
        }
    }
}

/// Evaluates the gamma bracket in log space.
///
/// A numerator pole is an error; a denominator pole with finite numerator
/// gives exactly zero.
pub fn gamma_ratio(spec: &GammaRatioSpec) -> Result<Complex64> {
    match log_gamma_ratio(&spec.numerator, &spec.denominator)? {
        Some(l) => exp_checked(l),
        None => Ok(Complex64::new(0.0, 0.0)),
    }
}

/// ln(Π Γ(num) / Π Γ(den)); `None` when a denominator gamma sits on a pole.
pub(crate) fn log_gamma_ratio(num: &[Complex64], den: &[Complex64]) -> Result<Option<Complex64>> {
    let mut acc = Complex64::new(0.0, 0.0);
    for &a in num {
        acc += log_gamma(a)?;
    }
    for &d in den {
        if is_pole(d) {
            return Ok(None);
        }
        acc -= log_gamma(d)?;
    }
    Ok(Some(acc))
}
