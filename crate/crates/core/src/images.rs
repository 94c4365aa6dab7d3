//! Closed-form images of `t^{ρ−1} W_{p,b,c}(t)` under `I⁺` and of
//! `t^{ρ−1} W_{p,b,c}(1/t)` under `I⁻`.
//!
//! Both images are power series in `−c x²/4` (left) or `−c/(4x²)` (right)
//! whose k-th coefficient is a power image at a shifted exponent. Grouping
//! the three numerator and three denominator gammas with step 2 gives a
//! `3ψ4` Wright function; splitting each `Γ(A + 2k) = Γ(A) 4^k (A/2)_k ((A+1)/2)_k`
//! gives a `6F7`. The term-wise route sums the coefficients through the power
//! images directly.
//!
//! Left:  `z = ρ + p`,   upper `z, z+γ−α−α′−β, z+β′−α′`,   lower `z+β′, z+γ−α−α′, z+γ−α′−β`.
//! Right: `w = 1−ρ+p`,   upper `w−γ+α+α′, w+α+β′−γ, w−β`, lower `w, w−γ+α+α′+β′, w+α−β`.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::{exp_checked, is_pole, log_gamma, log_gamma_ratio};
use crate::operators::{check_x, log_power_image, validate_left, validate_right, MsmParams, Side};
use crate::series::{hyp_pfq, sum_series, wright_psi, BesselParams, HypergeometricSpec, SeriesResult, WrightSpec};

/// Closed form used to evaluate an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Representation {
    Wright,
    Hyp6F7,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrigKind {
    Cos,
    Cosh,
    Sin,
    Sinh,
}

/// Image of `t^{ρ−1} W_{p,b,c}(t)` (left) or `t^{ρ−1} W_{p,b,c}(1/t)` (right) at `x`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ImageRequest {
    pub params: MsmParams,
    pub rho: Complex64,
    pub bessel: BesselParams,
    pub x: f64,
    pub side: Side,
    pub representation: Representation,
}

impl ImageRequest {
    /// ρ + p on the left, ρ − p on the right: the exponent the power-image
    /// condition applies to.
    pub fn shifted_rho(&self) -> Complex64 {
        match self.side {
            Side::Left => self.rho + self.bessel.p,
            Side::Right => self.rho - self.bessel.p,
        }
    }

    pub fn is_admissible(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<()> {
        check_x(self.x)?;
        self.params.check()?;
        self.bessel.check_kappa()?;
        let shifted = self.shifted_rho();
        match self.side {
            Side::Left if !validate_left(&self.params, shifted) => Err(Error::domain(format!(
                "left image needs Re(ρ+p) > max{{0, Re(α+α′+β−γ), Re(α′−β′)}}, got ρ+p = {shifted}"
            ))),
            Side::Right if !validate_right(&self.params, shifted) => Err(Error::domain(format!(
                "right image needs Re(ρ−p) < 1 + min{{Re(−β), Re(α+α′−γ), Re(α+β′−γ)}}, got ρ−p = {shifted}"
            ))),
            _ => Ok(()),
        }
    }

    /// Upper and lower gamma arguments of the k = 0 coefficient.
    fn gamma_arguments(&self) -> ([Complex64; 3], [Complex64; 3]) {
        let MsmParams { alpha: a, alpha_p: ap, beta: b, beta_p: bp, gamma: g } = self.params;
        match self.side {
            Side::Left => {
                let z = self.rho + self.bessel.p;
                ([z, z + g - a - ap - b, z + bp - ap], [z + bp, z + g - a - ap, z + g - ap - b])
            }
            Side::Right => {
                let w = 1.0 - self.rho + self.bessel.p;
                ([w - g + a + ap, w + a + bp - g, w - b], [w, w - g + a + ap + bp, w + a - b])
            }
        }
    }

    fn series_argument(&self) -> Complex64 {
        let c = self.bessel.c;
        match self.side {
            Side::Left => -c * self.x * self.x / 4.0,
            Side::Right => -c / (4.0 * self.x * self.x),
        }
    }

    /// ln of `x^{ρ±p−α−α′+γ−1} / 2^p`.
    fn log_prefactor(&self) -> Complex64 {
        let p = &self.params;
        let exponent = self.shifted_rho() - p.alpha - p.alpha_p + p.gamma - 1.0;
        exponent * self.x.ln() - self.bessel.p * LN_2
    }

    /// The `3ψ4` whose value times the prefactor is the image.
    pub fn wright_spec(&self) -> WrightSpec {
        let (upper, lower) = self.gamma_arguments();
        let mut lower: Vec<(Complex64, f64)> = lower.iter().map(|&v| (v, 2.0)).collect();
        lower.push((self.bessel.kappa(), 1.0));
        WrightSpec::new(upper.iter().map(|&v| (v, 2.0)).collect(), lower, self.series_argument())
    }

    /// The `6F7` and the log of its gamma prefactor (without the power of x).
    fn hypergeometric_spec(&self) -> Result<(HypergeometricSpec, Option<Complex64>)> {
        let (upper, lower) = self.gamma_arguments();
        let kappa = self.bessel.kappa();
        let halves = |v: &[Complex64; 3]| -> Vec<Complex64> {
            v.iter().flat_map(|&a| [a / 2.0, (a + 1.0) / 2.0]).collect()
        };
        let mut lower_params = vec![kappa];
        lower_params.extend(halves(&lower));
        let spec = HypergeometricSpec::new(halves(&upper), lower_params, self.series_argument());
        let mut den = lower.to_vec();
        den.push(kappa);
        Ok((spec, log_gamma_ratio(&upper, &den)?))
    }
}

/// Evaluates the request with the representation it names.
pub fn image(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    match req.representation {
        Representation::Wright => image_wright(req, tol),
        Representation::Hyp6F7 => image_6f7(req, tol),
    }
}

pub fn image_wright_left(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    image_wright(&ImageRequest { side: Side::Left, ..*req }, tol)
}

pub fn image_wright_right(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    image_wright(&ImageRequest { side: Side::Right, ..*req }, tol)
}

pub fn image_6f7_left(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    image_6f7(&ImageRequest { side: Side::Left, ..*req }, tol)
}

pub fn image_6f7_right(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    image_6f7(&ImageRequest { side: Side::Right, ..*req }, tol)
}

fn image_wright(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    req.validate()?;
    let series = wright_psi(&req.wright_spec(), tol)?;
    Ok(series.scaled(exp_checked(req.log_prefactor())?))
}

fn image_6f7(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    req.validate()?;
    let (spec, log_gamma_part) = req.hypergeometric_spec()?;
    let series = hyp_pfq(&spec, tol)?;
    match log_gamma_part {
        Some(l) => Ok(series.scaled(exp_checked(l + req.log_prefactor())?)),
        None => Ok(series.scaled(Complex64::new(0.0, 0.0))),
    }
}

/// k-th term `(−c)^k (1/2)^{2k+p} / (Γ(κ+k) k!) · I t^{ρ±(p+2k)−1}`.
fn termwise_term(req: &ImageRequest, k: usize) -> Result<Complex64> {
    let zero = Complex64::new(0.0, 0.0);
    let c = req.bessel.c;
    if k > 0 && c == zero {
        return Ok(zero);
    }
    let kappa_k = req.bessel.kappa() + k as f64;
    if is_pole(kappa_k) {
        return Ok(zero);
    }
    let kf = k as f64;
    let shift = req.bessel.p + 2.0 * kf;
    let rho_k = match req.side {
        Side::Left => req.rho + shift,
        Side::Right => req.rho - shift,
    };
    let Some(image) = log_power_image(req.side, &req.params, rho_k, req.x)? else {
        return Ok(zero);
    };
    let mut log_coef = -(2.0 * kf + req.bessel.p) * LN_2 - log_gamma(kappa_k)? - log_gamma(Complex64::new(kf + 1.0, 0.0))?;
    if k > 0 {
        log_coef += kf * (-c).ln();
    }
    exp_checked(log_coef + image)
}

/// Sum of the first `n_terms + 1` term-wise contributions (k = 0..=n_terms).
pub fn termwise_oracle(req: &ImageRequest, n_terms: usize) -> Result<SeriesResult> {
    req.validate()?;
    let mut value = Complex64::new(0.0, 0.0);
    let mut last = 0.0;
    for k in 0..=n_terms {
        let t = termwise_term(req, k)?;
        value += t;
        last = t.norm();
    }
    Ok(SeriesResult { value, terms_used: n_terms + 1, tail_estimate: last, converged: true })
}

/// Term-wise route truncated by the shared stopping rule.
pub fn termwise_sum(req: &ImageRequest, tol: f64) -> Result<SeriesResult> {
    req.validate()?;
    // Terms before κ + k leaves the poles are exactly zero.
    let kappa = req.bessel.kappa();
    let min_terms = if kappa.re <= 0.0 { (-kappa.re).ceil() as usize + 1 } else { 0 };
    sum_series(tol, min_terms, |k| {
        let t = termwise_term(req, k)?;
        Ok((t, t.norm()))
    })
}

/// Image of `t^{ρ−1} f(ct)` (left) or `t^{ρ−1} f(c/t)` (right) for an elementary `f`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigImageRequest {
    pub params: MsmParams,
    pub rho: Complex64,
    pub c: Complex64,
    pub x: f64,
    pub kind: TrigKind,
    pub side: Side,
    pub representation: Representation,
}

impl TrigImageRequest {
    /// The Bessel request the trigonometric image reduces to with free
    /// parameter `b`, and the constant factor in front of it.
    ///
    /// `cos(cz)  = √π (z/2)^{b/2} W_{−b/2, b, c²}(z)`,
    /// `sin(cz)  = c √π (z/2)^{b/2} W_{1−b/2, b, c²}(z)`,
    /// and the hyperbolic forms with `c² → −c²`.
    pub fn as_bessel(&self, b: Complex64) -> (ImageRequest, Complex64) {
        let half_b = b / 2.0;
        let (p, c_factor) = match self.kind {
            TrigKind::Cos | TrigKind::Cosh => (-half_b, Complex64::new(1.0, 0.0)),
            TrigKind::Sin | TrigKind::Sinh => (1.0 - half_b, self.c),
        };
        let c_w = match self.kind {
            TrigKind::Cos | TrigKind::Sin => self.c * self.c,
            TrigKind::Cosh | TrigKind::Sinh => -self.c * self.c,
        };
        let rho = match self.side {
            Side::Left => self.rho + half_b,
            Side::Right => self.rho - half_b,
        };
        let scale = c_factor * PI.sqrt() * (-half_b * LN_2).exp();
        let req = ImageRequest {
            params: self.params,
            rho,
            bessel: BesselParams::new(p, b, c_w),
            x: self.x,
            side: self.side,
            representation: self.representation,
        };
        (req, scale)
    }
}

/// Trigonometric image with the internal Bessel parameter `b = 1`.
pub fn trig_image(req: &TrigImageRequest, tol: f64) -> Result<SeriesResult> {
    trig_image_with_b(req, Complex64::new(1.0, 0.0), tol)
}

pub fn trig_image_with_b(req: &TrigImageRequest, b: Complex64, tol: f64) -> Result<SeriesResult> {
    let (bessel_req, scale) = req.as_bessel(b);
    Ok(image(&bessel_req, tol)?.scaled(scale))
}
