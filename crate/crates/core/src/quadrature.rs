//! Gauss–Jacobi and Clenshaw–Curtis rules on `[0, 1]` and an integrator for
//! `∫₀¹ (1−s)^a s^b h(s) ds` with algebraic endpoint singularities.
//!
//! Jacobi nodes come from the Golub–Welsch eigenproblem, solved with an
//! implicit QL sweep that only tracks the first component of each
//! eigenvector.
//!
//! Before the rule is applied the variable is graded, `s = w^m`, which turns
//! a fractional power `s^δ` in the integrand into `w^{mδ}`; for small
//! `b + 1` the weight itself then becomes milder and the remaining factor
//! much smoother.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gamma::log_gamma;

/// How the unit interval is covered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum QuadMode {
    /// Gauss–Jacobi on each end panel, Gauss–Legendre in between.
    #[default]
    GaussJacobiSinglePanel,
    /// Gauss–Jacobi on each end panel, Clenshaw–Curtis in between.
    CompositeClenshaw,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureConfig {
    /// Nodes per panel.
    pub nodes: usize,
    pub panels: usize,
    /// Tolerance handed to the series evaluated at each node.
    pub tol: f64,
    pub mode: QuadMode,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        Self { nodes: 200, panels: 1, tol: 1e-9, mode: QuadMode::GaussJacobiSinglePanel }
    }
}

impl QuadratureConfig {
    pub fn with_nodes(nodes: usize) -> Self {
        Self { nodes, ..Self::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.nodes < 4 {
            return Err(Error::domain(format!("need at least 4 nodes, got {}", self.nodes)));
        }
        if self.panels < 1 {
            return Err(Error::domain("need at least one panel"));
        }
        if !(self.tol > 0.0 && self.tol.is_finite()) {
            return Err(Error::domain(format!("tolerance must be positive, got {}", self.tol)));
        }
        Ok(())
    }
}

/// Nodes and weights of a rule on `[0, 1]`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl Rule {
    /// Σ w_i g(x_i).
    pub fn apply(&self, g: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * g(x)).sum()
    }
}

/// n-point Gauss rule for the weight `(1−u)^a u^b` on `[0, 1]`.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<Rule> {
    if n == 0 {
        return Err(Error::domain("Gauss–Jacobi rule needs at least one node"));
    }
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::domain(format!(
            "Jacobi weight exponents must exceed −1, got a = {a}, b = {b}"
        )));
    }
    // Monic Jacobi recurrence for (1−x)^a (1+x)^b on [−1, 1].
    let ab = a + b;
    let mut diag = vec![0.0; n];
    let mut off = vec![0.0; n];
    diag[0] = (b - a) / (ab + 2.0);
    for k in 1..n {
        let kf = k as f64;
        let s = 2.0 * kf + ab;
        diag[k] = (b * b - a * a) / (s * (s + 2.0));
        let beta = if k == 1 {
            4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
        } else {
            4.0 * kf * (kf + a) * (kf + b) * (kf + ab) / (s * s * (s + 1.0) * (s - 1.0))
        };
        off[k - 1] = beta.sqrt();
    }
    let mut first = vec![0.0; n];
    first[0] = 1.0;
    tridiagonal_ql(&mut diag, &mut off, &mut first)?;

    let mu0 = (log_gamma(Complex64::new(a + 1.0, 0.0))?.re + log_gamma(Complex64::new(b + 1.0, 0.0))?.re
        - log_gamma(Complex64::new(ab + 2.0, 0.0))?.re)
        .exp();
    let mut pairs: Vec<(f64, f64)> = diag
        .iter()
        .zip(&first)
        .map(|(&x, &v)| ((1.0 + x) / 2.0, mu0 * v * v))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    Ok(Rule {
        nodes: pairs.iter().map(|p| p.0).collect(),
        weights: pairs.iter().map(|p| p.1).collect(),
    })
}

/// n-point Clenshaw–Curtis rule on `[0, 1]` (n ≥ 2).
pub fn clenshaw_curtis(n: usize) -> Result<Rule> {
    if n < 2 {
        return Err(Error::domain("Clenshaw–Curtis needs at least two nodes"));
    }
    let big_n = n - 1;
    let nf = big_n as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for j in 0..n {
        let theta = j as f64 * PI / nf;
        let mut sum = 0.0;
        for k in 1..=big_n / 2 {
            let bk = if 2 * k == big_n { 1.0 } else { 2.0 };
            let kf = k as f64;
            sum += bk / (4.0 * kf * kf - 1.0) * (2.0 * kf * theta).cos();
        }
        let cj = if j == 0 || j == big_n { 1.0 } else { 2.0 };
        nodes.push((1.0 - theta.cos()) / 2.0);
        weights.push(cj / nf * (1.0 - sum) / 2.0);
    }
    Ok(Rule { nodes, weights })
}

/// Eigenvalues of a symmetric tridiagonal matrix (returned in `diag`) and
/// the first components of its normalized eigenvectors (returned in `first`,
/// which must start as e₁).
fn tridiagonal_ql(diag: &mut [f64], off: &mut [f64], first: &mut [f64]) -> Result<()> {
    let n = diag.len();
    if n == 1 {
        return Ok(());
    }
    off[n - 1] = 0.0;
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m < n - 1 {
                let dd = diag[m].abs() + diag[m + 1].abs();
                if off[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 60 {
                return Err(Error::convergence("tridiagonal QL iteration did not converge"));
            }
            let mut g = (diag[l + 1] - diag[l]) / (2.0 * off[l]);
            let mut r = g.hypot(1.0);
            g = diag[m] - diag[l] + off[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * off[i];
                let b = c * off[i];
                r = f.hypot(g);
                off[i + 1] = r;
                if r == 0.0 {
                    diag[i + 1] -= p;
                    off[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = diag[i + 1] - p;
                r = (diag[i] - g) * s + 2.0 * c * b;
                p = s * r;
                diag[i + 1] = g + p;
                g = c * r - b;
                let fz = first[i + 1];
                first[i + 1] = s * first[i] + c * fz;
                first[i] = c * first[i] - s * fz;
            }
            if deflated {
                continue;
            }
            diag[l] -= p;
            off[l] = g;
            off[m] = 0.0;
        }
    }
    Ok(())
}

/// Grading exponent for `s = w^m` given the real part of the `s` exponent.
pub fn grading_for(b: f64) -> u32 {
    ((3.0 / (b + 1.0)).ceil() as u32).clamp(1, 12)
}

/// `∫₀¹ (1−s)^a s^b h(s, 1−s) ds`.
///
/// The real parts of `a` and `b` go into the Jacobi weight and the
/// imaginary parts stay in the integrand as the phases `(1−s)^{i Im a}` and
/// `s^{i Im b}`. `h` receives `s` and `1 − s` separately so that both can be
/// resolved near their respective endpoints.
pub fn integrate_unit<H>(cfg: &QuadratureConfig, a: Complex64, b: Complex64, h: H) -> Result<Complex64>
where
    H: Fn(f64, f64) -> Result<Complex64>,
{
    cfg.validate()?;
    if !(a.re > -1.0 && b.re > -1.0) {
        return Err(Error::domain(format!(
            "endpoint exponents must have real part above −1, got a = {a}, b = {b}"
        )));
    }
    let m = grading_for(b.re);
    let mf = m as f64;
    // In w: weight (1−w)^a w^{m(b+1)−1}; remaining factor m · (Σ_{j<m} w^j)^a.
    let wa = a.re;
    let wb = mf * (b.re + 1.0) - 1.0;
    let (phase_a, phase_b) = (a.im, b.im);

    let g = |w: f64, one_minus_w: f64| -> Result<Complex64> {
        let geo: f64 = (0..m).map(|j| w.powi(j as i32)).sum();
        let s = w.powi(m as i32);
        let one_minus_s = one_minus_w * geo;
        let mut v = h(s, one_minus_s)? * (mf * geo.powf(wa));
        if phase_a != 0.0 {
            v *= Complex64::from_polar(1.0, phase_a * one_minus_s.ln());
        }
        if phase_b != 0.0 {
            v *= Complex64::from_polar(1.0, phase_b * s.ln());
        }
        Ok(v)
    };

    let panels = cfg.panels;
    let n = cfg.nodes;
    if panels == 1 {
        let rule = gauss_jacobi(n, wa, wb)?;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&x, &wt) in rule.nodes.iter().zip(&rule.weights) {
            acc += g(x, 1.0 - x)? * wt;
        }
        return Ok(acc);
    }

    let width = 1.0 / panels as f64;
    let mut acc = Complex64::new(0.0, 0.0);

    // First panel [0, h]: w = h y, weight w^{wb} = h^{wb} y^{wb}; (1−w)^{wa} explicit.
    let left = gauss_jacobi(n, 0.0, wb)?;
    let scale = width.powf(wb + 1.0);
    for (&y, &wt) in left.nodes.iter().zip(&left.weights) {
        let w = width * y;
        acc += g(w, 1.0 - w)? * ((1.0 - w).powf(wa) * wt * scale);
    }
    // Last panel [1−h, 1]: 1−w = h(1−y), weight (1−w)^{wa}; w^{wb} explicit.
    let right = gauss_jacobi(n, wa, 0.0)?;
    let scale = width.powf(wa + 1.0);
    let start = 1.0 - width;
    for (&y, &wt) in right.nodes.iter().zip(&right.weights) {
        let one_minus_w = width * (1.0 - y);
        let w = start + width * y;
        acc += g(w, one_minus_w)? * (w.powf(wb) * wt * scale);
    }
    if panels > 2 {
        let inner = match cfg.mode {
            QuadMode::GaussJacobiSinglePanel => gauss_jacobi(n, 0.0, 0.0)?,
            QuadMode::CompositeClenshaw => clenshaw_curtis(n)?,
        };
        for k in 1..panels - 1 {
            let lo = k as f64 * width;
            for (&y, &wt) in inner.nodes.iter().zip(&inner.weights) {
                let w = lo + width * y;
                let one_minus_w = 1.0 - w;
                acc += g(w, one_minus_w)? * (one_minus_w.powf(wa) * w.powf(wb) * wt * width);
            }
        }
    }
    Ok(acc)
}
