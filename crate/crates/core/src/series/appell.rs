use num_complex::Complex64;

use super::{check_tol, sum_series, SeriesResult};
use crate::error::{Error, Result};
use crate::gamma::is_pole;

/// Appell's `F3(α, α′, β, β′; γ; x, y) = Σ_{m,n} (α)_m (α′)_n (β)_m (β′)_n / (γ)_{m+n} x^m y^n / (m! n!)`.
///
/// Summed along anti-diagonals `m + n = d`; the stopping rule is applied to
/// the absolute sum of each anti-diagonal.
#[allow(clippy::too_many_arguments)]
pub fn appell_f3(
    alpha: Complex64,
    alpha_p: Complex64,
    beta: Complex64,
    beta_p: Complex64,
    gamma: Complex64,
    x: Complex64,
    y: Complex64,
    tol: f64,
) -> Result<SeriesResult> {
    check_tol(tol)?;
    if is_pole(gamma) {
        return Err(Error::domain(format!("γ = {gamma} is a non-positive integer")));
    }
    let x_terminates = is_pole(alpha) || is_pole(beta);
    let y_terminates = is_pole(alpha_p) || is_pole(beta_p);
    if (!x_terminates && x.norm() >= 1.0) || (!y_terminates && y.norm() >= 1.0) {
        return Err(Error::convergence(format!(
            "F3 double series needs |x| < 1 and |y| < 1, got |x| = {}, |y| = {}",
            x.norm(),
            y.norm()
        )));
    }

    let one = Complex64::new(1.0, 0.0);
    // a[m] = (α)_m (β)_m x^m / ((γ)_m m!), b[n] likewise in the primed
    // parameters; the term is a[m] b[n] (γ)_m (γ)_n / (γ)_{m+n}, and the last
    // factor is built along the anti-diagonal so nothing overflows.
    let mut a = vec![one];
    let mut b = vec![one];
    sum_series(tol, 0, |d| {
        if d > 0 {
            let j = (d - 1) as f64;
            let last_a = a[d - 1];
            a.push(last_a * (alpha + j) * (beta + j) * x / ((gamma + j) * (j + 1.0)));
            let last_b = b[d - 1];
            b.push(last_b * (alpha_p + j) * (beta_p + j) * y / ((gamma + j) * (j + 1.0)));
        }
        let mut diag = Complex64::new(0.0, 0.0);
        let mut size = 0.0;
        let mut ratio = one;
        for m in 0..=d {
            if m > 0 {
                ratio *= (gamma + (m - 1) as f64) / (gamma + (d - m) as f64);
            }
            let t = a[m] * b[d - m] * ratio;
            diag += t;
            size += t.norm();
        }
        Ok((diag, size))
    })
}
