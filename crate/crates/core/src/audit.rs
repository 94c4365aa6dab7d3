//! Literal transcriptions of the published closed forms for trigonometric
//! integrands and of the published `6F7` image statements, evaluated as
//! printed and compared with the images derived in [`crate::images`].
//!
//! The derived value is the reference. A mismatch is reported, never
//! repaired: the point of the audit is to show which printed formulas hold.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::Result;
use crate::gamma::{exp_checked, log_gamma_ratio};
use crate::images::{image, ImageRequest, Representation, TrigImageRequest, TrigKind};
use crate::operators::{MsmParams, Side};
use crate::relative_error;
use crate::series::{hyp_pfq, wright_psi, BesselParams, HypergeometricSpec, WrightSpec};

/// One printed formula evaluated next to its derived counterpart.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditEntry {
    /// e.g. `cos/left/wright`.
    pub name: String,
    /// Integrand the printed formula claims to transform.
    pub lhs: String,
    /// The printed right-hand side.
    pub transcription: String,
    pub printed: Result<Complex64>,
    pub derived: Result<Complex64>,
}

impl AuditEntry {
    pub fn relative_error(&self) -> Option<f64> {
        match (&self.printed, &self.derived) {
            (Ok(p), Ok(d)) => Some(relative_error(*p, *d)),
            _ => None,
        }
    }

    pub fn agrees(&self, tol: f64) -> bool {
        self.relative_error().is_some_and(|e| e <= tol)
    }
}

/// Evaluation point for the trigonometric audit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigAuditPoint {
    pub params: MsmParams,
    /// ρ for the left formulas.
    pub rho_left: Complex64,
    /// ρ for the right formulas; the right images need a small ρ.
    pub rho_right: Complex64,
    pub c: Complex64,
    pub x: f64,
}

struct Printed {
    kind: TrigKind,
    side: Side,
    representation: Representation,
    /// 1 when the printed integrand is `t^ρ f` rather than `t^{ρ−1} f`.
    rho_offset: f64,
}

const PRINTED: [Printed; 16] = {
    use Representation::{Hyp6F7, Wright};
    use Side::{Left, Right};
    use TrigKind::{Cos, Cosh, Sin, Sinh};
    [
        Printed { kind: Cos, side: Left, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Cosh, side: Left, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Cos, side: Right, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Cosh, side: Right, representation: Wright, rho_offset: 1.0 },
        Printed { kind: Cos, side: Left, representation: Hyp6F7, rho_offset: 0.0 },
        Printed { kind: Cosh, side: Left, representation: Hyp6F7, rho_offset: 0.0 },
        Printed { kind: Cos, side: Right, representation: Hyp6F7, rho_offset: 1.0 },
        Printed { kind: Cosh, side: Right, representation: Hyp6F7, rho_offset: 1.0 },
        Printed { kind: Sin, side: Left, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Sinh, side: Left, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Sin, side: Right, representation: Wright, rho_offset: 0.0 },
        Printed { kind: Sinh, side: Right, representation: Wright, rho_offset: 1.0 },
        Printed { kind: Sin, side: Left, representation: Hyp6F7, rho_offset: 0.0 },
        Printed { kind: Sinh, side: Left, representation: Hyp6F7, rho_offset: 0.0 },
        Printed { kind: Sin, side: Right, representation: Hyp6F7, rho_offset: 1.0 },
        Printed { kind: Sinh, side: Right, representation: Hyp6F7, rho_offset: 1.0 },
    ]
};

fn kind_name(kind: TrigKind) -> &'static str {
    match kind {
        TrigKind::Cos => "cos",
        TrigKind::Cosh => "cosh",
        TrigKind::Sin => "sin",
        TrigKind::Sinh => "sinh",
    }
}

fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

fn rep_name(rep: Representation) -> &'static str {
    match rep {
        Representation::Wright => "wright",
        Representation::Hyp6F7 => "6F7",
    }
}

struct Ctx {
    a: Complex64,
    ap: Complex64,
    b: Complex64,
    bp: Complex64,
    g: Complex64,
    rho: Complex64,
    x: f64,
    tol: f64,
}

impl Ctx {
    fn new(params: &MsmParams, rho: Complex64, x: f64, tol: f64) -> Self {
        Self { a: params.alpha, ap: params.alpha_p, b: params.beta, bp: params.beta_p, g: params.gamma, rho, x, tol }
    }

    fn xpow(&self, e: Complex64) -> Complex64 {
        (e * self.x.ln()).exp()
    }

    fn psi(&self, upper: [Complex64; 3], lower: [Complex64; 3], kappa: f64, z: Complex64) -> Result<Complex64> {
        let mut low: Vec<(Complex64, f64)> = lower.iter().map(|&v| (v, 2.0)).collect();
        low.push((Complex64::new(kappa, 0.0), 1.0));
        let spec = WrightSpec::new(upper.iter().map(|&v| (v, 2.0)).collect(), low, z);
        Ok(wright_psi(&spec, self.tol)?.value)
    }

    fn pfq(&self, upper: Vec<Complex64>, lower: Vec<Complex64>, z: Complex64) -> Result<Complex64> {
        Ok(hyp_pfq(&HypergeometricSpec::new(upper, lower, z), self.tol)?.value)
    }

    fn gammas(&self, num: &[Complex64], den: &[Complex64]) -> Result<Complex64> {
        match log_gamma_ratio(num, den)? {
            Some(l) => exp_checked(l),
            None => Ok(Complex64::new(0.0, 0.0)),
        }
    }
}

fn printed_trig(p: &Printed, ctx: &Ctx, c: Complex64) -> Result<Complex64> {
    let Ctx { a, ap, b, bp, g, rho, x, .. } = *ctx;
    let kappa = match p.kind {
        TrigKind::Cos | TrigKind::Cosh => 0.5,
        TrigKind::Sin | TrigKind::Sinh => 1.5,
    };
    let sign = match p.kind {
        TrigKind::Cos | TrigKind::Sin => -1.0,
        TrigKind::Cosh | TrigKind::Sinh => 1.0,
    };
    let c2 = c * c;
    let half = |v: Complex64| v / 2.0;
    match (p.side, p.representation) {
        (Side::Left, Representation::Wright) => {
            let psi = ctx.psi(
                [rho, rho + g - a - ap - b, rho + bp - ap],
                [rho + bp, rho + g - a - ap, rho + g - ap - b],
                kappa,
                sign * c2 * x * x / 4.0,
            )?;
            Ok(PI.sqrt() * ctx.xpow(rho - a - ap + g - 1.0) * psi)
        }
        (Side::Right, Representation::Wright) => {
            let psi = ctx.psi(
                [rho - g + a + ap, -rho + a + bp - g, -rho - b],
                [-rho, -rho - g + a + ap + bp, -rho + a - b],
                kappa,
                sign * c2 / (4.0 * x * x),
            )?;
            Ok(PI.sqrt() * ctx.xpow(rho - a - ap + g) * psi)
        }
        (Side::Left, Representation::Hyp6F7) => {
            let pref = ctx.gammas(
                &[rho, rho + g - a - ap - b, rho + bp - ap],
                &[rho + bp, rho + g - a - ap, rho + g - ap - b],
            )?;
            let upper = vec![
                half(rho),
                half(rho + 1.0),
                half(rho + g - a - ap - b),
                half(rho + g - a - ap + b + 1.0),
                half(rho + bp - ap),
                half(rho + bp - ap + 1.0),
            ];
            let lower = vec![
                Complex64::new(kappa, 0.0),
                half(rho + bp),
                half(rho + bp + 1.0),
                half(rho + g - a - ap),
                half(rho + g - a - ap + 1.0),
                half(rho + g - ap - b),
                half(rho + g - ap - b + 1.0),
            ];
            let f = ctx.pfq(upper, lower, sign * c2 * x * x / 4.0)?;
            Ok(pref * ctx.xpow(rho - a - ap + g - 1.0) * f)
        }
        (Side::Right, Representation::Hyp6F7) => {
            let pref = ctx.gammas(
                &[a + ap - g - rho, a + bp - g - rho, -b - rho],
                &[-rho, a + ap + bp - g - rho, a - b - rho],
            )?;
            let upper = vec![
                half(a + ap - rho),
                half(a + ap - g - rho + 1.0),
                half(a + bp - g - rho),
                half(a + bp - g - rho + 1.0),
                half(-b - rho),
                half(-b - rho + 1.0),
            ];
            let lower = vec![
                Complex64::new(kappa, 0.0),
                -half(rho),
                -half(rho + 1.0),
                half(a + ap + bp - g - rho),
                half(a + ap + bp - g - rho + 1.0),
                half(a - b - rho),
                half(a - b - rho + 1.0),
            ];
            let f = ctx.pfq(upper, lower, sign * c2 / (4.0 * x * x))?;
            Ok(pref * ctx.xpow(rho - a - ap + g) * f)
        }
    }
}

fn trig_transcription(p: &Printed) -> (String, String) {
    let f = kind_name(p.kind);
    let lhs_power = if p.rho_offset == 0.0 { "t^{ρ−1}" } else { "t^{ρ}" };
    let lhs = match p.side {
        Side::Left => format!("{lhs_power} {f}(ct)"),
        Side::Right => format!("{lhs_power} {f}(c/t)"),
    };
    let kappa = match p.kind {
        TrigKind::Cos | TrigKind::Cosh => "1/2",
        TrigKind::Sin | TrigKind::Sinh => "3/2",
    };
    let sign = match p.kind {
        TrigKind::Cos | TrigKind::Sin => "−",
        TrigKind::Cosh | TrigKind::Sinh => "",
    };
    let rhs = match (p.side, p.representation) {
        (Side::Left, Representation::Wright) => format!(
            "π^{{1/2}} x^{{ρ−α−α′+γ−1}} 3ψ4[(ρ,2), (ρ+γ−α−α′−β,2), (ρ+β′−α′,2); \
             (ρ+β′,2), (ρ+γ−α−α′,2), (ρ+γ−α′−β,2), ({kappa},1) | {sign}c²x²/4]"
        ),
        (Side::Right, Representation::Wright) => format!(
            "π^{{1/2}} x^{{ρ−α−α′+γ}} 3ψ4[(ρ−γ+α+α′,2), (−ρ+α+β′−γ,2), (−ρ−β,2); \
             (−ρ,2), (−ρ−γ+α+α′+β′,2), (−ρ+α−β,2), ({kappa},1) | {sign}c²/(4x²)]"
        ),
        (Side::Left, Representation::Hyp6F7) => format!(
            "Γ[ρ, ρ+γ−α−α′−β, ρ+β′−α′; ρ+β′, ρ+γ−α−α′, ρ+γ−α′−β] x^{{ρ−α−α′+γ−1}} \
             6F7[ρ/2, (ρ+1)/2, (ρ+γ−α−α′−β)/2, (ρ+γ−α−α′+β+1)/2, (ρ+β′−α′)/2, (ρ+β′−α′+1)/2; \
             {kappa}, (ρ+β′)/2, (ρ+β′+1)/2, (ρ+γ−α−α′)/2, (ρ+γ−α−α′+1)/2, (ρ+γ−α′−β)/2, \
             (ρ+γ−α′−β+1)/2 | {sign}c²x²/4]"
        ),
        (Side::Right, Representation::Hyp6F7) => format!(
            "Γ[α+α′−γ−ρ, α+β′−γ−ρ, −β−ρ; −ρ, α+α′+β′−γ−ρ, α−β−ρ] x^{{ρ−α−α′+γ}} \
             6F7[(α+α′−ρ)/2, (α+α′−γ−ρ+1)/2, (α+β′−γ−ρ)/2, (α+β′−γ−ρ+1)/2, (−β−ρ)/2, (−β−ρ+1)/2; \
             {kappa}, −ρ/2, −(ρ+1)/2, (α+α′+β′−γ−ρ)/2, (α+α′+β′−γ−ρ+1)/2, (α−β−ρ)/2, \
             (α−β−ρ+1)/2 | {sign}c²/(4x²)]"
        ),
    };
    (lhs, rhs)
}

/// All sixteen printed trigonometric formulas at one point.
pub fn audit_trig(point: &TrigAuditPoint, tol: f64) -> Vec<AuditEntry> {
    PRINTED
        .iter()
        .map(|p| {
            let rho = match p.side {
                Side::Left => point.rho_left,
                Side::Right => point.rho_right,
            };
            let ctx = Ctx::new(&point.params, rho, point.x, tol);
            let (lhs, transcription) = trig_transcription(p);
            let derived_req = TrigImageRequest {
                params: point.params,
                rho: rho + p.rho_offset,
                c: point.c,
                x: point.x,
                kind: p.kind,
                side: p.side,
                representation: p.representation,
            };
            AuditEntry {
                name: format!("{}/{}/{}", kind_name(p.kind), side_name(p.side), rep_name(p.representation)),
                lhs,
                transcription,
                printed: printed_trig(p, &ctx, point.c),
                derived: crate::images::trig_image(&derived_req, tol).map(|r| r.value),
            }
        })
        .collect()
}

/// The printed `6F7` statements for `t^{ρ−1} W_{p,b,c}(t)` (left) and
/// `t^{ρ−1} W_{p,b,c}(1/t)` (right), against the Wright-form images.
pub fn audit_bessel_6f7(
    params: &MsmParams,
    rho: Complex64,
    bessel: &BesselParams,
    x: f64,
    tol: f64,
) -> Vec<AuditEntry> {
    [Side::Left, Side::Right]
        .into_iter()
        .map(|side| {
            let req = ImageRequest { params: *params, rho, bessel: *bessel, x, side, representation: Representation::Wright };
            let derived = image(&req, tol).map(|r| r.value);
            let (lhs, transcription, printed) = match side {
                Side::Left => (
                    "t^{ρ−1} W_{p,b,c}(t)".to_string(),
                    "x^{ρ+p−1}/2^p Γ[ρ+p, ρ+p+γ−α−α′−β, ρ+p+β′−α′; ρ+p+β′, ρ+p+γ−α−α′, κ, ρ+p+γ−α′−β] \
                     6F7[(ρ+p)/2, (ρ+p+1)/2, (ρ+p+γ−α−α′−β)/2, (ρ+p−α−α′+β+1)/2, (ρ+p+β′−α′)/2, \
                     (ρ+p+β′−α′+1)/2; κ, (ρ+p+β′)/2, (ρ+p+β′+1)/2, (ρ+p+γ−α−α′)/2, (ρ+p+γ−α−α′+1)/2, \
                     (ρ+p+γ−α′−β)/2, (ρ+p+γ−α′−β+1)/2 | −cx²/4]"
                        .to_string(),
                    printed_bessel_left(params, rho, bessel, x, tol),
                ),
                Side::Right => (
                    "t^{ρ−1} W_{p,b,c}(1/t)".to_string(),
                    "x^{ρ−p−α−α′+γ−1}/2^p Γ[α+α′+p−γ−ρ+1, α+β′−γ+p−ρ+1, −β+p−ρ+1; p−ρ+1, κ, \
                     α+α′+β′+p−γ−ρ+1, α−β+p−ρ+1] 6F7[(α+α′+p−γ−ρ+1)/2, (α+α′+p+γ−ρ+2)/2, \
                     (α+β′+p−γ−ρ+1)/2, (α+β′+p−γ−ρ+2)/2, (−β+p−ρ+1)/2, (−β+p−ρ+2)/2; κ, (p−ρ+1)/2, \
                     (p−ρ+2)/2, (α+α′+β′+p−γ−ρ+1)/2, (α+α′+β′+p−γ−ρ+2)/2, (α−β+p−ρ+1)/2, \
                     (α−β+p−ρ+2)/2 | −c/(4x²)]"
                        .to_string(),
                    printed_bessel_right(params, rho, bessel, x, tol),
                ),
            };
            AuditEntry { name: format!("bessel/{}/6F7", side_name(side)), lhs, transcription, printed, derived }
        })
        .collect()
}

fn printed_bessel_left(params: &MsmParams, rho: Complex64, bessel: &BesselParams, x: f64, tol: f64) -> Result<Complex64> {
    let ctx = Ctx::new(params, rho, x, tol);
    let Ctx { a, ap, b, bp, g, .. } = ctx;
    let (p, kappa, c) = (bessel.p, bessel.kappa(), bessel.c);
    let z = rho + p;
    let half = |v: Complex64| v / 2.0;
    let pref = ctx.gammas(&[z, z + g - a - ap - b, z + bp - ap], &[z + bp, z + g - a - ap, kappa, z + g - ap - b])?;
    let upper = vec![
        half(z),
        half(z + 1.0),
        half(z + g - a - ap - b),
        half(z - a - ap + b + 1.0),
        half(z + bp - ap),
        half(z + bp - ap + 1.0),
    ];
    let lower = vec![
        kappa,
        half(z + bp),
        half(z + bp + 1.0),
        half(z + g - a - ap),
        half(z + g - a - ap + 1.0),
        half(z + g - ap - b),
        half(z + g - ap - b + 1.0),
    ];
    let f = ctx.pfq(upper, lower, -c * x * x / 4.0)?;
    let two_p = (-p * std::f64::consts::LN_2).exp();
    Ok(ctx.xpow(z - 1.0) * two_p * pref * f)
}

fn printed_bessel_right(params: &MsmParams, rho: Complex64, bessel: &BesselParams, x: f64, tol: f64) -> Result<Complex64> {
    let ctx = Ctx::new(params, rho, x, tol);
    let Ctx { a, ap, b, bp, g, .. } = ctx;
    let (p, kappa, c) = (bessel.p, bessel.kappa(), bessel.c);
    let w = p - rho;
    let half = |v: Complex64| v / 2.0;
    let pref = ctx.gammas(
        &[a + ap + w - g + 1.0, a + bp - g + w + 1.0, -b + w + 1.0],
        &[w + 1.0, kappa, a + ap + bp + w - g + 1.0, a - b + w + 1.0],
    )?;
    let upper = vec![
        half(a + ap + w - g + 1.0),
        half(a + ap + w + g + 2.0),
        half(a + bp + w - g + 1.0),
        half(a + bp + w - g + 2.0),
        half(-b + w + 1.0),
        half(-b + w + 2.0),
    ];
    let lower = vec![
        kappa,
        half(w + 1.0),
        half(w + 2.0),
        half(a + ap + bp + w - g + 1.0),
        half(a + ap + bp + w - g + 2.0),
        half(a - b + w + 1.0),
        half(a - b + w + 2.0),
    ];
    let f = ctx.pfq(upper, lower, -c / (4.0 * x * x))?;
    let two_p = (-p * std::f64::consts::LN_2).exp();
    Ok(ctx.xpow(rho - p - a - ap + g - 1.0) * two_p * pref * f)
}
