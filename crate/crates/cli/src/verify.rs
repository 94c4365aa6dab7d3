//! The route-agreement suite: every admissible case is evaluated by the Wright
//! form, the `6F7` form, the term-wise series and, where the kernel allows it,
//! quadrature; the Wright value is compared with each of the others.

use std::time::{Duration, Instant};

use msm_core::audit::{audit_bessel_6f7, audit_trig, AuditEntry, TrigAuditPoint};
use msm_core::images::{image, termwise_sum, trig_image_with_b, Representation, TrigKind};
use msm_core::operators::{msm_left, msm_right, quadrature_supported, BesselIntegrand, FnIntegrand, Side};
use msm_core::quadrature::QuadratureConfig;
use msm_core::series::BesselParams;
use msm_core::{relative_error, Complex64, Error};
use rayon::prelude::*;

use crate::grid::{side_name, Case, GridSpec, Kind};

pub const ROUTES: [&str; 4] = ["wright", "hyp6f7", "termwise", "quadrature"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    /// Stopping tolerance for every series.
    pub eval_tol: f64,
    pub quadrature: QuadratureConfig,
    pub timing: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            eval_tol: 1e-15,
            quadrature: QuadratureConfig { tol: 1e-14, ..QuadratureConfig::default() },
            timing: false,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RouteValue {
    pub value: Complex64,
    /// Series terms, or quadrature nodes.
    pub terms_used: usize,
    pub tail_estimate: Option<f64>,
    pub converged: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PairOutcome {
    pub name: String,
    pub error: Option<f64>,
    pub tolerance: f64,
    pub status: PairStatus,
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum RouteResult {
    Value(RouteValue),
    Error(Error),
    Skipped(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CaseReport {
    pub case: Case,
    /// In the order of [`ROUTES`].
    pub routes: Vec<(&'static str, RouteResult)>,
    pub pairs: Vec<PairOutcome>,
    pub audit: Vec<AuditEntry>,
    pub wall_time: Option<Duration>,
}

impl CaseReport {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.status != PairStatus::Fail)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub series_tolerance: f64,
    pub quadrature_tolerance: f64,
    pub quadrature_nodes: usize,
    pub seed: u64,
    pub expanded: usize,
    pub cases: Vec<CaseReport>,
    pub warnings: Vec<String>,
}

impl Report {
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed()).count()
    }

    /// Largest error seen for each route pair.
    pub fn max_errors(&self) -> Vec<(String, Option<f64>)> {
        let mut out: Vec<(String, Option<f64>)> = Vec::new();
        for pair in self.cases.iter().flat_map(|c| &c.pairs) {
            let slot = match out.iter_mut().find(|(n, _)| *n == pair.name) {
                Some(s) => s,
                None => {
                    out.push((pair.name.clone(), None));
                    out.last_mut().unwrap()
                }
            };
            if let Some(e) = pair.error {
                slot.1 = Some(slot.1.map_or(e, |m: f64| m.max(e)));
            }
        }
        out
    }
}

fn from_series(r: msm_core::Result<msm_core::series::SeriesResult>) -> RouteResult {
    match r {
        Ok(s) => RouteResult::Value(RouteValue {
            value: s.value,
            terms_used: s.terms_used,
            tail_estimate: Some(s.tail_estimate),
            converged: s.converged,
        }),
        Err(e) => RouteResult::Error(e),
    }
}

fn from_quadrature(r: msm_core::Result<Complex64>, nodes: usize) -> RouteResult {
    match r {
        Ok(value) => RouteResult::Value(RouteValue { value, terms_used: nodes, tail_estimate: None, converged: true }),
        Err(e) => RouteResult::Error(e),
    }
}

/// The elementary function itself, `f(ct)` on the left and `f(c/t)` on the right.
fn trig_fn(kind: TrigKind, z: Complex64) -> Complex64 {
    match kind {
        TrigKind::Cos => z.cos(),
        TrigKind::Cosh => z.cosh(),
        TrigKind::Sin => z.sin(),
        TrigKind::Sinh => z.sinh(),
    }
}

/// Evaluates one route for a case.
pub fn evaluate_route(case: &Case, route: &str, cfg: &VerifyConfig) -> RouteResult {
    let point = &case.point;
    let tol = cfg.eval_tol;
    let quad = &cfg.quadrature;
    match (case.kind, route) {
        (Kind::Bessel, "wright") => from_series(image(&point.bessel_request(case.side, Representation::Wright), tol)),
        (Kind::Bessel, "hyp6f7") => from_series(image(&point.bessel_request(case.side, Representation::Hyp6F7), tol)),
        (Kind::Bessel, "termwise") => {
            from_series(termwise_sum(&point.bessel_request(case.side, Representation::Wright), tol))
        }
        (Kind::Bessel, "quadrature") => {
            if !quadrature_supported(&point.params) {
                return RouteResult::Skipped("kernel has no single-variable reduction".into());
            }
            let f = BesselIntegrand::new(point.rho, BesselParams::new(point.p, point.b, point.c), case.side, tol);
            let v = match case.side {
                Side::Left => msm_left(&point.params, &f, point.x, quad),
                Side::Right => msm_right(&point.params, &f, point.x, quad),
            };
            from_quadrature(v, quad.nodes * quad.panels)
        }
        (Kind::Trig(kind), "wright" | "hyp6f7") => {
            let rep = if route == "wright" { Representation::Wright } else { Representation::Hyp6F7 };
            from_series(trig_image_with_b(&point.trig_request(kind, case.side, rep), point.b, tol))
        }
        (Kind::Trig(kind), "termwise") => {
            let (req, scale) = point.trig_request(kind, case.side, Representation::Wright).as_bessel(point.b);
            from_series(termwise_sum(&req, tol).map(|s| s.scaled(scale)))
        }
        (Kind::Trig(kind), "quadrature") => {
            if !quadrature_supported(&point.params) {
                return RouteResult::Skipped("kernel has no single-variable reduction".into());
            }
            let (rho, c) = (point.rho, point.c);
            // sin and sinh vanish to first order where their argument does
            let odd = matches!(kind, TrigKind::Sin | TrigKind::Sinh);
            let v = match case.side {
                Side::Left => {
                    let growth = rho.re + if odd { 1.0 } else { 0.0 };
                    let f = FnIntegrand::new(move |t: f64| ((rho - 1.0) * t.ln()).exp() * trig_fn(kind, c * t), growth);
                    msm_left(&point.params, &f, point.x, quad)
                }
                Side::Right => {
                    let growth = rho.re - if odd { 1.0 } else { 0.0 };
                    let f = FnIntegrand::new(move |t: f64| ((rho - 1.0) * t.ln()).exp() * trig_fn(kind, c / t), growth);
                    msm_right(&point.params, &f, point.x, quad)
                }
            };
            from_quadrature(v, quad.nodes * quad.panels)
        }
        _ => RouteResult::Skipped(format!("unknown route {route}")),
    }
}

fn compare(name: &str, a: &RouteResult, b: &RouteResult, tolerance: f64) -> PairOutcome {
    let (error, status, note) = match (a, b) {
        (RouteResult::Value(x), RouteResult::Value(y)) => {
            let e = relative_error(x.value, y.value);
            if !(x.converged && y.converged) {
                (Some(e), PairStatus::Fail, Some("series hit the term cap".to_string()))
            } else {
                (Some(e), if e <= tolerance { PairStatus::Pass } else { PairStatus::Fail }, None)
            }
        }
        (_, RouteResult::Skipped(why)) | (RouteResult::Skipped(why), _) => (None, PairStatus::Skipped, Some(why.clone())),
        (RouteResult::Error(e), _) | (_, RouteResult::Error(e)) => (None, PairStatus::Fail, Some(e.to_string())),
    };
    PairOutcome { name: name.to_string(), error, tolerance, status, note }
}

fn audit_case(case: &Case, tol: f64) -> Vec<AuditEntry> {
    let point = &case.point;
    let side = side_name(case.side);
    match case.kind {
        Kind::Bessel => {
            let prefix = format!("bessel/{side}/");
            audit_bessel_6f7(&point.params, point.rho, &BesselParams::new(point.p, point.b, point.c), point.x, tol)
                .into_iter()
                .filter(|e| e.name.starts_with(&prefix))
                .collect()
        }
        Kind::Trig(_) => {
            let prefix = format!("{}/{side}/", case.kind);
            let audit_point =
                TrigAuditPoint { params: point.params, rho_left: point.rho, rho_right: point.rho, c: point.c, x: point.x };
            audit_trig(&audit_point, tol).into_iter().filter(|e| e.name.starts_with(&prefix)).collect()
        }
    }
}

pub fn run_case(case: &Case, grid: &GridSpec, cfg: &VerifyConfig) -> CaseReport {
    let start = Instant::now();
    let routes: Vec<(&'static str, RouteResult)> = ROUTES.iter().map(|&r| (r, evaluate_route(case, r, cfg))).collect();
    let wright = &routes[0].1;
    let pairs = vec![
        compare("wright-hyp6f7", wright, &routes[1].1, grid.series_tolerance),
        compare("wright-termwise", wright, &routes[2].1, grid.series_tolerance),
        compare("wright-quadrature", wright, &routes[3].1, grid.quadrature_tolerance),
    ];
    let audit = if grid.audit { audit_case(case, cfg.eval_tol) } else { Vec::new() };
    let wall_time = cfg.timing.then(|| start.elapsed());
    CaseReport { case: case.clone(), routes, pairs, audit, wall_time }
}

/// Runs every admissible case of the grid. Cases run in parallel; the
/// report keeps expansion order.
pub fn run(grid: &GridSpec, cfg: &VerifyConfig) -> Result<Report, crate::grid::GridError> {
    let all = grid.expand()?;
    let expanded = all.len();
    let admissible: Vec<Case> = all.into_iter().filter(|c| c.admissible).collect();
    let mut warnings = Vec::new();
    if admissible.is_empty() {
        warnings.push(format!("no admissible cases among {expanded} grid points"));
    } else if admissible.len() < expanded {
        warnings.push(format!("{} of {expanded} grid points are inadmissible and were skipped", expanded - admissible.len()));
    }
    let cases: Vec<CaseReport> = admissible.par_iter().map(|c| run_case(c, grid, cfg)).collect();
    Ok(Report {
        series_tolerance: grid.series_tolerance,
        quadrature_tolerance: grid.quadrature_tolerance,
        quadrature_nodes: cfg.quadrature.nodes,
        seed: grid.seed,
        expanded,
        cases,
        warnings,
    })
}
