//! Grid files: a flat `key = value` format.
//!
//! ```text
//! # comments run to end of line
//! side = left, right
//! kind = bessel
//! alpha.start = 0.2
//! alpha.stop = 0.8
//! alpha.count = 3
//! fixed.gamma = 1.5+0.2i
//! samples = 10
//! seed = 42
//! audit = true
//! ```
//!
//! Every one of `alpha alpha_p beta beta_p gamma rho p b c x` must be given,
//! either as an axis (`start`, `stop`, `count`) or as `fixed.<name>`. Axes are
//! expanded in declaration order with the first axis varying slowest.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use msm_core::images::{ImageRequest, Representation, TrigImageRequest, TrigKind};
use msm_core::operators::{MsmParams, Side};
use msm_core::series::BesselParams;
use msm_core::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const PARAMS: [&str; 10] = ["alpha", "alpha_p", "beta", "beta_p", "gamma", "rho", "p", "b", "c", "x"];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum GridError {
    #[error("line {line}: {msg}")]
    Line { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}

fn list(v: &str) -> Vec<&str> {
    v.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn line_err(line: usize, msg: impl Into<String>) -> GridError {
    GridError::Line { line, msg: msg.into() }
}

/// Parses `1.5`, `-2e-3`, `0.3i`, `1.5+0.3i`, `1-2.5e-1i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || format!("not a number: {s:?}");
    if s.is_empty() {
        return Err(bad());
    }
    let Some(body) = s.strip_suffix('i') else {
        return s.parse::<f64>().map(|re| Complex64::new(re, 0.0)).map_err(|_| bad());
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let imag = |t: &str| match t {
        "" | "+" => Ok(1.0),
        "-" => Ok(-1.0),
        t => t.parse::<f64>().map_err(|_| bad()),
    };
    match split {
        Some(k) => Ok(Complex64::new(body[..k].parse().map_err(|_| bad())?, imag(&body[k..])?)),
        None => Ok(Complex64::new(0.0, imag(body)?)),
    }
}

/// What the integrand is: `W_{p,b,c}` or an elementary function of `ct`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    Bessel,
    Trig(TrigKind),
}

impl FromStr for Kind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Ok(match s {
            "bessel" => Kind::Bessel,
            "cos" => Kind::Trig(TrigKind::Cos),
            "cosh" => Kind::Trig(TrigKind::Cosh),
            "sin" => Kind::Trig(TrigKind::Sin),
            "sinh" => Kind::Trig(TrigKind::Sinh),
            _ => return Err(format!("unknown kind {s:?}")),
        })
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Bessel => "bessel",
            Kind::Trig(TrigKind::Cos) => "cos",
            Kind::Trig(TrigKind::Cosh) => "cosh",
            Kind::Trig(TrigKind::Sin) => "sin",
            Kind::Trig(TrigKind::Sinh) => "sinh",
        })
    }
}

pub fn parse_side(s: &str) -> Result<Side, String> {
    match s {
        "left" => Ok(Side::Left),
        "right" => Ok(Side::Right),
        _ => Err(format!("unknown side {s:?}")),
    }
}

pub fn side_name(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub start: Complex64,
    pub stop: Complex64,
    pub count: usize,
}

impl Axis {
    pub fn values(&self) -> Vec<Complex64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let n = (self.count - 1) as f64;
        (0..self.count).map(|k| self.start + (self.stop - self.start) * (k as f64 / n)).collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GridSpec {
    /// Axes in declaration order.
    pub axes: Vec<(String, Axis)>,
    pub fixed: BTreeMap<String, Complex64>,
    pub sides: Vec<Side>,
    pub kinds: Vec<Kind>,
    pub series_tolerance: f64,
    pub quadrature_tolerance: f64,
    /// Extra points drawn uniformly inside the axis ranges.
    pub samples: usize,
    pub seed: u64,
    pub audit: bool,
}

/// A full parameter point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub params: MsmParams,
    pub rho: Complex64,
    pub p: Complex64,
    pub b: Complex64,
    pub c: Complex64,
    pub x: f64,
}

impl Point {
    fn from_values(v: &BTreeMap<&str, Complex64>) -> Result<Self, GridError> {
        let x = v["x"];
        if x.im != 0.0 {
            return Err(GridError::Invalid(format!("x must be real, got {x}")));
        }
        Ok(Self {
            params: MsmParams::new(v["alpha"], v["alpha_p"], v["beta"], v["beta_p"], v["gamma"]),
            rho: v["rho"],
            p: v["p"],
            b: v["b"],
            c: v["c"],
            x: x.re,
        })
    }

    pub fn bessel_request(&self, side: Side, representation: Representation) -> ImageRequest {
        ImageRequest {
            params: self.params,
            rho: self.rho,
            bessel: BesselParams::new(self.p, self.b, self.c),
            x: self.x,
            side,
            representation,
        }
    }

    pub fn trig_request(&self, kind: TrigKind, side: Side, representation: Representation) -> TrigImageRequest {
        TrigImageRequest { params: self.params, rho: self.rho, c: self.c, x: self.x, kind, side, representation }
    }

    /// Named values in the fixed order of [`PARAMS`].
    pub fn named(&self) -> [(&'static str, Complex64); 10] {
        let m = &self.params;
        [
            ("alpha", m.alpha),
            ("alpha_p", m.alpha_p),
            ("beta", m.beta),
            ("beta_p", m.beta_p),
            ("gamma", m.gamma),
            ("rho", self.rho),
            ("p", self.p),
            ("b", self.b),
            ("c", self.c),
            ("x", Complex64::new(self.x, 0.0)),
        ]
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Case {
    pub index: usize,
    pub kind: Kind,
    pub side: Side,
    pub point: Point,
    pub admissible: bool,
}

impl Case {
    pub fn is_admissible(kind: Kind, side: Side, point: &Point) -> bool {
        match kind {
            Kind::Bessel => point.bessel_request(side, Representation::Wright).is_admissible(),
            Kind::Trig(t) => point.trig_request(t, side, Representation::Wright).as_bessel(point.b).0.is_admissible(),
        }
    }
}

impl FromStr for GridSpec {
    type Err = GridError;

    fn from_str(text: &str) -> Result<Self, GridError> {
        let mut seen = BTreeMap::new();
        let mut axis_order: Vec<String> = Vec::new();
        let mut axis_parts: BTreeMap<String, [Option<String>; 3]> = BTreeMap::new();
        let mut axis_lines: BTreeMap<String, usize> = BTreeMap::new();
        let mut spec = GridSpec {
            axes: Vec::new(),
            fixed: BTreeMap::new(),
            sides: vec![Side::Left],
            kinds: vec![Kind::Bessel],
            series_tolerance: 1e-10,
            quadrature_tolerance: 1e-6,
            samples: 0,
            seed: 42,
            audit: false,
        };

        for (n, raw) in text.lines().enumerate() {
            let line = n + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| line_err(line, format!("expected `key = value`, got {content:?}")))?;
            if value.is_empty() {
                return Err(line_err(line, format!("empty value for {key}")));
            }
            if seen.insert(key.to_string(), line).is_some() {
                return Err(line_err(line, format!("duplicate key {key}")));
            }
            let number = |v: &str| parse_complex(v).map_err(|e| line_err(line, e));
            let real = |v: &str| -> Result<f64, GridError> {
                v.parse::<f64>().map_err(|_| line_err(line, format!("{key} needs a real number, got {v:?}")))
            };

            match key {
                "side" => {
                    spec.sides = list(value)
                        .into_iter()
                        .map(|s| parse_side(s).map_err(|e| line_err(line, e)))
                        .collect::<Result<_, _>>()?;
                }
                "kind" => {
                    spec.kinds = list(value)
                        .into_iter()
                        .map(|s| s.parse().map_err(|e: String| line_err(line, e)))
                        .collect::<Result<_, _>>()?;
                }
                "tolerance.series" => spec.series_tolerance = real(value)?,
                "tolerance.quadrature" => spec.quadrature_tolerance = real(value)?,
                "samples" => {
                    spec.samples =
                        value.parse().map_err(|_| line_err(line, format!("samples must be a count, got {value:?}")))?
                }
                "seed" => {
                    spec.seed = value.parse().map_err(|_| line_err(line, format!("seed must be an integer, got {value:?}")))?
                }
                "audit" => {
                    spec.audit = value.parse().map_err(|_| line_err(line, format!("audit must be true or false, got {value:?}")))?
                }
                _ => {
                    if let Some(name) = key.strip_prefix("fixed.") {
                        if !PARAMS.contains(&name) {
                            return Err(line_err(line, format!("unknown parameter {name:?}")));
                        }
                        spec.fixed.insert(name.to_string(), number(value)?);
                        continue;
                    }
                    let (name, part) = key
                        .rsplit_once('.')
                        .ok_or_else(|| line_err(line, format!("unknown key {key:?}")))?;
                    if !PARAMS.contains(&name) {
                        return Err(line_err(line, format!("unknown parameter {name:?}")));
                    }
                    let slot = match part {
                        "start" => 0,
                        "stop" => 1,
                        "count" => 2,
                        _ => return Err(line_err(line, format!("unknown key {key:?}"))),
                    };
                    if !axis_parts.contains_key(name) {
                        axis_order.push(name.to_string());
                        axis_lines.insert(name.to_string(), line);
                    }
                    axis_parts.entry(name.to_string()).or_default()[slot] = Some(value.to_string());
                }
            }
        }

        for name in axis_order {
            let line = axis_lines[&name];
            if spec.fixed.contains_key(&name) {
                return Err(line_err(line, format!("{name} is both an axis and fixed")));
            }
            let [start, stop, count] = &axis_parts[&name];
            let count: usize = count
                .as_deref()
                .ok_or_else(|| line_err(line, format!("axis {name} has no count")))?
                .parse()
                .map_err(|_| line_err(line, format!("axis {name}: count must be a non-negative integer")))?;
            if count < 1 {
                return Err(line_err(line, format!("axis {name}: count must be at least 1")));
            }
            let start = parse_complex(start.as_deref().ok_or_else(|| line_err(line, format!("axis {name} has no start")))?)
                .map_err(|e| line_err(line, e))?;
            let stop = match stop {
                Some(s) => parse_complex(s).map_err(|e| line_err(line, e))?,
                None if count == 1 => start,
                None => return Err(line_err(line, format!("axis {name} has no stop"))),
            };
            spec.axes.push((name, Axis { start, stop, count }));
        }

        let missing: Vec<&str> = PARAMS
            .iter()
            .copied()
            .filter(|p| !spec.fixed.contains_key(*p) && !spec.axes.iter().any(|(n, _)| n == p))
            .collect();
        if !missing.is_empty() {
            return Err(GridError::Invalid(format!("no value for {}", missing.join(", "))));
        }
        if spec.sides.is_empty() || spec.kinds.is_empty() {
            return Err(GridError::Invalid("side and kind need at least one entry".into()));
        }
        if !(spec.series_tolerance > 0.0 && spec.quadrature_tolerance > 0.0) {
            return Err(GridError::Invalid("tolerances must be positive".into()));
        }
        Ok(spec)
    }
}

impl GridSpec {
    /// Lattice points in lexicographic axis order, then the random samples.
    pub fn points(&self) -> Result<Vec<Point>, GridError> {
        let mut lattice: Vec<BTreeMap<&str, Complex64>> =
            vec![self.fixed.iter().map(|(k, &v)| (k.as_str(), v)).collect()];
        for (name, axis) in &self.axes {
            let values = axis.values();
            lattice = lattice
                .into_iter()
                .flat_map(|base| {
                    values.iter().map(move |&v| {
                        let mut next = base.clone();
                        next.insert(name.as_str(), v);
                        next
                    })
                })
                .collect();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        for _ in 0..self.samples {
            let mut point: BTreeMap<&str, Complex64> = self.fixed.iter().map(|(k, &v)| (k.as_str(), v)).collect();
            for (name, axis) in &self.axes {
                let t: f64 = rng.gen();
                point.insert(name.as_str(), axis.start + (axis.stop - axis.start) * t);
            }
            lattice.push(point);
        }
        lattice.iter().map(Point::from_values).collect()
    }

    /// Every (kind, side, point) combination with its admissibility flag.
    pub fn expand(&self) -> Result<Vec<Case>, GridError> {
        let points = self.points()?;
        let mut cases = Vec::new();
        for &kind in &self.kinds {
            for &side in &self.sides {
                for point in &points {
                    cases.push(Case {
                        index: cases.len(),
                        kind,
                        side,
                        point: *point,
                        admissible: Case::is_admissible(kind, side, point),
                    });
                }
            }
        }
        Ok(cases)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const BASE: &str = "fixed.alpha = 0.5\nfixed.alpha_p = 0\nfixed.beta = 0.2\nfixed.beta_p = 0.4\n\
                        fixed.gamma = 1.5\nfixed.p = 0.5\nfixed.b = 1\nfixed.c = 1\n";

    #[test]
    fn complex_literals() {
        assert_eq!(parse_complex("1.5+0.3i").unwrap(), Complex64::new(1.5, 0.3));
        assert_eq!(parse_complex("-2").unwrap(), Complex64::new(-2.0, 0.0));
        assert_eq!(parse_complex("-0.2i").unwrap(), Complex64::new(0.0, -0.2));
        assert_eq!(parse_complex("1e-3-2e-1i").unwrap(), Complex64::new(1e-3, -0.2));
        assert_eq!(parse_complex("2 - i").unwrap(), Complex64::new(2.0, -1.0));
        assert!(parse_complex("1+").is_err());
        assert!(parse_complex("abc").is_err());
    }

    #[test]
    fn single_point() {
        let g: GridSpec = format!("{BASE}fixed.rho = 1.2\nfixed.x = 1\n").parse().unwrap();
        let cases = g.expand().unwrap();
        assert_eq!(cases.len(), 1);
        assert!(cases[0].admissible);
    }

    #[test]
    fn lexicographic_order() {
        let text = format!("{BASE}rho.start = 1\nrho.stop = 2\nrho.count = 3\nx.start = 0.5\nx.stop = 1.5\nx.count = 3\n");
        let points = text.parse::<GridSpec>().unwrap().points().unwrap();
        assert_eq!(points.len(), 9);
        let pairs: Vec<(f64, f64)> = points.iter().map(|p| (p.rho.re, p.x)).collect();
        assert_eq!(pairs[..4], [(1.0, 0.5), (1.0, 1.0), (1.0, 1.5), (1.5, 0.5)]);
    }

    #[test]
    fn parse_errors() {
        let zero = format!("{BASE}fixed.x = 1\nrho.start = 1\nrho.stop = 2\nrho.count = 0\n");
        assert!(matches!(zero.parse::<GridSpec>(), Err(GridError::Line { .. })));
        assert!(format!("{BASE}fixed.rho = 1\n").parse::<GridSpec>().is_err());
        assert!(format!("{BASE}fixed.rho = 1\nfixed.x = 1\nfixed.x = 2\n").parse::<GridSpec>().is_err());
        assert!(format!("{BASE}fixed.rho = 1\nfixed.x = 1\nfixed.delta = 2\n").parse::<GridSpec>().is_err());
        assert!(format!("{BASE}fixed.rho = 1\nfixed.x = 1+1i\n").parse::<GridSpec>().unwrap().points().is_err());
    }

    #[test]
    fn samples_are_seeded() {
        let text = format!("{BASE}fixed.x = 1\nrho.start = 1\nrho.stop = 2\nrho.count = 2\nsamples = 5\nseed = 7\n");
        let a = text.parse::<GridSpec>().unwrap().points().unwrap();
        let b = text.parse::<GridSpec>().unwrap().points().unwrap();
        assert_eq!(a.len(), 7);
        assert_eq!(a, b);
        assert!(a[2..].iter().all(|p| (1.0..=2.0).contains(&p.rho.re)));
    }
}
