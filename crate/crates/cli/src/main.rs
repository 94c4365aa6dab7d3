use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use msm_cli::grid::{parse_complex, side_name, Case, GridSpec, Kind, Point};
use msm_cli::verify::{evaluate_route, run, RouteResult, VerifyConfig};
use msm_cli::{exit, exit_code, report};
use msm_core::operators::{MsmParams, Side};
use msm_core::quadrature::QuadratureConfig;
use msm_core::Complex64;

#[derive(Parser)]
#[command(name = "msm", version, about = "MSM fractional integrals of generalized Bessel functions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one image by one route.
    Eval(EvalArgs),
    /// Run the route-agreement suite over a grid and write a report.
    Verify(VerifyArgs),
    /// Grid utilities.
    Grid {
        #[command(subcommand)]
        command: GridCommand,
    },
}

#[derive(Subcommand)]
enum GridCommand {
    /// List the cases a grid expands to, with admissibility flags.
    Expand {
        #[arg(long)]
        grid: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Left,
    Right,
}

#[derive(Clone, Copy, ValueEnum)]
enum RouteArg {
    Wright,
    Hyp6f7,
    Termwise,
    Quadrature,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Bessel,
    Cos,
    Cosh,
    Sin,
    Sinh,
}

#[derive(clap::Args)]
struct EvalArgs {
    #[arg(long, value_enum)]
    side: SideArg,
    #[arg(long, value_enum)]
    route: RouteArg,
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    alpha: Complex64,
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    alpha_p: Complex64,
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    beta: Complex64,
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    beta_p: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    gamma: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    rho: Complex64,
    #[arg(long, default_value = "0", value_parser = parse_complex, allow_hyphen_values = true)]
    p: Complex64,
    #[arg(long, default_value = "1", value_parser = parse_complex, allow_hyphen_values = true)]
    b: Complex64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    c: Complex64,
    #[arg(long, allow_hyphen_values = true)]
    x: f64,
    #[arg(long, value_enum, default_value = "bessel")]
    kind: KindArg,
    #[arg(long, default_value_t = 1e-10)]
    tol: f64,
    #[arg(long, default_value_t = 200)]
    quad_nodes: usize,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long)]
    grid: PathBuf,
    #[arg(long)]
    out: PathBuf,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long, default_value_t = 200)]
    quad_nodes: usize,
    /// Overrides the grid's seed.
    #[arg(long)]
    seed: Option<u64>,
    /// Record per-case wall time (makes reports differ between runs).
    #[arg(long)]
    timing: bool,
}

fn fail(code: i32, msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("msm: {msg}");
    ExitCode::from(code as u8)
}

fn load_grid(path: &PathBuf) -> Result<GridSpec, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| fail(exit::IO_OR_PARSE, format!("{}: {e}", path.display())))?;
    text.parse().map_err(|e| fail(exit::IO_OR_PARSE, format!("{}: {e}", path.display())))
}

fn eval(args: EvalArgs) -> ExitCode {
    let side = match args.side {
        SideArg::Left => Side::Left,
        SideArg::Right => Side::Right,
    };
    let kind: Kind = match args.kind {
        KindArg::Bessel => "bessel",
        KindArg::Cos => "cos",
        KindArg::Cosh => "cosh",
        KindArg::Sin => "sin",
        KindArg::Sinh => "sinh",
    }
    .parse()
    .expect("known kind");
    let route = match args.route {
        RouteArg::Wright => "wright",
        RouteArg::Hyp6f7 => "hyp6f7",
        RouteArg::Termwise => "termwise",
        RouteArg::Quadrature => "quadrature",
    };
    if !(args.tol > 0.0 && args.tol < 1.0) {
        return fail(exit::DOMAIN, format!("tolerance must lie in (0, 1), got {}", args.tol));
    }
    let point = Point {
        params: MsmParams::new(args.alpha, args.alpha_p, args.beta, args.beta_p, args.gamma),
        rho: args.rho,
        p: args.p,
        b: args.b,
        c: args.c,
        x: args.x,
    };
    let check = match kind {
        Kind::Bessel => point.bessel_request(side, msm_core::images::Representation::Wright).validate(),
        Kind::Trig(t) => point
            .trig_request(t, side, msm_core::images::Representation::Wright)
            .as_bessel(point.b)
            .0
            .validate(),
    };
    if let Err(e) = check {
        return fail(exit_code(&e), e);
    }
    let case = Case { index: 0, kind, side, point, admissible: true };
    let cfg = VerifyConfig {
        eval_tol: args.tol,
        quadrature: QuadratureConfig { nodes: args.quad_nodes, ..QuadratureConfig::default() },
        timing: false,
    };
    if let Err(e) = cfg.quadrature.validate() {
        return fail(exit_code(&e), e);
    }
    match evaluate_route(&case, route, &cfg) {
        RouteResult::Value(v) => {
            println!("value: {:.16e} {:.16e}", v.value.re, v.value.im);
            if route == "quadrature" {
                println!("quadrature_nodes: {}", v.terms_used);
            } else {
                println!("terms_used: {}", v.terms_used);
            }
            match v.tail_estimate {
                Some(t) => println!("tail_estimate: {t:.2e}"),
                None => println!("tail_estimate: n/a"),
            }
            println!("converged: {}", v.converged);
            if v.converged {
                ExitCode::SUCCESS
            } else {
                fail(exit::CONVERGENCE, format!("series stopped at the term cap after {} terms", v.terms_used))
            }
        }
        RouteResult::Error(e) => fail(exit_code(&e), e),
        RouteResult::Skipped(why) => fail(exit::DOMAIN, format!("{route} route unavailable: {why}")),
    }
}

fn verify(args: VerifyArgs) -> ExitCode {
    let mut grid = match load_grid(&args.grid) {
        Ok(g) => g,
        Err(code) => return code,
    };
    if let Some(seed) = args.seed {
        grid.seed = seed;
    }
    let cfg = VerifyConfig {
        quadrature: QuadratureConfig { nodes: args.quad_nodes, ..VerifyConfig::default().quadrature },
        timing: args.timing,
        ..VerifyConfig::default()
    };
    if let Err(e) = cfg.quadrature.validate() {
        return fail(exit::IO_OR_PARSE, e);
    }
    let report = match run(&grid, &cfg) {
        Ok(r) => r,
        Err(e) => return fail(exit::IO_OR_PARSE, e),
    };
    for w in &report.warnings {
        eprintln!("msm: warning: {w}");
    }
    let stamp = chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Secs, true);
    if let Err(e) = fs::write(&args.out, report::to_json(&report, &stamp)) {
        return fail(exit::IO_OR_PARSE, format!("{}: {e}", args.out.display()));
    }
    if let Some(path) = &args.csv {
        let written = report::to_csv(&report).map_err(|e| e.to_string()).and_then(|t| fs::write(path, t).map_err(|e| e.to_string()));
        if let Err(e) = written {
            return fail(exit::IO_OR_PARSE, format!("{}: {e}", path.display()));
        }
    }
    let failures = report.failures();
    println!("{} cases, {} failures", report.cases.len(), failures);
    if failures > 0 {
        ExitCode::from(exit::VERIFY_FAILED as u8)
    } else {
        ExitCode::SUCCESS
    }
}

fn expand(path: PathBuf) -> ExitCode {
    let grid = match load_grid(&path) {
        Ok(g) => g,
        Err(code) => return code,
    };
    let cases = match grid.expand() {
        Ok(c) => c,
        Err(e) => return fail(exit::IO_OR_PARSE, e),
    };
    for case in cases {
        let values: Vec<String> = case
            .point
            .named()
            .iter()
            .map(|(n, v)| if v.im == 0.0 { format!("{n}={}", v.re) } else { format!("{n}={}{:+}i", v.re, v.im) })
            .collect();
        println!(
            "{}\t{}\t{}\t{}\tadmissible={}",
            case.index,
            case.kind,
            side_name(case.side),
            values.join(" "),
            case.admissible
        );
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { exit::IO_OR_PARSE } else { exit::OK };
            let _ = e.print();
            return ExitCode::from(code as u8);
        }
    };
    match cli.command {
        Command::Eval(args) => eval(args),
        Command::Verify(args) => verify(args),
        Command::Grid { command: GridCommand::Expand { grid } } => expand(grid),
    }
}
