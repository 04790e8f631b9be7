//! Command-line front end. Every verb prints a `key = value` table, or with
//! `--json` a run record whose numbers carry 9 significant digits.

use crate::error::Error;
use crate::families::{
    self, alpha_root, condition_check, connected_construct, connected_critical_points, connected_metrics,
    lemma_scan, mask_construct, mask_metrics, mask_optimize, mask_x0_from_area, nonconnected_construct,
    nonconnected_metrics, oval_construct, oval_metrics, stadium_construct, stadium_optimize, LemmaId, MaskConfig,
    MaskParams, OvalParams, RotSymParams, SoakConfig, StadiumConfig,
};
use crate::fraenkel::{asymmetry_at, deficit, functional, optimal_balls, SearchConfig};
use crate::geometry::{region_from_json, region_to_json, validate, ArcRegion, Point};
use crate::render::{render_svg, render_symmetrized, render_with_optimal_balls, Annotations};
use crate::symmetrization::symmetrize;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

#[derive(Debug, Parser)]
#[command(name = "qisop", version, about = "Quantitative isoperimetric inequality in the plane")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Print a machine-readable run record instead of the table.
    #[arg(long, global = true)]
    pub json: bool,
    /// Render the shape, its optimal ball(s) and crossing points to PATH.
    #[arg(long, global = true, value_name = "PATH")]
    pub svg: Option<PathBuf>,
    #[arg(long, global = true, default_value_t = 42)]
    pub seed: u64,
    /// Tolerance for condition diagnostics.
    #[arg(long, global = true, default_value_t = 1e-8)]
    pub tol: f64,
    /// Cap on the number of lattice starts of the ball search.
    #[arg(long, global = true)]
    pub starts: Option<usize>,
    /// Grid resolution per axis for scans.
    #[arg(long, global = true, default_value_t = 50)]
    pub grid: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Deficit, asymmetry and their quotient for a shape file.
    Metrics {
        #[arg(long)]
        shape: PathBuf,
        /// Write the (parsed) shape back out as JSON.
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    /// Optimal balls of a shape, or the asymmetry for a fixed center.
    Asymmetry {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long, num_args = 2, value_names = ["X", "Y"], allow_negative_numbers = true)]
        center: Option<Vec<f64>>,
    },
    /// Four-cap rearrangement around an optimal ball.
    Symmetrize {
        #[arg(long)]
        shape: PathBuf,
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    #[command(subcommand)]
    Mask(MaskCmd),
    /// Oval with caps of half-width `eta1` (outside) and `eta2` (inside).
    Oval {
        #[arg(long)]
        eta1: f64,
        #[arg(long)]
        eta2: f64,
        #[arg(long)]
        eps: f64,
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    #[command(subcommand)]
    Rotsym(RotsymCmd),
    #[command(subcommand)]
    Stadium(StadiumCmd),
    /// Evaluate a lemma predicate over its region (`all` runs every lemma).
    Scan {
        #[arg(long)]
        lemma: String,
    },
    /// Random shapes searched for small quotients.
    Soak {
        #[arg(long, default_value_t = 1000)]
        n: usize,
    },
    /// Draw a shape file with its optimal balls.
    Render {
        #[arg(long)]
        shape: PathBuf,
        /// Draw the symmetrized set instead.
        #[arg(long)]
        symmetrized: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum MaskCmd {
    Eval {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        theta: f64,
        /// Defaults to the value giving area π.
        #[arg(long)]
        x0: Option<f64>,
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    Optimize {
        #[arg(long, default_value_t = 16)]
        lattice: usize,
        /// Admit opposite curvatures, θ up to π.
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Debug, Subcommand)]
pub enum RotsymCmd {
    /// Metrics and optimality residuals of an N-fold symmetric set.
    Eval {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        alpha: f64,
        /// Omit to solve the area constraint for θ.
        #[arg(long)]
        theta: Option<f64>,
        #[arg(long)]
        nonconnected: bool,
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    /// Zero of cot α − (N/π)(1 − α cot α).
    AlphaRoot {
        #[arg(long)]
        n: u32,
    },
    /// Critical points of the connected family on the area-constraint curve.
    Critical {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 200)]
        samples: usize,
    },
}

#[derive(Debug, Subcommand)]
pub enum StadiumCmd {
    Eval {
        #[arg(long)]
        r: f64,
        #[arg(long, value_name = "PATH")]
        emit_shape: Option<PathBuf>,
    },
    Optimize,
}

/// Failure of a command, mapped to the exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Domain(String),
    Internal(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Domain(_) => 3,
            Failure::Internal(_) => 1,
        }
    }
    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Domain(m) | Failure::Internal(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Config(_) => Failure::Usage(e.to_string()),
            Error::Numeric(_) => Failure::Internal(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct RunRecord {
    pub tool: String,
    pub version: String,
    pub command: String,
    /// SHA-256 of the arguments and the contents of every input file.
    pub inputs_hash: String,
    pub seed: u64,
    pub outputs: Value,
}

/// Result of one invocation, without touching the process streams.
#[derive(Debug)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Round to 9 significant digits.
pub fn sig9(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.8e}", x).parse().unwrap_or(x)
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(f) = n.as_f64() {
                *v = json!(sig9(f));
            }
        }
        Value::Array(a) => a.iter_mut().for_each(round_value),
        Value::Object(o) => o.values_mut().for_each(round_value),
        _ => {}
    }
}

fn flatten(prefix: &str, v: &Value, out: &mut Vec<(String, String)>) {
    match v {
        Value::Object(o) => {
            for (k, x) in o {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| x.is_number()) => {
            let items: Vec<String> = a.iter().map(|x| x.to_string()).collect();
            out.push((prefix.into(), format!("[{}]", items.join(", "))));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::Null => out.push((prefix.into(), "undefined".into())),
        Value::String(s) => out.push((prefix.into(), s.clone())),
        other => out.push((prefix.into(), other.to_string())),
    }
}

/// `key = value` lines, keys aligned.
pub fn table(v: &Value) -> String {
    let mut rows = Vec::new();
    flatten("", v, &mut rows);
    let w = rows.iter().map(|r| r.0.chars().count()).max().unwrap_or(0);
    rows.iter().map(|(k, x)| format!("{k:<w$} = {x}\n")).collect()
}

struct Ctx {
    hasher: Sha256,
    svg: Option<String>,
}

impl Ctx {
    fn read_shape(&mut self, path: &PathBuf) -> Result<ArcRegion, Failure> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", path.display())))?;
        self.hasher.update(text.as_bytes());
        let region = region_from_json(&text)?;
        let v = validate(&region);
        if !v.is_empty() {
            return Err(Failure::Domain(format!("invalid region: {}", serde_json::to_string(&v).unwrap_or_default())));
        }
        Ok(region)
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).unwrap_or(Value::Null)
}

fn emit(path: &Option<PathBuf>, region: &ArcRegion) -> Result<(), Failure> {
    if let Some(p) = path {
        std::fs::write(p, region_to_json(region) + "\n")
            .map_err(|e| Failure::Internal(format!("cannot write {}: {e}", p.display())))?;
    }
    Ok(())
}

fn search(g: &Global) -> SearchConfig {
    SearchConfig { max_starts: g.starts, ..SearchConfig::default() }
}

fn shape_metrics(region: &ArcRegion, cfg: &SearchConfig) -> Result<Value, Failure> {
    let asym = optimal_balls(region, cfg)?;
    let delta = deficit(region)?;
    let value = functional(region, cfg).ok().map(|f| f.value);
    Ok(json!({
        "area": region.area()?,
        "perimeter": region.perimeter()?,
        "delta": delta,
        "lambda": asym.lambda,
        "value": value,
        "near_ball": value.is_none(),
        "radius": asym.radius,
        "optimal_centers": asym.optimal_centers.iter().map(|c| [c.x, c.y]).collect::<Vec<_>>(),
    }))
}

fn scan_value(id: LemmaId, grid: usize) -> Result<Value, Failure> {
    let r = lemma_scan(id, grid)?;
    let mut v = to_value(&r);
    if let Value::Object(o) = &mut v {
        o.insert("verdict".into(), json!(if r.pass { "PASS" } else { "FAIL" }));
    }
    Ok(v)
}

fn dispatch(cli: &Cli, ctx: &mut Ctx) -> Result<(String, Value), Failure> {
    let g = &cli.global;
    let cfg = search(g);
    let wants_svg = g.svg.is_some();
    let out = match &cli.command {
        Command::Metrics { shape, emit_shape } => {
            let region = ctx.read_shape(shape)?;
            emit(emit_shape, &region)?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            ("metrics", shape_metrics(&region, &cfg)?)
        }
        Command::Asymmetry { shape, center } => {
            let region = ctx.read_shape(shape)?;
            let v = match center {
                Some(c) => json!({ "center": [c[0], c[1]], "lambda": asymmetry_at(&region, Point::new(c[0], c[1]))? }),
                None => to_value(&optimal_balls(&region, &cfg)?),
            };
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            ("asymmetry", v)
        }
        Command::Symmetrize { shape, emit_shape } => {
            let region = ctx.read_shape(shape)?;
            let sym = symmetrize(&region, &cfg)?;
            emit(emit_shape, &sym.region)?;
            if wants_svg {
                ctx.svg = Some(render_symmetrized(&sym));
            }
            let before = functional(&region, &cfg).ok();
            let after = functional(&sym.region, &cfg).ok();
            let v = json!({
                "eta_out": sym.eta_out,
                "eta_in": sym.eta_in,
                "theta_out": sym.theta_out,
                "theta_in": sym.theta_in,
                "decomposition": to_value(&sym.decomposition),
                "area_before": region.area()?,
                "area_after": sym.region.area()?,
                "value_before": before.map(|f| f.value),
                "value_after": after.map(|f| f.value),
                "lambda_after": after.map(|f| f.lambda),
                "delta_after": deficit(&sym.region)?,
            });
            ("symmetrize", v)
        }
        Command::Mask(MaskCmd::Eval { alpha, theta, x0, emit_shape }) => {
            let x0 = match x0 {
                Some(x) => *x,
                None => mask_x0_from_area(*alpha, *theta)?,
            };
            let p = MaskParams { alpha: *alpha, theta: *theta, x0 };
            let (rep, geo) = mask_metrics(&p)?;
            let region = mask_construct(&p)?;
            emit(emit_shape, &region)?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            let c = rep.value.map(|v| 1.0 / v);
            ("mask eval", json!({ "params": to_value(&p), "report": to_value(&rep), "geometry": to_value(&geo), "c": c }))
        }
        Command::Mask(MaskCmd::Optimize { lattice, extended }) => {
            let (p, rep) = mask_optimize(&MaskConfig { lattice: *lattice, extended: *extended })?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&mask_construct(&p)?, &cfg)?);
            }
            let c = rep.value.map(|v| 1.0 / v);
            ("mask optimize", json!({ "params": to_value(&p), "report": to_value(&rep), "c": c }))
        }
        Command::Oval { eta1, eta2, eps, emit_shape } => {
            let p = OvalParams::new(*eta1, *eta2, *eps);
            let rep = oval_metrics(&p)?;
            let region = oval_construct(&p)?;
            emit(emit_shape, &region)?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            let limit = crate::special::limit_case_a(*eta1, *eta2).ok();
            ("oval", json!({ "params": to_value(&p), "report": to_value(&rep), "limit": limit }))
        }
        Command::Rotsym(RotsymCmd::Eval { n, alpha, theta, nonconnected, emit_shape }) => {
            let theta = match theta {
                Some(t) => *t,
                None => families::rotsym::solve_theta(*n, *alpha, !*nonconnected)?,
            };
            let p = if *nonconnected {
                RotSymParams::nonconnected(*n, theta, *alpha)
            } else {
                RotSymParams::connected(*n, theta, *alpha)
            };
            let (rep, region) = if *nonconnected {
                (nonconnected_metrics(&p)?, nonconnected_construct(&p)?)
            } else {
                (connected_metrics(&p)?, connected_construct(&p)?)
            };
            emit(emit_shape, &region)?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            let cond = condition_check(&p, &rep, g.tol);
            let residuals: Map<String, Value> = cond.residuals.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            let holds: Map<String, Value> = cond.holds.iter().map(|(k, v)| (k.clone(), json!(v))).collect();
            ("rotsym eval", json!({ "params": to_value(&p), "report": to_value(&rep), "residuals": residuals, "holds": holds }))
        }
        Command::Rotsym(RotsymCmd::AlphaRoot { n }) => ("rotsym alpha-root", json!({ "n": n, "alpha": alpha_root(*n)? })),
        Command::Rotsym(RotsymCmd::Critical { n, samples }) => {
            let pts = connected_critical_points(*n, *samples);
            ("rotsym critical", json!({ "n": n, "count": pts.len(), "points": to_value(&pts) }))
        }
        Command::Stadium(StadiumCmd::Eval { r, emit_shape }) => {
            let region = stadium_construct(*r)?;
            emit(emit_shape, &region)?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&region, &cfg)?);
            }
            let f = families::stadium::stadium_functional(*r)?;
            ("stadium eval", json!({ "r": r, "delta": f.delta, "lambda": f.lambda, "value": f.value }))
        }
        Command::Stadium(StadiumCmd::Optimize) => {
            let (r, value) = stadium_optimize(&StadiumConfig::default())?;
            if wants_svg {
                ctx.svg = Some(render_with_optimal_balls(&stadium_construct(r)?, &cfg)?);
            }
            ("stadium optimize", json!({ "r": r, "half_length": families::stadium::stadium_half_length(r), "value": value }))
        }
        Command::Scan { lemma } => {
            if g.grid < 2 {
                return Err(Failure::Usage(format!("--grid {} < 2", g.grid)));
            }
            let v = if lemma.eq_ignore_ascii_case("all") {
                let all: Result<Vec<Value>, Failure> = LemmaId::all().into_iter().map(|id| scan_value(id, g.grid)).collect();
                let all = all?;
                let pass = all.iter().all(|v| v["pass"] == json!(true));
                json!({ "verdict": if pass { "PASS" } else { "FAIL" }, "scans": all })
            } else {
                scan_value(lemma.parse::<LemmaId>()?, g.grid)?
            };
            ("scan", v)
        }
        Command::Soak { n } => {
            let mut sc = SoakConfig::new(*n, g.seed);
            sc.search = cfg.clone();
            let rep = families::soak(&sc)?;
            if wants_svg {
                if let Some(m) = &rep.min_sample {
                    let shape = families::soak_shape(&sc, m.index)?;
                    ctx.svg = Some(render_with_optimal_balls(&shape, &cfg)?);
                }
            }
            let mut v = to_value(&rep);
            if !g.json {
                // the per-sample list is too long for a table
                if let Value::Object(o) = &mut v {
                    o.remove("samples");
                    o.remove("min_shape");
                }
            }
            ("soak", v)
        }
        Command::Render { shape, symmetrized } => {
            let region = ctx.read_shape(shape)?;
            let svg = if *symmetrized {
                render_symmetrized(&symmetrize(&region, &cfg)?)
            } else {
                render_with_optimal_balls(&region, &cfg)
                    .or_else(|_| Ok::<_, Error>(render_svg(&region, &Annotations::default())))?
            };
            if g.svg.is_none() {
                return Err(Failure::Usage("render needs --svg PATH".into()));
            }
            ctx.svg = Some(svg);
            ("render", json!({ "svg": g.svg.as_ref().map(|p| p.display().to_string()) }))
        }
    };
    Ok((out.0.to_string(), out.1))
}

/// Parse and execute one invocation.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            let code = if e.use_stderr() { 2 } else { 0 };
            return if code == 0 {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let mut ctx = Ctx { hasher: Sha256::new(), svg: None };
    for a in argv.iter().skip(1) {
        ctx.hasher.update(a.to_string_lossy().as_bytes());
        ctx.hasher.update([0]);
    }
    let started = Instant::now();
    let result = dispatch(&cli, &mut ctx);
    let elapsed = started.elapsed().as_secs_f64();
    let (command, mut outputs) = match result {
        Ok(x) => x,
        Err(f) => return Outcome { code: f.code(), stdout: String::new(), stderr: format!("error: {}\n", f.message()) },
    };
    if let (Some(path), Some(svg)) = (&cli.global.svg, &ctx.svg) {
        if let Err(e) = std::fs::write(path, svg) {
            return Outcome { code: 1, stdout: String::new(), stderr: format!("error: cannot write {}: {e}\n", path.display()) };
        }
    }
    round_value(&mut outputs);
    let digest = ctx.hasher.finalize();
    let record = RunRecord {
        tool: "qisop".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command,
        inputs_hash: digest.iter().map(|b| format!("{b:02x}")).collect(),
        seed: cli.global.seed,
        outputs,
    };
    let stdout = if cli.global.json {
        serde_json::to_string_pretty(&record).unwrap_or_default() + "\n"
    } else {
        table(&record.outputs)
    };
    Outcome { code: 0, stdout, stderr: format!("wall time: {elapsed:.3} s\n") }
}

pub fn main() -> ExitCode {
    let out = run(std::env::args_os());
    print!("{}", out.stdout);
    eprint!("{}", out.stderr);
    ExitCode::from(out.code)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding_keeps_nine_digits() {
        assert_eq!(sig9(0.393139732206), 0.393139732);
        assert_eq!(sig9(-2.54362491234e-7), -2.54362491e-7);
        assert_eq!(sig9(0.0), 0.0);
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(["qisop", "frobnicate"]).code, 2);
        assert_eq!(run(["qisop", "scan", "--lemma", "L99"]).code, 2);
        assert_eq!(run(["qisop", "--help"]).code, 0);
    }

    #[test]
    fn domain_errors_exit_3() {
        assert_eq!(run(["qisop", "rotsym", "alpha-root", "--n", "1"]).code, 3);
        assert_eq!(run(["qisop", "oval", "--eta1", "1.2", "--eta2", "1.2", "--eps", "0.01"]).code, 3);
    }
}
