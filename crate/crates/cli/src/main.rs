//! Command-line driver: resolves a flat key-value config (defaults, then
//! config file, then command-line flags), runs one of the four commands,
//! and emits a deterministic CSV or JSON envelope.
//!
//! Exit codes: 0 success, 1 numerical failure, 2 usage/config error.
//! Wall time goes to stderr only, so identical configs produce
//! byte-identical output files.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use num_complex::Complex64;

use triline::checks::{run_all, VerifyOptions};
use triline::geometry::sector_of;
use triline::scattering::{
    channel_energy, phase_shift, s3_coefficient, s_matrix, scattering_solution, unwrap_phases,
};
use triline::sturmian::{adiabatic_roots, rho_curve, ModelParams};
use triline::wavefunction::{kl_integral_with_stats, psi_closed_form, QuadratureSpec};
use triline::HyperPoint;

const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Parser)]
#[command(name = "triline", version, about = "Three equal-mass particles on a line with contact interactions: S-matrix, angular basis, and wavefunction tables")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sweep the 2+1 elastic S-matrix over the open channel
    Smatrix(CommonArgs),
    /// Tabulate the angular spectral function and adiabatic channel roots
    Sturmian(CommonArgs),
    /// Tabulate the wavefunction on an (R, theta) grid
    Wavefunction(CommonArgs),
    /// Run every invariant suite and report residuals
    Verify(VerifyArgs),
}

/// The flat config keys; every key can come from the config file or be
/// overridden on the command line with the identical spelling.
#[derive(Args, Clone, Default)]
struct CommonArgs {
    /// key = value config file
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    c: Option<f64>,
    #[arg(long)]
    k: Option<f64>,
    #[arg(long = "k_min")]
    k_min: Option<f64>,
    #[arg(long = "k_max")]
    k_max: Option<f64>,
    #[arg(long = "k_steps")]
    k_steps: Option<usize>,
    #[arg(long = "R_min")]
    r_min: Option<f64>,
    #[arg(long = "R_max")]
    r_max: Option<f64>,
    #[arg(long = "R_steps")]
    r_steps: Option<usize>,
    #[arg(long = "theta_min")]
    theta_min: Option<f64>,
    #[arg(long = "theta_max")]
    theta_max: Option<f64>,
    #[arg(long = "theta_steps")]
    theta_steps: Option<usize>,
    #[arg(long = "t_max")]
    t_max: Option<f64>,
    #[arg(long = "rel_tol")]
    rel_tol: Option<f64>,
    /// closed | kl | both (wavefunction only)
    #[arg(long)]
    representation: Option<String>,
    /// csv | json
    #[arg(long)]
    format: Option<String>,
    /// output path; stdout when omitted
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// deliberately flip S -> 1/S so the recurrence suite must fail
    #[arg(long = "inject-fault")]
    inject_fault: bool,
}

/// Resolved run parameters: defaults, then config file, then flags.
#[derive(Clone, Debug)]
struct Resolved {
    c: f64,
    k: f64,
    k_min: f64,
    k_max: Option<f64>,
    k_steps: usize,
    r_min: f64,
    r_max: f64,
    r_steps: usize,
    theta_min: f64,
    theta_max: f64,
    theta_steps: usize,
    t_max: f64,
    rel_tol: f64,
    representation: String,
    format: String,
    out: Option<PathBuf>,
}

impl Default for Resolved {
    fn default() -> Self {
        Resolved {
            c: -1.0,
            k: 0.3,
            k_min: 0.0,
            k_max: None,
            k_steps: 50,
            r_min: 0.5,
            r_max: 5.0,
            r_steps: 10,
            theta_min: -0.4,
            theta_max: 0.4,
            theta_steps: 9,
            t_max: 40.0,
            rel_tol: 1.0e-7,
            representation: "closed".into(),
            format: "csv".into(),
            out: None,
        }
    }
}

struct ConfigError(String);

impl Resolved {
    fn apply_file(&mut self, path: &PathBuf) -> Result<(), ConfigError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| ConfigError(format!("line {}: expected key = value", lineno + 1)))?;
            self.apply_pair(key.trim(), value.trim())
                .map_err(|ConfigError(m)| ConfigError(format!("line {}: {m}", lineno + 1)))?;
        }
        Ok(())
    }

    fn apply_pair(&mut self, key: &str, value: &str) -> Result<(), ConfigError> {
        let float = |v: &str| -> Result<f64, ConfigError> {
            v.parse()
                .map_err(|_| ConfigError(format!("bad number for {key}: {v}")))
        };
        let count = |v: &str| -> Result<usize, ConfigError> {
            v.parse()
                .map_err(|_| ConfigError(format!("bad count for {key}: {v}")))
        };
        match key {
            "c" => self.c = float(value)?,
            "k" => self.k = float(value)?,
            "k_min" => self.k_min = float(value)?,
            "k_max" => self.k_max = Some(float(value)?),
            "k_steps" => self.k_steps = count(value)?,
            "R_min" => self.r_min = float(value)?,
            "R_max" => self.r_max = float(value)?,
            "R_steps" => self.r_steps = count(value)?,
            "theta_min" => self.theta_min = float(value)?,
            "theta_max" => self.theta_max = float(value)?,
            "theta_steps" => self.theta_steps = count(value)?,
            "t_max" => self.t_max = float(value)?,
            "rel_tol" => self.rel_tol = float(value)?,
            "representation" => self.representation = value.to_string(),
            "format" => self.format = value.to_string(),
            "out" => self.out = Some(PathBuf::from(value)),
            other => return Err(ConfigError(format!("unknown config key: {other}"))),
        }
        Ok(())
    }

    fn apply_flags(&mut self, a: &CommonArgs) {
        if let Some(v) = a.c {
            self.c = v;
        }
        if let Some(v) = a.k {
            self.k = v;
        }
        if let Some(v) = a.k_min {
            self.k_min = v;
        }
        if let Some(v) = a.k_max {
            self.k_max = Some(v);
        }
        if let Some(v) = a.k_steps {
            self.k_steps = v;
        }
        if let Some(v) = a.r_min {
            self.r_min = v;
        }
        if let Some(v) = a.r_max {
            self.r_max = v;
        }
        if let Some(v) = a.r_steps {
            self.r_steps = v;
        }
        if let Some(v) = a.theta_min {
            self.theta_min = v;
        }
        if let Some(v) = a.theta_max {
            self.theta_max = v;
        }
        if let Some(v) = a.theta_steps {
            self.theta_steps = v;
        }
        if let Some(v) = a.t_max {
            self.t_max = v;
        }
        if let Some(v) = a.rel_tol {
            self.rel_tol = v;
        }
        if let Some(v) = &a.representation {
            self.representation = v.clone();
        }
        if let Some(v) = &a.format {
            self.format = v.clone();
        }
        if let Some(v) = &a.out {
            self.out = Some(v.clone());
        }
    }

    fn resolve(args: &CommonArgs) -> Result<Resolved, ConfigError> {
        let mut r = Resolved::default();
        if let Some(path) = &args.config {
            r.apply_file(path)?;
        }
        r.apply_flags(args);
        if r.c == 0.0 || !r.c.is_finite() {
            return Err(ConfigError("c must be finite and nonzero".into()));
        }
        if r.format != "csv" && r.format != "json" {
            return Err(ConfigError(format!("format must be csv or json, got {}", r.format)));
        }
        match r.representation.as_str() {
            "closed" | "kl" | "both" => {}
            other => {
                return Err(ConfigError(format!(
                    "representation must be closed, kl, or both, got {other}"
                )))
            }
        }
        if r.k_steps == 0 || r.r_steps == 0 || r.theta_steps == 0 {
            return Err(ConfigError("grid step counts must be positive".into()));
        }
        Ok(r)
    }

    /// Canonical echo of every resolved key, used for the config hash and
    /// the envelope; floats in round-trip scientific form.
    fn echo(&self) -> BTreeMap<String, String> {
        let mut m = BTreeMap::new();
        let f = |x: f64| format!("{x:.16e}");
        m.insert("c".into(), f(self.c));
        m.insert("k".into(), f(self.k));
        m.insert("k_min".into(), f(self.k_min));
        m.insert(
            "k_max".into(),
            self.k_max.map(f).unwrap_or_else(|| "auto".into()),
        );
        m.insert("k_steps".into(), self.k_steps.to_string());
        m.insert("R_min".into(), f(self.r_min));
        m.insert("R_max".into(), f(self.r_max));
        m.insert("R_steps".into(), self.r_steps.to_string());
        m.insert("theta_min".into(), f(self.theta_min));
        m.insert("theta_max".into(), f(self.theta_max));
        m.insert("theta_steps".into(), self.theta_steps.to_string());
        m.insert("t_max".into(), f(self.t_max));
        m.insert("rel_tol".into(), f(self.rel_tol));
        m.insert("representation".into(), self.representation.clone());
        m.insert("format".into(), self.format.clone());
        m.insert(
            "out".into(),
            self.out
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_else(|| "-".into()),
        );
        m
    }
}

fn fnv1a64(bytes: &[u8]) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    for &b in bytes {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    h
}

#[derive(Clone, Copy)]
enum Cell {
    F(f64),
    I(i64),
    S(&'static str),
}

struct Envelope {
    command: &'static str,
    config: BTreeMap<String, String>,
    schema: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
    max_residual: f64,
    quadrature_nodes: u64,
    notes: Vec<String>,
}

impl Envelope {
    fn config_hash(&self) -> String {
        let mut text = String::from(self.command);
        for (k, v) in &self.config {
            let _ = write!(text, "\n{k}={v}");
        }
        format!("{:016x}", fnv1a64(text.as_bytes()))
    }

    fn to_csv(&self) -> String {
        let mut s = format!("# {} {} {}\n", self.command, VERSION, self.config_hash());
        s.push_str(&self.schema.join(","));
        s.push('\n');
        for row in &self.rows {
            let mut first = true;
            for cell in row {
                if !first {
                    s.push(',');
                }
                first = false;
                match cell {
                    Cell::F(x) => {
                        let x = if *x == 0.0 { 0.0 } else { *x };
                        let _ = write!(s, "{x:.16e}");
                    }
                    Cell::I(n) => {
                        let _ = write!(s, "{n}");
                    }
                    Cell::S(t) => s.push_str(t),
                }
            }
            s.push('\n');
        }
        s
    }

    fn to_json(&self) -> String {
        use serde_json::{json, Map, Number, Value};
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let mut obj = Map::new();
                for (name, cell) in self.schema.iter().zip(row) {
                    let v = match cell {
                        Cell::F(x) => {
                            let x = if *x == 0.0 { 0.0 } else { *x };
                            Number::from_f64(x).map(Value::Number).unwrap_or(Value::Null)
                        }
                        Cell::I(n) => Value::Number((*n).into()),
                        Cell::S(t) => Value::String((*t).into()),
                    };
                    obj.insert((*name).into(), v);
                }
                Value::Object(obj)
            })
            .collect();
        let config: Map<String, Value> = self
            .config
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        let doc = json!({
            "command": self.command,
            "version": VERSION,
            "config_hash": self.config_hash(),
            "config": config,
            "schema": self.schema,
            "rows": rows,
            "diagnostics": {
                "max_residual": Number::from_f64(self.max_residual).map(Value::Number).unwrap_or(Value::Null),
                "quadrature_nodes": self.quadrature_nodes,
                "notes": self.notes,
            },
        });
        let mut s = serde_json::to_string_pretty(&doc).expect("serializable document");
        s.push('\n');
        s
    }

    fn emit(&self, cfg: &Resolved) -> Result<(), String> {
        let body = if cfg.format == "json" {
            self.to_json()
        } else {
            self.to_csv()
        };
        match &cfg.out {
            Some(path) => std::fs::write(path, body)
                .map_err(|e| format!("cannot write {}: {e}", path.display())),
            None => {
                print!("{body}");
                Ok(())
            }
        }
    }
}

fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    if n == 1 {
        return vec![a];
    }
    (0..n)
        .map(|i| a + (b - a) * i as f64 / (n - 1) as f64)
        .collect()
}

enum RunError {
    Config(String),
    Numerical(String),
}

fn cmd_smatrix(cfg: &Resolved) -> Result<Envelope, RunError> {
    let params = ModelParams::new(cfg.c).map_err(|e| RunError::Config(e.to_string()))?;
    if cfg.c > 0.0 {
        return Err(RunError::Config(
            "repulsive coupling has no 2+1 channel; c must be negative".into(),
        ));
    }
    let threshold = std::f64::consts::PI * cfg.c.abs() / 6.0;
    let k_max = cfg.k_max.unwrap_or(0.95 * threshold);
    if !(0.0 <= cfg.k_min && cfg.k_min <= k_max && k_max < threshold) {
        return Err(RunError::Config(format!(
            "k sweep [{}, {k_max}] must sit inside the open channel [0, {threshold})",
            cfg.k_min
        )));
    }
    let ks = linspace(cfg.k_min, k_max, cfg.k_steps);
    let mut ss = Vec::with_capacity(ks.len());
    let mut deltas = Vec::with_capacity(ks.len());
    let mut max_residual = 0.0_f64;
    for &k in &ks {
        let s = s_matrix(k, &params).map_err(|e| RunError::Numerical(e.to_string()))?;
        let unitarity = (s.norm() - 1.0).abs();
        max_residual = max_residual.max(unitarity);
        if unitarity > 1.0e-12 {
            return Err(RunError::Numerical(format!(
                "unitarity violated at k = {k}: |S| - 1 = {unitarity:.3e}"
            )));
        }
        deltas.push(phase_shift(s));
        ss.push(s);
    }
    unwrap_phases(&mut deltas);
    let mut rows = Vec::with_capacity(ks.len());
    for (i, &k) in ks.iter().enumerate() {
        let s3 = s3_coefficient(k, &params).map_err(|e| RunError::Numerical(e.to_string()))?;
        rows.push(vec![
            Cell::F(k),
            Cell::F(ss[i].re),
            Cell::F(ss[i].im),
            Cell::F(ss[i].norm()),
            Cell::F(deltas[i]),
            Cell::F(s3.re),
            Cell::F(s3.im),
        ]);
    }
    Ok(Envelope {
        command: "smatrix",
        config: cfg.echo(),
        schema: vec!["k", "s_re", "s_im", "s_abs", "delta_unwrapped", "s3_re", "s3_im"],
        rows,
        max_residual,
        quadrature_nodes: 0,
        notes: vec![],
    })
}

fn cmd_sturmian(cfg: &Resolved) -> Result<Envelope, RunError> {
    let params = ModelParams::new(cfg.c).map_err(|e| RunError::Config(e.to_string()))?;
    let mut rows = Vec::new();
    let mut notes = Vec::new();

    // spectral function on the imaginary axis: nu = it, rho real there
    let imag_grid: Vec<Complex64> = linspace(0.0, 5.0, cfg.k_steps)
        .into_iter()
        .map(|t| Complex64::new(0.0, t))
        .collect();
    for v in rho_curve(&imag_grid, &params) {
        rows.push(vec![
            Cell::S("rho_imag"),
            Cell::F(v.nu.re),
            Cell::F(v.nu.im),
            Cell::F(v.rho.re),
            Cell::F(v.rho.im),
            Cell::F(f64::NAN),
            Cell::I(-1),
            Cell::F(f64::NAN),
            Cell::I(v.is_pole_adjacent() as i64),
        ]);
    }
    // real axis crosses the pole at nu = 3; those rows are flagged
    let real_grid: Vec<Complex64> = linspace(0.05, 5.95, cfg.k_steps)
        .into_iter()
        .map(|x| Complex64::new(x, 0.0))
        .collect();
    let mut flagged = 0;
    for v in rho_curve(&real_grid, &params) {
        if v.is_pole_adjacent() {
            flagged += 1;
        }
        rows.push(vec![
            Cell::S("rho_real"),
            Cell::F(v.nu.re),
            Cell::F(v.nu.im),
            Cell::F(v.rho.re),
            Cell::F(v.rho.im),
            Cell::F(f64::NAN),
            Cell::I(-1),
            Cell::F(f64::NAN),
            Cell::I(v.is_pole_adjacent() as i64),
        ]);
    }
    if flagged > 0 {
        notes.push(format!("{flagged} pole-adjacent rows flagged, values withheld"));
    }
    // adiabatic channel roots over the R' grid
    for &r_prime in &linspace(cfg.r_min, cfg.r_max, cfg.r_steps) {
        let roots =
            adiabatic_roots(r_prime, &params, 12).map_err(|e| RunError::Numerical(e.to_string()))?;
        for root in roots {
            rows.push(vec![
                Cell::S("root"),
                Cell::F(root.q.re),
                Cell::F(root.q.im),
                Cell::F(f64::NAN),
                Cell::F(f64::NAN),
                Cell::F(r_prime),
                Cell::I(root.kappa as i64),
                Cell::F(root.lambda),
                Cell::I(0),
            ]);
        }
    }
    Ok(Envelope {
        command: "sturmian",
        config: cfg.echo(),
        schema: vec![
            "kind",
            "nu_re",
            "nu_im",
            "rho_re",
            "rho_im",
            "r_prime",
            "kappa",
            "lambda",
            "pole_adjacent",
        ],
        rows,
        max_residual: 0.0,
        quadrature_nodes: 0,
        notes,
    })
}

fn cmd_wavefunction(cfg: &Resolved) -> Result<Envelope, RunError> {
    let params = ModelParams::new(cfg.c).map_err(|e| RunError::Config(e.to_string()))?;
    if cfg.c > 0.0 {
        return Err(RunError::Config(
            "repulsive coupling has no 2+1 channel; c must be negative".into(),
        ));
    }
    let energy = channel_energy(cfg.k, &params).map_err(|e| RunError::Config(e.to_string()))?;
    let sol =
        scattering_solution(cfg.k, &params).map_err(|e| RunError::Numerical(e.to_string()))?;
    let q = QuadratureSpec {
        t_max: cfg.t_max,
        rel_tol: cfg.rel_tol,
        ..QuadratureSpec::default()
    };
    let want_kl = cfg.representation != "closed";
    let mut rows = Vec::new();
    let mut notes = Vec::new();
    let mut nodes: u64 = 0;
    let mut max_residual = 0.0_f64;
    for &radius in &linspace(cfg.r_min, cfg.r_max, cfg.r_steps) {
        for &theta in &linspace(cfg.theta_min, cfg.theta_max, cfg.theta_steps) {
            let sector = sector_of(theta);
            let point = HyperPoint {
                radius,
                theta,
                sector,
            };
            let closed = psi_closed_form(point, &energy, &sol, &params);
            let kl = if want_kl && radius > 0.0 {
                match kl_integral_with_stats(point, &energy, &sol, &params, &q) {
                    Ok((v, st)) => {
                        nodes += st.nodes as u64;
                        Some(v)
                    }
                    Err(e) => {
                        notes.push(format!(
                            "R = {radius}, theta = {theta}: contour refused ({e}); closed form used"
                        ));
                        None
                    }
                }
            } else {
                if want_kl {
                    notes.push(format!(
                        "R = {radius}, theta = {theta}: contour needs R > 0; closed form used"
                    ));
                }
                None
            };
            let (tag, psi) = match (cfg.representation.as_str(), kl) {
                ("closed", _) => ("closed", closed),
                ("kl", Some(v)) => ("kl", v),
                ("both", Some(_)) => ("both", closed),
                _ => ("closed_fallback", closed),
            };
            let ratio = match (cfg.representation.as_str(), kl) {
                ("both", Some(v)) => {
                    let r = (v / closed).norm();
                    max_residual = max_residual.max((r - 1.0).abs());
                    r
                }
                _ => f64::NAN,
            };
            rows.push(vec![
                Cell::F(radius),
                Cell::F(theta),
                Cell::I(sector as i64),
                Cell::S(tag),
                Cell::F(psi.re),
                Cell::F(psi.im),
                Cell::F(psi.norm()),
                Cell::F(ratio),
            ]);
        }
    }
    Ok(Envelope {
        command: "wavefunction",
        config: cfg.echo(),
        schema: vec![
            "r",
            "theta",
            "sector",
            "representation",
            "psi_re",
            "psi_im",
            "psi_abs",
            "ratio",
        ],
        rows,
        max_residual,
        quadrature_nodes: nodes,
        notes,
    })
}

fn cmd_verify(cfg: &Resolved, inject_fault: bool) -> Result<(Envelope, bool), RunError> {
    let mut opts = VerifyOptions {
        c: cfg.c,
        flip_s_matrix: inject_fault,
        ..VerifyOptions::default()
    };
    if let Some(k_max) = cfg.k_max {
        opts.k_values = linspace(cfg.k_min, k_max, cfg.k_steps.min(8));
    }
    // rel_tol below the default acts as a uniform tolerance override
    if cfg.rel_tol != Resolved::default().rel_tol {
        opts.tolerance_override = Some(cfg.rel_tol);
    }
    let results = run_all(&opts);
    let mut rows = Vec::with_capacity(results.len());
    let mut notes = Vec::new();
    let mut all_pass = true;
    let mut max_residual = 0.0_f64;
    for r in &results {
        all_pass &= r.pass;
        if r.max_residual.is_finite() {
            max_residual = max_residual.max(r.max_residual);
        }
        if let Some(note) = &r.note {
            notes.push(format!("{}: {note}", r.name));
        }
        rows.push(vec![
            Cell::S(r.name),
            Cell::F(r.max_residual),
            Cell::F(r.tolerance),
            Cell::I(r.pass as i64),
        ]);
    }
    Ok((
        Envelope {
            command: "verify",
            config: cfg.echo(),
            schema: vec!["name", "max_residual", "tolerance", "pass"],
            rows,
            max_residual,
            quadrature_nodes: 0,
            notes,
        },
        all_pass,
    ))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let started = Instant::now();
    let (args, run): (&CommonArgs, _) = match &cli.command {
        Command::Smatrix(a) => (a, RunKind::Smatrix),
        Command::Sturmian(a) => (a, RunKind::Sturmian),
        Command::Wavefunction(a) => (a, RunKind::Wavefunction),
        Command::Verify(v) => (&v.common, RunKind::Verify(v.inject_fault)),
    };
    let cfg = match Resolved::resolve(args) {
        Ok(c) => c,
        Err(ConfigError(msg)) => {
            eprintln!("config error: {msg}");
            return ExitCode::from(2);
        }
    };
    let outcome = match run {
        RunKind::Smatrix => cmd_smatrix(&cfg).map(|e| (e, true)),
        RunKind::Sturmian => cmd_sturmian(&cfg).map(|e| (e, true)),
        RunKind::Wavefunction => cmd_wavefunction(&cfg).map(|e| (e, true)),
        RunKind::Verify(fault) => cmd_verify(&cfg, fault),
    };
    let (envelope, healthy) = match outcome {
        Ok(v) => v,
        Err(RunError::Config(msg)) => {
            eprintln!("config error: {msg}");
            return ExitCode::from(2);
        }
        Err(RunError::Numerical(msg)) => {
            eprintln!("numerical failure: {msg}");
            return ExitCode::from(1);
        }
    };
    if let Err(msg) = envelope.emit(&cfg) {
        eprintln!("output error: {msg}");
        return ExitCode::from(1);
    }
    // wall time is diagnostic only and must not perturb the output files
    eprintln!(
        "{}: {} rows, wall time {:.1} ms",
        envelope.command,
        envelope.rows.len(),
        started.elapsed().as_secs_f64() * 1e3
    );
    if healthy {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

enum RunKind {
    Smatrix,
    Sturmian,
    Wavefunction,
    Verify(bool),
}
