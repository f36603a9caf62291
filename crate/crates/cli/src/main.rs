use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ncweyl::algebra::{commutator, vacuum_expectation, Expr};
use ncweyl::constraint::{constraint_for, eta_from_theta, oscillator_values, ConstraintError};
use ncweyl::exec::Execution;
use ncweyl::fock::{numeric_checks, oscillator_spectrum, realize, FockConfig, Params, Route, SpectrumResult};
use ncweyl::parser::parse;
use ncweyl::relations::{run_catalog, CheckRecord, CheckStatus};

#[derive(Parser, Debug)]
#[command(name = "ncweyl", version, about = "Symbolic and numeric checks for the deformed Heisenberg-Weyl algebra")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    common: Common,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run the identity catalog and its numeric shadows.
    Verify {
        /// Keep only checks whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
    },
    /// Diagonalize the oscillator and label its levels.
    Spectrum,
    /// Symbolic operations on expressions.
    Expr {
        kind: ExprKind,
        /// One expression, or two for `commutator`.
        #[arg(required = true, num_args = 1..=2)]
        exprs: Vec<String>,
        #[arg(long, default_value = "deformed")]
        algebra: String,
        /// Also evaluate on the truncated Fock space.
        #[arg(long)]
        numeric: bool,
    },
    /// Fix the ladder parameter and the momentum deformation for a system.
    Constraint {
        #[arg(default_value = "oscillator")]
        system: String,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq)]
enum ExprKind {
    Commutator,
    NormalOrder,
    Vev,
}

#[derive(Clone, Copy, Debug, ValueEnum, PartialEq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Args, Debug)]
struct Common {
    #[arg(long, global = true, default_value = "1")]
    hbar: String,
    #[arg(long, global = true, default_value = "0.1")]
    theta: String,
    /// Defaults to mu^2 omega^2 theta.
    #[arg(long, global = true)]
    eta: Option<String>,
    #[arg(long, global = true, default_value = "1")]
    mu: String,
    #[arg(long, global = true, default_value = "1")]
    omega: String,
    /// Levels per mode.
    #[arg(long, global = true, default_value_t = 20)]
    nmax: usize,
    #[arg(long, global = true, default_value_t = 2)]
    buffer: usize,
    #[arg(long, global = true, env = "NCWEYL_FORMAT")]
    format: Option<Format>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
}

/// Exit status and message.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Run(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Run(_) => 1,
        }
    }
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn number(name: &str, text: &str) -> Result<f64, Failure> {
    let v: f64 = text.trim().parse().map_err(|_| usage(format!("--{name} `{text}` is not a number")))?;
    if !v.is_finite() || v < 0.0 {
        return Err(usage(format!("--{name} must be finite and non-negative, got {text}")));
    }
    Ok(v)
}

#[derive(Serialize)]
struct ParamReport {
    hbar: String,
    theta: String,
    eta: String,
    mu: String,
    omega: String,
    eta_from_constraint: bool,
    nmax: usize,
    buffer: usize,
}

struct RunConfig {
    params: Params,
    report: ParamReport,
    nmax: usize,
    buffer: usize,
    output: Option<PathBuf>,
}

impl RunConfig {
    fn from(c: &Common) -> Result<Self, Failure> {
        let hbar = number("hbar", &c.hbar)?;
        let theta = number("theta", &c.theta)?;
        let mu = number("mu", &c.mu)?;
        let omega = number("omega", &c.omega)?;
        let (params, eta_text) = match &c.eta {
            Some(t) => (Params { hbar, theta, eta: number("eta", t)?, mu, omega }, t.clone()),
            None => {
                let p = Params::on_constraint(hbar, theta, mu, omega);
                (p, format!("{}", p.eta))
            }
        };
        let report = ParamReport {
            hbar: c.hbar.clone(),
            theta: c.theta.clone(),
            eta: eta_text,
            mu: c.mu.clone(),
            omega: c.omega.clone(),
            eta_from_constraint: c.eta.is_none(),
            nmax: c.nmax,
            buffer: c.buffer,
        };
        Ok(RunConfig { params, report, nmax: c.nmax, buffer: c.buffer, output: c.output.clone() })
    }

    fn fock(&self) -> Result<FockConfig, Failure> {
        FockConfig::new(self.nmax, self.buffer, self.params).map_err(usage)
    }
}

#[derive(Serialize)]
struct Report<'a, T: Serialize> {
    version: &'static str,
    command: &'a str,
    params: &'a ParamReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    checks: Option<&'a [CheckRecord]>,
    artifacts: Vec<String>,
    #[serde(flatten)]
    body: T,
}

#[derive(Serialize)]
struct Empty {}

fn json<T: Serialize>(cfg: &RunConfig, command: &str, checks: Option<&[CheckRecord]>, body: T) -> String {
    let artifacts = cfg.output.iter().map(|p| p.display().to_string()).collect();
    let r = Report { version: env!("CARGO_PKG_VERSION"), command, params: &cfg.report, checks, artifacts, body };
    let mut s = serde_json::to_string_pretty(&r).expect("report serializes");
    s.push('\n');
    s
}

/// Writes the whole report at once: to a temporary file renamed over
/// `path`, or to stdout.
fn emit(path: Option<&Path>, text: &str) -> Result<(), Failure> {
    let io = |e: std::io::Error| Failure::Run(format!("write failed: {e}"));
    match path {
        Some(p) => {
            let dir = match p.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.persist(p).map_err(|e| io(e.error))?;
            Ok(())
        }
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(io)
        }
    }
}

fn status_word(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::Fail => "fail",
        CheckStatus::Noted => "noted",
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn verify(cfg: &RunConfig, filter: Option<&str>, format: Format) -> Result<bool, Failure> {
    let fock = cfg.fock()?;
    let mut checks = run_catalog(filter, Execution::available());
    let numeric = numeric_checks_matching(&fock, filter);
    checks.extend(numeric);
    if checks.is_empty() {
        eprintln!("warning: no check id starts with `{}`", filter.unwrap_or(""));
    }
    let ok = checks.iter().all(CheckRecord::passed);
    let text = match format {
        Format::Json => json(cfg, "verify", Some(&checks), Empty {}),
        Format::Csv => {
            let mut s = String::from("id,status,anchor,residual\n");
            for c in &checks {
                let r = c.residual.as_deref().unwrap_or("");
                s.push_str(&format!("{},{},{},{}\n", c.id, status_word(c.status), csv_field(&c.anchor), csv_field(r)));
            }
            s
        }
        Format::Text => {
            let mut s = String::new();
            for c in &checks {
                s.push_str(&format!("{:<5} {:<34} {}", status_word(c.status), c.id, c.description));
                if let Some(r) = &c.residual {
                    s.push_str(&format!("  [residual {r}]"));
                }
                s.push('\n');
                if let (CheckStatus::Noted | CheckStatus::Fail, Some(d)) = (c.status, &c.detail) {
                    s.push_str(&format!("      {d}\n"));
                }
            }
            let fails = checks.iter().filter(|c| !c.passed()).count();
            s.push_str(&format!("{} checks, {} failed\n", checks.len(), fails));
            s
        }
    };
    emit(cfg.output.as_deref(), &text)?;
    Ok(ok)
}

fn numeric_checks_matching(fock: &FockConfig, filter: Option<&str>) -> Vec<CheckRecord> {
    match filter {
        None => numeric_checks(fock),
        Some(f) if "num_".starts_with(f) || f.starts_with("num_") => {
            numeric_checks(fock).into_iter().filter(|c| c.id.starts_with(f)).collect()
        }
        Some(_) => Vec::new(),
    }
}

#[derive(Serialize)]
struct SpectrumBody<'a> {
    spectrum: &'a SpectrumResult,
    splitting: Option<f64>,
    first_order_splitting: f64,
}

fn spectrum(cfg: &RunConfig, format: Format) -> Result<bool, Failure> {
    let fock = cfg.fock()?;
    let s = oscillator_spectrum(&fock).map_err(|e| Failure::Run(e.to_string()))?;
    let ok = s.all_matched();
    let p = &cfg.params;
    let splitting = match (s.label(1, 0), s.label(0, 1)) {
        (Some(a), Some(b)) => Some(a.lambda - b.lambda),
        _ => None,
    };
    let first_order = 2.0 * p.omega * (p.theta * p.eta).sqrt();
    let text = match format {
        Format::Csv => s.to_csv(),
        Format::Json => json(cfg, "spectrum", None, SpectrumBody { spectrum: &s, splitting, first_order_splitting: first_order }),
        Format::Text => {
            let mut t = format!(
                "{} labelled levels, {} unmatched, max residual {:.3e}\n",
                s.labels.len(),
                s.unmatched.len(),
                s.max_residual()
            );
            if !s.constrained {
                t.push_str("note: eta is off the oscillator constraint\n");
            }
            if let Some(d) = splitting {
                t.push_str(&format!("splitting E(1,0) - E(0,1) = {d:.12} (first order {first_order:.12})\n"));
            }
            match s.route_difference {
                Some(d) => t.push_str(&format!("route difference {d:.3e}\n")),
                None => t.push_str("route difference unavailable: no hat ladders\n"),
            }
            for l in &s.labels {
                t.push_str(&format!("{:>3} {:>3} {:>22.16} {:>22.16} {:.3e}\n", l.n1, l.n2, l.lambda, l.formula, l.residual));
            }
            t
        }
    };
    emit(cfg.output.as_deref(), &text)?;
    if !ok {
        eprintln!("error: {} levels have no eigenvalue within tolerance", s.unmatched.len());
    }
    Ok(ok)
}

#[derive(Serialize)]
struct ExprBody {
    kind: &'static str,
    algebra: String,
    inputs: Vec<String>,
    result: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    numeric: Option<NumericShadow>,
}

#[derive(Serialize)]
struct NumericShadow {
    /// Value of a scalar result at the given parameters, as `[re, im]`.
    #[serde(skip_serializing_if = "Option::is_none")]
    value: Option<[f64; 2]>,
    /// Buffered distance between the matrices of the input and the result.
    residual: f64,
}

fn expr_cmd(cfg: &RunConfig, kind: ExprKind, inputs: &[String], algebra: &str, numeric: bool, format: Format) -> Result<bool, Failure> {
    let need = if kind == ExprKind::Commutator { 2 } else { 1 };
    if inputs.len() != need {
        return Err(usage(format!("{kind:?} takes {need} expression(s), got {}", inputs.len()).to_lowercase()));
    }
    let parsed: Vec<Expr> = inputs.iter().map(|t| parse(t, algebra).map_err(usage)).collect::<Result<_, _>>()?;
    let (name, result, raw) = match kind {
        ExprKind::Commutator => {
            let (a, b) = (&parsed[0], &parsed[1]);
            let c = commutator(a, b).map_err(usage)?;
            let raw = (a * b) - (b * a);
            ("commutator", c, Some(raw))
        }
        ExprKind::NormalOrder => ("normal-order", parsed[0].normal_order(), Some(parsed[0].clone())),
        ExprKind::Vev => {
            let v = vacuum_expectation(&parsed[0]).map_err(usage)?;
            ("vev", Expr::scalar(parsed[0].algebra(), v), None)
        }
    };
    let shadow = if numeric {
        let fock = cfg.fock()?;
        let run = |e: &ncweyl::fock::FockError| Failure::Run(e.to_string());
        let value = match result.as_scalar() {
            Some(c) => {
                let z = fock.eval(&c).map_err(|e| run(&e))?;
                Some([z.re, z.im])
            }
            None => None,
        };
        let m = realize(&result, &fock, Route::Bopp).map_err(|e| run(&e))?;
        let residual = match (&raw, kind) {
            (Some(r), _) => {
                let n = realize(r, &fock, Route::Bopp).map_err(|e| run(&e))?;
                n.sub(&m).map_err(|e| run(&e))?.max_on(&fock.buffered())
            }
            (None, _) => {
                let n = realize(&parsed[0], &fock, Route::Bopp).map_err(|e| run(&e))?;
                (n.get(0, 0) - m.get(0, 0)).norm()
            }
        };
        Some(NumericShadow { value, residual })
    } else {
        None
    };
    let rendered = result.render();
    let text = match format {
        Format::Json => json(
            cfg,
            "expr",
            None,
            ExprBody { kind: name, algebra: algebra.into(), inputs: inputs.to_vec(), result: rendered, numeric: shadow },
        ),
        Format::Csv => {
            let mut s = String::from("kind,result,re,im,residual\n");
            let (re, im, r) = match &shadow {
                Some(NumericShadow { value: Some([a, b]), residual }) => (format!("{a:.16e}"), format!("{b:.16e}"), format!("{residual:.3e}")),
                Some(NumericShadow { value: None, residual }) => (String::new(), String::new(), format!("{residual:.3e}")),
                None => (String::new(), String::new(), String::new()),
            };
            s.push_str(&format!("{name},{},{re},{im},{r}\n", csv_field(&rendered)));
            s
        }
        Format::Text => {
            let mut s = format!("{rendered}\n");
            if let Some(sh) = &shadow {
                if let Some([a, b]) = sh.value {
                    s.push_str(&format!("value {a:.16e} {b:+.16e}i\n"));
                }
                s.push_str(&format!("numeric residual {:.3e}\n", sh.residual));
            }
            s
        }
    };
    emit(cfg.output.as_deref(), &text)?;
    Ok(true)
}

fn constraint_cmd(cfg: &RunConfig, system: &str, format: Format) -> Result<bool, Failure> {
    let r = constraint_for(system).map_err(|e| match e {
        ConstraintError::UnknownSystem(_) => usage(e),
        other => Failure::Run(other.to_string()),
    })?;
    let p = &cfg.params;
    let eta = eta_from_theta(&r.k, p.theta, &oscillator_values(p.mu, p.omega, p.hbar)).map_err(|e| Failure::Run(e.to_string()))?;
    let rec = r.record(Some(eta));
    let text = match format {
        Format::Json => json(cfg, "constraint", None, &rec),
        Format::Csv => format!(
            "system,c2_prime,K,gamma,eta\n{},{},{},{},{eta}\n",
            rec.system,
            csv_field(&rec.c2_prime),
            csv_field(&rec.k),
            csv_field(rec.gamma.as_deref().unwrap_or(""))
        ),
        Format::Text => format!(
            "system {}\nc2_prime {}\nK {}\ngamma {}\neta {eta}\n",
            rec.system,
            rec.c2_prime,
            rec.k,
            rec.gamma.as_deref().unwrap_or("free")
        ),
    };
    emit(cfg.output.as_deref(), &text)?;
    Ok(true)
}

fn run(cli: &Cli) -> Result<bool, Failure> {
    let cfg = RunConfig::from(&cli.common)?;
    let fmt = |default: Format| cli.common.format.unwrap_or(default);
    match &cli.command {
        Command::Verify { filter } => verify(&cfg, filter.as_deref(), fmt(Format::Text)),
        Command::Spectrum => spectrum(&cfg, fmt(Format::Csv)),
        Command::Expr { kind, exprs, algebra, numeric } => expr_cmd(&cfg, *kind, exprs, algebra, *numeric, fmt(Format::Text)),
        Command::Constraint { system } => constraint_cmd(&cfg, system, fmt(Format::Json)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            let (Failure::Usage(m) | Failure::Run(m)) = &f;
            eprintln!("error: {m}");
            ExitCode::from(f.code())
        }
    }
}
