//! CLI over the gamma5-mass Dirac toolkit.
//!
//! Units are natural (c = hbar = 1): masses, momenta and energies share one
//! arbitrary unit. Output is deterministic: no timestamps, `.` decimal
//! point, fixed 9-decimal numeric fields, residuals in scientific notation
//! with 6 significant digits. Exit codes: 0 success, 1 domain/verification
//! failure, 2 usage error.

use std::fs::File;
use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ptdirac::{
    build_adjoint_hamiltonian, build_basis, build_hamiltonian, classify, fig1_curves, fig2_curves,
    fig3_mask, hermitian_counterpart, linear_grid, mass_bound, metric_operator, spectrum,
    verify_intertwining, Branch, MassParams, Momentum, PtDiracError,
};

const USAGE_EXIT: u8 = 2;
const DOMAIN_EXIT: u8 = 1;

#[derive(Parser)]
#[command(
    name = "ptdirac",
    about = "Spectra, metric operators, mass bounds and phase regions of the gamma5-mass Dirac Hamiltonian",
    long_about = "Spectra, metric operators, mass bounds and phase regions of the \
Dirac Hamiltonian H = alpha.p + beta(m1 + m2*gamma5).\n\
Natural units (c = hbar = 1) throughout; all masses, momenta and energies \
share one arbitrary unit.\n\
The env var PTDIRAC_TOL overrides the default reality tolerance 1e-10."
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, default_value = "csv", value_parser = ["csv", "json"])]
    format: String,

    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<String>,

    /// Reality/boundary tolerance (also settable via PTDIRAC_TOL)
    #[arg(long, global = true)]
    tol: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Eigenvalues, reality and diagonalizability over a momentum grid
    Spectrum(SpectrumArgs),
    /// Metric exponent and intertwining/counterpart residuals
    Metric(MetricArgs),
    /// Phase-region label and derived masses for one (m1, m2) point
    Classify(ClassifyArgs),
    /// Emit the data behind the three figures (1: curves vs alpha,
    /// 2: branch curves vs nu, 3: region mask)
    Fig(FigArgs),
    /// Batch sweep over an (m1, m2) grid or along a parametrization branch
    Sweep(SweepArgs),
}

#[derive(Args)]
struct SpectrumArgs {
    #[arg(long)]
    m1: f64,
    #[arg(long)]
    m2: f64,
    /// Single momentum value (ignored when a range is given)
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long)]
    p_min: Option<f64>,
    #[arg(long)]
    p_max: Option<f64>,
    /// Grid size for the momentum range
    #[arg(long, default_value_t = 2)]
    p_steps: usize,
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

#[derive(Args)]
struct MetricArgs {
    #[arg(long)]
    m1: f64,
    #[arg(long)]
    m2: f64,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value_t = 2)]
    dim: usize,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    m1: f64,
    #[arg(long)]
    m2: f64,
}

#[derive(Args)]
struct FigArgs {
    /// Figure id: 1, 2 or 3
    id: u32,
    /// Upper end of the alpha grid (figure 1)
    #[arg(long, default_value_t = 3.0)]
    alpha_max: f64,
    /// Grid size (figures 1 and 2)
    #[arg(long, default_value_t = 301)]
    steps: usize,
    /// Raster size per axis (figure 3)
    #[arg(long, default_value_t = 401)]
    cells: usize,
}

#[derive(Args)]
struct SweepArgs {
    /// "m1m2" sweeps a mass grid, "branch" walks a parametrization branch
    #[arg(long, default_value = "m1m2", value_parser = ["m1m2", "branch"])]
    mode: String,
    #[arg(long, default_value_t = 1.0)]
    m1_min: f64,
    #[arg(long, default_value_t = 1.0)]
    m1_max: f64,
    #[arg(long, default_value_t = 1)]
    m1_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    m2_min: f64,
    #[arg(long, default_value_t = 2.0)]
    m2_max: f64,
    #[arg(long, default_value_t = 201)]
    m2_steps: usize,
    #[arg(long, default_value_t = 0.0)]
    p: f64,
    #[arg(long, default_value_t = 2)]
    dim: usize,
    /// Branch mode: ordinary or exotic
    #[arg(long, default_value = "ordinary")]
    branch: Branch,
    #[arg(long, default_value_t = 0.0)]
    nu_min: f64,
    #[arg(long, default_value_t = 1.0)]
    nu_max: f64,
    #[arg(long, default_value_t = 101)]
    nu_steps: usize,
    /// Branch mode: the maximal mass scale
    #[arg(long, default_value_t = 10.0)]
    m_max: f64,
}

/// One output cell; the variants pin the formatting so runs are
/// byte-identical.
#[derive(Clone)]
enum Field {
    Num(f64),
    Sci(f64),
    Int(i64),
    Bool(bool),
    Str(String),
}

impl Field {
    fn csv(&self) -> String {
        match self {
            // `+ 0.0` folds negative zero into "0.000000000".
            Field::Num(x) => format!("{:.9}", x + 0.0),
            Field::Sci(x) => format!("{:.5e}", x + 0.0),
            Field::Int(i) => i.to_string(),
            Field::Bool(b) => b.to_string(),
            Field::Str(s) => s.clone(),
        }
    }

    fn json(&self) -> serde_json::Value {
        match self {
            Field::Num(x) | Field::Sci(x) => serde_json::json!(x + 0.0),
            Field::Int(i) => serde_json::json!(i),
            Field::Bool(b) => serde_json::json!(b),
            Field::Str(s) => serde_json::json!(s),
        }
    }
}

type Row = Vec<(&'static str, Field)>;

fn render(rows: &[Row], format: &str) -> String {
    if rows.is_empty() {
        return String::new();
    }
    if format == "json" {
        let array: Vec<serde_json::Value> = rows
            .iter()
            .map(|row| {
                let mut map = serde_json::Map::new();
                for (name, field) in row {
                    map.insert((*name).to_string(), field.json());
                }
                serde_json::Value::Object(map)
            })
            .collect();
        let mut s = serde_json::to_string_pretty(&array).expect("serialize");
        s.push('\n');
        s
    } else {
        let mut s = String::new();
        let header: Vec<&str> = rows[0].iter().map(|(name, _)| *name).collect();
        s.push_str(&header.join(","));
        s.push('\n');
        for row in rows {
            let cells: Vec<String> = row.iter().map(|(_, f)| f.csv()).collect();
            s.push_str(&cells.join(","));
            s.push('\n');
        }
        s
    }
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(USAGE_EXIT)
}

fn domain_error(err: &PtDiracError) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(DOMAIN_EXIT)
}

/// Tolerance plus whether it came from the user (flag or env var) rather
/// than the built-in default.
fn effective_tol(cli: &Cli) -> Result<(f64, bool), String> {
    if let Some(t) = cli.tol {
        if !(t.is_finite() && t > 0.0) {
            return Err(format!("--tol must be positive and finite, got {t}"));
        }
        return Ok((t, true));
    }
    if let Ok(raw) = std::env::var("PTDIRAC_TOL") {
        let t: f64 = raw
            .parse()
            .map_err(|_| format!("PTDIRAC_TOL is not a number: '{raw}'"))?;
        if !(t.is_finite() && t > 0.0) {
            return Err(format!("PTDIRAC_TOL must be positive and finite, got {t}"));
        }
        return Ok((t, true));
    }
    Ok((ptdirac::DEFAULT_TOL, false))
}

/// Boundary band for the classify subcommand: wide enough by default to
/// absorb decimal rounding of flag values like 1.4142136.
const CLASSIFY_DEFAULT_BAND: f64 = 1e-6;

fn check_dim(dim: usize) -> Result<(), String> {
    if dim != 2 && dim != 4 {
        return Err(format!("--dim must be 2 or 4, got {dim}"));
    }
    Ok(())
}

fn run_spectrum(args: &SpectrumArgs, tol: f64) -> Result<Vec<Row>, ExitCode> {
    check_dim(args.dim).map_err(|m| usage_error(&m))?;
    let grid = match (args.p_min, args.p_max) {
        (Some(lo), Some(hi)) => {
            if args.p_steps < 2 || lo >= hi {
                return Err(usage_error("momentum range needs p-min < p-max and p-steps >= 2"));
            }
            linear_grid(lo, hi, args.p_steps)
        }
        (None, None) => vec![args.p],
        _ => return Err(usage_error("give both --p-min and --p-max, or neither")),
    };
    let basis = build_basis(args.dim).map_err(|e| domain_error(&e))?;
    let mut rows = Vec::new();
    for &p in &grid {
        let mom = Momentum::along_axis(args.dim, p).map_err(|e| domain_error(&e))?;
        let h = build_hamiltonian(&basis, &mom, args.m1, args.m2).map_err(|e| domain_error(&e))?;
        let s = spectrum(&h, tol).map_err(|e| domain_error(&e))?;
        for (idx, lambda) in s.eigenvalues.iter().enumerate() {
            rows.push(vec![
                ("p", Field::Num(p)),
                ("index", Field::Int(idx as i64)),
                ("re", Field::Num(lambda.re)),
                ("im", Field::Num(lambda.im)),
                ("is_real", Field::Bool(s.is_real)),
                ("is_diagonalizable", Field::Bool(s.is_diagonalizable)),
            ]);
        }
    }
    Ok(rows)
}

fn run_metric(args: &MetricArgs, _tol: f64) -> Result<Vec<Row>, ExitCode> {
    check_dim(args.dim).map_err(|m| usage_error(&m))?;
    let basis = build_basis(args.dim).map_err(|e| domain_error(&e))?;
    let metric = metric_operator(&basis, args.m1, args.m2).map_err(|e| domain_error(&e))?;
    let mom = Momentum::along_axis(args.dim, args.p).map_err(|e| domain_error(&e))?;
    let h = build_hamiltonian(&basis, &mom, args.m1, args.m2).map_err(|e| domain_error(&e))?;
    let h_adj =
        build_adjoint_hamiltonian(&basis, &mom, args.m1, args.m2).map_err(|e| domain_error(&e))?;
    let residual =
        verify_intertwining(h.matrix(), &h_adj, metric.eta()).map_err(|e| domain_error(&e))?;
    let counterpart =
        hermitian_counterpart(&basis, &mom, args.m1, args.m2).map_err(|e| domain_error(&e))?;
    Ok(vec![vec![
        ("alpha_exponent", Field::Num(metric.alpha_exponent())),
        ("intertwining_residual", Field::Sci(residual)),
        (
            "counterpart_hermiticity_residual",
            Field::Sci(counterpart.hermiticity_residual()),
        ),
    ]])
}

fn run_classify(args: &ClassifyArgs, tol: f64, tol_from_user: bool) -> Result<Vec<Row>, ExitCode> {
    if args.m1 <= 0.0 {
        return Err(usage_error(&format!("--m1 must be positive, got {}", args.m1)));
    }
    let band = if tol_from_user { tol } else { CLASSIFY_DEFAULT_BAND };
    let label = classify(args.m1, args.m2, band).map_err(|e| domain_error(&e))?;
    let params = MassParams::new(args.m1, args.m2).map_err(|e| domain_error(&e))?;
    let mass_field = match params.mass() {
        Some(m) => Field::Num(m),
        None => Field::Str("imaginary".to_string()),
    };
    let bound_field = match mass_bound(args.m1, args.m2) {
        Ok(b) => Field::Num(b),
        Err(PtDiracError::UnboundedMass) => Field::Str("inf".to_string()),
        Err(e) => return Err(domain_error(&e)),
    };
    let alpha_field = match params.alpha() {
        Some(a) => Field::Num(a),
        None => Field::Str("n/a".to_string()),
    };
    let theta_field = match params.theta() {
        Some(t) => Field::Num(t),
        None => Field::Str("n/a".to_string()),
    };
    Ok(vec![vec![
        ("m1", Field::Num(args.m1)),
        ("m2", Field::Num(args.m2)),
        ("m", mass_field),
        ("m_max", bound_field),
        ("alpha", alpha_field),
        ("theta", theta_field),
        ("region", Field::Str(label.name().to_string())),
    ]])
}

fn run_fig(args: &FigArgs) -> Result<Vec<Row>, ExitCode> {
    match args.id {
        1 => {
            if args.steps < 2 || args.alpha_max <= 0.0 {
                return Err(usage_error("fig 1 needs --steps >= 2 and --alpha-max > 0"));
            }
            let grid = linear_grid(0.0, args.alpha_max, args.steps);
            let rows = fig1_curves(&grid).map_err(|e| domain_error(&e))?;
            Ok(rows
                .iter()
                .map(|r| {
                    vec![
                        ("alpha", Field::Num(r.alpha)),
                        ("nu", Field::Num(r.nu)),
                        ("nu1", Field::Num(r.nu1)),
                        ("nu2", Field::Num(r.nu2)),
                    ]
                })
                .collect())
        }
        2 => {
            if args.steps < 2 {
                return Err(usage_error("fig 2 needs --steps >= 2"));
            }
            let grid = linear_grid(0.0, 1.0, args.steps);
            let rows = fig2_curves(&grid).map_err(|e| domain_error(&e))?;
            Ok(rows
                .iter()
                .map(|r| {
                    vec![
                        ("nu", Field::Num(r.nu)),
                        ("nu1", Field::Num(r.nu1)),
                        ("nu2", Field::Num(r.nu2)),
                        ("nu3", Field::Num(r.nu3)),
                        ("nu4", Field::Num(r.nu4)),
                    ]
                })
                .collect())
        }
        3 => {
            if args.cells < 2 {
                return Err(usage_error("fig 3 needs --cells >= 2"));
            }
            let n = args.cells;
            let nu1: Vec<f64> = (0..n).map(|i| 2.0 * (i + 1) as f64 / n as f64).collect();
            let nu2: Vec<f64> = (0..n)
                .map(|j| -2.0 + 4.0 * j as f64 / (n - 1) as f64)
                .collect();
            let mask = fig3_mask(&nu1, &nu2).map_err(|e| domain_error(&e))?;
            let mut rows = Vec::with_capacity(n * n);
            for (j, row) in mask.iter().enumerate() {
                for (i, label) in row.iter().enumerate() {
                    rows.push(vec![
                        ("nu1", Field::Num(nu1[i])),
                        ("nu2", Field::Num(nu2[j])),
                        ("region", Field::Str(label.name().to_string())),
                    ]);
                }
            }
            Ok(rows)
        }
        other => Err(usage_error(&format!("unknown figure id {other}; use 1, 2 or 3"))),
    }
}

fn run_sweep(args: &SweepArgs, tol: f64) -> Result<Vec<Row>, ExitCode> {
    check_dim(args.dim).map_err(|m| usage_error(&m))?;
    match args.mode.as_str() {
        "m1m2" => {
            if args.m1_steps == 0 || args.m2_steps == 0 {
                return Err(usage_error("sweep needs at least one grid point per axis"));
            }
            if args.m1_steps > 1 && args.m1_min >= args.m1_max {
                return Err(usage_error("m1 range needs m1-min < m1-max"));
            }
            if args.m2_steps > 1 && args.m2_min >= args.m2_max {
                return Err(usage_error("m2 range needs m2-min < m2-max"));
            }
            let m1_grid = if args.m1_steps == 1 {
                vec![args.m1_min]
            } else {
                linear_grid(args.m1_min, args.m1_max, args.m1_steps)
            };
            let m2_grid = if args.m2_steps == 1 {
                vec![args.m2_min]
            } else {
                linear_grid(args.m2_min, args.m2_max, args.m2_steps)
            };
            let basis = build_basis(args.dim).map_err(|e| domain_error(&e))?;
            let mom = Momentum::along_axis(args.dim, args.p).map_err(|e| domain_error(&e))?;
            let mut rows = Vec::new();
            for &m1 in &m1_grid {
                for &m2 in &m2_grid {
                    let h =
                        build_hamiltonian(&basis, &mom, m1, m2).map_err(|e| domain_error(&e))?;
                    let s = spectrum(&h, tol).map_err(|e| domain_error(&e))?;
                    let lo = s.eigenvalues[0];
                    let hi = s.eigenvalues[s.eigenvalues.len() - 1];
                    let label = classify(m1, m2, tol).map_err(|e| domain_error(&e))?;
                    let bound_field = match mass_bound(m1, m2) {
                        Ok(b) => Field::Num(b),
                        Err(PtDiracError::UnboundedMass) => Field::Str("inf".to_string()),
                        Err(e) => return Err(domain_error(&e)),
                    };
                    let metric_field = match metric_operator(&basis, m1, m2) {
                        Ok(metric) => {
                            let h_adj = build_adjoint_hamiltonian(&basis, &mom, m1, m2)
                                .map_err(|e| domain_error(&e))?;
                            let res = verify_intertwining(h.matrix(), &h_adj, metric.eta())
                                .map_err(|e| domain_error(&e))?;
                            Field::Sci(res)
                        }
                        Err(_) => Field::Str("n/a".to_string()),
                    };
                    rows.push(vec![
                        ("m1", Field::Num(m1)),
                        ("m2", Field::Num(m2)),
                        ("p", Field::Num(args.p)),
                        ("re_minus", Field::Num(lo.re)),
                        ("im_minus", Field::Num(lo.im)),
                        ("re_plus", Field::Num(hi.re)),
                        ("im_plus", Field::Num(hi.im)),
                        ("is_real", Field::Bool(s.is_real)),
                        ("is_diagonalizable", Field::Bool(s.is_diagonalizable)),
                        ("m_max", bound_field),
                        ("region", Field::Str(label.name().to_string())),
                        ("intertwining_residual", metric_field),
                    ]);
                }
            }
            Ok(rows)
        }
        "branch" => {
            if args.nu_steps < 2 || args.nu_min >= args.nu_max {
                return Err(usage_error("branch sweep needs nu-min < nu-max and nu-steps >= 2"));
            }
            if args.m_max <= 0.0 {
                return Err(usage_error("--m-max must be positive"));
            }
            let grid = linear_grid(args.nu_min, args.nu_max, args.nu_steps);
            let mut rows = Vec::new();
            for &nu in &grid {
                let bp = ptdirac::branch_point(nu, args.branch).map_err(|e| domain_error(&e))?;
                let m1 = args.m_max * bp.nu1;
                let m2 = args.m_max * bp.nu2;
                let m = args.m_max * nu;
                let region = if m1 > 0.0 {
                    classify(m1, m2, tol)
                        .map(|l| l.name().to_string())
                        .unwrap_or_else(|_| "n/a".to_string())
                } else {
                    "n/a".to_string()
                };
                rows.push(vec![
                    ("nu", Field::Num(nu)),
                    ("branch", Field::Str(args.branch.name().to_string())),
                    ("m1", Field::Num(m1)),
                    ("m2", Field::Num(m2)),
                    ("m", Field::Num(m)),
                    ("region", Field::Str(region)),
                ]);
            }
            Ok(rows)
        }
        other => Err(usage_error(&format!("unknown sweep mode '{other}'"))),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            eprint!("{err}");
            return ExitCode::from(USAGE_EXIT);
        }
    };
    let (tol, tol_from_user) = match effective_tol(&cli) {
        Ok(t) => t,
        Err(msg) => return usage_error(&msg),
    };
    let rows = match &cli.command {
        Command::Spectrum(args) => run_spectrum(args, tol),
        Command::Metric(args) => run_metric(args, tol),
        Command::Classify(args) => run_classify(args, tol, tol_from_user),
        Command::Fig(args) => run_fig(args),
        Command::Sweep(args) => run_sweep(args, tol),
    };
    let rows = match rows {
        Ok(rows) => rows,
        Err(code) => return code,
    };
    let text = render(&rows, &cli.format);
    match &cli.out {
        Some(path) => {
            let mut file = match File::create(path) {
                Ok(f) => f,
                Err(e) => {
                    eprintln!("error: cannot write {path}: {e}");
                    return ExitCode::from(DOMAIN_EXIT);
                }
            };
            if let Err(e) = file.write_all(text.as_bytes()) {
                eprintln!("error: cannot write {path}: {e}");
                return ExitCode::from(DOMAIN_EXIT);
            }
        }
        None => {
            print!("{text}");
        }
    }
    ExitCode::SUCCESS
}
