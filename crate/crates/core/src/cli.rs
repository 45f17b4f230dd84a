//! The `stickslip` command line: `simulate`, `calibrate` and `ou-gen`.
//!
//! Every subcommand accepts `--config FILE` with `key = value` lines named
//! like the long flags; flags given on the command line win. Exit status is
//! 0 on success, 2 for configuration errors, 3 for data errors and 4 for
//! solver diagnostics such as a sub-phase overflow.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::calibration::{
    calibrate_restarts, load_bounds, load_calibration_data, CalibrationProblem, ShearForce, DEFAULT_K_BP,
};
use crate::error::{Error, Result};
use crate::euler::{simulate_euler, EulerConfig};
use crate::events::{simulate_events, EngineConfig};
use crate::forcing::{Analytic, ForcingModel, TemperatureSource};
use crate::io;
use crate::model::FrictionParams;
use crate::quasistatic::{simulate_quasistatic, QuasistaticConfig};
use crate::series::load_temperature_series;
use crate::stochastic::{ou_path, perturbed_temperature};
use crate::trajectory::Trajectory;

pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_DATA: i32 = 3;
pub const EXIT_SOLVER: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "stickslip",
    version,
    about = "Stick/slip friction oscillators: simulation and calibration",
    args_override_self = true
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Integrate one trajectory and write its sample and event files.
    Simulate(SimulateArgs),
    /// Fit (z0, K, beta, f_d, f_s) to a displacement-temperature record.
    Calibrate(CalibrateArgs),
    /// Write a seeded Ornstein-Uhlenbeck path as two columns (t, v).
    OuGen(OuGenArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Euler,
    Events,
    Quasistatic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Forcing {
    /// beta cos(omega t) - 2 alpha v - x
    Shaw,
    /// K (beta T(t) - x) with T = cos(omega t) + rho v(t), or read from --temperature
    Thermal,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ShearArg {
    Friction,
    Zero,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output path prefix.
    #[arg(long, default_value = "stickslip")]
    pub out: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Key-value file supplying defaults for any long flag.
    #[arg(long)]
    pub config: Option<PathBuf>,
    /// Write a column header line.
    #[arg(long)]
    pub header: bool,
}

#[derive(Debug, Clone, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value = "events")]
    pub solver: Solver,
    #[arg(long, value_enum, default_value = "shaw")]
    pub forcing: Forcing,
    #[arg(long, default_value_t = 1.0)]
    pub m: f64,
    #[arg(long, default_value_t = 1.0)]
    pub fd: f64,
    #[arg(long, default_value_t = 1.2)]
    pub fs: f64,
    #[arg(long, default_value_t = 0.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 6.0)]
    pub beta: f64,
    /// Spring stiffness of the thermal model.
    #[arg(long = "K", alias = "k", default_value_t = 1.0)]
    pub k: f64,
    /// Forcing angular frequency.
    #[arg(long, default_value_t = 0.25)]
    pub omega: f64,
    #[arg(long, default_value_t = 6.0)]
    pub x0: f64,
    #[arg(long = "t-end", default_value_t = 27.0)]
    pub t_end: f64,
    /// Euler time step (required by the euler solver).
    #[arg(long)]
    pub h: Option<f64>,
    /// Keep one Euler sample out of this many.
    #[arg(long = "record-every", default_value_t = 1)]
    pub record_every: usize,
    /// Weight of the OU perturbation of the thermal forcing.
    #[arg(long, default_value_t = 0.0)]
    pub rho: f64,
    /// Time step of the OU path behind --rho.
    #[arg(long = "ou-dt", default_value_t = 0.01)]
    pub ou_dt: f64,
    /// Two-column (t, T) file used as the temperature of the thermal model.
    #[arg(long)]
    pub temperature: Option<PathBuf>,
    /// Event tolerance of the events and quasistatic solvers.
    #[arg(long = "root-tol", default_value_t = 1e-10)]
    pub root_tol: f64,
    /// Cap on sub-phases within one slip of the events solver.
    #[arg(long = "max-subphases", default_value_t = 10_000)]
    pub max_subphases: usize,
    /// Also write one file per stick and slip segment.
    #[arg(long = "split-phases")]
    pub split_phases: bool,
}

#[derive(Debug, Clone, Args)]
pub struct CalibrateArgs {
    #[command(flatten)]
    pub common: Common,
    /// Three-column (t, T, z) record.
    #[arg(long)]
    pub data: PathBuf,
    /// Lines `name lo hi` for z0, K, beta, f_d, f_s.
    #[arg(long)]
    pub bounds: PathBuf,
    #[arg(long, default_value_t = 20_000)]
    pub budget: usize,
    #[arg(long, default_value_t = 1)]
    pub restarts: usize,
    #[arg(long = "shear-force", value_enum, default_value = "friction")]
    pub shear_force: ShearArg,
    /// Shear stiffness of the bearing, N/m.
    #[arg(long, default_value_t = DEFAULT_K_BP)]
    pub kbp: f64,
}

#[derive(Debug, Clone, Args)]
pub struct OuGenArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 10_000)]
    pub n: usize,
    #[arg(long, default_value_t = 0.01)]
    pub dt: f64,
}

const SWITCHES: [&str; 2] = ["header", "split-phases"];

/// Expands `--config FILE` into flags placed before the explicit ones, so
/// that explicit flags override.
fn expand_config(args: Vec<OsString>) -> Result<Vec<OsString>> {
    let mut path = None;
    for (i, a) in args.iter().enumerate() {
        let s = a.to_string_lossy();
        if s == "--config" {
            path = args.get(i + 1).map(PathBuf::from);
        } else if let Some(p) = s.strip_prefix("--config=") {
            path = Some(PathBuf::from(p));
        }
    }
    let Some(path) = path else {
        return Ok(args);
    };
    let mut injected = Vec::new();
    for (key, value) in io::read_key_values(io::open(&path)?)? {
        let key = key.replace('_', "-");
        if key == "config" {
            continue;
        }
        if SWITCHES.contains(&key.as_str()) {
            if value.is_empty() || value == "true" {
                injected.push(OsString::from(format!("--{key}")));
            }
            continue;
        }
        injected.push(OsString::from(format!("--{key}={value}")));
    }
    let split = 2.min(args.len());
    let mut out: Vec<OsString> = args[..split].to_vec();
    out.extend(injected);
    out.extend_from_slice(&args[split..]);
    Ok(out)
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Argument(_) | Error::Setup(_) => EXIT_CONFIG,
        Error::Parse { .. } | Error::Domain { .. } | Error::Io(_) => EXIT_DATA,
        Error::MaxSubphases { .. } => EXIT_SOLVER,
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// process exit status. Diagnostics go to stderr.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    run_with(args, &mut std::io::stdout().lock())
}

/// [`run`] with the progress report sent to `out`.
pub fn run_with<I, T>(args: I, out: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString>,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let args = match expand_config(args) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("error: config file: {e}");
            return EXIT_CONFIG;
        }
    };
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_CONFIG } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let result = match &cli.command {
        Command::Simulate(a) => run_simulate(a, out),
        Command::Calibrate(a) => run_calibrate(a, out),
        Command::OuGen(a) => run_ou_gen(a, out),
    };
    match result {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

fn build_forcing(a: &SimulateArgs) -> Result<ForcingModel> {
    match a.forcing {
        Forcing::Shaw => Ok(ForcingModel::harmonic_shaw(a.beta, a.omega, a.alpha)),
        Forcing::Thermal => {
            let temperature = if let Some(path) = &a.temperature {
                TemperatureSource::Sampled(load_temperature_series(io::open(path)?)?)
            } else if a.rho == 0.0 {
                TemperatureSource::Analytic(Analytic::cosine(1.0, a.omega))
            } else {
                let n = (a.t_end / a.ou_dt).ceil() as usize + 2;
                perturbed_temperature(a.omega, a.rho, ou_path(n, a.ou_dt, a.common.seed)?)
            };
            ForcingModel::temperature_spring(a.k, a.beta, temperature)
        }
    }
}

/// Runs the configured solver.
pub fn simulate(a: &SimulateArgs) -> Result<Trajectory> {
    let p = FrictionParams::new(a.m, a.fd, a.fs)?;
    let f = build_forcing(a)?;
    match a.solver {
        Solver::Euler => {
            let h = a.h.ok_or_else(|| Error::arg("the euler solver needs --h"))?;
            let cfg = EulerConfig::over(a.t_end, h)?.record_every(a.record_every);
            simulate_euler(a.x0, &f, &p, &cfg)
        }
        Solver::Events => {
            let mut cfg = EngineConfig::for_problem(&f, &p, a.t_end).with_root_tol(a.root_tol);
            cfg.max_subphases = a.max_subphases;
            simulate_events(a.x0, &f, &p, &cfg)
        }
        Solver::Quasistatic => {
            if a.forcing != Forcing::Thermal {
                return Err(Error::arg("the quasistatic solver needs --forcing thermal"));
            }
            let mut cfg = QuasistaticConfig::new(a.t_end);
            cfg.root_tol = a.root_tol;
            simulate_quasistatic(a.x0, &f, &p, &cfg)
        }
    }
}

fn run_simulate(a: &SimulateArgs, out: &mut dyn Write) -> Result<()> {
    let traj = match simulate(a) {
        Ok(t) => t,
        Err(Error::MaxSubphases { phase, limit, time, partial }) => {
            // Keep what was computed for diagnosis.
            io::write_trajectory_files(&a.common.out, &partial, a.split_phases, a.common.header)?;
            return Err(Error::MaxSubphases { phase, limit, time, partial });
        }
        Err(e) => return Err(e),
    };
    let written = io::write_trajectory_files(&a.common.out, &traj, a.split_phases, a.common.header)?;
    writeln!(out, "{} samples, {} events", traj.samples.len(), traj.events.len())?;
    for path in written {
        writeln!(out, "wrote {}", path.display())?;
    }
    Ok(())
}

fn write_file(path: &Path, f: impl FnOnce(&mut dyn Write) -> Result<()>) -> Result<()> {
    let mut w = std::io::BufWriter::new(std::fs::File::create(path)?);
    f(&mut w)?;
    w.flush()?;
    Ok(())
}

fn run_calibrate(a: &CalibrateArgs, out: &mut dyn Write) -> Result<()> {
    if a.restarts == 0 {
        return Err(Error::arg("--restarts must be at least 1"));
    }
    let (temps, displs) = load_calibration_data(io::open(&a.data)?)?;
    let bounds = load_bounds(io::open(&a.bounds)?)?;
    let mut prob = CalibrationProblem::new(temps, displs, bounds)?;
    prob.k_bp = a.kbp;
    prob.budget = a.budget;
    prob.seed = a.common.seed;
    prob.shear = match a.shear_force {
        ShearArg::Friction => ShearForce::Friction,
        ShearArg::Zero => ShearForce::Zero,
    };
    let results = calibrate_restarts(&prob, a.restarts)?;
    let best = results
        .iter()
        .min_by(|x, y| x.residual.total_cmp(&y.residual))
        .expect("at least one restart");

    let prefix = &a.common.out;
    write_file(&io::with_suffix(prefix, ".result.txt"), |w| io::write_result(w, best))?;
    write_file(&io::with_suffix(prefix, ".runs.txt"), |w| io::write_result_table(w, &results))?;
    for (i, r) in results.iter().enumerate() {
        let path = io::with_suffix(prefix, &format!("_r{}.history.txt", i + 1));
        write_file(&path, |w| io::write_history(w, &r.history))?;
    }
    io::write_result_table(out, &results)?;
    Ok(())
}

fn run_ou_gen(a: &OuGenArgs, out: &mut dyn Write) -> Result<()> {
    let path = ou_path(a.n, a.dt, a.common.seed)?;
    let file = io::with_suffix(&a.common.out, ".txt");
    write_file(&file, |w| io::write_ou(w, path.dt(), path.values(), a.common.header))?;
    writeln!(out, "wrote {}", file.display())?;
    Ok(())
}
