//! Identification of `(z0, K, β, f_d, f_s)` from displacement and
//! temperature records by least squares over the quasistatic model.
//!
//! The optimizer works on `(z0, K, β, f_d, gap)` with `f_s = f_d + gap`,
//! so `f_d <= f_s` holds everywhere in its box. Points whose `f_s` falls
//! outside the `f_s` bounds score as infeasible.

use std::f64::consts::PI;
use std::io::BufRead;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::forcing::{ForcingModel, TemperatureSource};
use crate::model::FrictionParams;
use crate::optimize::{differential_evolution, DeConfig};
use crate::quasistatic::{quasistatic_steps, sample_at, QuasistaticConfig};
use crate::series::{check_increasing, read_table, TemperatureSeries};
use crate::stochastic::ou_path;

/// Shear stiffness of the reference bearing, N/m.
pub const DEFAULT_K_BP: f64 = 2.0e6;

pub const PARAM_NAMES: [&str; 5] = ["z0", "K", "beta", "f_d", "f_s"];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Params {
    pub z0: f64,
    pub k: f64,
    pub beta: f64,
    pub f_d: f64,
    pub f_s: f64,
}

impl Params {
    pub fn to_array(self) -> [f64; 5] {
        [self.z0, self.k, self.beta, self.f_d, self.f_s]
    }

    pub fn from_array(a: [f64; 5]) -> Self {
        Self {
            z0: a[0],
            k: a[1],
            beta: a[2],
            f_d: a[3],
            f_s: a[4],
        }
    }

    /// Optimizer coordinates `(z0, K, β, f_d, f_s - f_d)`.
    pub fn to_internal(self) -> [f64; 5] {
        [self.z0, self.k, self.beta, self.f_d, self.f_s - self.f_d]
    }

    pub fn from_internal(x: &[f64]) -> Self {
        Self {
            z0: x[0],
            k: x[1],
            beta: x[2],
            f_d: x[3],
            f_s: x[3] + x[4],
        }
    }
}

/// Which force enters the bearing shear correction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShearForce {
    /// The friction force of each sample.
    #[default]
    Friction,
    /// No correction: `z = x`.
    Zero,
}

/// Per-parameter `[lo, hi]` in the order of [`PARAM_NAMES`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bounds(pub [(f64, f64); 5]);

impl Bounds {
    pub fn validate(&self) -> Result<()> {
        for (name, &(lo, hi)) in PARAM_NAMES.iter().zip(&self.0) {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::Setup(format!("bounds for {name} must satisfy lo < hi, got [{lo}, {hi}]")));
            }
        }
        let [_, (k_lo, _), _, (fd_lo, _), (_, fs_hi)] = self.0;
        if k_lo <= 0.0 {
            return Err(Error::Setup("K bounds must be positive".into()));
        }
        if fd_lo < 0.0 {
            return Err(Error::Setup("f_d bounds must be nonnegative".into()));
        }
        if fs_hi < fd_lo {
            return Err(Error::Setup("no f_d <= f_s pair fits the bounds".into()));
        }
        Ok(())
    }

    pub fn contains(&self, p: &Params) -> bool {
        p.to_array()
            .iter()
            .zip(&self.0)
            .all(|(v, &(lo, hi))| (lo..=hi).contains(v))
    }

    fn internal(&self) -> Vec<(f64, f64)> {
        let b = self.0;
        vec![b[0], b[1], b[2], b[3], (0.0, b[4].1 - b[3].0)]
    }
}

#[derive(Debug, Clone)]
pub struct CalibrationProblem {
    pub temps: TemperatureSeries,
    /// Observed displacement at each time of `temps`.
    pub displs: Vec<f64>,
    pub bounds: Bounds,
    pub k_bp: f64,
    pub shear: ShearForce,
    pub budget: usize,
    pub seed: u64,
}

impl CalibrationProblem {
    pub fn new(temps: TemperatureSeries, displs: Vec<f64>, bounds: Bounds) -> Result<Self> {
        let prob = Self {
            temps,
            displs,
            bounds,
            k_bp: DEFAULT_K_BP,
            shear: ShearForce::Friction,
            budget: 20_000,
            seed: 0,
        };
        prob.validate()?;
        Ok(prob)
    }

    pub fn validate(&self) -> Result<()> {
        if self.temps.len() < 2 {
            return Err(Error::Setup("need at least two samples".into()));
        }
        if self.displs.len() != self.temps.len() {
            return Err(Error::Setup(format!(
                "displacement has {} samples, temperature {}",
                self.displs.len(),
                self.temps.len()
            )));
        }
        if self.displs.iter().any(|z| !z.is_finite()) {
            return Err(Error::Setup("non-finite displacement".into()));
        }
        if !(self.k_bp.is_finite() && self.k_bp > 0.0) {
            return Err(Error::Setup(format!("K_BP must be positive, got {}", self.k_bp)));
        }
        self.bounds.validate()
    }

    fn weights(&self) -> Vec<f64> {
        let t = self.temps.times();
        let n = t.len();
        (0..n)
            .map(|i| if i + 1 < n { t[i + 1] - t[i] } else { t[n - 1] - t[n - 2] })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CalibrationResult {
    pub params: Params,
    pub residual: f64,
    pub evaluations: usize,
    /// Best residual after each optimizer generation.
    pub history: Vec<f64>,
    pub seed: u64,
}

/// `z = x + F / K_BP`.
pub fn corrected_displacement(x: f64, friction_force: f64, k_bp: f64) -> f64 {
    x + friction_force / k_bp
}

/// Model displacement `z(t_i)` (shear-corrected, without `z0`) for `p`.
///
/// The run uses `m = 1` and starts at `x(0) = βT(0)`, where the spring is
/// relaxed.
pub fn model_displacement(p: &Params, prob: &CalibrationProblem) -> Result<Vec<f64>> {
    let fp = FrictionParams::new(1.0, p.f_d, p.f_s)?;
    // The solver clock starts at zero; records may use any epoch.
    let t0 = prob.temps.start();
    let times: Vec<f64> = prob.temps.times().iter().map(|t| t - t0).collect();
    let series = TemperatureSeries::new(times.clone(), prob.temps.temps().to_vec())?;
    let end = series.end();
    let f = ForcingModel::temperature_spring(p.k, p.beta, TemperatureSource::Sampled(series))?;
    let x0 = p.beta * prob.temps.temps()[0];
    let cfg = QuasistaticConfig::new(end);
    let steps = quasistatic_steps(x0, &f, &fp, &cfg)?;
    let samples = sample_at(x0, &f, &fp, &steps, &times)?;
    Ok(samples
        .into_iter()
        .map(|(x, force)| match prob.shear {
            ShearForce::Friction => corrected_displacement(x, force, prob.k_bp),
            ShearForce::Zero => x,
        })
        .collect())
}

/// Rectangle-rule `Σ (z0 + z(t_i) - z_xp(t_i))² Δt_i`; infinite when the
/// parameters are infeasible or the run fails.
pub fn objective(p: &Params, prob: &CalibrationProblem) -> f64 {
    if !(p.f_d >= 0.0 && p.f_d <= p.f_s && p.k > 0.0) {
        return f64::INFINITY;
    }
    residual(p, prob, &prob.weights())
}

fn residual(p: &Params, prob: &CalibrationProblem, weights: &[f64]) -> f64 {
    match model_displacement(p, prob) {
        Ok(z) => z
            .iter()
            .zip(&prob.displs)
            .zip(weights)
            .map(|((zm, zx), w)| (p.z0 + zm - zx).powi(2) * w)
            .sum(),
        Err(_) => f64::INFINITY,
    }
}

/// One seeded differential-evolution fit.
pub fn calibrate(prob: &CalibrationProblem) -> Result<CalibrationResult> {
    prob.validate()?;
    let bounds = prob.bounds;
    let fs_range = bounds.0[4];
    let weights = prob.weights();
    let f = |x: &[f64]| {
        let p = Params::from_internal(x);
        if !(fs_range.0..=fs_range.1).contains(&p.f_s) {
            return f64::INFINITY;
        }
        residual(&p, prob, &weights)
    };
    let de = differential_evolution(f, &bounds.internal(), &DeConfig::new(prob.budget, prob.seed))?;
    Ok(CalibrationResult {
        params: Params::from_internal(&de.best),
        residual: de.value,
        evaluations: de.evaluations,
        history: de.history,
        seed: prob.seed,
    })
}

/// `restarts` fits seeded `seed, seed + 1, ...`.
pub fn calibrate_restarts(prob: &CalibrationProblem, restarts: usize) -> Result<Vec<CalibrationResult>> {
    (0..restarts as u64)
        .map(|r| {
            let mut p = prob.clone();
            p.seed = prob.seed.wrapping_add(r);
            calibrate(&p)
        })
        .collect()
}

/// Reads a three-column `(t, T, z)` record.
pub fn load_calibration_data<R: BufRead>(source: R) -> Result<(TemperatureSeries, Vec<f64>)> {
    let rows = read_table(source, 3)?;
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no data rows".into(),
        });
    }
    check_increasing(&rows)?;
    let mut times = Vec::with_capacity(rows.len());
    let mut temps = Vec::with_capacity(rows.len());
    let mut displs = Vec::with_capacity(rows.len());
    for (_, r) in rows {
        times.push(r[0]);
        temps.push(r[1]);
        displs.push(r[2]);
    }
    Ok((TemperatureSeries::new(times, temps)?, displs))
}

/// Reads bounds as lines `name lo hi` for every name in [`PARAM_NAMES`].
pub fn load_bounds<R: BufRead>(source: R) -> Result<Bounds> {
    let mut found: [Option<(f64, f64)>; 5] = [None; 5];
    for (idx, line) in source.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let text = line.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        let fields: Vec<&str> = text
            .split(|c: char| c == ',' || c == '=' || c.is_whitespace())
            .filter(|f| !f.is_empty())
            .collect();
        let parse_err = |message: String| Error::Parse { line: lineno, message };
        if fields.len() != 3 {
            return Err(parse_err(format!("expected `name lo hi`, got {text:?}")));
        }
        let slot = PARAM_NAMES
            .iter()
            .position(|n| n.eq_ignore_ascii_case(fields[0]))
            .ok_or_else(|| parse_err(format!("unknown parameter {:?}", fields[0])))?;
        let num = |s: &str| s.parse::<f64>().map_err(|e| parse_err(format!("{s:?}: {e}")));
        found[slot] = Some((num(fields[1])?, num(fields[2])?));
    }
    let mut out = [(0.0, 0.0); 5];
    for (i, v) in found.iter().enumerate() {
        out[i] = v.ok_or_else(|| Error::Parse {
            line: 0,
            message: format!("missing bounds for {}", PARAM_NAMES[i]),
        })?;
    }
    let b = Bounds(out);
    b.validate()?;
    Ok(b)
}

/// Synthetic monitoring record: 10-minute samples over `days`, with a
/// 30-day swing of 40 °C, a daily swing of 8 °C and OU noise of one-hour
/// correlation time and scale 2 °C around 10 °C. Displacements come from
/// the quasistatic model at `truth` with multiplicative Gaussian noise of
/// relative size `noise`.
pub fn synthetic_record(
    truth: &Params,
    days: f64,
    noise: f64,
    k_bp: f64,
    seed: u64,
) -> Result<(TemperatureSeries, Vec<f64>)> {
    const DAY: f64 = 86_400.0;
    const STEP: f64 = 600.0;
    let n = (days * DAY / STEP).round() as usize + 1;
    let ou = ou_path(n, STEP / 3600.0, seed)?;
    let times: Vec<f64> = (0..n).map(|i| i as f64 * STEP).collect();
    let temps: Vec<f64> = times
        .iter()
        .zip(ou.values())
        .map(|(&t, &v)| {
            10.0 + 40.0 * (2.0 * PI * t / (30.0 * DAY)).sin() + 8.0 * (2.0 * PI * t / DAY).sin() + 2.0 * v
        })
        .collect();
    let temps = TemperatureSeries::new(times, temps)?;
    let n = temps.len();
    let mut prob = CalibrationProblem {
        temps,
        displs: vec![0.0; n],
        bounds: Bounds([(-1.0, 1.0), (1.0, 2.0), (0.0, 1.0), (0.0, 1.0), (0.0, 2.0)]),
        k_bp,
        shear: ShearForce::Friction,
        budget: 0,
        seed,
    };
    let z = model_displacement(truth, &prob)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_d15c);
    prob.displs = z
        .iter()
        .map(|zm| {
            let xi: f64 = rng.sample(StandardNormal);
            (truth.z0 + zm) * (1.0 + noise * xi)
        })
        .collect();
    Ok((prob.temps, prob.displs))
}
