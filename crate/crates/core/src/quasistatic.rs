//! Slow-excitation approximation of the temperature-spring model.
//!
//! The temperature is frozen during each slip, so a slip starting from
//! `x_j` at `τ_{j+½}` is a half oscillation of the free spring: it lasts
//! `π/ω_n` and ends at `x_j + 2 ε_j (f_s - f_d) / K`. Only the departure
//! times depend on the temperature history, through the first exit of
//! `βT` from `[x_j - f_s/K, x_j + f_s/K]`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::events::{next_departure, EngineConfig};
use crate::forcing::{ForcingModel, TemperatureSource};
use crate::model::{FrictionParams, PhaseLabel, Sign, SystemState};
use crate::trajectory::{Event, EventKind, EventLog, Sample, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasistaticStep {
    /// Start of the stick phase.
    pub tau_j: f64,
    pub x_j: f64,
    /// Departure time `τ_{j+½}`.
    pub tau_half: f64,
    pub eps_j: Sign,
    /// End of the slip, `tau_half + π/ω_n`.
    pub tau_next: f64,
    pub x_next: f64,
}

impl QuasistaticStep {
    /// Displacement at `t` in `[tau_half, tau_next]`, on the half-cosine arc.
    pub fn arc(&self, t: f64) -> (f64, f64) {
        let w = PI / (self.tau_next - self.tau_half);
        let dx = self.x_next - self.x_j;
        let (s, c) = (w * (t - self.tau_half)).sin_cos();
        (self.x_j + 0.5 * dx * (1.0 - c), 0.5 * dx * w * s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum StepOutcome {
    Slip(QuasistaticStep),
    /// No departure before the horizon.
    StaticForever,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuasistaticConfig {
    pub t_end: f64,
    /// Bisection tolerance on departures for analytic temperatures.
    /// Sampled temperatures are inverted exactly per segment.
    pub root_tol: f64,
    /// Scan step for analytic departures; `None` picks one from the
    /// temperature source.
    pub scan_dt: Option<f64>,
    /// Output step for stick phases; `None` uses the series knots for
    /// sampled temperatures and the scan step otherwise.
    pub sample_dt: Option<f64>,
    /// Samples across each slip arc.
    pub arc_samples: usize,
}

impl QuasistaticConfig {
    pub fn new(t_end: f64) -> Self {
        Self {
            t_end,
            root_tol: 1e-10,
            scan_dt: None,
            sample_dt: None,
            arc_samples: 16,
        }
    }
}

struct Spring<'a> {
    k: f64,
    beta: f64,
    temp: &'a TemperatureSource,
    omega_n: f64,
}

fn spring<'a>(f: &'a ForcingModel, p: &FrictionParams) -> Result<Spring<'a>> {
    match f {
        ForcingModel::TemperatureSpring {
            stiffness,
            beta,
            temperature,
        } => Ok(Spring {
            k: *stiffness,
            beta: *beta,
            temp: temperature,
            omega_n: (stiffness / p.m).sqrt(),
        }),
        ForcingModel::HarmonicShaw { .. } => Err(Error::arg(
            "the quasistatic solver needs temperature-spring forcing",
        )),
    }
}

fn scan_dt(s: &Spring<'_>, cfg: &QuasistaticConfig) -> f64 {
    cfg.scan_dt.unwrap_or_else(|| {
        let natural = 2.0 * PI / s.omega_n;
        match s.temp {
            TemperatureSource::AnalyticPlusNoise { noise, .. } => (natural / 64.0).min(noise.dt()),
            _ => natural / 64.0,
        }
    })
}

/// First `t >= tau` with `|βT(t) - x| > f_s/K`, located to the crossing.
fn departure(
    s: &Spring<'_>,
    f: &ForcingModel,
    p: &FrictionParams,
    x: f64,
    tau: f64,
    cfg: &QuasistaticConfig,
) -> Result<Option<f64>> {
    if let TemperatureSource::Sampled(series) = s.temp {
        let half = p.f_s / s.k;
        let found = if s.beta == 0.0 {
            let b = s.k * (0.0 - x);
            (b.abs() > p.f_s).then_some(tau)
        } else {
            let (a, b) = ((x - half) / s.beta, (x + half) / s.beta);
            series.first_exit(tau, a.min(b), a.max(b))?
        };
        return Ok(found.filter(|&t| t <= cfg.t_end));
    }
    let engine = EngineConfig {
        quad_points: 64,
        root_tol: cfg.root_tol,
        bracket_dt: scan_dt(s, cfg),
        ode_dt: 1.0,
        max_subphases: 1,
        t_end: cfg.t_end,
    };
    next_departure(x, tau, f, p.f_s, &engine)
}

/// One stick phase from `(tau_j, x_j)` and the slip that ends it.
///
/// If the force already exceeds `f_s` at `tau_j` the slip starts at once.
pub fn quasistatic_step(
    x_j: f64,
    tau_j: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &QuasistaticConfig,
) -> Result<StepOutcome> {
    let s = spring(f, p)?;
    step_with(&s, f, p, x_j, tau_j, cfg)
}

fn step_with(
    s: &Spring<'_>,
    f: &ForcingModel,
    p: &FrictionParams,
    x_j: f64,
    tau_j: f64,
    cfg: &QuasistaticConfig,
) -> Result<StepOutcome> {
    let Some(tau_half) = departure(s, f, p, x_j, tau_j, cfg)? else {
        return Ok(StepOutcome::StaticForever);
    };
    let gap = s.beta * s.temp.eval(tau_half)? - x_j;
    let eps_j = Sign::of(gap).unwrap_or(Sign::Positive);
    Ok(StepOutcome::Slip(QuasistaticStep {
        tau_j,
        x_j,
        tau_half,
        eps_j,
        tau_next: tau_half + PI / s.omega_n,
        x_next: x_j + 2.0 * eps_j.value() * (p.f_s - p.f_d) / s.k,
    }))
}

/// All slips of a run from rest at `x0`, in order. The last slip may end
/// after the horizon.
pub fn quasistatic_steps(
    x0: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &QuasistaticConfig,
) -> Result<Vec<QuasistaticStep>> {
    let s = spring(f, p)?;
    let mut steps = Vec::new();
    let (mut tau, mut x) = (0.0, x0);
    while tau <= cfg.t_end {
        match step_with(&s, f, p, x, tau, cfg)? {
            StepOutcome::StaticForever => break,
            StepOutcome::Slip(step) => {
                tau = step.tau_next;
                x = step.x_next;
                steps.push(step);
            }
        }
    }
    Ok(steps)
}

/// Staircase run: constant displacement at each stick level, joined by
/// half-cosine arcs over the slip windows.
pub fn simulate_quasistatic(
    x0: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &QuasistaticConfig,
) -> Result<Trajectory> {
    let s = spring(f, p)?;
    let steps = quasistatic_steps(x0, f, p, cfg)?;
    let sample_dt = cfg.sample_dt.unwrap_or_else(|| scan_dt(&s, cfg));
    let knots = match (cfg.sample_dt, s.temp) {
        (None, TemperatureSource::Sampled(series)) => Some(series.times()),
        _ => None,
    };
    let mut traj = Trajectory::default();
    let mut log = EventLog::new();

    let push_stick = |traj: &mut Trajectory, from: f64, until: f64, x: f64| -> Result<()> {
        let mut times = vec![from];
        match knots {
            Some(k) => {
                let i = k.partition_point(|&t| t <= from);
                times.extend(k[i..].iter().copied().take_while(|&t| t < until));
            }
            None => {
                let mut i = (from / sample_dt).floor() as i64 + 1;
                loop {
                    let t = i as f64 * sample_dt;
                    if t >= until {
                        break;
                    }
                    times.push(t);
                    i += 1;
                }
            }
        }
        if until > from {
            times.push(until);
        }
        for t in times {
            let b = f.eval(x, 0.0, t)?;
            traj.samples.push(Sample {
                state: SystemState::at_rest(t, x),
                phase: PhaseLabel::Static,
                friction: b,
                forcing: b,
            });
        }
        Ok(())
    };

    let (mut tau, mut x) = (0.0, x0);
    let mut stick = 0usize;
    let mut sub = 0usize;
    if steps.first().is_none_or(|st| st.tau_half > 0.0) {
        log.push(Event {
            time: 0.0,
            kind: EventKind::EnterStatic(0),
            position: x0,
            epsilon: None,
        });
    }
    for step in &steps {
        // A departure right at the end of the previous slip continues it.
        let continues = stick > 0 && step.tau_half <= tau;
        if continues {
            log.pop();
            stick -= 1;
            sub += 1;
            log.push(Event {
                time: step.tau_half,
                kind: EventKind::SubphaseBoundary { phase: stick, index: sub },
                position: x,
                epsilon: Some(step.eps_j),
            });
        } else {
            if step.tau_half > tau {
                push_stick(&mut traj, tau, step.tau_half, x)?;
            }
            log.push(Event {
                time: step.tau_half,
                kind: EventKind::EnterDynamic(stick),
                position: x,
                epsilon: Some(step.eps_j),
            });
            sub = 0;
        }
        let end = step.tau_next.min(cfg.t_end);
        let n = cfg.arc_samples.max(2);
        for i in usize::from(continues)..=n {
            let t = step.tau_half + (step.tau_next - step.tau_half) * i as f64 / n as f64;
            let t = t.min(end);
            let (xa, va) = step.arc(t);
            let va = if i == n { 0.0 } else { va };
            traj.samples.push(Sample {
                state: SystemState { t, x: xa, v: va },
                phase: PhaseLabel::Dynamic,
                friction: step.eps_j.value() * p.f_d,
                forcing: f.eval(xa, va, t)?,
            });
            if t >= end {
                break;
            }
        }
        if step.tau_next > cfg.t_end {
            traj.events = log;
            return Ok(traj);
        }
        stick += 1;
        log.push(Event {
            time: step.tau_next,
            kind: EventKind::EnterStatic(stick),
            position: step.x_next,
            epsilon: None,
        });
        tau = step.tau_next;
        x = step.x_next;
    }
    push_stick(&mut traj, tau, cfg.t_end.max(tau), x)?;
    traj.events = log;
    Ok(traj)
}

/// Displacement and friction force of the run at each of `times`
/// (ascending), without building a full trajectory.
pub fn sample_at(
    x0: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    steps: &[QuasistaticStep],
    times: &[f64],
) -> Result<Vec<(f64, f64)>> {
    let mut out = Vec::with_capacity(times.len());
    let mut k = 0usize;
    for &t in times {
        while k < steps.len() && steps[k].tau_next <= t {
            k += 1;
        }
        let (x, friction) = match steps.get(k) {
            Some(st) if t >= st.tau_half => (st.arc(t).0, st.eps_j.value() * p.f_d),
            _ => {
                let x = if k == 0 { x0 } else { steps[k - 1].x_next };
                (x, f.eval(x, 0.0, t)?)
            }
        };
        out.push((x, friction));
    }
    Ok(out)
}

/// Temperatures for which a body resting at `x0` stays put under a force
/// bound `force`: `[x0/β - force/(βK), x0/β + force/(βK)]`.
pub fn admissible_window(x0: f64, force: f64, k: f64, beta: f64) -> Result<(f64, f64)> {
    if !(beta > 0.0) {
        return Err(Error::arg(format!("beta must be positive, got {beta}")));
    }
    if !(k > 0.0) {
        return Err(Error::arg(format!("stiffness must be positive, got {k}")));
    }
    let half = force / (beta * k);
    Ok((x0 / beta - half, x0 / beta + half))
}
