//! Explicit time stepping of the discrete variational inequality.
//!
//! Position advances with the old velocity, `x' = x + h v`. The new
//! velocity solves the scalar discrete VI
//!
//! ```text
//! (b - m (v' - v) / h) (phi - v') + f |v'| <= f |phi|   for all phi,
//! ```
//!
//! whose unique solution is the soft-threshold [`shrink`] of
//! `u = v + (h/m) b` at `(h/m) f`. With `f_d < f_s` the stick gate uses
//! `f_s` and the slip update uses `f_d`. The forcing is frozen at the old
//! state `(x_n, v_n, t_n)` for the whole step.

use crate::error::{Error, Result};
use crate::forcing::ForcingModel;
use crate::model::{friction_force, FrictionParams, PhaseLabel, Sign, SystemState};
use crate::trajectory::{Event, EventKind, EventLog, Sample, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EulerConfig {
    pub h: f64,
    pub n_steps: usize,
    /// Keep one sample out of `record_every` (the last one is always kept).
    pub record_every: usize,
}

impl EulerConfig {
    pub fn new(h: f64, n_steps: usize, record_every: usize) -> Result<Self> {
        if !(h.is_finite() && h > 0.0) {
            return Err(Error::arg(format!("time step must be positive, got {h}")));
        }
        if n_steps == 0 || record_every == 0 {
            return Err(Error::arg("n_steps and record_every must be at least 1"));
        }
        Ok(Self {
            h,
            n_steps,
            record_every,
        })
    }

    /// `N = round(t_end / h)` steps of size `h`.
    pub fn over(t_end: f64, h: f64) -> Result<Self> {
        if !(t_end.is_finite() && t_end > 0.0) {
            return Err(Error::arg(format!("horizon must be positive, got {t_end}")));
        }
        let n = (t_end / h).round().max(1.0) as usize;
        Self::new(h, n, 1)
    }

    pub fn record_every(mut self, k: usize) -> Self {
        self.record_every = k.max(1);
        self
    }
}

/// Soft-threshold: `0` if `|u| <= tau`, else `u - sign(u) tau`.
pub fn shrink(u: f64, tau: f64) -> Result<f64> {
    if !(tau >= 0.0) {
        return Err(Error::arg(format!("shrink threshold must be >= 0, got {tau}")));
    }
    Ok(soft_threshold(u, tau))
}

#[inline]
fn soft_threshold(u: f64, tau: f64) -> f64 {
    if u.abs() <= tau {
        0.0
    } else {
        u - u.signum() * tau
    }
}

/// Velocity update shared by both schemes: rest if `|u| <= (h/m) f_s`,
/// else the soft-threshold of `u` at `(h/m) f_d`.
#[inline]
fn velocity_update(v: f64, b: f64, p: &FrictionParams, h: f64) -> f64 {
    let u = v + h / p.m * b;
    if u.abs() <= h / p.m * p.f_s {
        0.0
    } else {
        soft_threshold(u, h / p.m * p.f_d)
    }
}

fn advance(state: &SystemState, f: &ForcingModel, p: &FrictionParams, h: f64) -> Result<SystemState> {
    let b = f.eval(state.x, state.v, state.t)?;
    let v = velocity_update(state.v, b, p, h);
    Ok(SystemState {
        t: state.t + h,
        x: state.x + h * state.v,
        v,
    })
}

/// One step of the unified scheme (`f_d = f_s = f`).
pub fn euler_step_unified(
    state: &SystemState,
    f: &ForcingModel,
    p: &FrictionParams,
    h: f64,
) -> Result<SystemState> {
    if !p.is_unified() {
        return Err(Error::arg("unified step requires f_d == f_s"));
    }
    let b = f.eval(state.x, state.v, state.t)?;
    let tau = h / p.m * p.f_s;
    Ok(SystemState {
        t: state.t + h,
        x: state.x + h * state.v,
        v: soft_threshold(state.v + h / p.m * b, tau),
    })
}

/// One step of the two-coefficient scheme: stick gate at `f_s`, slip
/// update at `f_d`. Also accepts `f_d == f_s`, where it coincides with
/// [`euler_step_unified`].
pub fn euler_step_two_coeff(
    state: &SystemState,
    f: &ForcingModel,
    p: &FrictionParams,
    h: f64,
) -> Result<SystemState> {
    advance(state, f, p, h)
}

/// Runs `cfg.n_steps` steps from rest at `x0`.
///
/// Sample `n` is labelled static when its velocity is exactly zero and its
/// force satisfies `|b| <= f_s`, i.e. when the step leaving it takes the
/// stick branch from rest. Other samples are dynamic. The event log is
/// rebuilt from label changes and from velocity sign flips inside slips,
/// so its times are accurate to one step.
pub fn simulate_euler(
    x0: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &EulerConfig,
) -> Result<Trajectory> {
    let h = cfg.h;
    let mut traj = Trajectory::default();
    let mut log = EventLog::new();
    let mut state = SystemState::at_rest(0.0, x0);
    let mut stick_index = 0usize;
    let mut subphase = 0usize;
    let mut eps: Option<Sign> = None;
    let mut prev: Option<PhaseLabel> = None;

    for n in 0..=cfg.n_steps {
        // Multiplying instead of accumulating keeps t exact on the grid.
        state.t = n as f64 * h;
        let b = f.eval(state.x, state.v, state.t)?;
        let phase = if state.v == 0.0 && b.abs() <= p.f_s {
            PhaseLabel::Static
        } else {
            PhaseLabel::Dynamic
        };

        match (prev, phase) {
            (None, PhaseLabel::Static) => log.push(Event {
                time: state.t,
                kind: EventKind::EnterStatic(0),
                position: state.x,
                epsilon: None,
            }),
            (None | Some(PhaseLabel::Static), PhaseLabel::Dynamic) => {
                let dir = Sign::of(state.v).or_else(|| Sign::of(b));
                eps = dir;
                subphase = 0;
                log.push(Event {
                    time: state.t,
                    kind: EventKind::EnterDynamic(stick_index),
                    position: state.x,
                    epsilon: dir,
                });
            }
            (Some(PhaseLabel::Dynamic), PhaseLabel::Static) => {
                stick_index += 1;
                log.push(Event {
                    time: state.t,
                    kind: EventKind::EnterStatic(stick_index),
                    position: state.x,
                    epsilon: None,
                });
            }
            (Some(PhaseLabel::Dynamic), PhaseLabel::Dynamic) => {
                if let Some(s) = Sign::of(state.v) {
                    if eps != Some(s) {
                        if eps.is_some() {
                            subphase += 1;
                            log.push(Event {
                                time: state.t,
                                kind: EventKind::SubphaseBoundary {
                                    phase: stick_index,
                                    index: subphase,
                                },
                                position: state.x,
                                epsilon: Some(s),
                            });
                        }
                        eps = Some(s);
                    }
                }
            }
            (Some(PhaseLabel::Static), PhaseLabel::Static) => {}
        }
        prev = Some(phase);

        if n % cfg.record_every == 0 || n == cfg.n_steps {
            traj.samples.push(Sample {
                state,
                phase,
                friction: friction_force(p, state.v, b, phase),
                forcing: b,
            });
        }
        if n == cfg.n_steps {
            break;
        }
        let v_next = velocity_update(state.v, b, p, h);
        state.x += h * state.v;
        state.v = v_next;
    }
    traj.events = log;
    Ok(traj)
}
