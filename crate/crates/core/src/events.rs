//! Exact event-driven construction of stick/slip trajectories.
//!
//! A run alternates stick phases, where the body rests at `x_j` until
//! `|b(x_j, t)|` first exceeds `f_s`, with slip phases. A slip phase is cut
//! into sub-phases of constant velocity sign. Each sub-phase starts at rest
//! at `(τ_j^k, x_j^k)` with `ε = sign(b(x_j^k, τ_j^k))` and follows the
//! smooth ODE `m ẍ = b(x, ẋ, t) - ε f_d` up to the next zero of `ẋ`. There
//! the slip ends if `|b| <= f_s`; otherwise a new sub-phase starts.
//!
//! For spring forcing `b = K (βT(t) - x)` the sub-phase has the closed form
//!
//! ```text
//! x(t) = x_k cos ω(t - τ) + ∫_τ^t sin ω(t - s) (KβT(s) - ε f_d) / (m ω) ds,
//! ```
//!
//! `ω = sqrt(K/m)`, which [`dynamic_subphase`] evaluates with composite
//! Gauss–Legendre quadrature. Any other forcing goes through
//! [`dynamic_subphase_generic`], a fixed-step RK4 integrator.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::forcing::{ForcingModel, TemperatureSource};
use crate::model::{friction_force, FrictionParams, PhaseLabel, Sign, SystemState};
use crate::quadrature::GaussLegendre;
use crate::trajectory::{Event, EventKind, EventLog, Sample, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EngineConfig {
    /// Quadrature nodes per natural half-period `π/ω_n`.
    pub quad_points: usize,
    /// Absolute time tolerance of every located event.
    pub root_tol: f64,
    /// Scan step for bracketing departures; also the sampling step of
    /// stick phases in the output.
    pub bracket_dt: f64,
    /// Step of the RK4 integrator used by [`dynamic_subphase_generic`].
    pub ode_dt: f64,
    /// Cap on sub-phases within one slip phase.
    pub max_subphases: usize,
    pub t_end: f64,
}

impl EngineConfig {
    /// Defaults sized to the problem: departure scans at 1/64 of the
    /// forcing period (the natural period for spring forcing) and RK4 at
    /// 1/512 of the natural period.
    pub fn for_problem(f: &ForcingModel, p: &FrictionParams, t_end: f64) -> Self {
        let natural_period = 2.0 * PI / f.natural_frequency(p.m);
        Self {
            quad_points: 64,
            root_tol: 1e-10,
            bracket_dt: f.variation_period(p.m) / 64.0,
            ode_dt: natural_period / 512.0,
            max_subphases: 10_000,
            t_end,
        }
    }

    pub fn with_root_tol(mut self, tol: f64) -> Self {
        self.root_tol = tol;
        self
    }

    pub fn with_bracket_dt(mut self, dt: f64) -> Self {
        self.bracket_dt = dt;
        self
    }

    pub fn with_ode_dt(mut self, dt: f64) -> Self {
        self.ode_dt = dt;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.quad_points < 16 {
            return Err(Error::arg(format!(
                "quad_points must be at least 16, got {}",
                self.quad_points
            )));
        }
        for (name, value) in [
            ("root_tol", self.root_tol),
            ("bracket_dt", self.bracket_dt),
            ("ode_dt", self.ode_dt),
        ] {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::arg(format!("{name} must be positive, got {value}")));
            }
        }
        if self.max_subphases == 0 {
            return Err(Error::arg("max_subphases must be at least 1"));
        }
        if !self.t_end.is_finite() {
            return Err(Error::arg("horizon must be finite"));
        }
        Ok(())
    }
}

/// Result of integrating one dynamic sub-phase.
#[derive(Debug, Clone, PartialEq)]
pub struct Subphase {
    /// Next zero of velocity, `None` if the horizon came first.
    pub tau_next: Option<f64>,
    /// Position at `tau_next`, or at the horizon when truncated.
    pub x_next: f64,
    /// Velocity at the end of the path (0 unless truncated).
    pub v_end: f64,
    pub epsilon: Sign,
    /// Start, scan points and end of the sub-phase.
    pub path: Vec<SystemState>,
}

/// First `t >= tau_j` with `|b(x_j, 0, t)| > f_s`, or `None` before `t_end`.
///
/// Scans forward with `bracket_dt`, then bisects `|b| - f_s` to
/// `root_tol`. The returned time is the last bisection point still inside
/// the threshold, so the body is at equilibrium there.
pub fn next_departure(
    x_j: f64,
    tau_j: f64,
    f: &ForcingModel,
    f_s: f64,
    cfg: &EngineConfig,
) -> Result<Option<f64>> {
    let exceeds = |t: f64| -> Result<bool> { Ok(f.eval(x_j, 0.0, t)?.abs() > f_s) };
    if exceeds(tau_j)? {
        return Ok(Some(tau_j));
    }
    let mut lo = tau_j;
    let mut i = 1u64;
    while lo < cfg.t_end {
        let hi = (tau_j + i as f64 * cfg.bracket_dt).min(cfg.t_end);
        if exceeds(hi)? {
            let (mut a, mut b) = (lo, hi);
            while b - a > cfg.root_tol {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if exceeds(mid)? {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            return Ok(Some(a));
        }
        lo = hi;
        i += 1;
    }
    Ok(None)
}

fn spring_parts(f: &ForcingModel) -> Result<(f64, f64, &TemperatureSource)> {
    match f {
        ForcingModel::TemperatureSpring {
            stiffness,
            beta,
            temperature,
        } => Ok((*stiffness, *beta, temperature)),
        ForcingModel::HarmonicShaw { .. } => Err(Error::arg(
            "closed-form sub-phase needs spring forcing; use dynamic_subphase_generic",
        )),
    }
}

/// Closed-form sub-phase for `b = K (βT(t) - x)`.
///
/// With local time `u = t - τ`, `C(u) = ∫_0^u cos(ωr) g dr` and
/// `S(u) = ∫_0^u sin(ωr) g dr` for `g = KβT - ε f_d`:
///
/// ```text
/// x = x_k cos ωu + (sin ωu C - cos ωu S) / (m ω)
/// ẋ = -ω x_k sin ωu + (cos ωu C + sin ωu S) / m
/// ```
///
/// `C` and `S` accumulate panel by panel as the scan advances, so every
/// evaluation costs one panel of quadrature.
pub fn dynamic_subphase(
    x_k: f64,
    tau_k: f64,
    eps: Sign,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &EngineConfig,
) -> Result<Subphase> {
    let (k, beta, temp) = spring_parts(f)?;
    let m = p.m;
    let omega = (k / m).sqrt();
    let half_period = PI / omega;
    let step = cfg.bracket_dt.min(half_period / 8.0);
    let order = ((cfg.quad_points as f64 * step / half_period).ceil() as usize).max(4);
    let rule = GaussLegendre::new(order);
    let eps_fd = eps.value() * p.f_d;

    let panel = |u0: f64, u1: f64| -> Result<(f64, f64)> {
        let half = 0.5 * (u1 - u0);
        let mid = 0.5 * (u0 + u1);
        let (mut c, mut s) = (0.0, 0.0);
        for (&z, &w) in rule.nodes().iter().zip(rule.weights()) {
            let u = mid + half * z;
            let g = k * beta * temp.eval(tau_k + u)? - eps_fd;
            let (sn, cs) = (omega * u).sin_cos();
            c += w * cs * g;
            s += w * sn * g;
        }
        Ok((c * half, s * half))
    };
    let state_at = |u: f64, c: f64, s: f64| -> (f64, f64) {
        let (sn, cs) = (omega * u).sin_cos();
        let x = x_k * cs + (sn * c - cs * s) / (m * omega);
        let v = -omega * x_k * sn + (cs * c + sn * s) / m;
        (x, v)
    };

    let horizon = cfg.t_end - tau_k;
    let mut path = vec![SystemState::at_rest(tau_k, x_k)];
    let (mut u0, mut c0, mut s0) = (0.0_f64, 0.0_f64, 0.0_f64);
    let mut i = 1u64;
    loop {
        let u1 = (i as f64 * step).min(horizon);
        let (dc, ds) = panel(u0, u1)?;
        let (x1, v1) = state_at(u1, c0 + dc, s0 + ds);
        if eps.value() * v1 <= 0.0 {
            // Bracket [u0, u1]: moving at u0 (or the start), stopped at u1.
            let (mut lo, mut hi) = (u0, u1);
            while hi - lo > cfg.root_tol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let (dc, ds) = panel(u0, mid)?;
                let (_, v) = state_at(mid, c0 + dc, s0 + ds);
                if eps.value() * v > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let root = 0.5 * (lo + hi);
            let (dc, ds) = panel(u0, root)?;
            let (x_next, _) = state_at(root, c0 + dc, s0 + ds);
            let tau_next = tau_k + root;
            path.push(SystemState::at_rest(tau_next, x_next));
            return Ok(Subphase {
                tau_next: Some(tau_next),
                x_next,
                v_end: 0.0,
                epsilon: eps,
                path,
            });
        }
        c0 += dc;
        s0 += ds;
        u0 = u1;
        path.push(SystemState {
            t: tau_k + u1,
            x: x1,
            v: v1,
        });
        if u1 >= horizon {
            return Ok(Subphase {
                tau_next: None,
                x_next: x1,
                v_end: v1,
                epsilon: eps,
                path,
            });
        }
        i += 1;
    }
}

/// Sub-phase for any forcing: fixed-step RK4 on the signed ODE
/// `m ẍ = b(x, ẋ, t) - ε f_d`. The zero of `ẋ` is bisected on the dense
/// output given by partial RK4 steps from the bracketing step's start.
pub fn dynamic_subphase_generic(
    x_k: f64,
    tau_k: f64,
    eps: Sign,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &EngineConfig,
) -> Result<Subphase> {
    let eps_fd = eps.value() * p.f_d;
    let accel = |t: f64, x: f64, v: f64| -> Result<f64> { Ok((f.eval(x, v, t)? - eps_fd) / p.m) };
    let rk4 = |t: f64, x: f64, v: f64, h: f64| -> Result<(f64, f64)> {
        let k1x = v;
        let k1v = accel(t, x, v)?;
        let k2x = v + 0.5 * h * k1v;
        let k2v = accel(t + 0.5 * h, x + 0.5 * h * k1x, k2x)?;
        let k3x = v + 0.5 * h * k2v;
        let k3v = accel(t + 0.5 * h, x + 0.5 * h * k2x, k3x)?;
        let k4x = v + h * k3v;
        let k4v = accel(t + h, x + h * k3x, k4x)?;
        Ok((
            x + h / 6.0 * (k1x + 2.0 * k2x + 2.0 * k3x + k4x),
            v + h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v),
        ))
    };

    let mut path = vec![SystemState::at_rest(tau_k, x_k)];
    let (mut t0, mut x0, mut v0) = (tau_k, x_k, 0.0_f64);
    let mut i = 1u64;
    loop {
        let t1 = (tau_k + i as f64 * cfg.ode_dt).min(cfg.t_end);
        let h = t1 - t0;
        let (x1, v1) = rk4(t0, x0, v0, h)?;
        if eps.value() * v1 <= 0.0 {
            let (mut lo, mut hi) = (0.0_f64, h);
            while hi - lo > cfg.root_tol {
                let mid = 0.5 * (lo + hi);
                if mid <= lo || mid >= hi {
                    break;
                }
                let (_, v) = rk4(t0, x0, v0, mid)?;
                if eps.value() * v > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let root = 0.5 * (lo + hi);
            let (x_next, _) = rk4(t0, x0, v0, root)?;
            let tau_next = t0 + root;
            path.push(SystemState::at_rest(tau_next, x_next));
            return Ok(Subphase {
                tau_next: Some(tau_next),
                x_next,
                v_end: 0.0,
                epsilon: eps,
                path,
            });
        }
        t0 = t1;
        x0 = x1;
        v0 = v1;
        path.push(SystemState { t: t1, x: x1, v: v1 });
        if t1 >= cfg.t_end {
            return Ok(Subphase {
                tau_next: None,
                x_next: x1,
                v_end: v1,
                epsilon: eps,
                path,
            });
        }
        i += 1;
    }
}

/// Full event-driven run from rest at `x0`.
///
/// Starts in a stick phase when `|b(x0, 0)| <= f_s` (the boundary case
/// included); otherwise the first slip begins at `t = 0`. The log holds one
/// event per transition time. A stick of zero length after a return (the
/// force already past `f_s` when the body stops) is logged as a sub-phase
/// boundary instead.
pub fn simulate_events(
    x0: f64,
    f: &ForcingModel,
    p: &FrictionParams,
    cfg: &EngineConfig,
) -> Result<Trajectory> {
    cfg.validate()?;
    let closed_form = matches!(f, ForcingModel::TemperatureSpring { .. });
    let mut traj = Trajectory::default();
    let mut log = EventLog::new();
    // Index of the current (or last finished) stick phase.
    let mut stick = 0usize;
    let (mut t, mut x) = (0.0_f64, x0);

    let mut departure = if f.eval(x0, 0.0, 0.0)?.abs() <= p.f_s {
        log.push(Event {
            time: 0.0,
            kind: EventKind::EnterStatic(0),
            position: x0,
            epsilon: None,
        });
        None
    } else {
        Some(0.0)
    };

    loop {
        let td = match departure {
            Some(td) => td,
            None => {
                let dep = next_departure(x, t, f, p.f_s, cfg)?;
                let until = dep.unwrap_or(cfg.t_end);
                if until > t || dep.is_none() {
                    push_static_segment(&mut traj, f, t, until, x, cfg.bracket_dt)?;
                }
                match dep {
                    Some(td) => td,
                    None => break,
                }
            }
        };

        let mut eps = Sign::of(f.eval(x, 0.0, td)?).unwrap_or(Sign::Positive);
        let mut sub = 0usize;
        let zero_length = log.last().is_some_and(|e| e.time >= td);
        if zero_length {
            log.pop();
        }
        if zero_length && stick > 0 {
            // The body stopped with |b| past the threshold within
            // `root_tol`: the previous slip goes on in a new sub-phase.
            stick -= 1;
            sub = log
                .iter()
                .filter(|e| matches!(e.kind, EventKind::SubphaseBoundary { phase, .. } if phase == stick))
                .count()
                + 1;
            log.push(Event {
                time: td,
                kind: EventKind::SubphaseBoundary { phase: stick, index: sub },
                position: x,
                epsilon: Some(eps),
            });
        } else {
            log.push(Event {
                time: td,
                kind: EventKind::EnterDynamic(stick),
                position: x,
                epsilon: Some(eps),
            });
        }

        let (mut tau_k, mut x_k) = (td, x);
        let mut first = !zero_length;
        loop {
            let phase = if closed_form {
                dynamic_subphase(x_k, tau_k, eps, f, p, cfg)?
            } else {
                dynamic_subphase_generic(x_k, tau_k, eps, f, p, cfg)?
            };
            // Each start repeats the previous end, except at a departure
            // where it carries the label change.
            for s in &phase.path[usize::from(!first)..] {
                let b = f.eval(s.x, s.v, s.t)?;
                traj.samples.push(Sample {
                    state: *s,
                    phase: PhaseLabel::Dynamic,
                    friction: friction_force(p, s.v, b, PhaseLabel::Dynamic),
                    forcing: b,
                });
            }
            first = false;
            let Some(tn) = phase.tau_next else {
                traj.events = log;
                return Ok(traj);
            };
            let xn = phase.x_next;
            let bn = f.eval(xn, 0.0, tn)?;
            if bn.abs() <= p.f_s {
                stick += 1;
                log.push(Event {
                    time: tn,
                    kind: EventKind::EnterStatic(stick),
                    position: xn,
                    epsilon: None,
                });
                t = tn;
                x = xn;
                departure = None;
                break;
            }
            sub += 1;
            eps = Sign::of(bn).expect("|b| > f_s >= 0");
            if sub >= cfg.max_subphases {
                traj.events = log;
                return Err(Error::MaxSubphases {
                    phase: stick,
                    limit: cfg.max_subphases,
                    time: tn,
                    partial: Box::new(traj),
                });
            }
            log.push(Event {
                time: tn,
                kind: EventKind::SubphaseBoundary { phase: stick, index: sub },
                position: xn,
                epsilon: Some(eps),
            });
            tau_k = tn;
            x_k = xn;
        }
    }
    traj.events = log;
    Ok(traj)
}

/// Samples a stick phase at rest at `x` on `[from, until]`.
fn push_static_segment(
    traj: &mut Trajectory,
    f: &ForcingModel,
    from: f64,
    until: f64,
    x: f64,
    dt: f64,
) -> Result<()> {
    let mut i = 0u64;
    loop {
        let t = (from + i as f64 * dt).min(until);
        let b = f.eval(x, 0.0, t)?;
        traj.samples.push(Sample {
            state: SystemState::at_rest(t, x),
            phase: PhaseLabel::Static,
            friction: b,
            forcing: b,
        });
        if t >= until {
            return Ok(());
        }
        i += 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::forcing::Analytic;

    fn spring(k: f64, beta: f64, temp: Analytic) -> ForcingModel {
        ForcingModel::temperature_spring(k, beta, TemperatureSource::Analytic(temp)).unwrap()
    }

    fn cfg(f: &ForcingModel, p: &FrictionParams, t_end: f64) -> EngineConfig {
        EngineConfig::for_problem(f, p, t_end).with_root_tol(1e-10)
    }

    #[test]
    fn departure_on_linear_ramp() {
        let f = spring(1.0, 1.0, Analytic::Ramp { start: 0.0, slope: 0.1 });
        let p = FrictionParams::new(1.0, 0.5, 1.0).unwrap();
        let c = cfg(&f, &p, 100.0).with_root_tol(1e-9);
        let t = next_departure(0.0, 0.0, &f, 1.0, &c).unwrap().unwrap();
        assert!((t - 10.0).abs() <= 1e-9, "{t}");
    }

    #[test]
    fn no_departure_under_threshold() {
        let f = spring(1.0, 1.0, Analytic::Constant(0.5));
        let p = FrictionParams::new(1.0, 1.0, 1.2).unwrap();
        assert_eq!(next_departure(0.0, 0.0, &f, 1.2, &cfg(&f, &p, 50.0)).unwrap(), None);
    }

    #[test]
    fn harmonic_departure_matches_arccos() {
        let f = ForcingModel::harmonic_shaw(6.0, 0.25, 0.0);
        let p = FrictionParams::new(1.0, 1.0, 1.2).unwrap();
        let c = cfg(&f, &p, 30.0).with_root_tol(1e-6);
        let t = next_departure(6.0, 0.0, &f, 1.2, &c).unwrap().unwrap();
        assert!((t - 4.0 * 0.8f64.acos()).abs() <= 1e-6, "{t}");
    }

    #[test]
    fn constant_temperature_half_cosine() {
        // x* = βT - ε f_d / K = 0.5, half period π, x_next = 2 x* - x0.
        let f = spring(1.0, 1.0, Analytic::Constant(1.0));
        let p = FrictionParams::new(1.0, 0.5, 1.5).unwrap();
        let c = cfg(&f, &p, 20.0);
        let sub = dynamic_subphase(-0.5, 0.0, Sign::Positive, &f, &p, &c).unwrap();
        let tau = sub.tau_next.unwrap();
        assert!((tau - PI).abs() <= 1e-9, "{tau}");
        assert!((sub.x_next - 1.5).abs() <= 1e-6);

        let p = FrictionParams::unified(1.0, 1.5).unwrap();
        let sub = dynamic_subphase(-0.5, 0.0, Sign::Positive, &f, &p, &c).unwrap();
        assert!((sub.x_next + 0.5).abs() <= 1e-6, "{}", sub.x_next);
    }

    #[test]
    fn free_oscillator_half_period() {
        let f = spring(4.0, 0.0, Analytic::Constant(0.0));
        let p = FrictionParams::new(1.0, 0.0, 0.0).unwrap();
        let c = cfg(&f, &p, 20.0);
        let sub = dynamic_subphase(1.0, 3.0, Sign::Negative, &f, &p, &c).unwrap();
        assert!((sub.tau_next.unwrap() - 3.0 - PI / 2.0).abs() <= 1e-9);
        assert!((sub.x_next + 1.0).abs() <= 1e-9);
        let generic = dynamic_subphase_generic(1.0, 3.0, Sign::Negative, &f, &p, &c).unwrap();
        assert!((generic.tau_next.unwrap() - sub.tau_next.unwrap()).abs() <= 1e-6);
        assert!((generic.x_next - sub.x_next).abs() <= 1e-6);
    }

    #[test]
    fn shaw_forcing_requires_generic_path() {
        let f = ForcingModel::harmonic_shaw(6.0, 0.25, 0.0);
        let p = FrictionParams::new(1.0, 1.0, 1.2).unwrap();
        assert!(dynamic_subphase(6.0, 0.0, Sign::Negative, &f, &p, &cfg(&f, &p, 10.0)).is_err());
    }

    #[test]
    fn truncation_at_horizon() {
        let f = spring(1.0, 1.0, Analytic::Constant(1.0));
        let p = FrictionParams::new(1.0, 0.5, 1.5).unwrap();
        let c = cfg(&f, &p, 1.0);
        let sub = dynamic_subphase(-0.5, 0.0, Sign::Positive, &f, &p, &c).unwrap();
        assert_eq!(sub.tau_next, None);
        assert_eq!(sub.path.last().unwrap().t, 1.0);
        assert!(sub.v_end > 0.0);
    }

    #[test]
    fn static_forever_log() {
        let f = spring(1.0, 1.0, Analytic::Constant(0.5));
        let p = FrictionParams::new(1.0, 1.0, 1.2).unwrap();
        let traj = simulate_events(0.0, &f, &p, &cfg(&f, &p, 50.0)).unwrap();
        assert_eq!(traj.events.len(), 1);
        assert_eq!(traj.events.events()[0].kind, EventKind::EnterStatic(0));
        assert!(traj.samples.iter().all(|s| s.phase == PhaseLabel::Static && s.state.x == 0.0));
        assert_eq!(traj.samples.last().unwrap().state.t, 50.0);
    }

    #[test]
    fn starts_dynamic_when_over_threshold() {
        // Swings 0 -> 5 around 2.5, where |b| = 2 > f_s, then 5 -> 2 around
        // 3.5, where |b| = 1 <= f_s.
        let f = spring(1.0, 1.0, Analytic::Constant(3.0));
        let p = FrictionParams::new(1.0, 0.5, 1.2).unwrap();
        let traj = simulate_events(0.0, &f, &p, &cfg(&f, &p, 10.0)).unwrap();
        let ev = traj.events.events();
        assert_eq!(ev[0].kind, EventKind::EnterDynamic(0));
        assert_eq!(ev[0].time, 0.0);
        assert!(matches!(ev[1].kind, EventKind::SubphaseBoundary { phase: 0, index: 1 }));
        assert!((ev[1].position - 5.0).abs() < 1e-6);
        assert!((ev[1].time - PI).abs() < 1e-8);
        assert_eq!(ev[2].kind, EventKind::EnterStatic(1));
        assert!((ev[2].position - 2.0).abs() < 1e-6);
        assert!((ev[2].time - 2.0 * PI).abs() < 1e-8);
        assert_eq!(ev.len(), 3);
    }

    #[test]
    fn max_subphases_error_keeps_partial_run() {
        // Frictionless spring under constant load oscillates forever with
        // |b| > f_s at every turning point.
        let f = spring(1.0, 1.0, Analytic::Constant(3.0));
        let p = FrictionParams::new(1.0, 0.0, 0.5).unwrap();
        let mut c = cfg(&f, &p, 100.0);
        c.max_subphases = 3;
        match simulate_events(0.0, &f, &p, &c) {
            Err(Error::MaxSubphases { limit, partial, .. }) => {
                assert_eq!(limit, 3);
                assert!(!partial.samples.is_empty());
                assert_eq!(partial.events.max_subphase_boundaries(), 2);
            }
            other => panic!("expected MaxSubphases, got {other:?}"),
        }
    }

    #[test]
    fn config_validation() {
        let f = spring(1.0, 1.0, Analytic::Constant(0.0));
        let p = FrictionParams::new(1.0, 1.0, 1.2).unwrap();
        let mut c = cfg(&f, &p, 1.0);
        c.quad_points = 8;
        assert!(c.validate().is_err());
        let c = cfg(&f, &p, 1.0).with_root_tol(0.0);
        assert!(c.validate().is_err());
    }
}
