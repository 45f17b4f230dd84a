//! Physical parameters, state records and the friction law.

use crate::error::{Error, Result};

/// Mass and the two Coulomb thresholds.
///
/// `f_d < f_s` selects the two-phase model; `f_d == f_s` the unified model
/// where a single variational inequality governs both phases.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FrictionParams {
    pub m: f64,
    pub f_d: f64,
    pub f_s: f64,
}

impl FrictionParams {
    pub fn new(m: f64, f_d: f64, f_s: f64) -> Result<Self> {
        if !(m.is_finite() && m > 0.0) {
            return Err(Error::arg(format!("mass must be positive, got {m}")));
        }
        if !(f_d.is_finite() && f_s.is_finite()) || f_d < 0.0 || f_d > f_s {
            return Err(Error::arg(format!(
                "friction thresholds must satisfy 0 <= f_d <= f_s, got f_d = {f_d}, f_s = {f_s}"
            )));
        }
        Ok(Self { m, f_d, f_s })
    }

    /// Equal static and dynamic coefficients.
    pub fn unified(m: f64, f: f64) -> Result<Self> {
        Self::new(m, f, f)
    }

    pub fn is_unified(&self) -> bool {
        self.f_d == self.f_s
    }
}

/// Direction of a slip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Positive,
}

impl Sign {
    /// Sign of a nonzero value; `None` for zero and NaN.
    pub fn of(value: f64) -> Option<Sign> {
        if value > 0.0 {
            Some(Sign::Positive)
        } else if value < 0.0 {
            Some(Sign::Negative)
        } else {
            None
        }
    }

    pub fn value(self) -> f64 {
        match self {
            Sign::Negative => -1.0,
            Sign::Positive => 1.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemState {
    pub t: f64,
    pub x: f64,
    pub v: f64,
}

impl SystemState {
    /// State at rest, as every run starts.
    pub fn at_rest(t: f64, x: f64) -> Self {
        Self { t, x, v: 0.0 }
    }

    pub fn is_finite(&self) -> bool {
        self.t.is_finite() && self.x.is_finite() && self.v.is_finite()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PhaseLabel {
    Static,
    Dynamic,
}

/// Friction force `F(ẋ)` transmitted at one instant.
///
/// Stick: the equilibrium value `b`. Slip with `v != 0`: `sign(v) f_d`.
/// An isolated zero of velocity inside a slip has no force defined by the
/// law itself; it is reported as `b` clamped to `[-f_d, f_d]`.
pub fn friction_force(params: &FrictionParams, v: f64, b: f64, phase: PhaseLabel) -> f64 {
    match phase {
        PhaseLabel::Static => b,
        PhaseLabel::Dynamic => match Sign::of(v) {
            Some(s) => s.value() * params.f_d,
            None => b.clamp(-params.f_d, params.f_d),
        },
    }
}
