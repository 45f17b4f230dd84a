//! Non-friction forces `b(x, ẋ, t)` and the temperature inputs that drive them.

use std::f64::consts::PI;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::series::TemperatureSeries;
use crate::stochastic::OuPath;

/// Closed-form temperature history.
#[derive(Clone)]
pub enum Analytic {
    Constant(f64),
    /// `start + slope * t`
    Ramp { start: f64, slope: f64 },
    /// `mean + amplitude * cos(omega * t + phase)`
    Cosine {
        mean: f64,
        amplitude: f64,
        omega: f64,
        phase: f64,
    },
    Custom(Arc<dyn Fn(f64) -> f64 + Send + Sync>),
}

impl Analytic {
    pub fn cosine(amplitude: f64, omega: f64) -> Self {
        Analytic::Cosine {
            mean: 0.0,
            amplitude,
            omega,
            phase: 0.0,
        }
    }

    pub fn custom(f: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        Analytic::Custom(Arc::new(f))
    }

    pub fn eval(&self, t: f64) -> f64 {
        match self {
            Analytic::Constant(c) => *c,
            Analytic::Ramp { start, slope } => start + slope * t,
            Analytic::Cosine {
                mean,
                amplitude,
                omega,
                phase,
            } => amplitude * (omega * t + phase).cos() + mean,
            Analytic::Custom(f) => f(t),
        }
    }
}

impl fmt::Debug for Analytic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Analytic::Constant(c) => f.debug_tuple("Constant").field(c).finish(),
            Analytic::Ramp { start, slope } => f
                .debug_struct("Ramp")
                .field("start", start)
                .field("slope", slope)
                .finish(),
            Analytic::Cosine {
                mean,
                amplitude,
                omega,
                phase,
            } => f
                .debug_struct("Cosine")
                .field("mean", mean)
                .field("amplitude", amplitude)
                .field("omega", omega)
                .field("phase", phase)
                .finish(),
            Analytic::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Temperature as a function of time.
#[derive(Debug, Clone)]
pub enum TemperatureSource {
    Analytic(Analytic),
    Sampled(TemperatureSeries),
    /// `base(t) + rho * v(t)` with `v` an OU path.
    AnalyticPlusNoise {
        base: Analytic,
        noise: Arc<OuPath>,
        rho: f64,
    },
}

impl TemperatureSource {
    pub fn constant(value: f64) -> Self {
        TemperatureSource::Analytic(Analytic::Constant(value))
    }

    pub fn eval(&self, t: f64) -> Result<f64> {
        match self {
            TemperatureSource::Analytic(a) => Ok(a.eval(t)),
            TemperatureSource::Sampled(s) => s.eval(t),
            TemperatureSource::AnalyticPlusNoise { base, noise, rho } => {
                Ok(base.eval(t) + rho * noise.eval(t)?)
            }
        }
    }

    /// Interval on which `eval` succeeds, `None` if unbounded.
    pub fn domain(&self) -> Option<(f64, f64)> {
        match self {
            TemperatureSource::Analytic(_) => None,
            TemperatureSource::Sampled(s) => Some((s.start(), s.end())),
            TemperatureSource::AnalyticPlusNoise { noise, .. } => Some((0.0, noise.horizon())),
        }
    }
}

/// The force `b` acting on the body besides friction.
#[derive(Debug, Clone)]
pub enum ForcingModel {
    /// `b = beta cos(omega t) - 2 alpha ẋ - x` (unit spring).
    HarmonicShaw { beta: f64, omega: f64, alpha: f64 },
    /// `b = K (beta T(t) - x)`: a spring of stiffness `K` whose anchor
    /// follows thermal dilatation `beta T(t)`.
    TemperatureSpring {
        stiffness: f64,
        beta: f64,
        temperature: TemperatureSource,
    },
}

impl ForcingModel {
    pub fn harmonic_shaw(beta: f64, omega: f64, alpha: f64) -> Self {
        ForcingModel::HarmonicShaw { beta, omega, alpha }
    }

    pub fn temperature_spring(
        stiffness: f64,
        beta: f64,
        temperature: TemperatureSource,
    ) -> Result<Self> {
        if !(stiffness.is_finite() && stiffness > 0.0) {
            return Err(Error::arg(format!("stiffness must be positive, got {stiffness}")));
        }
        Ok(ForcingModel::TemperatureSpring {
            stiffness,
            beta,
            temperature,
        })
    }

    pub fn eval(&self, x: f64, v: f64, t: f64) -> Result<f64> {
        match self {
            ForcingModel::HarmonicShaw { beta, omega, alpha } => {
                Ok(beta * (omega * t).cos() - 2.0 * alpha * v - x)
            }
            ForcingModel::TemperatureSpring {
                stiffness,
                beta,
                temperature,
            } => Ok(stiffness * (beta * temperature.eval(t)? - x)),
        }
    }

    /// Spring stiffness: `K`, or 1 for the harmonic model.
    pub fn stiffness(&self) -> f64 {
        match self {
            ForcingModel::HarmonicShaw { .. } => 1.0,
            ForcingModel::TemperatureSpring { stiffness, .. } => *stiffness,
        }
    }

    /// `ω_n = sqrt(K / m)`, the oscillation rate during slips.
    pub fn natural_frequency(&self, m: f64) -> f64 {
        (self.stiffness() / m).sqrt()
    }

    /// Time scale on which the forcing itself varies, used to size scans.
    pub(crate) fn variation_period(&self, m: f64) -> f64 {
        let natural = 2.0 * PI / self.natural_frequency(m);
        match self {
            ForcingModel::HarmonicShaw { omega, .. } if *omega > 0.0 => 2.0 * PI / omega,
            _ => natural,
        }
    }

    pub fn domain(&self) -> Option<(f64, f64)> {
        match self {
            ForcingModel::HarmonicShaw { .. } => None,
            ForcingModel::TemperatureSpring { temperature, .. } => temperature.domain(),
        }
    }
}

/// `b(x, ẋ, t)` for the active forcing variant.
pub fn eval_forcing(f: &ForcingModel, x: f64, v: f64, t: f64) -> Result<f64> {
    f.eval(x, v, t)
}
