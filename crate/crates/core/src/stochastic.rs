//! Ornstein–Uhlenbeck noise for randomly perturbed temperature forcing.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::forcing::{Analytic, TemperatureSource};

/// A sampled path of `dv = -v dt + dw` on the grid `k * dt`.
#[derive(Debug, Clone, PartialEq)]
pub struct OuPath {
    dt: f64,
    values: Vec<f64>,
    seed: u64,
}

impl OuPath {
    pub fn dt(&self) -> f64 {
        self.dt
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    /// Last time covered by the path.
    pub fn horizon(&self) -> f64 {
        (self.values.len() - 1) as f64 * self.dt
    }

    /// Piecewise-linear reading of the path.
    pub fn eval(&self, t: f64) -> Result<f64> {
        let end = self.horizon();
        if !(t >= 0.0 && t <= end) {
            return Err(Error::Domain { t, start: 0.0, end });
        }
        let pos = t / self.dt;
        let k = (pos.floor() as usize).min(self.values.len() - 1);
        if k + 1 >= self.values.len() {
            return Ok(self.values[k]);
        }
        let frac = pos - k as f64;
        Ok(self.values[k] + frac * (self.values[k + 1] - self.values[k]))
    }
}

/// Euler–Maruyama path with unit mean reversion and unit diffusion,
/// started at `v_0 = 0`. The same `(n, dt, seed)` always yields the same
/// values.
pub fn ou_path(n: usize, dt: f64, seed: u64) -> Result<OuPath> {
    if n == 0 {
        return Err(Error::arg("OU path needs at least one sample"));
    }
    if !(dt.is_finite() && dt > 0.0) {
        return Err(Error::arg(format!("OU time step must be positive, got {dt}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let sqrt_dt = dt.sqrt();
    let mut values = Vec::with_capacity(n);
    let mut v = 0.0_f64;
    values.push(v);
    for _ in 1..n {
        let xi: f64 = rng.sample(StandardNormal);
        v = v - v * dt + sqrt_dt * xi;
        values.push(v);
    }
    Ok(OuPath { dt, values, seed })
}

/// `T(t) = cos(Ωt) + ρ v(t)`.
pub fn perturbed_temperature(omega: f64, rho: f64, path: OuPath) -> TemperatureSource {
    TemperatureSource::AnalyticPlusNoise {
        base: Analytic::cosine(1.0, omega),
        noise: Arc::new(path),
        rho,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_path() {
        let a = ou_path(1000, 0.01, 7).unwrap();
        let b = ou_path(1000, 0.01, 7).unwrap();
        assert_eq!(a, b);
        let c = ou_path(1000, 0.01, 8).unwrap();
        assert_ne!(a.values(), c.values());
        assert_eq!(a.values()[0], 0.0);
    }

    #[test]
    fn interpolates_between_samples() {
        let p = ou_path(10, 0.5, 1).unwrap();
        let v = p.values();
        assert_eq!(p.eval(1.0).unwrap(), v[2]);
        let mid = p.eval(1.25).unwrap();
        assert!((mid - 0.5 * (v[2] + v[3])).abs() < 1e-15);
        assert!(p.eval(4.5).is_ok());
        assert!(matches!(p.eval(4.6), Err(Error::Domain { .. })));
    }

    #[test]
    fn zero_rho_is_pure_cosine() {
        let src = perturbed_temperature(0.25, 0.0, ou_path(2001, 0.01, 3).unwrap());
        for i in 0..200 {
            let t = i as f64 * 0.1;
            assert_eq!(src.eval(t).unwrap(), (0.25 * t).cos());
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(ou_path(0, 0.1, 1).is_err());
        assert!(ou_path(5, 0.0, 1).is_err());
    }
}
