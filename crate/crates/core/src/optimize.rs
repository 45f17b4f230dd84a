//! Box-constrained differential evolution (rand/1/bin).

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeConfig {
    /// Population size per dimension.
    pub pop_per_dim: usize,
    /// Crossover probability.
    pub cr: f64,
    /// Differential weight.
    pub weight: f64,
    /// Cap on objective evaluations, initial population included.
    pub budget: usize,
    pub seed: u64,
}

impl DeConfig {
    pub fn new(budget: usize, seed: u64) -> Self {
        Self {
            pop_per_dim: 15,
            cr: 0.9,
            weight: 0.7,
            budget,
            seed,
        }
    }

    pub fn population(&self, dim: usize) -> usize {
        (self.pop_per_dim * dim).max(4)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DeResult {
    pub best: Vec<f64>,
    pub value: f64,
    pub evaluations: usize,
    /// Best value after the initial population and after each generation.
    pub history: Vec<f64>,
}

/// Minimizes `f` over `bounds`. Non-finite values count as infeasible and
/// lose every comparison. Trials are drawn serially from the seeded RNG
/// and evaluated in parallel, so results do not depend on thread count.
pub fn differential_evolution<F>(f: F, bounds: &[(f64, f64)], cfg: &DeConfig) -> Result<DeResult>
where
    F: Fn(&[f64]) -> f64 + Sync,
{
    let dim = bounds.len();
    if dim == 0 {
        return Err(Error::Setup("no parameters to optimize".into()));
    }
    for &(lo, hi) in bounds {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::Setup(format!("invalid bounds [{lo}, {hi}]")));
        }
    }
    let np = cfg.population(dim);
    if cfg.budget < np {
        return Err(Error::Setup(format!(
            "budget {} is below the population size {np}",
            cfg.budget
        )));
    }
    let score = |v: f64| if v.is_nan() { f64::INFINITY } else { v };
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let mut pop: Vec<Vec<f64>> = (0..np)
        .map(|_| bounds.iter().map(|&(lo, hi)| rng.random_range(lo..hi)).collect())
        .collect();
    let mut vals: Vec<f64> = pop.par_iter().map(|x| score(f(x))).collect();
    let mut evaluations = np;
    let best_of = |vals: &[f64]| {
        (0..vals.len())
            .min_by(|&a, &b| vals[a].total_cmp(&vals[b]))
            .expect("population is not empty")
    };
    let mut history = vec![vals[best_of(&vals)]];

    while evaluations < cfg.budget {
        let batch = np.min(cfg.budget - evaluations);
        let trials: Vec<Vec<f64>> = (0..batch)
            .map(|i| {
                let mut pick = || loop {
                    let r = rng.random_range(0..np);
                    if r != i {
                        break r;
                    }
                };
                let a = pick();
                let b = loop {
                    let r = pick();
                    if r != a {
                        break r;
                    }
                };
                let c = loop {
                    let r = pick();
                    if r != a && r != b {
                        break r;
                    }
                };
                let forced = rng.random_range(0..dim);
                (0..dim)
                    .map(|d| {
                        if d == forced || rng.random::<f64>() < cfg.cr {
                            let (lo, hi) = bounds[d];
                            let y = pop[a][d] + cfg.weight * (pop[b][d] - pop[c][d]);
                            // Out-of-box components land halfway between
                            // the parent and the violated bound.
                            if y < lo {
                                0.5 * (lo + pop[i][d])
                            } else if y > hi {
                                0.5 * (hi + pop[i][d])
                            } else {
                                y
                            }
                        } else {
                            pop[i][d]
                        }
                    })
                    .collect()
            })
            .collect();
        let scores: Vec<f64> = trials.par_iter().map(|x| score(f(x))).collect();
        evaluations += batch;
        for (i, (trial, s)) in trials.into_iter().zip(scores).enumerate() {
            if s <= vals[i] {
                pop[i] = trial;
                vals[i] = s;
            }
        }
        history.push(vals[best_of(&vals)]);
    }

    let i = best_of(&vals);
    Ok(DeResult {
        best: pop[i].clone(),
        value: vals[i],
        evaluations,
        history,
    })
}
