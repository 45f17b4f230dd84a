//! Simulation and calibration of one-dimensional dry-friction oscillators.
//!
//! The body obeys `m ẍ + F(ẋ) = b(x, ẋ, t)` with bilevel Coulomb friction:
//! it sticks while `|b| ≤ f_s` and slides against a constant `f_d` once the
//! static threshold is exceeded. Three solvers share the same domain types
//! and check one another:
//!
//! * [`euler`]: explicit time stepping of the discrete variational
//!   inequality, a soft-threshold per step.
//! * [`events`]: exact event-driven construction alternating stick phases
//!   with slip phases split into constant-sign sub-phases.
//! * [`quasistatic`]: frozen-excitation slips for slowly varying
//!   temperature forcing, used by [`calibration`].
//!
//! [`stochastic`] and [`series`] build temperature inputs; [`io`] and
//! [`cli`] handle the column file formats and the `stickslip` binary.

// Range checks are written `!(x > 0.0)` on purpose so NaN fails them too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod calibration;
pub mod cli;
pub mod error;
pub mod euler;
pub mod events;
pub mod forcing;
pub mod io;
pub mod model;
pub mod optimize;
pub mod quadrature;
pub mod quasistatic;
pub mod series;
pub mod stochastic;
pub mod trajectory;

pub use error::{Error, Result};
pub use forcing::{eval_forcing, Analytic, ForcingModel, TemperatureSource};
pub use model::{friction_force, FrictionParams, PhaseLabel, Sign, SystemState};
pub use series::TemperatureSeries;
pub use stochastic::OuPath;
pub use trajectory::{Event, EventKind, EventLog, Sample, Trajectory};
