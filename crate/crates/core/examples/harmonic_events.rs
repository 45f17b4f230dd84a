//! Exact event-driven run of the harmonically forced oscillator
//! `ẍ + F(ẋ) = 6 cos(t/4) - x` with `f_d = 1`, `f_s = 1.2`, from rest at 6,
//! next to the explicit VI scheme at `h = 0.01`.
//!
//! `cargo run --release --example harmonic_events`

use stickslip::euler::{simulate_euler, EulerConfig};
use stickslip::events::{simulate_events, EngineConfig};
use stickslip::{EventKind, ForcingModel, FrictionParams};

fn main() -> stickslip::Result<()> {
    let f = ForcingModel::harmonic_shaw(6.0, 0.25, 0.0);
    let p = FrictionParams::new(1.0, 1.0, 1.2)?;
    let t_end = 27.0;

    let exact = simulate_events(6.0, &f, &p, &EngineConfig::for_problem(&f, &p, t_end))?;
    let euler = simulate_euler(6.0, &f, &p, &EulerConfig::over(t_end, 0.01)?)?;

    println!("{:<16} {:>12} {:>12} {:>12} {:>12}", "event", "t exact", "x exact", "t euler", "x euler");
    for (a, b) in exact.events.iter().zip(euler.events.iter()) {
        let name = match a.kind {
            EventKind::EnterStatic(j) => format!("stick {j}"),
            EventKind::EnterDynamic(j) => format!("slip after {j}"),
            EventKind::SubphaseBoundary { phase, index } => format!("turn {phase}.{index}"),
        };
        println!("{name:<16} {:>12.6} {:>12.6} {:>12.6} {:>12.6}", a.time, a.position, b.time, b.position);
    }
    for (label, range) in exact.segments() {
        let s = &exact.samples[range];
        println!("{label:?} on [{:.4}, {:.4}], {} samples", s[0].state.t, s[s.len() - 1].state.t, s.len());
    }
    Ok(())
}
