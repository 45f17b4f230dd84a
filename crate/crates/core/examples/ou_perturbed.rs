//! Spring forcing driven by a noisy temperature `T = cos(t/4) + 0.25 v(t)`
//! with `v` an Ornstein–Uhlenbeck path. Noise can split a slip into several
//! sub-phases of alternating direction.
//!
//! `cargo run --release --example ou_perturbed [seeds]`

use stickslip::events::{simulate_events, EngineConfig};
use stickslip::stochastic::{ou_path, perturbed_temperature};
use stickslip::{EventKind, ForcingModel, FrictionParams};

fn main() -> stickslip::Result<()> {
    let seeds: u64 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(10);
    let p = FrictionParams::new(1.0, 1.0, 1.2)?;
    let t_end = 30.0;
    println!("{:>5} {:>7} {:>7} {:>10}  stick levels", "seed", "slips", "turns", "max turns");
    for seed in 0..seeds {
        let noise = ou_path((t_end / 0.01) as usize + 2, 0.01, seed)?;
        let f = ForcingModel::temperature_spring(1.0, 6.0, perturbed_temperature(0.25, 0.25, noise))?;
        let traj = simulate_events(6.0, &f, &p, &EngineConfig::for_problem(&f, &p, t_end))?;
        let slips = traj.events.departures().len();
        let turns = traj
            .events
            .iter()
            .filter(|e| matches!(e.kind, EventKind::SubphaseBoundary { .. }))
            .count();
        let levels: Vec<String> = traj.events.stick_levels().iter().map(|x| format!("{x:.3}")).collect();
        println!(
            "{seed:>5} {slips:>7} {turns:>7} {:>10}  {}",
            traj.events.max_subphase_boundaries(),
            levels.join(" ")
        );
    }
    Ok(())
}
