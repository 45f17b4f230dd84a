//! First-order convergence of the explicit VI scheme towards the exact
//! event-driven solution.
//!
//! `cargo run --release --example euler_convergence`

use stickslip::euler::{simulate_euler, EulerConfig};
use stickslip::events::{simulate_events, EngineConfig};
use stickslip::{ForcingModel, FrictionParams};

fn main() -> stickslip::Result<()> {
    let f = ForcingModel::harmonic_shaw(6.0, 0.25, 0.0);
    let p = FrictionParams::new(1.0, 1.0, 1.2)?;
    let t_end = 27.0;
    let exact = simulate_events(6.0, &f, &p, &EngineConfig::for_problem(&f, &p, t_end))?;
    let x_ref = exact.last().expect("nonempty run").state.x;
    println!("exact x({t_end}) = {x_ref:.9}");

    let mut prev: Option<f64> = None;
    println!("{:>10} {:>14} {:>8}", "h", "|error|", "ratio");
    for k in 0..7 {
        let h = 0.02 / 2f64.powi(k);
        let run = simulate_euler(6.0, &f, &p, &EulerConfig::over(t_end, h)?.record_every(1000))?;
        let err = (run.last().expect("nonempty run").state.x - x_ref).abs();
        let ratio = prev.map_or(String::new(), |e| format!("{:.3}", e / err));
        println!("{h:>10.3e} {err:>14.6e} {ratio:>8}");
        prev = Some(err);
    }
    Ok(())
}
