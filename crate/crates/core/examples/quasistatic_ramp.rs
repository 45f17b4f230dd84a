//! Quasistatic staircase under a temperature ramp, for unequal and equal
//! friction coefficients, and the admissible temperature window.
//!
//! `cargo run --release --example quasistatic_ramp`

use stickslip::quasistatic::{admissible_window, quasistatic_steps, QuasistaticConfig};
use stickslip::{Analytic, ForcingModel, FrictionParams, TemperatureSource};

fn main() -> stickslip::Result<()> {
    let ramp = TemperatureSource::Analytic(Analytic::Ramp { start: 0.0, slope: 0.1 });
    let f = ForcingModel::temperature_spring(1.0, 1.0, ramp)?;
    let cfg = QuasistaticConfig::new(50.0);

    for p in [FrictionParams::new(1.0, 0.5, 1.0)?, FrictionParams::unified(1.0, 1.0)?] {
        println!("f_d = {}, f_s = {}", p.f_d, p.f_s);
        println!("{:>10} {:>10} {:>6} {:>10} {:>8}", "departs", "returns", "eps", "from", "to");
        for s in quasistatic_steps(0.0, &f, &p, &cfg)? {
            println!(
                "{:>10.4} {:>10.4} {:>6} {:>10.4} {:>8.4}",
                s.tau_half,
                s.tau_next,
                s.eps_j.value(),
                s.x_j,
                s.x_next
            );
        }
    }
    let (lo, hi) = admissible_window(0.0, 1.0, 1.0, 1.0)?;
    println!("equal coefficients, x0 = 0: the body rests while T stays in [{lo}, {hi}]");
    Ok(())
}
