//! Fit `(z0, K, β, f_d, f_s)` to the shipped synthetic record.
//!
//! `cargo run --release --example calibrate_synthetic [restarts]`

use std::path::Path;
use std::time::Instant;

use stickslip::calibration::{calibrate_restarts, load_bounds, load_calibration_data, CalibrationProblem};
use stickslip::io::open;

fn main() -> stickslip::Result<()> {
    let restarts: usize = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(3);
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data");
    let (temps, displs) = load_calibration_data(open(&data.join("synthetic_record.txt"))?)?;
    let bounds = load_bounds(open(&data.join("bounds.txt"))?)?;
    let mut prob = CalibrationProblem::new(temps, displs, bounds)?;
    prob.budget = 20_000;

    let start = Instant::now();
    let results = calibrate_restarts(&prob, restarts)?;
    println!("{:>5} {:>11} {:>11} {:>11} {:>9} {:>9} {:>11}", "run", "z0", "K", "beta", "f_d", "f_s", "residual");
    println!("{:>5} {:>11.4e} {:>11.4e} {:>11.4e} {:>9.1} {:>9.1}", "truth", 0.002, 1e6, 1e-4, 2500.0, 4000.0);
    for (i, r) in results.iter().enumerate() {
        let p = r.params;
        println!(
            "{:>5} {:>11.4e} {:>11.4e} {:>11.4e} {:>9.1} {:>9.1} {:>11.4e}",
            i + 1,
            p.z0,
            p.k,
            p.beta,
            p.f_d,
            p.f_s,
            r.residual
        );
    }
    println!("{restarts} fits, {} evaluations each, {:.1?}", prob.budget, start.elapsed());
    Ok(())
}
