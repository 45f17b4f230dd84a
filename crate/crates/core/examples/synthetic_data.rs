//! Write a synthetic monitoring record and matching bounds file.
//!
//! `cargo run --release --example synthetic_data -- DIR` writes
//! `DIR/synthetic_record.txt` (columns t [s], T [°C], z [m]) and
//! `DIR/bounds.txt`, the files used by `stickslip calibrate` in the README.

use std::fs;
use std::io::Write;
use std::path::PathBuf;

use stickslip::calibration::{synthetic_record, Params, DEFAULT_K_BP};
use stickslip::io::fmt_num;

fn main() -> stickslip::Result<()> {
    let dir = PathBuf::from(std::env::args().nth(1).unwrap_or_else(|| "data".into()));
    fs::create_dir_all(&dir)?;
    let truth = Params { z0: 0.002, k: 1e6, beta: 1e-4, f_d: 2500.0, f_s: 4000.0 };
    let (temps, displs) = synthetic_record(&truth, 30.0, 0.01, DEFAULT_K_BP, 11)?;

    let mut w = std::io::BufWriter::new(fs::File::create(dir.join("synthetic_record.txt"))?);
    writeln!(w, "# 30 days, 10-minute cadence; generated with z0=0.002 K=1e6 beta=1e-4 f_d=2500 f_s=4000,")?;
    writeln!(w, "# K_BP=2e6, 1% multiplicative noise, seed 11")?;
    writeln!(w, "t T z")?;
    for ((t, temp), z) in temps.times().iter().zip(temps.temps()).zip(&displs) {
        writeln!(w, "{} {} {}", fmt_num(*t), fmt_num(*temp), fmt_num(*z))?;
    }
    w.flush()?;

    fs::write(
        dir.join("bounds.txt"),
        "# name lo hi\nz0 -0.01 0.01\nK 2e5 5e6\nbeta 2e-5 5e-4\nf_d 500 10000\nf_s 1000 15000\n",
    )?;
    println!("wrote {} samples to {}", temps.len(), dir.display());
    Ok(())
}
