//! Distance entanglement against temperature for J = -1, written as CSV to stdout.
//!
//!     cargo run --example entanglement_curve > curve.csv

use thermal_entanglement::sweep::{run_sweep, to_csv, SweepConfig};

fn main() -> thermal_entanglement::Result<()> {
    let cfg = SweepConfig {
        coupling: -1.0,
        t_min: 0.0,
        t_max: 2.0,
        n_points: 201,
        ..SweepConfig::default()
    };
    let reports = run_sweep(&cfg)?;
    print!("{}", to_csv(&reports));
    Ok(())
}
