//! Gibbs states of the 2⊗3 cell: closed-form entries against the spectral exponential.

use thermal_entanglement::model::{gibbs_state, partition_function};
use thermal_entanglement::SpinSystem;

fn main() -> thermal_entanglement::Result<()> {
    let cell = SpinSystem::half_one(-1.0)?;
    let t_e = 3.0 / (2.0 * 4f64.ln());

    println!(
        "{:>10} {:>12} {:>10} {:>10} {:>10} {:>10} {:>10}",
        "T", "Z", "v/Z", "x/Z", "y/Z", "w/Z", "|Δρ|"
    );
    for t in [0.0, 0.25, 0.5, t_e, 2.0, 10.0] {
        let state = gibbs_state(&cell, t)?;
        let n = state.normalized.expect("2⊗3 cell");
        let z = if t > 0.0 {
            partition_function(&cell, t)?
        } else {
            f64::NAN
        };
        let gap = state.rho.max_abs_diff(&n.to_density_matrix());
        println!(
            "{t:>10.4} {z:>12.6} {:>10.6} {:>10.6} {:>10.6} {:>10.6} {gap:>10.1e}",
            n.v, n.x, n.y, n.w
        );
    }
    Ok(())
}
