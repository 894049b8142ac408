//! Brute-force check that the thermal state at T_E is the closest separable state,
//! both along the thermal curve and among same-pattern states on the PPT boundary.

use thermal_entanglement::entanglement::{
    boundary_distance_oracle, critical_temperature, hs_entanglement,
};
use thermal_entanglement::SpinSystem;

fn main() -> thermal_entanglement::Result<()> {
    let cell = SpinSystem::half_one(-1.0)?;
    let t_e = critical_temperature(&cell)?.expect("J < 0");
    for t in [0.0, 0.1, 0.5, 0.9 * t_e, 0.99 * t_e] {
        let oracle = boundary_distance_oracle(&cell, t, 1000)?;
        println!(
            "T = {t:.4}: closed form {:.9} | thermal family {:.9} at T_s = {:.6} | pattern family {:.9}",
            hs_entanglement(&cell, t)?,
            oracle.thermal.distance,
            oracle.thermal.temperature.unwrap_or(f64::NAN),
            oracle.pattern.distance,
        );
    }
    Ok(())
}
