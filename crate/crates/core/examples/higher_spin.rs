//! Spin-1/2 coupled to larger spins: the critical temperature rises and the
//! low-temperature distance entanglement falls as the second spin grows.

use thermal_entanglement::entanglement::{bisect_critical_temperature, hs_entanglement_numeric};
use thermal_entanglement::{Spin, SpinSystem};

fn main() -> thermal_entanglement::Result<()> {
    println!("{:>6} {:>12} {:>14}", "s2", "T_E", "E(T = 1e-3)");
    for twice in 1..=5 {
        let s2 = Spin::from_twice(twice)?;
        let cell = SpinSystem::half_spin(s2, -1.0)?;
        let t_e = bisect_critical_temperature(&cell)?.unwrap_or(f64::NAN);
        let e = hs_entanglement_numeric(&cell, 1e-3)?;
        println!("{:>6} {t_e:>12.6} {e:>14.6}", s2.to_string());
    }
    Ok(())
}
