//! Critical entanglement temperature: closed form, bisection and the two-qubit dimer.

use thermal_entanglement::entanglement::{
    bisect_critical_temperature, critical_temperature, xxx_qubit_critical_temperature,
};
use thermal_entanglement::SpinSystem;

fn main() -> thermal_entanglement::Result<()> {
    for j in [-0.5, -1.0, -2.0, 1.0] {
        let cell = SpinSystem::half_one(j)?;
        let closed = critical_temperature(&cell)?;
        let bisected = bisect_critical_temperature(&cell)?;
        match (closed, bisected) {
            (Some(a), Some(b)) => {
                let dimer = xxx_qubit_critical_temperature(j, 1.0)?;
                println!("J = {j:+}: T_E = {a:.9}, bisection {b:.9} (|Δ| = {:.1e}), qubit dimer {dimer:.6}", (a - b).abs());
            }
            _ => println!("J = {j:+}: never entangled"),
        }
    }
    Ok(())
}
