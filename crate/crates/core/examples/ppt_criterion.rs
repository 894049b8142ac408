//! Partial transpose of the thermal state and the sign of its smallest eigenvalue.

use thermal_entanglement::entanglement::{negativity, ppt_spectrum, ppt_spectrum_closed_form};
use thermal_entanglement::model::gibbs_state;
use thermal_entanglement::SpinSystem;

fn main() -> thermal_entanglement::Result<()> {
    let cell = SpinSystem::half_one(-1.0)?;
    println!(
        "{:>8} {:>14} {:>14} {:>12}  verdict",
        "T", "λmin (closed)", "λmin (numeric)", "negativity"
    );
    for t in [0.0, 0.5, 1.0, 1.082021280666723, 1.2, 3.0] {
        let state = gibbs_state(&cell, t)?;
        let closed = ppt_spectrum_closed_form(&state)?[0];
        let numeric = ppt_spectrum(&state.rho, 2, 3)?[0];
        let n = negativity(&state.rho, 2, 3)?;
        let verdict = if closed < -1e-12 {
            "entangled"
        } else {
            "separable"
        };
        println!("{t:>8.4} {closed:>14.6e} {numeric:>14.6e} {n:>12.6}  {verdict}");
    }
    Ok(())
}
