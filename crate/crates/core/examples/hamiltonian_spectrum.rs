//! Exact diagonalization of the spin-1/2 ⊗ spin-1 exchange cell, compared with
//! the closed-form eigenpairs φ₁ … φ₆.

use thermal_entanglement::linalg::hermitian_eigendecompose;
use thermal_entanglement::model::{analytic_eigenpairs, build_hamiltonian};
use thermal_entanglement::SpinSystem;

fn main() -> thermal_entanglement::Result<()> {
    let cell = SpinSystem::half_one(-1.0)?;
    let h = build_hamiltonian(&cell);
    println!("H = {h:?}");

    let eig = hermitian_eigendecompose(&h)?;
    for (energy, degeneracy) in eig.degeneracies(1e-9) {
        println!("E = {energy:+.6}  (x{degeneracy})");
    }

    for pair in analytic_eigenpairs(&cell)? {
        let hv = h.apply(&pair.vector)?;
        let residual = hv
            .iter()
            .zip(&pair.vector)
            .map(|(a, b)| (a - b * pair.value).norm())
            .fold(0.0, f64::max);
        println!(
            "φ{}: λ = {:+.3}, residual {residual:.1e}",
            pair.label, pair.value
        );
    }
    Ok(())
}
