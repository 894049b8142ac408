//! Thermal entanglement of a two-site mixed-spin Heisenberg exchange cell.
//!
//! The cell is a spin-1/2 coupled to a spin-S through `H = −J s⃗·S⃗`. The crate
//! builds the Hamiltonian and its Gibbs states, decides entanglement with the
//! partial-transpose (PPT) criterion, and measures it as the Hilbert–Schmidt
//! distance to the separable thermal state at the critical temperature
//! `T_E = 3|J| / (2 kB ln 4)`. The spin-1/2 ⊗ spin-1 case has closed forms
//! throughout; other spins go through exact diagonalization and bisection.
//!
//! ```
//! use thermal_entanglement::{entanglement, model::SpinSystem};
//!
//! let cell = SpinSystem::half_one(-1.0).unwrap();
//! let t_e = entanglement::critical_temperature(&cell).unwrap().unwrap();
//! assert!((t_e - 1.082021).abs() < 1e-6);
//! let e0 = entanglement::hs_entanglement(&cell, 0.0).unwrap();
//! assert!((e0 - 0.288675).abs() < 1e-6);
//! ```

pub mod entanglement;
pub mod error;
pub mod linalg;
pub mod model;
pub mod spin;
pub mod sweep;

pub use entanglement::EntanglementReport;
pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, SpectralDecomposition};
pub use model::{SpinSystem, ThermalState};
pub use spin::{Spin, SpinOperators};
