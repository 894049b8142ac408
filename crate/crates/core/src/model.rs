//! Two-site Heisenberg exchange cell `H = −J s⃗·S⃗` and its thermal states.
//!
//! Product basis ordering: the first site is the slow index, the second the fast
//! one, both in Sz-descending order. For spin-1/2 ⊗ spin-1 this is
//! `(α1, α0, α−1, β1, β0, β−1)`.

use std::f64::consts::SQRT_2;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{self, hermitian_eigendecompose, kron, ComplexMatrix, SpectralDecomposition};
use crate::spin::{Spin, SpinOperators};

/// Beyond this value of `β|J|` the thermal state is taken to be the ground-space mixture.
pub const BETA_J_CLAMP: f64 = 700.0;

/// Energies closer than this (relative to `max(1, |J|)`) count as degenerate.
const DEGENERACY_TOL: f64 = 1e-9;

/// A single exchange bond between two spins.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinSystem {
    pub s1: Spin,
    pub s2: Spin,
    /// Exchange constant `J`; `J < 0` is the antiferrimagnetic (entangling) sign.
    pub coupling: f64,
    /// Boltzmann constant, in energy per temperature unit.
    pub kb: f64,
}

impl SpinSystem {
    pub fn new(s1: Spin, s2: Spin, coupling: f64, kb: f64) -> Result<Self> {
        if !coupling.is_finite() {
            return Err(Error::Domain(format!(
                "exchange constant must be finite, got {coupling}"
            )));
        }
        if !(kb > 0.0 && kb.is_finite()) {
            return Err(Error::Domain(format!("kB must be positive, got {kb}")));
        }
        Ok(Self {
            s1,
            s2,
            coupling,
            kb,
        })
    }

    /// Spin-1/2 coupled to spin-1 with `kB = 1`.
    pub fn half_one(coupling: f64) -> Result<Self> {
        Self::new(Spin::HALF, Spin::ONE, coupling, 1.0)
    }

    /// Spin-1/2 coupled to spin `s2` with `kB = 1`.
    pub fn half_spin(s2: Spin, coupling: f64) -> Result<Self> {
        Self::new(Spin::HALF, s2, coupling, 1.0)
    }

    pub fn with_kb(self, kb: f64) -> Result<Self> {
        Self::new(self.s1, self.s2, self.coupling, kb)
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.s1.dim(), self.s2.dim())
    }

    pub fn dim(&self) -> usize {
        self.s1.dim() * self.s2.dim()
    }

    /// The 2⊗3 cell with closed-form thermal entries.
    pub fn is_half_one(&self) -> bool {
        self.s1 == Spin::HALF && self.s2 == Spin::ONE
    }

    /// `1/(kB T)`, with `+∞` at `T = 0`.
    pub fn beta(&self, temperature: f64) -> f64 {
        if temperature == 0.0 {
            f64::INFINITY
        } else {
            1.0 / (self.kb * temperature)
        }
    }

    /// The temperature unit `|J|/kB`.
    pub fn temperature_scale(&self) -> f64 {
        self.coupling.abs() / self.kb
    }

    fn require_half_one(&self, what: &str) -> Result<()> {
        if !self.is_half_one() {
            return Err(Error::Unsupported(format!(
                "{what} is only available for spin-1/2 ⊗ spin-1, got {} ⊗ {}",
                self.s1, self.s2
            )));
        }
        Ok(())
    }
}

/// `H = −J (sx⊗Sx + sy⊗Sy + sz⊗Sz)`.
pub fn build_hamiltonian(sys: &SpinSystem) -> ComplexMatrix {
    let a = SpinOperators::new(sys.s1);
    let b = SpinOperators::new(sys.s2);
    let mut dot = ComplexMatrix::zeros(sys.dim());
    for (x, y) in a.components().into_iter().zip(b.components()) {
        dot = &dot + &kron(x, y);
    }
    linalg::symmetrize(&dot.scale_real(-sys.coupling))
}

/// One eigenpair of the 2⊗3 Hamiltonian in the conventional `φ₁ … φ₆` labelling.
#[derive(Debug, Clone)]
pub struct LabelledEigenpair {
    pub label: usize,
    pub value: f64,
    pub vector: Vec<Complex64>,
}

/// Closed-form eigenpairs `φ₁ … φ₆`: `−J/2` for φ₁, φ₂, φ₅, φ₆ and `J` for φ₃, φ₄.
pub fn analytic_eigenpairs(sys: &SpinSystem) -> Result<Vec<LabelledEigenpair>> {
    sys.require_half_one("the analytic spectrum")?;
    let j = sys.coupling;
    let r3 = 3f64.sqrt();
    let r23 = (2.0f64 / 3.0).sqrt();
    let basis = |entries: &[(usize, f64)]| {
        let mut v = vec![Complex64::new(0.0, 0.0); 6];
        for &(i, c) in entries {
            v[i] = Complex64::new(c, 0.0);
        }
        v
    };
    // (α1, α0, α−1, β1, β0, β−1) = 0..6
    let vectors = [
        (-j / 2.0, basis(&[(5, 1.0)])),
        (-j / 2.0, basis(&[(0, 1.0)])),
        (j, basis(&[(2, -SQRT_2 / r3), (4, 1.0 / r3)])),
        (j, basis(&[(1, -r23 * SQRT_2 / 2.0), (3, r23)])),
        (-j / 2.0, basis(&[(2, r23 * SQRT_2 / 2.0), (4, r23)])),
        (-j / 2.0, basis(&[(1, SQRT_2 / r3), (3, 1.0 / r3)])),
    ];
    Ok(vectors
        .into_iter()
        .enumerate()
        .map(|(k, (value, vector))| LabelledEigenpair {
            label: k + 1,
            value,
            vector,
        })
        .collect())
}

/// The closed-form spectrum as a [`SpectralDecomposition`], sorted ascending.
pub fn analytic_spectrum_2x3(sys: &SpinSystem) -> Result<SpectralDecomposition> {
    let mut pairs = analytic_eigenpairs(sys)?;
    pairs.sort_by(|a, b| a.value.total_cmp(&b.value));
    Ok(SpectralDecomposition {
        eigenvalues: pairs.iter().map(|p| p.value).collect(),
        eigenvectors: pairs.into_iter().map(|p| p.vector).collect(),
    })
}

/// Thermal entries of the 2⊗3 state before normalization:
/// `v = e^{βJ/2}`, `x = (e^{−βJ} + 2e^{βJ/2})/3`, `y = (2e^{−βJ} + e^{βJ/2})/3`,
/// `w = (√2/3)(e^{βJ/2} − e^{−βJ})` and `Z = 4e^{βJ/2} + 2e^{−βJ}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GibbsEntries {
    pub v: f64,
    pub x: f64,
    pub y: f64,
    pub w: f64,
    pub z: f64,
}

impl GibbsEntries {
    pub fn new(beta: f64, coupling: f64) -> Self {
        let quartet = (beta * coupling / 2.0).exp();
        let doublet = (-beta * coupling).exp();
        Self {
            v: quartet,
            x: (doublet + 2.0 * quartet) / 3.0,
            y: (2.0 * doublet + quartet) / 3.0,
            w: SQRT_2 / 3.0 * (quartet - doublet),
            z: 4.0 * quartet + 2.0 * doublet,
        }
    }

    pub fn is_finite(&self) -> bool {
        [self.v, self.x, self.y, self.w, self.z]
            .iter()
            .all(|c| c.is_finite())
    }

    pub fn normalized(&self) -> NormalizedEntries {
        NormalizedEntries {
            v: self.v / self.z,
            x: self.x / self.z,
            y: self.y / self.z,
            w: self.w / self.z,
        }
    }
}

/// Entries `(v, x, y, w)/Z` of a trace-one density matrix with the 2⊗3 thermal pattern
/// `diag(v, x, y, y, x, v)` plus `w` at `(α0, β1)` and `(α−1, β0)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NormalizedEntries {
    pub v: f64,
    pub x: f64,
    pub y: f64,
    pub w: f64,
}

impl NormalizedEntries {
    /// Normalized thermal entries, evaluated without overflow for any `β ∈ [0, ∞]`.
    pub fn thermal(beta: f64, coupling: f64) -> Self {
        let (quartet, doublet) = if beta.is_infinite() {
            match coupling.partial_cmp(&0.0) {
                Some(std::cmp::Ordering::Less) => (0.0, 1.0),
                Some(std::cmp::Ordering::Greater) => (1.0, 0.0),
                _ => (1.0, 1.0),
            }
        } else {
            let eq = beta * coupling / 2.0;
            let ed = -beta * coupling;
            let m = eq.max(ed);
            ((eq - m).exp(), (ed - m).exp())
        };
        let z = 4.0 * quartet + 2.0 * doublet;
        Self {
            v: quartet / z,
            x: (doublet + 2.0 * quartet) / (3.0 * z),
            y: (2.0 * doublet + quartet) / (3.0 * z),
            w: SQRT_2 / 3.0 * (quartet - doublet) / z,
        }
    }

    pub fn trace(&self) -> f64 {
        2.0 * (self.v + self.x + self.y)
    }

    pub fn to_density_matrix(&self) -> ComplexMatrix {
        let mut rho =
            ComplexMatrix::from_real_diagonal(&[self.v, self.x, self.y, self.y, self.x, self.v]);
        let w = Complex64::new(self.w, 0.0);
        for (i, j) in [(1, 3), (2, 4)] {
            rho[(i, j)] = w;
            rho[(j, i)] = w;
        }
        rho
    }

    /// Hilbert–Schmidt distance between two pattern states:
    /// `√(2Δv² + 2Δx² + 2Δy² + 4Δw²)`.
    pub fn hs_distance(&self, other: &Self) -> f64 {
        let dv = self.v - other.v;
        let dx = self.x - other.x;
        let dy = self.y - other.y;
        let dw = self.w - other.w;
        (2.0 * dv * dv + 2.0 * dx * dx + 2.0 * dy * dy + 4.0 * dw * dw).sqrt()
    }
}

/// A normalized Gibbs state `ρ = e^{−βH}/Z` at one temperature.
#[derive(Debug, Clone)]
pub struct ThermalState {
    pub system: SpinSystem,
    pub temperature: f64,
    /// `+∞` at `T = 0`.
    pub beta: f64,
    /// `Tr e^{−βH}`; `None` when the state was taken on the ground-space path.
    pub partition_function: Option<f64>,
    pub rho: ComplexMatrix,
    /// Unnormalized 2⊗3 entries, when representable in double precision.
    pub closed_form: Option<GibbsEntries>,
    /// Normalized 2⊗3 entries (present for every 2⊗3 state).
    pub normalized: Option<NormalizedEntries>,
}

impl ThermalState {
    /// True if `rho` was built as the ground-space mixture.
    pub fn is_ground_state(&self) -> bool {
        self.partition_function.is_none()
    }
}

fn ground_projector(eig: &SpectralDecomposition, scale: f64) -> ComplexMatrix {
    let e0 = eig.eigenvalues[0];
    let tol = DEGENERACY_TOL * scale.max(1.0);
    let degeneracy = eig.eigenvalues.iter().filter(|&&e| e - e0 <= tol).count();
    let weight = 1.0 / degeneracy as f64;
    eig.map(|e| if e - e0 <= tol { weight } else { 0.0 })
}

/// Thermal state at temperature `T ≥ 0`.
///
/// `T = 0`, and any `T` with `β|J|` above [`BETA_J_CLAMP`], gives the uniform
/// mixture over the ground space.
pub fn gibbs_state(sys: &SpinSystem, temperature: f64) -> Result<ThermalState> {
    if temperature.is_nan() || temperature < 0.0 || temperature.is_infinite() {
        return Err(Error::Domain(format!(
            "temperature must be finite and non-negative, got {temperature}"
        )));
    }
    let h = build_hamiltonian(sys);
    let eig = hermitian_eigendecompose(&h)?;
    let beta = sys.beta(temperature);
    let j_abs = sys.coupling.abs();

    let (rho, partition_function) = if beta.is_infinite() || beta * j_abs > BETA_J_CLAMP {
        (ground_projector(&eig, j_abs), None)
    } else {
        let e0 = eig.eigenvalues[0];
        let shifted: f64 = eig
            .eigenvalues
            .iter()
            .map(|e| (-beta * (e - e0)).exp())
            .sum();
        let rho = eig.map(|e| (-beta * (e - e0)).exp() / shifted);
        (rho, Some(shifted * (-beta * e0).exp()))
    };
    let rho = linalg::symmetrize(&rho);

    let (closed_form, normalized) = if sys.is_half_one() {
        let raw = GibbsEntries::new(beta, sys.coupling);
        let raw = (temperature > 0.0 && raw.is_finite()).then_some(raw);
        (raw, Some(NormalizedEntries::thermal(beta, sys.coupling)))
    } else {
        (None, None)
    };

    Ok(ThermalState {
        system: *sys,
        temperature,
        beta,
        partition_function,
        rho,
        closed_form,
        normalized,
    })
}

/// `Z = Tr e^{−βH}` for `T > 0`. Uses `4e^{βJ/2} + 2e^{−βJ}` for the 2⊗3 cell.
pub fn partition_function(sys: &SpinSystem, temperature: f64) -> Result<f64> {
    check_positive_temperature(temperature)?;
    if sys.is_half_one() {
        Ok(GibbsEntries::new(sys.beta(temperature), sys.coupling).z)
    } else {
        partition_function_numeric(sys, temperature)
    }
}

/// `Z` as the trace of the spectral matrix exponential, for any spins.
pub fn partition_function_numeric(sys: &SpinSystem, temperature: f64) -> Result<f64> {
    check_positive_temperature(temperature)?;
    let beta = sys.beta(temperature);
    let h = build_hamiltonian(sys);
    Ok(linalg::hermitian_function(&h, |e| (-beta * e).exp())?
        .trace()
        .re)
}

fn check_positive_temperature(temperature: f64) -> Result<()> {
    if temperature.is_nan() || temperature <= 0.0 || temperature.is_infinite() {
        return Err(Error::Domain(format!(
            "partition function needs a finite positive temperature, got {temperature}"
        )));
    }
    Ok(())
}
