//! Partial transposition, the PPT criterion and the Hilbert–Schmidt distance measure.
//!
//! For the spin-1/2 ⊗ spin-1 cell, positivity of the partial transpose is
//! necessary and sufficient for separability. The partial transpose of the
//! thermal state is block diagonal: `[[v, w], [w, x]]` twice and `y` twice, so its
//! smallest eigenvalue is `½(v + x − √((v − x)² + 4w²))` and it turns negative
//! exactly when `vx < w²`, i.e. below `T_E = 3|J| / (2 kB ln 4)`.
//!
//! The entanglement of a state below `T_E` is its Hilbert–Schmidt distance to
//! the thermal state at `T_E`. [`boundary_distance_oracle`] checks by brute
//! force that no other state on the thermal curve, or in the wider family of
//! same-pattern states on the separability boundary, is closer.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{hermitian_eigendecompose, hs_norm_distance, ComplexMatrix};
use crate::model::{gibbs_state, NormalizedEntries, SpinSystem, ThermalState};

/// Partial-transpose eigenvalues above `-NEGATIVITY_FLOOR` are treated as non-negative.
pub const NEGATIVITY_FLOOR: f64 = 1e-14;

/// Bracket for the generic-spin root search, in units of `|J|/kB`.
pub const BISECTION_BRACKET: (f64, f64) = (1e-6, 50.0);
const BISECTION_SCAN_POINTS: usize = 200;
const BISECTION_MAX_ITER: usize = 200;

/// Which tensor factor to transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subsystem {
    A,
    B,
}

/// Partial transpose of a bipartite operator on `C^dim_a ⊗ C^dim_b`.
///
/// For subsystem `A` the entry at `((i,k),(j,l))` moves to `((j,k),(i,l))`.
pub fn partial_transpose(
    rho: &ComplexMatrix,
    dim_a: usize,
    dim_b: usize,
    subsystem: Subsystem,
) -> Result<ComplexMatrix> {
    if dim_a == 0 || dim_b == 0 || rho.dim() != dim_a * dim_b {
        return Err(Error::Dimension(format!(
            "cannot split a {}x{} matrix as {dim_a} ⊗ {dim_b}",
            rho.dim(),
            rho.dim()
        )));
    }
    let mut out = ComplexMatrix::zeros(rho.dim());
    for i in 0..dim_a {
        for j in 0..dim_a {
            for k in 0..dim_b {
                for l in 0..dim_b {
                    let src = rho[(i * dim_b + k, j * dim_b + l)];
                    let (row, col) = match subsystem {
                        Subsystem::A => (j * dim_b + k, i * dim_b + l),
                        Subsystem::B => (i * dim_b + l, j * dim_b + k),
                    };
                    out[(row, col)] = src;
                }
            }
        }
    }
    Ok(out)
}

/// Eigenvalues (ascending) of the partial transpose over subsystem `A`.
pub fn ppt_spectrum(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<Vec<f64>> {
    let pt = partial_transpose(rho, dim_a, dim_b, Subsystem::A)?;
    Ok(hermitian_eigendecompose(&pt)?.eigenvalues)
}

pub fn min_ppt_eigenvalue(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    Ok(ppt_spectrum(rho, dim_a, dim_b)?[0])
}

/// Sum of the magnitudes of the negative partial-transpose eigenvalues.
pub fn negativity(rho: &ComplexMatrix, dim_a: usize, dim_b: usize) -> Result<f64> {
    Ok(negativity_of_spectrum(&ppt_spectrum(rho, dim_a, dim_b)?))
}

pub fn negativity_of_spectrum(spectrum: &[f64]) -> f64 {
    spectrum
        .iter()
        .filter(|&&l| l < -NEGATIVITY_FLOOR)
        .fold(0.0, |acc, l| acc - l)
}

/// Partial-transpose spectrum of a 2⊗3 pattern state, ascending:
/// `λ∓ = ½(v + x ∓ √((v − x)² + 4w²))` each twice, and `y` twice.
pub fn ppt_spectrum_from_entries(e: &NormalizedEntries) -> [f64; 6] {
    let root = ((e.v - e.x).powi(2) + 4.0 * e.w * e.w).sqrt();
    let lower = 0.5 * (e.v + e.x - root);
    let upper = 0.5 * (e.v + e.x + root);
    let mut out = [lower, lower, upper, upper, e.y, e.y];
    out.sort_by(f64::total_cmp);
    out
}

/// Closed-form partial-transpose spectrum of a 2⊗3 thermal state.
pub fn ppt_spectrum_closed_form(state: &ThermalState) -> Result<[f64; 6]> {
    let entries = state.normalized.as_ref().ok_or_else(|| {
        Error::Unsupported(
            "closed-form partial-transpose spectrum needs a spin-1/2 ⊗ spin-1 state".into(),
        )
    })?;
    Ok(ppt_spectrum_from_entries(entries))
}

/// Smallest partial-transpose eigenvalue of the thermal state at `T`.
pub fn min_ppt_eigenvalue_at(sys: &SpinSystem, temperature: f64) -> Result<f64> {
    let state = gibbs_state(sys, temperature)?;
    let (da, db) = sys.dims();
    min_ppt_eigenvalue(&state.rho, da, db)
}

/// `T_E = 3|J| / (2 kB ln 4)` for the 2⊗3 cell.
fn closed_form_critical_temperature(sys: &SpinSystem) -> f64 {
    3.0 * sys.coupling.abs() / (2.0 * sys.kb * 4f64.ln())
}

/// Critical entanglement temperature, or `None` if the cell is never entangled.
///
/// Closed form for spin-1/2 ⊗ spin-1; bisection on the smallest
/// partial-transpose eigenvalue otherwise.
pub fn critical_temperature(sys: &SpinSystem) -> Result<Option<f64>> {
    if sys.is_half_one() {
        if sys.coupling < 0.0 {
            Ok(Some(closed_form_critical_temperature(sys)))
        } else {
            Ok(None)
        }
    } else {
        bisect_critical_temperature(sys)
    }
}

/// Locates the sign change of the smallest partial-transpose eigenvalue in `T`.
///
/// Scans 200 points of `[1e-6, 50]·|J|/kB` for the first bracket where the
/// eigenvalue goes from negative to non-negative, then bisects it down to a
/// width of `1e-13·|J|/kB`.
pub fn bisect_critical_temperature(sys: &SpinSystem) -> Result<Option<f64>> {
    if sys.coupling == 0.0 {
        return Ok(None);
    }
    let scale = sys.temperature_scale();
    let (lo, hi) = (BISECTION_BRACKET.0 * scale, BISECTION_BRACKET.1 * scale);
    let f = |t: f64| min_ppt_eigenvalue_at(sys, t);

    let step = (hi - lo) / (BISECTION_SCAN_POINTS - 1) as f64;
    let mut prev_t = lo;
    let mut prev_f = f(lo)?;
    let mut bracket = None;
    for k in 1..BISECTION_SCAN_POINTS {
        let t = lo + step * k as f64;
        let ft = f(t)?;
        if prev_f < 0.0 && ft >= 0.0 {
            bracket = Some((prev_t, t));
            break;
        }
        prev_t = t;
        prev_f = ft;
    }
    let Some((mut a, mut b)) = bracket else {
        return Ok(None);
    };

    let width = 1e-13 * scale;
    for _ in 0..BISECTION_MAX_ITER {
        if b - a <= width {
            break;
        }
        let mid = 0.5 * (a + b);
        if f(mid)? < 0.0 {
            a = mid;
        } else {
            b = mid;
        }
    }
    Ok(Some(0.5 * (a + b)))
}

/// Critical temperature `|J| / (kB ln 3)` of the two-qubit isotropic Heisenberg dimer.
pub fn xxx_qubit_critical_temperature(coupling: f64, kb: f64) -> Result<f64> {
    if coupling == 0.0 || !coupling.is_finite() {
        return Err(Error::Domain(
            "two-qubit critical temperature needs J ≠ 0".into(),
        ));
    }
    if kb.is_nan() || kb <= 0.0 {
        return Err(Error::Domain(format!("kB must be positive, got {kb}")));
    }
    Ok(coupling.abs() / (kb * 3f64.ln()))
}

fn check_temperature(temperature: f64) -> Result<()> {
    if temperature.is_nan() || temperature < 0.0 || temperature.is_infinite() {
        return Err(Error::Domain(format!(
            "temperature must be finite and non-negative, got {temperature}"
        )));
    }
    Ok(())
}

/// Hilbert–Schmidt distance from the 2⊗3 thermal state at `T` to the one at `T_E`.
///
/// Zero for `T ≥ T_E` and for `J ≥ 0`.
pub fn hs_entanglement(sys: &SpinSystem, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    if !sys.is_half_one() {
        return Err(Error::Unsupported(format!(
            "closed-form entanglement needs spin-1/2 ⊗ spin-1, got {} ⊗ {}",
            sys.s1, sys.s2
        )));
    }
    let Some(t_e) = critical_temperature(sys)? else {
        return Ok(0.0);
    };
    if temperature >= t_e {
        return Ok(0.0);
    }
    let here = NormalizedEntries::thermal(sys.beta(temperature), sys.coupling);
    let boundary = NormalizedEntries::thermal(sys.beta(t_e), sys.coupling);
    Ok(here.hs_distance(&boundary))
}

/// Same measure for arbitrary spins: `‖ρ(T) − ρ(T_E)‖_HS` with a bisected `T_E`.
pub fn hs_entanglement_numeric(sys: &SpinSystem, temperature: f64) -> Result<f64> {
    check_temperature(temperature)?;
    let Some(t_e) = bisect_critical_temperature(sys)? else {
        return Ok(0.0);
    };
    distance_to_boundary_state(sys, temperature, t_e)
}

fn distance_to_boundary_state(sys: &SpinSystem, temperature: f64, t_e: f64) -> Result<f64> {
    if temperature >= t_e {
        return Ok(0.0);
    }
    let here = gibbs_state(sys, temperature)?;
    let boundary = gibbs_state(sys, t_e)?;
    hs_norm_distance(&here.rho, &boundary.rho)
}

/// Entanglement diagnostics of one thermal state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EntanglementReport {
    #[serde(rename = "T")]
    pub temperature: f64,
    pub ppt_min_eigenvalue: f64,
    pub negativity: f64,
    pub entanglement_hs: f64,
    #[serde(rename = "T_E")]
    pub critical_temperature: Option<f64>,
}

/// Builds the report for one temperature.
pub fn entanglement_report(sys: &SpinSystem, temperature: f64) -> Result<EntanglementReport> {
    let t_e = critical_temperature(sys)?;
    report_with_critical_temperature(sys, temperature, t_e)
}

/// Like [`entanglement_report`], reusing an already computed `T_E`.
pub fn report_with_critical_temperature(
    sys: &SpinSystem,
    temperature: f64,
    t_e: Option<f64>,
) -> Result<EntanglementReport> {
    check_temperature(temperature)?;
    let state = gibbs_state(sys, temperature)?;
    let (spectrum, entanglement_hs) = if sys.is_half_one() {
        (
            ppt_spectrum_closed_form(&state)?.to_vec(),
            hs_entanglement(sys, temperature)?,
        )
    } else {
        let (da, db) = sys.dims();
        let hs = match t_e {
            Some(t_e) => distance_to_boundary_state(sys, temperature, t_e)?,
            None => 0.0,
        };
        (ppt_spectrum(&state.rho, da, db)?, hs)
    };
    Ok(EntanglementReport {
        temperature,
        ppt_min_eigenvalue: spectrum[0],
        negativity: negativity_of_spectrum(&spectrum),
        entanglement_hs,
        critical_temperature: t_e,
    })
}

/// Closest state found within one candidate family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FamilyMinimum {
    pub distance: f64,
    pub entries: NormalizedEntries,
    /// Temperature of the minimizer, for the thermal family.
    pub temperature: Option<f64>,
    /// Grid spacing of the scan (temperature step or entry step).
    pub resolution: f64,
}

/// Minima over both separable candidate families.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleResult {
    pub thermal: FamilyMinimum,
    pub pattern: FamilyMinimum,
}

impl OracleResult {
    pub fn distance(&self) -> f64 {
        self.thermal.distance.min(self.pattern.distance)
    }
}

fn oracle_preconditions(sys: &SpinSystem, temperature: f64, grid_n: usize) -> Result<f64> {
    check_temperature(temperature)?;
    if !sys.is_half_one() {
        return Err(Error::Unsupported(
            "the boundary oracle covers spin-1/2 ⊗ spin-1 only".into(),
        ));
    }
    if grid_n < 100 {
        return Err(Error::Domain(format!(
            "oracle grid needs at least 100 points, got {grid_n}"
        )));
    }
    let t_e = critical_temperature(sys)?
        .ok_or_else(|| Error::Domain("no entangled phase: J must be negative".into()))?;
    if temperature >= t_e {
        return Err(Error::Domain(format!(
            "oracle needs T < T_E = {t_e}, got T = {temperature}"
        )));
    }
    Ok(t_e)
}

/// Minimum distance from `ρ(T)` to `ρ(T_s)` over `grid_n` temperatures spread
/// linearly on `[T_E, 100·T_E]`. Distances use full density matrices.
pub fn thermal_family_minimum(
    sys: &SpinSystem,
    temperature: f64,
    grid_n: usize,
) -> Result<FamilyMinimum> {
    let t_e = oracle_preconditions(sys, temperature, grid_n)?;
    let target = gibbs_state(sys, temperature)?.rho;
    let step = 99.0 * t_e / (grid_n - 1) as f64;

    let candidates: Vec<(f64, f64)> = (0..grid_n)
        .into_par_iter()
        .map(|k| {
            let t_s = if k == 0 { t_e } else { t_e + step * k as f64 };
            let rho = gibbs_state(sys, t_s)?.rho;
            Ok((hs_norm_distance(&target, &rho)?, t_s))
        })
        .collect::<Result<_>>()?;
    // first minimum wins on ties, so the scan is deterministic
    let (distance, t_s) = candidates
        .into_iter()
        .fold((f64::INFINITY, f64::NAN), |best, c| {
            if c.0 < best.0 {
                c
            } else {
                best
            }
        });
    Ok(FamilyMinimum {
        distance,
        entries: NormalizedEntries::thermal(sys.beta(t_s), sys.coupling),
        temperature: Some(t_s),
        resolution: step,
    })
}

/// Minimum distance from `ρ(T)` to trace-one states with the thermal matrix
/// pattern that sit on the separability boundary `v·x = w²` and are positive.
///
/// Scans `v` on `grid_n` points of `[0, ½]` and, for each, `x` on `grid_n`
/// points of `[0, ½ − v]`; `y = ½ − v − x` and `w = ±√(vx)` with the sign of the
/// target's `w`.
pub fn pattern_family_minimum(
    sys: &SpinSystem,
    temperature: f64,
    grid_n: usize,
) -> Result<FamilyMinimum> {
    oracle_preconditions(sys, temperature, grid_n)?;
    let target = NormalizedEntries::thermal(sys.beta(temperature), sys.coupling);
    let sign = if target.w < 0.0 { -1.0 } else { 1.0 };
    let last = (grid_n - 1) as f64;

    let best = (0..grid_n)
        .into_par_iter()
        .map(|i| {
            let v = 0.5 * i as f64 / last;
            let mut best: Option<(f64, NormalizedEntries)> = None;
            for k in 0..grid_n {
                let x = (0.5 - v) * k as f64 / last;
                let y = (0.5 - v - x).max(0.0);
                // blocks [[x, w], [w, y]] are positive iff x·y ≥ w² = v·x
                if x > 0.0 && y < v {
                    continue;
                }
                let cand = NormalizedEntries {
                    v,
                    x,
                    y,
                    w: sign * (v * x).sqrt(),
                };
                let d = target.hs_distance(&cand);
                if best.is_none_or(|(bd, _)| d < bd) {
                    best = Some((d, cand));
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .fold(None, |acc: Option<(f64, NormalizedEntries)>, c| match acc {
            Some(a) if a.0 <= c.0 => Some(a),
            _ => Some(c),
        })
        .expect("grid contains the product state v = x = 0");

    Ok(FamilyMinimum {
        distance: best.0,
        entries: best.1,
        temperature: None,
        resolution: 0.5 / last,
    })
}

/// Brute-force search for the separable state closest to `ρ(T)`, over the
/// thermal family above `T_E` and over same-pattern boundary states.
pub fn boundary_distance_oracle(
    sys: &SpinSystem,
    temperature: f64,
    grid_n: usize,
) -> Result<OracleResult> {
    Ok(OracleResult {
        thermal: thermal_family_minimum(sys, temperature, grid_n)?,
        pattern: pattern_family_minimum(sys, temperature, grid_n)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::kron;
    use crate::spin::Spin;
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;
    use proptest::prelude::*;
    use std::f64::consts::SQRT_2;

    fn sys(j: f64) -> SpinSystem {
        SpinSystem::half_one(j).unwrap()
    }

    fn t_e(j: f64) -> f64 {
        3.0 * j.abs() / (2.0 * 4f64.ln())
    }

    /// Ground-doublet state at T = 0 for J < 0, written out by hand.
    fn zero_temperature_rho() -> ComplexMatrix {
        NormalizedEntries {
            v: 0.0,
            x: 1.0 / 6.0,
            y: 1.0 / 3.0,
            w: -SQRT_2 / 6.0,
        }
        .to_density_matrix()
    }

    #[test]
    fn maximally_mixed_is_fixed() {
        let rho = ComplexMatrix::identity(6).scale_real(1.0 / 6.0);
        assert_eq!(partial_transpose(&rho, 2, 3, Subsystem::A).unwrap(), rho);
        assert_eq!(negativity(&rho, 2, 3).unwrap(), 0.0);
    }

    #[test]
    fn product_state_transposes_first_factor() {
        let a = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(0.7, 0.0), Complex64::new(0.1, 0.2)],
            vec![Complex64::new(0.1, -0.2), Complex64::new(0.3, 0.0)],
        ])
        .unwrap();
        let b = ComplexMatrix::from_rows(vec![
            vec![
                Complex64::new(0.5, 0.0),
                Complex64::new(0.0, 0.1),
                Complex64::new(0.05, 0.0),
            ],
            vec![
                Complex64::new(0.0, -0.1),
                Complex64::new(0.3, 0.0),
                Complex64::new(0.0, 0.0),
            ],
            vec![
                Complex64::new(0.05, 0.0),
                Complex64::new(0.0, 0.0),
                Complex64::new(0.2, 0.0),
            ],
        ])
        .unwrap();
        let rho = kron(&a, &b);
        let pt = partial_transpose(&rho, 2, 3, Subsystem::A).unwrap();
        assert!(pt.approx_eq(&kron(&a.transpose(), &b), 1e-15));
        let ptb = partial_transpose(&rho, 2, 3, Subsystem::B).unwrap();
        assert!(ptb.approx_eq(&kron(&a, &b.transpose()), 1e-15));
        assert!(min_ppt_eigenvalue(&rho, 2, 3).unwrap() >= -1e-14);
    }

    #[test]
    fn dimension_mismatch() {
        let rho = ComplexMatrix::identity(6);
        assert!(matches!(
            partial_transpose(&rho, 2, 2, Subsystem::A),
            Err(Error::Dimension(_))
        ));
        assert!(matches!(
            partial_transpose(&rho, 0, 6, Subsystem::A),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn zero_temperature_ppt_minimum() {
        // block [[0, −√2/6], [−√2/6, 1/6]] has eigenvalues −1/6 and 1/3
        let numeric = min_ppt_eigenvalue(&zero_temperature_rho(), 2, 3).unwrap();
        assert_abs_diff_eq!(numeric, -1.0 / 6.0, epsilon = 1e-14);
        let st = gibbs_state(&sys(-1.0), 0.0).unwrap();
        let closed = ppt_spectrum_closed_form(&st).unwrap();
        assert_abs_diff_eq!(closed[0], -1.0 / 6.0, epsilon = 1e-14);
        assert_abs_diff_eq!(
            negativity(&st.rho, 2, 3).unwrap(),
            1.0 / 3.0,
            epsilon = 1e-12
        );
    }

    #[test]
    fn closed_form_spectrum_at_and_above_t_e() {
        let at = gibbs_state(&sys(-1.0), t_e(-1.0)).unwrap();
        let eig = ppt_spectrum_closed_form(&at).unwrap();
        assert!(eig[0].abs() < 1e-10);
        assert_abs_diff_eq!(eig.iter().sum::<f64>(), 1.0, epsilon = 1e-12);
        assert!(negativity(&at.rho, 2, 3).unwrap() < 1e-9);

        let above = gibbs_state(&sys(-1.0), 2.0 * t_e(-1.0)).unwrap();
        assert!(ppt_spectrum_closed_form(&above)
            .unwrap()
            .iter()
            .all(|&l| l > 0.0));
    }

    #[test]
    fn closed_form_needs_half_one() {
        let other = SpinSystem::half_spin(Spin::from_twice(3).unwrap(), -1.0).unwrap();
        let st = gibbs_state(&other, 1.0).unwrap();
        assert!(matches!(
            ppt_spectrum_closed_form(&st),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            hs_entanglement(&other, 0.1),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn closed_form_matches_numeric_spectrum() {
        for j in [-2.0, -1.0, -0.5, 0.5, 1.0] {
            for t in [0.0, 0.01, 0.2, 1.0, 1.5, 30.0] {
                let st = gibbs_state(&sys(j), t).unwrap();
                let closed = ppt_spectrum_closed_form(&st).unwrap();
                let numeric = ppt_spectrum(&st.rho, 2, 3).unwrap();
                for (a, b) in closed.iter().zip(&numeric) {
                    assert!(
                        (a - b).abs() < 1e-10,
                        "J={j} T={t}: {closed:?} vs {numeric:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn critical_temperatures() {
        assert_abs_diff_eq!(
            critical_temperature(&sys(-1.0)).unwrap().unwrap(),
            1.082021,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(
            critical_temperature(&sys(-2.0)).unwrap().unwrap(),
            2.164043,
            epsilon = 1e-6
        );
        assert_eq!(critical_temperature(&sys(1.0)).unwrap(), None);
        assert_eq!(critical_temperature(&sys(0.0)).unwrap(), None);
        let with_kb = sys(-1.0).with_kb(2.0).unwrap();
        assert_abs_diff_eq!(
            critical_temperature(&with_kb).unwrap().unwrap(),
            1.082021 / 2.0,
            epsilon = 1e-6
        );
    }

    #[test]
    fn bisection_agrees_with_closed_form() {
        for j in [-0.5, -1.0, -2.0] {
            let root = bisect_critical_temperature(&sys(j)).unwrap().unwrap();
            assert!((root - t_e(j)).abs() < 1e-9, "J={j}: {root}");
        }
        assert_eq!(bisect_critical_temperature(&sys(1.0)).unwrap(), None);
        assert_eq!(bisect_critical_temperature(&sys(0.0)).unwrap(), None);
    }

    #[test]
    fn qubit_dimer_temperature() {
        assert_abs_diff_eq!(
            xxx_qubit_critical_temperature(-1.0, 1.0).unwrap(),
            0.910239,
            epsilon = 1e-6
        );
        assert_abs_diff_eq!(
            xxx_qubit_critical_temperature(-2.0, 1.0).unwrap(),
            1.820478,
            epsilon = 1e-6
        );
        assert!(xxx_qubit_critical_temperature(-1.0, 1.0).unwrap() < t_e(-1.0));
        assert!(matches!(
            xxx_qubit_critical_temperature(0.0, 1.0),
            Err(Error::Domain(_))
        ));
        // the two-qubit case through the generic bisection
        let dimer = SpinSystem::new(Spin::HALF, Spin::HALF, -1.0, 1.0).unwrap();
        let root = bisect_critical_temperature(&dimer).unwrap().unwrap();
        assert!((root - 1.0 / 3f64.ln()).abs() < 1e-9);
    }

    #[test]
    fn entanglement_endpoints() {
        assert_eq!(hs_entanglement(&sys(-1.0), t_e(-1.0)).unwrap(), 0.0);
        let limit = 1.0 / 12f64.sqrt();
        assert_abs_diff_eq!(limit, 0.288675, epsilon = 1e-6);
        for j in [-0.5, -1.0, -2.0] {
            assert_abs_diff_eq!(
                hs_entanglement(&sys(j), 0.0).unwrap(),
                limit,
                epsilon = 1e-12
            );
            assert_abs_diff_eq!(
                hs_entanglement(&sys(j), 1e-6).unwrap(),
                limit,
                epsilon = 1e-12
            );
        }
        assert_eq!(hs_entanglement(&sys(1.0), 0.0).unwrap(), 0.0);
        assert!(matches!(
            hs_entanglement(&sys(-1.0), -1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn closed_form_distance_matches_matrix_distance() {
        let j = -1.0;
        for t in [0.0, 0.1, 0.5, 1.0] {
            let here = gibbs_state(&sys(j), t).unwrap().rho;
            let there = gibbs_state(&sys(j), t_e(j)).unwrap().rho;
            let d = hs_norm_distance(&here, &there).unwrap();
            assert!((d - hs_entanglement(&sys(j), t).unwrap()).abs() < 1e-10);
        }
    }

    #[test]
    fn entanglement_is_decreasing_below_t_e() {
        let te = t_e(-1.0);
        let values: Vec<f64> = (1..=200)
            .map(|k| hs_entanglement(&sys(-1.0), te * k as f64 / 200.0).unwrap())
            .collect();
        for w in values.windows(2) {
            assert!(w[1] < w[0] + 1e-12);
        }
        assert_eq!(*values.last().unwrap(), 0.0);
    }

    #[test]
    fn ferromagnet_is_ppt() {
        for k in 0..200 {
            let t = 1e-3 * (1e4f64).powf(k as f64 / 199.0);
            assert!(min_ppt_eigenvalue_at(&sys(1.0), t).unwrap() >= -1e-12);
        }
    }

    #[test]
    fn report_fields_are_consistent() {
        let t = t_e(-1.0);
        let on = entanglement_report(&sys(-1.0), t).unwrap();
        assert!(on.ppt_min_eigenvalue.abs() < 1e-10);
        assert_eq!(on.entanglement_hs, 0.0);
        let cold = entanglement_report(&sys(-1.0), 1e-3).unwrap();
        assert_abs_diff_eq!(cold.entanglement_hs, 0.288675, epsilon = 1e-6);
        assert_abs_diff_eq!(cold.negativity, 1.0 / 3.0, epsilon = 1e-9);
        let hot = entanglement_report(&sys(-1.0), 10.0).unwrap();
        assert_eq!(hot.negativity, 0.0);
        assert_eq!(hot.critical_temperature, Some(t));
    }

    #[test]
    fn negativity_and_entanglement_share_support() {
        let te = t_e(-1.0);
        for k in 0..300 {
            let t = 2.0 * te * k as f64 / 299.0;
            let r = entanglement_report(&sys(-1.0), t).unwrap();
            assert_eq!(
                r.negativity > 0.0,
                r.entanglement_hs > 0.0,
                "T = {t}: {r:?}"
            );
            assert_eq!(r.negativity > 0.0, r.ppt_min_eigenvalue < -NEGATIVITY_FLOOR);
        }
    }

    #[test]
    fn generic_spin_report_uses_numeric_path() {
        let s = SpinSystem::half_spin(Spin::from_twice(3).unwrap(), -1.0).unwrap();
        let r = entanglement_report(&s, 1e-3).unwrap();
        let te = r.critical_temperature.unwrap();
        assert!(te > t_e(-1.0));
        assert_abs_diff_eq!(
            r.entanglement_hs,
            hs_entanglement_numeric(&s, 1e-3).unwrap(),
            epsilon = 1e-14
        );
        assert!(r.entanglement_hs > 0.0);
    }

    #[test]
    fn thermal_family_minimizer_is_t_e() {
        let te = t_e(-1.0);
        let m = thermal_family_minimum(&sys(-1.0), 0.1, 1000).unwrap();
        assert!((m.temperature.unwrap() - te).abs() <= m.resolution);
        assert_abs_diff_eq!(
            m.distance,
            hs_entanglement(&sys(-1.0), 0.1).unwrap(),
            epsilon = 1e-10
        );
    }

    #[test]
    fn pattern_family_is_not_closer() {
        let o = boundary_distance_oracle(&sys(-1.0), 0.0, 400).unwrap();
        assert!(o.distance() <= 0.288675 + 1e-6);
        assert!(o.pattern.distance >= o.thermal.distance - 1e-9, "{o:?}");
        let near = 0.99 * t_e(-1.0);
        let o = boundary_distance_oracle(&sys(-1.0), near, 400).unwrap();
        assert!((o.distance() - hs_entanglement(&sys(-1.0), near).unwrap()).abs() < 1e-6);
    }

    #[test]
    fn oracle_preconditions_enforced() {
        let te = t_e(-1.0);
        assert!(matches!(
            thermal_family_minimum(&sys(-1.0), te, 100),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            thermal_family_minimum(&sys(-1.0), 0.1, 10),
            Err(Error::Domain(_))
        ));
        assert!(matches!(
            thermal_family_minimum(&sys(1.0), 0.1, 100),
            Err(Error::Domain(_))
        ));
    }

    fn density_matrix(dim: usize, raw: &[(f64, f64)]) -> ComplexMatrix {
        // ρ = G G† / Tr(G G†)
        let g = ComplexMatrix::from_vec(
            dim,
            raw.iter().map(|&(r, i)| Complex64::new(r, i)).collect(),
        )
        .unwrap();
        let gg = &g * &g.adjoint();
        let tr = gg.trace().re;
        gg.scale_real(1.0 / tr)
    }

    proptest! {
        #[test]
        fn partial_transpose_is_trace_preserving_involution(
            (da, db, raw) in (1usize..=3, 1usize..=4).prop_flat_map(|(a, b)| {
                (Just(a), Just(b), prop::collection::vec((-1.0..1.0f64, -1.0..1.0f64), (a * b) * (a * b)))
            })
        ) {
            prop_assume!(raw.iter().any(|&(r, i)| r != 0.0 || i != 0.0));
            let rho = density_matrix(da * db, &raw);
            for sub in [Subsystem::A, Subsystem::B] {
                let pt = partial_transpose(&rho, da, db, sub).unwrap();
                prop_assert_eq!(partial_transpose(&pt, da, db, sub).unwrap(), rho.clone());
                prop_assert!((pt.trace() - rho.trace()).norm() < 1e-12);
                prop_assert!(pt.hermiticity_deviation() < 1e-12);
            }
        }

        #[test]
        fn closed_form_ppt_tracks_numeric(t in 0.0..5.0f64, j in -2.0..2.0f64) {
            let st = gibbs_state(&sys(j), t).unwrap();
            let closed = ppt_spectrum_closed_form(&st).unwrap();
            let numeric = ppt_spectrum(&st.rho, 2, 3).unwrap();
            for (a, b) in closed.iter().zip(&numeric) {
                prop_assert!((a - b).abs() < 1e-10);
            }
        }
    }
}
