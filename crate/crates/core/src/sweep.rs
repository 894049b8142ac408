//! Temperature sweeps and the text/CSV/JSON renderings used by the command-line tool.

use std::fmt::{self, Write as _};
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::entanglement::{
    bisect_critical_temperature, critical_temperature, report_with_critical_temperature,
    xxx_qubit_critical_temperature, EntanglementReport,
};
use crate::error::{Error, Result};
use crate::linalg::hermitian_eigendecompose;
use crate::model::{analytic_eigenpairs, build_hamiltonian, SpinSystem};
use crate::spin::Spin;

pub const CSV_HEADER: &str = "T,ppt_min_eigenvalue,negativity,entanglement_hs,T_E";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Scale {
    #[default]
    Linear,
    Log,
}

impl FromStr for Scale {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "linear" | "lin" => Ok(Self::Linear),
            "log" => Ok(Self::Log),
            _ => Err(Error::InvalidConfig(format!(
                "unknown scale {s:?} (expected linear or log)"
            ))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            _ => Err(Error::InvalidConfig(format!(
                "unknown format {s:?} (expected csv or json)"
            ))),
        }
    }
}

/// A temperature sweep of the spin-1/2 ⊗ spin-`s2` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub coupling: f64,
    pub s2: Spin,
    pub kb: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub n_points: usize,
    pub scale: Scale,
    pub format: OutputFormat,
    /// `None` writes to standard output.
    pub output: Option<PathBuf>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            coupling: -1.0,
            s2: Spin::ONE,
            kb: 1.0,
            t_min: 0.0,
            t_max: 2.0,
            n_points: 201,
            scale: Scale::Linear,
            format: OutputFormat::Csv,
            output: None,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if !self.t_min.is_finite() || !self.t_max.is_finite() {
            return bad("temperature bounds must be finite".into());
        }
        if !(0.0 <= self.t_min && self.t_min < self.t_max) {
            return bad(format!(
                "need 0 <= t_min < t_max, got [{}, {}]",
                self.t_min, self.t_max
            ));
        }
        if self.n_points < 2 {
            return bad(format!("need at least 2 points, got {}", self.n_points));
        }
        if self.scale == Scale::Log && self.t_min <= 0.0 {
            return bad("log scale requires t_min > 0".into());
        }
        if !self.coupling.is_finite() {
            return bad(format!("J must be finite, got {}", self.coupling));
        }
        if !(self.kb > 0.0 && self.kb.is_finite()) {
            return bad(format!("kB must be positive, got {}", self.kb));
        }
        Ok(())
    }

    pub fn system(&self) -> Result<SpinSystem> {
        SpinSystem::new(Spin::HALF, self.s2, self.coupling, self.kb)
    }

    /// Grid temperatures in ascending order; the end points are hit exactly.
    pub fn temperatures(&self) -> Vec<f64> {
        let n = self.n_points;
        let last = (n - 1) as f64;
        (0..n)
            .map(|k| {
                if k == 0 {
                    return self.t_min;
                }
                if k == n - 1 {
                    return self.t_max;
                }
                let f = k as f64 / last;
                match self.scale {
                    Scale::Linear => self.t_min + (self.t_max - self.t_min) * f,
                    Scale::Log => (self.t_min.ln() + (self.t_max.ln() - self.t_min.ln()) * f).exp(),
                }
            })
            .collect()
    }
}

/// One report per grid temperature, ascending in `T`.
pub fn run_sweep(cfg: &SweepConfig) -> Result<Vec<EntanglementReport>> {
    cfg.validate()?;
    let sys = cfg.system()?;
    let t_e = critical_temperature(&sys)?;
    cfg.temperatures()
        .into_par_iter()
        .map(|t| report_with_critical_temperature(&sys, t, t_e))
        .collect()
}

/// Nine significant digits in scientific notation.
fn sig9(x: f64) -> String {
    format!("{x:.8e}")
}

pub fn to_csv(reports: &[EntanglementReport]) -> String {
    let mut out = String::with_capacity(64 * (reports.len() + 1));
    out.push_str(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let t_e = r.critical_temperature.map(sig9).unwrap_or_default();
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            sig9(r.temperature),
            sig9(r.ppt_min_eigenvalue),
            sig9(r.negativity),
            sig9(r.entanglement_hs),
            t_e
        );
    }
    out
}

pub fn to_json(reports: &[EntanglementReport]) -> Result<String> {
    let mut s = serde_json::to_string_pretty(reports)?;
    s.push('\n');
    Ok(s)
}

pub fn render(reports: &[EntanglementReport], format: OutputFormat) -> Result<String> {
    match format {
        OutputFormat::Csv => Ok(to_csv(reports)),
        OutputFormat::Json => to_json(reports),
    }
}

/// Writes `contents` to `path`, or to standard output when `path` is `None`.
pub fn emit(contents: &str, path: Option<&std::path::Path>) -> Result<()> {
    match path {
        Some(p) => std::fs::write(p, contents)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(contents.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(())
}

/// Runs the sweep and writes it in the configured format and destination.
pub fn run_and_write(cfg: &SweepConfig) -> Result<Vec<EntanglementReport>> {
    let reports = run_sweep(cfg)?;
    emit(&render(&reports, cfg.format)?, cfg.output.as_deref())?;
    Ok(reports)
}

/// Energy levels of the spin-1/2 ⊗ spin-`s2` Hamiltonian, rounded to 12 decimals.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumTable {
    pub coupling: f64,
    pub s2: Spin,
    /// Distinct eigenvalues, ascending, with multiplicities.
    pub levels: Vec<Level>,
    /// `φ₁ … φ₆` labels for spin-1.
    pub labelled: Vec<LabelledLevel>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Level {
    pub energy: f64,
    pub degeneracy: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LabelledLevel {
    pub label: usize,
    pub energy: f64,
}

pub fn spectrum_table(coupling: f64, s2: Spin) -> Result<SpectrumTable> {
    let sys = SpinSystem::half_spin(s2, coupling)?;
    let eig = hermitian_eigendecompose(&build_hamiltonian(&sys))?;
    let tol = 1e-8 * coupling.abs().max(1.0);
    let levels = eig
        .degeneracies(tol)
        .into_iter()
        .map(|(energy, degeneracy)| Level {
            energy: round12(energy),
            degeneracy,
        })
        .collect();
    let labelled = if sys.is_half_one() {
        analytic_eigenpairs(&sys)?
            .into_iter()
            .map(|p| LabelledLevel {
                label: p.label,
                energy: round12(p.value),
            })
            .collect()
    } else {
        Vec::new()
    };
    Ok(SpectrumTable {
        coupling,
        s2,
        levels,
        labelled,
    })
}

fn round12(x: f64) -> f64 {
    // + 0.0 turns -0.0 into 0.0
    (x * 1e12).round() / 1e12 + 0.0
}

impl fmt::Display for SpectrumTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "spin-1/2 ⊗ spin-{}  J = {}", self.s2, self.coupling)?;
        writeln!(f, "{:>16}  {:>10}", "energy", "degeneracy")?;
        for level in &self.levels {
            writeln!(f, "{:>16.9}  {:>10}", level.energy, level.degeneracy)?;
        }
        if !self.labelled.is_empty() {
            writeln!(f)?;
            for l in &self.labelled {
                writeln!(f, "  λ{} = {:.9}", l.label, l.energy)?;
            }
        }
        Ok(())
    }
}

/// Single-temperature report for the spin-1/2 ⊗ spin-`s2` cell.
pub fn point_report(
    coupling: f64,
    temperature: f64,
    s2: Spin,
    kb: f64,
) -> Result<EntanglementReport> {
    let sys = SpinSystem::new(Spin::HALF, s2, coupling, kb)?;
    let t_e = critical_temperature(&sys)?;
    report_with_critical_temperature(&sys, temperature, t_e)
}

pub fn format_report(r: &EntanglementReport) -> String {
    let t_e = r
        .critical_temperature
        .map(|t| format!("{t:.9}"))
        .unwrap_or_else(|| "none".into());
    format!(
        "T                   = {:.9}\n\
         ppt_min_eigenvalue  = {:.9e}\n\
         negativity          = {:.9e}\n\
         entanglement_hs     = {:.9}\n\
         T_E                 = {t_e}\n",
        r.temperature, r.ppt_min_eigenvalue, r.negativity, r.entanglement_hs
    )
}

/// Critical temperatures of one cell, with the two-qubit dimer for comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalTemperatures {
    pub coupling: f64,
    pub kb: f64,
    pub s2: Spin,
    /// Closed form for spin-1, bisection otherwise.
    pub t_e: Option<f64>,
    pub t_e_bisection: Option<f64>,
    pub t_e_qubit_dimer: Option<f64>,
}

pub fn critical_temperatures(coupling: f64, s2: Spin, kb: f64) -> Result<CriticalTemperatures> {
    let sys = SpinSystem::new(Spin::HALF, s2, coupling, kb)?;
    let t_e = critical_temperature(&sys)?;
    let t_e_bisection = bisect_critical_temperature(&sys)?;
    let t_e_qubit_dimer = if coupling < 0.0 {
        Some(xxx_qubit_critical_temperature(coupling, kb)?)
    } else {
        None
    };
    Ok(CriticalTemperatures {
        coupling,
        kb,
        s2,
        t_e,
        t_e_bisection,
        t_e_qubit_dimer,
    })
}

impl fmt::Display for CriticalTemperatures {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |t: Option<f64>| {
            t.map(|t| format!("{t:.9}"))
                .unwrap_or_else(|| "none".into())
        };
        writeln!(
            f,
            "spin-1/2 ⊗ spin-{}  J = {}  kB = {}",
            self.s2, self.coupling, self.kb
        )?;
        writeln!(f, "T_E               = {}", show(self.t_e))?;
        writeln!(f, "T_E (bisection)   = {}", show(self.t_e_bisection))?;
        writeln!(f, "T_E (qubit dimer) = {}", show(self.t_e_qubit_dimer))
    }
}
