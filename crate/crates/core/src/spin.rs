//! Spin quantum numbers and spin operator matrices.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// A half-integer spin quantum number, stored as `2s`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "f64", into = "f64")]
pub struct Spin {
    twice: u32,
}

impl Spin {
    pub const HALF: Spin = Spin { twice: 1 };
    pub const ONE: Spin = Spin { twice: 2 };

    /// Spin from `2s`. Fails for `twice == 0`.
    pub fn from_twice(twice: u32) -> Result<Self> {
        if twice == 0 {
            return Err(Error::Domain("spin quantum number must be positive".into()));
        }
        Ok(Self { twice })
    }

    /// Spin from its value; `2s` must be a positive integer.
    pub fn new(s: f64) -> Result<Self> {
        let twice = 2.0 * s;
        if !twice.is_finite() || twice < 0.5 || (twice - twice.round()).abs() > 1e-9 || twice > 1e6
        {
            return Err(Error::Domain(format!(
                "2s must be a positive integer, got s = {s}"
            )));
        }
        Self::from_twice(twice.round() as u32)
    }

    pub fn twice(self) -> u32 {
        self.twice
    }

    pub fn value(self) -> f64 {
        f64::from(self.twice) / 2.0
    }

    /// Multiplet dimension `2s + 1`.
    pub fn dim(self) -> usize {
        self.twice as usize + 1
    }

    /// Sz eigenvalues `s, s-1, …, -s`, in basis order.
    pub fn magnetic_numbers(self) -> Vec<f64> {
        let s = self.value();
        (0..self.dim()).map(|k| s - k as f64).collect()
    }
}

impl fmt::Display for Spin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twice & 1 == 0 {
            write!(f, "{}", self.twice / 2)
        } else {
            write!(f, "{}/2", self.twice)
        }
    }
}

/// Accepts `"1"`, `"3/2"` or `"1.5"`.
impl FromStr for Spin {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let num: u32 = num
                .trim()
                .parse()
                .map_err(|_| Error::Domain(format!("bad spin numerator in {s:?}")))?;
            return match den.trim() {
                "2" => Self::from_twice(num),
                "1" => Self::from_twice(num * 2),
                _ => Err(Error::Domain(format!(
                    "spin must be a multiple of 1/2, got {s:?}"
                ))),
            };
        }
        let value: f64 = s
            .parse()
            .map_err(|_| Error::Domain(format!("cannot parse spin from {s:?}")))?;
        Self::new(value)
    }
}

impl TryFrom<f64> for Spin {
    type Error = Error;

    fn try_from(s: f64) -> Result<Self> {
        Self::new(s)
    }
}

impl From<Spin> for f64 {
    fn from(s: Spin) -> f64 {
        s.value()
    }
}

/// `(Sx, Sy, Sz)` for one spin in the Sz-descending basis, with ħ = 1.
#[derive(Debug, Clone)]
pub struct SpinOperators {
    pub spin: Spin,
    pub sx: ComplexMatrix,
    pub sy: ComplexMatrix,
    pub sz: ComplexMatrix,
}

impl SpinOperators {
    /// Builds the triple from the raising operator
    /// `⟨m+1|S₊|m⟩ = √(s(s+1) − m(m+1))`.
    pub fn new(spin: Spin) -> Self {
        let s = spin.value();
        let ms = spin.magnetic_numbers();
        let n = spin.dim();

        let mut raise = ComplexMatrix::zeros(n);
        // basis index k holds m = s - k, so S₊ maps column k to row k - 1
        for k in 1..n {
            let m = ms[k];
            raise[(k - 1, k)] = Complex64::new((s * (s + 1.0) - m * (m + 1.0)).sqrt(), 0.0);
        }
        let lower = raise.adjoint();

        let sx = (&raise + &lower).scale_real(0.5);
        // (S₊ − S₋) / (2i)
        let sy = (&raise - &lower).scale(Complex64::new(0.0, -0.5));
        let sz = ComplexMatrix::from_real_diagonal(&ms);
        Self { spin, sx, sy, sz }
    }

    pub fn components(&self) -> [&ComplexMatrix; 3] {
        [&self.sx, &self.sy, &self.sz]
    }

    /// `Sx² + Sy² + Sz²`.
    pub fn casimir(&self) -> ComplexMatrix {
        let [x, y, z] = self.components();
        &(&(x * x) + &(y * y)) + &(z * z)
    }
}

/// Spin operators for spin `s`; `2s` must be a positive integer.
pub fn make_spin_operators(s: f64) -> Result<SpinOperators> {
    Ok(SpinOperators::new(Spin::new(s)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;

    fn commutator(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
        &(a * b) - &(b * a)
    }

    #[test]
    fn spin_half_is_half_pauli() {
        let ops = make_spin_operators(0.5).unwrap();
        assert_eq!(ops.sz, ComplexMatrix::from_real_diagonal(&[0.5, -0.5]));
        let sx = ComplexMatrix::from_real_rows(&[vec![0.0, 0.5], vec![0.5, 0.0]]).unwrap();
        assert!(ops.sx.approx_eq(&sx, 1e-15));
        let sy = ComplexMatrix::from_rows(vec![
            vec![Complex64::new(0.0, 0.0), Complex64::new(0.0, -0.5)],
            vec![Complex64::new(0.0, 0.5), Complex64::new(0.0, 0.0)],
        ])
        .unwrap();
        assert!(ops.sy.approx_eq(&sy, 1e-15));
    }

    #[test]
    fn spin_one_matrices() {
        let ops = make_spin_operators(1.0).unwrap();
        let r = 1.0 / 2f64.sqrt();
        let sx =
            ComplexMatrix::from_real_rows(&[vec![0.0, r, 0.0], vec![r, 0.0, r], vec![0.0, r, 0.0]])
                .unwrap();
        assert!(ops.sx.approx_eq(&sx, 1e-15));
        assert_eq!(ops.sz, ComplexMatrix::from_real_diagonal(&[1.0, 0.0, -1.0]));

        // i/√2 [[0,-1,0],[1,0,-1],[0,1,0]]
        let i = Complex64::new(0.0, r);
        let z = Complex64::new(0.0, 0.0);
        let sy =
            ComplexMatrix::from_rows(vec![vec![z, -i, z], vec![i, z, -i], vec![z, i, z]]).unwrap();
        assert!(ops.sy.approx_eq(&sy, 1e-15));
    }

    #[test]
    fn rejects_bad_spins() {
        assert!(make_spin_operators(0.0).is_err());
        assert!(make_spin_operators(0.3).is_err());
        assert!(make_spin_operators(-1.0).is_err());
        assert!(make_spin_operators(f64::NAN).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("1/2".parse::<Spin>().unwrap(), Spin::HALF);
        assert_eq!("3/2".parse::<Spin>().unwrap().twice(), 3);
        assert_eq!("1.5".parse::<Spin>().unwrap().twice(), 3);
        assert_eq!("2".parse::<Spin>().unwrap().to_string(), "2");
        assert_eq!(Spin::from_twice(5).unwrap().to_string(), "5/2");
        assert!("1/3".parse::<Spin>().is_err());
        assert!("x".parse::<Spin>().is_err());
    }

    #[test]
    fn low_spins_satisfy_algebra() {
        for twice in 1..=5 {
            let ops = SpinOperators::new(Spin::from_twice(twice).unwrap());
            let s = ops.spin.value();
            let n = ops.spin.dim();
            let i = Complex64::new(0.0, 1.0);
            for m in ops.components() {
                assert!(m.hermiticity_deviation() < 1e-12);
                assert!(m.trace().norm() < 1e-12);
            }
            assert_eq!(ops.sz.trace().re, 0.0);
            assert!(commutator(&ops.sx, &ops.sy).approx_eq(&ops.sz.scale(i), 1e-10));
            assert!(commutator(&ops.sy, &ops.sz).approx_eq(&ops.sx.scale(i), 1e-10));
            assert!(commutator(&ops.sz, &ops.sx).approx_eq(&ops.sy.scale(i), 1e-10));
            let cas = ComplexMatrix::identity(n).scale_real(s * (s + 1.0));
            assert!(ops.casimir().approx_eq(&cas, 1e-10));
            let diag = ops.spin.magnetic_numbers();
            assert_abs_diff_eq!(diag[0], s);
            assert_abs_diff_eq!(diag[n - 1], -s);
        }
    }

    proptest! {
        #[test]
        fn algebra_holds_for_random_spins(twice in 1u32..=19) {
            let ops = SpinOperators::new(Spin::from_twice(twice).unwrap());
            let s = ops.spin.value();
            let i = Complex64::new(0.0, 1.0);
            prop_assert!(commutator(&ops.sx, &ops.sy).max_abs_diff(&ops.sz.scale(i)) < 1e-10);
            let cas = ComplexMatrix::identity(ops.spin.dim()).scale_real(s * (s + 1.0));
            prop_assert!(ops.casimir().max_abs_diff(&cas) < 1e-10);
        }

        #[test]
        fn spin_value_round_trips(twice in 1u32..1000) {
            let spin = Spin::from_twice(twice).unwrap();
            prop_assert_eq!(spin.to_string().parse::<Spin>().unwrap(), spin);
            prop_assert_eq!(Spin::new(spin.value()).unwrap(), spin);
        }
    }
}
