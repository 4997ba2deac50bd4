//! The scale-4 Cantor set `X = τ₀(X) ∪ τ₁(X)`, `τ₀(x) = x/4`,
//! `τ₁(x) = (x+2)/4`, with its self-similar measure `μ`.
//!
//! Functions constant on the level-`k` cylinder cells `τ_J(X)` are stored as
//! in the interval case: cell `J = (j₁,…,j_k)` has index `Σ j_i 2^{k−i}`,
//! mass `2^{−k}` and left endpoint `t_J = Σ 2 j_i 4^{−i}`.

mod spectrum;

pub use spectrum::{
    bessel_sums, exp_coefficient, gram_exponentials, indicator_relation_check, lambda_csv,
    lambda_set, mu_hat, mu_hat_is_zero, verify_lambda_partition, GramReport, IndicatorReport,
    LambdaPoint, PartitionReport, DEFAULT_REL_TOL,
};

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cuntz::{HilbertVector, Representation, Tolerance};
use crate::entropy::CellMasses;
use crate::error::Result;
use crate::numeric::rational::Rational;
use crate::numeric::{DyadicStep, MultiIndex};

/// A function on `X` constant on the cylinder cells of one level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CantorStep(DyadicStep);

impl CantorStep {
    pub fn new(level: u32, coeffs: Vec<Rational>) -> Result<Self> {
        DyadicStep::new(level, coeffs).map(Self)
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        DyadicStep::from_ints(values).map(Self)
    }

    /// `χ_X`, the unit vector `e₀`.
    pub fn one() -> Self {
        Self(DyadicStep::one())
    }

    /// `χ_{τ_J(X)}`.
    pub fn cell_indicator(word: &MultiIndex) -> Self {
        Self(DyadicStep::indicator(word.len() as u32, cell_index(word)))
    }

    pub fn level(&self) -> u32 {
        self.0.level()
    }

    pub fn coeffs(&self) -> &[Rational] {
        self.0.coeffs()
    }

    pub fn as_cells(&self) -> &DyadicStep {
        &self.0
    }

    /// `⟨f|g⟩ = 2^{−k} Σ a_i b_i` in `L²(μ)`.
    pub fn inner(&self, other: &Self) -> Rational {
        self.0.inner(&other.0)
    }

    pub fn norm_sq(&self) -> Rational {
        self.0.norm_sq()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self(self.0.add(&other.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        Self(self.0.sub(&other.0))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self(self.0.scale(s))
    }

    pub fn normalize(&self) -> Self {
        Self(self.0.normalize())
    }

    /// `t_J` for the cell with the given index at this level.
    pub fn cell_left(&self, index: usize) -> Rational {
        cell_left(self.level(), index)
    }
}

impl fmt::Display for CantorStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

pub(crate) fn cell_index(word: &MultiIndex) -> usize {
    word.digits().iter().fold(0, |acc, &j| 2 * acc + j)
}

/// Numerator of `t_J` over `4^level`.
pub(crate) fn cell_left_num(level: u32, index: usize) -> u128 {
    (0..level).fold(0u128, |acc, i| {
        let bit = (index >> (level - 1 - i)) & 1;
        4 * acc + 2 * bit as u128
    })
}

pub fn cell_left(level: u32, index: usize) -> Rational {
    Rational::new(
        cell_left_num(level, index).into(),
        (1u128 << (2 * level)).into(),
    )
}

impl HilbertVector for CantorStep {
    fn inner_c(&self, other: &Self) -> Complex64 {
        self.0.inner_c(&other.0)
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }

    fn orthogonal_to(&self, other: &Self, tol: Tolerance) -> bool {
        self.0.orthogonal_to(&other.0, tol)
    }

    fn vanishes(&self, tol: Tolerance) -> bool {
        self.0.vanishes(tol)
    }
}

impl CellMasses for CantorStep {
    fn cell_masses(&self, resolution: u32) -> Vec<f64> {
        self.0.cell_masses(resolution)
    }
}

/// The `O₂` representation on `L²(μ)`: `S_j f = √2 m_j · (f∘σ)` with
/// `m₀ = 1/√2`, `m₁ = (χ_{τ₀(X)} − χ_{τ₁(X)})/√2` and `σ` the shift.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CantorRep;

impl CantorRep {
    pub fn s_apply(&self, j: usize, f: &CantorStep) -> CantorStep {
        CantorStep(crate::cuntz::IntervalRep2.s_apply(j, &f.0))
    }

    pub fn s_adjoint(&self, j: usize, f: &CantorStep) -> CantorStep {
        CantorStep(crate::cuntz::IntervalRep2.s_adjoint(j, &f.0))
    }
}

impl Representation<CantorStep> for CantorRep {
    fn arity(&self) -> usize {
        2
    }

    fn isometry(&self, j: usize, v: &CantorStep) -> CantorStep {
        self.s_apply(j, v)
    }

    fn adjoint(&self, j: usize, v: &CantorStep) -> CantorStep {
        self.s_adjoint(j, v)
    }
}

/// Level-`k` cell of `word` has diameter `4^{−k}` and mass `2^{−k}`.
pub fn cell_scales(word: &MultiIndex) -> (Rational, Rational) {
    let k = word.len() as u32;
    (
        Rational::new(1.into(), (1u128 << (2 * k)).into()),
        Rational::new(1.into(), (1u128 << k).into()),
    )
}

impl From<CantorStep> for DyadicStep {
    fn from(c: CantorStep) -> Self {
        c.0
    }
}

impl From<DyadicStep> for CantorStep {
    fn from(d: DyadicStep) -> Self {
        CantorStep(d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuntz::verify_cuntz;
    use crate::numeric::rational::{int, rat};

    #[test]
    fn operator_examples() {
        assert_eq!(CantorRep.s_apply(0, &CantorStep::one()), CantorStep::one());
        let f = CantorStep::from_ints(&[1, -1]).unwrap();
        assert_eq!(CantorRep.s_adjoint(1, &f), CantorStep::one());
        assert_eq!(CantorRep.s_apply(1, &CantorStep::one()), f);
    }

    #[test]
    fn cuntz_relations_on_cells() {
        let cells: Vec<_> = (0..16)
            .map(|i| CantorStep::from(DyadicStep::indicator(4, i)))
            .collect();
        assert!(verify_cuntz(&CantorRep, &cells, Tolerance::Exact).passed());
    }

    #[test]
    fn cells() {
        assert_eq!(CantorStep::one().norm_sq(), int(1));
        let w = MultiIndex::binary(&[1, 0, 1]);
        assert_eq!(cell_index(&w), 5);
        assert_eq!(cell_left(3, 5), rat(2, 4) + rat(2, 64));
        let (diam, mass) = cell_scales(&w);
        let (pd, pm) = cell_scales(&MultiIndex::binary(&[1, 0]));
        assert_eq!(diam * int(4), pd);
        assert_eq!(mass * int(2), pm);
        assert_eq!(CantorStep::cell_indicator(&w).norm_sq(), rat(1, 8));
    }
}
