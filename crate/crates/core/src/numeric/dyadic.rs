//! Exact piecewise-constant functions on dyadic partitions of [0,1).

use std::fmt;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::cells::{self, IntegerForm};
use super::rational::{self, Rational};
use crate::error::{Error, Result};

/// A function on [0,1) that is constant on each half-open cell
/// `[i·2^-k, (i+1)·2^-k)`.
///
/// Equality compares normalized forms, so `[3,3]` equals `[3]`.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(try_from = "RawStep")]
pub struct DyadicStep {
    level: u32,
    #[serde(with = "rational::serde_vec")]
    coeffs: Vec<Rational>,
}

#[derive(Deserialize)]
struct RawStep {
    level: u32,
    #[serde(with = "rational::serde_vec")]
    coeffs: Vec<Rational>,
}

impl TryFrom<RawStep> for DyadicStep {
    type Error = Error;

    fn try_from(raw: RawStep) -> Result<Self> {
        DyadicStep::new(raw.level, raw.coeffs)
    }
}

impl DyadicStep {
    pub fn new(level: u32, coeffs: Vec<Rational>) -> Result<Self> {
        let expected = 1usize << level;
        if coeffs.len() != expected {
            return Err(Error::LengthMismatch {
                level,
                expected,
                got: coeffs.len(),
            });
        }
        Ok(DyadicStep { level, coeffs })
    }

    /// Builds a step from a power-of-two number of coefficients.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        let n = coeffs.len();
        if n == 0 || !n.is_power_of_two() {
            return Err(Error::NotPowerOfTwo(n));
        }
        Self::new(n.trailing_zeros(), coeffs)
    }

    pub fn from_ints(values: &[i64]) -> Result<Self> {
        Self::from_coeffs(values.iter().map(|&v| rational::int(v)).collect())
    }

    pub fn constant(c: Rational) -> Self {
        DyadicStep {
            level: 0,
            coeffs: vec![c],
        }
    }

    /// The indicator of [0,1).
    pub fn one() -> Self {
        Self::constant(rational::int(1))
    }

    /// Canonical zero: level 0, coefficient 0.
    pub fn zero() -> Self {
        Self::constant(Rational::zero())
    }

    /// Indicator of cell `index` at `level`.
    pub fn indicator(level: u32, index: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); 1 << level];
        coeffs[index] = rational::int(1);
        DyadicStep { level, coeffs }
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn refine(&self, target: u32) -> Result<Self> {
        if target < self.level {
            return Err(Error::LossyRefine {
                from: self.level,
                to: target,
            });
        }
        Ok(DyadicStep {
            level: target,
            coeffs: cells::refine(&self.coeffs, self.level, target),
        })
    }

    pub fn normalize(&self) -> Self {
        let (level, coeffs) = cells::normalize(self.level, self.coeffs.clone());
        DyadicStep { level, coeffs }
    }

    /// Value on the cell containing `x ∈ [0,1)`.
    pub fn evaluate(&self, x: &Rational) -> Result<Rational> {
        if x < &Rational::zero() || x >= &rational::int(1) {
            return Err(Error::Precondition(format!(
                "evaluation point {} outside [0,1)",
                rational::format_short(x)
            )));
        }
        let scaled = x * Rational::from_integer((1u64 << self.level).into());
        let idx = scaled.floor().to_integer().to_usize().unwrap_or(0);
        Ok(self.coeffs[idx].clone())
    }

    /// Left endpoint of cell `i`.
    pub fn cell_left(&self, i: usize) -> Rational {
        rational::rat(i as i64, 1) * rational::dyadic_unit(self.level)
    }

    /// `∫₀¹ f·g dx`, exact.
    pub fn inner(&self, other: &Self) -> Rational {
        cells::inner(self.level, &self.coeffs, other.level, &other.coeffs)
    }

    pub fn norm_sq(&self) -> Rational {
        self.inner(self)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub(crate) fn integer_form(&self) -> IntegerForm {
        IntegerForm::new(self.level, &self.coeffs)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let level = self.level.max(other.level);
        let sa = level - self.level;
        let sb = level - other.level;
        let coeffs = (0..1usize << level)
            .map(|i| op(&self.coeffs[i >> sa], &other.coeffs[i >> sb]))
            .collect();
        DyadicStep { level, coeffs }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    /// Pointwise product.
    pub fn mul(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        DyadicStep {
            level: self.level,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn to_f64_vec(&self) -> Vec<f64> {
        self.coeffs.iter().map(rational::to_f64).collect()
    }

    pub(crate) fn from_raw(level: u32, coeffs: Vec<Rational>) -> Self {
        debug_assert_eq!(coeffs.len(), 1 << level);
        DyadicStep { level, coeffs }
    }
}

impl PartialEq for DyadicStep {
    fn eq(&self, other: &Self) -> bool {
        let level = self.level.max(other.level);
        let sa = level - self.level;
        let sb = level - other.level;
        (0..1usize << level).all(|i| self.coeffs[i >> sa] == other.coeffs[i >> sb])
    }
}

impl Eq for DyadicStep {}

impl fmt::Display for DyadicStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", rational::format_short(c))?;
        }
        write!(f, "]")
    }
}
