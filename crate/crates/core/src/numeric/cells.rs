//! Coefficient combinatorics shared by every carrier that lives on a binary
//! cell tree (subintervals of [0,1) and cylinder cells of the Cantor set).
//!
//! A level-`k` vector holds `2^k` coefficients; cell `i` is the word whose
//! first letter is the most significant bit of `i`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use super::rational::{dyadic_unit, Rational};

pub(crate) fn refine(coeffs: &[Rational], from: u32, to: u32) -> Vec<Rational> {
    let rep = 1usize << (to - from);
    coeffs
        .iter()
        .flat_map(|c| std::iter::repeat_n(c, rep))
        .cloned()
        .collect()
}

/// Collapses sibling pairs while they agree.
pub(crate) fn normalize(mut level: u32, mut coeffs: Vec<Rational>) -> (u32, Vec<Rational>) {
    while level > 0 && coeffs.chunks(2).all(|p| p[0] == p[1]) {
        coeffs = coeffs.into_iter().step_by(2).collect();
        level -= 1;
    }
    (level, coeffs)
}

/// Branch isometry: the input is copied onto the first half and copied, with
/// sign `(-1)^j`, onto the second half.
pub(crate) fn isometry(coeffs: &[Rational], j: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(coeffs.len() * 2);
    out.extend_from_slice(coeffs);
    if j == 0 {
        out.extend_from_slice(coeffs);
    } else {
        out.extend(coeffs.iter().map(|c| -c));
    }
    out
}

/// Adjoint of [`isometry`]: `½(a_i ± a_{i+h})`. A level-0 input is a constant,
/// which the even adjoint fixes and the odd adjoint kills.
pub(crate) fn adjoint(level: u32, coeffs: &[Rational], j: usize) -> (u32, Vec<Rational>) {
    if level == 0 {
        return if j == 0 {
            (0, coeffs.to_vec())
        } else {
            (0, vec![Rational::zero()])
        };
    }
    let half = coeffs.len() / 2;
    let two = Rational::from_integer(BigInt::from(2));
    let out = (0..half)
        .map(|i| {
            let (a, b) = (&coeffs[i], &coeffs[i + half]);
            if j == 0 {
                (a + b) / &two
            } else {
                (a - b) / &two
            }
        })
        .collect();
    (level - 1, out)
}

/// Coefficients scaled to integers over one shared denominator.
#[derive(Clone, Debug)]
pub(crate) struct IntegerForm {
    level: u32,
    denom: BigInt,
    nums: Nums,
}

#[derive(Clone, Debug)]
enum Nums {
    // |n| < 2^31, so pairwise products and 2^32 of their sums fit in i128
    Small(Vec<i64>),
    Big(Vec<BigInt>),
}

const SMALL_LIMIT: i64 = 1 << 31;

impl IntegerForm {
    pub(crate) fn new(level: u32, coeffs: &[Rational]) -> Self {
        Self::new_small(level, coeffs).unwrap_or_else(|| Self::new_big(level, coeffs))
    }

    /// Machine-integer path; `None` on any overflow.
    fn new_small(level: u32, coeffs: &[Rational]) -> Option<Self> {
        let mut denom: i64 = 1;
        for c in coeffs {
            let d = c.denom().to_i64()?;
            if denom % d != 0 {
                denom = (denom / denom.gcd(&d)).checked_mul(d)?;
            }
        }
        let nums = coeffs
            .iter()
            .map(|c| {
                let n = c
                    .numer()
                    .to_i64()?
                    .checked_mul(denom / c.denom().to_i64()?)?;
                (n.abs() < SMALL_LIMIT).then_some(n)
            })
            .collect::<Option<Vec<i64>>>()?;
        Some(IntegerForm {
            level,
            denom: BigInt::from(denom),
            nums: Nums::Small(nums),
        })
    }

    fn new_big(level: u32, coeffs: &[Rational]) -> Self {
        let denom = coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let big: Vec<BigInt> = coeffs
            .iter()
            .map(|c| c.numer() * (&denom / c.denom()))
            .collect();
        let small: Option<Vec<i64>> = big
            .iter()
            .map(|n| n.to_i64().filter(|v| v.abs() < SMALL_LIMIT))
            .collect();
        let nums = match small {
            Some(v) => Nums::Small(v),
            None => Nums::Big(big),
        };
        IntegerForm { level, denom, nums }
    }

    fn num_at(&self, i: usize) -> BigInt {
        match &self.nums {
            Nums::Small(v) => BigInt::from(v[i]),
            Nums::Big(v) => v[i].clone(),
        }
    }

    /// `∫ f·g` with respect to the uniform cell measure (`2^-k` per level-`k`
    /// cell), exact.
    pub(crate) fn inner(&self, other: &IntegerForm) -> Rational {
        let level = self.level.max(other.level);
        let n = 1usize << level;
        let sa = level - self.level;
        let sb = level - other.level;
        let sum: BigInt = match (&self.nums, &other.nums) {
            (Nums::Small(a), Nums::Small(b)) => {
                let s: i128 = (0..n)
                    .map(|i| a[i >> sa] as i128 * b[i >> sb] as i128)
                    .sum();
                BigInt::from(s)
            }
            _ => (0..n)
                .map(|i| self.num_at(i >> sa) * other.num_at(i >> sb))
                .sum(),
        };
        Rational::new(sum, &self.denom * &other.denom) * dyadic_unit(level)
    }
}

pub(crate) fn inner(la: u32, a: &[Rational], lb: u32, b: &[Rational]) -> Rational {
    IntegerForm::new(la, a).inner(&IntegerForm::new(lb, b))
}

/// First pair `(i, j, ⟨v_i|v_j⟩)` breaking `Gram = I`, if any.
pub(crate) fn gram_defect(forms: &[IntegerForm]) -> Option<(usize, usize, Rational)> {
    let one = Rational::one();
    (0..forms.len())
        .into_par_iter()
        .filter_map(|i| {
            (i..forms.len()).find_map(|j| {
                let g = forms[i].inner(&forms[j]);
                let expected_one = i == j;
                let ok = if expected_one { g == one } else { g.is_zero() };
                (!ok).then_some((i, j, g))
            })
        })
        .min_by_key(|(i, j, _)| (*i, *j))
}
