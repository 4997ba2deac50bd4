use std::collections::HashMap;
use std::f64::consts::PI;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{cell_left_num, CantorRep, CantorStep};
use crate::cuntz::Representation;
use crate::numeric::multiindex::words_of_length;
use crate::numeric::rational::{dyadic_unit, format_short, to_f64};
use crate::numeric::MultiIndex;

pub const DEFAULT_REL_TOL: f64 = 1e-10;

/// `e^{iπx}`, exact at integers and accurate for large `x`.
fn exp_i_pi(x: f64) -> Complex64 {
    let r = x.rem_euclid(2.0);
    if r == 0.0 {
        Complex64::new(1.0, 0.0)
    } else if r == 1.0 {
        Complex64::new(-1.0, 0.0)
    } else if r == 0.5 {
        Complex64::new(0.0, 1.0)
    } else if r == 1.5 {
        Complex64::new(0.0, -1.0)
    } else {
        Complex64::from_polar(1.0, PI * r)
    }
}

/// `μ̂(λ) = ∫ e^{i2πλx} dμ(x) = Π_{m≥0} ½(1 + e^{iπλ4^{−m}})`.
///
/// Factors are multiplied until `π|λ|4^{−M} ≤ rel_tol`; the omitted tail
/// changes the product by a relative amount of at most `(4/3)·rel_tol`.
pub fn mu_hat(lambda: f64, rel_tol: f64) -> Complex64 {
    let mut x = lambda;
    let mut acc = Complex64::new(1.0, 0.0);
    while PI * x.abs() > rel_tol {
        acc *= (Complex64::new(1.0, 0.0) + exp_i_pi(x)) * 0.5;
        if acc == Complex64::new(0.0, 0.0) {
            break;
        }
        x /= 4.0;
    }
    acc
}

/// Whether `μ̂(Δ) = 0` for an integer `Δ`: exactly when `Δ = 4^a·u`, `u` odd.
pub fn mu_hat_is_zero(delta: i128) -> bool {
    delta != 0 && delta.trailing_zeros().is_multiple_of(2)
}

/// A point `Σ j_i 4^i` of the spectrum, with its 0/1 digits (least
/// significant first, no trailing zeros).
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct LambdaPoint {
    pub value: u64,
    pub digits: MultiIndex,
}

impl LambdaPoint {
    pub fn from_code(code: u64) -> Self {
        let value = (0..64)
            .filter(|b| (code >> b) & 1 == 1)
            .map(|b| 1u64 << (2 * b))
            .sum();
        LambdaPoint {
            value,
            digits: MultiIndex::digits_of(2, code as u128),
        }
    }

    pub fn reconstruct(&self) -> u64 {
        self.digits
            .digits()
            .iter()
            .enumerate()
            .map(|(i, &j)| j as u64 * 4u64.pow(i as u32))
            .sum()
    }
}

/// `Λ_p`: the `2^p` points with at most `p` base-4 digits, ascending.
pub fn lambda_set(p: u32) -> Vec<LambdaPoint> {
    (0..1u64 << p).map(LambdaPoint::from_code).collect()
}

pub fn lambda_csv(points: &[LambdaPoint]) -> String {
    let mut out = String::from("lambda,digits\n");
    for pt in points {
        out.push_str(&format!("{},{}\n", pt.value, pt.digits.to_compact()));
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub p: u32,
    pub points: usize,
    pub pairs_checked: usize,
    pub passed: bool,
    pub offending: Option<(u64, u64)>,
}

/// Exact orthogonality of `{e_λ : λ ∈ Λ_p}`: every difference must be a
/// zero of `μ̂`. The diagonal is `μ̂(0) = 1`.
pub fn gram_exponentials(p: u32) -> GramReport {
    let pts: Vec<u64> = lambda_set(p).into_iter().map(|l| l.value).collect();
    let n = pts.len();
    let offending = (0..n).into_par_iter().find_map_first(|a| {
        (a + 1..n)
            .find(|&b| !mu_hat_is_zero(pts[b] as i128 - pts[a] as i128))
            .map(|b| (pts[a], pts[b]))
    });
    GramReport {
        p,
        points: n,
        pairs_checked: n * n.saturating_sub(1) / 2,
        passed: offending.is_none() && !mu_hat_is_zero(0),
        offending,
    }
}

/// `⟨e_λ|f⟩ = Σ_J a_J 2^{−k} e^{−i2πλ t_J} · conj(μ̂(λ 4^{−k}))` for integer
/// `λ`. Phases are reduced exactly.
pub fn exp_coefficient(lambda: i64, f: &CantorStep, rel_tol: f64) -> Complex64 {
    let k = f.level();
    let modulus = 1i128 << (2 * k);
    let weight = to_f64(&dyadic_unit(k));
    let sum: Complex64 = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let t = cell_left_num(k, i) as i128;
            let turns = (lambda as i128 * t).rem_euclid(modulus);
            // e^{−i2π·turns/4^k}
            let phase = exp_i_pi(-2.0 * turns as f64 / modulus as f64);
            phase * to_f64(a)
        })
        .sum();
    sum * weight * mu_hat(lambda as f64 / modulus as f64, rel_tol).conj()
}

/// `Σ_{λ∈Λ_p} |⟨e_λ|f⟩|²` for `p = 0..=p_max`.
pub fn bessel_sums(f: &CantorStep, p_max: u32, rel_tol: f64) -> Vec<f64> {
    let pts = lambda_set(p_max);
    let terms: Vec<f64> = pts
        .par_iter()
        .map(|l| exp_coefficient(l.value as i64, f, rel_tol).norm_sqr())
        .collect();
    let mut out = Vec::with_capacity(p_max as usize + 1);
    let mut acc = 0.0;
    let mut done = 0;
    for p in 0..=p_max {
        let upto = 1usize << p;
        acc += terms[done..upto].iter().sum::<f64>();
        done = upto;
        out.push(acc);
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct IndicatorReport {
    pub word: String,
    pub passed: bool,
    /// Nonzero cell values of `lhs − rhs`, when the check fails.
    pub residual: Option<String>,
}

/// `χ_{τ_J(X)} = 2^{−|J|} Σ_{|K|=|J|} (−1)^{J·K} S_K χ_X`, exactly.
pub fn indicator_relation_check(word: &MultiIndex) -> IndicatorReport {
    let k = word.len();
    let lhs = CantorStep::cell_indicator(word);
    let one = CantorStep::one();
    let sum = words_of_length(k, 2).fold(
        CantorStep::from_ints(&[0]).expect("one coefficient"),
        |acc, kk| {
            let term = CantorRep.apply_word(&kk, &one);
            if word.dot(&kk).is_multiple_of(2) {
                acc.add(&term)
            } else {
                acc.sub(&term)
            }
        },
    );
    let rhs = sum.scale(&dyadic_unit(k as u32));
    let diff = lhs.sub(&rhs);
    IndicatorReport {
        word: word.to_compact(),
        passed: diff.is_zero(),
        residual: (!diff.is_zero()).then(|| {
            diff.coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
                .map(|(i, c)| format!("{i}:{}", format_short(c)))
                .collect::<Vec<_>>()
                .join(" ")
        }),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PartitionReport {
    pub p: u32,
    /// Odd generators `m` with their orbit `m·4^j` inside `Λ_p`.
    pub orbits: Vec<(u64, Vec<u64>)>,
    pub duplicated: Vec<u64>,
    pub missed: Vec<u64>,
    pub stray: Vec<u64>,
    pub passed: bool,
}

/// Checks that `Λ_p \ {0}` is the disjoint union of the orbits
/// `{m·4^j : j ≥ 0}` of its odd members.
pub fn verify_lambda_partition(p: u32) -> PartitionReport {
    let bound = 1u128 << (2 * p);
    let lambda: Vec<u64> = lambda_set(p).into_iter().map(|l| l.value).collect();
    let mut hits: HashMap<u64, usize> = HashMap::new();
    let mut orbits = Vec::new();
    for &m in lambda.iter().filter(|&&m| m % 2 == 1) {
        let mut orbit = Vec::new();
        let mut x = m as u128;
        while x < bound {
            orbit.push(x as u64);
            *hits.entry(x as u64).or_default() += 1;
            x *= 4;
        }
        orbits.push((m, orbit));
    }
    let members: std::collections::HashSet<u64> = lambda.iter().copied().collect();
    let mut duplicated: Vec<u64> = hits
        .iter()
        .filter(|(_, &c)| c > 1)
        .map(|(&v, _)| v)
        .collect();
    let mut missed: Vec<u64> = lambda
        .iter()
        .copied()
        .filter(|v| *v != 0 && !hits.contains_key(v))
        .collect();
    let mut stray: Vec<u64> = hits
        .keys()
        .copied()
        .filter(|v| !members.contains(v) || *v == 0)
        .collect();
    duplicated.sort_unstable();
    missed.sort_unstable();
    stray.sort_unstable();
    let passed = duplicated.is_empty() && missed.is_empty() && stray.is_empty();
    PartitionReport {
        p,
        orbits,
        duplicated,
        missed,
        stray,
        passed,
    }
}
