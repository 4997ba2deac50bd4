//! Projection masses `‖P_J f‖² = ‖S_J^* f‖²`, entropy numbers and best-basis
//! search over the subdivision tree.
//!
//! Children of `J` are `J·0, J·1, …`: since `S_{J·i} = S_J S_i`, the
//! projections `P_{J·i}` sum to `P_J`, and `S_{J·i}^* f = S_i^* (S_J^* f)`.
//! For example the two children of `(1)` are `(1,0)` and `(1,1)`, with vectors
//! `S₀^* S₁^* f` and `S₁^* S₁^* f`.

mod best_basis;
mod tree;

pub use best_basis::{best_basis, packet_cost, BestBasis, CellMasses};
pub use tree::{EntropyRow, EntropyTree};

use std::collections::BTreeMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::cuntz::{HilbertVector, IntervalRep2, Representation};
use crate::error::{Error, Result};
use crate::numeric::rational::Rational;
use crate::numeric::{DyadicStep, MultiIndex};

/// Masses below this count as exact zeros in `0·ln 0`.
pub const MASS_FLOOR: f64 = 1e-15;

/// Off-by-this from unit norm triggers internal renormalization.
pub const NORM_TOLERANCE: f64 = 1e-12;

/// `−m ln m` with the zero convention.
pub fn mass_entropy(m: f64) -> f64 {
    if m <= MASS_FLOOR {
        0.0
    } else {
        (-m * m.ln()).max(0.0)
    }
}

pub fn shannon<I: IntoIterator<Item = f64>>(masses: I) -> f64 {
    masses.into_iter().map(mass_entropy).sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct MassReport {
    pub masses: BTreeMap<MultiIndex, f64>,
    /// `‖f‖²` before normalization.
    pub input_norm_sq: f64,
    pub renormalized: bool,
}

/// `S_J^* f` for every `|J| = k`, in canonical word order.
pub(crate) fn adjoint_level<V, R>(f: &V, k: usize, rep: &R) -> Vec<(MultiIndex, V)>
where
    V: HilbertVector,
    R: Representation<V> + Sync,
{
    let base = rep.arity();
    let mut level = vec![(MultiIndex::empty(base), f.clone())];
    for _ in 0..k {
        level = level
            .par_iter()
            .flat_map_iter(|(w, v)| (0..base).map(move |i| (w.push(i), rep.adjoint(i, v))))
            .collect();
        level.sort_by(|a, b| a.0.cmp(&b.0));
    }
    level
}

/// `‖P_J f‖²` for `|J| = k`, normalized so that they sum to one.
pub fn projection_masses<V, R>(f: &V, k: usize, rep: &R) -> Result<MassReport>
where
    V: HilbertVector,
    R: Representation<V> + Sync,
{
    let norm_sq = f.norm_sq();
    if norm_sq.is_nan() || norm_sq <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let masses = adjoint_level(f, k, rep)
        .into_iter()
        .map(|(w, v)| (w, v.norm_sq() / norm_sq))
        .collect();
    Ok(MassReport {
        masses,
        input_norm_sq: norm_sq,
        renormalized: (norm_sq - 1.0).abs() > NORM_TOLERANCE,
    })
}

/// Exact masses `‖S_J^* f‖² / ‖f‖²` of a step function under the interval
/// representation.
pub fn projection_masses_exact(f: &DyadicStep, k: usize) -> Result<BTreeMap<MultiIndex, Rational>> {
    let norm_sq = f.norm_sq();
    if norm_sq.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(adjoint_level(f, k, &IntervalRep2)
        .into_iter()
        .map(|(w, v)| (w, v.norm_sq() / &norm_sq))
        .collect())
}

/// `ε_k(f/‖f‖)`.
pub fn entropy<V, R>(f: &V, k: usize, rep: &R) -> Result<f64>
where
    V: HilbertVector,
    R: Representation<V> + Sync,
{
    Ok(shannon(projection_masses(f, k, rep)?.masses.into_values()))
}

#[derive(Clone, Debug, Serialize)]
pub struct RecursionReport {
    pub k: usize,
    /// `ε_{k+1}(f)`
    pub lhs: f64,
    /// `ε₁(f) + Σ_i ‖S_i^* f‖² ε_k(S_i^* f / ‖S_i^* f‖)`
    pub rhs: f64,
    pub gap: f64,
    pub passed: bool,
}

pub fn verify_entropy_recursion<V, R>(f: &V, k: usize, rep: &R, tol: f64) -> Result<RecursionReport>
where
    V: HilbertVector,
    R: Representation<V> + Sync,
{
    let norm_sq = f.norm_sq();
    if norm_sq.is_nan() || norm_sq <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let lhs = entropy(f, k + 1, rep)?;
    let mut rhs = entropy(f, 1, rep)?;
    for i in 0..rep.arity() {
        let child = rep.adjoint(i, f);
        let m = child.norm_sq() / norm_sq;
        if m > MASS_FLOOR {
            rhs += m * entropy(&child, k, rep)?;
        }
    }
    let gap = (lhs - rhs).abs();
    Ok(RecursionReport {
        k,
        lhs,
        rhs,
        gap,
        passed: gap < tol,
    })
}

/// `−Σ |c|² ln |c|²` for coefficients in some orthonormal basis.
pub fn onb_entropy(coeffs: &[f64]) -> Result<f64> {
    let total: f64 = coeffs.iter().map(|c| c * c).sum();
    if (total - 1.0).abs() > 1e-10 {
        return Err(Error::NotNormalized(total));
    }
    Ok(shannon(coeffs.iter().map(|c| c * c)))
}
