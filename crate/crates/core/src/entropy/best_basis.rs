use serde::Serialize;

use super::mass_entropy;
use crate::cuntz::{HilbertVector, Representation};
use crate::error::{Error, Result};
use crate::function_space::{HybridFunction, TrigAtom};
use crate::numeric::rational::{dyadic_unit, to_f64, Rational};
use crate::numeric::{DyadicStep, MultiIndex};

/// Squared mass of a vector on each of the `2^r` level-`r` cells.
pub trait CellMasses {
    fn cell_masses(&self, resolution: u32) -> Vec<f64>;
}

impl CellMasses for DyadicStep {
    fn cell_masses(&self, resolution: u32) -> Vec<f64> {
        let level = self.level();
        let squares: Vec<Rational> = self.coeffs().iter().map(|a| a * a).collect();
        if level <= resolution {
            let w = dyadic_unit(resolution);
            let rep = 1usize << (resolution - level);
            (0..1usize << resolution)
                .map(|c| to_f64(&(&squares[c / rep] * &w)))
                .collect()
        } else {
            let w = dyadic_unit(level);
            squares
                .chunks(1 << (level - resolution))
                .map(|block| to_f64(&(block.iter().sum::<Rational>() * &w)))
                .collect()
        }
    }
}

impl CellMasses for HybridFunction {
    fn cell_masses(&self, resolution: u32) -> Vec<f64> {
        (0..1usize << resolution)
            .map(|c| {
                let cell = DyadicStep::indicator(resolution, c);
                let atoms = self
                    .atoms()
                    .iter()
                    .map(|a| TrigAtom::new(a.window().mul(&cell), a.frequency(), a.phase()))
                    .collect();
                HybridFunction::new(atoms).norm_sq()
            })
            .collect()
    }
}

/// `−Σ_C m_C ln m_C` over level-`resolution` cells, masses scaled by
/// `1/total`.
pub fn packet_cost<V: CellMasses>(v: &V, resolution: u32, total: f64) -> f64 {
    v.cell_masses(resolution)
        .into_iter()
        .map(|m| mass_entropy(m / total))
        .sum()
}

#[derive(Clone, Debug, Serialize)]
pub struct BestBasis {
    pub max_depth: usize,
    /// An antichain of words whose projections sum to the identity.
    pub leaves: Vec<MultiIndex>,
    pub cost: f64,
}

/// Split-or-keep search over the tree of words up to `max_depth`.
///
/// Keeping node `J` costs the cell entropy of `S_J^* f` at resolution
/// `max_depth − |J|`. When `S_J^* f` is constant on those cells this is the
/// entropy of `P_J f` in the orthonormal family `S_J χ_C / ‖S_J χ_C‖`; finer
/// detail is pooled by cell mass. At full depth the cost of a node is
/// `−m ln m` of its mass, so the uniform depth-`max_depth` partition costs
/// exactly `ε_{max_depth}(f)`. Ties keep the shallower node.
pub fn best_basis<V, R>(f: &V, max_depth: usize, rep: &R) -> Result<BestBasis>
where
    V: HilbertVector + CellMasses,
    R: Representation<V> + Sync,
{
    let total = f.norm_sq();
    if total.is_nan() || total <= 0.0 {
        return Err(Error::ZeroVector);
    }
    let root = MultiIndex::empty(rep.arity());
    let (cost, leaves) = solve(&root, f, max_depth, rep, total);
    Ok(BestBasis {
        max_depth,
        leaves,
        cost,
    })
}

fn solve<V, R>(
    word: &MultiIndex,
    v: &V,
    max_depth: usize,
    rep: &R,
    total: f64,
) -> (f64, Vec<MultiIndex>)
where
    V: HilbertVector + CellMasses,
    R: Representation<V> + Sync,
{
    let remaining = max_depth - word.len();
    let keep = packet_cost(v, remaining as u32, total);
    if remaining == 0 || v.norm_sq() / total <= super::MASS_FLOOR {
        return (keep, vec![word.clone()]);
    }
    let children: Vec<(f64, Vec<MultiIndex>)> = if word.len() < 3 {
        use rayon::prelude::*;
        (0..rep.arity())
            .into_par_iter()
            .map(|i| solve(&word.push(i), &rep.adjoint(i, v), max_depth, rep, total))
            .collect()
    } else {
        (0..rep.arity())
            .map(|i| solve(&word.push(i), &rep.adjoint(i, v), max_depth, rep, total))
            .collect()
    };
    let split: f64 = children.iter().map(|c| c.0).sum();
    if split < keep - 1e-12 * keep.abs().max(1.0) {
        (split, children.into_iter().flat_map(|c| c.1).collect())
    } else {
        (keep, vec![word.clone()])
    }
}
