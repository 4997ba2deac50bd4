use std::collections::BTreeMap;

use serde::Serialize;

use super::{adjoint_level, mass_entropy};
use crate::cuntz::{HilbertVector, Representation};
use crate::error::{Error, Result};
use crate::numeric::MultiIndex;

/// Masses `‖P_J f‖²` for all `|J| ≤ depth`, normalized by `‖f‖²`, and the
/// per-level entropies `ε₁ … ε_depth`.
#[derive(Clone, Debug, Serialize)]
pub struct EntropyTree {
    pub depth: usize,
    pub nodes: BTreeMap<MultiIndex, f64>,
    pub entropies: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EntropyRow {
    pub word: String,
    pub mass: f64,
    /// `−m ln m`, the node's share of `ε_{|J|}`.
    pub entropy: f64,
}

impl EntropyTree {
    pub fn build<V, R>(f: &V, depth: usize, rep: &R) -> Result<Self>
    where
        V: HilbertVector,
        R: Representation<V> + Sync,
    {
        let norm_sq = f.norm_sq();
        if norm_sq.is_nan() || norm_sq <= 0.0 {
            return Err(Error::ZeroVector);
        }
        let deepest = adjoint_level(f, depth, rep);
        let mut nodes: BTreeMap<MultiIndex, f64> = deepest
            .iter()
            .map(|(w, v)| (w.clone(), v.norm_sq() / norm_sq))
            .collect();
        // Parents are sums of children; this keeps every level consistent.
        let mut frontier: Vec<(MultiIndex, f64)> =
            nodes.iter().map(|(w, m)| (w.clone(), *m)).collect();
        for _ in 0..depth {
            let mut parents: BTreeMap<MultiIndex, f64> = BTreeMap::new();
            for (w, m) in frontier {
                let parent = MultiIndex::new(w.base(), w.digits()[..w.len() - 1].to_vec())
                    .expect("prefix of a valid word");
                *parents.entry(parent).or_insert(0.0) += m;
            }
            frontier = parents.iter().map(|(w, m)| (w.clone(), *m)).collect();
            nodes.extend(parents);
        }
        let entropies = (1..=depth)
            .map(|k| {
                nodes
                    .iter()
                    .filter(|(w, _)| w.len() == k)
                    .map(|(_, m)| mass_entropy(*m))
                    .sum()
            })
            .collect();
        Ok(Self {
            depth,
            nodes,
            entropies,
        })
    }

    pub fn mass(&self, word: &MultiIndex) -> Option<f64> {
        self.nodes.get(word).copied()
    }

    /// `ε_k`, with `ε₀ = 0`.
    pub fn entropy(&self, k: usize) -> Option<f64> {
        if k == 0 {
            Some(0.0)
        } else {
            self.entropies.get(k - 1).copied()
        }
    }

    /// Largest `|mass(J) − Σ_i mass(J·i)|` over internal nodes.
    pub fn max_partition_defect(&self) -> f64 {
        self.nodes
            .iter()
            .filter(|(w, _)| w.len() < self.depth)
            .map(|(w, m)| {
                let children: f64 = (0..w.base()).map(|i| self.nodes[&w.push(i)]).sum();
                (m - children).abs()
            })
            .fold(0.0, f64::max)
    }

    pub fn rows(&self) -> Vec<EntropyRow> {
        self.nodes
            .iter()
            .map(|(w, m)| EntropyRow {
                word: w.to_compact(),
                mass: *m,
                entropy: mass_entropy(*m),
            })
            .collect()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("word,mass,entropy\n");
        for r in self.rows() {
            out.push_str(&format!("{},{},{}\n", r.word, r.mass, r.entropy));
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.rows()).expect("rows serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuntz::IntervalRep2;
    use crate::numeric::DyadicStep;

    #[test]
    fn partition_of_unity() {
        let f = DyadicStep::from_ints(&[1, 4, -2, 0, 3, 3, 1, -5]).unwrap();
        let t = EntropyTree::build(&f, 3, &IntervalRep2).unwrap();
        assert!((t.mass(&MultiIndex::empty(2)).unwrap() - 1.0).abs() < 1e-12);
        assert!(t.max_partition_defect() < 1e-12);
        assert_eq!(t.nodes.len(), 15);
        assert_eq!(t.entropies.len(), 3);
        assert!(t.to_csv().starts_with("word,mass,entropy\n∅,1,"));
    }
}
