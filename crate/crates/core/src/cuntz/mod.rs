//! Cuntz isometries `S_0, …, S_{N-1}` and their adjoints.
//!
//! A [`Representation`] acts on some carrier type implementing
//! [`HilbertVector`]. Words act in written order: `S_J = S_{j₁}⋯S_{j_k}`, so
//! `apply_word` applies the last letter first and `adjoint_word` applies
//! `S_{j₁}^*` first.

mod general;
mod interval;
mod verify;

pub use general::{GeneralRepN, NAdicStep};
pub use interval::IntervalRep2;
pub use verify::{
    unitary_matrix, verify_cuntz, verify_unitary_matrix, CuntzReport, RelationCheck, UnitaryReport,
};

use num_complex::Complex64;

use crate::numeric::MultiIndex;

/// How strictly a vanishing inner product is judged.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Tolerance {
    /// Exact zero; only meaningful for exact carriers.
    Exact,
    /// `|⟨f|g⟩| ≤ tol`.
    Abs(f64),
}

impl Tolerance {
    pub fn accepts(self, magnitude: f64) -> bool {
        match self {
            Tolerance::Exact => magnitude == 0.0,
            Tolerance::Abs(t) => magnitude <= t,
        }
    }

    /// Tolerance scaled by a reference magnitude (exact stays exact).
    pub fn scaled(self, by: f64) -> Tolerance {
        match self {
            Tolerance::Exact => Tolerance::Exact,
            Tolerance::Abs(t) => Tolerance::Abs(t * by),
        }
    }
}

/// A vector in a concrete Hilbert space carrier.
pub trait HilbertVector: Clone + Send + Sync {
    /// `⟨self|other⟩`, conjugate-linear in `self`.
    fn inner_c(&self, other: &Self) -> Complex64;

    fn plus(&self, other: &Self) -> Self;

    fn minus(&self, other: &Self) -> Self;

    fn norm_sq(&self) -> f64 {
        self.inner_c(self).re
    }

    /// Whether `⟨self|other⟩` vanishes. Exact carriers override this so that
    /// [`Tolerance::Exact`] is decided without rounding.
    fn orthogonal_to(&self, other: &Self, tol: Tolerance) -> bool {
        tol.accepts(self.inner_c(other).norm())
    }

    /// Whether the vector itself is zero under `tol` (compared on the norm).
    fn vanishes(&self, tol: Tolerance) -> bool {
        tol.accepts(self.norm_sq().max(0.0).sqrt())
    }
}

pub trait Representation<V: HilbertVector> {
    /// `N`, the number of generators.
    fn arity(&self) -> usize;

    /// `S_j v`.
    fn isometry(&self, j: usize, v: &V) -> V;

    /// `S_j^* v`.
    fn adjoint(&self, j: usize, v: &V) -> V;

    fn apply_word(&self, word: &MultiIndex, v: &V) -> V {
        word.digits()
            .iter()
            .rev()
            .fold(v.clone(), |acc, &j| self.isometry(j, &acc))
    }

    /// `S_J^* v = S_{j_k}^* ⋯ S_{j₁}^* v`.
    fn adjoint_word(&self, word: &MultiIndex, v: &V) -> V {
        word.digits()
            .iter()
            .fold(v.clone(), |acc, &j| self.adjoint(j, &acc))
    }

    /// `P_J v = S_J S_J^* v`.
    fn project(&self, word: &MultiIndex, v: &V) -> V {
        self.apply_word(word, &self.adjoint_word(word, v))
    }
}
