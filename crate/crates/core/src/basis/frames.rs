use std::collections::BTreeSet;

use crate::cuntz::{HilbertVector, Representation, Tolerance};
use crate::error::{Error, Result};
use crate::numeric::{enumerate_words, MultiIndex};

/// `K(ψ)`: the first word `K` (in (length, code) order, `|K| ≤ max_depth`)
/// such that the vectors `S_J ψ`, `J < K`, are pairwise orthogonal while one
/// of them fails to be orthogonal to `S_K ψ`. `None` when no such word exists
/// within the depth.
///
/// A numeric tolerance is applied relative to `‖ψ‖²`.
pub fn compute_k<V, R>(
    psi: &V,
    rep: &R,
    max_depth: usize,
    tol: Tolerance,
) -> Result<Option<MultiIndex>>
where
    V: HilbertVector,
    R: Representation<V>,
{
    let norm_sq = psi.norm_sq();
    if psi.vanishes(Tolerance::Exact) || norm_sq == 0.0 {
        return Err(Error::ZeroVector);
    }
    let tol = tol.scaled(norm_sq);
    if !rep.adjoint(0, psi).vanishes(tol) {
        return Err(Error::Precondition("S_0^* ψ does not vanish".into()));
    }
    let mut earlier: Vec<V> = Vec::new();
    for word in enumerate_words(max_depth, rep.arity()) {
        let v = rep.apply_word(&word, psi);
        if earlier.iter().any(|e| !e.orthogonal_to(&v, tol)) {
            return Ok(Some(word));
        }
        earlier.push(v);
    }
    Ok(None)
}

/// The depth-bounded spanning family `S₀^m S_J ψ` of `H(ψ)`.
#[derive(Clone, Debug)]
pub struct SubspaceFrame<V> {
    pub k: Option<MultiIndex>,
    /// Full words `0^m·J`, deduplicated, in canonical order.
    pub words: Vec<MultiIndex>,
    pub vectors: Vec<V>,
}

impl<V: HilbertVector> SubspaceFrame<V> {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Largest `|⟨v_a|v_b⟩|` over distinct members.
    pub fn max_cross_inner(&self) -> f64 {
        let n = self.vectors.len();
        (0..n)
            .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
            .map(|(a, b)| self.vectors[a].inner_c(&self.vectors[b]).norm())
            .fold(0.0, f64::max)
    }

    pub fn is_orthogonal(&self, tol: Tolerance) -> bool {
        let n = self.vectors.len();
        (0..n).all(|a| (a + 1..n).all(|b| self.vectors[a].orthogonal_to(&self.vectors[b], tol)))
    }
}

/// Frame for `ψ` with words `J < K` (or, without `K`, all `J` with
/// `Σ(J) ≤ 1`), `|J| ≤ depth` and `m ≤ depth`. The empty word is always
/// included.
pub fn build_frame<V, R>(psi: &V, k: Option<&MultiIndex>, depth: usize, rep: &R) -> SubspaceFrame<V>
where
    V: HilbertVector,
    R: Representation<V>,
{
    let base = rep.arity();
    let js: Vec<MultiIndex> = enumerate_words(depth, base)
        .filter(|j| match k {
            Some(k) => j < k || j.is_empty(),
            None => j.weight() <= 1,
        })
        .collect();
    let mut words = BTreeSet::new();
    for m in 0..=depth {
        let zeros = MultiIndex::new(base, vec![0; m]).expect("zero is a valid letter");
        for j in &js {
            words.insert(zeros.concat(j));
        }
    }
    let words: Vec<MultiIndex> = words.into_iter().collect();
    let vectors = words.iter().map(|w| rep.apply_word(w, psi)).collect();
    SubspaceFrame {
        k: k.cloned(),
        words,
        vectors,
    }
}

/// Whether every vector of `a` is orthogonal to every vector of `b`.
pub fn frames_orthogonal<V: HilbertVector>(
    a: &SubspaceFrame<V>,
    b: &SubspaceFrame<V>,
    tol: Tolerance,
) -> bool {
    a.vectors
        .iter()
        .all(|u| b.vectors.iter().all(|v| u.orthogonal_to(v, tol)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::basis::{walsh, walsh_index_of};
    use crate::cuntz::IntervalRep2;
    use crate::function_space::HybridFunction;
    use crate::numeric::DyadicStep;

    #[test]
    fn walsh_generator_has_no_k() {
        let k = compute_k(&walsh(1), &IntervalRep2, 8, Tolerance::Exact).unwrap();
        assert_eq!(k, None);
    }

    #[test]
    fn sine_generator_k() {
        let k = compute_k(
            &HybridFunction::sine(1),
            &IntervalRep2,
            4,
            Tolerance::Abs(1e-10),
        )
        .unwrap();
        assert_eq!(k, Some(MultiIndex::binary(&[1, 1])));
    }

    #[test]
    fn precondition_checked() {
        let err = compute_k(&DyadicStep::one(), &IntervalRep2, 3, Tolerance::Exact);
        assert!(matches!(err, Err(Error::Precondition(_))));
        assert_eq!(
            compute_k(&DyadicStep::zero(), &IntervalRep2, 3, Tolerance::Exact),
            Err(Error::ZeroVector)
        );
    }

    #[test]
    fn walsh_frame_reproduces_walsh_functions() {
        let frame = build_frame(&walsh(1), None, 3, &IntervalRep2);
        assert!(frame.is_orthogonal(Tolerance::Exact));
        for (w, v) in frame.words.iter().zip(&frame.vectors) {
            assert_eq!(*v, walsh(walsh_index_of(w)));
        }
    }

    #[test]
    fn sine_frames() {
        let tol = Tolerance::Abs(1e-10);
        let s1 = HybridFunction::sine(1);
        let k = compute_k(&s1, &IntervalRep2, 4, tol).unwrap();
        let f1 = build_frame(&s1, k.as_ref(), 3, &IntervalRep2);
        assert!(f1.max_cross_inner() < 1e-10);
        let s3 = HybridFunction::sine(3);
        let f3 = build_frame(&s3, k.as_ref(), 3, &IntervalRep2);
        assert!(frames_orthogonal(&f1, &f3, tol));
    }
}
