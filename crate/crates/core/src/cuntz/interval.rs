use num_complex::Complex64;
use num_traits::Zero;

use super::{HilbertVector, Representation, Tolerance};
use crate::numeric::cells;
use crate::numeric::rational::to_f64;
use crate::numeric::DyadicStep;

/// The two-branch representation on L²(0,1) from the doubling map
/// `σ(x) = 2x mod 1` with branches `τ₀(x) = x/2`, `τ₁(x) = (x+1)/2`:
///
/// ```text
/// S₀f = f∘α₀ + f∘α₁      S₀*f = ½(f∘τ₀ + f∘τ₁)
/// S₁f = f∘α₀ − f∘α₁      S₁*f = ½(f∘τ₀ − f∘τ₁)
/// ```
///
/// On dyadic steps this is pure coefficient bookkeeping and stays exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct IntervalRep2;

impl IntervalRep2 {
    pub fn s_apply(&self, j: usize, f: &DyadicStep) -> DyadicStep {
        assert!(j < 2, "generator index {j} out of range");
        DyadicStep::from_raw(f.level() + 1, cells::isometry(f.coeffs(), j))
    }

    pub fn s_adjoint(&self, j: usize, f: &DyadicStep) -> DyadicStep {
        assert!(j < 2, "generator index {j} out of range");
        let (level, coeffs) = cells::adjoint(f.level(), f.coeffs(), j);
        DyadicStep::from_raw(level, coeffs)
    }
}

impl HilbertVector for DyadicStep {
    fn inner_c(&self, other: &Self) -> Complex64 {
        Complex64::new(to_f64(&self.inner(other)), 0.0)
    }

    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }

    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }

    fn orthogonal_to(&self, other: &Self, tol: Tolerance) -> bool {
        match tol {
            Tolerance::Exact => self.inner(other).is_zero(),
            Tolerance::Abs(t) => to_f64(&self.inner(other)).abs() <= t,
        }
    }

    fn vanishes(&self, tol: Tolerance) -> bool {
        match tol {
            Tolerance::Exact => self.is_zero(),
            Tolerance::Abs(t) => to_f64(&self.norm_sq()).sqrt() <= t,
        }
    }
}

impl Representation<DyadicStep> for IntervalRep2 {
    fn arity(&self) -> usize {
        2
    }

    fn isometry(&self, j: usize, v: &DyadicStep) -> DyadicStep {
        self.s_apply(j, v)
    }

    fn adjoint(&self, j: usize, v: &DyadicStep) -> DyadicStep {
        self.s_adjoint(j, v)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational::int;
    use crate::numeric::MultiIndex;

    fn step(v: &[i64]) -> DyadicStep {
        DyadicStep::from_ints(v).unwrap()
    }

    #[test]
    fn apply_examples() {
        let rep = IntervalRep2;
        let c = DyadicStep::constant(int(5));
        assert_eq!(rep.s_apply(0, &c), c);
        assert_eq!(
            rep.s_apply(1, &DyadicStep::one()).coeffs(),
            step(&[1, -1]).coeffs()
        );
        assert_eq!(
            rep.s_apply(1, &step(&[1, -1])).coeffs(),
            step(&[1, -1, -1, 1]).coeffs()
        );
    }

    #[test]
    fn adjoint_examples() {
        let rep = IntervalRep2;
        assert!(rep.s_adjoint(0, &step(&[1, -1])).is_zero());
        assert_eq!(rep.s_adjoint(1, &step(&[1, -1])), DyadicStep::one());
        let c = DyadicStep::constant(int(7));
        assert_eq!(rep.s_adjoint(0, &c), c);
        assert!(rep.s_adjoint(1, &c).is_zero());
        assert_eq!(rep.s_adjoint(1, &c).level(), 0);
    }

    #[test]
    fn word_examples() {
        let rep = IntervalRep2;
        let phi0 = DyadicStep::one();
        let w = rep.apply_word(&MultiIndex::binary(&[1, 1]), &phi0);
        assert_eq!(w.coeffs(), step(&[1, -1, -1, 1]).coeffs());
        let f = step(&[3, -2, 0, 1]);
        assert_eq!(rep.apply_word(&MultiIndex::empty(2), &f), f);
        let j = MultiIndex::binary(&[0, 1, 1]);
        assert_eq!(rep.adjoint_word(&j, &rep.apply_word(&j, &f)), f);
    }

    #[test]
    fn word_order_is_written_order() {
        // S₀S₁φ₀ = S₀[1,-1] = [1,-1,1,-1], whereas S₁S₀φ₀ = [1,1,-1,-1] ≡ [1,-1].
        let rep = IntervalRep2;
        let phi0 = DyadicStep::one();
        let a = rep.apply_word(&MultiIndex::binary(&[0, 1]), &phi0);
        assert_eq!(a.coeffs(), step(&[1, -1, 1, -1]).coeffs());
        let b = rep.apply_word(&MultiIndex::binary(&[1, 0]), &phi0);
        assert_eq!(b, step(&[1, -1]));
    }
}
