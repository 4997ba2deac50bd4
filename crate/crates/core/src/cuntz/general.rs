use num_complex::Complex64;

use super::{HilbertVector, Representation};

/// `e^{i2πm/N}`, exact for quarter turns.
pub(crate) fn root_of_unity(m: i64, n: usize) -> Complex64 {
    let n = n as i64;
    let m = m.rem_euclid(n);
    if (4 * m) % n == 0 {
        return match (4 * m) / n {
            0 => Complex64::new(1.0, 0.0),
            1 => Complex64::new(0.0, 1.0),
            2 => Complex64::new(-1.0, 0.0),
            _ => Complex64::new(0.0, -1.0),
        };
    }
    Complex64::from_polar(1.0, std::f64::consts::TAU * m as f64 / n as f64)
}

/// Complex step function on the `N^k` cells `[i·N^-k, (i+1)·N^-k)`.
#[derive(Clone, Debug, PartialEq)]
pub struct NAdicStep {
    base: usize,
    level: u32,
    coeffs: Vec<Complex64>,
}

impl NAdicStep {
    pub fn new(base: usize, level: u32, coeffs: Vec<Complex64>) -> Self {
        assert!(base >= 2);
        assert_eq!(coeffs.len(), base.pow(level), "need N^level coefficients");
        NAdicStep {
            base,
            level,
            coeffs,
        }
    }

    pub fn constant(base: usize, c: Complex64) -> Self {
        Self::new(base, 0, vec![c])
    }

    pub fn indicator(base: usize, level: u32, index: usize) -> Self {
        let mut coeffs = vec![Complex64::new(0.0, 0.0); base.pow(level)];
        coeffs[index] = Complex64::new(1.0, 0.0);
        Self::new(base, level, coeffs)
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn refine(&self, target: u32) -> Self {
        assert!(target >= self.level);
        let rep = self.base.pow(target - self.level);
        let coeffs = self
            .coeffs
            .iter()
            .flat_map(|c| std::iter::repeat_n(*c, rep))
            .collect();
        Self::new(self.base, target, coeffs)
    }

    fn zip_with(&self, other: &Self, op: impl Fn(Complex64, Complex64) -> Complex64) -> Self {
        assert_eq!(self.base, other.base);
        let level = self.level.max(other.level);
        let (a, b) = (self.refine(level), other.refine(level));
        let coeffs = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| op(*x, *y))
            .collect();
        Self::new(self.base, level, coeffs)
    }
}

impl HilbertVector for NAdicStep {
    fn inner_c(&self, other: &Self) -> Complex64 {
        assert_eq!(self.base, other.base);
        let level = self.level.max(other.level);
        let (a, b) = (self.refine(level), other.refine(level));
        let sum: Complex64 = a
            .coeffs
            .iter()
            .zip(&b.coeffs)
            .map(|(x, y)| x.conj() * y)
            .sum();
        sum / self.base.pow(level) as f64
    }

    fn plus(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x + y)
    }

    fn minus(&self, other: &Self) -> Self {
        self.zip_with(other, |x, y| x - y)
    }
}

/// The representation `S_j f = Σ_k e^{i2πjk/N} χ_{τ_k(X)} f∘σ` on [0,1) with
/// `σ(x) = Nx mod 1` and `τ_k(x) = (x+k)/N`, acting on N-adic steps.
///
/// Equivalently `(S_j f)(x) = m_j(x) f(σ(x))` with the filter
/// `m_j = Σ_k e^{i2πjk/N} χ_{τ_k(X)}`, unimodular and constant on each
/// branch cell. The adjoint is `S_j^* f = (1/N) Σ_k e^{-i2πjk/N} f∘τ_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneralRepN {
    n: usize,
}

impl GeneralRepN {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "a Cuntz representation needs N >= 2");
        GeneralRepN { n }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Branch index `k` with `x ∈ τ_k([0,1))`.
    pub fn branch(&self, x: f64) -> usize {
        ((x * self.n as f64).floor().max(0.0) as usize).min(self.n - 1)
    }

    pub fn tau(&self, k: usize, x: f64) -> f64 {
        (x + k as f64) / self.n as f64
    }

    /// `m_j(x)`.
    pub fn filter(&self, j: usize, x: f64) -> Complex64 {
        root_of_unity((j * self.branch(x)) as i64, self.n)
    }
}

impl Representation<NAdicStep> for GeneralRepN {
    fn arity(&self) -> usize {
        self.n
    }

    fn isometry(&self, j: usize, v: &NAdicStep) -> NAdicStep {
        assert_eq!(v.base, self.n);
        assert!(j < self.n);
        let mut coeffs = Vec::with_capacity(v.coeffs.len() * self.n);
        for k in 0..self.n {
            let w = root_of_unity((j * k) as i64, self.n);
            coeffs.extend(v.coeffs.iter().map(|c| w * c));
        }
        NAdicStep::new(self.n, v.level + 1, coeffs)
    }

    fn adjoint(&self, j: usize, v: &NAdicStep) -> NAdicStep {
        assert_eq!(v.base, self.n);
        assert!(j < self.n);
        let v = if v.level == 0 { v.refine(1) } else { v.clone() };
        let block = v.coeffs.len() / self.n;
        let coeffs = (0..block)
            .map(|i| {
                let s: Complex64 = (0..self.n)
                    .map(|k| root_of_unity(-((j * k) as i64), self.n) * v.coeffs[k * block + i])
                    .sum();
                s / self.n as f64
            })
            .collect();
        NAdicStep::new(self.n, v.level - 1, coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quarter_turns_are_exact() {
        assert_eq!(root_of_unity(1, 2), Complex64::new(-1.0, 0.0));
        assert_eq!(root_of_unity(3, 4), Complex64::new(0.0, -1.0));
        assert_eq!(root_of_unity(-1, 4), Complex64::new(0.0, -1.0));
        let w = root_of_unity(1, 3);
        assert!((w - Complex64::new(-0.5, 3f64.sqrt() / 2.0)).norm() < 1e-15);
    }

    #[test]
    fn filters_are_unimodular_constants_on_branches() {
        let rep = GeneralRepN::new(3);
        for j in 0..3 {
            for k in 0..3 {
                let a = rep.filter(j, rep.tau(k, 0.1));
                let b = rep.filter(j, rep.tau(k, 0.9));
                assert!((a - b).norm() < 1e-15);
                assert!((a.norm() - 1.0).abs() < 1e-15);
            }
        }
    }

    #[test]
    fn n2_matches_interval_representation() {
        let rep = GeneralRepN::new(2);
        let f = NAdicStep::new(
            2,
            1,
            vec![Complex64::new(1.0, 0.0), Complex64::new(-1.0, 0.0)],
        );
        let g = rep.isometry(1, &f);
        let expected = [1.0, -1.0, -1.0, 1.0];
        for (c, e) in g.coeffs().iter().zip(expected) {
            assert_eq!(*c, Complex64::new(e, 0.0));
        }
        assert_eq!(rep.adjoint(1, &g), f);
    }

    #[test]
    fn adjoint_of_constant_refines_first() {
        let rep = GeneralRepN::new(3);
        let c = NAdicStep::constant(3, Complex64::new(2.0, 0.0));
        let a0 = rep.adjoint(0, &c);
        assert!((a0.coeffs()[0] - Complex64::new(2.0, 0.0)).norm() < 1e-15);
        let a1 = rep.adjoint(1, &c);
        assert!(a1.coeffs()[0].norm() < 1e-15);
    }
}
