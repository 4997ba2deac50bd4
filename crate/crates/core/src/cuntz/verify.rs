use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{GeneralRepN, HilbertVector, Representation, Tolerance};

/// Outcome of one relation checked over a batch of test vectors.
#[derive(Clone, Debug, Serialize)]
pub struct RelationCheck {
    pub relation: String,
    #[serde(rename = "maxViolation")]
    pub max_violation: f64,
    /// Where the largest violation occurred.
    pub witness: Option<String>,
    pub passed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct CuntzReport {
    pub checks: Vec<RelationCheck>,
}

impl CuntzReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn max_violation(&self) -> f64 {
        self.checks
            .iter()
            .map(|c| c.max_violation)
            .fold(0.0, f64::max)
    }
}

struct Worst {
    violation: f64,
    witness: Option<String>,
    passed: bool,
}

impl Worst {
    fn new() -> Self {
        Worst {
            violation: 0.0,
            witness: None,
            passed: true,
        }
    }

    fn merge(mut self, other: Worst) -> Worst {
        self.passed &= other.passed;
        if other.violation > self.violation || (self.witness.is_none() && !other.passed) {
            self.violation = other.violation;
            self.witness = other.witness;
        }
        self
    }

    fn observe<V: HilbertVector>(
        diff: &V,
        tol: Tolerance,
        witness: impl FnOnce() -> String,
    ) -> Worst {
        let passed = diff.vanishes(tol);
        let violation = diff.norm_sq().max(0.0).sqrt();
        Worst {
            violation,
            witness: (!passed || violation > 0.0).then(witness),
            passed,
        }
    }

    fn into_check(self, relation: &str) -> RelationCheck {
        RelationCheck {
            relation: relation.to_string(),
            max_violation: self.violation,
            witness: self.witness,
            passed: self.passed,
        }
    }
}

/// Checks `S_j^*S_k f = δ_{jk} f` and `Σ_k S_kS_k^* f = f` on every test
/// vector. A violation is reported, never raised.
pub fn verify_cuntz<V, R>(rep: &R, vectors: &[V], tol: Tolerance) -> CuntzReport
where
    V: HilbertVector,
    R: Representation<V> + Sync,
{
    let n = rep.arity();
    let orthogonality = vectors
        .par_iter()
        .enumerate()
        .map(|(idx, f)| {
            let mut worst = Worst::new();
            for k in 0..n {
                let sk = rep.isometry(k, f);
                for j in 0..n {
                    let lhs = rep.adjoint(j, &sk);
                    let diff = if j == k { lhs.minus(f) } else { lhs };
                    worst = worst.merge(Worst::observe(&diff, tol, || {
                        format!("j={j}, k={k}, vector #{idx}")
                    }));
                }
            }
            worst
        })
        .reduce(Worst::new, Worst::merge);

    let completeness = vectors
        .par_iter()
        .enumerate()
        .map(|(idx, f)| {
            let project = |k: usize| rep.isometry(k, &rep.adjoint(k, f));
            let sum = (1..n).fold(project(0), |acc, k| acc.plus(&project(k)));
            Worst::observe(&sum.minus(f), tol, || format!("vector #{idx}"))
        })
        .reduce(Worst::new, Worst::merge);

    CuntzReport {
        checks: vec![
            orthogonality.into_check("S_j^* S_k = δ_jk 1"),
            completeness.into_check("Σ_k S_k S_k^* = 1"),
        ],
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct UnitaryReport {
    pub n: usize,
    pub samples: usize,
    /// Largest entry of `|UU^* − I|` over the samples.
    pub max_deviation: f64,
    pub passed: bool,
}

/// Builds `U(x) = N^{-1/2} (m_j(τ_k(x)))_{j,k}` at each sample and checks
/// `UU^* = I`. The normalization is applied after the product, so for
/// `N ∈ {2, 4}` the check is exact in floating point.
pub fn verify_unitary_matrix(n: usize, samples: &[f64], tol: f64) -> UnitaryReport {
    let rep = GeneralRepN::new(n);
    let max_deviation = samples
        .iter()
        .map(|&x| {
            let m: Vec<Vec<Complex64>> = (0..n)
                .map(|j| (0..n).map(|k| rep.filter(j, rep.tau(k, x))).collect())
                .collect();
            let mut dev: f64 = 0.0;
            for j in 0..n {
                for l in 0..n {
                    let s: Complex64 = (0..n).map(|k| m[j][k] * m[l][k].conj()).sum();
                    let entry = s / n as f64;
                    let target = if j == l { 1.0 } else { 0.0 };
                    dev = dev.max((entry - Complex64::new(target, 0.0)).norm());
                }
            }
            dev
        })
        .fold(0.0, f64::max);
    UnitaryReport {
        n,
        samples: samples.len(),
        max_deviation,
        passed: max_deviation <= tol,
    }
}

/// The matrix `U(x)` itself.
pub fn unitary_matrix(n: usize, x: f64) -> Vec<Vec<Complex64>> {
    let rep = GeneralRepN::new(n);
    let scale = 1.0 / (n as f64).sqrt();
    (0..n)
        .map(|j| {
            (0..n)
                .map(|k| rep.filter(j, rep.tau(k, x)) * scale)
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cuntz::{IntervalRep2, NAdicStep};
    use crate::numeric::DyadicStep;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn interval_rep_passes_exactly_on_indicators() {
        let vectors: Vec<DyadicStep> = (0..8).map(|i| DyadicStep::indicator(3, i)).collect();
        let report = verify_cuntz(&IntervalRep2, &vectors, Tolerance::Exact);
        assert!(report.passed(), "{report:?}");
        assert_eq!(report.max_violation(), 0.0);
    }

    #[test]
    fn triadic_rep_passes_to_1e_12() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let rep = GeneralRepN::new(3);
        let vectors: Vec<NAdicStep> = (0..100)
            .map(|_| {
                let coeffs = (0..9)
                    .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
                    .collect();
                NAdicStep::new(3, 2, coeffs)
            })
            .collect();
        let report = verify_cuntz(&rep, &vectors, Tolerance::Abs(1e-12));
        assert!(report.passed(), "{report:?}");
        assert!(report.max_violation() < 1e-12);
    }

    #[test]
    fn broken_representation_is_reported() {
        struct Broken;
        impl Representation<DyadicStep> for Broken {
            fn arity(&self) -> usize {
                2
            }
            fn isometry(&self, _j: usize, v: &DyadicStep) -> DyadicStep {
                IntervalRep2.s_apply(0, v)
            }
            fn adjoint(&self, _j: usize, v: &DyadicStep) -> DyadicStep {
                IntervalRep2.s_adjoint(0, v)
            }
        }
        let vectors = vec![DyadicStep::indicator(1, 0)];
        let report = verify_cuntz(&Broken, &vectors, Tolerance::Exact);
        assert!(!report.passed());
        assert!(report.checks.iter().all(|c| c.witness.is_some()));
        let json = serde_json::to_value(&report.checks[0]).unwrap();
        assert!(json.get("maxViolation").is_some());
    }

    #[test]
    fn hadamard_matrix_for_n2() {
        let u = unitary_matrix(2, 0.3);
        let h = std::f64::consts::FRAC_1_SQRT_2;
        let expected = [[h, h], [h, -h]];
        for j in 0..2 {
            for k in 0..2 {
                assert!((u[j][k] - Complex64::new(expected[j][k], 0.0)).norm() < 1e-15);
            }
        }
        let report = verify_unitary_matrix(2, &[0.3], 0.0);
        assert!(report.passed);
        assert_eq!(report.max_deviation, 0.0);
    }

    #[test]
    fn dft_identity_for_n4() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let xs: Vec<f64> = (0..50).map(|_| rng.gen_range(0.0..1.0)).collect();
        let report = verify_unitary_matrix(4, &xs, 1e-12);
        assert!(report.passed && report.max_deviation < 1e-12);
        let dyadic: Vec<f64> = (0..16).map(|i| i as f64 / 16.0).collect();
        assert!(verify_unitary_matrix(2, &dyadic, 0.0).passed);
    }
}
