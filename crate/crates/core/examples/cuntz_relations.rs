//! Checks the Cuntz relations for the interval, Cantor and N-adic
//! representations and the unitarity of the N-adic filter matrix.

use num_complex::Complex64;

use cuntz_bases::cantor::{CantorRep, CantorStep};
use cuntz_bases::cuntz::{
    verify_cuntz, verify_unitary_matrix, GeneralRepN, IntervalRep2, NAdicStep, Tolerance,
};
use cuntz_bases::numeric::DyadicStep;

fn main() {
    let steps: Vec<DyadicStep> = (0..16).map(|i| DyadicStep::indicator(4, i)).collect();
    let report = verify_cuntz(&IntervalRep2, &steps, Tolerance::Exact);
    for c in &report.checks {
        println!("interval  {:<22} passed = {}", c.relation, c.passed);
    }

    let cells: Vec<CantorStep> = steps.into_iter().map(CantorStep::from).collect();
    let report = verify_cuntz(&CantorRep, &cells, Tolerance::Exact);
    println!("Cantor    all relations exact: {}", report.passed());

    for n in [3, 4, 5] {
        let vectors: Vec<NAdicStep> = (0..n * n)
            .map(|i| {
                let coeffs = (0..n * n)
                    .map(|j| Complex64::new((i * j % 7) as f64, (i + j) as f64 / 3.0))
                    .collect();
                NAdicStep::new(n, 2, coeffs)
            })
            .collect();
        let report = verify_cuntz(&GeneralRepN::new(n), &vectors, Tolerance::Abs(1e-12));
        let samples: Vec<f64> = (0..50).map(|i| i as f64 / 50.0).collect();
        let unitary = verify_unitary_matrix(n, &samples, 1e-12);
        println!(
            "N = {n}     relations max violation {:.1e}, filter matrix unitary: {}",
            report.max_violation(),
            unitary.passed
        );
    }
}
