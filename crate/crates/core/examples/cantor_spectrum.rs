//! The scale-4 Cantor measure: its spectrum `Λ`, exact orthogonality of the
//! exponentials, Bessel sums of a cylinder indicator and the odd-orbit split.

use cuntz_bases::cantor::{
    bessel_sums, gram_exponentials, indicator_relation_check, lambda_set, mu_hat,
    verify_lambda_partition, CantorStep, DEFAULT_REL_TOL,
};
use cuntz_bases::numeric::rational::to_f64;
use cuntz_bases::numeric::{enumerate_words, MultiIndex};

fn main() {
    let lambda: Vec<u64> = lambda_set(3).iter().map(|l| l.value).collect();
    println!("Λ3 = {lambda:?}");
    for t in [0.5, 1.0, 2.0, 3.0, 4.0, 12.0] {
        println!("|μ̂({t})| = {:.6}", mu_hat(t, DEFAULT_REL_TOL).norm());
    }

    for p in [4, 6, 8] {
        let g = gram_exponentials(p);
        println!(
            "p = {p}: {} points, {} pairs orthogonal: {}",
            g.points, g.pairs_checked, g.passed
        );
    }

    let f = CantorStep::cell_indicator(&MultiIndex::binary(&[0]));
    let sums = bessel_sums(&f, 8, DEFAULT_REL_TOL);
    println!("‖f‖² = {}", to_f64(&f.norm_sq()));
    for (p, s) in sums.iter().enumerate() {
        println!("  Σ over Λ{p}: {s:.9}");
    }

    let exact = enumerate_words(4, 2)
        .filter(|w| !w.is_empty())
        .all(|w| indicator_relation_check(&w).passed);
    println!("cylinder indicators from S_K χ_X, |J| ≤ 4: {exact}");

    let part = verify_lambda_partition(3);
    for (m, orbit) in &part.orbits {
        println!("  m = {m:<3} orbit {orbit:?}");
    }
}
