//! Odd sines are generating vectors for the interval representation: `S0^*`
//! kills them and their orbits under `S1 S0^k` stay orthogonal. `K(ψ)` and
//! the frame `H(ψ)` are computed for `s1`.

use cuntz_bases::basis::{build_frame, compute_k, frames_orthogonal};
use cuntz_bases::cuntz::{IntervalRep2, Representation, Tolerance};
use cuntz_bases::function_space::make_sine;

fn main() -> cuntz_bases::Result<()> {
    let rep = IntervalRep2;
    for n in 1..=8 {
        let s = make_sine(n);
        println!("‖S0* s{n}‖ = {:.6}", rep.adjoint(0, &s).norm());
    }

    let s1 = make_sine(1);
    let mut worst: f64 = 0.0;
    let mut g = s1.clone();
    for _ in 0..=4 {
        let h = rep.isometry(1, &g);
        for m in 1..=10 {
            worst = worst.max(make_sine(m).inner(&h).abs());
        }
        g = rep.isometry(0, &g);
    }
    println!("max |⟨s_m|S1 S0^k s1⟩| over m ≤ 10, k ≤ 4: {worst:.2e}");

    let tol = Tolerance::Abs(1e-10);
    let k1 = compute_k(&s1, &rep, 4, tol)?;
    println!(
        "K(s1) = {}",
        k1.as_ref().map_or("none".into(), |k| k.to_string())
    );
    let frame1 = build_frame(&s1, k1.as_ref(), 3, &rep);
    println!(
        "H(s1): {} vectors, orthogonal = {}, max cross inner product {:.1e}",
        frame1.len(),
        frame1.is_orthogonal(tol),
        frame1.max_cross_inner()
    );

    let s3 = make_sine(3);
    let k3 = compute_k(&s3, &rep, 4, tol)?;
    let frame3 = build_frame(&s3, k3.as_ref(), 3, &rep);
    println!(
        "H(s1) ⟂ H(s3): {}",
        frames_orthogonal(&frame1, &frame3, tol)
    );
    Ok(())
}
