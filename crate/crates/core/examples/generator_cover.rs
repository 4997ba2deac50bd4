//! Greedy cover of binary words by `K·u` with `Σ(K) ≤ 1`: each generator `u`
//! yields a generating vector `S_u φ1`, and together with `φ0` the orbits give
//! an orthonormal basis at every resolution.

use cuntz_bases::basis::{greedy_generators, verify_decomposition, walsh_index_of};

fn main() -> cuntz_bases::Result<()> {
    let cover = greedy_generators(8)?;
    println!(
        "{} generators for words of length ≤ 8",
        cover.generators().len()
    );
    for u in cover.generators().iter().take(8) {
        println!(
            "  u = {:<6} generates φ{}",
            u.to_compact(),
            walsh_index_of(u)
        );
    }
    println!("bijective cover: {}", cover.is_bijective());

    for level in 1..=9 {
        let r = verify_decomposition(&cover, level)?;
        println!(
            "level {level}: {:>3} of {:>3} vectors, orthonormal basis: {}",
            r.vectors, r.expected, r.passed
        );
    }
    Ok(())
}
