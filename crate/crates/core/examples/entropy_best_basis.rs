//! Projection masses, entropy numbers and the best packet basis of a signal
//! read from a file (one sample per line) or a built-in chirp.

use cuntz_bases::basis::{ingest_signal_f64, signal_from_text};
use cuntz_bases::cuntz::IntervalRep2;
use cuntz_bases::entropy::{best_basis, EntropyTree};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let f = match std::env::args().nth(1) {
        Some(path) => signal_from_text(&std::fs::read_to_string(&path)?, None)?,
        None => {
            let chirp: Vec<f64> = (0..64)
                .map(|i| {
                    let x = i as f64 / 64.0;
                    (2.0 * std::f64::consts::PI * 3.0 * x * x * 8.0).sin()
                })
                .collect();
            ingest_signal_f64(&chirp, Some(6))?
        }
    };

    let depth = 5;
    let rep = IntervalRep2;
    let tree = EntropyTree::build(&f, depth, &rep)?;
    for (k, e) in tree.entropies.iter().enumerate() {
        println!("ε{} = {e:.6}", k + 1);
    }
    println!("partition defect {:.1e}", tree.max_partition_defect());

    let best = best_basis(&f, depth, &rep)?;
    let leaves: Vec<String> = best.leaves.iter().map(|w| w.to_compact()).collect();
    println!(
        "best basis cost {:.6} with leaves {}",
        best.cost,
        leaves.join(" ")
    );
    Ok(())
}
