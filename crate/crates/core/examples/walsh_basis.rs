//! Builds the first sixteen Walsh-Paley functions from `φ0 = 1` with the two
//! interval isometries, checks their Gram matrix exactly and expands a signal.

use cuntz_bases::basis::{walsh, walsh_expand, walsh_gram_defect, walsh_synthesize};
use cuntz_bases::cuntz::{IntervalRep2, Representation};
use cuntz_bases::numeric::rational::format_short;
use cuntz_bases::numeric::{DyadicStep, MultiIndex};

fn signs(f: &DyadicStep, level: u32) -> String {
    f.refine(level)
        .expect("finer level")
        .coeffs()
        .iter()
        .map(|c| if c.numer() > &0.into() { '+' } else { '-' })
        .collect()
}

fn main() -> cuntz_bases::Result<()> {
    for n in 0..16u64 {
        let digits: Vec<usize> = (0..64 - n.leading_zeros())
            .map(|i| ((n >> i) & 1) as usize)
            .collect();
        let via_word = IntervalRep2.apply_word(&MultiIndex::binary(&digits), &DyadicStep::one());
        assert_eq!(via_word, walsh(n));
        println!("φ{n:<2} {}", signs(&walsh(n), 4));
    }

    match walsh_gram_defect(6) {
        None => println!("Gram of φ0..φ63 is the identity"),
        Some((i, j, g)) => println!("Gram defect at ({i}, {j}): {g}"),
    }

    let f = DyadicStep::from_ints(&[3, 1, 4, 1, 5, 9, 2, 6])?;
    let coeffs = walsh_expand(&f);
    let shown: Vec<String> = coeffs.iter().map(format_short).collect();
    println!("Walsh coefficients of {f}: [{}]", shown.join(", "));
    assert_eq!(walsh_synthesize(&coeffs)?, f);
    Ok(())
}
