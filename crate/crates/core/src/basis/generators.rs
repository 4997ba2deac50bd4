//! Index-level bookkeeping for the orthogonal decomposition of L²(0,1) into
//! subspaces `H(S_u ψ) = span{S_{K·u} ψ : Σ(K) ≤ 1}` with `ψ = φ₁`.
//!
//! Since `S₀φ₀ = φ₀`, every Walsh function other than `φ₀` is `S_w φ₁` for
//! exactly one word `w` (its Paley digits with the final `1` removed). The
//! greedy cover below partitions all such words `w` into blocks `K·u`, one
//! block per generator `u`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::cuntz::{IntervalRep2, Representation};
use crate::error::{Error, Result};
use crate::numeric::cells::gram_defect;
use crate::numeric::multiindex::words_of_length;
use crate::numeric::rational::format_ratio;
use crate::numeric::{enumerate_words, DyadicStep, MultiIndex};

#[derive(Clone, Debug)]
pub struct GeneratorCover {
    max_word_len: usize,
    generators: Vec<MultiIndex>,
    /// word ↦ (prefix K, generator u) with word = K·u
    coverage: BTreeMap<MultiIndex, (MultiIndex, MultiIndex)>,
}

impl GeneratorCover {
    pub fn max_word_len(&self) -> usize {
        self.max_word_len
    }

    pub fn generators(&self) -> &[MultiIndex] {
        &self.generators
    }

    pub fn factorization(&self, word: &MultiIndex) -> Option<&(MultiIndex, MultiIndex)> {
        self.coverage.get(word)
    }

    pub fn coverage(&self) -> impl Iterator<Item = (&MultiIndex, &(MultiIndex, MultiIndex))> {
        self.coverage.iter()
    }

    /// Whether every word up to the enumeration depth is covered exactly
    /// once (coverage is a map, so "at most once" is structural).
    pub fn is_bijective(&self) -> bool {
        (0..=self.max_word_len).all(|len| {
            words_of_length(len, 2).all(|w| match self.coverage.get(&w) {
                Some((k, u)) => k.concat(u) == w && k.weight() <= 1,
                None => false,
            })
        })
    }
}

/// Paley index of `S_w φ₁`, i.e. of the word `w·(1)`.
pub fn walsh_index_of(word: &MultiIndex) -> u64 {
    word.code() as u64 + (1u64 << word.len())
}

/// Scans words `u` in canonical order; an uncovered `u` becomes a generator
/// and claims every `K·u` with `Σ(K) ≤ 1` up to `max_word_len` letters.
pub fn greedy_generators(max_word_len: usize) -> Result<GeneratorCover> {
    let mut generators = Vec::new();
    let mut coverage: BTreeMap<MultiIndex, (MultiIndex, MultiIndex)> = BTreeMap::new();
    for u in enumerate_words(max_word_len, 2) {
        if coverage.contains_key(&u) {
            continue;
        }
        generators.push(u.clone());
        for len in 0..=max_word_len - u.len() {
            for k in light_words(len) {
                let w = k.concat(&u);
                if coverage.contains_key(&w) {
                    return Err(Error::DoubleCover(w.to_string()));
                }
                coverage.insert(w, (k, u.clone()));
            }
        }
    }
    Ok(GeneratorCover {
        max_word_len,
        generators,
        coverage,
    })
}

/// Binary words of length `len` with at most one `1`.
fn light_words(len: usize) -> impl Iterator<Item = MultiIndex> {
    std::iter::once(MultiIndex::binary(&vec![0; len])).chain((0..len).map(move |i| {
        let mut d = vec![0; len];
        d[i] = 1;
        MultiIndex::binary(&d)
    }))
}

#[derive(Clone, Debug, Serialize)]
pub struct DecompositionReport {
    pub level: u32,
    pub vectors: usize,
    pub expected: usize,
    pub passed: bool,
    /// First Gram entry off the identity: (row label, column label, value).
    pub defect: Option<(String, String, String)>,
}

/// Certifies the decomposition at resolution `level`: `φ₀` together with
/// `S_w φ₁` for every covered `w` with `|w| < level` is an exactly
/// orthonormal family of `2^level` level-`level` steps, hence a basis of that
/// space.
pub fn verify_decomposition(cover: &GeneratorCover, level: u32) -> Result<DecompositionReport> {
    let k = level as usize;
    if k > cover.max_word_len + 1 {
        return Err(Error::Precondition(format!(
            "cover depth {} too shallow for level {level}",
            cover.max_word_len
        )));
    }
    let rep = IntervalRep2;
    let psi = rep.s_apply(1, &DyadicStep::one());
    let mut labels = vec!["φ0".to_string()];
    let mut vectors = vec![DyadicStep::one()];
    for (w, (kk, u)) in cover.coverage.iter().filter(|(w, _)| w.len() < k) {
        labels.push(format!("S_{}·{} ψ", kk.to_compact(), u.to_compact()));
        vectors.push(rep.apply_word(w, &psi));
    }
    let in_space = vectors.iter().all(|v| v.level() <= level);
    let forms: Vec<_> = vectors.iter().map(|v| v.integer_form()).collect();
    let defect = gram_defect(&forms)
        .map(|(i, j, g)| (labels[i].clone(), labels[j].clone(), format_ratio(&g)));
    let expected = 1usize << level;
    Ok(DecompositionReport {
        level,
        vectors: vectors.len(),
        expected,
        passed: in_space && defect.is_none() && vectors.len() == expected,
        defect,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_generators_match_phi_1_7_11_13() {
        let cover = greedy_generators(3).unwrap();
        let first: Vec<Vec<usize>> = cover.generators()[..4]
            .iter()
            .map(|g| g.digits().to_vec())
            .collect();
        assert_eq!(
            first,
            vec![vec![], vec![1, 1], vec![1, 1, 0], vec![1, 0, 1]]
        );
        let idx: Vec<u64> = cover.generators()[..4].iter().map(walsh_index_of).collect();
        assert_eq!(idx, vec![1, 7, 11, 13]);
    }

    #[test]
    fn depth_zero_has_only_the_empty_generator() {
        let cover = greedy_generators(0).unwrap();
        assert_eq!(cover.generators(), &[MultiIndex::empty(2)]);
        assert!(cover.is_bijective());
    }

    #[test]
    fn small_decompositions() {
        let cover = greedy_generators(4).unwrap();
        let r1 = verify_decomposition(&cover, 1).unwrap();
        assert!(r1.passed && r1.vectors == 2);
        let r3 = verify_decomposition(&cover, 3).unwrap();
        assert!(r3.passed && r3.vectors == 8, "{r3:?}");
        assert!(verify_decomposition(&cover, 7).is_err());
    }
}
