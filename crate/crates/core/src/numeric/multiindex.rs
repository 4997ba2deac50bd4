//! Finite words over `{0, …, N-1}` indexing operator monomials `S_J`.
//!
//! Words are ordered first by length and then by their integer code
//! `j₀ + j₁N + … + j_pN^p`. The code alone does not separate words that
//! differ only by trailing zeros (`(1)` and `(1,0)` both have code 1), so the
//! length comes first.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultiIndex {
    base: usize,
    digits: Vec<usize>,
}

impl MultiIndex {
    pub fn new(base: usize, digits: Vec<usize>) -> Result<Self> {
        assert!(base >= 2, "alphabet needs at least two letters");
        if let Some(&digit) = digits.iter().find(|&&d| d >= base) {
            return Err(Error::Digit { digit, base });
        }
        Ok(MultiIndex { base, digits })
    }

    /// Binary word; panics on a digit outside {0,1}.
    pub fn binary(digits: &[usize]) -> Self {
        Self::new(2, digits.to_vec()).expect("binary digits")
    }

    pub fn empty(base: usize) -> Self {
        MultiIndex {
            base,
            digits: Vec::new(),
        }
    }

    /// The word whose code is `code`, padded with zeros to `len` letters.
    pub fn from_code(base: usize, mut code: u128, len: usize) -> Self {
        let mut digits = Vec::with_capacity(len);
        for _ in 0..len {
            digits.push((code % base as u128) as usize);
            code /= base as u128;
        }
        debug_assert_eq!(code, 0, "code does not fit in {len} digits");
        MultiIndex { base, digits }
    }

    /// Base-`N` digits of `n`, least significant first, without trailing zeros.
    pub fn digits_of(base: usize, mut n: u128) -> Self {
        let mut digits = Vec::new();
        while n > 0 {
            digits.push((n % base as u128) as usize);
            n /= base as u128;
        }
        MultiIndex { base, digits }
    }

    pub fn base(&self) -> usize {
        self.base
    }

    pub fn digits(&self) -> &[usize] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `Σ(J)`, the sum of the letters.
    pub fn weight(&self) -> usize {
        self.digits.iter().sum()
    }

    pub fn code(&self) -> u128 {
        self.digits
            .iter()
            .rev()
            .fold(0u128, |acc, &d| acc * self.base as u128 + d as u128)
    }

    pub fn concat(&self, other: &MultiIndex) -> MultiIndex {
        debug_assert_eq!(self.base, other.base);
        let mut digits = self.digits.clone();
        digits.extend_from_slice(&other.digits);
        MultiIndex {
            base: self.base,
            digits,
        }
    }

    /// `J·j`.
    pub fn push(&self, letter: usize) -> MultiIndex {
        let mut digits = self.digits.clone();
        digits.push(letter);
        MultiIndex {
            base: self.base,
            digits,
        }
    }

    /// `j·J`.
    pub fn prepend(&self, letter: usize) -> MultiIndex {
        let mut digits = Vec::with_capacity(self.len() + 1);
        digits.push(letter);
        digits.extend_from_slice(&self.digits);
        MultiIndex {
            base: self.base,
            digits,
        }
    }

    pub fn is_prefix_of(&self, other: &MultiIndex) -> bool {
        other.digits.starts_with(&self.digits)
    }

    /// `JK := Σ j_i k_i`, defined for words of equal length.
    pub fn dot(&self, other: &MultiIndex) -> usize {
        debug_assert_eq!(self.len(), other.len());
        self.digits
            .iter()
            .zip(&other.digits)
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Compact text form: the letters run together (`011`), or `∅` for the
    /// empty word. Alphabets beyond ten letters separate with dots.
    pub fn to_compact(&self) -> String {
        if self.digits.is_empty() {
            return "∅".to_string();
        }
        let sep = if self.base > 10 { "." } else { "" };
        self.digits
            .iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(sep)
    }

    pub fn parse_compact(base: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "∅" || text.is_empty() {
            return Ok(Self::empty(base));
        }
        let parts: Vec<&str> = if base > 10 {
            text.split('.').collect()
        } else {
            text.split("").filter(|s| !s.is_empty()).collect()
        };
        let digits = parts
            .iter()
            .map(|p| {
                p.parse::<usize>().map_err(|_| Error::Parse {
                    text: text.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(base, digits)
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.code().cmp(&other.code()))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{d}")?;
        }
        write!(f, ")")
    }
}

/// All words of length `0..=max_len` in canonical order.
pub fn enumerate_words(max_len: usize, base: usize) -> impl Iterator<Item = MultiIndex> {
    (0..=max_len).flat_map(move |len| words_of_length(len, base))
}

/// All words of exactly `len` letters, by increasing code.
pub fn words_of_length(len: usize, base: usize) -> impl Iterator<Item = MultiIndex> {
    let count = (base as u128).pow(len as u32);
    (0..count).map(move |code| MultiIndex::from_code(base, code, len))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_and_codes() {
        let a = MultiIndex::binary(&[1]);
        let b = MultiIndex::binary(&[0, 1]);
        assert_eq!(a.cmp(&b), Ordering::Less);
        assert_eq!(MultiIndex::binary(&[1, 1, 0]).code(), 3);
        assert_eq!(MultiIndex::binary(&[1, 0, 1]).code(), 5);
        assert_eq!(a.cmp(&a.clone()), Ordering::Equal);
    }

    #[test]
    fn enumeration_matches_hand_listing() {
        let listed: Vec<Vec<usize>> = enumerate_words(2, 2).map(|w| w.digits).collect();
        let expected: Vec<Vec<usize>> = vec![
            vec![],
            vec![0],
            vec![1],
            vec![0, 0],
            vec![1, 0],
            vec![0, 1],
            vec![1, 1],
        ];
        assert_eq!(listed, expected);
    }

    #[test]
    fn enumeration_count_is_geometric() {
        for base in 2..5usize {
            for len in 0..5usize {
                let expected = (base.pow(len as u32 + 1) - 1) / (base - 1);
                assert_eq!(enumerate_words(len, base).count(), expected);
            }
        }
    }

    #[test]
    fn trailing_zero_words_share_a_code() {
        let a = MultiIndex::binary(&[1]);
        let b = MultiIndex::binary(&[1, 0]);
        assert_eq!(a.code(), b.code());
        assert!(a < b);
    }

    #[test]
    fn bad_digit() {
        assert_eq!(
            MultiIndex::new(3, vec![0, 3]).unwrap_err(),
            Error::Digit { digit: 3, base: 3 }
        );
    }

    #[test]
    fn compact_text() {
        let w = MultiIndex::binary(&[0, 1, 1]);
        assert_eq!(w.to_compact(), "011");
        assert_eq!(MultiIndex::parse_compact(2, "011").unwrap(), w);
        assert_eq!(MultiIndex::empty(2).to_compact(), "∅");
        assert_eq!(
            MultiIndex::parse_compact(2, "∅").unwrap(),
            MultiIndex::empty(2)
        );
        let big = MultiIndex::new(12, vec![11, 0]).unwrap();
        assert_eq!(
            MultiIndex::parse_compact(12, &big.to_compact()).unwrap(),
            big
        );
    }

    #[test]
    fn digits_of_is_lsb_first() {
        assert_eq!(MultiIndex::digits_of(2, 6).digits(), &[0, 1, 1]);
        assert!(MultiIndex::digits_of(2, 0).is_empty());
    }
}
