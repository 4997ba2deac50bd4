use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use num_traits::Zero;

use crate::cuntz::IntervalRep2;
use crate::error::{Error, Result};
use crate::numeric::cells::gram_defect;
use crate::numeric::rational::{dyadic_unit, Rational};
use crate::numeric::DyadicStep;

/// `φ_n` in Paley order: `φ₀ = 𝟙`, `φ_{2n} = S₀φ_n`, `φ_{2n+1} = S₁φ_n`.
///
/// The result sits at its minimal level, the bit length of `n`.
pub fn walsh(n: u64) -> DyadicStep {
    let rep = IntervalRep2;
    let bits = 64 - n.leading_zeros();
    (0..bits).rev().fold(DyadicStep::one(), |acc, b| {
        rep.s_apply(((n >> b) & 1) as usize, &acc)
    })
}

/// Memoized Walsh functions. The cache is insert-only; concurrent callers may
/// race to fill the same slot, which is harmless because the value is
/// deterministic.
#[derive(Debug, Default)]
pub struct WalshSystem {
    cache: RwLock<HashMap<u64, Arc<DyadicStep>>>,
}

impl WalshSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&self, n: u64) -> Arc<DyadicStep> {
        if let Some(hit) = self.cache.read().expect("walsh cache poisoned").get(&n) {
            return Arc::clone(hit);
        }
        let value = if n == 0 {
            DyadicStep::one()
        } else {
            IntervalRep2.s_apply((n & 1) as usize, &self.get(n >> 1))
        };
        let value = Arc::new(value);
        let mut cache = self.cache.write().expect("walsh cache poisoned");
        Arc::clone(cache.entry(n).or_insert(value))
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("walsh cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn bit_reverse(n: usize, bits: u32) -> usize {
    if bits == 0 {
        0
    } else {
        n.reverse_bits() >> (usize::BITS - bits)
    }
}

/// In-place Walsh-Hadamard butterfly, natural (Hadamard) order, unscaled.
fn hadamard_in_place(a: &mut [Rational]) {
    let n = a.len();
    let mut h = 1;
    while h < n {
        for block in (0..n).step_by(2 * h) {
            for i in block..block + h {
                let x = a[i].clone();
                let y = std::mem::replace(&mut a[i + h], Rational::zero());
                a[i] = &x + &y;
                a[i + h] = x - y;
            }
        }
        h *= 2;
    }
}

/// Paley-ordered Walsh coefficients `c_n = ⟨φ_n|f⟩`, `n < 2^k` with `k` the
/// level of `f`. Exact.
///
/// `φ_n(cell c) = (−1)^{Σ j_i x_i}` pairs the `i`-th least significant bit of
/// `n` with the `i`-th most significant bit of `c`, so the Paley index is the
/// bit reversal of the Hadamard index.
pub fn walsh_expand(f: &DyadicStep) -> Vec<Rational> {
    let k = f.level();
    let mut a = f.coeffs().to_vec();
    hadamard_in_place(&mut a);
    let scale = dyadic_unit(k);
    (0..a.len())
        .map(|n| &a[bit_reverse(n, k)] * &scale)
        .collect()
}

/// `Σ c_n φ_n`; inverse of [`walsh_expand`].
pub fn walsh_synthesize(coeffs: &[Rational]) -> Result<DyadicStep> {
    let len = coeffs.len();
    if len == 0 || !len.is_power_of_two() {
        return Err(Error::NotPowerOfTwo(len));
    }
    let k = len.trailing_zeros();
    let mut a: Vec<Rational> = (0..len)
        .map(|m| coeffs[bit_reverse(m, k)].clone())
        .collect();
    hadamard_in_place(&mut a);
    DyadicStep::new(k, a)
}

/// First pair `(m, n, ⟨φ_m|φ_n⟩)` among `φ₀ … φ_{2^k−1}` where the Gram
/// matrix differs from the identity. Exact.
pub fn walsh_gram_defect(k: u32) -> Option<(u64, u64, Rational)> {
    let forms: Vec<_> = (0..1u64 << k).map(|n| walsh(n).integer_form()).collect();
    gram_defect(&forms).map(|(i, j, g)| (i as u64, j as u64, g))
}

/// `⟨φ_n|f⟩` straight from the inner product, one coefficient at a time.
pub fn walsh_expand_direct(f: &DyadicStep) -> Vec<Rational> {
    (0..1u64 << f.level()).map(|n| walsh(n).inner(f)).collect()
}
