//! Hybrid step × trigonometric functions on [0,1) and the sine family
//! `s_n(x) = sin(2πnx)`.

mod dyadic_number;
mod hybrid;

pub use dyadic_number::Dyadic;
pub use hybrid::{AtomRecord, FourierCoefficients, HybridFunction, Mode, Reflection, TrigAtom};

/// `s_n(x) = sin(2πnx)`.
pub fn make_sine(n: u64) -> HybridFunction {
    HybridFunction::sine(n)
}

/// `cos(2πnx)`.
pub fn make_cos(n: u64) -> HybridFunction {
    HybridFunction::cosine(n)
}
