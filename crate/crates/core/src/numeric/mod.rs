//! Exact scalars, dyadic step functions and multi-index words.

pub(crate) mod cells;
pub mod dyadic;
pub mod multiindex;
pub mod rational;

pub use dyadic::DyadicStep;
pub use multiindex::{enumerate_words, MultiIndex};
pub use rational::Rational;
