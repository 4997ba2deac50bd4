//! Walsh system, generator covers, `K(ψ)` search and `H(ψ)` frames.

mod frames;
mod generators;
mod signal;
mod walsh;

pub use frames::{build_frame, compute_k, frames_orthogonal, SubspaceFrame};
pub use generators::{
    greedy_generators, verify_decomposition, walsh_index_of, DecompositionReport, GeneratorCover,
};
pub use signal::{
    ingest_signal, ingest_signal_f64, parse_samples, signal_from_text, CoefficientRow,
    CoefficientTable,
};
pub use walsh::{
    walsh, walsh_expand, walsh_expand_direct, walsh_gram_defect, walsh_synthesize, WalshSystem,
};
