//! Exact matrix algebra over incline semirings.
//!
//! An incline is an idempotent-addition semiring with absorption: `⊕` is a
//! least upper bound, products shrink, and every built-in carrier here is
//! *normal* (identities, residuals, unique square roots, the
//! arithmetic-geometric inequality). Over such carriers, complete positivity
//! of a symmetric matrix is decidable entry-locally, CP decompositions with
//! bounded rank and support can be constructed, and almost-principal minor
//! conditions yield triangular `U Uᵀ`/`C Cᵀ` factorizations. Everything is
//! exact — arbitrary-precision rationals, exponent encodings and finite
//! tables, never floating point — and every construction emits a
//! certificate that an independent checker (or a brute-force oracle)
//! re-validates.

pub mod algebra;
pub mod cp;
pub mod error;
pub mod factor;
pub mod json;
pub mod laws;
pub mod matrix;
pub mod oracle;
pub mod value;

#[cfg(test)]
pub(crate) mod testutil;

pub use algebra::{Incline, Kind, LatticeTable};
pub use cp::{
    cp_rank_upper_bound, djl_decompose, is_cp, is_cp_regular, normalize, pairwise_decompose,
    verify_decomposition, CpDecomposition, CpVerdict, Normalization,
};
pub use error::{Error, ErrorClass, Result};
pub use factor::{
    factor_3x3, lu_factor, tn2_both, ul_factor, verify_triangular, FactorOutcome, Tn2Outcome,
    TriMode, TriangularCertificate,
};
pub use laws::{check_axioms, LawCheck, LawMode, LawReport};
pub use matrix::{ApmEntry, ApmSide, DetSplit, IndexSet, Matrix, Tn2Violation};
pub use oracle::{
    brute_force_cp_rank, brute_force_triangular_exists, djl_tightness_witness,
    generated_subincline, SearchOptions, SearchOutcome, SearchTranscript, Subincline,
};
pub use value::Value;
