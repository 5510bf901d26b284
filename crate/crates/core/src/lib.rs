//! Computational algebra for finite characteristic-one semirings (B₁-algebras).
//!
//! A B₁-algebra is a commutative unitary semiring in which `1 + 1 = 1`, so
//! addition is idempotent and induces the natural order `a ≤ b ⇔ a + b = b`.
//! This crate represents finite B₁-algebras as validated Cayley tables and
//! computes, by exhaustive search over the ideal lattice:
//!
//! * ideals, saturations, radicals, annihilators, conductors and Bourne
//!   congruences ([`ideal`], [`congruence`]);
//! * prime, saturated-prime, minimal and associated prime ideals, zero
//!   divisors and the standard property ([`spectrum`]);
//! * weak primary decompositions, the laskerian check and Evans reports
//!   ([`decompose`]);
//! * a self-audit that re-verifies the structural theorems of the theory on a
//!   given finite algebra ([`audit`]).
//!
//! The `b1a` binary wraps all of this behind a small CLI (see [`cli`]).

pub mod algebra;
pub mod audit;
pub mod cli;
pub mod congruence;
pub mod decompose;
pub mod error;
pub mod format;
pub mod ideal;
pub mod report;
pub mod set;
pub mod spectrum;

pub use algebra::{
    build_algebra, builtin, chain_algebra, direct_product, leq, Axiom, AxiomReport, DirectProduct,
    ElementId, FiniteB1Algebra, Violation,
};
pub use congruence::{bourne_congruence, preimage_ideal, quotient, Congruence, QuotientMap};
pub use decompose::{
    evans_report, laskerian_check, minimalize, radical_decomposition, weak_decompose,
    DecompositionResult, EvansReport, LaskerianReport,
};
pub use error::{Error, Result};
pub use ideal::{
    annihilator, annihilator_set, conductor, enumerate_ideals, enumerate_saturated_ideals,
    enumeration_bound, generated_ideal, ideal_intersect, ideal_product, ideal_sum, is_saturated,
    radical, saturation, Ideal, DEFAULT_ENUMERATION_BOUND,
};
pub use set::ElementSet;
pub use spectrum::{
    divisor_set, is_primary, is_prime, nilradical, zero_divisors, IdealLattice, SpectrumResult,
};

/// Version string embedded in every report.
pub const ENGINE_VERSION: &str = env!("CARGO_PKG_VERSION");
