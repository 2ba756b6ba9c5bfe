//! Exact computation of Buchsbaum-Rim functions and multiplicities for
//! direct sums of cyclic modules R/I_1 (+) ... (+) R/I_r, where the I_j are
//! m-primary monomial ideals in a d-variable power-series ring.
//!
//! In the monomial setting every module length is a count of standard
//! monomials, so the whole theory is computable in exact integer arithmetic:
//!
//! * [`ideal`] — canonical minimal generating sets, membership, sums,
//!   products, powers, and the colength by two independent algorithms;
//! * [`coeff_ideal`] — the coefficient ideals of the graded pieces M^p S_q,
//!   by direct enumeration, a closed-form factorization, and a reduced
//!   enumeration over the small coordinates;
//! * [`lambda`](mod@lambda) — the Buchsbaum-Rim function and its
//!   two-variable refinement, with a brute-force evaluator and a stratified
//!   fast evaluator that agree exactly on the valid region q >= (p+1)r;
//! * [`multiplicity`] — Hilbert-Samuel, mixed, and Buchsbaum-Rim
//!   multiplicities, plus the full sequence e^0 >= e^1 >= ... extracted by
//!   stabilized forward differences;
//! * [`theorems`] — the identity and bound checks run over a built-in
//!   corpus of families.
//!
//! All values are arbitrary-precision integers; no floating point is used
//! anywhere.

pub mod coeff_ideal;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod ideal;
pub mod lambda;
pub mod monomial;
pub mod multiplicity;
pub mod stratum;
pub mod theorems;

pub use coeff_ideal::{coeff_ideal_brute, coeff_ideal_closed, coeff_ideal_reduced};
pub use error::Error;
pub use family::IdealFamily;
pub use ideal::MonomialIdeal;
pub use lambda::{
    count_fiber, in_region, lambda, lambda_pq_brute, lambda_pq_fast, lambda_pq_region,
    EvalMethod, EvalPolicy, LambdaTable,
};
pub use monomial::Monomial;
pub use multiplicity::{
    br_multiplicity, br_multiplicity_sequence, br_multiplicity_sequence_with,
    br_multiplicity_with, forward_difference, hs_multiplicity, hs_multiplicity_with,
    mixed_multiplicities, mixed_multiplicities_with, stabilized_extract, ExtractOptions,
    MixedEntry, MixedMultiplicityTable, MultiplicityReport, SequenceEntry, Stabilized,
};
pub use stratum::{classify, Stratum, StratumFilter};
