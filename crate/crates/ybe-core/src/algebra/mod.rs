//! Finite rings and braces as explicit multiplication tables.
//!
//! Elements are dense indices `0..order`, and `0` is always the additive
//! identity; in a brace it is the circle identity as well.

mod brace;
mod chain;
mod factor;
mod ideal;
mod ring;
mod table;

pub use brace::{
    star_product, verify_brace, verify_skew_brace, AxiomViolation, BraceAxiom, BraceCheck,
    FiniteBrace,
};
pub use chain::{check_sum_formula, nilpotency_chains, ChainReport, NilpotencyChains};
pub use factor::brace_from_exact_factorization;
pub use ideal::{is_ideal, quotient_brace, socle};
pub use ring::{
    brace_from_nilpotent_ring, even_subring, make_truncated_polynomial_ring,
    strictly_upper_triangular_ring, zero_ring, FiniteRing,
};
pub use table::OpTable;

use thiserror::Error;

/// Orders above this are refused by the table constructors; every structure in
/// scope is desk sized and the dense tables grow quadratically.
pub const MAX_ORDER: usize = 4096;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("operation tables must be square, non-empty and of equal order")]
    TableShape,
    #[error("table entry {value} out of range for order {order}")]
    EntryRange { value: usize, order: usize },
    #[error("order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("element {element} out of range for order {order}")]
    ElementRange { element: usize, order: usize },
    #[error("tables do not define a brace ({0} violations; first: {1})")]
    NotABrace(usize, AxiomViolation),
    #[error("tables do not define a ring: {0}")]
    NotARing(String),
    #[error("ring is not nilpotent: power chain stabilises with {0} elements")]
    RingNotNilpotent(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("truncation degree must be at least 2, got {0}")]
    DegreeTooSmall(usize),
    #[error("modulus exponent must be at least 2, got {0}")]
    ExponentTooSmall(usize),
    #[error("subset is not an ideal")]
    NotAnIdeal,
    #[error("induced quotient table is ill-defined at representatives {0} and {1}")]
    QuotientIllDefined(usize, usize),
    #[error("star product is not right distributive, so the brace does not come from a ring")]
    NotRightDistributive,
    #[error("subset is not a subgroup of the circle group")]
    NotCircleSubgroup,
    #[error("factorisation is not exact: element {element} has {count} factorisations")]
    InexactFactorization { element: usize, count: usize },
    #[error("brace is not right nilpotent")]
    NotRightNilpotent,
}
