//! Dense complex matrix kernels: Kronecker and Hadamard products, the matrix
//! Yang-Baxter check, monomial assembly and decoding, Jacobi-based singular
//! values and pseudo-inverses, and builders for the printed example matrices.
//!
//! Pair indexing is lexicographic throughout: the pair `(i,j)` over `0..n`
//! sits at index `i·n + j`, both for rows and columns.

mod cmatrix;
mod examples;
mod jacobi;
mod monomial;
mod qybe;

pub use cmatrix::{hadamard, is_unitary, kron, nonsingularity, CMatrix, NonsingularityReport};
pub use examples::{build_example, printed_idempotent_pinv, BuiltExample, ExampleKind};
pub use jacobi::{hermitian_eigen, penrose_check, pinv, singular_values, svd, Svd};
pub use monomial::{
    apply_multiplicative_map, classify_involutive_matrix, decode_monomial, hadamard_rmatrix,
    monomial_from_bvst, InvolutiveMatrixReport, MonomialPattern, MultiplicativeMap,
};
pub use qybe::{
    conjugate_similarity, is_r_matrix, kron_pair_criterion, parametrized_ybe_check, qybe_check,
    QybeReport,
};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum MatrixError {
    #[error("entry vector of length {len} does not fit a {rows}×{cols} matrix")]
    Shape { rows: usize, cols: usize, len: usize },
    #[error("matrix is {rows}×{cols} but must be square")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is {rows}×{cols}, expected {n}²×{n}²")]
    BaseDimension { rows: usize, cols: usize, n: usize },
    #[error("matrix size {size} is not a perfect square")]
    NotPairSpace { size: usize },
    #[error("matrix is singular at the working tolerance")]
    Singular,
    #[error("Jacobi sweeps did not converge (off-diagonal residual {residual:.3e})")]
    NoConvergence { residual: f64 },
    #[error("column {column} does not carry exactly one compatible nonzero entry")]
    NotMonomial { column: usize },
    #[error("monomial supports differ")]
    SupportMismatch,
    #[error("input does not satisfy the Yang-Baxter equation")]
    NotAnRMatrix,
    #[error("entry ({row},{col}) is neither 0 nor 1")]
    NotZeroOne { row: usize, col: usize },
    #[error("matrix does not square to the identity (residual {residual:.3e})")]
    NotInvolution { residual: f64 },
    #[error("operand dimensions do not match")]
    SizeMismatch,
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}
