//! Finite braces, set-theoretic solutions of the quantum Yang-Baxter equation,
//! weighted (braided-vector-space) extensions of those solutions, and the dense
//! complex R-matrix kernels used to verify everything at desk scale.
//!
//! The crate is organised around four layers:
//!
//! * [`algebra`] — finite rings and braces given by explicit operation tables,
//!   together with ideals, quotients, nilpotency chains and generated sub-braces;
//! * [`solution`] — set-theoretic Yang-Baxter maps stored as pair tables, their
//!   structural properties (involutivity, non-degeneracy, orbits, retractions,
//!   multipermutation level) and their derivation from braces;
//! * [`weights`] — weight systems turning a set-theoretic solution into a braided
//!   vector space of set-theoretic type, with the cocycle check and the exact
//!   triviality decision;
//! * [`rmatrix`] — dense complex matrices: Kronecker and Hadamard products, the
//!   matrix Yang-Baxter check, monomial assembly/decoding, Jacobi-based singular
//!   values and pseudo-inverses, and builders for the printed example matrices.
//!
//! [`io`] defines the JSON object files shared with the command-line tool.

pub mod algebra;
pub mod io;
pub mod rmatrix;
pub mod solution;
pub mod weights;

mod intlinalg;

/// Default absolute tolerance for floating-point comparisons.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Threshold below which a complex entry counts as structurally zero.
pub const STRUCTURAL_EPS: f64 = 1e-12;

pub use num_complex::Complex64;
