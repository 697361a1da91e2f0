//! Weight systems turning a set-theoretic solution into a braided vector
//! space of set-theoretic type: the cocycle identity, the exact triviality
//! decision over the nonzero complex numbers, the weight constructions from
//! invariant partitions, and lifting through (I-)retractions.

mod builders;
mod cocycle;
mod nontrivial;
mod triviality;

pub use builders::{builtin_weights, BuiltinWeights};
pub use cocycle::{invariance_weights, lift_weights, orbit_weights, verify_cocycle};
pub use nontrivial::construct_nontrivial_bvst;
pub use triviality::{is_trivial, lemma_trivial_check, TrivialityWitness};

use crate::solution::SolutionError;
use crate::{Complex64, STRUCTURAL_EPS};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum WeightsError {
    #[error(transparent)]
    Solution(#[from] SolutionError),
    #[error("weight table has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight table size {weights} does not match solution size {solution}")]
    DimensionMismatch { weights: usize, solution: usize },
    #[error("zero weight at pair ({x},{y})")]
    ZeroWeight { x: usize, y: usize },
    #[error("weights do not satisfy the cocycle identity (precondition)")]
    CocycleViolation,
    #[error("invariance identity {identity} fails at triple ({x},{y},{z})")]
    InvarianceViolation {
        identity: u8,
        x: usize,
        y: usize,
        z: usize,
    },
    #[error("classes must cover the whole set")]
    NotCovering,
    #[error("class map is not a surjection onto the quotient")]
    ClassMapInvalid,
    #[error("hura5 weights require g(1,0) = g(0,1)")]
    AsymmetricG,
    #[error("solution must be involutive here")]
    NotInvolutive,
    #[error("solution must be non-degenerate here")]
    NotNonDegenerate,
    #[error("solution does not have a finite multipermutation level")]
    InfiniteMultipermutationLevel,
    #[error("a one-element solution only carries trivial weight systems")]
    PointSolution,
    #[error("indecomposable input needs its one-generator brace presentation")]
    PresentationRequired,
    #[error("presentation does not match the given solution")]
    PresentationMismatch,
    #[error("presentation brace is not left and right nilpotent")]
    BraceNotNilpotent,
    #[error("the I-retraction is not a cyclic permutation solution")]
    QuotientNotCyclic,
    #[error("constructed weights came out trivial; hypotheses violated")]
    ConstructionDegenerate,
    #[error("witness recovery failed verification (residual {0:.3e})")]
    WitnessVerification(f64),
    #[error("integer overflow in the exact elimination")]
    Overflow,
}

impl From<crate::intlinalg::Overflow> for WeightsError {
    fn from(_: crate::intlinalg::Overflow) -> Self {
        WeightsError::Overflow
    }
}

/// A nonzero complex weight per ordered pair, indexed like the solution's
/// pair table.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightSystem {
    n: usize,
    d: Vec<Complex64>,
}

impl WeightSystem {
    pub fn new(n: usize, d: Vec<Complex64>) -> Result<Self, WeightsError> {
        if d.len() != n * n {
            return Err(WeightsError::LengthMismatch {
                expected: n * n,
                got: d.len(),
            });
        }
        for (idx, value) in d.iter().enumerate() {
            if value.norm() <= STRUCTURAL_EPS {
                return Err(WeightsError::ZeroWeight {
                    x: idx / n,
                    y: idx % n,
                });
            }
        }
        Ok(WeightSystem { n, d })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Result<Self, WeightsError> {
        let mut d = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                d.push(f(x, y));
            }
        }
        WeightSystem::new(n, d)
    }

    pub fn constant(n: usize, value: Complex64) -> Result<Self, WeightsError> {
        WeightSystem::from_fn(n, |_, _| value)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, x: usize, y: usize) -> Complex64 {
        self.d[x * self.n + y]
    }

    pub fn values(&self) -> &[Complex64] {
        &self.d
    }
}
