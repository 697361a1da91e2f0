//! Set-theoretic solutions of the quantum Yang-Baxter equation stored as
//! explicit pair tables, plus their structural analysis: orbits, retractions,
//! multipermutation level and the Yang-Baxter map of a brace.

mod brace_map;
mod builtin;
mod orbit;
mod partition;
mod permgroup;
mod retract;
mod types;

pub use brace_map::{
    check_theorem_567, one_generator_solution, yb_map_from_brace, OneGeneratorSolution,
};
pub use builtin::{builtin_solution, BuiltinSolution};
pub use orbit::orbits;
pub use partition::{invariant_partition, InvariantPartition, PartitionKind};
pub use permgroup::{permutation_group, PermutationGroup, DEFAULT_GROUP_CAP};
pub use retract::{i_retraction, multipermutation_level, retraction, Retraction};
pub use types::{
    restrict_solution, solution_properties, verify_set_ybe, PartitionedSet, SetSolution,
    SolutionProperties,
};

use crate::algebra::AlgebraError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SolutionError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("pair table has {got} entries, expected {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("pair table entry {value} out of range for set size {n}")]
    ElementRange { value: usize, n: usize },
    #[error("the pair map is not a bijection")]
    NotBijective,
    #[error("subset is not closed: r({x},{y}) = {image:?} escapes the subset")]
    NotClosed { x: usize, y: usize, image: (usize, usize) },
    #[error("induced retraction map is ill-defined (precondition violated)")]
    RetractionIllDefined,
    #[error("solution is not involutive")]
    NotInvolutive,
    #[error("solution is not non-degenerate")]
    NotNonDegenerate,
    #[error("solution disagrees with the brace Yang-Baxter map at ({x},{y})")]
    NotRestriction { x: usize, y: usize },
    #[error("subset is invalid: duplicate, out-of-range or wrongly sized elements")]
    SetMismatch,
    #[error("permutation group closure exceeded the cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("brace is not left nilpotent")]
    NotLeftNilpotent,
    #[error("partition classes are not pairwise disjoint")]
    ClassesNotDisjoint,
    #[error("invariance fails on classes ({class_x},{class_y}) at elements ({x},{y})")]
    InvarianceViolation {
        class_x: usize,
        class_y: usize,
        x: usize,
        y: usize,
    },
    #[error("set size {0} is not supported here")]
    InvalidSize(usize),
}
