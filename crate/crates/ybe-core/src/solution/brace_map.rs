use super::types::{restrict_solution, SetSolution};
use super::SolutionError;
use crate::algebra::FiniteBrace;

/// The Yang-Baxter map of a brace: `r(x,y) = (u, v)` with `u = x·y + y`,
/// `v = z·x + x` and `z` the circle inverse of `u`. Involutive and
/// non-degenerate for every brace.
pub fn yb_map_from_brace(brace: &FiniteBrace) -> SetSolution {
    SetSolution::from_fn(brace.order(), |x, y| {
        let u = brace.add(brace.star(x, y), y);
        let z = brace.circ_inv(u);
        let v = brace.add(brace.star(z, x), x);
        (u, v)
    })
}

/// The indecomposable solution carried by a one-generator sub-brace: the
/// sub-brace `A(x)` generated by `x`, the set `X = {x + a·x : a ∈ A(x)}` and
/// the restriction of the Yang-Baxter map to `X`.
#[derive(Debug, Clone)]
pub struct OneGeneratorSolution {
    /// `A(x)` re-indexed as a standalone brace.
    pub subbrace: FiniteBrace,
    /// Elements of `A(x)` inside the ambient brace, sorted.
    pub subbrace_elements: Vec<usize>,
    /// The set `X` inside the ambient brace, sorted; the solution indices
    /// follow this order.
    pub x_set: Vec<usize>,
    /// Restriction of the Yang-Baxter map to `X`.
    pub solution: SetSolution,
    /// The generator inside the ambient brace.
    pub generator: usize,
}

pub fn one_generator_solution(
    brace: &FiniteBrace,
    x: usize,
) -> Result<OneGeneratorSolution, SolutionError> {
    let members = brace.generated_subbrace(x)?;
    let subbrace = brace.sub_brace(&members)?;
    let mut x_set: Vec<usize> = members
        .iter()
        .map(|&a| brace.add(x, brace.star(a, x)))
        .collect();
    x_set.sort_unstable();
    x_set.dedup();
    let full = yb_map_from_brace(brace);
    let solution = restrict_solution(&full, &x_set)?;
    Ok(OneGeneratorSolution {
        subbrace,
        subbrace_elements: members,
        x_set,
        solution,
        generator: x,
    })
}

/// Checks the one-generator characterisation on explicit data: `x_set` must
/// equal `{x + a·x : a ∈ A}` with `a` ranging over the whole brace, and the
/// additive closure of `x_set` must be the whole brace.
pub fn check_theorem_567(brace: &FiniteBrace, x_set: &[usize], x: usize) -> bool {
    let n = brace.order();
    if x >= n || x_set.iter().any(|&e| e >= n) {
        return false;
    }
    let mut expected: Vec<usize> = (0..n).map(|a| brace.add(x, brace.star(a, x))).collect();
    expected.sort_unstable();
    expected.dedup();
    let mut given = x_set.to_vec();
    given.sort_unstable();
    given.dedup();
    if expected != given {
        return false;
    }
    brace.additive_closure(&given).len() == n
}
