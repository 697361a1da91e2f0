use super::types::SetSolution;
use super::SolutionError;

/// The named solutions used throughout: the flip, the cyclic permutation
/// solution `r(x,y) = (y+1, x−1)` on `Z/n`, and the four-element solution on
/// pairs over `Z/2` given by `r([i,j],[m,n]) = ([m+1, n+m+i], [i+1, j+i+m])`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinSolution {
    Flip { n: usize },
    Cyclic { n: usize },
    Hura5,
}

/// Index of the pair `[i,j]` over `Z/2` in the four-element solution.
#[inline]
pub(crate) fn z2_pair_index(i: usize, j: usize) -> usize {
    2 * (i % 2) + (j % 2)
}

pub fn builtin_solution(kind: BuiltinSolution) -> Result<SetSolution, SolutionError> {
    match kind {
        BuiltinSolution::Flip { n } => {
            if n == 0 {
                return Err(SolutionError::InvalidSize(0));
            }
            Ok(SetSolution::from_fn(n, |x, y| (y, x)))
        }
        BuiltinSolution::Cyclic { n } => {
            if n == 0 {
                return Err(SolutionError::InvalidSize(0));
            }
            Ok(SetSolution::from_fn(n, |x, y| {
                ((y + 1) % n, (x + n - 1) % n)
            }))
        }
        BuiltinSolution::Hura5 => Ok(SetSolution::from_fn(4, |x, y| {
            let (i, j) = (x / 2, x % 2);
            let (m, n) = (y / 2, y % 2);
            (
                z2_pair_index(m + 1, n + m + i),
                z2_pair_index(i + 1, j + i + m),
            )
        })),
    }
}
