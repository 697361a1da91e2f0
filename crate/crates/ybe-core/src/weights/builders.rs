use super::{WeightSystem, WeightsError};
use crate::solution::SolutionError;
use crate::Complex64;

/// The named weight tables over the matching builtin solutions.
#[derive(Debug, Clone)]
pub enum BuiltinWeights {
    /// `d(i,j) = g(i−j)` on the cyclic solution over `Z/n`, `n = g.len()`.
    CyclicG { g: Vec<Complex64> },
    /// `f([i,j],[m,n]) = g(i+j+n, m+j+n)` on the four-element solution over
    /// pairs in `Z/2`; needs `g(1,0) = g(0,1)`. Indexed `g[a][b]`.
    Hura5G { g: [[Complex64; 2]; 2] },
    /// All pairs share one nonzero value.
    Constant { n: usize, value: Complex64 },
}

pub fn builtin_weights(kind: &BuiltinWeights) -> Result<WeightSystem, WeightsError> {
    match kind {
        BuiltinWeights::CyclicG { g } => {
            let n = g.len();
            if n == 0 {
                return Err(WeightsError::Solution(SolutionError::InvalidSize(0)));
            }
            WeightSystem::from_fn(n, |i, j| g[(i + n - j) % n])
        }
        BuiltinWeights::Hura5G { g } => {
            if (g[1][0] - g[0][1]).norm() > crate::STRUCTURAL_EPS {
                return Err(WeightsError::AsymmetricG);
            }
            WeightSystem::from_fn(4, |x, y| {
                let (i, j) = (x / 2, x % 2);
                let (m, n) = (y / 2, y % 2);
                g[(i + j + n) % 2][(m + j + n) % 2]
            })
        }
        BuiltinWeights::Constant { n, value } => WeightSystem::constant(*n, *value),
    }
}
