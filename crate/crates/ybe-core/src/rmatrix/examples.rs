use std::f64::consts::PI;

use crate::Complex64;

use super::cmatrix::CMatrix;
use super::MatrixError;

/// Builders for the printed example matrices.
#[derive(Debug, Clone)]
pub enum ExampleKind {
    /// Monomial matrix `A(d) = diag(d)·P` with `P` the pair-transpose
    /// permutation; an R-matrix with prescribed singular values `|d_i|`.
    AOfD { n: usize, d: Vec<Complex64> },
    /// `A₁ = H·P` where `H = I − (2/n²)·ee^T` is a Householder reflection and
    /// `P` the pair-transpose permutation; unitary.
    HouseholderA1 { n: usize },
    /// Vandermonde matrix of the `n`-th roots of unity with columns
    /// `(w_n, w_{n−1}, …, w_1)`, `w_j = ω^j`; satisfies `P*P = nI`.
    VandermondeP { n: usize },
    /// Blend of the unit-weight cyclic permutation matrix `B` with the
    /// all-ones matrix: `β` on the support of `B` and `α` elsewhere, i.e.
    /// `(β−α)·B + α·E`. The printed unitary instance is `α = −2/9`,
    /// `β = 7/9` at `n = 3`.
    AlphaBBetaE {
        n: usize,
        alpha: Complex64,
        beta: Complex64,
    },
    /// The printed 4×4 idempotent projection.
    IdempotentC,
    /// The printed 4×4 R-matrix whose Hadamard square fails the equation.
    CounterexampleX,
}

impl ExampleKind {
    /// The default printed parameters for the blended unitary matrix.
    pub fn alpha_b_beta_e_default(n: usize) -> Self {
        ExampleKind::AlphaBBetaE {
            n,
            alpha: Complex64::new(-2.0 / 9.0, 0.0),
            beta: Complex64::new(7.0 / 9.0, 0.0),
        }
    }
}

/// A built example matrix, with exact rational annotations for the printed
/// real-rational instances (row-major, matching the entry order).
#[derive(Debug, Clone)]
pub struct BuiltExample {
    pub matrix: CMatrix,
    pub rational: Option<Vec<String>>,
}

/// Pair-transpose permutation on `0..n²`: the column `(i,j)` maps to the row
/// `(j,i)`.
fn transpose_perm(n: usize) -> Vec<usize> {
    (0..n * n).map(|c| (c % n) * n + c / n).collect()
}

pub fn build_example(kind: &ExampleKind) -> Result<BuiltExample, MatrixError> {
    match kind {
        ExampleKind::AOfD { n, d } => {
            let size = n * n;
            if *n == 0 || d.len() != size {
                return Err(MatrixError::BadParameter(format!(
                    "A(d) at base dimension {n} needs {size} diagonal values"
                )));
            }
            if let Some(idx) = d.iter().position(|v| v.norm() <= crate::STRUCTURAL_EPS) {
                return Err(MatrixError::BadParameter(format!(
                    "diagonal value {idx} is zero"
                )));
            }
            let perm = transpose_perm(*n);
            let mut m = CMatrix::zeros(size, size);
            for (col, &row) in perm.iter().enumerate() {
                m[(row, col)] = d[row];
            }
            Ok(BuiltExample {
                matrix: m,
                rational: None,
            })
        }
        ExampleKind::HouseholderA1 { n } => {
            if *n == 0 {
                return Err(MatrixError::BadParameter("base dimension is zero".into()));
            }
            let size = n * n;
            let perm = transpose_perm(*n);
            let alpha = 2.0 / size as f64;
            let m = CMatrix::from_fn(size, size, |r, c| {
                let support = f64::from(perm[c] == r);
                Complex64::new(support - alpha, 0.0)
            });
            let denom = size;
            let rational = Some(
                (0..size * size)
                    .map(|idx| {
                        let (r, c) = (idx / size, idx % size);
                        if perm[c] == r {
                            format!("{}/{}", denom - 2, denom)
                        } else {
                            format!("-2/{denom}")
                        }
                    })
                    .collect(),
            );
            Ok(BuiltExample {
                matrix: m,
                rational,
            })
        }
        ExampleKind::VandermondeP { n } => {
            if *n == 0 {
                return Err(MatrixError::BadParameter("base dimension is zero".into()));
            }
            let omega = 2.0 * PI / *n as f64;
            let m = CMatrix::from_fn(*n, *n, |i, j| {
                // column j holds powers of w_{n-j} = ω^{n-j}
                let angle = omega * ((n - j) % n) as f64 * i as f64;
                Complex64::from_polar(1.0, angle)
            });
            Ok(BuiltExample {
                matrix: m,
                rational: None,
            })
        }
        ExampleKind::AlphaBBetaE { n, alpha, beta } => {
            if *n == 0 {
                return Err(MatrixError::BadParameter("base dimension is zero".into()));
            }
            let size = n * n;
            // support of the cyclic solution r(x,y) = (y+1, x−1)
            let mut support = vec![false; size * size];
            for x in 0..*n {
                for y in 0..*n {
                    let row = ((y + 1) % n) * n + (x + n - 1) % n;
                    support[row * size + x * n + y] = true;
                }
            }
            let m = CMatrix::from_fn(size, size, |r, c| {
                if support[r * size + c] {
                    *beta
                } else {
                    *alpha
                }
            });
            let rational = if (alpha - Complex64::new(-2.0 / 9.0, 0.0)).norm() == 0.0
                && (beta - Complex64::new(7.0 / 9.0, 0.0)).norm() == 0.0
            {
                Some(
                    support
                        .iter()
                        .map(|&s| if s { "7/9".into() } else { "-2/9".into() })
                        .collect(),
                )
            } else {
                None
            };
            Ok(BuiltExample {
                matrix: m,
                rational,
            })
        }
        ExampleKind::IdempotentC => {
            let matrix = CMatrix::from_real_rows(&[
                vec![1.0, 0.0, 1.0, 1.0],
                vec![0.0, 1.0, 1.0, 2.0],
                vec![0.0, 0.0, 0.0, 0.0],
                vec![0.0, 0.0, 0.0, 0.0],
            ])?;
            let rational = Some(
                matrix
                    .entries()
                    .iter()
                    .map(|z| format!("{}", z.re as i64))
                    .collect(),
            );
            Ok(BuiltExample { matrix, rational })
        }
        ExampleKind::CounterexampleX => {
            let matrix = CMatrix::from_real_rows(&[
                vec![1.0, 0.0, 0.0, 0.0],
                vec![0.0, -3.0, 2.0, 0.0],
                vec![0.0, 2.0, 0.0, 0.0],
                vec![0.0, 0.0, 0.0, 1.0],
            ])?;
            let rational = Some(
                matrix
                    .entries()
                    .iter()
                    .map(|z| format!("{}", z.re as i64))
                    .collect(),
            );
            Ok(BuiltExample { matrix, rational })
        }
    }
}

/// The printed pseudo-inverse of the idempotent projection, for golden
/// comparisons: `(1/3)·[[2,−1,0,0],[−1,1,0,0],[1,0,0,0],[0,1,0,0]]`.
pub fn printed_idempotent_pinv() -> CMatrix {
    CMatrix::from_real_rows(&[
        vec![2.0 / 3.0, -1.0 / 3.0, 0.0, 0.0],
        vec![-1.0 / 3.0, 1.0 / 3.0, 0.0, 0.0],
        vec![1.0 / 3.0, 0.0, 0.0, 0.0],
        vec![0.0, 1.0 / 3.0, 0.0, 0.0],
    ])
    .expect("fixed shape")
}
