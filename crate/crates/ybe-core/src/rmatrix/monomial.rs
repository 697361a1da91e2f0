use crate::solution::{SetSolution, SolutionProperties};
use crate::weights::WeightSystem;
use crate::{Complex64, STRUCTURAL_EPS};

use super::cmatrix::CMatrix;
use super::qybe::qybe_check;
use super::MatrixError;

/// The support permutation and values of a monomial matrix over pair space:
/// one nonzero entry per row and per column, indexed lexicographically by
/// pairs over `0..n`.
#[derive(Debug, Clone, PartialEq)]
pub struct MonomialPattern {
    pub n: usize,
    /// Pair permutation: source pair index → target pair index.
    pub perm: Vec<usize>,
    /// Nonzero entry per source pair index.
    pub values: Vec<Complex64>,
}

impl MonomialPattern {
    /// Reassembles the matrix with entries `values[col]` at `(perm[col], col)`.
    pub fn to_matrix(&self) -> CMatrix {
        let size = self.n * self.n;
        let mut m = CMatrix::zeros(size, size);
        for (col, (&row, &value)) in self.perm.iter().zip(&self.values).enumerate() {
            m[(row, col)] = value;
        }
        m
    }

    /// The pair map as a solution table, when the permutation is read as
    /// `r(i,j) = (k,l)`.
    pub fn to_solution(&self) -> SetSolution {
        SetSolution::from_fn(self.n, |i, j| {
            let target = self.perm[i * self.n + j];
            (target / self.n, target % self.n)
        })
    }
}

/// Assembles the matrix of a braided vector space of set-theoretic type: the
/// column indexed by the pair `(i,j)` carries `d(i,j)` in the row indexed by
/// `r(i,j)`, rows and columns in lexicographic pair order. When the weights
/// satisfy the cocycle identity the result satisfies the Yang-Baxter
/// equation.
pub fn monomial_from_bvst(
    s: &SetSolution,
    d: &WeightSystem,
) -> Result<CMatrix, MatrixError> {
    if s.n() != d.n() {
        return Err(MatrixError::SizeMismatch);
    }
    let n = s.n();
    let size = n * n;
    let mut m = CMatrix::zeros(size, size);
    for i in 0..n {
        for j in 0..n {
            let (k, l) = s.r(i, j);
            m[(k * n + l, i * n + j)] = d.get(i, j);
        }
    }
    Ok(m)
}

/// Recovers the monomial pattern of a matrix with exactly one structural
/// nonzero per column and per row. Reports the first offending column
/// otherwise.
pub fn decode_monomial(a: &CMatrix) -> Result<MonomialPattern, MatrixError> {
    let size = a.rows();
    if a.cols() != size {
        return Err(MatrixError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let n = (size as f64).sqrt().round() as usize;
    if n * n != size {
        return Err(MatrixError::NotPairSpace { size });
    }
    let mut perm = vec![usize::MAX; size];
    let mut values = vec![Complex64::new(0.0, 0.0); size];
    let mut row_taken = vec![false; size];
    for col in 0..size {
        let mut hit = None;
        for row in 0..size {
            if a[(row, col)].norm() > STRUCTURAL_EPS {
                if hit.is_some() {
                    return Err(MatrixError::NotMonomial { column: col });
                }
                hit = Some(row);
            }
        }
        let Some(row) = hit else {
            return Err(MatrixError::NotMonomial { column: col });
        };
        if std::mem::replace(&mut row_taken[row], true) {
            return Err(MatrixError::NotMonomial { column: col });
        }
        perm[col] = row;
        values[col] = a[(row, col)];
    }
    Ok(MonomialPattern { n, perm, values })
}

/// Hadamard product of two monomial R-matrices with identical support. Both
/// inputs must decode to the same pair permutation and satisfy the
/// Yang-Baxter equation; the entrywise product is then again an R-matrix.
pub fn hadamard_rmatrix(a: &CMatrix, b: &CMatrix, tol: f64) -> Result<CMatrix, MatrixError> {
    let pa = decode_monomial(a)?;
    let pb = decode_monomial(b)?;
    if pa.n != pb.n || pa.perm != pb.perm {
        return Err(MatrixError::SupportMismatch);
    }
    for (m, name_n) in [(a, pa.n), (b, pb.n)] {
        if !qybe_check(m, name_n, tol)?.ok {
            return Err(MatrixError::NotAnRMatrix);
        }
    }
    super::cmatrix::hadamard(a, b)
}

/// A multiplicative map on the nonzero complex numbers from the closed family
/// `z ↦ z^k` and `z ↦ conj(z)^k`; zeros are left untouched.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MultiplicativeMap {
    pub power: i32,
    pub conjugate: bool,
}

impl MultiplicativeMap {
    pub fn apply(&self, z: Complex64) -> Complex64 {
        let base = if self.conjugate { z.conj() } else { z };
        base.powi(self.power)
    }
}

/// Applies a multiplicative map to the nonzero entries of a monomial
/// R-matrix, preserving zeros. The transformed matrix again satisfies the
/// Yang-Baxter equation.
pub fn apply_multiplicative_map(
    a: &CMatrix,
    map: MultiplicativeMap,
    tol: f64,
) -> Result<CMatrix, MatrixError> {
    let pattern = decode_monomial(a)?;
    if !qybe_check(a, pattern.n, tol)?.ok {
        return Err(MatrixError::NotAnRMatrix);
    }
    let mapped = MonomialPattern {
        n: pattern.n,
        perm: pattern.perm,
        values: pattern.values.iter().map(|&v| map.apply(v)).collect(),
    };
    Ok(mapped.to_matrix())
}

/// Structural report on a 0/1 matrix against the characterisation of
/// involutive non-degenerate solutions: permutation support, symmetry,
/// squaring to the identity, and exactly one 1 per `n×n` block. Each
/// condition is reported separately; when the permutation, symmetry and
/// block conditions all hold the matrix decodes to an involutive
/// non-degenerate solution table.
#[derive(Debug, Clone)]
pub struct InvolutiveMatrixReport {
    pub permutation: bool,
    pub symmetric: bool,
    pub squares_to_identity: bool,
    pub block_condition: bool,
    pub solution: Option<SetSolution>,
    pub properties: Option<SolutionProperties>,
}

pub fn classify_involutive_matrix(
    a: &CMatrix,
    n: usize,
    tol: f64,
) -> Result<InvolutiveMatrixReport, MatrixError> {
    let size = n * n;
    if a.rows() != size || a.cols() != size {
        return Err(MatrixError::BaseDimension {
            rows: a.rows(),
            cols: a.cols(),
            n,
        });
    }
    // entries must be 0 or 1
    let mut bits = vec![false; size * size];
    for r in 0..size {
        for c in 0..size {
            let v = a[(r, c)];
            if (v - Complex64::new(1.0, 0.0)).norm() <= tol {
                bits[r * size + c] = true;
            } else if v.norm() > tol {
                return Err(MatrixError::NotZeroOne { row: r, col: c });
            }
        }
    }
    let bit = |r: usize, c: usize| bits[r * size + c];

    let permutation = (0..size).all(|r| (0..size).filter(|&c| bit(r, c)).count() == 1)
        && (0..size).all(|c| (0..size).filter(|&r| bit(r, c)).count() == 1);
    let symmetric = (0..size).all(|r| (r..size).all(|c| bit(r, c) == bit(c, r)));
    let squares_to_identity = {
        let product = a.mul(a);
        product.max_abs_diff(&CMatrix::identity(size)) <= tol
    };
    let block_condition = (0..n).all(|bi| {
        (0..n).all(|bj| {
            let mut count = 0;
            for r in 0..n {
                for c in 0..n {
                    if bit(bi * n + r, bj * n + c) {
                        count += 1;
                    }
                }
            }
            count == 1
        })
    });

    let solution = if permutation && symmetric && block_condition {
        let map: Vec<(usize, usize)> = (0..size)
            .map(|col| {
                let row = (0..size).find(|&r| bit(r, col)).unwrap();
                (row / n, row % n)
            })
            .collect();
        Some(SetSolution::new(n, map).expect("decoded table is in range"))
    } else {
        None
    };
    let properties = solution.as_ref().map(crate::solution::solution_properties);
    Ok(InvolutiveMatrixReport {
        permutation,
        symmetric,
        squares_to_identity,
        block_condition,
        solution,
        properties,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solution::{builtin_solution, BuiltinSolution};
    use crate::weights::{verify_cocycle, WeightSystem};
    use crate::DEFAULT_TOL;
    use num_complex::Complex64 as C;

    fn cyclic3_weights(g: [f64; 3]) -> WeightSystem {
        WeightSystem::from_fn(3, |i, j| C::new(g[(i + 3 - j) % 3], 0.0)).unwrap()
    }

    #[test]
    fn assembly_matches_the_printed_three_by_three_layout() {
        // letters of the printed 9×9 block matrix: a = g(2), b = g(1), c = g(0)
        let s = builtin_solution(BuiltinSolution::Cyclic { n: 3 }).unwrap();
        let (g0, g1, g2) = (7.0, 11.0, 13.0);
        let d = cyclic3_weights([g0, g1, g2]);
        let m = monomial_from_bvst(&s, &d).unwrap();
        let expected = [
            (0, 5, g2),
            (1, 8, g0),
            (2, 2, g1),
            (3, 3, g1),
            (4, 6, g2),
            (5, 0, g0),
            (6, 4, g0),
            (7, 7, g1),
            (8, 1, g2),
        ];
        let mut nonzero = 0;
        for r in 0..9 {
            for c in 0..9 {
                if m[(r, c)].norm() > 0.0 {
                    nonzero += 1;
                }
            }
        }
        assert_eq!(nonzero, 9);
        for (r, c, v) in expected {
            assert_eq!(m[(r, c)], C::new(v, 0.0));
        }
    }

    #[test]
    fn decode_round_trips_and_rejects_double_column() {
        let s = builtin_solution(BuiltinSolution::Hura5).unwrap();
        let d = WeightSystem::from_fn(4, |x, y| C::new(1.0 + (x * 4 + y) as f64, 0.5)).unwrap();
        let m = monomial_from_bvst(&s, &d).unwrap();
        let pattern = decode_monomial(&m).unwrap();
        assert_eq!(pattern.to_matrix(), m);
        assert_eq!(pattern.to_solution().pairs(), s.pairs());

        let mut broken = m.clone();
        broken[(0, 0)] = C::new(0.5, 0.0);
        assert!(matches!(
            decode_monomial(&broken),
            Err(MatrixError::NotMonomial { .. })
        ));
    }

    #[test]
    fn identity_decodes_to_identity_pattern() {
        let pattern = decode_monomial(&CMatrix::identity(4)).unwrap();
        assert_eq!(pattern.n, 2);
        assert_eq!(pattern.perm, vec![0, 1, 2, 3]);
    }

    #[test]
    fn hadamard_rmatrix_rejects_non_monomial_support() {
        // the printed 4×4 counterexample has two nonzeros in one column
        let x = super::super::examples::build_example(
            &super::super::examples::ExampleKind::CounterexampleX,
        )
        .unwrap()
        .matrix;
        assert!(matches!(
            hadamard_rmatrix(&x, &x, DEFAULT_TOL),
            Err(MatrixError::NotMonomial { column: 1 })
        ));
        assert!(matches!(
            decode_monomial(&x),
            Err(MatrixError::NotMonomial { column: 1 })
        ));
    }

    #[test]
    fn hadamard_of_matching_cyclic_matrices_multiplies_weights() {
        let s = builtin_solution(BuiltinSolution::Cyclic { n: 3 }).unwrap();
        let d1 = cyclic3_weights([1.0, 2.0, 3.0]);
        let d2 = cyclic3_weights([5.0, 0.5, -1.0]);
        let m1 = monomial_from_bvst(&s, &d1).unwrap();
        let m2 = monomial_from_bvst(&s, &d2).unwrap();
        let product = hadamard_rmatrix(&m1, &m2, DEFAULT_TOL).unwrap();
        let d12 = WeightSystem::from_fn(3, |x, y| d1.get(x, y) * d2.get(x, y)).unwrap();
        assert!(verify_cocycle(&s, &d12, DEFAULT_TOL).unwrap());
        assert!(product.approx_eq(&monomial_from_bvst(&s, &d12).unwrap(), 1e-12));
        assert!(qybe_check(&product, 3, DEFAULT_TOL).unwrap().ok);
    }

    #[test]
    fn multiplicative_map_squares_weights() {
        let s = builtin_solution(BuiltinSolution::Cyclic { n: 3 }).unwrap();
        let d = cyclic3_weights([1.0, 2.0, 3.0]);
        let m = monomial_from_bvst(&s, &d).unwrap();
        let squared = apply_multiplicative_map(
            &m,
            MultiplicativeMap {
                power: 2,
                conjugate: false,
            },
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(qybe_check(&squared, 3, DEFAULT_TOL).unwrap().ok);
        let d_sq = WeightSystem::from_fn(3, |x, y| d.get(x, y) * d.get(x, y)).unwrap();
        assert!(squared.approx_eq(&monomial_from_bvst(&s, &d_sq).unwrap(), 1e-12));

        let identity_map = MultiplicativeMap {
            power: 1,
            conjugate: false,
        };
        assert!(apply_multiplicative_map(&m, identity_map, DEFAULT_TOL)
            .unwrap()
            .approx_eq(&m, 0.0));
    }

    #[test]
    fn conjugation_map_preserves_qybe_on_unitary_monomial() {
        let s = builtin_solution(BuiltinSolution::Cyclic { n: 3 }).unwrap();
        let d = WeightSystem::from_fn(3, |x, y| {
            C::from_polar(1.0, 0.3 * (((x + 3 - y) % 3) as f64))
        })
        .unwrap();
        let m = monomial_from_bvst(&s, &d).unwrap();
        assert!(super::super::cmatrix::is_unitary(&m, 1e-12));
        let conjugated = apply_multiplicative_map(
            &m,
            MultiplicativeMap {
                power: 1,
                conjugate: true,
            },
            DEFAULT_TOL,
        )
        .unwrap();
        assert!(qybe_check(&conjugated, 3, DEFAULT_TOL).unwrap().ok);
    }

    #[test]
    fn classify_flip_matrix() {
        let s = builtin_solution(BuiltinSolution::Flip { n: 3 }).unwrap();
        let ones = WeightSystem::constant(3, C::new(1.0, 0.0)).unwrap();
        let m = monomial_from_bvst(&s, &ones).unwrap();
        let report = classify_involutive_matrix(&m, 3, DEFAULT_TOL).unwrap();
        assert!(report.permutation && report.symmetric);
        assert!(report.squares_to_identity && report.block_condition);
        assert_eq!(report.solution.unwrap().pairs(), s.pairs());
    }

    #[test]
    fn classify_rejects_asymmetric_permutation() {
        // cyclic shift of all nine pairs: a permutation that is not symmetric
        let m = CMatrix::from_fn(9, 9, |r, c| C::new(f64::from(r == (c + 1) % 9), 0.0));
        let report = classify_involutive_matrix(&m, 3, DEFAULT_TOL).unwrap();
        assert!(report.permutation);
        assert!(!report.symmetric);
        assert!(report.solution.is_none());
    }
}
