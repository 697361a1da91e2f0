use crate::Complex64;

use super::cmatrix::CMatrix;
use super::MatrixError;

/// Off-diagonal convergence threshold, relative to the largest initial
/// diagonal magnitude of the Gram matrix.
const OFF_DIAGONAL_THRESHOLD: f64 = 1e-12;
/// Maximum number of full sweeps before giving up.
const MAX_SWEEPS: usize = 100;
/// Singular values below this fraction of the largest one count as zero when
/// building a pseudo-inverse.
const RANK_CUTOFF: f64 = 1e-12;

/// Eigen-decomposition of a Hermitian matrix by the cyclic Jacobi method.
///
/// Each rotation annihilates one off-diagonal pivot with a unitary plane
/// rotation; sweeps repeat until the largest off-diagonal magnitude falls
/// under the threshold. Jacobi converges unconditionally on Hermitian
/// matrices and delivers high relative accuracy, which is what makes the
/// Gram-matrix route below acceptable for the small matrices in scope.
///
/// Returns the eigenvalues (descending) with the matching unitary
/// eigenvector columns: `G = V · diag(λ) · V*`.
pub fn hermitian_eigen(g: &CMatrix) -> Result<(Vec<f64>, CMatrix), MatrixError> {
    if !g.is_square() {
        return Err(MatrixError::NotSquare {
            rows: g.rows(),
            cols: g.cols(),
        });
    }
    let n = g.rows();
    let mut a = g.clone();
    let mut v = CMatrix::identity(n);
    let scale = (0..n)
        .map(|i| a[(i, i)].norm())
        .fold(0.0f64, f64::max)
        .max(1.0);
    let threshold = OFF_DIAGONAL_THRESHOLD * scale;
    // rotations continue well past the acceptance threshold; Jacobi is
    // quadratically convergent, so the extra sweeps land near machine
    // precision at negligible cost
    let fine = f64::EPSILON * scale;

    let off = |a: &CMatrix| -> f64 {
        let mut worst = 0.0f64;
        for p in 0..n {
            for q in p + 1..n {
                worst = worst.max(a[(p, q)].norm());
            }
        }
        worst
    };

    for _ in 0..MAX_SWEEPS {
        if off(&a) <= fine {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                let apq = a[(p, q)];
                let m = apq.norm();
                if m <= fine {
                    continue;
                }
                let app = a[(p, p)].re;
                let aqq = a[(q, q)].re;
                let phase = apq / m; // e^{iφ}
                // real rotation for the phase-adjusted 2×2 block
                let tau = (aqq - app) / (2.0 * m);
                let t = if tau >= 0.0 {
                    1.0 / (tau + (1.0 + tau * tau).sqrt())
                } else {
                    -1.0 / (-tau + (1.0 + tau * tau).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;
                // column rotation J: (p,p)=c, (p,q)=s·e^{iφ}, (q,p)=−s·e^{−iφ}, (q,q)=c
                let jp = Complex64::new(c, 0.0);
                let jpq = phase * s;
                let jqp = -phase.conj() * s;
                // A ← J* A J applied in place on rows/columns p and q
                for k in 0..n {
                    let akp = a[(k, p)];
                    let akq = a[(k, q)];
                    a[(k, p)] = akp * jp + akq * jqp;
                    a[(k, q)] = akp * jpq + akq * jp;
                }
                for k in 0..n {
                    let apk = a[(p, k)];
                    let aqk = a[(q, k)];
                    a[(p, k)] = jp.conj() * apk + jqp.conj() * aqk;
                    a[(q, k)] = jpq.conj() * apk + jp.conj() * aqk;
                }
                for k in 0..n {
                    let vkp = v[(k, p)];
                    let vkq = v[(k, q)];
                    v[(k, p)] = vkp * jp + vkq * jqp;
                    v[(k, q)] = vkp * jpq + vkq * jp;
                }
            }
        }
    }
    let residual = off(&a);
    if residual > threshold {
        return Err(MatrixError::NoConvergence { residual });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let eigs: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| eigs[j].partial_cmp(&eigs[i]).unwrap());
    let sorted_eigs: Vec<f64> = order.iter().map(|&i| eigs[i]).collect();
    let sorted_v = CMatrix::from_fn(n, n, |r, c| v[(r, order[c])]);
    Ok((sorted_eigs, sorted_v))
}

/// Full singular value decomposition `A = U · diag(σ) · V*` obtained from the
/// Jacobi eigen-decomposition of the Hermitian Gram matrix `A*A`. Left
/// vectors for nonzero singular values are `u = A·v/σ`; zero directions keep
/// zero columns, which the pseudo-inverse never touches.
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

pub fn svd(a: &CMatrix) -> Result<Svd, MatrixError> {
    let gram = a.dagger().mul(a);
    let (eigs, v) = hermitian_eigen(&gram)?;
    let sigma: Vec<f64> = eigs.iter().map(|&l| l.max(0.0).sqrt()).collect();
    let cutoff = sigma.first().copied().unwrap_or(0.0) * RANK_CUTOFF;
    let (m, k) = (a.rows(), a.cols());
    let mut u = CMatrix::zeros(m, k);
    for (j, &s) in sigma.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        for r in 0..m {
            let mut acc = Complex64::new(0.0, 0.0);
            for c in 0..k {
                acc += a[(r, c)] * v[(c, j)];
            }
            u[(r, j)] = acc / s;
        }
    }
    Ok(Svd { u, sigma, v })
}

/// Singular values in descending order: the square roots of the eigenvalues
/// of `A*A`, truncated to `min(rows, cols)` values.
pub fn singular_values(a: &CMatrix) -> Result<Vec<f64>, MatrixError> {
    let gram = a.dagger().mul(a);
    let (eigs, _) = hermitian_eigen(&gram)?;
    let mut sigma: Vec<f64> = eigs.iter().map(|&l| l.max(0.0).sqrt()).collect();
    sigma.truncate(a.rows().min(a.cols()));
    Ok(sigma)
}

/// Moore-Penrose pseudo-inverse `A⁺ = V · Σ⁺ · U*` via the Jacobi SVD.
pub fn pinv(a: &CMatrix) -> Result<CMatrix, MatrixError> {
    let Svd { u, sigma, v } = svd(a)?;
    let cutoff = sigma.first().copied().unwrap_or(0.0) * RANK_CUTOFF;
    let (m, k) = (a.rows(), a.cols());
    let mut out = CMatrix::zeros(k, m);
    for (j, &s) in sigma.iter().enumerate() {
        if s <= cutoff {
            continue;
        }
        for r in 0..k {
            for c in 0..m {
                let term = v[(r, j)] * u[(c, j)].conj() / s;
                out[(r, c)] += term;
            }
        }
    }
    Ok(out)
}

/// The four Penrose identities within `tol`:
/// `A A⁺ A = A`, `A⁺ A A⁺ = A⁺`, and both products Hermitian.
pub fn penrose_check(a: &CMatrix, ap: &CMatrix, tol: f64) -> bool {
    if a.rows() != ap.cols() || a.cols() != ap.rows() {
        return false;
    }
    let aap = a.mul(ap);
    let apa = ap.mul(a);
    a.mul(&apa).max_abs_diff(a) <= tol
        && ap.mul(&aap).max_abs_diff(ap) <= tol
        && apa.max_abs_diff(&apa.dagger()) <= tol
        && aap.max_abs_diff(&aap.dagger()) <= tol
}
