use std::collections::BTreeMap;

use crate::Complex64;

use super::cmatrix::{kron, nonsingularity, CMatrix};
use super::MatrixError;

/// Residual report for the matrix Yang-Baxter equation.
#[derive(Debug, Clone, Copy)]
pub struct QybeReport {
    pub ok: bool,
    pub residual: f64,
}

fn require_base_dim(x: &CMatrix, n: usize) -> Result<(), MatrixError> {
    if n == 0 || x.rows() != n * n || x.cols() != n * n {
        return Err(MatrixError::BaseDimension {
            rows: x.rows(),
            cols: x.cols(),
            n,
        });
    }
    Ok(())
}

/// Checks `(X⊗I)(I⊗X)(X⊗I) = (I⊗X)(X⊗I)(I⊗X)` for an `n²×n²` matrix and
/// reports the maximum entry residual.
pub fn qybe_check(x: &CMatrix, n: usize, tol: f64) -> Result<QybeReport, MatrixError> {
    require_base_dim(x, n)?;
    let id = CMatrix::identity(n);
    let xi = kron(x, &id);
    let ix = kron(&id, x);
    let lhs = xi.mul(&ix).mul(&xi);
    let rhs = ix.mul(&xi).mul(&ix);
    let residual = lhs.max_abs_diff(&rhs);
    Ok(QybeReport {
        ok: residual <= tol,
        residual,
    })
}

/// An R-matrix is a nonsingular solution of the Yang-Baxter equation.
pub fn is_r_matrix(x: &CMatrix, n: usize, tol: f64) -> Result<bool, MatrixError> {
    let report = qybe_check(x, n, tol)?;
    if !report.ok {
        return Ok(false);
    }
    Ok(nonsingularity(x, tol)?.nonsingular)
}

/// Kronecker-pair criterion: `C⊗D` satisfies the Yang-Baxter equation exactly
/// when `C²⊗DCD⊗D = C⊗CDC⊗D²`.
pub fn kron_pair_criterion(c: &CMatrix, d: &CMatrix, tol: f64) -> Result<bool, MatrixError> {
    if !c.is_square() || !d.is_square() || c.rows() != d.rows() {
        return Err(MatrixError::SizeMismatch);
    }
    let lhs = kron(&kron(&c.mul(c), &d.mul(c).mul(d)), d);
    let rhs = kron(&kron(c, &c.mul(d).mul(c)), &d.mul(d));
    Ok(lhs.max_abs_diff(&rhs) <= tol)
}

/// Conjugation `(P⊗P) · X · (P⊗P)⁻¹`, which preserves the Yang-Baxter
/// equation for any nonsingular `P`. The inverse is formed on `P` itself, so
/// `(P⊗P)⁻¹ = P⁻¹⊗P⁻¹` stays exact.
pub fn conjugate_similarity(p: &CMatrix, x: &CMatrix, tol: f64) -> Result<CMatrix, MatrixError> {
    if !p.is_square() {
        return Err(MatrixError::NotSquare {
            rows: p.rows(),
            cols: p.cols(),
        });
    }
    require_base_dim(x, p.rows())?;
    let p_inv = p.inverse(tol)?;
    Ok(kron(p, p).mul(x).mul(&kron(&p_inv, &p_inv)))
}

/// A polynomial in two scalar variables with matrix coefficients, keyed by
/// `(deg_x, deg_y)`.
type MatrixPoly = BTreeMap<(u32, u32), CMatrix>;

fn poly_mul(a: &MatrixPoly, b: &MatrixPoly) -> MatrixPoly {
    let mut out = MatrixPoly::new();
    for ((ax, ay), am) in a {
        for ((bx, by), bm) in b {
            let key = (ax + bx, ay + by);
            let product = am.mul(bm);
            match out.get_mut(&key) {
                Some(acc) => *acc = acc.add(&product),
                None => {
                    out.insert(key, product);
                }
            }
        }
    }
    out
}

/// Parameter-dependent Yang-Baxter check for `R(x) = I + αxA` where `A² = I`:
///
/// `(R(x)⊗I)(I⊗R(x+y))(R(y)⊗I) = (I⊗R(y))(R(x+y)⊗I)(I⊗R(x))`
///
/// Both sides are expanded as polynomials in `(x, y)` with matrix
/// coefficients and compared coefficient by coefficient, so no sampling of
/// the variables is involved.
pub fn parametrized_ybe_check(
    a: &CMatrix,
    n: usize,
    alpha: Complex64,
    tol: f64,
) -> Result<bool, MatrixError> {
    require_base_dim(a, n)?;
    let square_residual = a.mul(a).max_abs_diff(&CMatrix::identity(n * n));
    if square_residual > tol {
        return Err(MatrixError::NotInvolution {
            residual: square_residual,
        });
    }
    let id_small = CMatrix::identity(n);
    let id_big = CMatrix::identity(n * n * n);
    let f = kron(a, &id_small).scale(alpha); // (A⊗I)·α
    let g = kron(&id_small, a).scale(alpha);

    // R(x)⊗I = I + x·αF etc.; x+y contributes to both monomials
    let lin = |m: &CMatrix, dx: u32, dy: u32| -> MatrixPoly {
        let mut p = MatrixPoly::new();
        p.insert((0, 0), id_big.clone());
        match (dx, dy) {
            (1, 0) => {
                p.insert((1, 0), m.clone());
            }
            (0, 1) => {
                p.insert((0, 1), m.clone());
            }
            _ => {
                p.insert((1, 0), m.clone());
                p.insert((0, 1), m.clone());
            }
        }
        p
    };

    let lhs = poly_mul(&poly_mul(&lin(&f, 1, 0), &lin(&g, 1, 1)), &lin(&f, 0, 1));
    let rhs = poly_mul(&poly_mul(&lin(&g, 0, 1), &lin(&f, 1, 1)), &lin(&g, 1, 0));

    let zero = CMatrix::zeros(id_big.rows(), id_big.cols());
    let keys: std::collections::BTreeSet<_> = lhs.keys().chain(rhs.keys()).collect();
    for key in keys {
        let l = lhs.get(key).unwrap_or(&zero);
        let r = rhs.get(key).unwrap_or(&zero);
        if l.max_abs_diff(r) > tol {
            return Ok(false);
        }
    }
    Ok(true)
}
