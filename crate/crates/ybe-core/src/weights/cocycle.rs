use super::{WeightSystem, WeightsError};
use crate::solution::{PartitionedSet, SetSolution};
use crate::Complex64;

fn check_dims(s: &SetSolution, d: &WeightSystem) -> Result<(), WeightsError> {
    if s.n() != d.n() {
        return Err(WeightsError::DimensionMismatch {
            weights: d.n(),
            solution: s.n(),
        });
    }
    Ok(())
}

/// The six-factor cocycle identity
///
/// `d(x,y)·d(τ_y(x),z)·d(σ_x(y), σ_{τ_y(x)}(z)) =
///  d(y,z)·d(x, σ_y(z))·d(τ_{σ_y(z)}(x), τ_z(y))`
///
/// on all triples; equivalent to the assembled monomial matrix satisfying the
/// matrix Yang-Baxter equation.
pub fn verify_cocycle(
    s: &SetSolution,
    d: &WeightSystem,
    tol: f64,
) -> Result<bool, WeightsError> {
    check_dims(s, d)?;
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            let sxy = s.sigma(x, y);
            let txy = s.tau(y, x);
            let dxy = d.get(x, y);
            for z in 0..n {
                let lhs = dxy * d.get(txy, z) * d.get(sxy, s.sigma(txy, z));
                let syz = s.sigma(y, z);
                let rhs = d.get(y, z) * d.get(x, syz) * d.get(s.tau(syz, x), s.tau(z, y));
                if (lhs - rhs).norm() > tol {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Accepts a pair-weight table satisfying the three invariance identities
///
/// 1. `f(x,y) = f(τ_{σ_y(z)}(x), τ_z(y))`
/// 2. `f(τ_y(x), z) = f(x, σ_y(z))`
/// 3. `f(σ_x(y), σ_{τ_y(x)}(z)) = f(y,z)`
///
/// and returns it as a weight system; the cocycle identity then holds term by
/// term. Reports the first violated identity otherwise.
pub fn invariance_weights(
    s: &SetSolution,
    f: &WeightSystem,
    tol: f64,
) -> Result<WeightSystem, WeightsError> {
    check_dims(s, f)?;
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let syz = s.sigma(y, z);
                let checks = [
                    (f.get(x, y), f.get(s.tau(syz, x), s.tau(z, y))),
                    (f.get(s.tau(y, x), z), f.get(x, syz)),
                    (f.get(s.sigma(x, y), s.sigma(s.tau(y, x), z)), f.get(y, z)),
                ];
                for (identity, (lhs, rhs)) in checks.iter().enumerate() {
                    if (lhs - rhs).norm() > tol {
                        return Err(WeightsError::InvarianceViolation {
                            identity: identity as u8 + 1,
                            x,
                            y,
                            z,
                        });
                    }
                }
            }
        }
    }
    Ok(f.clone())
}

/// Weights constant on class pairs: `d(x,y) = α_{ij}` for `x ∈ X_i`,
/// `y ∈ X_j`. The classes must cover the set, be disjoint and satisfy the
/// invariance `r(X_i, X_j) ⊆ (X_j, X_i)`; `alpha` is the flattened `m×m`
/// class-pair table.
pub fn orbit_weights(
    s: &SetSolution,
    classes: &PartitionedSet,
    alpha: &[Complex64],
) -> Result<WeightSystem, WeightsError> {
    if classes.n() != s.n() || !classes.covers_all() {
        return Err(WeightsError::NotCovering);
    }
    let m = classes.len();
    if alpha.len() != m * m {
        return Err(WeightsError::LengthMismatch {
            expected: m * m,
            got: alpha.len(),
        });
    }
    let class_of = classes.class_of();
    let n = s.n();
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.r(x, y);
            let (i, j) = (class_of[x].unwrap(), class_of[y].unwrap());
            if class_of[u] != Some(j) || class_of[v] != Some(i) {
                return Err(WeightsError::Solution(
                    crate::solution::SolutionError::InvarianceViolation {
                        class_x: i,
                        class_y: j,
                        x,
                        y,
                    },
                ));
            }
        }
    }
    WeightSystem::from_fn(n, |x, y| {
        alpha[class_of[x].unwrap() * m + class_of[y].unwrap()]
    })
}

/// Pulls a weight system on a quotient back through a retraction class map:
/// `d'(x,y) = d([x],[y])`. The class map must be a surjection onto the
/// quotient indices.
pub fn lift_weights(
    class_map: &[usize],
    quotient: &WeightSystem,
) -> Result<WeightSystem, WeightsError> {
    let m = quotient.n();
    let mut hit = vec![false; m];
    for &c in class_map {
        if c >= m {
            return Err(WeightsError::ClassMapInvalid);
        }
        hit[c] = true;
    }
    if class_map.is_empty() || hit.iter().any(|h| !h) {
        return Err(WeightsError::ClassMapInvalid);
    }
    WeightSystem::from_fn(class_map.len(), |x, y| {
        quotient.get(class_map[x], class_map[y])
    })
}
