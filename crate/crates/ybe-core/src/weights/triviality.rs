use super::cocycle::verify_cocycle;
use super::{WeightSystem, WeightsError};
use crate::intlinalg::diagonalize;
use crate::solution::SetSolution;
use crate::Complex64;

/// A certificate that a weight system is trivial:
/// `d(x,y) = c · α_x α_y / (α_{σ_x(y)} α_{τ_y(x)})`.
#[derive(Debug, Clone)]
pub struct TrivialityWitness {
    pub alpha: Vec<Complex64>,
    pub c: Complex64,
}

impl TrivialityWitness {
    /// The weight the witness assigns to a pair.
    pub fn weight(&self, s: &SetSolution, x: usize, y: usize) -> Complex64 {
        self.c * self.alpha[x] * self.alpha[y]
            / (self.alpha[s.sigma(x, y)] * self.alpha[s.tau(y, x)])
    }

    /// Maximum relative deviation from a weight system.
    pub fn residual(&self, s: &SetSolution, d: &WeightSystem) -> f64 {
        let n = s.n();
        let mut worst = 0.0f64;
        for x in 0..n {
            for y in 0..n {
                let expect = d.get(x, y);
                let got = self.weight(s, x, y);
                worst = worst.max((got - expect).norm() / expect.norm());
            }
        }
        worst
    }
}

/// Decides whether the weight system is a diagonal gauge of the unweighted
/// solution. The multiplicative system in the unknowns `(α_1..α_n, c)` is
/// written as an integer exponent matrix; over the nonzero complex numbers —
/// a divisible group, where root extraction never obstructs — it is solvable
/// exactly when every integer vector in the left kernel of the exponent
/// matrix annihilates the constants, i.e. the corresponding product of
/// weights is 1. The kernel comes from exact integer elimination and the
/// products are checked within `tol`; a witness is recovered by
/// back-substitution through the elimination, taking principal roots.
pub fn is_trivial(
    s: &SetSolution,
    d: &WeightSystem,
    tol: f64,
) -> Result<Option<TrivialityWitness>, WeightsError> {
    if !verify_cocycle(s, d, tol)? {
        return Err(WeightsError::CocycleViolation);
    }
    let n = s.n();
    let unknowns = n + 1; // alphas then c
    let mut rows: Vec<Vec<i128>> = Vec::with_capacity(n * n);
    let mut logs: Vec<Complex64> = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let mut row = vec![0i128; unknowns];
            row[x] += 1;
            row[y] += 1;
            row[s.sigma(x, y)] -= 1;
            row[s.tau(y, x)] -= 1;
            row[n] += 1;
            rows.push(row);
            logs.push(d.get(x, y).ln());
        }
    }
    let dec = diagonalize(rows)?;

    let weighted_log = |coeffs: &[i128]| -> Complex64 {
        coeffs
            .iter()
            .zip(&logs)
            .map(|(&c, &l)| l * c as f64)
            .sum()
    };

    // rows of U past the rank span the integer left kernel: each must send
    // the weight products to 1
    for row in dec.u.iter().skip(dec.rank) {
        let s_log = weighted_log(row);
        if (s_log.exp() - Complex64::new(1.0, 0.0)).norm() > tol {
            return Ok(None);
        }
    }

    // back-substitute: D w = U b, z = V w, taking principal roots
    let mut w_logs = vec![Complex64::new(0.0, 0.0); unknowns];
    for (i, (u_row, &diag)) in dec.u.iter().zip(&dec.diag).enumerate() {
        w_logs[i] = weighted_log(u_row) / diag as f64;
    }
    let mut z_logs = vec![Complex64::new(0.0, 0.0); unknowns];
    for (j, z) in z_logs.iter_mut().enumerate() {
        for (i, &w) in w_logs.iter().enumerate() {
            *z += w * dec.v[j][i] as f64;
        }
    }
    let alpha: Vec<Complex64> = z_logs[..n].iter().map(|l| l.exp()).collect();
    let witness = TrivialityWitness {
        alpha,
        c: z_logs[n].exp(),
    };
    let residual = witness.residual(s, d);
    if residual > 1e-6 {
        return Err(WeightsError::WitnessVerification(residual));
    }
    Ok(Some(witness))
}

/// For involutive solutions, trivial weights force `d(x,y)·d(r(x,y))` to be a
/// constant (`c²`) across all pairs. Returns whether the products are
/// constant; a non-constant table certifies non-triviality.
pub fn lemma_trivial_check(
    s: &SetSolution,
    d: &WeightSystem,
    tol: f64,
) -> Result<bool, WeightsError> {
    if s.n() != d.n() {
        return Err(WeightsError::DimensionMismatch {
            weights: d.n(),
            solution: s.n(),
        });
    }
    let n = s.n();
    let reference = {
        let (u, v) = s.r(0, 0);
        d.get(0, 0) * d.get(u, v)
    };
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.r(x, y);
            let product = d.get(x, y) * d.get(u, v);
            if (product - reference).norm() > tol * reference.norm().max(1.0) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
