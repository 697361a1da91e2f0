use super::cocycle::{lift_weights, orbit_weights, verify_cocycle};
use super::triviality::is_trivial;
use super::{WeightSystem, WeightsError};
use crate::algebra::nilpotency_chains;
use crate::solution::{
    i_retraction, multipermutation_level, orbits, solution_properties, OneGeneratorSolution,
    SetSolution,
};
use crate::Complex64;

/// If every `σ_x` equals one `n`-cycle `π` and every `τ_y` equals `π⁻¹`, the
/// solution is the cyclic permutation solution up to relabelling; returns the
/// labels along the cycle.
fn cyclic_relabel(s: &SetSolution) -> Option<Vec<usize>> {
    let n = s.n();
    let pi = s.sigma_row(0);
    for x in 1..n {
        if s.sigma_row(x) != pi {
            return None;
        }
    }
    let mut label = vec![usize::MAX; n];
    let mut cur = 0usize;
    for k in 0..n {
        if label[cur] != usize::MAX {
            return None; // short cycle
        }
        label[cur] = k;
        cur = pi[cur];
    }
    let mut pinv = vec![0usize; n];
    for (i, &v) in pi.iter().enumerate() {
        pinv[v] = i;
    }
    for y in 0..n {
        if s.tau_row(y) != pinv {
            return None;
        }
    }
    Some(label)
}

/// Cyclic-difference weights `g(k)` with `g(1)² ≠ g(0)²`, pulled back through
/// element labels.
fn nontrivial_cyclic_weights(m: usize, label: &[usize]) -> Result<WeightSystem, WeightsError> {
    let mut g = vec![Complex64::new(1.0, 0.0); m];
    g[1] = Complex64::new(2.0, 0.0);
    WeightSystem::from_fn(label.len(), |x, y| g[(label[x] + m - label[y]) % m])
}

/// Builds a weight system that passes the cocycle check but is not a diagonal
/// gauge of the unweighted solution.
///
/// Decomposable solutions get orbit weights with a non-constant class table.
/// Indecomposable ones are matched to the cyclic solution directly when
/// possible; otherwise the caller must supply the one-generator presentation
/// of the solution, whose brace is reduced modulo `I = A·A² + A²·A` — an
/// ideal with cyclic I-retraction — and the cyclic weights are lifted back.
pub fn construct_nontrivial_bvst(
    s: &SetSolution,
    presentation: Option<&OneGeneratorSolution>,
    tol: f64,
) -> Result<WeightSystem, WeightsError> {
    let props = solution_properties(s);
    if !props.involutive {
        return Err(WeightsError::NotInvolutive);
    }
    if !props.left_nondeg || !props.right_nondeg {
        return Err(WeightsError::NotNonDegenerate);
    }
    if s.n() == 1 {
        return Err(WeightsError::PointSolution);
    }
    if multipermutation_level(s)?.is_none() {
        return Err(WeightsError::InfiniteMultipermutationLevel);
    }

    let (classes, indecomposable) = orbits(s);
    let weights = if !indecomposable {
        let m = classes.len();
        let mut alpha = vec![Complex64::new(1.0, 0.0); m * m];
        alpha[1] = Complex64::new(2.0, 0.0); // class pair (0,1)
        orbit_weights(s, &classes, &alpha)?
    } else if let Some(label) = cyclic_relabel(s) {
        nontrivial_cyclic_weights(s.n(), &label)?
    } else {
        let one = presentation.ok_or(WeightsError::PresentationRequired)?;
        if &one.solution != s {
            return Err(WeightsError::PresentationMismatch);
        }
        let brace = &one.subbrace;
        let chains = nilpotency_chains(brace);
        if !chains.left.vanishes || !chains.right.vanishes {
            return Err(WeightsError::BraceNotNilpotent);
        }
        // I = A·A² + A²·A inside the sub-brace
        let a2 = &chains.left.chain[1];
        let mut products = Vec::new();
        for a in 0..brace.order() {
            for &b in a2 {
                products.push(brace.star(a, b));
                products.push(brace.star(b, a));
            }
        }
        let ideal = brace.additive_closure(&products);

        // re-index the solution's carrier set into sub-brace coordinates;
        // sorted ambient order is preserved by the sorted sub-brace listing
        let position = |g: usize| one.subbrace_elements.binary_search(&g).ok();
        let sub_set: Vec<usize> = one
            .x_set
            .iter()
            .map(|&g| position(g).ok_or(WeightsError::PresentationMismatch))
            .collect::<Result<_, _>>()?;
        let retract = i_retraction(brace, &ideal, &sub_set, s)?;
        let m = retract.solution.n();
        if m < 2 {
            return Err(WeightsError::QuotientNotCyclic);
        }
        let label = cyclic_relabel(&retract.solution).ok_or(WeightsError::QuotientNotCyclic)?;
        let quotient_weights = nontrivial_cyclic_weights(m, &label)?;
        lift_weights(&retract.class_map, &quotient_weights)?
    };

    if !verify_cocycle(s, &weights, tol)? {
        return Err(WeightsError::ConstructionDegenerate);
    }
    if is_trivial(s, &weights, tol)?.is_some() {
        return Err(WeightsError::ConstructionDegenerate);
    }
    Ok(weights)
}
