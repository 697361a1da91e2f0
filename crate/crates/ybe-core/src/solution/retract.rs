use super::brace_map::yb_map_from_brace;
use super::types::{solution_properties, SetSolution};
use super::SolutionError;
use crate::algebra::{is_ideal, AlgebraError, FiniteBrace};

/// A retracted solution together with the surjection onto class indices.
#[derive(Debug, Clone)]
pub struct Retraction {
    pub solution: SetSolution,
    pub class_map: Vec<usize>,
}

fn induced_on_classes(
    s: &SetSolution,
    class_map: &[usize],
    class_count: usize,
) -> Result<SetSolution, SolutionError> {
    let n = s.n();
    let m = class_count;
    let mut table: Vec<Option<(usize, usize)>> = vec![None; m * m];
    for x in 0..n {
        for y in 0..n {
            let (u, v) = s.r(x, y);
            let key = class_map[x] * m + class_map[y];
            let image = (class_map[u], class_map[v]);
            match table[key] {
                None => table[key] = Some(image),
                Some(prev) if prev == image => {}
                Some(_) => return Err(SolutionError::RetractionIllDefined),
            }
        }
    }
    let map: Vec<(usize, usize)> = table
        .into_iter()
        .map(|e| e.ok_or(SolutionError::RetractionIllDefined))
        .collect::<Result<_, _>>()?;
    SetSolution::new(m, map)
}

/// Retraction of a solution: identify elements with equal `σ` rows and induce
/// `r` on the classes. An inconsistent induced table signals that the
/// involutivity / non-degeneracy precondition was violated.
pub fn retraction(s: &SetSolution) -> Result<Retraction, SolutionError> {
    let n = s.n();
    let mut reps: Vec<Vec<usize>> = Vec::new();
    let mut class_map = Vec::with_capacity(n);
    for x in 0..n {
        let row = s.sigma_row(x);
        match reps.iter().position(|r| r == &row) {
            Some(idx) => class_map.push(idx),
            None => {
                class_map.push(reps.len());
                reps.push(row);
            }
        }
    }
    let solution = induced_on_classes(s, &class_map, reps.len())?;
    Ok(Retraction {
        solution,
        class_map,
    })
}

/// Smallest `m` such that the `m`-fold retraction has one element, or `None`
/// if retraction stabilises at a larger size. Requires an involutive
/// non-degenerate solution.
pub fn multipermutation_level(s: &SetSolution) -> Result<Option<usize>, SolutionError> {
    let props = solution_properties(s);
    if !props.involutive {
        return Err(SolutionError::NotInvolutive);
    }
    if !props.left_nondeg || !props.right_nondeg {
        return Err(SolutionError::NotNonDegenerate);
    }
    let mut current = s.clone();
    let mut level = 0usize;
    loop {
        if current.n() == 1 {
            return Ok(Some(level));
        }
        let next = retraction(&current)?.solution;
        if next.n() == current.n() {
            return Ok(None);
        }
        current = next;
        level += 1;
    }
}

/// Retraction along the cosets of a brace ideal. `ambient_set` lists, in
/// sorted order, the brace elements that `s` is indexed by; `s` must be the
/// restriction of the brace Yang-Baxter map to that set. Elements fall in the
/// same class when their difference lies in the ideal.
pub fn i_retraction(
    brace: &FiniteBrace,
    ideal: &[usize],
    ambient_set: &[usize],
    s: &SetSolution,
) -> Result<Retraction, SolutionError> {
    if !is_ideal(brace, ideal) {
        return Err(SolutionError::Algebra(AlgebraError::NotAnIdeal));
    }
    let n = brace.order();
    let mut sorted = ambient_set.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ambient_set.len()
        || sorted != ambient_set
        || sorted.iter().any(|&x| x >= n)
        || s.n() != sorted.len()
    {
        return Err(SolutionError::SetMismatch);
    }
    let full = yb_map_from_brace(brace);
    for (i, &x) in sorted.iter().enumerate() {
        for (j, &y) in sorted.iter().enumerate() {
            let (u, v) = full.r(x, y);
            let (lu, lv) = s.r(i, j);
            if sorted.get(lu) != Some(&u) || sorted.get(lv) != Some(&v) {
                return Err(SolutionError::NotRestriction { x, y });
            }
        }
    }
    let mut in_ideal = vec![false; n];
    for &i in ideal {
        in_ideal[i] = true;
    }
    let mut class_map = vec![usize::MAX; sorted.len()];
    let mut rep_elements: Vec<usize> = Vec::new();
    for (i, &x) in sorted.iter().enumerate() {
        match rep_elements
            .iter()
            .position(|&r| in_ideal[brace.sub(x, r)])
        {
            Some(idx) => class_map[i] = idx,
            None => {
                class_map[i] = rep_elements.len();
                rep_elements.push(x);
            }
        }
    }
    let solution = induced_on_classes(s, &class_map, rep_elements.len())?;
    Ok(Retraction {
        solution,
        class_map,
    })
}
