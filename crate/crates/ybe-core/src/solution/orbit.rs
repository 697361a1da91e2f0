use super::types::{PartitionedSet, SetSolution};

/// Orbit decomposition: the orbit of `z` is the smallest set containing `z`
/// and closed under `y ↦ σ_x(y)` and `y ↦ τ_x(y)` for every `x`. Returns the
/// partition into orbits and whether the solution is indecomposable (exactly
/// one orbit on a non-empty set).
pub fn orbits(s: &SetSolution) -> (PartitionedSet, bool) {
    let n = s.n();
    let mut assigned = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for z in 0..n {
        if assigned[z] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut orbit = vec![z];
        assigned[z] = idx;
        let mut frontier = vec![z];
        while let Some(y) = frontier.pop() {
            for x in 0..n {
                for next in [s.sigma(x, y), s.tau(x, y)] {
                    if assigned[next] == usize::MAX {
                        assigned[next] = idx;
                        orbit.push(next);
                        frontier.push(next);
                    }
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit);
    }
    let indecomposable = classes.len() == 1 && n >= 1;
    let partition = PartitionedSet::new(n, classes).expect("orbits are disjoint by construction");
    (partition, indecomposable)
}
