use super::brace_map::yb_map_from_brace;
use super::types::{restrict_solution, PartitionedSet, SetSolution};
use super::SolutionError;
use crate::algebra::{nilpotency_chains, FiniteBrace};

/// The invariant-subset constructions supplied by a brace.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionKind {
    /// Classes `Q_b = {b + a·b : a ∈ B}` over nonzero `b`.
    OrbitQ,
    /// Grades of the left chain: `X_i = A^i \ A^{i+1}`. Needs left nilpotency.
    Graded,
    /// Cosets `Q_b = b + A^{i+1}` for `b` of grade `i`. Needs left nilpotency.
    Coset,
    /// Nonzero elements of the Sylow subgroups of the additive group.
    Sylow,
}

/// An invariant decomposition: the union set inside the brace, the restricted
/// solution on it, and the classes in the restricted indexing. Construction
/// verifies `r(X_i, X_j) ⊆ (X_j, X_i)` for every pair of classes.
#[derive(Debug, Clone)]
pub struct InvariantPartition {
    pub ambient: Vec<usize>,
    pub solution: SetSolution,
    pub classes: PartitionedSet,
}

fn additive_order(brace: &FiniteBrace, a: usize) -> usize {
    let mut k = 1;
    let mut acc = a;
    while acc != 0 {
        acc = brace.add(acc, a);
        k += 1;
    }
    k
}

fn global_classes(
    kind: PartitionKind,
    brace: &FiniteBrace,
) -> Result<Vec<Vec<usize>>, SolutionError> {
    let n = brace.order();
    match kind {
        PartitionKind::OrbitQ => {
            let mut classes: Vec<Vec<usize>> = Vec::new();
            for b in 1..n {
                let mut q: Vec<usize> = (0..n).map(|a| brace.add(b, brace.star(a, b))).collect();
                q.sort_unstable();
                q.dedup();
                if !classes.contains(&q) {
                    classes.push(q);
                }
            }
            Ok(classes)
        }
        PartitionKind::Graded | PartitionKind::Coset => {
            let left = nilpotency_chains(brace).left;
            if !left.vanishes {
                return Err(SolutionError::NotLeftNilpotent);
            }
            let chain = &left.chain;
            let grade_sets: Vec<Vec<usize>> = (0..chain.len() - 1)
                .map(|i| {
                    chain[i]
                        .iter()
                        .copied()
                        .filter(|x| !chain[i + 1].contains(x))
                        .collect()
                })
                .collect();
            match kind {
                PartitionKind::Graded => {
                    Ok(grade_sets.into_iter().filter(|g| !g.is_empty()).collect())
                }
                _ => {
                    let mut classes: Vec<Vec<usize>> = Vec::new();
                    for (i, grade) in grade_sets.iter().enumerate() {
                        for &b in grade {
                            let mut q: Vec<usize> =
                                chain[i + 1].iter().map(|&c| brace.add(b, c)).collect();
                            q.sort_unstable();
                            q.dedup();
                            if !classes.contains(&q) {
                                classes.push(q);
                            }
                        }
                    }
                    Ok(classes)
                }
            }
        }
        PartitionKind::Sylow => {
            let mut primes: Vec<usize> = Vec::new();
            let orders: Vec<usize> = (0..n)
                .map(|a| if a == 0 { 1 } else { additive_order(brace, a) })
                .collect();
            let mut m = n;
            let mut p = 2;
            while m > 1 {
                while m.is_multiple_of(p) {
                    if !primes.contains(&p) {
                        primes.push(p);
                    }
                    m /= p;
                }
                p += 1;
            }
            let mut classes = Vec::new();
            for p in primes {
                let class: Vec<usize> = (1..n)
                    .filter(|&a| {
                        let mut o = orders[a];
                        while o.is_multiple_of(p) {
                            o /= p;
                        }
                        o == 1
                    })
                    .collect();
                if !class.is_empty() {
                    classes.push(class);
                }
            }
            Ok(classes)
        }
    }
}

pub fn invariant_partition(
    kind: PartitionKind,
    brace: &FiniteBrace,
) -> Result<InvariantPartition, SolutionError> {
    let classes_global = global_classes(kind, brace)?;
    let mut ambient: Vec<usize> = classes_global.iter().flatten().copied().collect();
    ambient.sort_unstable();
    ambient.dedup();
    let full = yb_map_from_brace(brace);
    let solution = restrict_solution(&full, &ambient)?;
    let mut local_index = vec![usize::MAX; brace.order()];
    for (i, &g) in ambient.iter().enumerate() {
        local_index[g] = i;
    }
    let local_classes: Vec<Vec<usize>> = classes_global
        .iter()
        .map(|class| class.iter().map(|&g| local_index[g]).collect())
        .collect();
    let classes = PartitionedSet::new(ambient.len(), local_classes)?;

    // the invariance r(X_i, X_j) ⊆ (X_j, X_i), checked pairwise
    let class_of = classes.class_of();
    for (i, ci) in classes.classes().iter().enumerate() {
        for (j, cj) in classes.classes().iter().enumerate() {
            for &x in ci {
                for &y in cj {
                    let (u, v) = solution.r(x, y);
                    if class_of[u] != Some(j) || class_of[v] != Some(i) {
                        return Err(SolutionError::InvarianceViolation {
                            class_x: i,
                            class_y: j,
                            x,
                            y,
                        });
                    }
                }
            }
        }
    }
    Ok(InvariantPartition {
        ambient,
        solution,
        classes,
    })
}
