use std::collections::BTreeSet;

use super::types::SetSolution;
use super::SolutionError;

/// Default cap on the permutation-group closure; the groups in scope are tiny
/// but the cap guards pathological inputs.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

/// The group generated by the maps `σ_x`, listed as permutation tables, and
/// whether its lower central series reaches the trivial subgroup.
#[derive(Debug, Clone)]
pub struct PermutationGroup {
    pub elements: Vec<Vec<usize>>,
    pub is_nilpotent: bool,
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v] = i;
    }
    out
}

fn closure(
    seed: &BTreeSet<Vec<usize>>,
    generators: &[Vec<usize>],
    cap: usize,
) -> Result<BTreeSet<Vec<usize>>, SolutionError> {
    let mut set = seed.clone();
    let mut frontier: Vec<Vec<usize>> = set.iter().cloned().collect();
    while let Some(g) = frontier.pop() {
        for gen in generators {
            let h = compose(&g, gen);
            if set.insert(h.clone()) {
                if set.len() > cap {
                    return Err(SolutionError::GroupTooLarge { cap });
                }
                frontier.push(h);
            }
        }
    }
    Ok(set)
}

/// Breadth-first closure of `{σ_x}` under composition, then nilpotency via
/// the lower central series `γ_{i+1} = [G, γ_i]` computed on full element
/// sets.
pub fn permutation_group(
    s: &SetSolution,
    cap: usize,
) -> Result<PermutationGroup, SolutionError> {
    let n = s.n();
    let mut generators: Vec<Vec<usize>> = Vec::new();
    for x in 0..n {
        let row = s.sigma_row(x);
        let mut seen = vec![false; n];
        for &v in &row {
            if std::mem::replace(&mut seen[v], true) {
                return Err(SolutionError::NotNonDegenerate);
            }
        }
        if !generators.contains(&row) {
            generators.push(row);
        }
    }
    let identity: Vec<usize> = (0..n).collect();
    let mut seed = BTreeSet::new();
    seed.insert(identity.clone());
    for g in &generators {
        seed.insert(g.clone());
    }
    let group = closure(&seed, &generators, cap)?;
    let elements: Vec<Vec<usize>> = group.iter().cloned().collect();

    let mut current = group.clone();
    let trivial: BTreeSet<Vec<usize>> = [identity.clone()].into_iter().collect();
    let is_nilpotent = loop {
        if current == trivial {
            break true;
        }
        let mut commutators = BTreeSet::new();
        commutators.insert(identity.clone());
        for g in &group {
            let g_inv = invert(g);
            for h in &current {
                let h_inv = invert(h);
                let comm = compose(&compose(g, h), &compose(&g_inv, &h_inv));
                commutators.insert(comm);
            }
        }
        let next = closure(
            &commutators,
            &commutators.iter().cloned().collect::<Vec<_>>(),
            cap,
        )?;
        if next == current {
            break false;
        }
        current = next;
    };

    Ok(PermutationGroup {
        elements,
        is_nilpotent,
    })
}
