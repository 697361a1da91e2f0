//! Shared oracles for the integration suites: independent brute-force
//! enumeration of pair bijections and a braid check that works directly on
//! permutation tables, without going through the library's solution type.

#![allow(dead_code)]

use ybe_core::algebra::{
    brace_from_nilpotent_ring, even_subring, make_truncated_polynomial_ring, FiniteBrace,
    FiniteRing,
};
use ybe_core::solution::SetSolution;

/// Calls `visit` for every permutation of `0..m` (Heap's algorithm).
pub fn for_each_permutation(m: usize, mut visit: impl FnMut(&[usize])) {
    let mut items: Vec<usize> = (0..m).collect();
    let mut stack = vec![0usize; m];
    visit(&items);
    let mut i = 1;
    while i < m {
        if stack[i] < i {
            if i % 2 == 0 {
                items.swap(0, i);
            } else {
                items.swap(stack[i], i);
            }
            visit(&items);
            stack[i] += 1;
            i = 1;
        } else {
            stack[i] = 0;
            i += 1;
        }
    }
}

/// All involutions of the symmetric group on `0..m`, built by pairing points
/// recursively.
pub fn involutions(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = (0..m).collect();
    fn recurse(current: &mut Vec<usize>, taken: &mut Vec<bool>, from: usize, out: &mut Vec<Vec<usize>>) {
        let m = current.len();
        let Some(first) = (from..m).find(|&i| !taken[i]) else {
            out.push(current.clone());
            return;
        };
        // fixed point
        taken[first] = true;
        current[first] = first;
        recurse(current, taken, first + 1, out);
        taken[first] = false;
        // or a 2-cycle with any later free point
        for partner in first + 1..m {
            if taken[partner] {
                continue;
            }
            taken[first] = true;
            taken[partner] = true;
            current[first] = partner;
            current[partner] = first;
            recurse(current, taken, first + 1, out);
            taken[first] = false;
            taken[partner] = false;
        }
    }
    recurse(&mut current, &mut vec![false; m], 0, &mut out);
    out
}

/// Braid relation checked on a raw pair-permutation table: `table[x*n+y]` is
/// the pair index of `r(x,y)`.
pub fn braid_oracle(n: usize, table: &[usize]) -> bool {
    let split = |p: usize| (p / n, p % n);
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (a, b) = split(table[x * n + y]);
                let (c, d) = split(table[b * n + z]);
                let (e, f) = split(table[a * n + c]);
                let lhs = (e, f, d);

                let (a2, b2) = split(table[y * n + z]);
                let (c2, d2) = split(table[x * n + a2]);
                let (e2, f2) = split(table[d2 * n + b2]);
                let rhs = (c2, e2, f2);
                if lhs != rhs {
                    return false;
                }
            }
        }
    }
    true
}

pub fn is_involution_table(table: &[usize]) -> bool {
    table.iter().all(|&p| table[table[p]] == p)
}

/// Right and left non-degeneracy on a raw pair table.
pub fn nondegenerate_oracle(n: usize, table: &[usize]) -> bool {
    for x in 0..n {
        let mut seen_sigma = vec![false; n];
        let mut seen_tau = vec![false; n];
        for y in 0..n {
            let sigma = table[x * n + y] / n;
            if std::mem::replace(&mut seen_sigma[sigma], true) {
                return false;
            }
            let tau = table[y * n + x] % n;
            if std::mem::replace(&mut seen_tau[tau], true) {
                return false;
            }
        }
    }
    true
}

pub fn table_to_solution(n: usize, table: &[usize]) -> SetSolution {
    SetSolution::new(n, table.iter().map(|&p| (p / n, p % n)).collect()).expect("valid table")
}

/// Every involutive non-degenerate braid solution on `n` labelled elements,
/// by brute force over all `(n²)!` pair bijections.
pub fn enumerate_involutive_solutions(n: usize) -> Vec<Vec<usize>> {
    let mut found = Vec::new();
    for_each_permutation(n * n, |table| {
        if is_involution_table(table) && nondegenerate_oracle(n, table) && braid_oracle(n, table) {
            found.push(table.to_vec());
        }
    });
    found.sort();
    found
}

/// The nilpotent rings of order ≤ 8 the modules construct: truncated
/// polynomial rings over F2 and F3 plus the even subrings of Z/2^k.
pub fn ring_corpus() -> Vec<(String, FiniteRing)> {
    vec![
        ("xF2[x]/(x^2)".into(), make_truncated_polynomial_ring(2, 2).unwrap()),
        ("xF2[x]/(x^3)".into(), make_truncated_polynomial_ring(2, 3).unwrap()),
        ("xF2[x]/(x^4)".into(), make_truncated_polynomial_ring(2, 4).unwrap()),
        ("xF3[x]/(x^2)".into(), make_truncated_polynomial_ring(3, 2).unwrap()),
        ("2Z/4Z".into(), even_subring(2).unwrap()),
        ("2Z/8Z".into(), even_subring(3).unwrap()),
        ("2Z/16Z".into(), even_subring(4).unwrap()),
    ]
}

pub fn brace_corpus() -> Vec<(String, FiniteBrace)> {
    ring_corpus()
        .into_iter()
        .map(|(name, ring)| (name, brace_from_nilpotent_ring(&ring).unwrap()))
        .collect()
}
