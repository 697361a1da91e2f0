use super::brace::FiniteBrace;
use super::table::OpTable;
use super::AlgebraError;

/// The socle `{a : a·b = 0 for all b}` — the elements acting trivially on the
/// whole brace. Always an ideal.
pub fn socle(brace: &FiniteBrace) -> Vec<usize> {
    let n = brace.order();
    (0..n)
        .filter(|&a| (0..n).all(|b| brace.star(a, b) == 0))
        .collect()
}

/// Whether `subset` is an ideal: closed under addition and additive inverse,
/// and absorbing under the star product on both sides (`z·x` and `x·z` stay in
/// the subset for every `z` in the brace).
pub fn is_ideal(brace: &FiniteBrace, subset: &[usize]) -> bool {
    let n = brace.order();
    let mut member = vec![false; n];
    for &x in subset {
        if x >= n {
            return false;
        }
        member[x] = true;
    }
    if !member[0] {
        return false;
    }
    for &x in subset {
        if !member[brace.neg(x)] {
            return false;
        }
        for &y in subset {
            if !member[brace.add(x, y)] {
                return false;
            }
        }
        for z in 0..n {
            if !member[brace.star(z, x)] || !member[brace.star(x, z)] {
                return false;
            }
        }
    }
    true
}

/// Quotient of a brace by an ideal. Returns the factor brace on additive
/// cosets together with the map sending each element to its coset index.
/// Coset indices follow the order of the smallest representatives.
pub fn quotient_brace(
    brace: &FiniteBrace,
    ideal: &[usize],
) -> Result<(FiniteBrace, Vec<usize>), AlgebraError> {
    if !is_ideal(brace, ideal) {
        return Err(AlgebraError::NotAnIdeal);
    }
    let n = brace.order();
    let mut class_map = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in 0..n {
        if class_map[a] != usize::MAX {
            continue;
        }
        let idx = reps.len();
        reps.push(a);
        for &i in ideal {
            class_map[brace.add(a, i)] = idx;
        }
        if class_map[a] != idx {
            // coset of a misses a itself: the subset was not additively closed
            return Err(AlgebraError::NotAnIdeal);
        }
    }
    let m = reps.len();
    let add = OpTable::from_fn(m, |a, b| class_map[brace.add(reps[a], reps[b])])?;
    let circ = OpTable::from_fn(m, |a, b| class_map[brace.circ(reps[a], reps[b])])?;
    // well-definedness: every pair of representatives must agree with the
    // coset tables; a failure here signals an is_ideal bug
    for a in 0..n {
        for b in 0..n {
            if class_map[brace.add(a, b)] != add.get(class_map[a], class_map[b])
                || class_map[brace.circ(a, b)] != circ.get(class_map[a], class_map[b])
            {
                return Err(AlgebraError::QuotientIllDefined(a, b));
            }
        }
    }
    let quotient = FiniteBrace::new(add, circ)?;
    Ok((quotient, class_map))
}
