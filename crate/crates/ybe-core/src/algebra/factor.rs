use super::brace::FiniteBrace;
use super::table::OpTable;
use super::AlgebraError;

fn is_circle_subgroup(brace: &FiniteBrace, subset: &[usize]) -> bool {
    let n = brace.order();
    let mut member = vec![false; n];
    for &x in subset {
        if x >= n {
            return false;
        }
        member[x] = true;
    }
    member[0]
        && subset
            .iter()
            .all(|&a| subset.iter().all(|&b| member[brace.circ(a, b)]))
}

/// Builds a brace from an exact factorisation of the circle group of a brace
/// coming from a nilpotent ring. If every element factors uniquely as
/// `a = b∘c` with `b ∈ bsub`, `c ∈ csub`, the new circle operation is
/// `a ⊙ a' = b ∘ a' ∘ c`, sharing the original addition.
pub fn brace_from_exact_factorization(
    brace: &FiniteBrace,
    bsub: &[usize],
    csub: &[usize],
) -> Result<FiniteBrace, AlgebraError> {
    let n = brace.order();
    // the construction relies on the ring structure behind the brace, which
    // is exactly two-sidedness of the star product
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let lhs = brace.star(brace.add(a, b), c);
                let rhs = brace.add(brace.star(a, c), brace.star(b, c));
                if lhs != rhs {
                    return Err(AlgebraError::NotRightDistributive);
                }
            }
        }
    }
    if !is_circle_subgroup(brace, bsub) || !is_circle_subgroup(brace, csub) {
        return Err(AlgebraError::NotCircleSubgroup);
    }
    let mut factor: Vec<Option<(usize, usize)>> = vec![None; n];
    for &b in bsub {
        for &c in csub {
            let a = brace.circ(b, c);
            if factor[a].is_some() {
                return Err(AlgebraError::InexactFactorization { element: a, count: 2 });
            }
            factor[a] = Some((b, c));
        }
    }
    if let Some(a) = (0..n).find(|&a| factor[a].is_none()) {
        return Err(AlgebraError::InexactFactorization { element: a, count: 0 });
    }
    let odot = OpTable::from_fn(n, |a, a2| {
        let (b, c) = factor[a].unwrap();
        brace.circ(brace.circ(b, a2), c)
    })?;
    FiniteBrace::new(brace.add_table().clone(), odot)
}
