use super::brace::FiniteBrace;
use super::AlgebraError;

/// A descending chain of star-product subgroups. `chain[k]` holds the term
/// with exponent `k+1`, each one an additive-subgroup closure, and
/// `vanish_index` is the smallest exponent whose term is `{0}` (so the trivial
/// brace has all chains vanishing at exponent 2).
#[derive(Debug, Clone)]
pub struct ChainReport {
    pub chain: Vec<Vec<usize>>,
    pub vanishes: bool,
    pub vanish_index: Option<usize>,
}

impl ChainReport {
    fn from_chain(chain: Vec<Vec<usize>>) -> Self {
        let vanishes = chain.last().map(|t| t == &[0]).unwrap_or(false);
        let vanish_index = if vanishes { Some(chain.len()) } else { None };
        ChainReport {
            chain,
            vanishes,
            vanish_index,
        }
    }
}

/// The three radical chains of a brace.
#[derive(Debug, Clone)]
pub struct NilpotencyChains {
    pub left: ChainReport,
    pub right: ChainReport,
    pub strong: ChainReport,
}

/// Additive closure of all star products `c·d` with `c ∈ cs`, `d ∈ ds`.
fn star_span(brace: &FiniteBrace, cs: &[usize], ds: &[usize]) -> Vec<usize> {
    let mut products = Vec::with_capacity(cs.len() * ds.len());
    for &c in cs {
        for &d in ds {
            products.push(brace.star(c, d));
        }
    }
    brace.additive_closure(&products)
}

/// Computes the left chain `A^{i+1} = A·A^i`, the right chain
/// `A^{(i+1)} = A^{(i)}·A`, and the strong chain
/// `A^{[n+1]} = Σ_{i=1..n} A^{[i]}·A^{[n+1−i]}`. Each chain is followed until
/// it reaches `{0}` or stabilises.
pub fn nilpotency_chains(brace: &FiniteBrace) -> NilpotencyChains {
    let all: Vec<usize> = (0..brace.order()).collect();

    let mut left = vec![all.clone()];
    loop {
        let next = star_span(brace, &all, left.last().unwrap());
        if &next == left.last().unwrap() {
            break;
        }
        let done = next == [0];
        left.push(next);
        if done {
            break;
        }
    }

    let mut right = vec![all.clone()];
    loop {
        let next = star_span(brace, right.last().unwrap(), &all);
        if &next == right.last().unwrap() {
            break;
        }
        let done = next == [0];
        right.push(next);
        if done {
            break;
        }
    }

    let mut strong = vec![all.clone()];
    loop {
        let n = strong.len();
        let mut union = Vec::new();
        for i in 0..n {
            union.extend(star_span(brace, &strong[i], &strong[n - 1 - i]));
        }
        let next = brace.additive_closure(&union);
        if &next == strong.last().unwrap() {
            break;
        }
        let done = next == [0];
        strong.push(next);
        if done {
            break;
        }
    }

    NilpotencyChains {
        left: ChainReport::from_chain(left),
        right: ChainReport::from_chain(right),
        strong: ChainReport::from_chain(strong),
    }
}

/// Sum formula for right nilpotent braces: with `d_0 = a`, `d_0' = b`,
/// `d_{i+1} = d_i + d_i'` and `d_{i+1}' = d_i'·d_i`, checks
///
/// `(a+b)·c = a·c + b·c + Σ_{i=0}^{2s} (−1)^{i+1} ((d_i'·d_i)·c − d_i'·(d_i·c))`
///
/// where `s` is the right-chain vanishing exponent.
pub fn check_sum_formula(
    brace: &FiniteBrace,
    a: usize,
    b: usize,
    c: usize,
) -> Result<bool, AlgebraError> {
    let n = brace.order();
    for e in [a, b, c] {
        if e >= n {
            return Err(AlgebraError::ElementRange { element: e, order: n });
        }
    }
    let chains = nilpotency_chains(brace);
    let s = chains
        .right
        .vanish_index
        .ok_or(AlgebraError::NotRightNilpotent)?;

    let lhs = brace.star(brace.add(a, b), c);

    let mut rhs = brace.add(brace.star(a, c), brace.star(b, c));
    let (mut d, mut dp) = (a, b);
    for i in 0..=2 * s {
        let t1 = brace.star(brace.star(dp, d), c);
        let t2 = brace.star(dp, brace.star(d, c));
        let term = brace.sub(t1, t2);
        // (−1)^{i+1}: subtract for even i, add for odd i
        rhs = if i % 2 == 0 {
            brace.sub(rhs, term)
        } else {
            brace.add(rhs, term)
        };
        let (nd, ndp) = (brace.add(d, dp), brace.star(dp, d));
        d = nd;
        dp = ndp;
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::super::ring::{
        brace_from_nilpotent_ring, even_subring, make_truncated_polynomial_ring,
        strictly_upper_triangular_ring,
    };
    use super::*;

    #[test]
    fn trivial_brace_chains_vanish_at_two() {
        let b = FiniteBrace::trivial(5).unwrap();
        let chains = nilpotency_chains(&b);
        for report in [&chains.left, &chains.right, &chains.strong] {
            assert!(report.vanishes);
            assert_eq!(report.vanish_index, Some(2));
            assert_eq!(report.chain.len(), 2);
            assert_eq!(report.chain[1], vec![0]);
        }
    }

    #[test]
    fn poly_brace_left_chain() {
        let b = brace_from_nilpotent_ring(&make_truncated_polynomial_ring(2, 3).unwrap()).unwrap();
        let chains = nilpotency_chains(&b);
        assert_eq!(chains.left.chain, vec![vec![0, 1, 2, 3], vec![0, 2], vec![0]]);
        assert_eq!(chains.left.vanish_index, Some(3));
    }

    #[test]
    fn ring_braces_have_vanishing_chains() {
        let rings = [
            make_truncated_polynomial_ring(2, 4).unwrap(),
            even_subring(4).unwrap(),
            strictly_upper_triangular_ring(2).unwrap(),
        ];
        for ring in &rings {
            let class = ring.power_chain().len();
            let b = brace_from_nilpotent_ring(ring).unwrap();
            let chains = nilpotency_chains(&b);
            assert!(chains.left.vanishes && chains.right.vanishes && chains.strong.vanishes);
            assert!(chains.left.vanish_index.unwrap() <= class);
        }
    }

    #[test]
    fn sum_formula_exhaustive_on_small_braces() {
        let braces = [
            FiniteBrace::trivial(4).unwrap(),
            brace_from_nilpotent_ring(&make_truncated_polynomial_ring(2, 3).unwrap()).unwrap(),
            brace_from_nilpotent_ring(&even_subring(3).unwrap()).unwrap(),
        ];
        for b in &braces {
            for a in 0..b.order() {
                for bb in 0..b.order() {
                    for c in 0..b.order() {
                        assert!(check_sum_formula(b, a, bb, c).unwrap());
                    }
                }
            }
        }
    }
}
