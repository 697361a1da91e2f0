//! Spec-level invariants that cut across modules, checked exhaustively on the
//! constructible corpus and with property tests where randomness helps.

mod common;

use common::*;
use num_complex::Complex64 as C;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ybe_core::algebra::{
    is_ideal, nilpotency_chains, quotient_brace, socle, verify_brace, FiniteBrace,
};
use ybe_core::rmatrix::{
    kron, kron_pair_criterion, monomial_from_bvst, qybe_check, CMatrix,
};
use ybe_core::solution::{
    i_retraction, multipermutation_level, one_generator_solution, orbits, restrict_solution,
    retraction, solution_properties, verify_set_ybe, yb_map_from_brace,
};
use ybe_core::weights::{is_trivial, verify_cocycle, TrivialityWitness, WeightSystem};
use ybe_core::DEFAULT_TOL;

#[test]
fn star_distributes_over_addition_exhaustively() {
    let mut braces = brace_corpus();
    braces.push(("trivial(6)".into(), FiniteBrace::trivial(6).unwrap()));
    for (name, b) in &braces {
        let n = b.order();
        for a in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let lhs = b.star(a, b.add(x, y));
                    let rhs = b.add(b.star(a, x), b.star(a, y));
                    assert_eq!(lhs, rhs, "{name} at ({a},{x},{y})");
                }
            }
        }
    }
}

#[test]
fn socle_is_an_ideal_and_quotients_shrink() {
    let mut braces = brace_corpus();
    braces.push(("trivial(5)".into(), FiniteBrace::trivial(5).unwrap()));
    for (name, b) in &braces {
        let soc = socle(b);
        assert!(is_ideal(b, &soc), "{name}");
        let (q, class_map) = quotient_brace(b, &soc).unwrap();
        if soc.len() > 1 {
            assert!(q.order() < b.order(), "{name}");
        } else {
            assert_eq!(q.order(), b.order(), "{name}");
        }
        assert_eq!(class_map.len(), b.order());
        assert!(verify_brace(q.add_table(), q.circ_table()).unwrap().is_brace);
    }
}

#[test]
fn brace_solutions_are_involutive_nondegenerate_braid() {
    for (name, b) in brace_corpus() {
        let s = yb_map_from_brace(&b);
        assert!(verify_set_ybe(&s).unwrap(), "{name}");
        let props = solution_properties(&s);
        assert!(props.is_involutive_nondegenerate_solution(), "{name}");
    }
}

#[test]
fn involutive_braid_solutions_have_matching_nondegeneracy_sides() {
    // left non-degeneracy is equivalent to right non-degeneracy for finite
    // involutive braid solutions; checked over every involutive braid
    // bijection with n ≤ 3
    for n in 1..=3usize {
        for_each_permutation(n * n, |table| {
            if !is_involution_table(table) || !braid_oracle(n, table) {
                return;
            }
            let s = table_to_solution(n, table);
            let props = solution_properties(&s);
            assert_eq!(
                props.left_nondeg, props.right_nondeg,
                "n = {n}, table {table:?}"
            );
        });
    }
}

#[test]
fn square_free_like_solutions_decompose() {
    // any solution of finite multipermutation level and size > 1 in which
    // every x has some y with r(x,y) = (y,x) must be decomposable
    let mut checked = 0;
    for n in 2..=3usize {
        for table in enumerate_involutive_solutions(n) {
            let s = table_to_solution(n, &table);
            if multipermutation_level(&s).unwrap().is_none() {
                continue;
            }
            let flips_somewhere = (0..n).all(|x| (0..n).any(|y| s.r(x, y) == (y, x)));
            if !flips_somewhere {
                continue;
            }
            let (_, indecomposable) = orbits(&s);
            assert!(!indecomposable, "n = {n}, table {table:?}");
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn multipermutation_level_decreases_along_retractions_and_restrictions() {
    for (name, b) in brace_corpus() {
        let full = yb_map_from_brace(&b);
        let full_level = multipermutation_level(&full).unwrap().unwrap();
        let all: Vec<usize> = (0..b.order()).collect();

        // i-retraction along the socle and every left-chain term
        let chains = nilpotency_chains(&b);
        let mut ideals = vec![socle(&b)];
        ideals.extend(chains.left.chain.iter().cloned());
        for ideal in ideals {
            if !is_ideal(&b, &ideal) {
                continue;
            }
            let ret = i_retraction(&b, &ideal, &all, &full).unwrap();
            let level = multipermutation_level(&ret.solution).unwrap().unwrap();
            assert!(level <= full_level, "{name}");
        }

        // restriction to each one-generator subset
        for x in 0..b.order() {
            let one = one_generator_solution(&b, x).unwrap();
            let sub = restrict_solution(&full, &one.x_set).unwrap();
            let level = multipermutation_level(&sub).unwrap().unwrap();
            assert!(level <= full_level, "{name}, generator {x}");
        }

        // plain retraction
        let ret = retraction(&full).unwrap();
        let level = multipermutation_level(&ret.solution).unwrap().unwrap();
        assert!(level < full_level.max(1), "{name}");
    }
}

#[test]
fn trivial_witness_realises_the_diagonal_similarity() {
    // d trivial with witness (alpha, c) makes the weighted matrix equal to
    // c · (P⁻¹⊗P⁻¹) · M · (P⊗P) with P = diag(alpha)
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for (_, brace) in brace_corpus().into_iter().take(3) {
        let s = yb_map_from_brace(&brace);
        let n = s.n();
        let alpha: Vec<C> = (0..n)
            .map(|_| C::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU)))
            .collect();
        let c = C::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(0.0..std::f64::consts::TAU));
        let d = WeightSystem::from_fn(n, |x, y| {
            c * alpha[x] * alpha[y] / (alpha[s.sigma(x, y)] * alpha[s.tau(y, x)])
        })
        .unwrap();
        let witness = is_trivial(&s, &d, DEFAULT_TOL).unwrap().unwrap();

        let ones = WeightSystem::constant(n, C::new(1.0, 0.0)).unwrap();
        let m = monomial_from_bvst(&s, &ones).unwrap();
        let weighted = monomial_from_bvst(&s, &d).unwrap();
        let p = CMatrix::from_fn(n, n, |r, col| {
            if r == col {
                witness.alpha[r]
            } else {
                C::new(0.0, 0.0)
            }
        });
        let p_inv = p.inverse(DEFAULT_TOL).unwrap();
        let gauge = kron(&p_inv, &p_inv).mul(&m).mul(&kron(&p, &p)).scale(witness.c);
        assert!(weighted.approx_eq(&gauge, 1e-9));
    }
}

#[test]
fn lift_preserves_cocycle_and_nontriviality_through_retractions() {
    // lifting weights through the I-retraction of a one-generator solution
    // preserves the cocycle; lifted difference weights stay non-trivial
    use ybe_core::algebra::{brace_from_nilpotent_ring, make_truncated_polynomial_ring};
    use ybe_core::weights::lift_weights;

    let b = brace_from_nilpotent_ring(&make_truncated_polynomial_ring(2, 4).unwrap()).unwrap();
    let one = one_generator_solution(&b, 1).unwrap();
    let chains = nilpotency_chains(&b);
    let a3 = chains.left.chain[2].clone();
    let ret = i_retraction(&b, &a3, &one.x_set, &one.solution).unwrap();
    let m = ret.solution.n();
    assert_eq!(m, 2);

    let mut g = vec![C::new(1.0, 0.0); m];
    g[1] = C::new(2.0, 0.0);
    let dq = WeightSystem::from_fn(m, |i, j| g[(i + m - j) % m]).unwrap();
    assert!(verify_cocycle(&ret.solution, &dq, DEFAULT_TOL).unwrap());
    assert!(is_trivial(&ret.solution, &dq, DEFAULT_TOL).unwrap().is_none());

    let lifted = lift_weights(&ret.class_map, &dq).unwrap();
    assert!(verify_cocycle(&one.solution, &lifted, DEFAULT_TOL).unwrap());
    assert!(is_trivial(&one.solution, &lifted, DEFAULT_TOL)
        .unwrap()
        .is_none());
}

#[test]
fn four_element_weights_lift_through_the_degree_five_retraction() {
    // the one-generator solution inside xF2[x]/(x^5), retracted along the
    // fourth chain term, is isomorphic to the four-element pair solution;
    // its g-weights lift back to a weight system on the eight-point set
    use ybe_core::algebra::{brace_from_nilpotent_ring, make_truncated_polynomial_ring};
    use ybe_core::solution::{builtin_solution, BuiltinSolution};
    use ybe_core::weights::{builtin_weights, lift_weights, BuiltinWeights};

    let b = brace_from_nilpotent_ring(&make_truncated_polynomial_ring(2, 5).unwrap()).unwrap();
    let one = one_generator_solution(&b, 1).unwrap();
    assert_eq!(one.solution.n(), 8);
    let chains = nilpotency_chains(&b);
    let a4 = chains.left.chain[3].clone();
    assert_eq!(a4.len(), 2);
    let ret = i_retraction(&b, &a4, &one.x_set, &one.solution).unwrap();
    let quotient = &ret.solution;
    assert_eq!(quotient.n(), 4);

    // find the relabelling onto the builtin four-element solution
    let hura = builtin_solution(BuiltinSolution::Hura5).unwrap();
    let mut iso: Option<Vec<usize>> = None;
    let perms4: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        common::for_each_permutation(4, |p| out.push(p.to_vec()));
        out
    };
    'outer: for phi in perms4 {
        for u in 0..4 {
            for v in 0..4 {
                let (a, c) = quotient.r(u, v);
                if hura.r(phi[u], phi[v]) != (phi[a], phi[c]) {
                    continue 'outer;
                }
            }
        }
        iso = Some(phi);
        break;
    }
    let phi = iso.expect("the retraction must be isomorphic to the builtin solution");

    let gh = builtin_weights(&BuiltinWeights::Hura5G {
        g: [
            [C::new(1.0, 0.5), C::new(2.0, 0.0)],
            [C::new(2.0, 0.0), C::new(0.5, -1.0)],
        ],
    })
    .unwrap();
    let dq = WeightSystem::from_fn(4, |u, v| gh.get(phi[u], phi[v])).unwrap();
    assert!(verify_cocycle(quotient, &dq, DEFAULT_TOL).unwrap());

    let lifted = lift_weights(&ret.class_map, &dq).unwrap();
    assert!(verify_cocycle(&one.solution, &lifted, DEFAULT_TOL).unwrap());
}

#[test]
fn kron_criterion_matches_direct_check_on_random_pairs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for trial in 0..100 {
        let n = if trial % 2 == 0 { 2 } else { 3 };
        let random = |rng: &mut ChaCha8Rng| {
            CMatrix::from_fn(n, n, |_, _| {
                C::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            })
        };
        // mix in structured matrices so both outcomes occur
        let (c, d) = match trial % 5 {
            0 => (CMatrix::identity(n), random(&mut rng)),
            1 => {
                let c = random(&mut rng);
                (c.clone(), c)
            }
            _ => (random(&mut rng), random(&mut rng)),
        };
        let by_criterion = kron_pair_criterion(&c, &d, 1e-9).unwrap();
        let direct = qybe_check(&kron(&c, &d), n, 1e-9).unwrap().ok;
        assert_eq!(by_criterion, direct, "trial {trial}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn kron_mixed_product_identity(values in prop::collection::vec(-2.0f64..2.0, 32)) {
        let m = |offset: usize| {
            CMatrix::from_fn(2, 2, |r, c| {
                C::new(values[offset + 2 * r + c], values[offset + 8 + 2 * r + c])
            })
        };
        let (a, b, c, d) = (m(0), m(4), m(16), m(20));
        let lhs = kron(&a, &b).mul(&kron(&c, &d));
        let rhs = kron(&a.mul(&c), &b.mul(&d));
        prop_assert!(lhs.approx_eq(&rhs, 1e-10));
    }

    #[test]
    fn witness_gauge_is_scale_invariant(scale_re in 0.25f64..2.0, scale_im in -1.0f64..1.0) {
        let s = ybe_core::solution::builtin_solution(
            ybe_core::solution::BuiltinSolution::Cyclic { n: 4 },
        ).unwrap();
        let alpha: Vec<C> = (0..4).map(|k| C::from_polar(1.0 + k as f64 * 0.3, 0.4 * k as f64)).collect();
        let c = C::new(1.25, -0.5);
        let d = WeightSystem::from_fn(4, |x, y| {
            c * alpha[x] * alpha[y] / (alpha[s.sigma(x, y)] * alpha[s.tau(y, x)])
        }).unwrap();
        let witness = is_trivial(&s, &d, DEFAULT_TOL).unwrap().unwrap();
        let scale = C::new(scale_re, scale_im);
        prop_assume!(scale.norm() > 0.1);
        let scaled = TrivialityWitness {
            alpha: witness.alpha.iter().map(|a| a * scale).collect(),
            c: witness.c,
        };
        prop_assert!(scaled.residual(&s, &d) < 1e-8);
    }

    #[test]
    fn canonical_json_round_trip_is_stable(res in prop::collection::vec(0.1f64..3.0, 9),
                                           ims in prop::collection::vec(-1.5f64..1.5, 9)) {
        use ybe_core::io::{from_json, to_canonical_json, weights_to_payload, ObjectFile};
        let w = WeightSystem::new(
            3,
            res.iter().zip(&ims).map(|(&re, &im)| C::new(re, im)).collect(),
        ).unwrap();
        let file = ObjectFile::new(weights_to_payload(&w));
        let text = to_canonical_json(&file);
        let reread = from_json(&text).unwrap();
        prop_assert_eq!(to_canonical_json(&reread), text);
    }
}
