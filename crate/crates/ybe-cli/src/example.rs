use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use num_complex::Complex64;

use ybe_core::io::{self, ObjectFile};
use ybe_core::rmatrix::{
    build_example, conjugate_similarity, is_unitary, kron, monomial_from_bvst, pinv,
    printed_idempotent_pinv, qybe_check, CMatrix, ExampleKind,
};
use ybe_core::solution::{builtin_solution, BuiltinSolution, SetSolution};
use ybe_core::weights::{builtin_weights, orbit_weights, BuiltinWeights};

use crate::util::write_object;

#[derive(Args)]
pub struct ExampleArgs {
    /// Only this example (A1, A2, Ad, A3, A1-cyclic4, A2-hura5, A4, X, C, Cpinv, vandermonde3).
    #[arg(long)]
    name: Option<String>,
    /// Write each matrix into this directory as <name>.json.
    #[arg(long)]
    dir: Option<PathBuf>,
}

struct Rebuilt {
    name: &'static str,
    matrix: CMatrix,
    rational: Option<Vec<String>>,
    note: String,
    ok: bool,
}

fn check(name: &'static str, matrix: CMatrix, rational: Option<Vec<String>>, n: usize, expect_unitary: bool, tol: f64) -> Rebuilt {
    let qybe = qybe_check(&matrix, n, tol).expect("square by construction");
    let unitary = is_unitary(&matrix, 1e-9);
    let ok = qybe.ok && (!expect_unitary || unitary);
    let note = format!(
        "qybe residual {:.2e}{}",
        qybe.residual,
        if expect_unitary {
            if unitary {
                ", unitary"
            } else {
                ", NOT UNITARY"
            }
        } else {
            ""
        }
    );
    Rebuilt {
        name,
        matrix,
        rational,
        note,
        ok,
    }
}

/// The printed two-orbit example: the cyclic solution on {0,1} joined with a
/// fixed point that flips across, carrying class-pair weights.
fn two_orbit_example(tol: f64) -> Result<Rebuilt> {
    let s = SetSolution::new(
        3,
        vec![
            (1, 1),
            (0, 1),
            (2, 0),
            (1, 0),
            (0, 0),
            (2, 1),
            (0, 2),
            (1, 2),
            (2, 2),
        ],
    )
    .map_err(|e| anyhow::anyhow!(e.to_string()))?;
    let (classes, _) = ybe_core::solution::orbits(&s);
    let alpha: Vec<Complex64> = [1.0, 2.0, 3.0, 4.0]
        .iter()
        .map(|&v| Complex64::new(v, 0.0))
        .collect();
    let w = orbit_weights(&s, &classes, &alpha)?;
    let m = monomial_from_bvst(&s, &w)?;
    Ok(check("A4", m, None, 3, false, tol))
}

pub fn run(args: ExampleArgs, tol: f64) -> Result<i32> {
    let mut all: Vec<Rebuilt> = Vec::new();

    let a1 = build_example(&ExampleKind::HouseholderA1 { n: 3 })?;
    all.push(check("A1", a1.matrix, a1.rational, 3, true, tol));

    let a2 = build_example(&ExampleKind::alpha_b_beta_e_default(3))?;
    all.push(check("A2", a2.matrix, a2.rational, 3, true, tol));

    let d: Vec<Complex64> = (1..=9).rev().map(|k| Complex64::new(k as f64, 0.0)).collect();
    let ad = build_example(&ExampleKind::AOfD { n: 3, d })?;
    all.push(check("Ad", ad.matrix, ad.rational, 3, false, tol));

    // cyclic monomial layouts with distinct weights standing in for the letters
    let cyc3 = builtin_solution(BuiltinSolution::Cyclic { n: 3 })?;
    let g3 = builtin_weights(&BuiltinWeights::CyclicG {
        g: vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
        ],
    })?;
    all.push(check("A3", monomial_from_bvst(&cyc3, &g3)?, None, 3, false, tol));

    let cyc4 = builtin_solution(BuiltinSolution::Cyclic { n: 4 })?;
    let g4 = builtin_weights(&BuiltinWeights::CyclicG {
        g: vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(2.0, 0.0),
            Complex64::new(3.0, 0.0),
            Complex64::new(4.0, 0.0),
        ],
    })?;
    all.push(check(
        "A1-cyclic4",
        monomial_from_bvst(&cyc4, &g4)?,
        None,
        4,
        false,
        tol,
    ));

    let hura = builtin_solution(BuiltinSolution::Hura5)?;
    let gh = builtin_weights(&BuiltinWeights::Hura5G {
        g: [
            [Complex64::new(1.0, 0.0), Complex64::new(2.0, 0.0)],
            [Complex64::new(2.0, 0.0), Complex64::new(3.0, 0.0)],
        ],
    })?;
    all.push(check(
        "A2-hura5",
        monomial_from_bvst(&hura, &gh)?,
        None,
        4,
        false,
        tol,
    ));

    all.push(two_orbit_example(tol)?);

    let x = build_example(&ExampleKind::CounterexampleX)?;
    all.push(check("X", x.matrix, x.rational, 2, false, tol));

    // idempotent projection: C itself is not an R-matrix; C⊗I4 satisfies the
    // equation while pinv(C⊗I4) does not
    let c = build_example(&ExampleKind::IdempotentC)?;
    let c_kron = kron(&c.matrix, &CMatrix::identity(4));
    let c_kron_ok = qybe_check(&c_kron, 4, tol)?.ok;
    let c_pinv = pinv(&c.matrix)?;
    let pinv_matches = c_pinv.max_abs_diff(&printed_idempotent_pinv()) <= 1e-12;
    let pinv_kron_fails = !qybe_check(&kron(&c_pinv, &CMatrix::identity(4)), 4, tol)?.ok;
    all.push(Rebuilt {
        name: "C",
        matrix: c.matrix,
        rational: c.rational,
        note: format!(
            "C⊗I4 qybe {}, pinv matches print {}, pinv(C⊗I4) fails {}",
            c_kron_ok, pinv_matches, pinv_kron_fails
        ),
        ok: c_kron_ok && pinv_matches && pinv_kron_fails,
    });
    all.push(Rebuilt {
        name: "Cpinv",
        matrix: printed_idempotent_pinv(),
        rational: None,
        note: "printed pseudo-inverse".to_string(),
        ok: true,
    });

    // Vandermonde similarity closes the loop: (P⊗P)⁻¹ A1 (P⊗P) = A(d)
    let p = build_example(&ExampleKind::VandermondeP { n: 3 })?.matrix;
    let p_inv = p.inverse(tol)?;
    let a1m = build_example(&ExampleKind::HouseholderA1 { n: 3 })?.matrix;
    let mut d1 = vec![Complex64::new(1.0, 0.0); 9];
    d1[0] = Complex64::new(-1.0, 0.0);
    let target = build_example(&ExampleKind::AOfD { n: 3, d: d1 })?.matrix;
    let conjugated = conjugate_similarity(&p_inv, &a1m, tol)?;
    let sim_ok = conjugated.max_abs_diff(&target) <= 1e-9;
    all.push(Rebuilt {
        name: "vandermonde3",
        matrix: p,
        rational: None,
        note: format!("(P⊗P)⁻¹·A1·(P⊗P) = A(-1,1,…,1): {sim_ok}"),
        ok: sim_ok,
    });

    let selected: Vec<&Rebuilt> = match &args.name {
        Some(name) => {
            let found: Vec<&Rebuilt> = all.iter().filter(|r| r.name == name).collect();
            if found.is_empty() {
                bail!("unknown example `{name}`");
            }
            found
        }
        None => all.iter().collect(),
    };

    let mut failures = 0;
    for rebuilt in &selected {
        println!(
            "{} {:<12} {}",
            if rebuilt.ok { "PASS" } else { "FAIL" },
            rebuilt.name,
            rebuilt.note
        );
        if !rebuilt.ok {
            failures += 1;
        }
        if let Some(dir) = &args.dir {
            std::fs::create_dir_all(dir)?;
            let path = dir.join(format!("{}.json", rebuilt.name));
            let file = ObjectFile::with_origin(
                io::matrix_to_payload(&rebuilt.matrix, rebuilt.rational.clone()),
                format!("example({})", rebuilt.name),
            );
            write_object(&path, &file)?;
        }
    }
    Ok(i32::from(failures > 0))
}
