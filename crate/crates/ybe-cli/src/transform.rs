use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};

use ybe_core::io::{
    self, payload_to_brace, payload_to_matrix, payload_to_solution, payload_to_weights,
    ObjectFile, ObjectPayload,
};
use ybe_core::rmatrix::{
    apply_multiplicative_map, build_example, conjugate_similarity, hadamard, kron, CMatrix,
    ExampleKind, MultiplicativeMap,
};
use ybe_core::solution::{i_retraction, retraction, Retraction};
use ybe_core::weights::lift_weights;

use crate::util::{load_object, parse_index_list, write_object};

#[derive(Args)]
pub struct TransformArgs {
    #[command(subcommand)]
    op: TransformOp,
}

#[derive(Subcommand)]
enum TransformOp {
    /// Kronecker product of two matrices.
    Kron {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Entrywise product of two matrices of equal shape.
    Hadamard {
        a: PathBuf,
        b: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Conjugation (P⊗P)·X·(P⊗P)⁻¹; `--invert` conjugates by P⁻¹ instead,
    /// which realises (P⊗P)⁻¹·X·(P⊗P).
    Similarity {
        /// Matrix file or the named matrix `vandermonde3`.
        #[arg(long)]
        p: String,
        x: PathBuf,
        #[arg(long)]
        invert: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Retraction of a solution (classes of equal sigma rows).
    Retract {
        solution: PathBuf,
        #[arg(long)]
        out: PathBuf,
        /// Also write the classes as a partition file.
        #[arg(long)]
        classes_out: Option<PathBuf>,
    },
    /// I-retraction of a brace-restricted solution along an ideal.
    IRetract {
        /// Brace file.
        #[arg(long)]
        brace: PathBuf,
        /// Ideal elements, comma-separated.
        #[arg(long)]
        ideal: String,
        /// Carrier subset of the brace, comma-separated, sorted.
        #[arg(long)]
        set: String,
        /// Solution on the subset; defaults to the restricted Yang-Baxter map.
        #[arg(long)]
        solution: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        classes_out: Option<PathBuf>,
    },
    /// Pull quotient weights back through a partition (class map).
    LiftWeights {
        /// Partition file mapping big indices to classes.
        #[arg(long)]
        classes: PathBuf,
        /// Weights on the quotient.
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Apply z ↦ z^k (optionally conjugated) to a monomial R-matrix.
    Gmap {
        matrix: PathBuf,
        #[arg(long, default_value_t = 1)]
        power: i32,
        #[arg(long)]
        conj: bool,
        #[arg(long)]
        out: PathBuf,
    },
}

fn load_matrix(path: &Path) -> Result<CMatrix> {
    payload_to_matrix(&load_object(path)?.payload)
        .with_context(|| format!("{} is not a matrix file", path.display()))
}

fn write_matrix(out: &Path, m: &CMatrix, origin: String) -> Result<()> {
    let file = ObjectFile::with_origin(io::matrix_to_payload(m, None), origin);
    write_object(out, &file)?;
    println!("matrix {}x{} -> {}", m.rows(), m.cols(), out.display());
    Ok(())
}

fn write_retraction(
    out: &Path,
    classes_out: Option<&Path>,
    retraction: &Retraction,
    origin: String,
) -> Result<()> {
    let file = ObjectFile::with_origin(io::solution_to_payload(&retraction.solution), origin.clone());
    write_object(out, &file)?;
    println!(
        "solution on {} classes -> {}",
        retraction.solution.n(),
        out.display()
    );
    if let Some(path) = classes_out {
        let m = retraction.solution.n();
        let classes: Vec<Vec<usize>> = (0..m)
            .map(|k| {
                retraction
                    .class_map
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c == k)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        let file = ObjectFile::with_origin(ObjectPayload::Partition { classes }, origin);
        write_object(path, &file)?;
        println!("classes -> {}", path.display());
    }
    Ok(())
}

pub fn run(args: TransformArgs, tol: f64) -> Result<i32> {
    match args.op {
        TransformOp::Kron { a, b, out } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            let m = kron(&ma, &mb);
            write_matrix(&out, &m, format!("kron({}, {})", a.display(), b.display()))?;
        }
        TransformOp::Hadamard { a, b, out } => {
            let (ma, mb) = (load_matrix(&a)?, load_matrix(&b)?);
            let m = hadamard(&ma, &mb)?;
            write_matrix(
                &out,
                &m,
                format!("hadamard({}, {})", a.display(), b.display()),
            )?;
        }
        TransformOp::Similarity { p, x, invert, out } => {
            let base = if p == "vandermonde3" {
                build_example(&ExampleKind::VandermondeP { n: 3 })?.matrix
            } else {
                load_matrix(Path::new(&p))?
            };
            let conjugator = if invert { base.inverse(tol)? } else { base };
            let mx = load_matrix(&x)?;
            let m = conjugate_similarity(&conjugator, &mx, tol)?;
            let direction = if invert { " inverted" } else { "" };
            write_matrix(
                &out,
                &m,
                format!("similarity(p={p}{direction}, {})", x.display()),
            )?;
        }
        TransformOp::Retract {
            solution,
            out,
            classes_out,
        } => {
            let s = payload_to_solution(&load_object(&solution)?.payload)?;
            let ret = retraction(&s)?;
            write_retraction(
                &out,
                classes_out.as_deref(),
                &ret,
                format!("retract({})", solution.display()),
            )?;
        }
        TransformOp::IRetract {
            brace,
            ideal,
            set,
            solution,
            out,
            classes_out,
        } => {
            let b = payload_to_brace(&load_object(&brace)?.payload)?;
            let ideal = parse_index_list(&ideal)?;
            let subset = parse_index_list(&set)?;
            let s = match &solution {
                Some(path) => payload_to_solution(&load_object(path)?.payload)?,
                None => {
                    let full = ybe_core::solution::yb_map_from_brace(&b);
                    ybe_core::solution::restrict_solution(&full, &subset)?
                }
            };
            let ret = i_retraction(&b, &ideal, &subset, &s)?;
            write_retraction(
                &out,
                classes_out.as_deref(),
                &ret,
                format!("i-retract({}, ideal)", brace.display()),
            )?;
        }
        TransformOp::LiftWeights {
            classes,
            weights,
            out,
        } => {
            let partition = load_object(&classes)?;
            let ObjectPayload::Partition { classes: class_sets } = &partition.payload else {
                bail!("{} is not a partition file", classes.display());
            };
            let total: usize = class_sets.iter().map(|c| c.len()).sum();
            let mut class_map = vec![usize::MAX; total];
            for (k, class) in class_sets.iter().enumerate() {
                for &x in class {
                    if x >= total || class_map[x] != usize::MAX {
                        bail!("partition does not cover 0..{total} exactly once");
                    }
                    class_map[x] = k;
                }
            }
            let dq = payload_to_weights(&load_object(&weights)?.payload)?;
            let lifted = lift_weights(&class_map, &dq)?;
            let file = ObjectFile::with_origin(
                io::weights_to_payload(&lifted),
                format!(
                    "lift-weights({}, {})",
                    classes.display(),
                    weights.display()
                ),
            );
            write_object(&out, &file)?;
            println!("weights on {} elements -> {}", lifted.n(), out.display());
        }
        TransformOp::Gmap {
            matrix,
            power,
            conj,
            out,
        } => {
            let m = load_matrix(&matrix)?;
            let mapped = apply_multiplicative_map(
                &m,
                MultiplicativeMap {
                    power,
                    conjugate: conj,
                },
                tol,
            )?;
            write_matrix(
                &out,
                &mapped,
                format!("gmap(power={power}, conj={conj}, {})", matrix.display()),
            )?;
        }
    }
    Ok(0)
}
