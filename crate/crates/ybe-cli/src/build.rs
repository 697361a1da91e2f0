use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Subcommand};
use num_complex::Complex64;

use ybe_core::algebra::{
    brace_from_nilpotent_ring, even_subring, make_truncated_polynomial_ring,
    strictly_upper_triangular_ring, zero_ring, FiniteBrace, FiniteRing,
};
use ybe_core::io::{
    self, payload_to_brace, payload_to_solution, payload_to_weights, ObjectFile,
};
use ybe_core::rmatrix::{build_example, monomial_from_bvst, ExampleKind};
use ybe_core::solution::{builtin_solution, restrict_solution, yb_map_from_brace, BuiltinSolution};
use ybe_core::weights::{builtin_weights, BuiltinWeights, WeightSystem};

use crate::util::{load_object, parse_complex, parse_complex_list, parse_index_list, write_object};

#[derive(Args)]
pub struct BuildArgs {
    #[command(subcommand)]
    what: BuildKind,
}

#[derive(Subcommand)]
enum BuildKind {
    /// A finite ring given by one of the named constructions.
    Ring(RingArgs),
    /// A finite brace.
    Brace(BraceArgs),
    /// A set-theoretic solution.
    Solution(SolutionArgs),
    /// A weight system.
    Weights(WeightsArgs),
    /// A complex matrix.
    Matrix(MatrixArgs),
}

#[derive(Args)]
struct RingArgs {
    #[command(subcommand)]
    kind: RingKind,
}

#[derive(Subcommand, Clone)]
enum RingKind {
    /// Polynomials a₁x+…+a_{deg−1}x^{deg−1} over F_p with x^deg = 0.
    Truncpoly {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        deg: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// The subring 2Z/2^expZ of Z/2^exp.
    Even {
        #[arg(long)]
        exp: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Zero multiplication on Z/n.
    Zero {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// Strictly upper triangular 3×3 matrices over F_p.
    Uppertri {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct BraceArgs {
    #[command(subcommand)]
    kind: BraceKind,
}

#[derive(Subcommand)]
enum BraceKind {
    /// Rump's brace of a nilpotent ring: a∘b = a+b+a·b.
    FromRing {
        /// Named ring construction: truncpoly, even, zero, uppertri.
        #[arg(long)]
        ring: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        deg: Option<usize>,
        #[arg(long)]
        exp: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Alternatively, a ring object file.
        #[arg(long)]
        file: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
    },
    /// The trivial brace a∘b = a+b on Z/n.
    Trivial {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct SolutionArgs {
    #[command(subcommand)]
    kind: SolutionKind,
}

#[derive(Subcommand)]
enum SolutionKind {
    /// r(x,y) = (y,x).
    Flip {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// r(x,y) = (y+1, x−1) on Z/n.
    Cyclic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: PathBuf,
    },
    /// The four-element solution on pairs over Z/2.
    Hura5 {
        #[arg(long)]
        out: PathBuf,
    },
    /// The Yang-Baxter map of a brace, optionally restricted to a subset.
    FromBrace {
        brace: PathBuf,
        /// Comma-separated element indices to restrict to.
        #[arg(long)]
        restrict: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct WeightsArgs {
    #[command(subcommand)]
    kind: WeightsKind,
}

#[derive(Subcommand)]
enum WeightsKind {
    /// d(i,j) = g(i−j) over Z/n with n = number of supplied values.
    CyclicG {
        /// Comma-separated complex values g(0),g(1),…
        #[arg(long)]
        g: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// f([i,j],[m,n]) = g(i+j+n, m+j+n) with g(1,0) = g(0,1).
    Hura5G {
        #[arg(long)]
        g00: String,
        #[arg(long)]
        g01: String,
        #[arg(long)]
        g11: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// One value for every pair.
    Constant {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        value: String,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Args)]
struct MatrixArgs {
    #[command(subcommand)]
    kind: MatrixKind,
}

#[derive(Subcommand)]
enum MatrixKind {
    /// One of the printed example matrices.
    Example {
        /// A1, A2, Ad, vandermonde3, C, Cpinv or X.
        #[arg(long)]
        name: String,
        /// Base dimension for A1/A2/Ad/vandermonde (default 3).
        #[arg(long, default_value_t = 3)]
        n: usize,
        /// Diagonal values for Ad, comma-separated complex numbers.
        #[arg(long)]
        d: Option<String>,
        /// Off-support value for A2 (default −2/9).
        #[arg(long)]
        alpha: Option<String>,
        /// Support value for A2 (default 7/9).
        #[arg(long)]
        beta: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Monomial matrix of a solution with weights.
    FromBvst {
        #[arg(long)]
        solution: PathBuf,
        #[arg(long)]
        weights: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

fn named_ring(kind: &RingKind) -> Result<(FiniteRing, String)> {
    Ok(match kind {
        RingKind::Truncpoly { p, deg, .. } => (
            make_truncated_polynomial_ring(*p, *deg)?,
            format!("truncpoly(p={p},deg={deg})"),
        ),
        RingKind::Even { exp, .. } => (even_subring(*exp)?, format!("even(exp={exp})")),
        RingKind::Zero { n, .. } => (zero_ring(*n)?, format!("zero(n={n})")),
        RingKind::Uppertri { p, .. } => (
            strictly_upper_triangular_ring(*p)?,
            format!("uppertri(p={p})"),
        ),
    })
}

pub fn run(args: BuildArgs, _tol: f64) -> Result<i32> {
    match args.what {
        BuildKind::Ring(ring) => {
            let (r, origin) = named_ring(&ring.kind)?;
            let out = match &ring.kind {
                RingKind::Truncpoly { out, .. }
                | RingKind::Even { out, .. }
                | RingKind::Zero { out, .. }
                | RingKind::Uppertri { out, .. } => out.clone(),
            };
            let file = ObjectFile::with_origin(io::ring_to_payload(&r), origin);
            write_object(&out, &file)?;
            println!("ring of order {} -> {}", r.order(), out.display());
        }
        BuildKind::Brace(brace) => match brace.kind {
            BraceKind::FromRing {
                ring,
                p,
                deg,
                exp,
                n,
                file,
                out,
            } => {
                let (r, origin) = if let Some(path) = file {
                    let object = load_object(&path)?;
                    (
                        io::payload_to_ring(&object.payload)?,
                        format!("from-ring({})", path.display()),
                    )
                } else {
                    let kind = match ring.as_str() {
                        "truncpoly" => RingKind::Truncpoly {
                            p: p.context("--p required for truncpoly")?,
                            deg: deg.context("--deg required for truncpoly")?,
                            out: out.clone(),
                        },
                        "even" => RingKind::Even {
                            exp: exp.context("--exp required for even")?,
                            out: out.clone(),
                        },
                        "zero" => RingKind::Zero {
                            n: n.context("--n required for zero")?,
                            out: out.clone(),
                        },
                        "uppertri" => RingKind::Uppertri {
                            p: p.context("--p required for uppertri")?,
                            out: out.clone(),
                        },
                        other => bail!("unknown ring construction `{other}`"),
                    };
                    named_ring(&kind)?
                };
                let b = brace_from_nilpotent_ring(&r)?;
                let file = ObjectFile::with_origin(io::brace_to_payload(&b), origin);
                write_object(&out, &file)?;
                println!("brace of order {} -> {}", b.order(), out.display());
            }
            BraceKind::Trivial { n, out } => {
                let b = FiniteBrace::trivial(n)?;
                let file = ObjectFile::with_origin(io::brace_to_payload(&b), format!("trivial({n})"));
                write_object(&out, &file)?;
                println!("trivial brace of order {n} -> {}", out.display());
            }
        },
        BuildKind::Solution(solution) => match solution.kind {
            SolutionKind::Flip { n, out } => {
                let s = builtin_solution(BuiltinSolution::Flip { n })?;
                write_solution(&out, &s, format!("flip({n})"))?;
            }
            SolutionKind::Cyclic { n, out } => {
                let s = builtin_solution(BuiltinSolution::Cyclic { n })?;
                write_solution(&out, &s, format!("cyclic({n})"))?;
            }
            SolutionKind::Hura5 { out } => {
                let s = builtin_solution(BuiltinSolution::Hura5)?;
                write_solution(&out, &s, "hura5".to_string())?;
            }
            SolutionKind::FromBrace {
                brace,
                restrict,
                out,
            } => {
                let object = load_object(&brace)?;
                let b = payload_to_brace(&object.payload)?;
                let full = yb_map_from_brace(&b);
                let (s, origin) = match restrict {
                    Some(raw) => {
                        let subset = parse_index_list(&raw)?;
                        (
                            restrict_solution(&full, &subset)?,
                            format!("yb-map({}) restricted to {{{raw}}}", brace.display()),
                        )
                    }
                    None => (full, format!("yb-map({})", brace.display())),
                };
                write_solution(&out, &s, origin)?;
            }
        },
        BuildKind::Weights(weights) => match weights.kind {
            WeightsKind::CyclicG { g, out } => {
                let g = parse_complex_list(&g)?;
                let w = builtin_weights(&BuiltinWeights::CyclicG { g })?;
                write_weights(&out, &w, "cyclic-g".to_string())?;
            }
            WeightsKind::Hura5G { g00, g01, g11, out } => {
                let (g00, g01, g11) = (
                    parse_complex(&g00)?,
                    parse_complex(&g01)?,
                    parse_complex(&g11)?,
                );
                let w = builtin_weights(&BuiltinWeights::Hura5G {
                    g: [[g00, g01], [g01, g11]],
                })?;
                write_weights(&out, &w, "hura5-g".to_string())?;
            }
            WeightsKind::Constant { n, value, out } => {
                let w = WeightSystem::constant(n, parse_complex(&value)?)?;
                write_weights(&out, &w, format!("constant({n})"))?;
            }
        },
        BuildKind::Matrix(matrix) => match matrix.kind {
            MatrixKind::Example {
                name,
                n,
                d,
                alpha,
                beta,
                out,
            } => {
                let kind = match name.as_str() {
                    "A1" => ExampleKind::HouseholderA1 { n },
                    "A2" => {
                        let alpha = match alpha {
                            Some(raw) => parse_complex(&raw)?,
                            None => Complex64::new(-2.0 / 9.0, 0.0),
                        };
                        let beta = match beta {
                            Some(raw) => parse_complex(&raw)?,
                            None => Complex64::new(7.0 / 9.0, 0.0),
                        };
                        ExampleKind::AlphaBBetaE { n, alpha, beta }
                    }
                    "Ad" => {
                        let d = match d {
                            Some(raw) => parse_complex_list(&raw)?,
                            None => (1..=n * n)
                                .rev()
                                .map(|k| Complex64::new(k as f64, 0.0))
                                .collect(),
                        };
                        ExampleKind::AOfD { n, d }
                    }
                    "vandermonde3" => ExampleKind::VandermondeP { n: 3 },
                    "vandermonde" => ExampleKind::VandermondeP { n },
                    "C" => ExampleKind::IdempotentC,
                    "X" => ExampleKind::CounterexampleX,
                    "Cpinv" => {
                        let m = ybe_core::rmatrix::printed_idempotent_pinv();
                        let file = ObjectFile::with_origin(
                            io::matrix_to_payload(&m, None),
                            "example(Cpinv)".to_string(),
                        );
                        write_object(&out, &file)?;
                        println!("matrix 4x4 -> {}", out.display());
                        return Ok(0);
                    }
                    other => bail!("unknown example `{other}`"),
                };
                let built = build_example(&kind)?;
                let file = ObjectFile::with_origin(
                    io::matrix_to_payload(&built.matrix, built.rational),
                    format!("example({name})"),
                );
                write_object(&out, &file)?;
                println!(
                    "matrix {}x{} -> {}",
                    built_rows(&file),
                    built_rows(&file),
                    out.display()
                );
            }
            MatrixKind::FromBvst {
                solution,
                weights,
                out,
            } => {
                let s = payload_to_solution(&load_object(&solution)?.payload)?;
                let w = payload_to_weights(&load_object(&weights)?.payload)?;
                let m = monomial_from_bvst(&s, &w)?;
                let file = ObjectFile::with_origin(
                    io::matrix_to_payload(&m, None),
                    format!("from-bvst({}, {})", solution.display(), weights.display()),
                );
                write_object(&out, &file)?;
                println!("matrix {}x{} -> {}", m.rows(), m.cols(), out.display());
            }
        },
    }
    Ok(0)
}

fn built_rows(file: &ObjectFile) -> usize {
    match &file.payload {
        ybe_core::io::ObjectPayload::Matrix { rows, .. } => *rows,
        _ => 0,
    }
}

fn write_solution(out: &Path, s: &ybe_core::solution::SetSolution, origin: String) -> Result<()> {
    let file = ObjectFile::with_origin(io::solution_to_payload(s), origin);
    write_object(out, &file)?;
    println!("solution on {} elements -> {}", s.n(), out.display());
    Ok(())
}

fn write_weights(out: &Path, w: &WeightSystem, origin: String) -> Result<()> {
    let file = ObjectFile::with_origin(io::weights_to_payload(w), origin);
    write_object(out, &file)?;
    println!("weights on {} elements -> {}", w.n(), out.display());
    Ok(())
}
