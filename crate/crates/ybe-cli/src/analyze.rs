use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use serde_json::json;

use ybe_core::io::{payload_to_matrix, payload_to_solution, payload_to_weights};
use ybe_core::rmatrix::{classify_involutive_matrix, singular_values};
use ybe_core::solution::{
    multipermutation_level, orbits, permutation_group, DEFAULT_GROUP_CAP,
};
use ybe_core::weights::is_trivial;

use crate::util::{load_object, show_complex};

#[derive(Args)]
pub struct AnalyzeArgs {
    /// orbits | mpl | svd | triviality | classify | permgroup
    what: String,
    /// Object file to analyze.
    path: PathBuf,
    /// Solution file (required for triviality).
    #[arg(long)]
    solution: Option<PathBuf>,
    /// Emit machine-readable output.
    #[arg(long)]
    json: bool,
}

pub fn run(args: AnalyzeArgs, tol: f64) -> Result<i32> {
    let object = load_object(&args.path)?;
    match args.what.as_str() {
        "orbits" => {
            let s = payload_to_solution(&object.payload)?;
            let (partition, indecomposable) = orbits(&s);
            if args.json {
                println!(
                    "{}",
                    json!({
                        "orbits": partition.classes(),
                        "indecomposable": indecomposable,
                    })
                );
            } else {
                let sizes: Vec<usize> = partition.classes().iter().map(|c| c.len()).collect();
                println!(
                    "{} orbit{} (sizes {:?}), {}",
                    partition.len(),
                    if partition.len() == 1 { "" } else { "s" },
                    sizes,
                    if indecomposable {
                        "indecomposable"
                    } else {
                        "decomposable"
                    }
                );
            }
        }
        "mpl" => {
            let s = payload_to_solution(&object.payload)?;
            let level = multipermutation_level(&s)?;
            if args.json {
                println!("{}", json!({ "mpl": level }));
            } else {
                match level {
                    Some(m) => println!("multipermutation level {m}"),
                    None => println!("multipermutation level none (retraction stabilises)"),
                }
            }
        }
        "svd" => {
            let m = payload_to_matrix(&object.payload)?;
            let values = singular_values(&m)?;
            if args.json {
                println!("{}", json!({ "singular_values": values }));
            } else {
                let shown: Vec<String> = values.iter().map(|v| format!("{v:.12}")).collect();
                println!("singular values: {}", shown.join(" "));
            }
        }
        "triviality" => {
            let Some(solution_path) = &args.solution else {
                bail!("analyze triviality needs --solution");
            };
            let w = payload_to_weights(&object.payload)?;
            let s = payload_to_solution(&load_object(solution_path)?.payload)?;
            match is_trivial(&s, &w, tol)? {
                Some(witness) => {
                    if args.json {
                        println!(
                            "{}",
                            json!({
                                "trivial": true,
                                "alpha": witness.alpha.iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
                                "c": [witness.c.re, witness.c.im],
                            })
                        );
                    } else {
                        let alphas: Vec<String> =
                            witness.alpha.iter().map(|&z| show_complex(z)).collect();
                        println!(
                            "trivial: alpha = [{}], c = {}",
                            alphas.join(", "),
                            show_complex(witness.c)
                        );
                    }
                }
                None => {
                    if args.json {
                        println!("{}", json!({ "trivial": false }));
                    } else {
                        println!("non-trivial");
                    }
                }
            }
        }
        "classify" => {
            let m = payload_to_matrix(&object.payload)?;
            let size = m.rows();
            let n = (size as f64).sqrt().round() as usize;
            if n * n != size || m.cols() != size {
                bail!("matrix size {size} is not a perfect square");
            }
            let report = classify_involutive_matrix(&m, n, tol)?;
            if args.json {
                println!(
                    "{}",
                    json!({
                        "permutation": report.permutation,
                        "symmetric": report.symmetric,
                        "squares_to_identity": report.squares_to_identity,
                        "block_condition": report.block_condition,
                        "solution": report.solution.as_ref().map(|s| s.pairs().to_vec()),
                        "braid_ok": report.properties.map(|p| p.braid_ok),
                    })
                );
            } else {
                println!(
                    "permutation {} symmetric {} squares-to-identity {} block-condition {}{}",
                    report.permutation,
                    report.symmetric,
                    report.squares_to_identity,
                    report.block_condition,
                    match &report.solution {
                        Some(s) => format!("; decodes to a solution on {} elements", s.n()),
                        None => "; no solution decoded".to_string(),
                    }
                );
            }
        }
        "permgroup" => {
            let s = payload_to_solution(&object.payload)?;
            let group = permutation_group(&s, DEFAULT_GROUP_CAP)?;
            if args.json {
                println!(
                    "{}",
                    json!({
                        "order": group.elements.len(),
                        "nilpotent": group.is_nilpotent,
                    })
                );
            } else {
                println!(
                    "permutation group of order {}, {}",
                    group.elements.len(),
                    if group.is_nilpotent {
                        "nilpotent"
                    } else {
                        "not nilpotent"
                    }
                );
            }
        }
        other => bail!("unknown analysis `{other}`"),
    }
    Ok(0)
}
