use std::path::PathBuf;

use anyhow::{bail, Result};
use clap::Args;
use serde_json::json;

use ybe_core::algebra::{verify_brace, FiniteRing, OpTable};
use ybe_core::io::{payload_to_matrix, payload_to_solution, payload_to_weights, ObjectPayload};
use ybe_core::rmatrix::{decode_monomial, is_unitary, nonsingularity, qybe_check};
use ybe_core::solution::{solution_properties, PartitionedSet, SetSolution};
use ybe_core::weights::verify_cocycle;

use crate::util::load_object;

#[derive(Args)]
pub struct VerifyArgs {
    /// Object file to verify.
    path: PathBuf,
    /// Solution file, required to verify a weights file.
    #[arg(long)]
    solution: Option<PathBuf>,
    /// Emit a machine-readable report.
    #[arg(long)]
    json: bool,
}

struct Report {
    lines: Vec<(String, bool)>,
    details: serde_json::Map<String, serde_json::Value>,
}

impl Report {
    fn new() -> Self {
        Report {
            lines: Vec::new(),
            details: serde_json::Map::new(),
        }
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.lines.push((name.to_string(), ok));
        self.details.insert(name.to_string(), json!(ok));
    }

    fn note(&mut self, name: &str, value: serde_json::Value) {
        self.details.insert(name.to_string(), value);
    }

    fn finish(self, kind: &str, as_json: bool) -> i32 {
        let ok = self.lines.iter().all(|(_, ok)| *ok);
        if as_json {
            let mut map = self.details;
            map.insert("kind".into(), json!(kind));
            map.insert("ok".into(), json!(ok));
            println!("{}", serde_json::Value::Object(map));
        } else {
            let summary: Vec<String> = self
                .lines
                .iter()
                .map(|(name, ok)| format!("{}{name}", if *ok { "" } else { "!" }))
                .collect();
            println!(
                "{kind}: {} [{}]",
                if ok { "ok" } else { "FAIL" },
                summary.join(" ")
            );
        }
        i32::from(!ok)
    }
}

pub fn run(args: VerifyArgs, tol: f64) -> Result<i32> {
    let object = load_object(&args.path)?;
    let mut report = Report::new();
    let kind = object.payload.kind();
    match &object.payload {
        ObjectPayload::Brace { add, circ, .. } => {
            let add = OpTable::from_rows(add)?;
            let circ = OpTable::from_rows(circ)?;
            let check = verify_brace(&add, &circ)?;
            report.check("brace-axioms", check.is_brace);
            if !check.is_brace {
                report.note(
                    "violations",
                    json!(check
                        .violations
                        .iter()
                        .map(|v| v.to_string())
                        .collect::<Vec<_>>()),
                );
                for v in &check.violations {
                    eprintln!("violation: {v}");
                }
            }
        }
        ObjectPayload::Ring { add, mul, .. } => {
            let add = OpTable::from_rows(add)?;
            let mul = OpTable::from_rows(mul)?;
            match FiniteRing::new(add, mul) {
                Ok(ring) => {
                    report.check("ring-axioms", true);
                    report.note("nilpotent", json!(ring.is_nilpotent()));
                }
                Err(err) => {
                    report.check("ring-axioms", false);
                    eprintln!("violation: {err}");
                }
            }
        }
        ObjectPayload::Solution { .. } => {
            let s = payload_to_solution(&object.payload)?;
            verify_solution(&mut report, &s);
        }
        ObjectPayload::Weights { .. } => {
            let w = payload_to_weights(&object.payload)?;
            report.check("nonzero", true); // construction enforces it
            match &args.solution {
                Some(path) => {
                    let s = payload_to_solution(&load_object(path)?.payload)?;
                    report.check("cocycle", verify_cocycle(&s, &w, tol)?);
                }
                None => bail!("verifying a weights file needs --solution"),
            }
        }
        ObjectPayload::Matrix { rows, cols, .. } => {
            let m = payload_to_matrix(&object.payload)?;
            if rows != cols {
                bail!("matrix must be square, got {rows}x{cols}");
            }
            let n = (*rows as f64).sqrt().round() as usize;
            if n * n != *rows {
                bail!("matrix size {rows} is not a perfect square");
            }
            let qybe = qybe_check(&m, n, tol)?;
            report.check("qybe", qybe.ok);
            report.note("residual", json!(qybe.residual));
            report.note(
                "nonsingular",
                json!(nonsingularity(&m, tol)?.nonsingular),
            );
            report.note("unitary", json!(is_unitary(&m, tol)));
            report.note("monomial", json!(decode_monomial(&m).is_ok()));
            if !qybe.ok {
                eprintln!("qybe residual: {:e}", qybe.residual);
            }
        }
        ObjectPayload::Partition { classes } => {
            let n = classes.iter().flatten().max().map_or(0, |&m| m + 1);
            report.check("disjoint", PartitionedSet::new(n, classes.clone()).is_ok());
        }
    }
    Ok(report.finish(kind, args.json))
}

fn verify_solution(report: &mut Report, s: &SetSolution) {
    report.check("bijective", s.is_bijective());
    let props = solution_properties(s);
    report.check("braid", props.braid_ok);
    report.note("involutive", json!(props.involutive));
    report.note("left_nondeg", json!(props.left_nondeg));
    report.note("right_nondeg", json!(props.right_nondeg));
    let mut traits = Vec::new();
    if props.involutive {
        traits.push("involutive");
    }
    if props.left_nondeg && props.right_nondeg {
        traits.push("nondeg");
    }
    if !traits.is_empty() {
        eprintln!("properties: {}", traits.join(" "));
    }
}
