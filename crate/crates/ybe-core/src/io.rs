//! JSON object files shared with the command-line tool.
//!
//! Every object is a single JSON document with a `kind` tag (partitions may
//! omit it), plus an optional `origin` provenance note. Serialisation is
//! canonical: keys sorted, floats in their shortest round-trip form, so a
//! build → write → read → write cycle is byte-stable.
//!
//! Schemas:
//!
//! * brace:    `{"kind":"brace","order":N,"add":[[...]],"circ":[[...]]}`
//! * ring:     `{"kind":"ring","order":N,"add":[[...]],"mul":[[...]]}`
//! * solution: `{"kind":"solution","n":N,"r":[[k,l],...]}` row-major over `(i,j)`
//! * weights:  `{"kind":"weights","n":N,"d":[[re,im],...]}` row-major
//! * matrix:   `{"kind":"matrix","rows":R,"cols":C,"entries":[[re,im],...]}`
//!   with an optional `"rational"` annotation array of exact entry strings
//! * partition: `{"classes":[[...],[...]]}`

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::algebra::{FiniteBrace, FiniteRing, OpTable};
use crate::rmatrix::CMatrix;
use crate::solution::SetSolution;
use crate::weights::WeightSystem;
use crate::Complex64;

#[derive(Debug, Error)]
pub enum SchemaError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("missing or malformed field `{0}`")]
    Field(&'static str),
    #[error("unknown object kind `{0}`")]
    UnknownKind(String),
    #[error("object is structurally invalid: {0}")]
    Invalid(String),
}

/// The payload of an object file.
#[derive(Debug, Clone)]
pub enum ObjectPayload {
    Brace {
        order: usize,
        add: Vec<Vec<usize>>,
        circ: Vec<Vec<usize>>,
    },
    Ring {
        order: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    },
    Solution {
        n: usize,
        r: Vec<(usize, usize)>,
    },
    Weights {
        n: usize,
        d: Vec<Complex64>,
    },
    Matrix {
        rows: usize,
        cols: usize,
        entries: Vec<Complex64>,
        rational: Option<Vec<String>>,
    },
    Partition {
        classes: Vec<Vec<usize>>,
    },
}

impl ObjectPayload {
    pub fn kind(&self) -> &'static str {
        match self {
            ObjectPayload::Brace { .. } => "brace",
            ObjectPayload::Ring { .. } => "ring",
            ObjectPayload::Solution { .. } => "solution",
            ObjectPayload::Weights { .. } => "weights",
            ObjectPayload::Matrix { .. } => "matrix",
            ObjectPayload::Partition { .. } => "partition",
        }
    }
}

/// An object file: payload plus optional provenance note.
#[derive(Debug, Clone)]
pub struct ObjectFile {
    pub payload: ObjectPayload,
    pub origin: Option<String>,
}

impl ObjectFile {
    pub fn new(payload: ObjectPayload) -> Self {
        ObjectFile {
            payload,
            origin: None,
        }
    }

    pub fn with_origin(payload: ObjectPayload, origin: impl Into<String>) -> Self {
        ObjectFile {
            payload,
            origin: Some(origin.into()),
        }
    }
}

fn complex_pairs(values: &[Complex64]) -> Value {
    Value::Array(values.iter().map(|z| json!([z.re, z.im])).collect())
}

fn table_value(rows: &[Vec<usize>]) -> Value {
    Value::Array(
        rows.iter()
            .map(|row| Value::Array(row.iter().map(|&v| json!(v)).collect()))
            .collect(),
    )
}

/// Canonical JSON text: serde's object maps are sorted by key and floats use
/// the shortest representation that round-trips.
pub fn to_canonical_json(file: &ObjectFile) -> String {
    let mut map = Map::new();
    match &file.payload {
        ObjectPayload::Brace { order, add, circ } => {
            map.insert("kind".into(), json!("brace"));
            map.insert("order".into(), json!(order));
            map.insert("add".into(), table_value(add));
            map.insert("circ".into(), table_value(circ));
        }
        ObjectPayload::Ring { order, add, mul } => {
            map.insert("kind".into(), json!("ring"));
            map.insert("order".into(), json!(order));
            map.insert("add".into(), table_value(add));
            map.insert("mul".into(), table_value(mul));
        }
        ObjectPayload::Solution { n, r } => {
            map.insert("kind".into(), json!("solution"));
            map.insert("n".into(), json!(n));
            map.insert(
                "r".into(),
                Value::Array(r.iter().map(|&(k, l)| json!([k, l])).collect()),
            );
        }
        ObjectPayload::Weights { n, d } => {
            map.insert("kind".into(), json!("weights"));
            map.insert("n".into(), json!(n));
            map.insert("d".into(), complex_pairs(d));
        }
        ObjectPayload::Matrix {
            rows,
            cols,
            entries,
            rational,
        } => {
            map.insert("kind".into(), json!("matrix"));
            map.insert("rows".into(), json!(rows));
            map.insert("cols".into(), json!(cols));
            map.insert("entries".into(), complex_pairs(entries));
            if let Some(rational) = rational {
                map.insert("rational".into(), json!(rational));
            }
        }
        ObjectPayload::Partition { classes } => {
            map.insert("classes".into(), table_value(classes));
        }
    }
    if let Some(origin) = &file.origin {
        map.insert("origin".into(), json!(origin));
    }
    let mut text = serde_json::to_string_pretty(&Value::Object(map)).expect("valid JSON value");
    text.push('\n');
    text
}

fn get_usize(map: &Map<String, Value>, field: &'static str) -> Result<usize, SchemaError> {
    map.get(field)
        .and_then(Value::as_u64)
        .map(|v| v as usize)
        .ok_or(SchemaError::Field(field))
}

fn get_table(map: &Map<String, Value>, field: &'static str) -> Result<Vec<Vec<usize>>, SchemaError> {
    let rows = map
        .get(field)
        .and_then(Value::as_array)
        .ok_or(SchemaError::Field(field))?;
    rows.iter()
        .map(|row| {
            row.as_array()
                .ok_or(SchemaError::Field(field))?
                .iter()
                .map(|v| v.as_u64().map(|x| x as usize).ok_or(SchemaError::Field(field)))
                .collect()
        })
        .collect()
}

fn get_complex_list(
    map: &Map<String, Value>,
    field: &'static str,
) -> Result<Vec<Complex64>, SchemaError> {
    let list = map
        .get(field)
        .and_then(Value::as_array)
        .ok_or(SchemaError::Field(field))?;
    list.iter()
        .map(|pair| {
            let pair = pair.as_array().ok_or(SchemaError::Field(field))?;
            if pair.len() != 2 {
                return Err(SchemaError::Field(field));
            }
            let re = pair[0].as_f64().ok_or(SchemaError::Field(field))?;
            let im = pair[1].as_f64().ok_or(SchemaError::Field(field))?;
            Ok(Complex64::new(re, im))
        })
        .collect()
}

/// Parses an object file from JSON text.
pub fn from_json(text: &str) -> Result<ObjectFile, SchemaError> {
    let value: Value = serde_json::from_str(text)?;
    let map = value
        .as_object()
        .ok_or(SchemaError::Invalid("top level must be an object".into()))?;
    let origin = map
        .get("origin")
        .and_then(Value::as_str)
        .map(str::to_owned);
    let kind = map.get("kind").and_then(Value::as_str);
    let payload = match kind {
        Some("brace") => ObjectPayload::Brace {
            order: get_usize(map, "order")?,
            add: get_table(map, "add")?,
            circ: get_table(map, "circ")?,
        },
        Some("ring") => ObjectPayload::Ring {
            order: get_usize(map, "order")?,
            add: get_table(map, "add")?,
            mul: get_table(map, "mul")?,
        },
        Some("solution") => {
            let n = get_usize(map, "n")?;
            let pairs = map
                .get("r")
                .and_then(Value::as_array)
                .ok_or(SchemaError::Field("r"))?;
            let r = pairs
                .iter()
                .map(|p| {
                    let p = p.as_array().ok_or(SchemaError::Field("r"))?;
                    if p.len() != 2 {
                        return Err(SchemaError::Field("r"));
                    }
                    let k = p[0].as_u64().ok_or(SchemaError::Field("r"))? as usize;
                    let l = p[1].as_u64().ok_or(SchemaError::Field("r"))? as usize;
                    Ok((k, l))
                })
                .collect::<Result<Vec<_>, _>>()?;
            ObjectPayload::Solution { n, r }
        }
        Some("weights") => ObjectPayload::Weights {
            n: get_usize(map, "n")?,
            d: get_complex_list(map, "d")?,
        },
        Some("matrix") => {
            let rational = match map.get("rational") {
                None => None,
                Some(Value::Array(items)) => Some(
                    items
                        .iter()
                        .map(|v| {
                            v.as_str()
                                .map(str::to_owned)
                                .ok_or(SchemaError::Field("rational"))
                        })
                        .collect::<Result<Vec<_>, _>>()?,
                ),
                Some(_) => return Err(SchemaError::Field("rational")),
            };
            ObjectPayload::Matrix {
                rows: get_usize(map, "rows")?,
                cols: get_usize(map, "cols")?,
                entries: get_complex_list(map, "entries")?,
                rational,
            }
        }
        Some(other) => return Err(SchemaError::UnknownKind(other.to_owned())),
        None => {
            if map.contains_key("classes") {
                ObjectPayload::Partition {
                    classes: get_table(map, "classes")?,
                }
            } else {
                return Err(SchemaError::Field("kind"));
            }
        }
    };
    Ok(ObjectFile { payload, origin })
}

// conversions between payloads and the in-memory structures

pub fn brace_to_payload(brace: &FiniteBrace) -> ObjectPayload {
    ObjectPayload::Brace {
        order: brace.order(),
        add: brace.add_table().rows(),
        circ: brace.circ_table().rows(),
    }
}

pub fn ring_to_payload(ring: &FiniteRing) -> ObjectPayload {
    ObjectPayload::Ring {
        order: ring.order(),
        add: ring.add_table().rows(),
        mul: ring.mul_table().rows(),
    }
}

pub fn solution_to_payload(s: &SetSolution) -> ObjectPayload {
    ObjectPayload::Solution {
        n: s.n(),
        r: s.pairs().to_vec(),
    }
}

pub fn weights_to_payload(w: &WeightSystem) -> ObjectPayload {
    ObjectPayload::Weights {
        n: w.n(),
        d: w.values().to_vec(),
    }
}

pub fn matrix_to_payload(m: &CMatrix, rational: Option<Vec<String>>) -> ObjectPayload {
    ObjectPayload::Matrix {
        rows: m.rows(),
        cols: m.cols(),
        entries: m.entries().to_vec(),
        rational,
    }
}

pub fn payload_to_brace(payload: &ObjectPayload) -> Result<FiniteBrace, SchemaError> {
    let ObjectPayload::Brace { order, add, circ } = payload else {
        return Err(SchemaError::Invalid("not a brace object".into()));
    };
    if add.len() != *order || circ.len() != *order {
        return Err(SchemaError::Invalid("table order mismatch".into()));
    }
    let add = OpTable::from_rows(add).map_err(|e| SchemaError::Invalid(e.to_string()))?;
    let circ = OpTable::from_rows(circ).map_err(|e| SchemaError::Invalid(e.to_string()))?;
    FiniteBrace::new(add, circ).map_err(|e| SchemaError::Invalid(e.to_string()))
}

pub fn payload_to_ring(payload: &ObjectPayload) -> Result<FiniteRing, SchemaError> {
    let ObjectPayload::Ring { order, add, mul } = payload else {
        return Err(SchemaError::Invalid("not a ring object".into()));
    };
    if add.len() != *order || mul.len() != *order {
        return Err(SchemaError::Invalid("table order mismatch".into()));
    }
    let add = OpTable::from_rows(add).map_err(|e| SchemaError::Invalid(e.to_string()))?;
    let mul = OpTable::from_rows(mul).map_err(|e| SchemaError::Invalid(e.to_string()))?;
    FiniteRing::new(add, mul).map_err(|e| SchemaError::Invalid(e.to_string()))
}

pub fn payload_to_solution(payload: &ObjectPayload) -> Result<SetSolution, SchemaError> {
    let ObjectPayload::Solution { n, r } = payload else {
        return Err(SchemaError::Invalid("not a solution object".into()));
    };
    SetSolution::new(*n, r.clone()).map_err(|e| SchemaError::Invalid(e.to_string()))
}

pub fn payload_to_weights(payload: &ObjectPayload) -> Result<WeightSystem, SchemaError> {
    let ObjectPayload::Weights { n, d } = payload else {
        return Err(SchemaError::Invalid("not a weights object".into()));
    };
    WeightSystem::new(*n, d.clone()).map_err(|e| SchemaError::Invalid(e.to_string()))
}

pub fn payload_to_matrix(payload: &ObjectPayload) -> Result<CMatrix, SchemaError> {
    let ObjectPayload::Matrix {
        rows,
        cols,
        entries,
        ..
    } = payload
    else {
        return Err(SchemaError::Invalid("not a matrix object".into()));
    };
    CMatrix::new(*rows, *cols, entries.clone()).map_err(|e| SchemaError::Invalid(e.to_string()))
}
