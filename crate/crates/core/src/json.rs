//! JSON wire formats: algebra fragments, matrix files, decomposition and
//! triangular-factor certificates, law reports and search transcripts.
//!
//! Parse errors name the offending path element. Matrix entries are value
//! literals (strings, or exact JSON integers); non-integer JSON numbers are
//! rejected so no value ever passes through floating point.

use serde_json::{json, Map, Value as Json};

use crate::algebra::Incline;
use crate::cp::CpDecomposition;
use crate::error::{Error, Result};
use crate::factor::{TriMode, TriangularCertificate};
use crate::laws::LawReport;
use crate::matrix::Matrix;
use crate::oracle::{SearchOutcome, SearchTranscript};
use crate::value::Value;

fn err(path: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        path: path.to_string(),
        reason: reason.into(),
    }
}

fn as_object<'a>(v: &'a Json, path: &str) -> Result<&'a Map<String, Json>> {
    v.as_object().ok_or_else(|| err(path, "expected an object"))
}

fn as_array<'a>(v: &'a Json, path: &str) -> Result<&'a Vec<Json>> {
    v.as_array().ok_or_else(|| err(path, "expected an array"))
}

fn get<'a>(obj: &'a Map<String, Json>, key: &str, path: &str) -> Result<&'a Json> {
    obj.get(key)
        .ok_or_else(|| err(&format!("{path}.{key}"), "missing field"))
}

/// A literal: either a string in the carrier grammar or an exact integer.
fn literal_string(v: &Json, path: &str) -> Result<String> {
    match v {
        Json::String(s) => Ok(s.clone()),
        Json::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(i.to_string())
            } else {
                Err(err(
                    path,
                    "non-integer numbers lose exactness; write the value as a string literal",
                ))
            }
        }
        _ => Err(err(path, "expected a value literal")),
    }
}

fn parse_table(v: &Json, elements: &[String], path: &str) -> Result<Vec<Vec<usize>>> {
    let rows = as_array(v, path)?;
    let n = elements.len();
    if rows.len() != n {
        return Err(err(path, format!("expected {n} rows, got {}", rows.len())));
    }
    let mut out = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("{path}[{i}]");
        let cells = as_array(row, &row_path)?;
        if cells.len() != n {
            return Err(err(&row_path, format!("expected {n} entries")));
        }
        let mut parsed = Vec::with_capacity(n);
        for (j, cell) in cells.iter().enumerate() {
            let cell_path = format!("{row_path}[{j}]");
            let idx = match cell {
                Json::Number(num) => num
                    .as_u64()
                    .map(|u| u as usize)
                    .filter(|&u| u < n)
                    .ok_or_else(|| err(&cell_path, "table index out of range"))?,
                Json::String(name) => elements
                    .iter()
                    .position(|e| e == name)
                    .ok_or_else(|| err(&cell_path, format!("unknown element {name:?}")))?,
                _ => return Err(err(&cell_path, "expected an element name or index")),
            };
            parsed.push(idx);
        }
        out.push(parsed);
    }
    Ok(out)
}

fn parse_algebra_at(v: &Json, path: &str) -> Result<Incline> {
    let obj = as_object(v, path)?;
    let kind = get(obj, "kind", path)?
        .as_str()
        .ok_or_else(|| err(&format!("{path}.kind"), "expected a string"))?;
    match kind {
        "boolean" => Ok(Incline::boolean()),
        "maxmin" => Ok(Incline::max_min()),
        "maxplus" => Ok(Incline::max_plus()),
        "maxtimes" => Ok(Incline::max_times()),
        "chain" => {
            let size = get(obj, "size", path)?
                .as_u64()
                .ok_or_else(|| err(&format!("{path}.size"), "expected a positive integer"))?;
            Incline::chain(size)
        }
        "lattice" => {
            let elements_path = format!("{path}.elements");
            let elements: Vec<String> = as_array(get(obj, "elements", path)?, &elements_path)?
                .iter()
                .enumerate()
                .map(|(i, e)| literal_string(e, &format!("{elements_path}[{i}]")))
                .collect::<Result<_>>()?;
            let join = parse_table(get(obj, "join", path)?, &elements, &format!("{path}.join"))?;
            let meet = parse_table(get(obj, "meet", path)?, &elements, &format!("{path}.meet"))?;
            Incline::lattice(elements, join, meet)
        }
        other => Err(err(
            &format!("{path}.kind"),
            format!("unknown algebra kind {other:?}"),
        )),
    }
}

/// Parse an algebra fragment: `{"kind": ..., "size": ..., "elements": ...,
/// "join": ..., "meet": ...}`.
pub fn parse_algebra(v: &Json) -> Result<Incline> {
    parse_algebra_at(v, "incline")
}

fn parse_grid(alg: &Incline, v: &Json, path: &str) -> Result<Vec<Vec<Value>>> {
    let rows = as_array(v, path)?;
    if rows.is_empty() {
        return Err(err(path, "matrix has no rows"));
    }
    let mut out = Vec::with_capacity(rows.len());
    for (i, row) in rows.iter().enumerate() {
        let row_path = format!("{path}[{i}]");
        let cells = as_array(row, &row_path)?;
        let mut parsed = Vec::with_capacity(cells.len());
        for (j, cell) in cells.iter().enumerate() {
            let cell_path = format!("{row_path}[{j}]");
            let lit = literal_string(cell, &cell_path)?;
            let value = alg
                .parse_value(&lit)
                .map_err(|e| err(&cell_path, e.to_string()))?;
            parsed.push(value);
        }
        out.push(parsed);
    }
    Ok(out)
}

/// Parse a matrix file: `{"incline": <fragment>, "matrix": [[literal, ...], ...]}`.
pub fn parse_matrix_json(v: &Json) -> Result<Matrix> {
    let obj = as_object(v, "")?;
    let alg = parse_algebra_at(
        obj.get("incline")
            .ok_or_else(|| err("incline", "missing field"))?,
        "incline",
    )?;
    let grid = parse_grid(
        &alg,
        obj.get("matrix")
            .ok_or_else(|| err("matrix", "missing field"))?,
        "matrix",
    )?;
    Matrix::from_rows(alg, grid).map_err(|e| err("matrix", e.to_string()))
}

pub fn parse_matrix_str(s: &str) -> Result<Matrix> {
    let v: Json = serde_json::from_str(s).map_err(|e| err("", format!("malformed JSON: {e}")))?;
    parse_matrix_json(&v)
}

fn grid_to_json(
    alg: &Incline,
    rows: usize,
    cols: usize,
    get: impl Fn(usize, usize) -> Value,
) -> Json {
    Json::Array(
        (0..rows)
            .map(|i| {
                Json::Array(
                    (0..cols)
                        .map(|j| Json::String(alg.format_value(&get(i, j))))
                        .collect(),
                )
            })
            .collect(),
    )
}

pub fn matrix_to_json(m: &Matrix) -> Json {
    grid_to_json(m.algebra(), m.rows(), m.cols(), |i, j| m.get(i, j).clone())
}

/// Serialize a decomposition certificate:
/// `{"n": ..., "permutation": [...], "factors": [[literal, ...], ...], "supports": [...]}`.
pub fn decomposition_to_json(dec: &CpDecomposition) -> Json {
    json!({
        "n": dec.n,
        "permutation": dec.permutation,
        "factors": dec
            .factors
            .iter()
            .map(|f| Json::Array(
                f.iter()
                    .map(|v| Json::String(dec.algebra.format_value(v)))
                    .collect()
            ))
            .collect::<Vec<_>>(),
        "supports": dec.supports,
    })
}

/// Parse a decomposition certificate against a known algebra.
pub fn parse_decomposition_json(alg: &Incline, v: &Json) -> Result<CpDecomposition> {
    let obj = as_object(v, "certificate")?;
    let n = get(obj, "n", "certificate")?
        .as_u64()
        .ok_or_else(|| err("certificate.n", "expected a positive integer"))? as usize;
    let factors_json = as_array(get(obj, "factors", "certificate")?, "certificate.factors")?;
    let mut factors = Vec::with_capacity(factors_json.len());
    for (fi, f) in factors_json.iter().enumerate() {
        let fpath = format!("certificate.factors[{fi}]");
        let cells = as_array(f, &fpath)?;
        if cells.len() != n {
            return Err(err(&fpath, format!("expected {n} entries")));
        }
        let mut vec = Vec::with_capacity(n);
        for (j, cell) in cells.iter().enumerate() {
            let cpath = format!("{fpath}[{j}]");
            let lit = literal_string(cell, &cpath)?;
            let value = alg
                .parse_value(&lit)
                .map_err(|e| err(&cpath, e.to_string()))?;
            vec.push(value);
        }
        factors.push(vec);
    }
    let supports: Vec<usize> =
        as_array(get(obj, "supports", "certificate")?, "certificate.supports")?
            .iter()
            .enumerate()
            .map(|(i, s)| {
                s.as_u64().map(|u| u as usize).ok_or_else(|| {
                    err(&format!("certificate.supports[{i}]"), "expected an integer")
                })
            })
            .collect::<Result<_>>()?;
    if supports.len() != factors.len() {
        return Err(err(
            "certificate.supports",
            "length differs from the factor list",
        ));
    }
    let permutation: Vec<usize> = as_array(
        get(obj, "permutation", "certificate")?,
        "certificate.permutation",
    )?
    .iter()
    .enumerate()
    .map(|(i, p)| {
        p.as_u64().map(|u| u as usize).ok_or_else(|| {
            err(
                &format!("certificate.permutation[{i}]"),
                "expected an integer",
            )
        })
    })
    .collect::<Result<_>>()?;
    {
        let mut sorted = permutation.clone();
        sorted.sort_unstable();
        if sorted != (1..=n).collect::<Vec<_>>() {
            return Err(err(
                "certificate.permutation",
                format!("not a permutation of 1..={n}"),
            ));
        }
    }
    Ok(CpDecomposition {
        algebra: alg.clone(),
        n,
        factors,
        supports,
        permutation,
    })
}

/// Serialize a triangular certificate: `{"mode": "UL"|"LU", "factor": [[...], ...]}`.
pub fn triangular_to_json(cert: &TriangularCertificate) -> Json {
    json!({
        "mode": cert.mode.as_str(),
        "factor": matrix_to_json(&cert.factor),
    })
}

/// Parse a triangular certificate against a known algebra.
pub fn parse_triangular_json(alg: &Incline, v: &Json) -> Result<TriangularCertificate> {
    let obj = as_object(v, "certificate")?;
    let mode = match get(obj, "mode", "certificate")?.as_str() {
        Some("UL") => TriMode::Ul,
        Some("LU") => TriMode::Lu,
        _ => return Err(err("certificate.mode", "expected \"UL\" or \"LU\"")),
    };
    let grid = parse_grid(
        alg,
        get(obj, "factor", "certificate")?,
        "certificate.factor",
    )?;
    let factor = Matrix::from_rows(alg.clone(), grid)
        .map_err(|e| err("certificate.factor", e.to_string()))?;
    Ok(TriangularCertificate { mode, factor })
}

/// Whether a certificate JSON is a triangular factor (`{"mode": ...}`) or a
/// decomposition (`{"factors": ...}`).
pub fn certificate_kind(v: &Json) -> Result<&'static str> {
    let obj = as_object(v, "certificate")?;
    if obj.contains_key("mode") {
        Ok("triangular")
    } else if obj.contains_key("factors") {
        Ok("decomposition")
    } else {
        Err(err(
            "certificate",
            "neither a triangular factor (\"mode\") nor a decomposition (\"factors\")",
        ))
    }
}

pub fn law_report_to_json(r: &LawReport) -> Json {
    json!({
        "carrier": r.carrier,
        "mode": r.mode,
        "all_pass": r.all_pass(),
        "laws": r
            .checks
            .iter()
            .map(|c| {
                json!({
                    "law": c.law,
                    "cases": c.cases,
                    "pass": c.pass,
                    "counterexample": c.counterexample,
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn transcript_to_json(t: &SearchTranscript) -> Json {
    let alg = &t.algebra;
    let mut obj = json!({
        "carrier_size": t.carrier.len(),
        "carrier_truncated": t.carrier_truncated,
        "widths_tried": t.widths_tried,
        "outcome": match t.outcome {
            SearchOutcome::Found { width } => json!({"found": {"width": width}}),
            SearchOutcome::Exhausted => json!("exhausted"),
            SearchOutcome::BudgetExceeded => json!("budget-exceeded"),
        },
        "nodes_explored": t.nodes_explored,
    });
    let map = obj.as_object_mut().unwrap();
    if t.carrier.len() <= 64 {
        map.insert(
            "carrier".to_string(),
            Json::Array(
                t.carrier
                    .iter()
                    .map(|v| Json::String(alg.format_value(v)))
                    .collect(),
            ),
        );
    }
    if let Some(w) = &t.witness {
        map.insert(
            "witness".to_string(),
            Json::Array(
                w.iter()
                    .map(|f| {
                        Json::Array(
                            f.iter()
                                .map(|v| Json::String(alg.format_value(v)))
                                .collect(),
                        )
                    })
                    .collect(),
            ),
        );
    }
    obj
}
