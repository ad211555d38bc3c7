//! JSON interchange formats.
//!
//! Matrices are `{"dim": d, "entries": [["p/q", "p", …], …]}` with row-major
//! entries. Semigroups are read as `{"generators": [n₁, …]}` and written with
//! their derived invariants; the Frobenius number of ℕ is `-1`.

use serde::Deserialize;
use serde_json::{json, Value};

use crate::bounds::DimensionBounds;
use crate::construct::{ConstructionResult, SuperdiagonalVector};
use crate::error::{Error, Result};
use crate::exponent::ExponentAnalysis;
use crate::integrality::{IntegralSimilarity, TfaeReport};
use crate::matrix::{IntMatrix, RationalMatrix};
use crate::poly::Polynomial;
use crate::rational::{format_rational, parse_rational};
use crate::semigroup::SubsemigroupDesc;

#[derive(Deserialize)]
struct MatrixFile {
    dim: usize,
    entries: Vec<Vec<Value>>,
}

pub fn matrix_from_json(text: &str) -> Result<RationalMatrix> {
    let file: MatrixFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    matrix_from_parts(file.dim, &file.entries)
}

pub fn matrix_from_value(value: &Value) -> Result<RationalMatrix> {
    let file: MatrixFile =
        serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("matrix JSON: {e}")))?;
    matrix_from_parts(file.dim, &file.entries)
}

fn matrix_from_parts(dim: usize, rows: &[Vec<Value>]) -> Result<RationalMatrix> {
    if dim == 0 {
        return Err(Error::Parse("dim must be at least 1".into()));
    }
    if rows.len() != dim {
        return Err(Error::Parse(format!("expected {dim} rows, found {}", rows.len())));
    }
    let mut entries = Vec::with_capacity(dim * dim);
    for (r, row) in rows.iter().enumerate() {
        if row.len() != dim {
            return Err(Error::Parse(format!("row {r}: expected {dim} entries, found {}", row.len())));
        }
        for (c, cell) in row.iter().enumerate() {
            let text = match cell {
                Value::String(s) => s.clone(),
                Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
                other => return Err(Error::Parse(format!("row {r}, col {c}: expected a rational string, got {other}"))),
            };
            let value = parse_rational(&text).map_err(|e| match e {
                Error::ZeroDenominator(t) => Error::Parse(format!("row {r}, col {c}: zero denominator in {t:?}")),
                other => Error::Parse(format!("row {r}, col {c}: {other}")),
            })?;
            entries.push(value);
        }
    }
    RationalMatrix::new(dim, entries)
}

pub fn matrix_to_value(a: &RationalMatrix) -> Value {
    let rows: Vec<Vec<String>> = a.rows().map(|row| row.iter().map(format_rational).collect()).collect();
    json!({ "dim": a.dim(), "entries": rows })
}

pub fn matrix_to_json(a: &RationalMatrix) -> String {
    serde_json::to_string_pretty(&matrix_to_value(a)).expect("serializable")
}

pub fn int_matrix_to_value(m: &IntMatrix) -> Value {
    matrix_to_value(&m.to_rational())
}

pub fn polynomial_to_value(p: &Polynomial) -> Value {
    let coeffs: Vec<String> = p.coeffs().iter().map(format_rational).collect();
    json!({ "coefficients": coeffs, "display": p.to_string() })
}

#[derive(Deserialize)]
struct SemigroupFile {
    generators: Vec<u64>,
}

/// `{"generators": [...]}`; an empty list or `[0]` means `{0}`.
pub fn semigroup_from_json(text: &str) -> Result<SubsemigroupDesc> {
    let file: SemigroupFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("semigroup JSON: {e}")))?;
    let gens: Vec<u64> = file.generators.into_iter().filter(|&g| g != 0).collect();
    if gens.is_empty() {
        Ok(SubsemigroupDesc::trivial())
    } else {
        SubsemigroupDesc::from_generators(&gens)
    }
}

pub fn semigroup_to_value(s: &SubsemigroupDesc) -> Value {
    let gens = s.minimal_generators();
    let numerical = s.is_numerical();
    let data = s.numerical_part();
    let mut v = json!({
        "generators": gens,
        "kind": s.kind(),
        "content": s.content(),
        "frobenius": s.frobenius(),
        "gaps": if numerical { data.map(|d| d.gaps().to_vec()) } else { None },
        "minimal_generators": gens,
        "multiplicity": s.multiplicity(),
        "embedding_dimension": if s.content().is_some() { Some(gens.len()) } else { None },
        "symmetric": s.is_symmetric().ok(),
        "pseudosymmetric": s.is_pseudosymmetric().ok(),
    });
    if !numerical {
        if let Some(d) = data {
            v["numerical_part"] = json!({
                "minimal_generators": d.minimal_generators(),
                "frobenius": d.frobenius(),
                "gaps": d.gaps(),
            });
        }
    }
    v
}

pub fn similarity_to_value(sim: &IntegralSimilarity) -> Value {
    json!({ "s": int_matrix_to_value(&sim.s), "b": int_matrix_to_value(&sim.b) })
}

pub fn tfae_to_value(r: &TfaeReport) -> Value {
    json!({
        "char_poly": polynomial_to_value(&r.char_poly),
        "min_poly": polynomial_to_value(&r.min_poly),
        "char_poly_integral": r.char_poly_integral,
        "min_poly_integral": r.min_poly_integral,
        "uniform_denominator": r.uniform_denominator.as_ref().map(|m| m.to_string()),
        "similarity": r.similarity.as_ref().map(similarity_to_value),
        "trace_integral_upto": r.trace_integral_upto,
        "trace_bound": r.trace_bound,
        "verdict": r.verdict,
        "witnesses": r.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
    })
}

pub fn analysis_to_value(a: &ExponentAnalysis) -> Value {
    let prefix: String = a.membership_prefix.iter().map(|&b| if b { '1' } else { '0' }).collect();
    json!({
        "classification": semigroup_to_value(&a.classification),
        "char_poly": polynomial_to_value(&a.char_poly),
        "uniform_denominator": a.uniform_denominator.as_ref().map(|m| m.to_string()),
        "preperiod": a.preperiod,
        "period": a.period,
        "membership_prefix": prefix,
        "early_exit": a.early_exit,
        "certificates": a.certificates.iter().map(|(n, ok)| json!({"n": n, "integral": ok})).collect::<Vec<_>>(),
        "final": a.is_final,
    })
}

pub fn vector_to_value(v: &SuperdiagonalVector) -> Value {
    json!({ "entries": v.entries(), "base": v.base(), "target": v.target().minimal_generators() })
}

pub fn construction_to_value(c: &ConstructionResult) -> Value {
    json!({
        "matrix": matrix_to_value(&c.matrix),
        "vector": c.vector.as_ref().map(vector_to_value),
        "claimed_semigroup": semigroup_to_value(&c.claimed),
        "verified": c.verified,
    })
}

pub fn bounds_to_value(b: &DimensionBounds) -> Value {
    serde_json::to_value(b).expect("serializable")
}
