//! JSON encodings of scalars, polynomials, matrices, prescriptions and reports.
//!
//! Rationals are strings `"p/q"` (integers may also be given as JSON numbers on
//! input), polynomials are ascending coefficient arrays or factored objects
//! `{leading, factors: [[root, mult], …], cofactor}`, and matrices are
//! `{m, n, entries}` with row-major entries.

use serde_json::{json, Map, Value};

use crate::error::{Error, Result};
use crate::matrix::{PolyMatrix, RationalMatrix};
use crate::poly::{format_rat, parse_rat, split_over_rationals, FactoredPoly, Poly, Rat, RatFn};
use crate::structure::{local_structure, LocalStructure, PolyStructuralData, RatStructuralData, Realization, VerifyReport};
use crate::synth::{FeasibilityReport, Invariants, Prescription, SpanData, Variant};

pub const TOOL: &str = "structura";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn rat_to_json(x: &Rat) -> Value {
    Value::String(format_rat(x))
}

pub fn rat_from_json(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(crate::poly::rat(i)),
            None => parse_rat(&n.to_string()),
        },
        _ => Err(parse_err(format!("expected a rational number, got {v}"))),
    }
}

pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_to_json).collect())
}

pub fn factored_to_json(p: &FactoredPoly) -> Value {
    json!({
        "leading": rat_to_json(&p.leading),
        "factors": p.linear_factors.iter().map(|(root, m)| json!([rat_to_json(root), m])).collect::<Vec<_>>(),
        "cofactor": poly_to_json(&p.cofactor),
    })
}

/// Coefficient array or factored object.
pub fn poly_from_json(v: &Value) -> Result<Poly> {
    match v {
        Value::Array(cs) => Ok(Poly::from_coeffs(cs.iter().map(rat_from_json).collect::<Result<_>>()?)),
        Value::Object(obj) => {
            for key in obj.keys() {
                if !["leading", "factors", "cofactor"].contains(&key.as_str()) {
                    return Err(parse_err(format!("unknown key {key:?} in factored polynomial")));
                }
            }
            let leading = obj.get("leading").map(rat_from_json).transpose()?.unwrap_or_else(|| crate::poly::rat(1));
            let mut roots = Vec::new();
            for f in obj.get("factors").map(as_array).transpose()?.unwrap_or(&[]) {
                match f.as_array().map(Vec::as_slice) {
                    Some([root, m]) => roots.push((rat_from_json(root)?, as_usize(m)?)),
                    _ => return Err(parse_err(format!("factor must be [root, multiplicity], got {f}"))),
                }
            }
            let cofactor = obj.get("cofactor").map(poly_from_json).transpose()?.unwrap_or_else(Poly::one);
            let mut fp = FactoredPoly::from_roots(roots);
            fp.leading = leading;
            fp.cofactor = cofactor;
            Ok(fp.expand())
        }
        _ => Err(parse_err(format!("expected a polynomial, got {v}"))),
    }
}

fn as_array(v: &Value) -> Result<&[Value]> {
    v.as_array().map(Vec::as_slice).ok_or_else(|| parse_err(format!("expected an array, got {v}")))
}

fn as_usize(v: &Value) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| parse_err(format!("expected a non-negative integer, got {v}")))
}

fn as_i64(v: &Value) -> Result<i64> {
    v.as_i64().ok_or_else(|| parse_err(format!("expected an integer, got {v}")))
}

fn usize_list(v: &Value) -> Result<Vec<usize>> {
    as_array(v)?.iter().map(as_usize).collect()
}

fn i64_list(v: &Value) -> Result<Vec<i64>> {
    as_array(v)?.iter().map(as_i64).collect()
}

fn poly_list(v: &Value) -> Result<Vec<Poly>> {
    as_array(v)?.iter().map(poly_from_json).collect()
}

fn matrix_json<T>(rows: usize, cols: usize, entries: &[T], f: impl Fn(&T) -> Value) -> Value {
    let rows_json: Vec<Value> = (0..rows).map(|i| Value::Array(entries[i * cols..(i + 1) * cols].iter().map(&f).collect())).collect();
    json!({ "m": rows, "n": cols, "entries": rows_json })
}

pub fn poly_matrix_to_json(p: &PolyMatrix) -> Value {
    matrix_json(p.rows(), p.cols(), p.entries(), poly_to_json)
}

pub fn rational_matrix_to_json(r: &RationalMatrix) -> Value {
    matrix_json(r.rows(), r.cols(), r.entries(), |e| json!({ "num": poly_to_json(e.num()), "den": poly_to_json(e.den()) }))
}

pub fn realization_to_json(r: &Realization) -> Value {
    match r {
        Realization::Poly(p) => poly_matrix_to_json(p),
        Realization::Rational(r) => rational_matrix_to_json(r),
    }
}

/// Entries as rows of entries, or as one flat row-major list.
fn matrix_entries(v: &Value) -> Result<(usize, usize, Vec<Value>)> {
    let obj = v.as_object().ok_or_else(|| parse_err("a matrix must be an object {m, n, entries}"))?;
    let get = |k: &str| obj.get(k).ok_or_else(|| parse_err(format!("matrix is missing {k:?}")));
    let (m, n) = (as_usize(get("m")?)?, as_usize(get("n")?)?);
    let raw = as_array(get("entries")?)?;
    let nested = raw.first().and_then(Value::as_array).and_then(|row| row.first()).is_some_and(|e| e.is_array() || e.is_object());
    let flat: Vec<Value> = if nested || (n == 0 && raw.len() == m) {
        if raw.len() != m {
            return Err(parse_err(format!("expected {m} rows, got {}", raw.len())));
        }
        let mut out = Vec::with_capacity(m * n);
        for (i, row) in raw.iter().enumerate() {
            let row = as_array(row)?;
            if row.len() != n {
                return Err(parse_err(format!("row {} has {} entries, expected {n}", i + 1, row.len())));
            }
            out.extend(row.iter().cloned());
        }
        out
    } else {
        if raw.len() != m * n {
            return Err(parse_err(format!("expected {} entries, got {}", m * n, raw.len())));
        }
        raw.to_vec()
    };
    Ok((m, n, flat))
}

pub fn poly_matrix_from_json(v: &Value) -> Result<PolyMatrix> {
    let (m, n, flat) = matrix_entries(v)?;
    Ok(PolyMatrix::from_entries(m, n, flat.iter().map(poly_from_json).collect::<Result<_>>()?))
}

/// Polynomial matrix, or rational when any entry is a `{num, den}` object.
pub fn matrix_from_json(v: &Value) -> Result<Realization> {
    let (m, n, flat) = matrix_entries(v)?;
    if !flat.iter().any(|e| e.get("num").is_some() || e.get("den").is_some()) {
        return Ok(Realization::Poly(PolyMatrix::from_entries(m, n, flat.iter().map(poly_from_json).collect::<Result<_>>()?)));
    }
    let entries = flat
        .iter()
        .map(|e| match e.get("num") {
            Some(num) => {
                let den = e.get("den").map(poly_from_json).transpose()?.unwrap_or_else(Poly::one);
                RatFn::new(poly_from_json(num)?, den)
            }
            None => Ok(RatFn::from_poly(poly_from_json(e)?)),
        })
        .collect::<Result<_>>()?;
    Ok(Realization::Rational(RationalMatrix::from_entries(m, n, entries)))
}

const PRESCRIPTION_KEYS: [&str; 17] =
    ["variant", "m", "n", "r", "d", "alpha", "f", "eps", "psi", "q", "k", "l", "right", "left", "K", "Lt", "comment"];

pub fn prescription_from_json(v: &Value) -> Result<Prescription> {
    let obj: &Map<String, Value> = v.as_object().ok_or_else(|| parse_err("a prescription must be an object"))?;
    if let Some(key) = obj.keys().find(|k| !PRESCRIPTION_KEYS.contains(&k.as_str())) {
        return Err(parse_err(format!("unknown prescription field {key:?}")));
    }
    let get = |k: &str| obj.get(k).ok_or_else(|| parse_err(format!("prescription is missing {k:?}")));
    let name = get("variant")?.as_str().ok_or_else(|| parse_err("variant must be a string"))?;
    let variant = Variant::from_name(name).ok_or_else(|| parse_err(format!("unknown variant {name:?}")))?;
    let invariants = if variant.is_rational() {
        Invariants::Rational { eps: poly_list(get("eps")?)?, psi: poly_list(get("psi")?)?, q: i64_list(get("q")?)? }
    } else {
        Invariants::Polynomial { degree: as_i64(get("d")?)?, alpha: poly_list(get("alpha")?)?, f: usize_list(get("f")?)? }
    };
    let span = if variant.has_bases() {
        SpanData::Bases { k: poly_matrix_from_json(get("K")?)?, lt: poly_matrix_from_json(get("Lt")?)? }
    } else if variant.has_span_indices() {
        SpanData::Indices { k: usize_list(get("k")?)?, l: usize_list(get("l")?)? }
    } else {
        SpanData::Absent
    };
    let list_or_empty = |k: &str| obj.get(k).map(usize_list).transpose().map(Option::unwrap_or_default);
    let p = Prescription {
        variant,
        m: as_usize(get("m")?)?,
        n: as_usize(get("n")?)?,
        r: as_usize(get("r")?)?,
        invariants,
        span,
        right: list_or_empty("right")?,
        left: list_or_empty("left")?,
    };
    p.validate()?;
    Ok(p)
}

pub fn prescription_to_json(p: &Prescription) -> Value {
    let mut obj = Map::new();
    obj.insert("variant".into(), json!(p.variant.name()));
    obj.insert("m".into(), json!(p.m));
    obj.insert("n".into(), json!(p.n));
    obj.insert("r".into(), json!(p.r));
    let polys = |ps: &[Poly]| Value::Array(ps.iter().map(poly_to_json).collect());
    match &p.invariants {
        Invariants::Polynomial { degree, alpha, f } => {
            obj.insert("d".into(), json!(degree));
            obj.insert("alpha".into(), polys(alpha));
            obj.insert("f".into(), json!(f));
        }
        Invariants::Rational { eps, psi, q } => {
            obj.insert("eps".into(), polys(eps));
            obj.insert("psi".into(), polys(psi));
            obj.insert("q".into(), json!(q));
        }
    }
    match &p.span {
        SpanData::Bases { k, lt } => {
            obj.insert("K".into(), poly_matrix_to_json(k));
            obj.insert("Lt".into(), poly_matrix_to_json(lt));
        }
        SpanData::Indices { k, l } => {
            obj.insert("k".into(), json!(k));
            obj.insert("l".into(), json!(l));
        }
        SpanData::Absent => {}
    }
    if p.variant.has_null_indices() {
        obj.insert("right".into(), json!(p.right));
        obj.insert("left".into(), json!(p.left));
    }
    Value::Object(obj)
}

fn header(kind: &str) -> Map<String, Value> {
    let mut obj = Map::new();
    obj.insert("tool".into(), json!(TOOL));
    obj.insert("version".into(), json!(VERSION));
    obj.insert("kind".into(), json!(kind));
    obj
}

fn local_json(ls: &LocalStructure) -> Value {
    json!({
        "roots": ls.roots.iter().map(|b| json!({ "root": rat_to_json(&b.at), "exponents": b.exponents })).collect::<Vec<_>>(),
        "cofactor_blocks": ls
            .cofactor_blocks
            .iter()
            .map(|b| json!({ "block": poly_to_json(&b.at), "exponents": b.exponents }))
            .collect::<Vec<_>>(),
    })
}

fn identity_json(label: &str, lhs: i64, rhs: i64) -> (String, Value) {
    (label.to_string(), json!({ "lhs": lhs, "rhs": rhs, "pass": lhs == rhs }))
}

fn factored_list(ps: &[Poly]) -> Value {
    Value::Array(ps.iter().map(|p| factored_to_json(&split_over_rationals(p))).collect())
}

fn bases_json(col: &PolyMatrix, row: &PolyMatrix, right: &PolyMatrix, left: &PolyMatrix) -> Value {
    json!({
        "colspan": poly_matrix_to_json(col),
        "rowspan": poly_matrix_to_json(row),
        "right_null": poly_matrix_to_json(right),
        "left_null": poly_matrix_to_json(left),
    })
}

pub fn poly_structure_report(sd: &PolyStructuralData) -> Value {
    let mut obj = header("polynomial_structure");
    obj.insert("m".into(), json!(sd.m));
    obj.insert("n".into(), json!(sd.n));
    obj.insert("rank".into(), json!(sd.rank));
    obj.insert("degree".into(), json!(sd.degree));
    obj.insert("invariant_factors".into(), Value::Array(sd.invariant_factors.iter().map(poly_to_json).collect()));
    obj.insert("invariant_factors_factored".into(), factored_list(&sd.invariant_factors));
    obj.insert("inf_partial_mults".into(), json!(sd.inf_partial_mults));
    obj.insert("inf_orders".into(), json!(sd.inf_orders));
    obj.insert("colspan_indices".into(), json!(sd.colspan_indices));
    obj.insert("rowspan_indices".into(), json!(sd.rowspan_indices));
    obj.insert("right_indices".into(), json!(sd.right_indices));
    obj.insert("left_indices".into(), json!(sd.left_indices));
    obj.insert("bases".into(), bases_json(&sd.colspan_basis, &sd.rowspan_basis, &sd.right_null_basis, &sd.left_null_basis));
    let ones = vec![Poly::one(); sd.invariant_factors.len()];
    obj.insert("local_structure".into(), local_json(&local_structure(&sd.invariant_factors, &ones)));
    let ids: Map<String, Value> = sd.identities().iter().map(|c| identity_json(c.label, c.lhs, c.rhs)).collect();
    obj.insert("identities".into(), Value::Object(ids));
    Value::Object(obj)
}

pub fn rational_structure_report(sd: &RatStructuralData) -> Value {
    let mut obj = header("rational_structure");
    obj.insert("m".into(), json!(sd.m));
    obj.insert("n".into(), json!(sd.n));
    obj.insert("rank".into(), json!(sd.rank));
    obj.insert("clearing_denominator".into(), poly_to_json(&sd.clearing_denominator));
    obj.insert("numerators".into(), Value::Array(sd.numerators.iter().map(poly_to_json).collect()));
    obj.insert("denominators".into(), Value::Array(sd.denominators.iter().map(poly_to_json).collect()));
    obj.insert("numerators_factored".into(), factored_list(&sd.numerators));
    obj.insert("denominators_factored".into(), factored_list(&sd.denominators));
    obj.insert("inf_orders".into(), json!(sd.inf_orders));
    obj.insert("colspan_indices".into(), json!(sd.colspan_indices));
    obj.insert("rowspan_indices".into(), json!(sd.rowspan_indices));
    obj.insert("right_indices".into(), json!(sd.right_indices));
    obj.insert("left_indices".into(), json!(sd.left_indices));
    obj.insert("bases".into(), bases_json(&sd.colspan_basis, &sd.rowspan_basis, &sd.right_null_basis, &sd.left_null_basis));
    obj.insert("local_structure".into(), local_json(&local_structure(&sd.numerators, &sd.denominators)));
    let total = |xs: &[usize]| xs.iter().sum::<usize>() as i64;
    let finite: i64 = sd.numerators.iter().map(Poly::deg).sum::<i64>() - sd.denominators.iter().map(Poly::deg).sum::<i64>();
    let q: i64 = sd.inf_orders.iter().sum();
    let ids: Map<String, Value> = [
        identity_json("eqsums_left", total(&sd.left_indices), total(&sd.colspan_indices)),
        identity_json("eqsums_right", total(&sd.right_indices), total(&sd.rowspan_indices)),
        identity_json("eqsumklfa", total(&sd.colspan_indices) + total(&sd.rowspan_indices) + finite + q, 0),
        identity_json("eqIST", total(&sd.right_indices) + total(&sd.left_indices) + finite + q, 0),
    ]
    .into_iter()
    .collect();
    obj.insert("identities".into(), Value::Object(ids));
    Value::Object(obj)
}

pub fn feasibility_report_json(r: &FeasibilityReport) -> Value {
    let mut obj = header("feasibility");
    obj.insert("variant".into(), json!(r.variant.name()));
    obj.insert("feasible".into(), json!(r.feasible));
    obj.insert("g_sequence".into(), json!(r.g_sequence));
    let conds: Map<String, Value> = r
        .conditions
        .iter()
        .map(|(c, res)| (c.label().to_string(), json!({ "verdict": res.verdict.label(), "lhs": res.lhs, "rhs": res.rhs })))
        .collect();
    obj.insert("conditions".into(), Value::Object(conds));
    obj.insert("failing".into(), json!(r.failing().iter().map(|c| c.label()).collect::<Vec<_>>()));
    Value::Object(obj)
}

pub fn verify_report_json(r: &VerifyReport) -> Value {
    let mut obj = header("verification");
    obj.insert("pass".into(), json!(r.pass));
    let ms: Vec<Value> =
        r.mismatches.iter().map(|m| json!({ "field": m.field, "expected": m.expected, "found": m.found })).collect();
    obj.insert("mismatches".into(), Value::Array(ms));
    Value::Object(obj)
}

pub fn construction_json(p: &Prescription, matrix: &Realization, seed: u64, verification: Option<&VerifyReport>) -> Value {
    let mut obj = header("construction");
    obj.insert("variant".into(), json!(p.variant.name()));
    obj.insert("seed".into(), json!(seed));
    obj.insert("matrix".into(), realization_to_json(matrix));
    obj.insert("verification".into(), verification.map_or(Value::Null, verify_report_json));
    Value::Object(obj)
}

/// The `matrix` member of a construction report, or the value itself.
pub fn unwrap_matrix(v: &Value) -> &Value {
    match v.get("kind").and_then(Value::as_str) {
        Some("construction") => v.get("matrix").unwrap_or(v),
        _ => v,
    }
}

/// Deterministic pretty text with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

pub fn parse_text(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(e.to_string()))
}
