//! JSON encoding of algebras, representations and reports.
//!
//! Scalars are strings `"p/q"` (or `"p"` when `q = 1`); plain JSON integers
//! are accepted on input. Matrices are row-major nested arrays. Every emitted
//! document carries `"schema": "leibniz-kit/1"`; on input the field is
//! optional but must match when present.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::cohomology::{BettiReport, Representation};
use crate::error::{Error, Result};
use crate::leibniz::LeibnizAlgebra;
use crate::lie2::{AxiomReport, Lie2Algebra};
use crate::linalg::Matrix;
use crate::naive::{ComparisonReport, NaiveRepresentation};
use crate::omni::GraphMap;
use crate::report::IdentityReport;
use crate::scalar::Rational;

pub const SCHEMA: &str = "leibniz-kit/1";

/// Canonical text form of a rational.
pub fn format_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `"p"` or `"p/q"` with optional surrounding whitespace.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Input(format!("not a rational number: {s:?}"));
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| bad())?;
    let den = BigInt::from_str(den).map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Input(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Serde wrapper around [`Rational`] using the text encoding.
#[derive(Clone, Debug, PartialEq)]
pub struct Scalar(pub Rational);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ScalarVisitor;

        impl<'de> Visitor<'de> for ScalarVisitor {
            type Value = Scalar;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("a rational as \"p/q\" or an integer")
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Scalar, E> {
                parse_rational(v).map(Scalar).map_err(E::custom)
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(Rational::from_integer(v.into())))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Scalar, E> {
                Ok(Scalar(Rational::from_integer(v.into())))
            }
        }

        deserializer.deserialize_any(ScalarVisitor)
    }
}

type Vector = Vec<Scalar>;
type Rows = Vec<Vector>;

fn vector(v: &[Rational]) -> Vector {
    v.iter().cloned().map(Scalar).collect()
}

fn unwrap_vector(v: Vector) -> Vec<Rational> {
    v.into_iter().map(|s| s.0).collect()
}

fn matrix_rows(m: &Matrix<Rational>) -> Rows {
    (0..m.rows()).map(|i| vector(m.row(i))).collect()
}

fn matrix_from_rows(rows: Rows, n_rows: usize, n_cols: usize, what: &str) -> Result<Matrix<Rational>> {
    if rows.len() != n_rows {
        return Err(Error::Input(format!("{what}: expected {n_rows} rows, got {}", rows.len())));
    }
    let rows: Vec<Vec<Rational>> = rows.into_iter().map(unwrap_vector).collect();
    if let Some((i, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n_cols) {
        return Err(Error::Input(format!(
            "{what}: row {i} has {} entries, expected {n_cols}",
            r.len()
        )));
    }
    Matrix::from_rows(n_cols, rows)
}

/// Nested arrays of the given shape, last axis fastest.
fn nest(flat: &[Rational], shape: &[usize]) -> Value {
    match shape {
        [] => Value::String(format_rational(&flat[0])),
        [last] => Value::Array(flat[..*last].iter().map(|x| Value::String(format_rational(x))).collect()),
        [first, rest @ ..] => {
            let stride: usize = rest.iter().product();
            Value::Array((0..*first).map(|i| nest(&flat[i * stride..], rest)).collect())
        }
    }
}

fn flatten(value: Value, shape: &[usize], what: &str, out: &mut Vec<Rational>) -> Result<()> {
    match shape {
        [] => {
            let s: Scalar = serde_json::from_value(value).map_err(|e| Error::Input(format!("{what}: {e}")))?;
            out.push(s.0);
            Ok(())
        }
        [first, rest @ ..] => {
            let Value::Array(items) = value else {
                return Err(Error::Input(format!("{what}: expected an array")));
            };
            if items.len() != *first {
                return Err(Error::Input(format!(
                    "{what}: expected {first} entries, got {}",
                    items.len()
                )));
            }
            for item in items {
                flatten(item, rest, what, out)?;
            }
            Ok(())
        }
    }
}

fn unnest(value: Value, shape: &[usize], what: &str) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(shape.iter().product());
    flatten(value, shape, what, &mut out)?;
    Ok(out)
}

fn parse_doc<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T> {
    let value: Value = serde_json::from_str(text).map_err(|e| Error::Input(format!("{what}: {e}")))?;
    if let Some(schema) = value.get("schema") {
        if schema != SCHEMA {
            return Err(Error::Input(format!("{what}: unsupported schema {schema}, expected {SCHEMA:?}")));
        }
    }
    serde_json::from_value(value).map_err(|e| Error::Input(format!("{what}: {e}")))
}

#[derive(Deserialize)]
struct AlgebraDoc {
    dim: usize,
    c: Value,
}

/// `{"schema", "dim": n, "c": n x n x n}` with `c[i][j][k]` the `e_k`
/// coefficient of `[e_i, e_j]`.
pub fn algebra_to_json(g: &LeibnizAlgebra<Rational>) -> Value {
    let n = g.dim();
    serde_json::json!({
        "schema": SCHEMA,
        "dim": n,
        "c": nest(g.structure_constants(), &[n, n, n]),
    })
}

pub fn algebra_from_json(text: &str) -> Result<LeibnizAlgebra<Rational>> {
    let doc: AlgebraDoc = parse_doc(text, "algebra")?;
    let n = doc.dim;
    let c = unnest(doc.c, &[n, n, n], "algebra.c")?;
    LeibnizAlgebra::new(n, c)
}

#[derive(Serialize, Deserialize)]
struct RepresentationDoc {
    #[serde(default, skip_deserializing)]
    schema: &'static str,
    vdim: usize,
    l: Vec<Rows>,
    r: Vec<Rows>,
}

/// `{"schema", "vdim": m, "l": [n matrices], "r": [n matrices]}`.
pub fn representation_to_json(rep: &Representation<Rational>) -> Value {
    serde_json::to_value(RepresentationDoc {
        schema: SCHEMA,
        vdim: rep.vdim,
        l: rep.l.iter().map(matrix_rows).collect(),
        r: rep.r.iter().map(matrix_rows).collect(),
    })
    .expect("representation serializes")
}

/// Reads a representation of `g`; shapes are checked, identities are not.
pub fn representation_from_json(g: &LeibnizAlgebra<Rational>, text: &str) -> Result<Representation<Rational>> {
    let doc: RepresentationDoc = parse_doc(text, "representation")?;
    let m = doc.vdim;
    let read = |ms: Vec<Rows>, what: &str| -> Result<Vec<Matrix<Rational>>> {
        ms.into_iter()
            .enumerate()
            .map(|(i, rows)| matrix_from_rows(rows, m, m, &format!("representation.{what}[{i}]")))
            .collect()
    };
    let l = read(doc.l, "l")?;
    let r = read(doc.r, "r")?;
    Representation::new(g.clone(), m, l, r)
}

#[derive(Serialize, Deserialize)]
struct NaiveDoc {
    #[serde(default, skip_deserializing)]
    schema: &'static str,
    vdim: usize,
    phi: Vec<Rows>,
    theta: Vec<Vector>,
}

/// `{"schema", "vdim": m, "phi": [n matrices], "theta": [n vectors]}`.
pub fn naive_to_json(rho: &NaiveRepresentation<Rational>) -> Value {
    serde_json::to_value(NaiveDoc {
        schema: SCHEMA,
        vdim: rho.vdim,
        phi: rho.phi.iter().map(matrix_rows).collect(),
        theta: rho.theta.iter().map(|t| vector(t)).collect(),
    })
    .expect("naive representation serializes")
}

pub fn naive_from_json(g: &LeibnizAlgebra<Rational>, text: &str) -> Result<NaiveRepresentation<Rational>> {
    let doc: NaiveDoc = parse_doc(text, "naive representation")?;
    let m = doc.vdim;
    let phi = doc
        .phi
        .into_iter()
        .enumerate()
        .map(|(i, rows)| matrix_from_rows(rows, m, m, &format!("naive.phi[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let theta = doc.theta.into_iter().map(unwrap_vector).collect();
    NaiveRepresentation::new(g.clone(), m, phi, theta)
}

#[derive(Serialize, Deserialize)]
struct GraphMapDoc {
    #[serde(default, skip_deserializing)]
    schema: &'static str,
    vdim: usize,
    phi: Vec<Rows>,
}

/// `{"schema", "vdim": m, "phi": [m matrices]}` with `phi[i] = phi(v_i)` and
/// `phi(u) = sum_i u^i phi[i]`.
pub fn graph_map_to_json(phi: &GraphMap<Rational>) -> Value {
    serde_json::to_value(GraphMapDoc {
        schema: SCHEMA,
        vdim: phi.vdim,
        phi: phi.phi.iter().map(matrix_rows).collect(),
    })
    .expect("graph map serializes")
}

pub fn graph_map_from_json(text: &str) -> Result<GraphMap<Rational>> {
    let doc: GraphMapDoc = parse_doc(text, "graph map")?;
    let m = doc.vdim;
    let phi = doc
        .phi
        .into_iter()
        .enumerate()
        .map(|(i, rows)| matrix_from_rows(rows, m, m, &format!("graph.phi[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    GraphMap::new(m, phi)
}

#[derive(Deserialize)]
struct Lie2Doc {
    dim1: usize,
    dim0: usize,
    l1: Rows,
    l2_00: Value,
    l2_01: Value,
    #[serde(default)]
    l2_11: Option<Value>,
    l3: Value,
}

/// `{"schema", "dim1", "dim0", "l1": dim0 x dim1, "l2_00": [x][y][z],
/// "l2_01": [x][a][b], "l2_11": [a][b][c], "l3": [x][y][z][a]}`.
pub fn lie2_to_json(l: &Lie2Algebra<Rational>) -> Value {
    let (d0, d1) = (l.dim0, l.dim1);
    serde_json::json!({
        "schema": SCHEMA,
        "dim1": d1,
        "dim0": d0,
        "l1": matrix_rows(&l.l1),
        "l2_00": nest(&l.l2_00, &[d0, d0, d0]),
        "l2_01": nest(&l.l2_01, &[d0, d1, d1]),
        "l2_11": nest(&l.l2_11, &[d1, d1, d1]),
        "l3": nest(&l.l3, &[d0, d0, d0, d1]),
    })
}

pub fn lie2_from_json(text: &str) -> Result<Lie2Algebra<Rational>> {
    let doc: Lie2Doc = parse_doc(text, "lie2")?;
    let (d0, d1) = (doc.dim0, doc.dim1);
    let l1 = matrix_from_rows(doc.l1, d0, d1, "lie2.l1")?;
    let l2_00 = unnest(doc.l2_00, &[d0, d0, d0], "lie2.l2_00")?;
    let l2_01 = unnest(doc.l2_01, &[d0, d1, d1], "lie2.l2_01")?;
    let l2_11 = doc
        .l2_11
        .map(|v| unnest(v, &[d1, d1, d1], "lie2.l2_11"))
        .transpose()?;
    let l3 = unnest(doc.l3, &[d0, d0, d0, d1], "lie2.l3")?;
    Lie2Algebra::new(d1, d0, l1, l2_00, l2_01, l2_11, l3)
}

/// `{"holds", "failures", "witnesses": [{"check", "indices", "defect"}]}`.
pub fn identity_report_to_json(report: &IdentityReport<Rational>) -> Value {
    let witnesses: Vec<Value> = report
        .witnesses
        .iter()
        .map(|w| {
            serde_json::json!({
                "check": w.check,
                "indices": w.indices,
                "defect": vector(&w.defect),
            })
        })
        .collect();
    serde_json::json!({
        "holds": report.holds,
        "failures": report.failures,
        "witnesses": witnesses,
    })
}

pub fn axiom_report_to_json(report: &AxiomReport<Rational>) -> Value {
    let mut axioms = serde_json::Map::new();
    for (name, _) in report.flags() {
        let r = report.axiom(name).expect("flag names are axioms");
        axioms.insert(name.to_string(), identity_report_to_json(r));
    }
    serde_json::json!({
        "passes": report.passes(),
        "axioms": axioms,
        "structure": identity_report_to_json(&report.structure),
    })
}

/// `{"dims": [dim H^k], "degrees": [{"k", "dim_C", "rank_d", "dim_ker", "dim_H"}]}`.
pub fn betti_to_json(report: &BettiReport) -> Value {
    let degrees: Vec<Value> = report
        .degrees
        .iter()
        .map(|d| {
            serde_json::json!({
                "k": d.k,
                "dim_C": d.dim_c,
                "rank_d": d.rank_d,
                "dim_ker": d.dim_ker,
                "dim_H": d.dim_h,
            })
        })
        .collect();
    serde_json::json!({ "dims": report.dims(), "degrees": degrees })
}

/// `{"branch", "holds", "degrees": [{"k", "dim_naive", "dim_classical",
/// "equal", "informational"}], "correspondence"}`.
pub fn comparison_to_json(report: &ComparisonReport<Rational>) -> Value {
    let degrees: Vec<Value> = report
        .degrees
        .iter()
        .map(|d| {
            serde_json::json!({
                "k": d.k,
                "dim_naive": d.dim_naive,
                "dim_classical": d.dim_classical,
                "equal": d.equal,
                "informational": d.informational,
            })
        })
        .collect();
    serde_json::json!({
        "branch": report.branch.as_str(),
        "holds": report.holds(),
        "degrees": degrees,
        "correspondence": report.correspondence.as_ref().map(identity_report_to_json),
    })
}

/// Indented JSON text with arrays of scalars kept on one line.
pub fn to_text(value: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, value, 0);
    out
}

fn is_flat(value: &Value) -> bool {
    match value {
        Value::Array(items) => items.iter().all(|v| !v.is_array() && !v.is_object()),
        Value::Object(map) => map.is_empty(),
        _ => true,
    }
}

fn write_value(out: &mut String, value: &Value, depth: usize) {
    let pad = |out: &mut String, d: usize| out.push_str(&"  ".repeat(d));
    match value {
        Value::Array(items) if !is_flat(value) => {
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, depth + 1);
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push(']');
        }
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(Value::to_string).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (key, item)) in map.iter().enumerate() {
                pad(out, depth + 1);
                out.push_str(&Value::String(key.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, depth + 1);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, depth);
            out.push('}');
        }
        other => out.push_str(&other.to_string()),
    }
}
