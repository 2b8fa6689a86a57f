//! JSON forms of polynomials, fractions, operators, coefficient tables and
//! reports.
//!
//! Polynomials are `{"vars": [...], "terms": [{"c": "<int>", "e": [...]}]}`
//! with one dense exponent per listed variable and terms in canonical
//! (descending) order. Integers travel as decimal strings so no precision is
//! lost.

use std::collections::BTreeMap;
use std::fmt;

use macdo_core::algebra::{Frac, Int, MPoly, Monomial, Var, VarUniverse};
use macdo_core::macdonald::SymPoly;
use macdo_core::partitions::Partition;
use macdo_core::raising::RaisingOperator;
use macdo_core::report::IdentityReport;
use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

#[derive(Debug)]
pub enum SchemaError {
    Json(serde_json::Error),
    UnknownVariable(String),
    BadVariableList(Vec<String>),
    Arity { expected: usize, found: usize },
    Coefficient(String),
    NegativeExponent(String),
    ZeroCoefficient,
    NotCanonical,
    ZeroDenominator,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaError::Json(e) => write!(f, "malformed json: {e}"),
            SchemaError::UnknownVariable(v) => write!(f, "unknown variable {v:?}"),
            SchemaError::BadVariableList(v) => write!(f, "variables {v:?} are not in canonical order"),
            SchemaError::Arity { expected, found } => {
                write!(f, "exponent vector has {found} entries, expected {expected}")
            }
            SchemaError::Coefficient(c) => write!(f, "bad coefficient {c:?}"),
            SchemaError::NegativeExponent(v) => write!(f, "negative exponent on {v}"),
            SchemaError::ZeroCoefficient => f.write_str("zero coefficient stored explicitly"),
            SchemaError::NotCanonical => f.write_str("terms are not strictly descending"),
            SchemaError::ZeroDenominator => f.write_str("zero denominator"),
        }
    }
}

impl std::error::Error for SchemaError {}

impl From<serde_json::Error> for SchemaError {
    fn from(e: serde_json::Error) -> Self {
        SchemaError::Json(e)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub c: String,
    pub e: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyJson {
    pub vars: Vec<String>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FracJson {
    pub num: PolyJson,
    pub den: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorTermJson {
    pub gamma: Vec<u32>,
    pub num: PolyJson,
    pub den: PolyJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperatorJson {
    pub m: u32,
    pub n: usize,
    pub coeffs: Vec<OperatorTermJson>,
}

/// Monomial-basis expansion of `J_λ` (polynomial coefficients) or `P_λ`
/// (fraction coefficients), keyed by the comma-joined partition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson<C> {
    pub n: usize,
    pub lambda: String,
    pub basis: String,
    pub coeffs: BTreeMap<String, C>,
}

pub fn poly_to_json(p: &MPoly) -> PolyJson {
    let uni = p.universe();
    PolyJson {
        vars: uni.vars().map(Var::name).collect(),
        terms: p
            .terms()
            .iter()
            .map(|(m, c)| TermJson {
                c: c.to_string(),
                e: p.dense_exponents(m),
            })
            .collect(),
    }
}

/// Parses and validates: canonical variable list, one exponent per variable,
/// no negative exponents outside `q` and the `x` block, no explicit zeros,
/// strictly descending terms.
pub fn poly_from_json(j: &PolyJson) -> Result<MPoly, SchemaError> {
    let vars = j
        .vars
        .iter()
        .map(|s| Var::parse(s).ok_or_else(|| SchemaError::UnknownVariable(s.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let uni = VarUniverse::from_vars(&vars).map_err(|_| SchemaError::BadVariableList(j.vars.clone()))?;
    let mut terms = Vec::with_capacity(j.terms.len());
    for t in &j.terms {
        if t.e.len() != vars.len() {
            return Err(SchemaError::Arity {
                expected: vars.len(),
                found: t.e.len(),
            });
        }
        let c: Int = t.c.parse().map_err(|_| SchemaError::Coefficient(t.c.clone()))?;
        if c.is_zero() {
            return Err(SchemaError::ZeroCoefficient);
        }
        let mut m = Monomial::ONE;
        for (v, &e) in vars.iter().zip(&t.e) {
            if e < 0 && !v.is_laurent() {
                return Err(SchemaError::NegativeExponent(v.name()));
            }
            m.0[uni.slot(*v)] = i16::try_from(e).map_err(|_| SchemaError::Coefficient(e.to_string()))?;
        }
        terms.push((m, c));
    }
    let p = MPoly::from_terms(uni, terms.iter().cloned());
    if p.terms() != terms.as_slice() {
        return Err(SchemaError::NotCanonical);
    }
    Ok(p)
}

pub fn frac_to_json(f: &Frac) -> FracJson {
    FracJson {
        num: poly_to_json(f.num()),
        den: poly_to_json(&f.den()),
    }
}

pub fn frac_from_json(j: &FracJson) -> Result<Frac, SchemaError> {
    let num = poly_from_json(&j.num)?;
    let den = poly_from_json(&j.den)?;
    Frac::new(num, &den).map_err(|_| SchemaError::ZeroDenominator)
}

pub fn operator_to_json(op: &RaisingOperator) -> OperatorJson {
    OperatorJson {
        m: op.m(),
        n: op.n(),
        coeffs: op
            .op()
            .coeffs()
            .iter()
            .map(|(g, c)| OperatorTermJson {
                gamma: g.entries().to_vec(),
                num: poly_to_json(c.num()),
                den: poly_to_json(&c.den()),
            })
            .collect(),
    }
}

/// The universe `{q, t}` that table coefficients live in.
pub fn coefficient_universe() -> VarUniverse {
    VarUniverse::scalars()
}

pub fn j_table_json(n: usize, lam: &Partition, coeffs: &BTreeMap<Partition, MPoly>) -> TableJson<PolyJson> {
    let qt = coefficient_universe();
    TableJson {
        n,
        lambda: lam.to_string(),
        basis: "monomial".into(),
        coeffs: coeffs
            .iter()
            .map(|(mu, c)| {
                let c = c.embed(qt).expect("coefficients are free of x");
                (mu.to_string(), poly_to_json(&c))
            })
            .collect(),
    }
}

pub fn p_table_json(n: usize, lam: &Partition, p: &SymPoly) -> TableJson<FracJson> {
    let qt = coefficient_universe();
    TableJson {
        n,
        lambda: lam.to_string(),
        basis: "monomial".into(),
        coeffs: p
            .expansion
            .iter()
            .map(|(mu, c)| {
                let c = c.embed(qt).expect("coefficients are free of x");
                (mu.to_string(), frac_to_json(&c))
            })
            .collect(),
    }
}

pub fn report_json(r: &IdentityReport) -> Value {
    let mut params = Map::new();
    for (k, v) in &r.params {
        params.insert(k.clone(), Value::String(v.clone()));
    }
    let mut obj = Map::new();
    obj.insert("identity".into(), Value::String(r.identity.clone()));
    obj.insert("params".into(), Value::Object(params));
    obj.insert("passed".into(), Value::Bool(r.passed));
    obj.insert("detail".into(), r.detail.clone().map_or(Value::Null, Value::String));
    Value::Object(obj)
}

/// One JSON line per report.
pub fn report_line(r: &IdentityReport) -> String {
    serde_json::to_string(&report_json(r)).expect("reports serialize")
}

/// Indented layout with a trailing newline, the form golden files are kept
/// in. Scalar arrays and objects built only from scalars and scalar arrays
/// (a single term, a variable list) stay on one line.
pub fn to_pretty<T: Serialize>(v: &T) -> String {
    let v = serde_json::to_value(v).expect("schema types serialize");
    let mut out = String::new();
    write_value(&mut out, &v, 0);
    out.push('\n');
    out
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(o) => o.values().all(|x| !x.is_object() && is_flat(x)),
        _ => true,
    }
}

fn write_value(out: &mut String, v: &Value, depth: usize) {
    if is_flat(v) {
        out.push_str(&flat(v));
        return;
    }
    let pad = "  ".repeat(depth + 1);
    match v {
        Value::Array(a) => {
            out.push_str("[\n");
            for (i, x) in a.iter().enumerate() {
                out.push_str(&pad);
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < a.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push(']');
        }
        Value::Object(o) => {
            out.push_str("{\n");
            for (i, (k, x)) in o.iter().enumerate() {
                out.push_str(&pad);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, x, depth + 1);
                out.push_str(if i + 1 < o.len() { ",\n" } else { "\n" });
            }
            out.push_str(&"  ".repeat(depth));
            out.push('}');
        }
        _ => unreachable!("scalars are flat"),
    }
}

/// Single-line form with a space after each separator.
fn flat(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(flat).collect::<Vec<_>>().join(", ")),
        Value::Object(o) => format!(
            "{{{}}}",
            o.iter()
                .map(|(k, x)| format!("{}: {}", Value::String(k.clone()), flat(x)))
                .collect::<Vec<_>>()
                .join(", ")
        ),
        scalar => scalar.to_string(),
    }
}
