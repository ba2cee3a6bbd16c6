//! JSON codec for instances, reports and certificates. Integers and
//! rationals are written as decimal strings (`"7"`, `"-3/4"`); integers are
//! read from either JSON numbers or strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Map, Value};

use selfaffine::classifier::{HadamardCertificate, WitnessCertificate};
use selfaffine::conjugation::Frame;
use selfaffine::fourier::{Witness, WitnessOrigin};
use selfaffine::hadamard::{HadamardTriple, PhaseMatrix};
use selfaffine::rational::rat_to_string;
use selfaffine::{Certificate, Classification, Error, IntMatrix, ProblemInstance, RatMatrix};

use crate::error::{CliError, CliResult};

fn parse_err(msg: impl Into<String>) -> CliError {
    CliError::Parse(msg.into())
}

pub fn parse_document(text: &str, what: &str) -> CliResult<Value> {
    serde_json::from_str(text).map_err(|e| parse_err(format!("malformed {what}: {e}")))
}

pub fn int_value(v: &Value, what: &str) -> CliResult<BigInt> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(parse_err(format!("{what}: {n} is not an integer")))
            }
        }
        Value::String(s) => s
            .trim()
            .parse::<BigInt>()
            .map_err(|_| parse_err(format!("{what}: {s:?} is not an integer"))),
        other => Err(parse_err(format!("{what}: expected an integer, found {other}"))),
    }
}

pub fn rat_value(v: &Value, what: &str) -> CliResult<BigRational> {
    if let Value::String(s) = v {
        if let Some((n, d)) = s.split_once('/') {
            let n: BigInt = n.trim().parse().map_err(|_| parse_err(format!("{what}: bad rational {s:?}")))?;
            let d: BigInt = d.trim().parse().map_err(|_| parse_err(format!("{what}: bad rational {s:?}")))?;
            if d.is_zero() {
                return Err(parse_err(format!("{what}: zero denominator in {s:?}")));
            }
            return Ok(BigRational::new(n, d));
        }
    }
    int_value(v, what).map(BigRational::from_integer)
}

fn array<'a>(v: &'a Value, what: &str) -> CliResult<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| parse_err(format!("{what}: expected an array")))
}

fn field<'a>(obj: &'a Value, key: &str, what: &str) -> CliResult<&'a Value> {
    obj.get(key).ok_or_else(|| parse_err(format!("{what}: missing field {key:?}")))
}

fn usize_value(v: &Value, what: &str) -> CliResult<usize> {
    int_value(v, what)?
        .to_usize()
        .ok_or_else(|| parse_err(format!("{what}: expected a non-negative machine integer")))
}

pub fn int_vector_value(v: &Value, what: &str) -> CliResult<Vec<BigInt>> {
    array(v, what)?.iter().map(|x| int_value(x, what)).collect()
}

pub fn rat_vector_value(v: &Value, what: &str) -> CliResult<Vec<BigRational>> {
    array(v, what)?.iter().map(|x| rat_value(x, what)).collect()
}

fn rows_value<T>(v: &Value, what: &str, entry: impl Fn(&Value, &str) -> CliResult<T>) -> CliResult<Vec<Vec<T>>> {
    let rows = array(v, what)?;
    let out = rows
        .iter()
        .map(|r| array(r, what)?.iter().map(|x| entry(x, what)).collect())
        .collect::<CliResult<Vec<Vec<T>>>>()?;
    if out.windows(2).any(|w| w[0].len() != w[1].len()) {
        return Err(parse_err(format!("{what}: rows have different lengths")));
    }
    Ok(out)
}

pub fn int_matrix_value(v: &Value, what: &str) -> CliResult<IntMatrix> {
    let rows = rows_value(v, what, int_value)?;
    IntMatrix::from_rows(rows).map_err(CliError::from)
}

pub fn rat_matrix_value(v: &Value, what: &str) -> CliResult<RatMatrix> {
    let rows = rows_value(v, what, rat_value)?;
    RatMatrix::from_rows(rows).map_err(CliError::from)
}

/// `{"matrix": [[..]], "v": [..], "q": ..}`
pub fn parse_instance(text: &str) -> CliResult<ProblemInstance> {
    let doc = parse_document(text, "instance JSON")?;
    if !doc.is_object() {
        return Err(parse_err("instance: expected a JSON object"));
    }
    let m = int_matrix_value(field(&doc, "matrix", "instance")?, "matrix")?;
    let v = int_vector_value(field(&doc, "v", "instance")?, "v")?;
    let q = int_value(field(&doc, "q", "instance")?, "q")?;
    if q < BigInt::from(2) {
        return Err(Error::BadQ(q.to_string()).into());
    }
    let q = q
        .to_u64()
        .ok_or_else(|| CliError::Domain(format!("digit count q = {q} exceeds the supported range")))?;
    Ok(ProblemInstance::new(m, v, q)?)
}

pub fn int_json(x: &BigInt) -> Value {
    Value::String(x.to_string())
}

pub fn rat_json(x: &BigRational) -> Value {
    Value::String(rat_to_string(x))
}

pub fn int_vector_json(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int_json).collect())
}

pub fn rat_vector_json(v: &[BigRational]) -> Value {
    Value::Array(v.iter().map(rat_json).collect())
}

pub fn int_matrix_json(m: &IntMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| int_vector_json(r)).collect())
}

pub fn rat_matrix_json(m: &RatMatrix) -> Value {
    Value::Array(m.to_rows().iter().map(|r| rat_vector_json(r)).collect())
}

pub fn frame_json(f: &Frame) -> Value {
    json!({
        "to_conjugated": rat_matrix_json(f.to_conjugated_matrix()),
        "to_original": rat_matrix_json(f.to_original_matrix()),
    })
}

pub fn certificate_json(c: &Certificate) -> Value {
    match c {
        Certificate::Hadamard(h) => {
            let t = &h.triple;
            json!({
                "kind": "hadamard",
                "matrix": int_matrix_json(&t.m),
                "digits": Value::Array(t.digits.iter().map(|d| int_vector_json(d)).collect()),
                "duals": Value::Array(t.duals.iter().map(|d| int_vector_json(d)).collect()),
                "phases": Value::Array(h.phases.theta.iter().map(|r| rat_vector_json(r)).collect()),
                "frame": t.frame.as_ref().map(frame_json).unwrap_or(Value::Null),
            })
        }
        Certificate::Witness(w) => json!({
            "kind": "witness",
            "alpha": rat_vector_json(&w.witness.alpha),
            "ell": w.witness.ell,
            "origin": w.witness.origin.as_str(),
            "companion": {
                "matrix": int_matrix_json(&w.companion_m),
                "v": int_vector_json(&w.companion_v),
                "alpha": rat_vector_json(&w.companion_alpha),
                "ell": 1,
            },
        }),
        Certificate::ConditionOnly => Value::Null,
    }
}

fn origin_value(v: &Value) -> CliResult<WitnessOrigin> {
    match v.as_str() {
        Some("companion") => Ok(WitnessOrigin::Companion),
        Some("mapped") => Ok(WitnessOrigin::Mapped),
        Some("lattice_search") => Ok(WitnessOrigin::LatticeSearch),
        _ => Err(parse_err(format!("certificate: unknown witness origin {v}"))),
    }
}

/// Inverse of [`certificate_json`]; `null` is a condition-only certificate.
pub fn parse_certificate(v: &Value) -> CliResult<Certificate> {
    if v.is_null() {
        return Ok(Certificate::ConditionOnly);
    }
    let what = "certificate";
    match field(v, "kind", what)?.as_str() {
        Some("hadamard") => {
            let m = int_matrix_value(field(v, "matrix", what)?, "certificate matrix")?;
            let digits = array(field(v, "digits", what)?, "digits")?
                .iter()
                .map(|d| int_vector_value(d, "digits"))
                .collect::<CliResult<Vec<_>>>()?;
            let duals = array(field(v, "duals", what)?, "duals")?
                .iter()
                .map(|d| int_vector_value(d, "duals"))
                .collect::<CliResult<Vec<_>>>()?;
            let theta = rows_value(field(v, "phases", what)?, "phases", rat_value)?;
            let frame = match field(v, "frame", what)? {
                Value::Null => None,
                f => Some(Frame::from_matrices(
                    rat_matrix_value(field(f, "to_conjugated", "frame")?, "frame")?,
                    rat_matrix_value(field(f, "to_original", "frame")?, "frame")?,
                )?),
            };
            let triple = HadamardTriple::new(m, digits, duals, frame);
            Ok(Certificate::Hadamard(Box::new(HadamardCertificate { triple, phases: PhaseMatrix { theta } })))
        }
        Some("witness") => {
            let companion = field(v, "companion", what)?;
            let witness = Witness {
                alpha: rat_vector_value(field(v, "alpha", what)?, "alpha")?,
                ell: usize_value(field(v, "ell", what)?, "ell")?,
                origin: origin_value(field(v, "origin", what)?)?,
            };
            Ok(Certificate::Witness(Box::new(WitnessCertificate {
                witness,
                companion_m: int_matrix_value(field(companion, "matrix", "companion")?, "companion matrix")?,
                companion_v: int_vector_value(field(companion, "v", "companion")?, "companion v")?,
                companion_alpha: rat_vector_value(field(companion, "alpha", "companion")?, "companion alpha")?,
            })))
        }
        _ => Err(parse_err("certificate: kind must be \"hadamard\" or \"witness\"")),
    }
}

/// The certificate inside a report document, or a bare certificate object.
pub fn certificate_from_document(doc: &Value) -> CliResult<Certificate> {
    match doc.get("certificate") {
        Some(c) if doc.get("verdict").is_some() => parse_certificate(c),
        _ => parse_certificate(doc),
    }
}

/// The stable report object; `extra` entries are merged at the top level.
pub fn report_json(c: &Classification, verified: bool, timings: Map<String, Value>, extra: Map<String, Value>) -> Value {
    let cond = &c.conditions;
    let mut report = json!({
        "verdict": c.verdict.as_str(),
        "conditions": {
            "n": cond.n,
            "r": cond.r,
            "det_m1": int_json(&cond.det_m1),
            "gcd": int_json(&cond.gcd),
            "q_divides": cond.q_divides,
            "pure_power_c": cond.pure_power_c.as_ref().map(int_json).unwrap_or(Value::Null),
            "char_poly_m1": int_vector_json(cond.char_poly_m1.coeffs()),
        },
        "certificate": certificate_json(&c.certificate),
        "certificate_kind": c.certificate.kind(),
        "certificate_verified": verified,
        "theorems_applied": c.rules.iter().map(|r| r.as_str()).collect::<Vec<_>>(),
        "timings_ms": Value::Object(timings),
    });
    if let Value::Object(obj) = &mut report {
        obj.extend(extra);
    }
    report
}

/// Pretty JSON with a trailing newline. `serde_json::Map` keeps keys sorted.
pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
