//! Report values. Integers are written as exact JSON numbers, rationals
//! that are not integers as `"p/q"` strings, and root disks as decimal
//! centers with a power-of-two radius bound.

use std::str::FromStr;
use std::thread;

use monodeg::cells::{cell_trace, CellTrace, Status};
use monodeg::degree::{degree_sequence, DegreeSequence};
use monodeg::recur::{find_recurrence, RecurrenceSearch};
use monodeg::spectra::ball::complex_to_decimal;
use monodeg::spectra::{spectral_summary_with_cap, RatioFlag, SpectralSummary};
use monodeg::verdict::{classify_with_summary, cross_check_with_cap, ConsistencyReport, Verdict};
use monodeg::{Error, IntMatrix, IntPoly, Rational};
use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::{json, Map, Number, Value};

use crate::{Bounds, CliError};

/// Digits after the decimal point in root centers and moduli.
pub const DIGITS: usize = 20;

pub fn int(b: &BigInt) -> Value {
    Value::Number(Number::from_str(&b.to_string()).expect("integers are valid JSON numbers"))
}

pub fn rational(q: &Rational) -> Value {
    if q.is_integer() {
        int(q.numer())
    } else {
        Value::String(q.to_string())
    }
}

pub fn matrix(a: &IntMatrix) -> Value {
    Value::Array(
        a.rows()
            .map(|r| Value::Array(r.iter().map(int).collect()))
            .collect(),
    )
}

pub fn poly(p: &IntPoly) -> Value {
    Value::Array(p.coeffs().iter().map(int).collect())
}

fn terms(seq: &[BigInt]) -> Value {
    Value::Array(seq.iter().map(int).collect())
}

/// Exponent `e` with `radius <= 2^e`; `None` for a zero radius.
fn radius_log2(r: &Rational) -> Option<i64> {
    if r.is_zero() {
        return None;
    }
    Some(r.numer().bits() as i64 - r.denom().bits() as i64 + 1)
}

fn flag(f: &RatioFlag) -> Value {
    Value::String(f.to_string())
}

pub fn spectrum(s: &SpectralSummary) -> Value {
    let roots: Vec<Value> = s
        .roots
        .iter()
        .enumerate()
        .map(|(i, r)| {
            json!({
                "center": complex_to_decimal(&r.center, DIGITS),
                "radius_log2": radius_log2(&r.radius),
                "multiplicity": r.multiplicity,
                "real": r.is_real,
                "conjugate": r.conjugate_partner,
                "class": s.class_of(i),
                "flag": flag(&s.ratio_flags[i]),
            })
        })
        .collect();
    let classes: Vec<Value> = s
        .modulus_classes
        .iter()
        .map(|c| {
            json!({
                "members": c.members,
                "cmp_one": c.cmp_one.name(),
                "modulus": c.modulus_decimal(DIGITS),
            })
        })
        .collect();
    json!({
        "unresolved": false,
        "precision": s.precision,
        "digits": DIGITS,
        "roots": roots,
        "classes": classes,
        "dominant_pair": s.dominant_pair.map(|(i, j)| vec![i, j]),
        "unity_orders": s.unity_orders,
    })
}

fn spectrum_failure(e: &Error) -> Value {
    json!({ "unresolved": true, "reason": e.to_string() })
}

pub fn verdict_value(v: &Verdict) -> Value {
    json!({
        "classification": v.classification.name(),
        "basis": v.basis.map(|b| b.name()),
        "via": v.via.map(|b| b.name()),
        "facts": v.facts,
        "recurrence": v.recurrence.as_ref().map(poly),
        "period": v.period,
        "unity_orders": v.unity_orders,
        "unresolved": v.unresolved,
    })
}

pub fn search(s: &RecurrenceSearch) -> Value {
    let mut m = Map::new();
    m.insert("found".into(), Value::Bool(s.found.is_some()));
    m.insert("max_order".into(), json!(s.max_order));
    m.insert("guard".into(), json!(s.guard));
    m.insert("window".into(), json!(s.window));
    if let Some(r) = &s.found {
        let p = r.polynomial();
        m.insert("order".into(), json!(r.order()));
        m.insert("valid_from".into(), json!(r.valid_from));
        m.insert(
            "polynomial".into(),
            Value::Array(p.coeffs().iter().map(rational).collect()),
        );
        m.insert("polynomial_text".into(), Value::String(p.to_string()));
        m.insert("relation".into(), Value::String(r.relation_string()));
    }
    Value::Object(m)
}

fn status(s: &Status<monodeg::degree::FunctionalIndex>) -> Value {
    match s {
        Status::Stabilized { cell, from } => json!({
            "status": s.name(), "cell": cell.to_string(), "from": from,
        }),
        Status::Periodic { period, from } => json!({
            "status": s.name(), "period": period, "from": from,
        }),
        Status::Unresolved => json!({ "status": s.name() }),
    }
}

pub fn trace(t: &CellTrace, with_steps: bool) -> Value {
    let mut v = status(&t.status);
    let m = v.as_object_mut().expect("status is an object");
    m.insert("window".into(), json!(t.window()));
    m.insert("switches".into(), json!(t.switch_indices.len()));
    m.insert("switch_indices".into(), json!(t.switch_indices));
    if with_steps {
        let steps = t
            .steps
            .iter()
            .map(|s| json!({ "n": s.n, "cell": s.cell.to_string(), "ties": s.ties }))
            .collect();
        m.insert("steps".into(), Value::Array(steps));
    }
    v
}

pub fn consistency(r: &ConsistencyReport) -> Value {
    json!({
        "status": r.status.name(),
        "conflicts": r.conflicts,
        "charpoly_offset": r.charpoly_offset,
        "trace_status": r.trace_status.name(),
        "trace_window": r.trace_window,
        "search_window": r.search.window,
        "search_found": r.search.found.is_some(),
    })
}

fn source(a: &IntMatrix, dual: bool) -> Result<IntMatrix, CliError> {
    Ok(if dual {
        a.inverse_unimodular()?
    } else {
        a.clone()
    })
}

fn header(a: &IntMatrix, dual: bool) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("input".into(), matrix(a));
    m.insert("dual".into(), Value::Bool(dual));
    m
}

pub fn sequence(a: &IntMatrix, b: &Bounds, dual: bool) -> Result<Value, CliError> {
    let seq = degree_sequence(&source(a, dual)?, b.terms)?;
    let mut m = header(a, dual);
    m.insert("terms".into(), json!(b.terms));
    m.insert("sequence".into(), terms(&seq.terms));
    Ok(Value::Object(m))
}

pub fn recurrence(a: &IntMatrix, b: &Bounds, dual: bool) -> Result<Value, CliError> {
    let seq = degree_sequence(&source(a, dual)?, b.window)?;
    let found = find_recurrence(&seq.terms, b.max_order, b.guard)?;
    let mut m = header(a, dual);
    m.insert("recurrence".into(), search(&found));
    Ok(Value::Object(m))
}

pub fn cells(a: &IntMatrix, b: &Bounds, dual: bool) -> Result<Value, CliError> {
    let t = cell_trace(&source(a, dual)?, b.terms.max(2))?;
    let mut m = header(a, dual);
    m.insert("cells".into(), trace(&t, true));
    Ok(Value::Object(m))
}

/// Forward verdict (with its summary, if certified) and the dual verdict
/// when `A` is unimodular.
fn verdicts(
    a: &IntMatrix,
    cap: u64,
    parallel: bool,
) -> Result<(Verdict, Option<SpectralSummary>, Value), CliError> {
    let dual = || -> Result<Value, CliError> {
        if !a.is_unimodular() {
            return Ok(Value::Null);
        }
        Ok(verdict_value(&monodeg::verdict::classify_dual_with_cap(
            a, cap,
        )?))
    };
    let (fwd, dual) = if parallel {
        thread::scope(|sc| {
            let h = sc.spawn(dual);
            let fwd = classify_with_summary(a, cap);
            (fwd, h.join().expect("dual verdict thread panicked"))
        })
    } else {
        (classify_with_summary(a, cap), dual())
    };
    let (v, s) = fwd?;
    Ok((v, s, dual?))
}

pub fn verdict(a: &IntMatrix, b: &Bounds, parallel: bool) -> Result<Value, CliError> {
    let (v, _, dual) = verdicts(a, b.precision, parallel)?;
    let mut m = header(a, false);
    m.remove("dual");
    m.insert("d1".into(), json!(v.classification.name()));
    m.insert("basis".into(), json!(v.basis.map(|b| b.name())));
    m.insert(
        "dual".into(),
        dual.get("classification").cloned().unwrap_or(Value::Null),
    );
    m.insert(
        "dual_basis".into(),
        dual.get("basis").cloned().unwrap_or(Value::Null),
    );
    m.insert(
        "verdicts".into(),
        json!({ "d1": verdict_value(&v), "dual": dual }),
    );
    Ok(Value::Object(m))
}

struct Parts {
    spectrum: Value,
    verdict: Verdict,
    dual: Value,
    seq: DegreeSequence,
    search: RecurrenceSearch,
    trace: CellTrace,
    check: ConsistencyReport,
}

fn analyze_parts(a: &IntMatrix, b: &Bounds, parallel: bool) -> Result<Parts, CliError> {
    let spectral = || match spectral_summary_with_cap(a, b.precision) {
        Ok(s) => Ok(spectrum(&s)),
        Err(e @ (Error::RefinementFailed { .. } | Error::UnresolvedClass { .. })) => {
            Ok(spectrum_failure(&e))
        }
        Err(e) => Err(CliError::from(e)),
    };
    let seq = || -> Result<(DegreeSequence, RecurrenceSearch), CliError> {
        let seq = degree_sequence(a, b.window)?;
        let found = find_recurrence(&seq.terms, b.max_order, b.guard)?;
        Ok((seq, found))
    };
    let trace = || cell_trace(a, b.window.max(2)).map_err(CliError::from);
    let check =
        || cross_check_with_cap(a, b.window, b.max_order, b.precision).map_err(CliError::from);

    let (spectrum, vs, sq, tr, ck) = if parallel {
        thread::scope(|sc| {
            let h_spectral = sc.spawn(spectral);
            let h_seq = sc.spawn(seq);
            let h_trace = sc.spawn(trace);
            let h_check = sc.spawn(check);
            let vs = verdicts(a, b.precision, false);
            let join = "analysis thread panicked";
            (
                h_spectral.join().expect(join),
                vs,
                h_seq.join().expect(join),
                h_trace.join().expect(join),
                h_check.join().expect(join),
            )
        })
    } else {
        (
            spectral(),
            verdicts(a, b.precision, false),
            seq(),
            trace(),
            check(),
        )
    };
    let (verdict, _, dual) = vs?;
    let (seq, search) = sq?;
    Ok(Parts {
        spectrum: spectrum?,
        verdict,
        dual,
        seq,
        search,
        trace: tr?,
        check: ck?,
    })
}

pub fn analyze(a: &IntMatrix, b: &Bounds, parallel: bool) -> Result<Value, CliError> {
    let p = analyze_parts(a, b, parallel)?;
    let mut m = header(a, false);
    m.remove("dual");
    m.insert("det".into(), int(&a.det()));
    m.insert("char_poly".into(), poly(&a.char_poly()));
    m.insert("spectrum".into(), p.spectrum);
    m.insert("sequence".into(), terms(&p.seq.terms[..b.terms]));
    m.insert("recurrence".into(), search(&p.search));
    m.insert(
        "verdicts".into(),
        json!({ "d1": verdict_value(&p.verdict), "dual": p.dual }),
    );
    m.insert("cells".into(), trace(&p.trace, false));
    m.insert("consistency".into(), consistency(&p.check));
    Ok(Value::Object(m))
}

/// Whether some certification in the report gave up.
pub fn has_unresolved(v: &Value) -> bool {
    match v {
        Value::Object(m) => m.iter().any(|(k, x)| {
            (k == "unresolved" && x == &Value::Bool(true))
                || (k == "flag" && x.as_str() == Some("UNRESOLVED"))
                || has_unresolved(x)
        }),
        Value::Array(xs) => xs.iter().any(has_unresolved),
        _ => false,
    }
}
