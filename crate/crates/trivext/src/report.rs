//! JSON reports. Keys come out sorted and scalars as exact fraction strings,
//! so the same input always gives the same bytes.

use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use trivext_core::cuts::{Cut, PartnerReport, TrivExtWitness};
use trivext_core::trivext::{CheckResult, ElementaryCycle, FormReport, RelationReport};
use trivext_core::{Element, FdAlgebra, Field, Path, Quiver, Scalar, SocleElement, TrivialExtension};

use crate::format::emit_presentation;

pub const SCHEMA_ID: &str = "trivext-report/1";

/// JSON schema every report validates against.
pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

pub fn digest(input: &str) -> String {
    hex::encode(Sha256::digest(input.as_bytes()))
}

pub fn envelope(command: &str, input: &str, field: Field, result: Value) -> Value {
    json!({
        "schema": SCHEMA_ID,
        "command": command,
        "input_sha256": digest(input),
        "field": field.to_string(),
        "result": result,
    })
}

pub fn scalar(c: &Scalar) -> Value {
    Value::String(c.to_string())
}

pub fn path(q: &Quiver, p: &Path) -> Value {
    Value::String(q.format_path(p))
}

pub fn element(q: &Quiver, u: &Element) -> Value {
    Value::String(q.format_element(u))
}

pub fn basis(a: &FdAlgebra) -> Value {
    let q = a.quiver();
    json!({
        "dim": a.dim(),
        "nilpotency_index": a.nilpotency_index(),
        "basis": a.basis().iter().map(|p| path(q, p)).collect::<Vec<_>>(),
    })
}

/// Length of the longest path in a socle element.
pub fn degree(a: &FdAlgebra, s: &SocleElement) -> usize {
    s.element(a).max_len()
}

pub fn socle(a: &FdAlgebra) -> Value {
    let q = a.quiver();
    let items: Vec<Value> = sorted_socle(a)
        .iter()
        .map(|s| {
            json!({
                "source": q.vertex_name(s.source),
                "target": q.vertex_name(s.target),
                "degree": degree(a, s),
                "element": element(q, &s.element(a)),
            })
        })
        .collect();
    json!({ "dim": items.len(), "socle": items })
}

/// The socle basis ordered by degree, stable within a degree.
pub fn sorted_socle(a: &FdAlgebra) -> Vec<SocleElement> {
    let mut s = a.bimodule_socle();
    s.sort_by_key(|x| degree(a, x));
    s
}

pub fn cycle(t: &TrivialExtension, c: &ElementaryCycle) -> Value {
    let q = t.quiver();
    json!({
        "cycle": path(q, &c.cycle()),
        "beta": q.arrow_name(c.beta),
        "weight": scalar(&c.weight),
        "length": c.class.len(),
    })
}

pub fn cycles(t: &TrivialExtension) -> Value {
    json!({ "count": t.elementary_cycles().len(), "cycles": t.elementary_cycles().iter().map(|c| cycle(t, c)).collect::<Vec<_>>() })
}

pub fn cut(q: &Quiver, c: &Cut) -> Value {
    json!(c.names(q))
}

pub fn witness(p_quiver: &Quiver, w: &TrivExtWitness) -> Value {
    let base = FdAlgebra::build(w.base.clone(), trivext_core::DEFAULT_BOUND).ok();
    let bq = w.base.quiver();
    let pairs: Vec<Value> = w
        .correspondence
        .pairs
        .iter()
        .map(|(g, s)| {
            let socle = match &base {
                Some(b) => element(bq, &s.element(b)),
                None => Value::Null,
            };
            json!({ "arrow": p_quiver.arrow_name(*g), "socle": socle })
        })
        .collect();
    let cycles: Vec<Value> = w
        .cycles
        .cycles
        .iter()
        .map(|(c, x)| json!({ "cycle": path(p_quiver, c.representative()), "weight": scalar(x) }))
        .collect();
    json!({
        "base": emit_presentation(&w.base),
        "base_dim": base.as_ref().map(FdAlgebra::dim),
        "cut": cut(p_quiver, &w.cut),
        "correspondence": pairs,
        "cycles": cycles,
        "ideal_equal": true,
    })
}

pub fn partner(t: &TrivialExtension, r: &PartnerReport) -> Value {
    let q = t.quiver();
    json!({
        "cut": cut(q, &r.cut),
        "partner": emit_presentation(&r.partner),
        "partner_dim": r.partner_dim,
        "s_generators": r.s_generators.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>(),
        "dim_s": r.s_basis.len(),
        "dim_m": r.m_basis.len(),
        "dim_n": r.n_basis.len(),
        "disjoint": r.disjoint,
        "spans_a": r.spans_a,
        "pairing_nondegenerate": r.nondegenerate,
        "holds": r.holds(),
    })
}

pub fn check(c: &CheckResult) -> Value {
    json!({ "name": c.name, "passed": c.passed, "checked": c.checked, "witness": c.witness })
}

pub fn verification(r: &RelationReport, props: &[CheckResult], form: &FormReport) -> Value {
    json!({
        "relation_theorem": {
            "checks": r.items.iter().map(check).collect::<Vec<_>>(),
            "quotient_dim": r.quotient_dim,
            "expected_dim": r.expected_dim,
            "passed": r.passed(),
        },
        "cycle_properties": props.iter().map(check).collect::<Vec<_>>(),
        "symmetric_form": {
            "symmetric": form.symmetric,
            "associative": form.associative,
            "nondegenerate": form.nondegenerate,
            "rank": form.rank,
            "dim": form.dim,
        },
        "passed": r.passed() && props.iter().all(|c| c.passed) && form.passed(),
    })
}

/// Pretty-printed with a trailing newline.
pub fn to_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
