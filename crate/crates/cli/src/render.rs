//! Text and JSON renderings of reports. Basis vectors are always `e0..`;
//! display names only appear in headers.

use nalg::scalar::format_scalar;
use nalg::structure::Subspace;
use nalg::{Algebra, Element, IdentityReport, Witness};
use num_traits::Zero;
use serde_json::{json, Map, Value};

pub fn element_json(v: &Element) -> Value {
    let coords: Map<String, Value> = v
        .coords()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_string(), Value::String(format_scalar(c))))
        .collect();
    Value::Object(coords)
}

pub fn witness_json(w: &Witness) -> Value {
    json!({
        "indices": w.indices,
        "part": w.part,
        "defect": element_json(&w.defect),
    })
}

/// `fails at (e0, e1, e2) [part]: defect = ...`
pub fn witness_text(w: &Witness) -> String {
    let line = IdentityReport::new("", Some(w.clone())).describe(None);
    line.trim_start_matches(": ").to_string()
}

pub fn report_json(r: &IdentityReport) -> Value {
    let witness = r.witness.as_ref().map_or(Value::Null, witness_json);
    json!({ "identity": r.identity, "holds": r.holds(), "witness": witness })
}

pub fn subspace_json(s: &Subspace) -> Value {
    json!({
        "dim": s.dim(),
        "basis": s.basis().iter().map(element_json).collect::<Vec<_>>(),
    })
}

pub fn subspace_text(s: &Subspace) -> String {
    let basis: Vec<String> = s.basis().iter().map(Element::to_string).collect();
    format!("dim {} {{{}}}", s.dim(), basis.join(", "))
}

pub fn header_json(path: &str, a: &Algebra) -> Value {
    json!({
        "file": path,
        "dim": a.dim(),
        "label": a.label(),
        "names": a.names(),
    })
}

pub fn header_text(path: &str, a: &Algebra) -> String {
    let mut out = format!("algebra: {path}\ndim: {}\n", a.dim());
    if let Some(label) = a.label() {
        out.push_str(&format!("label: {label}\n"));
    }
    if let Some(names) = a.names() {
        let pairs: Vec<String> = names.iter().enumerate().map(|(i, n)| format!("e{i}={n}")).collect();
        out.push_str(&format!("basis: {}\n", pairs.join(", ")));
    }
    out
}

pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("json values serialize");
    s.push('\n');
    s
}
