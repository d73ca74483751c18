//! Browser bindings. Each export takes plain strings and returns JSON.
//!
//! A space is written as its blocks separated by `|`, e.g. `abc|ef|q`; the
//! universe is every letter that appears, in order.

use roughdial::counting::{ipc, parse_pairs, ClosureMode, IndiscernibilityRelation};
use roughdial::opposition::hexagon;
use roughdial::{eval_str, ApproximationSpace, CeraModel, Error, MixedElement, Universe};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

pub fn space(blocks: &str) -> Result<ApproximationSpace, Error> {
    let parts: Vec<&str> = blocks.split('|').map(str::trim).filter(|b| !b.is_empty()).collect();
    let mut atoms: Vec<String> = Vec::new();
    for ch in parts.iter().flat_map(|b| b.chars()) {
        if !atoms.iter().any(|a| a.starts_with(ch)) {
            atoms.push(ch.to_string());
        }
    }
    let u = Universe::new(atoms.iter())?;
    let blocks = parts.iter().map(|b| u.parse(b)).collect::<Result<Vec<_>, _>>()?;
    ApproximationSpace::from_partition(u, blocks)
}

pub fn eval_json(blocks: &str, expr: &str) -> Result<Value, Error> {
    let sp = space(blocks)?;
    let m = CeraModel::new(&sp);
    let v = eval_str(&m, expr)?;
    let (kind, members) = match &v {
        MixedElement::Set(_) => ("set", vec![]),
        MixedElement::Class(c) => ("class", c.members(&sp).into_iter().map(|x| sp.render(x)).collect()),
    };
    Ok(json!({ "value": m.render(&v), "long": m.render_long(&v), "type": kind, "members": members }))
}

pub fn hexagon_json(blocks: &str, x: &str) -> Result<Value, Error> {
    let sp = space(blocks)?;
    let h = hexagon(&sp, sp.parse(x)?)?;
    let nodes: Vec<Value> = h.nodes.iter().map(|(n, s)| json!({ "name": n, "value": sp.render(*s) })).collect();
    let edges: Vec<Value> = h
        .pairs
        .iter()
        .map(|(i, j, c)| json!({ "a": h.nodes[*i].0, "b": h.nodes[*j].0, "figure": c.figure.to_string() }))
        .collect();
    Ok(json!({ "nodes": nodes, "edges": edges, "warning": h.warning }))
}

pub fn count_json(sequence: &str, pairs: &str, equivalence: bool) -> Result<Value, Error> {
    let seq: Vec<String> = sequence.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect();
    let pairs = parse_pairs(pairs)?;
    let mut elems: Vec<String> = seq.iter().chain(pairs.iter().flat_map(|(a, b)| [a, b])).cloned().collect();
    elems.sort();
    elems.dedup();
    let mode = if equivalence { ClosureMode::Equivalence } else { ClosureMode::ReflexiveTransitive };
    let rel = IndiscernibilityRelation::close(&elems, &pairs, mode)?;
    let tags = ipc(&seq, &rel)?;
    Ok(json!(seq
        .iter()
        .zip(&tags)
        .map(|(x, t)| json!({ "element": x, "tag": t.subscript() }))
        .collect::<Vec<_>>()))
}

fn to_js(r: Result<Value, Error>) -> Result<String, JsValue> {
    r.map(|v| v.to_string()).map_err(|e| JsValue::from_str(&e.to_string()))
}

#[wasm_bindgen]
pub fn evaluate(blocks: &str, expr: &str) -> Result<String, JsValue> {
    to_js(eval_json(blocks, expr))
}

#[wasm_bindgen]
pub fn opposition_hexagon(blocks: &str, x: &str) -> Result<String, JsValue> {
    to_js(hexagon_json(blocks, x))
}

#[wasm_bindgen]
pub fn count(sequence: &str, pairs: &str, equivalence: bool) -> Result<String, JsValue> {
    to_js(count_json(sequence, pairs, equivalence))
}
