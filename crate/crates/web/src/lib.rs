//! Browser bindings. Every export takes plain strings and numbers and returns
//! a JSON document: `{"ok": true, ...}` or `{"ok": false, "error": "..."}`.

use centra::isotopy::{self, Shape};
use centra::permfile::PermFile;
use centra::representation::{self, Law};
use centra::{catalog, CayleyTable, PropertyReport};
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(result: Result<Value, String>) -> String {
    match result {
        Ok(mut v) => {
            v["ok"] = Value::Bool(true);
            v.to_string()
        }
        Err(e) => json!({ "ok": false, "error": e }).to_string(),
    }
}

/// A fixture name, or table text when the source spans several lines.
fn load(source: &str) -> Result<CayleyTable, String> {
    let source = source.trim();
    if source.contains('\n') {
        CayleyTable::parse(source).map_err(|e| e.to_string())
    } else {
        catalog::named(source).map_err(|e| e.to_string())
    }
}

fn describe(t: &CayleyTable) -> Result<Value, String> {
    let report = PropertyReport::analyze(t).map_err(|e| e.to_string())?;
    Ok(json!({ "rows": t.rows(), "report": report }))
}

/// Names accepted wherever a source is expected.
#[wasm_bindgen]
pub fn fixtures() -> String {
    json!(catalog::FIXTURE_NAMES).to_string()
}

/// Property report for a fixture or pasted table.
#[wasm_bindgen]
pub fn analyze(source: &str) -> String {
    respond(load(source).and_then(|t| describe(&t)))
}

/// Rebuilds a loop from a permutation file (`n=<order>` plus cycle lines).
#[wasm_bindgen]
pub fn generate(perms: &str, law: &str) -> String {
    respond((|| {
        let law: Law = law.parse()?;
        let file = PermFile::parse(perms).map_err(|e| e.to_string())?;
        let t = representation::generate_from_generators(&file.perms, file.order, law)
            .map_err(|e| e.to_string())?;
        let mut v = describe(&t)?;
        v["text"] = Value::String(t.to_text());
        Ok(v)
    })())
}

/// Applies the loop-producing shaped triple `(R_c B, B, B)` or
/// `(A, L_c A, A)`, with the free permutation drawn from `seed`.
#[wasm_bindgen]
pub fn isotope(source: &str, shape: &str, c: usize, seed: u32) -> String {
    respond((|| {
        let g = load(source)?;
        let shape: Shape = shape.parse()?;
        let n = g.order();
        if !g.is_loop() {
            return Err("source is not a loop".to_string());
        }
        if c >= n {
            return Err(format!("c = {c} is not an element of a loop of order {n}"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(u64::from(seed));
        let free = isotopy::random_permutation(n, &mut rng);
        let err = |e: centra::Error| e.to_string();
        let triple = match shape {
            Shape::Abb => {
                let a = g
                    .right_translation(c)
                    .map_err(err)?
                    .compose(&free)
                    .map_err(err)?;
                shape.triple(a, free)
            }
            Shape::Aba => {
                let b = g
                    .left_translation(c)
                    .map_err(err)?
                    .compose(&free)
                    .map_err(err)?;
                shape.triple(free, b)
            }
        }
        .map_err(err)?;
        let h = isotopy::apply_isotopism(&g, &triple).map_err(err)?;
        let mut v = describe(&h)?;
        v["triple"] = json!(triple);
        v["source"] = describe(&g)?;
        Ok(v)
    })())
}
