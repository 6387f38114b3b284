//! wasm-bindgen exports for the static demo page in `www/`. Every function
//! returns a JSON string; failures come back as `{"error": "..."}`.

use qfib::blockwords::{classify_prefix, BlockWord};
use qfib::partitions::{eta, partition_from_word};
use qfib::permstats::{perm_from_word, Orientation};
use qfib::polyring::{Monomial, Substitution};
use qfib::qfib::{verify_identity, Engine, Family, Method};
use qfib::MultiPoly;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Largest n the page will compute, to keep the tab responsive.
pub const PAGE_MAX_N: usize = 16;

fn error(msg: impl ToString) -> String {
    json!({ "error": msg.to_string() }).to_string()
}

/// Coefficients of `p` at `x = y = z_i = 1`, by power of q.
fn q_profile(p: &MultiPoly) -> Vec<(i32, String)> {
    let s = Substitution::new().x(Monomial::one()).y(Monomial::one()).all_z(Monomial::one());
    let flat = p.substitute(&s).expect("monomial images");
    let mut v: Vec<(i32, String)> = flat.terms().map(|(m, c)| (m.q_exp(), c.to_string())).collect();
    v.sort_unstable_by_key(|t| t.0);
    v
}

fn polynomial(family: &str, n: usize, method: &str) -> Result<Value, String> {
    let family: Family = family.parse().map_err(|e: qfib::Error| e.to_string())?;
    let method: Method = method.parse().map_err(|_| format!("unknown method {method:?}"))?;
    if n > PAGE_MAX_N {
        return Err(format!("n = {n} is above the page limit {PAGE_MAX_N}"));
    }
    let p = Engine::shared().compute(family, n, method).map_err(|e| e.to_string())?;
    Ok(json!({
        "family": family.name(),
        "n": n,
        "method": method.to_string(),
        "text": p.canonical_text(),
        "latex": p.to_latex(),
        "count": family.class_size(n).to_string(),
        "q_profile": q_profile(&p),
    }))
}

/// A q-Fibonacci polynomial with its q-degree profile for charting.
#[wasm_bindgen]
pub fn qfib_polynomial(family: &str, n: usize, method: &str) -> String {
    polynomial(family, n, method).map_or_else(error, |v| v.to_string())
}

fn explore(word: &str) -> Result<Value, String> {
    let w: BlockWord = word.parse().map_err(|e: qfib::Error| e.to_string())?;
    let rev = perm_from_word(&w, Orientation::ReverseLayered);
    let lay = perm_from_word(&w, Orientation::Layered);
    let interleaved = w.interleave();
    let mut prefixes = Vec::new();
    let mut cur = interleaved.clone();
    while !cur.is_empty() {
        let c = classify_prefix(&cur).map_err(|e| e.to_string())?;
        prefixes.push(json!({
            "word": cur.to_string(),
            "kind": c.kind.to_string(),
            "cycles": c.predicted_cycles,
        }));
        cur = c.remainder;
    }
    Ok(json!({
        "word": w.to_string(),
        "morse": w.to_morse(),
        "n": w.word_length(),
        "reverse_layered": rev.to_string(),
        "layered": lay.to_string(),
        "inv": rev.inv(),
        "maj": rev.maj(),
        "weight_inv": w.weight_inv().canonical_text(),
        "weight_maj": w.weight_maj().canonical_text(),
        "weight_rb": w.weight_rb().canonical_text(),
        "partition": partition_from_word(&w).to_string(),
        "eta": eta(&rev).map_err(|e| e.to_string())?.to_string(),
        "cycles": rev.cycle_decomposition().to_string(),
        "interleaved": interleaved.to_string(),
        "prefixes": prefixes,
    }))
}

/// Everything the library knows about one block word (`S`/`D` letters, or
/// Morse dots and dashes).
#[wasm_bindgen]
pub fn explore_word(word: &str) -> String {
    explore(word).map_or_else(error, |v| v.to_string())
}

/// Identity report as JSON, with `max_n` capped at 10.
#[wasm_bindgen]
pub fn verify(id: &str, max_n: usize) -> String {
    match verify_identity(id, Some(max_n.min(10)), None) {
        Ok(r) => {
            let mut v = serde_json::to_value(&r).expect("serializable");
            v["holding_readings"] = json!(r.holding_readings());
            v.to_string()
        }
        Err(e) => error(e),
    }
}
