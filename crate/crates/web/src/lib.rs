//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes plain numbers or strings and returns a JSON string, so
//! the page needs no generated TypeScript types. Errors come back as
//! `{"error": "..."}`.

pub mod demo;

use wasm_bindgen::prelude::*;

fn to_json<T: serde::Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v).expect("demo values serialize"),
        Err(e) => serde_json::json!({ "error": e }).to_string(),
    }
}

/// The alternating-group pair for degree `n` and its `Aut(G, S)` at valency `k`.
#[wasm_bindgen]
pub fn construct_alternating(n: usize, k: usize) -> String {
    to_json(demo::construct_alternating(n, k))
}

/// `Cay(C_n, {±a : a ∈ jumps})` with its automorphism group order and
/// the multipliers fixing the connection set. `jumps` is comma-separated.
#[wasm_bindgen]
pub fn circulant(n: usize, jumps: &str) -> String {
    to_json(demo::circulant(n, jumps))
}

/// Factorization of `r^m - 1` and its primitive prime divisors.
#[wasm_bindgen]
pub fn ppd(r: u32, m: u32) -> String {
    to_json(demo::ppd(r as u64, m))
}
