//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export takes and returns JSON text; the plain `*_json` functions do
//! the work and are what the native tests call.

use positroid_core::input::{parse_permutation, parse_positroid, parse_subdivision};
use positroid_core::pipeline::{
    atlas_necklaces, compute_hstar, tree_report, triangulation_report, HstarOptions, HstarReport, Method,
    TriangulationReport,
};
use positroid_core::tree::random_subdivision;
use rand_chacha::rand_core::SeedableRng;
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest polygon the page will enumerate; keeps the tab responsive.
pub const BROWSER_MAX_N: usize = 7;

fn to_json<T: Serialize>(v: &T) -> Result<String, String> {
    serde_json::to_string(v).map_err(|e| e.to_string())
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct Explorer {
    triangulation: TriangulationReport,
    methods: HstarReport,
}

pub fn triangulation_json(positroid: &str, w0: &str) -> Result<String, String> {
    let (j, _) = parse_positroid(positroid).map_err(|e| e.to_string())?;
    if j.n() > BROWSER_MAX_N {
        return Err(format!("n = {} is too large for the browser (max {BROWSER_MAX_N})", j.n()));
    }
    let w0 = match w0.trim() {
        "" => None,
        s => Some(parse_permutation(s).map_err(|e| e.to_string())?),
    };
    let triangulation = triangulation_report(&j, w0.as_ref()).map_err(|e| e.to_string())?;
    let opts = HstarOptions { w0, half_open: false };
    let methods = compute_hstar(&j, Method::All, &opts).map_err(|e| e.to_string())?;
    to_json(&Explorer { triangulation, methods })
}

pub fn tree_json(subdivision: &str) -> Result<String, String> {
    let tau = parse_subdivision(subdivision).map_err(|e| e.to_string())?;
    if tau.n() > BROWSER_MAX_N {
        return Err(format!("n = {} is too large for the browser (max {BROWSER_MAX_N})", tau.n()));
    }
    to_json(&tree_report(&tau, None).map_err(|e| e.to_string())?)
}

pub fn random_subdivision_json(n: usize, seed: u64) -> Result<String, String> {
    if !(3..=BROWSER_MAX_N).contains(&n) {
        return Err(format!("n must be between 3 and {BROWSER_MAX_N}"));
    }
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let tau = random_subdivision(n, &mut rng);
    to_json(&serde_json::json!({ "n": tau.n(), "cells": tau.cells() }))
}

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct AtlasRow {
    necklace: String,
    decorated: String,
    labels: Option<usize>,
    hstar: Vec<i64>,
    verdict: positroid_core::pipeline::Verdict,
}

pub fn atlas_json(rank: usize, n: usize) -> Result<String, String> {
    if n == 0 || n > 6 || rank > n {
        return Err("the browser atlas covers 1 <= n <= 6 and rank <= n".into());
    }
    let rows = atlas_necklaces(rank, n, true)
        .iter()
        .map(|j| {
            let r = compute_hstar(j, Method::All, &HstarOptions::default()).map_err(|e| e.to_string())?;
            Ok(AtlasRow {
                necklace: r.positroid.necklace.clone(),
                decorated: r.positroid.decorated.clone(),
                labels: r.labels,
                hstar: r.hstar.values().next().cloned().unwrap_or_default(),
                verdict: r.verdict,
            })
        })
        .collect::<Result<Vec<_>, String>>()?;
    to_json(&rows)
}

/// Labels, dual graph, BFS covers, affine windows and all closed `h*` methods.
#[wasm_bindgen]
pub fn triangulation(positroid: &str, w0: &str) -> Result<String, JsError> {
    triangulation_json(positroid, w0).map_err(|e| JsError::new(&e))
}

/// Chains, arcs, circular extensions and `h*` of a bicolored subdivision.
#[wasm_bindgen]
pub fn tree(subdivision: &str) -> Result<String, JsError> {
    tree_json(subdivision).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = randomSubdivision)]
pub fn random_subdivision_js(n: usize, seed: u32) -> Result<String, JsError> {
    random_subdivision_json(n, seed.into()).map_err(|e| JsError::new(&e))
}

/// Connected positroids of the given rank on `[n]` with their `h*`.
#[wasm_bindgen]
pub fn atlas(rank: usize, n: usize) -> Result<String, JsError> {
    atlas_json(rank, n).map_err(|e| JsError::new(&e))
}
