//! Browser bindings. Each export takes plain strings or numbers and returns
//! a JSON string, so the page needs no glue beyond `JSON.parse`.

use cantor_tableaux::enumeration::report::factor_cantorian;
use cantor_tableaux::enumeration::{census_at, CensusOptions};
use cantor_tableaux::equivalence::class_cardinality;
use cantor_tableaux::model::text::parse_inline;
use cantor_tableaux::permanent::{enumerate_permanent, find_witness, PermanentTester};
use cantor_tableaux::{Budget, Error, Tableau};
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest census the page will run.
pub const MAX_WEB_CELLS: (usize, usize) = (4, 4);

fn demo_budget() -> Budget {
    Budget {
        max_permanent_n: 6,
        max_canon_n: 7,
        ..Budget::default()
    }
}

fn rows(t: &Tableau) -> Vec<String> {
    t.rows()
        .map(|r| r.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(if t.alphabet_size() > 9 { " " } else { "" }))
        .collect()
}

fn alphabet(s: u32) -> Option<usize> {
    (s > 0).then_some(s as usize)
}

pub fn check_json(rows_text: &str, s: u32) -> Result<String, Error> {
    let t = parse_inline(rows_text, alphabet(s))?;
    let mut tester = PermanentTester::new();
    let cantorian = tester.is_cantorian(&t);
    let bicantorian = cantorian && tester.is_bicantorian(&t);
    let witness = find_witness(&t, true).map(|w| {
        json!({
            "word": w.word.to_string(),
            "from": if w.from_column { "column" } else { "row" },
            "rows": w.rows.iter().map(|r| r + 1).collect::<Vec<_>>(),
        })
    });
    let permanent = match enumerate_permanent(&t, &demo_budget()) {
        Ok(words) => json!(words.iter().map(ToString::to_string).collect::<Vec<_>>()),
        Err(_) => json!(null),
    };
    Ok(json!({
        "rows": rows(&t),
        "cantorian": cantorian,
        "bicantorian": bicantorian,
        "witness": witness,
        "permanent": permanent,
    })
    .to_string())
}

pub fn classify_json(rows_text: &str, s: u32) -> Result<String, Error> {
    let t = parse_inline(rows_text, alphabet(s))?;
    let r = class_cardinality(&t, &demo_budget())?;
    Ok(json!({
        "representative": rows(&r.representative),
        "invariant": r.invariant.to_string(),
        "eta": r.eta,
        "theta": r.theta,
        "orbit_phi": r.orbit_phi_size,
        "orbit_psi": r.orbit_psi_size.to_string(),
        "cardinality": r.cardinality.to_string(),
    })
    .to_string())
}

pub fn census_json(n: u32, s: u32) -> Result<String, Error> {
    let (n, s) = (n as usize, s as usize);
    if n > MAX_WEB_CELLS.0 || s > MAX_WEB_CELLS.1 {
        return Err(Error::Refusal(format!(
            "the demo runs censuses up to n = {}, s = {}; use the command-line tool for larger cells",
            MAX_WEB_CELLS.0, MAX_WEB_CELLS.1
        )));
    }
    let r = census_at(n, s, &CensusOptions::new(demo_budget()))?;
    Ok(json!({
        "n": n,
        "s": s,
        "classes": r.representative_count,
        "tested": r.tested_count,
        "total": r.total_cantorian.to_string(),
        "factored": factor_cantorian(&r.total_cantorian, n, s),
        "per_class": r.per_class.iter().map(|c| json!({
            "representative": rows(&c.representative),
            "cardinality": c.cardinality.to_string(),
        })).collect::<Vec<_>>(),
    })
    .to_string())
}

fn to_js(r: Result<String, Error>) -> Result<String, JsError> {
    r.map_err(|e| JsError::new(&e.to_string()))
}

/// Cantorian and bi-Cantorian status, a witness if any, and the permanent.
/// `s = 0` infers the alphabet from the largest letter.
#[wasm_bindgen]
pub fn check(rows_text: &str, s: u32) -> Result<String, JsError> {
    to_js(check_json(rows_text, s))
}

#[wasm_bindgen]
pub fn classify(rows_text: &str, s: u32) -> Result<String, JsError> {
    to_js(classify_json(rows_text, s))
}

#[wasm_bindgen]
pub fn census(n: u32, s: u32) -> Result<String, JsError> {
    to_js(census_json(n, s))
}
