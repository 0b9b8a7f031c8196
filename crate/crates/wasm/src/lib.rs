//! Browser bindings for the static demo page in `www/`.
//!
//! The exported functions return JSON strings; the page renders them. One
//! engine lives for the lifetime of the module so repeated queries hit the memo.

use cuspidal_core::table::{cusp_table, cusp_tangent_table};
use cuspidal_core::{CuspVariant, Engine, Format};
use wasm_bindgen::prelude::*;

/// Upper degree bound exposed to the page.
pub const MAX_DEMO_DEGREE: i32 = 12;

thread_local! {
    static ENGINE: Engine = Engine::new();
}

fn with_engine<T>(f: impl FnOnce(&Engine) -> T) -> T {
    ENGINE.with(f)
}

pub fn cusp_rows(n: i32, dmax: i32, variant: &str) -> Result<String, String> {
    let variant: CuspVariant = variant.parse()?;
    if !(0..=2).contains(&n) {
        return Err(format!("n must be 0, 1 or 2 (got {n})"));
    }
    if !(3..=MAX_DEMO_DEGREE).contains(&dmax) {
        return Err(format!("dmax must be in 3..={MAX_DEMO_DEGREE} (got {dmax})"));
    }
    with_engine(|e| cusp_table(e, variant, dmax.into(), &[n.into()], false))
        .map(|t| t.render(Format::Json))
        .map_err(|e| e.to_string())
}

/// Returns `{"m2": .., "value": ".."}`, deriving `m2` from the other indices.
pub fn tangency_point(d1: i32, d2: i32, m1: i32, n: i32) -> Result<String, String> {
    let (d1, d2, m1, n) = (i64::from(d1), i64::from(d2), i64::from(m1), i64::from(n));
    if d1 + d2 > i64::from(MAX_DEMO_DEGREE) {
        return Err(format!("d1 + d2 must be at most {MAX_DEMO_DEGREE}"));
    }
    let m2 = 3 * (d1 + d2) - 3 - n - m1;
    let value = if m2 < 0 {
        0.into()
    } else {
        with_engine(|e| e.tangency_count(d1, d2, m1, m2, n)).map_err(|e| e.to_string())?
    };
    Ok(format!("{{\"m2\": {m2}, \"value\": \"{value}\"}}"))
}

/// Cusp-tangent table for n = 0, 1, 2 followed by the E6 quartic counts.
pub fn quartic_rows() -> Result<String, String> {
    with_engine(|e| {
        let ct = cusp_tangent_table(e, &[0, 1, 2]).map_err(|e| e.to_string())?;
        let e6: Vec<String> = (0..=2)
            .map(|n| e.e6_quartic_count(n).map(|v| format!("\"{v}\"")))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        Ok(format!("{{\"cusp_tangent\": {}, \"e6\": [{}]}}", ct.render(Format::Json).trim_end(), e6.join(", ")))
    })
}

#[wasm_bindgen(js_name = cuspTable)]
pub fn cusp_table_js(n: i32, dmax: i32, variant: &str) -> Result<String, JsValue> {
    cusp_rows(n, dmax, variant).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = tangency)]
pub fn tangency_js(d1: i32, d2: i32, m1: i32, n: i32) -> Result<String, JsValue> {
    tangency_point(d1, d2, m1, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = quarticTables)]
pub fn quartic_tables_js() -> Result<String, JsValue> {
    quartic_rows().map_err(|e| JsValue::from_str(&e))
}
