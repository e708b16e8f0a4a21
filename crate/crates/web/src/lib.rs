//! Browser demo bindings.
//!
//! Every export takes and returns JSON strings so the page needs no glue
//! beyond `wasm-bindgen`'s generated loader. The plain-Rust functions
//! (`*_json`) carry the logic and are tested natively; the `#[wasm_bindgen]`
//! wrappers only convert errors.

use serde::Deserialize;
use serde_json::{json, Value};
use telescoper::bounds::{
    curve, default_r_cap, degree_for_order, extremal_corollary, optimize_metric, Metric,
};
use telescoper::corpus;
use telescoper::hyperexp::{greek_params, validate, HyperexpTerm};
use telescoper::polyarith::parse_poly;
use telescoper::polyarith::rat::{parse_rat, rat_to_string};
use telescoper::telescope::{telescope_at, Mode};
use wasm_bindgen::prelude::*;

/// Largest order or degree the page may request; keeps the tab responsive.
const MAX_ORDER: usize = 6;
const MAX_DEGREE: i64 = 40;

#[derive(Debug, Deserialize)]
struct FactorInput {
    poly: String,
    exponent: String,
}

/// Same layout as the command-line term files.
#[derive(Debug, Deserialize)]
struct TermInput {
    c0: String,
    #[serde(default = "zero")]
    a: String,
    #[serde(default = "one")]
    b: String,
    #[serde(default)]
    factors: Vec<FactorInput>,
}

fn zero() -> String {
    "0".into()
}

fn one() -> String {
    "1".into()
}

fn parse_term(src: &str) -> Result<HyperexpTerm, String> {
    let t: TermInput = serde_json::from_str(src).map_err(|e| format!("term JSON: {e}"))?;
    let poly = |field: &str, s: &str| parse_poly(s).map_err(|e| format!("{field}: {e}"));
    let mut factors = Vec::with_capacity(t.factors.len());
    for (k, f) in t.factors.iter().enumerate() {
        let e = parse_rat(&f.exponent)
            .ok_or_else(|| format!("factors[{k}].exponent: not a rational number"))?;
        factors.push((poly(&format!("factors[{k}].poly"), &f.poly)?, e));
    }
    let term = HyperexpTerm::new(
        poly("c0", &t.c0)?,
        poly("a", &t.a)?,
        poly("b", &t.b)?,
        factors,
    )
    .map_err(|e| e.to_string())?;
    validate(&term).map_err(|e| e.to_string())?;
    Ok(term)
}

/// The built-in terms as `[{name, summary, term}]`.
pub fn builtin_terms_json() -> String {
    let list: Vec<Value> = corpus::ALL
        .iter()
        .map(|t| {
            json!({
                "name": t.name,
                "summary": t.summary,
                "term": {
                    "c0": t.c0,
                    "a": t.a,
                    "b": t.b,
                    "factors": t.factors.iter().map(|(p, e)| json!({"poly": p, "exponent": e})).collect::<Vec<_>>(),
                },
            })
        })
        .collect();
    Value::Array(list).to_string()
}

/// Parameters, the bound curve, and the guaranteed degree for `points`
/// consecutive orders above the pole.
pub fn curve_json(term: &str, points: usize) -> Result<String, String> {
    let t = parse_term(term)?;
    let gp = greek_params(&t);
    let c = curve(&gp);
    let (min_order, min_degree) = extremal_corollary(&gp);
    let first = (c.psi + 1).max(1);
    let samples: Vec<Value> = (first..first + points.clamp(1, 200) as i64)
        .map(|r| {
            let d = degree_for_order(&c, r).map_err(|e| e.to_string())?;
            let exact = c.value_at(r).map_err(|e| e.to_string())?;
            Ok(json!({"r": r, "d": d, "curve": rat_to_string(&exact)}))
        })
        .collect::<Result<_, String>>()?;
    Ok(json!({
        "term": t.describe(),
        "params": gp,
        "curve": c,
        "min_order": min_order,
        "min_degree": min_degree,
        "samples": samples,
    })
    .to_string())
}

/// Optimal orders for every metric.
pub fn optimize_json(term: &str) -> Result<String, String> {
    let gp = greek_params(&parse_term(term)?);
    let reports: Vec<Value> = Metric::ALL
        .iter()
        .map(|&m| {
            let rep = optimize_metric(&gp, m, default_r_cap(&gp, m)).map_err(|e| e.to_string())?;
            serde_json::to_value(rep).map_err(|e| e.to_string())
        })
        .collect::<Result<_, String>>()?;
    Ok(Value::Array(reports).to_string())
}

/// A verified relation at `(order, degree)`, or `{"relation": null}`.
pub fn relation_json(
    term: &str,
    order: usize,
    degree: i64,
    shaped: bool,
) -> Result<String, String> {
    if order == 0 || order > MAX_ORDER || !(0..=MAX_DEGREE).contains(&degree) {
        return Err(format!(
            "the demo accepts 1 ≤ order ≤ {MAX_ORDER} and 0 ≤ degree ≤ {MAX_DEGREE}"
        ));
    }
    let t = parse_term(term)?;
    let mode = if shaped { Mode::Shaped } else { Mode::Naive };
    let rel = telescope_at(&t, order, degree, mode, None).map_err(|e| e.to_string())?;
    Ok(match rel {
        None => json!({ "relation": null }),
        Some(rel) => json!({
            "relation": {
                "order": rel.r,
                "degree": rel.d,
                "operator": rel.telescoper_string(),
                "p": rel.p.iter().map(ToString::to_string).collect::<Vec<_>>(),
                "q_num": rel.q_num.to_string(),
                "q_denom_power": rel.q_denom_power,
            }
        }),
    }
    .to_string())
}

#[wasm_bindgen]
pub fn builtin_terms() -> String {
    builtin_terms_json()
}

#[wasm_bindgen]
pub fn bound_curve(term: &str, points: usize) -> Result<String, JsError> {
    curve_json(term, points).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn optimize_orders(term: &str) -> Result<String, JsError> {
    optimize_json(term).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn find_relation(
    term: &str,
    order: usize,
    degree: i32,
    shaped: bool,
) -> Result<String, JsError> {
    relation_json(term, order, i64::from(degree), shaped).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn builtin(name: &str) -> String {
        let all: Value = serde_json::from_str(&builtin_terms_json()).unwrap();
        all.as_array()
            .unwrap()
            .iter()
            .find(|t| t["name"] == name)
            .map(|t| t["term"].to_string())
            .unwrap()
    }

    #[test]
    fn curve_samples_start_above_the_pole() {
        let v: Value =
            serde_json::from_str(&curve_json(&builtin("cubic-exp"), 4).unwrap()).unwrap();
        let ds: Vec<i64> = v["samples"]
            .as_array()
            .unwrap()
            .iter()
            .map(|s| s["d"].as_i64().unwrap())
            .collect();
        assert_eq!(ds, vec![36, 24, 20, 18]);
        assert_eq!(v["curve"]["vartheta"], 12);
    }

    #[test]
    fn optimizer_covers_every_metric() {
        let v: Value =
            serde_json::from_str(&optimize_json(&builtin("random-sqrt-exp")).unwrap()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), Metric::ALL.len());
        assert_eq!(v[1]["metric"], "COST");
        assert_eq!(v[1]["r_opt"], 8);
    }

    #[test]
    fn relation_and_errors() {
        let v: Value =
            serde_json::from_str(&relation_json(&builtin("sqrt-exp"), 1, 3, true).unwrap())
                .unwrap();
        assert_eq!(v["relation"]["order"], 1);
        let none: Value =
            serde_json::from_str(&relation_json(&builtin("rational"), 1, 5, false).unwrap())
                .unwrap();
        assert!(none["relation"].is_null());
        assert!(relation_json(&builtin("sqrt-exp"), 9, 3, true).is_err());
        assert!(curve_json(r#"{"c0": "x +"}"#, 3).is_err());
        assert!(curve_json(r#"{"c0": "1", "a": "x"}"#, 3).is_err());
    }
}
