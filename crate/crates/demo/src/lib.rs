//! Browser bindings for a few `genbound` computations.
//!
//! Every export returns a JSON string; failures come back as `{"error": "..."}`.

use genbound::criteria::{self, AlphaBetaMode, FieldShape};
use genbound::kernel;
use genbound::quadratic::{class_group, FundamentalDiscriminant};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn finish(result: genbound::Result<Value>) -> String {
    match result {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e.to_string() }).to_string(),
    }
}

/// Samples of `f(c, n)` on `(1, c_max)` together with its minimizer.
#[wasm_bindgen]
pub fn window_curve(n: u32, points: u32) -> String {
    finish((|| {
        let (c_star, f_star) = kernel::minimize_c(n)?;
        let c_max = kernel::max_window(n);
        let points = points.clamp(2, 2000);
        let curve: Vec<[f64; 2]> = (1..points)
            .map(|k| 1.0 + (c_max - 1.0) * f64::from(k) / f64::from(points))
            .filter_map(|c| kernel::f_objective(c, n).ok().map(|f| [c, f]))
            .collect();
        Ok(json!({ "n": n, "c_star": c_star, "f_star": f_star, "c_max": c_max, "curve": curve }))
    })())
}

/// Least `T` certified by the field-independent test for a field shape.
#[wasm_bindgen]
pub fn generic_bound(n: u32, r1: u32, log_disc: f64, floor_mode: bool) -> String {
    finish((|| {
        let shape = FieldShape::new(n, r1, log_disc)?;
        let mode = if floor_mode { AlphaBetaMode::Floor } else { AlphaBetaMode::Exact };
        let r = criteria::minimal_t_generic(&shape, mode)?;
        let terms: Vec<Value> =
            r.evaluation.rhs_terms.iter().map(|(t, v)| json!({ "term": t.name(), "value": v })).collect();
        Ok(json!({
            "t_bound": r.t_bound,
            "c_used": r.c_used,
            "ratio": r.t_bound / (log_disc * log_disc),
            "margin": r.margin,
            "lhs": r.evaluation.lhs,
            "terms": terms,
        }))
    })())
}

/// Class group of `Q(sqrt d)` and whether primes up to `bound` generate it.
#[wasm_bindgen]
pub fn quadratic_class_group(d: i64, bound: f64) -> String {
    finish((|| {
        let group = class_group(FundamentalDiscriminant::new(d)?);
        let gen = group.generated_by_primes_up_to(bound);
        let forms: Vec<String> = group.classes().iter().map(ToString::to_string).collect();
        Ok(json!({
            "d": d,
            "h": group.order(),
            "invariant_factors": group.invariant_factors(),
            "forms": forms,
            "primes": gen.primes_used,
            "subgroup_order": gen.subgroup_order,
            "generates": gen.generates,
        }))
    })())
}
