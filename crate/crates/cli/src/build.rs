use std::path::Path;

use balprod::classical::{dual_code, exact_distance, gv_plus_search, CodeRecipe, LinearCode};
use balprod::graphs::{lps_graph, quotient_graph, second_eigenvalue, GroupAction, LabeledGraph};
use balprod::products::{circle_balanced_product, toy_circle_instance, CircleProduct};
use balprod::quantum::{
    dressed_distance, pk_bounds, subsystem_from_split, write_bundle, BoundReport, BoundStats, PauliType, SearchOptions,
};
use balprod::tanner::{build_tanner, build_tanner_labeled, measured_beta, theorem7_beta, theorem8_beta, TannerComplex};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{construction, CliError};
use crate::recipe::{Labeling, Recipe};

/// Weight limit for the exhaustive expansion measurement; chains up to
/// this weight are enumerated on ∂ and δ.
pub const MEASURE_WEIGHT_CAP: usize = 3;

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub alpha_ho: f64,
    pub alpha_co: f64,
    pub search: SearchOptions,
}

#[derive(Clone, Debug, Serialize)]
struct LocalInfo {
    recipe: CodeRecipe,
    n: usize,
    k: usize,
    distance: Option<usize>,
    dual_distance: Option<usize>,
    gv_trials: Option<usize>,
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn local_code(recipe: &CodeRecipe) -> Result<(LinearCode, Option<usize>), CliError> {
    if let CodeRecipe::Gv(p) = recipe {
        let r = gv_plus_search(p).map_err(construction)?;
        return Ok((r.code, Some(r.trials.len())));
    }
    Ok((recipe.build().map_err(construction)?, None))
}

/// Among the global relabelings l ↦ a·l + c (gcd(a, s) = 1), which commute
/// with the action, the first one maximizing the dimension of the quotient
/// Tanner code.
fn search_global_labeling(x: &LabeledGraph, act: &GroupAction, local: &LinearCode) -> Result<(LabeledGraph, String), CliError> {
    let s = x.degree();
    let base = quotient_graph(act).map_err(construction)?.base;
    let mut best: Option<(usize, LabeledGraph, String)> = None;
    for a in (1..s).filter(|&a| gcd(a, s) == 1) {
        for c in 0..s {
            let f = move |_: usize, l: usize| (a * l + c) % s;
            let k = build_tanner(&base.relabeled(f).map_err(construction)?, local).map_err(construction)?.code().k();
            if best.as_ref().is_none_or(|b| k > b.0) {
                best = Some((k, x.relabeled(f).map_err(construction)?, format!("affine l -> {a}l+{c} mod {s}")));
            }
        }
    }
    let (_, y, desc) = best.expect("a = 1, c = 0 is always tried");
    Ok((y, desc))
}

fn bounds(t: &TannerComplex, cp: &CircleProduct, lambda2: f64, opts: &BuildOptions) -> Result<Value, CliError> {
    let s = t.graph().degree();
    let local = t.local();
    let d_local = exact_distance(local).map_err(construction)?.unwrap_or(s + 1);
    let d_dual = exact_distance(&dual_code(local)).map_err(construction)?.unwrap_or(0);
    let beta_ho = theorem7_beta(s, lambda2, d_local, opts.alpha_ho).map(|b| b.2).ok();
    let beta_co = theorem8_beta(s, lambda2, local.k(), d_dual, opts.alpha_co).ok();
    let clamp = |b: Option<f64>| b.unwrap_or(0.0).max(0.0);
    let stats = BoundStats::of(cp);
    let theorem: BoundReport =
        pk_bounds(stats, opts.alpha_ho, clamp(beta_ho), opts.alpha_co, clamp(beta_co)).map_err(construction)?;
    let d = t.boundary();
    let measured_ho = measured_beta(&d, opts.alpha_ho, MEASURE_WEIGHT_CAP);
    let measured_co = measured_beta(&d.transpose(), opts.alpha_co, MEASURE_WEIGHT_CAP);
    let measured = match (measured_ho, measured_co) {
        (Some(bh), Some(bc)) => Some(pk_bounds(stats, opts.alpha_ho, bh, opts.alpha_co, bc).map_err(construction)?),
        _ => None,
    };
    Ok(json!({
        "beta_ho_theorem7": beta_ho,
        "beta_co_theorem8": beta_co,
        "from_theorems": theorem,
        "beta_ho_measured": measured_ho,
        "beta_co_measured": measured_co,
        "from_measured_expansion": measured,
    }))
}

/// Builds the horizontal subsystem code of `t ⊗_{Z_ℓ} C(C_ℓ)` and writes it
/// to `out`. Returns the params.json contents.
pub fn build_instance(
    t: &TannerComplex,
    act: &GroupAction,
    mut details: Value,
    out: &Path,
    opts: &BuildOptions,
) -> Result<Value, CliError> {
    let x = t.graph();
    let lambda2 = second_eigenvalue(x).map_err(construction)?;
    let cp = circle_balanced_product(t, act).map_err(construction)?;
    let split = cp.homology_split().map_err(construction)?;
    let code = subsystem_from_split(cp.total(), &split).map_err(construction)?;
    let dz = dressed_distance(&code, PauliType::Z, &opts.search).map_err(construction)?;
    let dx = dressed_distance(&code, PauliType::X, &opts.search).map_err(construction)?;
    let bounds = bounds(t, &cp, lambda2, opts)?;
    let extra = json!({
        "vertices": x.num_vertices(),
        "edges": x.num_edges(),
        "degree": x.degree(),
        "lambda2": lambda2,
        "ramanujan_bound": 2.0 * ((x.degree() - 1) as f64).sqrt(),
        "labeling": t.labeling(),
        "ell": cp.ell(),
        "quotient_vertices": cp.quotient().base.num_vertices(),
        "quotient_edges": cp.quotient().base.num_edges(),
        "quotient_tanner_k": cp.quotient_tanner().code().k(),
        "horizontal_dim": split.horizontal_dim(),
        "vertical_dim": split.vertical_dim(),
        "rate_lower_bound": cp.rate_lower_bound(),
        "distance_search": {
            "cap": opts.search.cap,
            "samples": opts.search.samples,
            "seed": opts.search.seed,
            "visited_z": dz.visited,
            "visited_x": dx.visited,
        },
        "bounds": bounds,
    });
    if let (Value::Object(d), Value::Object(e)) = (&mut details, extra) {
        d.extend(e);
    }
    let params = write_bundle(out, &code, Some(dx.distance), Some(dz.distance), details).map_err(|e| match e {
        balprod::quantum::QuantumError::Io(io) => CliError::Io(io),
        other => construction(other),
    })?;
    Ok(serde_json::to_value(params)?)
}

pub fn build_lps(recipe: &Recipe, out: &Path, opts: &BuildOptions) -> Result<Value, CliError> {
    let lps = lps_graph(recipe.p, recipe.q).map_err(|e| CliError::RecipeInvalid(e.to_string()))?;
    let (local, gv_trials) = local_code(&recipe.local)?;
    let s = lps.graph.degree();
    if local.n() != s {
        return Err(CliError::RecipeInvalid(format!("local code has length {} but X has degree s = {s}", local.n())));
    }
    let h = lps.group.unipotent_subgroup().map_err(construction)?;
    let act = GroupAction::cayley_right(lps.graph.clone(), &lps.group, &h).map_err(construction)?;
    let (graph, desc) = match recipe.labeling {
        Labeling::Canonical => (lps.graph.clone(), "canonical".to_string()),
        Labeling::Search => search_global_labeling(&lps.graph, &act, &local)?,
    };
    let act = GroupAction::cayley_right(graph.clone(), &lps.group, &h).map_err(construction)?;
    let t = build_tanner_labeled(&graph, &local, &desc).map_err(construction)?;
    let info = LocalInfo {
        recipe: recipe.local.clone(),
        n: local.n(),
        k: local.k(),
        distance: exact_distance(&local).map_err(construction)?,
        dual_distance: exact_distance(&dual_code(&local)).map_err(construction)?,
        gv_trials,
    };
    let details = json!({ "instance": "lps", "recipe": recipe, "local": info });
    build_instance(&t, &act, details, out, opts)
}

/// X = C_9, H = Z_3 by rotation, L = [2,1,2].
pub fn build_toy(out: &Path, opts: &BuildOptions) -> Result<Value, CliError> {
    let (t, act) = toy_circle_instance().map_err(construction)?;
    let details = json!({ "instance": "toy", "local": { "recipe": CodeRecipe::Repetition { n: 2 }, "n": 2, "k": 1 } });
    build_instance(&t, &act, details, out, opts)
}
