//! Browser-facing operations for the demo page: sweep the reservoir
//! coupling or the Rashba strength and read out a single working point.
//!
//! Every function returns JSON text so the page needs no generated glue
//! beyond the wasm-bindgen loader. Electrons enter at the reservoir Fermi
//! level (E = E_F = 0.2 a.u.) with unit effective mass; the sliders cover
//! the experimentally tunable knobs.

use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

use spinbeam::{
    evaluate_point, run_sweep, InputKind, RunConfig, SweepKey, SweepSpec, MICROMETER_AU,
};

#[derive(Serialize)]
struct SweepCurves {
    param: &'static str,
    values: Vec<f64>,
    concurrence: Vec<f64>,
    linear_entropy: Vec<f64>,
    jd: Vec<f64>,
    p4z: Vec<f64>,
    mixed_p4z: Vec<f64>,
    norm2: Vec<f64>,
}

#[derive(Serialize)]
struct PointReadout {
    n_occ: f64,
    jd: f64,
    norm2: f64,
    concurrence: f64,
    linear_entropy: f64,
    p3: [f64; 3],
    p4: [f64; 3],
    mixed_p4: [f64; 3],
    d4_weight: f64,
}

fn base_config(
    alpha: f64,
    beta: f64,
    epsilon: f64,
    temperature_k: f64,
    length_um: f64,
    junction_um: f64,
) -> RunConfig {
    RunConfig {
        alpha,
        beta,
        epsilon,
        temperature_k,
        length_au: length_um * MICROMETER_AU,
        junction_au: junction_um.min(length_um) * MICROMETER_AU,
        input: InputKind::Bell,
        ..RunConfig::default()
    }
}

fn error_json(msg: impl std::fmt::Display) -> String {
    serde_json::json!({ "error": msg.to_string() }).to_string()
}

fn curves(spec: &SweepSpec, param: &'static str) -> String {
    match run_sweep(spec) {
        Err(e) => error_json(e),
        Ok(rows) => {
            let pick = |f: &dyn Fn(&spinbeam::SweepRecord) -> f64| rows.iter().map(f).collect();
            let out = SweepCurves {
                param,
                values: rows
                    .iter()
                    .map(|r| match spec.key {
                        SweepKey::Epsilon => r.epsilon,
                        _ => r.alpha,
                    })
                    .collect(),
                concurrence: pick(&|r| r.observables.concurrence),
                linear_entropy: pick(&|r| r.observables.linear_entropy),
                jd: pick(&|r| r.observables.jd),
                p4z: pick(&|r| r.observables.p4.z),
                mixed_p4z: pick(&|r| r.observables.mixed_p4.z),
                norm2: pick(&|r| r.observables.norm2),
            };
            serde_json::to_string(&out).unwrap_or_else(error_json)
        }
    }
}

/// Sweep the reservoir coupling over [0, 1/2] at fixed spin-orbit strength.
#[wasm_bindgen]
pub fn sweep_epsilon_json(
    alpha: f64,
    beta: f64,
    temperature_k: f64,
    length_um: f64,
    junction_um: f64,
    steps: usize,
) -> String {
    let spec = SweepSpec {
        base: base_config(alpha, beta, 0.0, temperature_k, length_um, junction_um),
        key: SweepKey::Epsilon,
        from: 0.0,
        to: 0.5,
        steps,
    };
    curves(&spec, "epsilon")
}

/// Sweep the Rashba coupling at fixed reservoir coupling.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn sweep_alpha_json(
    epsilon: f64,
    beta: f64,
    temperature_k: f64,
    length_um: f64,
    junction_um: f64,
    alpha_from: f64,
    alpha_to: f64,
    steps: usize,
) -> String {
    let spec = SweepSpec {
        base: base_config(alpha_from, beta, epsilon, temperature_k, length_um, junction_um),
        key: SweepKey::Alpha,
        from: alpha_from,
        to: alpha_to,
        steps,
    };
    curves(&spec, "alpha")
}

/// Evaluate every observable at one working point.
#[wasm_bindgen]
pub fn point_json(
    alpha: f64,
    beta: f64,
    epsilon: f64,
    temperature_k: f64,
    length_um: f64,
    junction_um: f64,
) -> String {
    let cfg = base_config(alpha, beta, epsilon, temperature_k, length_um, junction_um);
    match evaluate_point(&cfg) {
        Err(e) => error_json(e),
        Ok(o) => serde_json::to_string(&PointReadout {
            n_occ: o.n_occ,
            jd: o.jd,
            norm2: o.norm2,
            concurrence: o.concurrence,
            linear_entropy: o.linear_entropy,
            p3: [o.p3.x, o.p3.y, o.p3.z],
            p4: [o.p4.x, o.p4.y, o.p4.z],
            mixed_p4: [o.mixed_p4.x, o.mixed_p4.y, o.mixed_p4.z],
            d4_weight: o.d4_weight,
        })
        .unwrap_or_else(error_json),
    }
}
