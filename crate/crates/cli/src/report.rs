use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use quiverkit::analysis::{
    names, Classification, GentleProfile, GorensteinDimension, GorensteinError, GorensteinMethod,
    RelationCycleDecomposition, SingularityInvariants,
};
use quiverkit::module::{Algebra, Module};
use quiverkit::BoundQuiver;

pub const SCHEMA_VERSION: u32 = 1;

pub fn digest(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

/// Common header of every report; sections are appended by the caller.
pub fn envelope(command: &str, path: &str, bytes: &[u8]) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert(
        "tool".into(),
        json!({"name": "quiverkit", "version": env!("CARGO_PKG_VERSION")}),
    );
    m.insert("command".into(), json!(command));
    m.insert(
        "input".into(),
        json!({"path": path, "sha256": digest(bytes)}),
    );
    m
}

pub fn quiver(bq: &BoundQuiver) -> Value {
    let q = bq.quiver();
    json!({
        "vertices": q.vertices(),
        "arrows": q.arrow_count(),
        "relations": bq.relations().iter().map(|r| r.display(q).to_string()).collect::<Vec<_>>(),
    })
}

pub fn gentle(bq: &BoundQuiver, p: &GentleProfile) -> Value {
    let q = bq.quiver();
    json!({
        "is_gentle": p.is_gentle,
        "violations": p.violations,
        "is_string": p.is_string,
        "saturated_cycles": p.saturated_cycles.iter().map(|c| names(q, c).join(".")).collect::<Vec<_>>(),
        "gentle_arrows": names(q, &p.gentle_arrows),
        "critical_paths": p.critical_paths.iter().map(|c| c.display(q).to_string()).collect::<Vec<_>>(),
        "n_lambda": p.n_lambda,
    })
}

pub fn gorenstein(g: &Result<GorensteinDimension, GorensteinError>) -> Value {
    match g {
        Ok(g) => json!({
            "value": g.value,
            "method": match g.method {
                GorensteinMethod::CriticalPaths => "critical_paths",
                GorensteinMethod::Homological => "homological",
            },
            "pd_dual_regular": g.dual_proj_dim.to_string(),
            "injdim_regular": g.inj_dim.to_string(),
        }),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

pub fn decomposition(bq: &BoundQuiver, dec: &RelationCycleDecomposition) -> Value {
    let q = bq.quiver();
    let comps: Vec<Value> = dec
        .components
        .iter()
        .map(|c| {
            json!({
                "cycle": names(q, &c.cycle).join("."),
                "n": c.n,
                "r": c.r,
                "relations": c.relations.iter().map(|r| r.display(q).to_string()).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({ "components": comps })
}

pub fn invariants(inv: &SingularityInvariants) -> Value {
    json!({
        "orbit_categories": inv.parameters.iter().map(|(a, n)| json!({"a": a, "tau_power": n})).collect::<Vec<_>>(),
        "indecomposables": inv.total,
    })
}

pub fn classification(bq: &BoundQuiver, c: &Classification) -> Value {
    let q = bq.quiver();
    let decomposition = match &c.decomposition {
        Ok(d) => decomposition(bq, d),
        Err(w) => json!({"failure": w.kind(), "witness": w.to_string()}),
    };
    let jacobian = c.jacobian.as_ref().map(|j| match j {
        Ok(r) => json!({
            "holds": r.holds,
            "derivatives": r.derivatives.iter().map(|(a, s, p)| json!({
                "arrow": q.arrow(*a).name,
                "scalar": s.to_string(),
                "path": p.display(q).to_string(),
            })).collect::<Vec<_>>(),
            "missing": r.missing.iter().map(|p| p.display(q).to_string()).collect::<Vec<_>>(),
            "extra": r.extra.iter().map(|p| p.display(q).to_string()).collect::<Vec<_>>(),
        }),
        Err(e) => json!({"error": e.to_string()}),
    });
    json!({
        "verdict": c.verdict.as_str(),
        "failures": c.failures.iter().map(|f| json!({"stage": f.name(), "detail": f.detail()})).collect::<Vec<_>>(),
        "decomposition": decomposition,
        "gorenstein": gorenstein(&c.gorenstein),
        "exponents": c.exponents,
        "potential": c.potential.as_ref().map(|w| w.display(q)),
        "jacobian": jacobian,
        "gentle_relation_shape": c.gentle_shape,
        "discrepancy": c.discrepancy,
    })
}

pub fn module(alg: &Algebra, m: &Module) -> Value {
    json!({
        "dims": m.dims(),
        "dimension_vector": alg.format_dims(m),
        "total_dim": m.total_dim(),
    })
}

/// Indented `key: value` rendering of a report.
pub fn human(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match val {
                    Value::Object(inner) if !inner.is_empty() => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                    Value::Array(items) if items.iter().any(|i| i.is_object() || i.is_array()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(val, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(val))),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}- {}\n", scalar(item))),
                }
            }
        }
        _ => out.push_str(&format!("{pad}{}\n", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        Value::Object(_) => "{}".into(),
        other => other.to_string(),
    }
}
