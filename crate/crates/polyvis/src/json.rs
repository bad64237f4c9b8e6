//! JSON-lines encoding of audit reports.

use polyvis_core::audits::{AuditReport, Violation, Witness};
use polyvis_core::graph::Edge;
use serde_json::{json, Map, Value};

fn edge(e: &Edge) -> Value {
    json!([e.lo, e.hi])
}

fn edges(es: &[Edge]) -> Value {
    Value::Array(es.iter().map(edge).collect())
}

pub fn witness(w: &Witness) -> Value {
    match w {
        Witness::K4(q) => json!({ "kind": "k4", "vertices": q }),
        Witness::Ktt(k) => json!({ "kind": "ktt", "a": k.a, "b": k.b }),
        Witness::Watcher { r, c, vertex } => json!({ "kind": "watcher", "r": r, "c": c, "vertex": vertex }),
        Witness::CrossingFamily(f) => json!({ "kind": "crossing_family", "edges": edges(f) }),
    }
}

pub fn violation(v: &Violation) -> Value {
    match v {
        Violation::K4SideMissing { quad, side } => {
            json!({ "kind": "k4_side_missing", "quad": quad, "side": edge(side) })
        }
        Violation::DenseWithoutCrossing { edges, bound } => {
            json!({ "kind": "dense_without_crossing", "edges": edges, "bound": bound })
        }
        Violation::NoCommonWatcher { r, c } => json!({ "kind": "no_common_watcher", "r": r, "c": c }),
        Violation::OccurrenceEdgeMissing { edge: e } => {
            json!({ "kind": "occurrence_edge_missing", "edge": edge(e) })
        }
        Violation::NonAdjacentDoubleCherry { u, v } => json!({ "kind": "non_adjacent_double_cherry", "u": u, "v": v }),
        Violation::NonAdjacentCrossingSequences { u, v } => {
            json!({ "kind": "non_adjacent_crossing_sequences", "u": u, "v": v })
        }
        Violation::CapoyleasPach { k, edges, bound } => {
            json!({ "kind": "capoyleas_pach", "k": k, "edges": edges, "bound": bound })
        }
        Violation::StarMissingEdge { ab, cd } => {
            json!({ "kind": "star_missing_edge", "ab": edge(ab), "cd": edge(cd) })
        }
        Violation::StarTooManyCrossings { family } => {
            json!({ "kind": "star_too_many_crossings", "edges": edges(family) })
        }
        Violation::KttNotVerified { a, b, missing } => {
            json!({ "kind": "ktt_not_verified", "a": a, "b": b, "missing": edge(missing) })
        }
    }
}

/// One JSON object per report, with keys in a fixed order.
pub fn report(r: &AuditReport) -> Value {
    let inst = &r.instance;
    let mut counters = Map::new();
    for &(k, v) in &r.counters {
        counters.insert(k.to_string(), json!(v));
    }
    json!({
        "theorem": r.theorem.name(),
        "instance": {
            "family": inst.family.map(|f| f.name()),
            "n": inst.n,
            "seed": inst.seed,
            "t": inst.t,
        },
        "verdict": r.verdict.name(),
        "witnesses": r.witnesses.iter().map(witness).collect::<Vec<_>>(),
        "violations": r.violations.iter().map(violation).collect::<Vec<_>>(),
        "counters": counters,
        "notes": r.notes,
    })
}

pub fn report_line(r: &AuditReport) -> String {
    report(r).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;
    use polyvis_core::audits::capoyleas_pach_audit;
    use polyvis_core::generators::{generate, Family};
    use polyvis_core::visibility::vertex_visibility_graph;

    #[test]
    fn report_shape() {
        let p = generate(Family::Fan, 6, 0).unwrap();
        let r = capoyleas_pach_audit(&vertex_visibility_graph(&p)).with_instance(Some(Family::Fan), Some(0));
        let v: Value = serde_json::from_str(&report_line(&r)).unwrap();
        assert_eq!(v["theorem"], "capoyleas-pach");
        assert_eq!(v["verdict"], "pass");
        assert_eq!(v["instance"]["family"], "fan");
        assert_eq!(v["instance"]["n"], 6);
        assert!(v["counters"]["maxcross"].is_i64());
        assert!(!report_line(&r).contains('\n'));
    }
}
