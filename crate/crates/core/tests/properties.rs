use proptest::prelude::*;

use quiverkit::analysis::{classify, relation_cycle_decomposition, StructureFailure, Verdict};
use quiverkit::module::EngineConfig;
use quiverkit::BoundQuiver;

/// Vertex-disjoint cycles `(n, r)`, each carrying all its length-`r` subpaths
/// as relations, plus unrelated arrows between the cycles.
fn cycles_quiver(
    cycles: &[(usize, usize)],
    bridges: &[(usize, usize)],
    skip: Option<usize>,
) -> BoundQuiver {
    let mut vertices = Vec::new();
    let mut arrows = Vec::new();
    let mut relations: Vec<Vec<String>> = Vec::new();
    for (c, &(n, r)) in cycles.iter().enumerate() {
        for i in 0..n {
            vertices.push(format!("v{c}_{i}"));
            arrows.push((
                format!("a{c}_{i}"),
                format!("v{c}_{i}"),
                format!("v{c}_{}", (i + 1) % n),
            ));
        }
        for i in 0..n {
            relations.push((0..r).map(|k| format!("a{c}_{}", (i + k) % n)).collect());
        }
    }
    for (k, &(x, y)) in bridges.iter().enumerate() {
        let (cx, cy) = (x % cycles.len(), y % cycles.len());
        if cx < cy {
            arrows.push((format!("b{k}"), format!("v{cx}_0"), format!("v{cy}_0")));
        }
    }
    if let Some(i) = skip {
        relations.remove(i);
    }
    let v: Vec<&str> = vertices.iter().map(String::as_str).collect();
    let a: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, f, t)| (n.as_str(), f.as_str(), t.as_str()))
        .collect();
    let rel: Vec<Vec<&str>> = relations
        .iter()
        .map(|r| r.iter().map(String::as_str).collect())
        .collect();
    let rel: Vec<&[&str]> = rel.iter().map(Vec::as_slice).collect();
    BoundQuiver::build(&v, &a, &rel).unwrap()
}

fn cycle_params() -> impl Strategy<Value = Vec<(usize, usize)>> {
    prop::collection::vec((1usize..5, 2usize..7), 1..4)
}

proptest! {
    #[test]
    fn decomposition_recovers_cycles(
        cycles in cycle_params(),
        bridges in prop::collection::vec((0usize..3, 0usize..3), 0..3),
    ) {
        let bq = cycles_quiver(&cycles, &bridges, None);
        let dec = relation_cycle_decomposition(&bq).unwrap();
        let mut found: Vec<(usize, usize)> = dec.components.iter().map(|c| (c.n, c.r)).collect();
        let mut expected = cycles.clone();
        found.sort();
        expected.sort();
        prop_assert_eq!(found, expected);
        for c in &dec.components {
            prop_assert_eq!(c.relations.len(), c.n);
        }
    }

    #[test]
    fn dropping_a_relation_breaks_the_cycle(cycles in cycle_params(), pick in 0usize..100) {
        let relations: usize = cycles.iter().map(|c| c.0).sum();
        let skip = pick % relations;
        let mut start = 0;
        let owner = cycles.iter().position(|c| { start += c.0; skip < start }).unwrap();
        prop_assume!(cycles[owner].0 >= 2);
        let bq = cycles_quiver(&cycles, &[], Some(skip));
        let failed = matches!(relation_cycle_decomposition(&bq), Err(StructureFailure::MissingSubpath { .. }));
        prop_assert!(failed);
    }

    #[test]
    fn tilted_exactly_when_cycle_lengths_divide(cycles in cycle_params()) {
        let bq = cycles_quiver(&cycles, &[], None);
        let divides = cycles.iter().all(|&(n, r)| (r + 1) % n == 0);
        let c = classify(&bq, &EngineConfig::default());
        prop_assert_eq!(c.verdict == Verdict::Jacobian2CyTilted, divides);
        if divides {
            let holds = matches!(&c.jacobian, Some(Ok(j)) if j.holds);
            prop_assert!(holds);
        }
    }

    #[test]
    fn documents_round_trip(cycles in cycle_params(), bridges in prop::collection::vec((0usize..3, 0usize..3), 0..3)) {
        let bq = cycles_quiver(&cycles, &bridges, None);
        let back = BoundQuiver::parse_json(&bq.to_json()).unwrap();
        prop_assert_eq!(&back, &bq);
        prop_assert_eq!(back.to_json(), bq.to_json());
    }
}
