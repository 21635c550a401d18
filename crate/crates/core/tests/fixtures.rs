use quiverkit::analysis::{
    classify, gentle_profile, gorenstein_dimension, singularity_invariants, Verdict,
};
use quiverkit::angulation::{bound_quiver_from_angulation, polygon_fixture};
use quiverkit::module::{Algebra, EngineConfig, ProjDim};
use quiverkit::{fixtures, suites};

#[test]
fn fixture_dimensions() {
    let cfg = EngineConfig::default();
    for (name, gorenstein, global, verdict) in [
        (
            "square-and-loop",
            1,
            ProjDim::Infinite,
            Verdict::Jacobian2CyTilted,
        ),
        (
            "triangles-and-loop",
            1,
            ProjDim::Infinite,
            Verdict::Jacobian2CyTilted,
        ),
        ("linear-a4", 2, ProjDim::Finite(2), Verdict::Not2CyTilted),
        (
            "two-cluster-d6",
            2,
            ProjDim::Infinite,
            Verdict::Not2CyTilted,
        ),
    ] {
        let bq = fixtures::all()
            .into_iter()
            .find(|(n, _)| *n == name)
            .unwrap()
            .1;
        assert_eq!(
            gorenstein_dimension(&bq, &cfg).unwrap().value,
            gorenstein,
            "{name}"
        );
        assert_eq!(
            Algebra::new(bq.clone()).unwrap().global_dimension(),
            global,
            "{name}"
        );
        assert_eq!(classify(&bq, &cfg).verdict, verdict, "{name}");
    }
}

#[test]
fn linear_a4_syzygies_of_s3() {
    let alg = Algebra::new(fixtures::linear_a4()).unwrap();
    let [s1, s2, s3] = ["1", "2", "3"].map(|x| alg.simple(alg.vertex(x).unwrap()));
    assert!(alg.isomorphic(&alg.syzygy(&s3), &s2));
    assert!(alg.isomorphic(&alg.syzygy(&s2), &s1));
    assert!(alg.is_projective(&alg.syzygy_power(&s3, 2)));
}

#[test]
fn square_and_loop_singularity_category() {
    let dec =
        quiverkit::analysis::relation_cycle_decomposition(&fixtures::square_and_loop()).unwrap();
    let inv = singularity_invariants(&dec);
    assert_eq!(inv.parameters, vec![(2, 4), (3, 1)]);
    assert_eq!(inv.total, 11);
}

#[test]
fn omega_squared_tau_needs_tilted() {
    // self-injective, so 1-Gorenstein, but the stable category is not 3-CY
    let t = polygon_fixture(12, 2, &[(0, 3), (3, 6), (6, 9), (0, 9)]).unwrap();
    let bq = bound_quiver_from_angulation(&t).unwrap();
    let cfg = EngineConfig::default();
    assert_eq!(gorenstein_dimension(&bq, &cfg).unwrap().value, 0);
    assert_eq!(classify(&bq, &cfg).verdict, Verdict::Not2CyTilted);
    let alg = Algebra::new(bq).unwrap();
    let (cands, _) = alg.module_candidates(None);
    assert!(suites::omega_tau_in_gp(&alg, &cands).unwrap().is_empty());
    assert!(!suites::two_cy_tilted_check(&alg, &cands)
        .unwrap()
        .is_empty());
    assert!(suites::gp_equivalence(&alg, 2, &cands).unwrap().is_empty());
}

#[test]
fn triangles_and_loop_fails_gentleness_at_vertex_4() {
    let p = gentle_profile(&fixtures::triangles_and_loop());
    assert!(!p.is_gentle);
    assert!(
        p.violations.iter().any(|v| v.contains("lambda1")),
        "{:?}",
        p.violations
    );
}
