//! Bound quivers used throughout the tests and the command-line tool.

use crate::quiver::BoundQuiver;

pub const SQUARE_AND_LOOP: &str = include_str!("../fixtures/square_and_loop.json");
pub const TRIANGLES_AND_LOOP: &str = include_str!("../fixtures/triangles_and_loop.json");
pub const LINEAR_A4: &str = include_str!("../fixtures/linear_a4.json");
pub const TWO_CLUSTER_D6: &str = include_str!("../fixtures/two_cluster_d6.json");

fn load(text: &str) -> BoundQuiver {
    BoundQuiver::parse_json(text).expect("bundled fixture is valid")
}

/// 4-cycle with cubic relations and a loop with `lambda^4 = 0`.
pub fn square_and_loop() -> BoundQuiver {
    load(SQUARE_AND_LOOP)
}

/// Three 3-cycles and a loop, together with the arrows `lambda1`, `lambda2`.
pub fn triangles_and_loop() -> BoundQuiver {
    load(TRIANGLES_AND_LOOP)
}

/// Linear `A_4` quiver bound by `beta.alpha`.
pub fn linear_a4() -> BoundQuiver {
    load(LINEAR_A4)
}

/// Six vertices, relations `lambda.alpha`, `alpha.beta.gamma`, `beta.gamma.delta`, `delta.lambda`.
pub fn two_cluster_d6() -> BoundQuiver {
    load(TWO_CLUSTER_D6)
}

/// Named fixtures in a fixed order.
pub fn all() -> Vec<(&'static str, BoundQuiver)> {
    vec![
        ("square-and-loop", square_and_loop()),
        ("triangles-and-loop", triangles_and_loop()),
        ("linear-a4", linear_a4()),
        ("two-cluster-d6", two_cluster_d6()),
    ]
}
