//! Structure of monomial relation sets: relation cycles, potentials, gentle
//! invariants, Gorenstein dimension and the 2-Calabi-Yau tilted classification.

pub mod classify;
pub mod decomposition;
pub mod gentle;
pub mod potential;

pub use classify::{
    classify, gorenstein_dimension, singularity_invariants, Classification, FailedStage,
    GorensteinDimension, GorensteinError, GorensteinMethod, SingularityInvariants, Verdict,
};
pub use decomposition::{
    relation_cycle_decomposition, CycleComponent, RelationCycleDecomposition, StructureFailure,
};
pub use gentle::{gentle_2cy_relation_shape, gentle_profile, GentleProfile};
pub use potential::{
    build_potential, cyclic_derivative, jacobian_check, stably_3cy_test, JacobianReport,
    NonMonomialDerivative, Potential, PotentialTerm, Stably3CyFailure,
};

use crate::quiver::{ArrowId, Quiver};

/// Rotation of a cyclic arrow sequence that is least when compared by names.
pub fn canonical_rotation(q: &Quiver, cycle: &[ArrowId]) -> Vec<ArrowId> {
    let n = cycle.len();
    (0..n)
        .map(|k| {
            cycle[k..]
                .iter()
                .chain(&cycle[..k])
                .copied()
                .collect::<Vec<_>>()
        })
        .min_by(|a, b| names(q, a).cmp(&names(q, b)))
        .unwrap_or_default()
}

pub fn names(q: &Quiver, arrows: &[ArrowId]) -> Vec<String> {
    arrows.iter().map(|&a| q.arrow(a).name.clone()).collect()
}
