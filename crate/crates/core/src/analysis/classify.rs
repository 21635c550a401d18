use thiserror::Error;

use super::{
    build_potential, gentle_2cy_relation_shape, gentle_profile, jacobian_check,
    relation_cycle_decomposition, stably_3cy_test, JacobianReport, NonMonomialDerivative,
    Potential, RelationCycleDecomposition, Stably3CyFailure, StructureFailure,
};
use crate::module::{Algebra, EngineConfig, ModuleError, ProjDim};
use crate::quiver::BoundQuiver;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GorensteinMethod {
    /// Longest critical path of a gentle algebra.
    CriticalPaths,
    /// Projective dimension of the injectives over the algebra and its opposite.
    Homological,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GorensteinDimension {
    pub value: usize,
    pub method: GorensteinMethod,
    /// `max pd I(x)`.
    pub dual_proj_dim: ProjDim,
    /// The same over the opposite algebra, i.e. the injective dimension of the regular module.
    pub inj_dim: ProjDim,
}

#[derive(Debug, Error)]
pub enum GorensteinError {
    #[error("not Iwanaga-Gorenstein: pd D(A^op) = {dual_proj_dim}, inj.dim A = {inj_dim}")]
    NotGorenstein {
        dual_proj_dim: ProjDim,
        inj_dim: ProjDim,
    },
    #[error("could not decide the Gorenstein dimension: pd D(A^op) = {dual_proj_dim}, inj.dim A = {inj_dim}")]
    Undecided {
        dual_proj_dim: ProjDim,
        inj_dim: ProjDim,
    },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

/// Gorenstein dimension: the longest critical path for gentle algebras with
/// one, otherwise `pd` of the injective cogenerator, required to agree with
/// the injective dimension of the regular module.
pub fn gorenstein_dimension(
    bq: &BoundQuiver,
    config: &EngineConfig,
) -> Result<GorensteinDimension, GorensteinError> {
    let profile = gentle_profile(bq);
    let alg = Algebra::with_config(bq.clone(), config.clone())?;
    let op = Algebra::with_config(bq.opposite(), config.clone())?;
    let dual_proj_dim = alg.injective_cogenerator_pd();
    let inj_dim = op.injective_cogenerator_pd();
    if profile.is_gentle && profile.n_lambda > 0 {
        return Ok(GorensteinDimension {
            value: profile.n_lambda,
            method: GorensteinMethod::CriticalPaths,
            dual_proj_dim,
            inj_dim,
        });
    }
    match (dual_proj_dim, inj_dim) {
        (ProjDim::Finite(a), ProjDim::Finite(b)) if a == b => Ok(GorensteinDimension {
            value: a,
            method: GorensteinMethod::Homological,
            dual_proj_dim,
            inj_dim,
        }),
        (ProjDim::Infinite, _) | (_, ProjDim::Infinite) => Err(GorensteinError::NotGorenstein {
            dual_proj_dim,
            inj_dim,
        }),
        _ => Err(GorensteinError::Undecided {
            dual_proj_dim,
            inj_dim,
        }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Jacobian2CyTilted,
    Not2CyTilted,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Jacobian2CyTilted => "JACOBIAN_2CY_TILTED",
            Verdict::Not2CyTilted => "NOT_2CY_TILTED",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FailedStage {
    Decomposition(StructureFailure),
    Gorenstein(String),
    NotOneGorenstein(usize),
    Stably3Cy(Stably3CyFailure),
    Jacobian(String),
}

impl FailedStage {
    pub fn name(&self) -> &'static str {
        match self {
            FailedStage::Decomposition(_) => "decomposition",
            FailedStage::Gorenstein(_) => "gorenstein",
            FailedStage::NotOneGorenstein(_) => "one_gorenstein",
            FailedStage::Stably3Cy(_) => "stably_3cy",
            FailedStage::Jacobian(_) => "jacobian",
        }
    }

    pub fn detail(&self) -> String {
        match self {
            FailedStage::Decomposition(w) => w.to_string(),
            FailedStage::Gorenstein(e) => e.clone(),
            FailedStage::NotOneGorenstein(d) => format!("Gorenstein dimension {d} exceeds 1"),
            FailedStage::Stably3Cy(f) => f.to_string(),
            FailedStage::Jacobian(e) => e.clone(),
        }
    }
}

#[derive(Debug)]
pub struct Classification {
    pub verdict: Verdict,
    /// Every stage that failed, in pipeline order.
    pub failures: Vec<FailedStage>,
    pub decomposition: Result<RelationCycleDecomposition, StructureFailure>,
    pub gorenstein: Result<GorensteinDimension, GorensteinError>,
    pub exponents: Option<Vec<usize>>,
    pub potential: Option<Potential>,
    pub jacobian: Option<Result<JacobianReport, NonMonomialDerivative>>,
    /// For gentle algebras: whether every relation lies on a saturated
    /// 3-cycle or is the square of a saturated loop.
    pub gentle_shape: Option<bool>,
    /// Set when the relation structure and the 1-Gorenstein test disagree.
    pub discrepancy: Option<String>,
}

/// Relation-cycle structure, 1-Gorenstein and stably 3-CY together decide
/// whether the algebra is 2-CY tilted; a potential is built and checked when
/// they all hold.
pub fn classify(bq: &BoundQuiver, config: &EngineConfig) -> Classification {
    let q = bq.quiver();
    let decomposition = relation_cycle_decomposition(bq);
    let gorenstein = gorenstein_dimension(bq, config);
    let mut failures = Vec::new();
    if let Err(w) = &decomposition {
        failures.push(FailedStage::Decomposition(w.clone()));
    }
    match &gorenstein {
        Err(e) => failures.push(FailedStage::Gorenstein(e.to_string())),
        Ok(g) if g.value > 1 => failures.push(FailedStage::NotOneGorenstein(g.value)),
        Ok(_) => {}
    }
    let one_gorenstein = matches!(&gorenstein, Ok(g) if g.value <= 1);
    let discrepancy = match (&decomposition, one_gorenstein) {
        (Err(w), true) => Some(format!(
            "1-Gorenstein but the relations have no cycle structure: {w}"
        )),
        _ => None,
    };
    let mut exponents = None;
    let mut potential = None;
    let mut jacobian = None;
    if let Ok(dec) = &decomposition {
        match stably_3cy_test(dec) {
            Ok(b) => {
                let w = build_potential(q, dec, &b);
                let check = jacobian_check(bq, &w);
                match &check {
                    Ok(r) if r.holds => {}
                    Ok(r) => failures.push(FailedStage::Jacobian(format!(
                        "{} relations not generated, {} extra derivatives",
                        r.missing.len(),
                        r.extra.len()
                    ))),
                    Err(e) => failures.push(FailedStage::Jacobian(e.to_string())),
                }
                exponents = Some(b);
                potential = Some(w);
                jacobian = Some(check);
            }
            Err(f) => failures.push(FailedStage::Stably3Cy(f)),
        }
    }
    let profile = gentle_profile(bq);
    let gentle_shape = profile
        .is_gentle
        .then(|| gentle_2cy_relation_shape(bq, &profile).0);
    let verdict = if failures.is_empty() {
        Verdict::Jacobian2CyTilted
    } else {
        Verdict::Not2CyTilted
    };
    Classification {
        verdict,
        failures,
        decomposition,
        gorenstein,
        exponents,
        potential,
        jacobian,
        gentle_shape,
        discrepancy,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularityInvariants {
    /// `(r_i - 1, n_i)` per cycle: the orbit category `D^b(A_{r-1}) / tau^n`.
    pub parameters: Vec<(usize, usize)>,
    /// Predicted number of non-projective indecomposable Gorenstein-projectives.
    pub total: usize,
}

pub fn singularity_invariants(dec: &RelationCycleDecomposition) -> SingularityInvariants {
    let parameters: Vec<(usize, usize)> = dec.components.iter().map(|c| (c.r - 1, c.n)).collect();
    let total = parameters.iter().map(|(a, n)| a * n).sum();
    SingularityInvariants { parameters, total }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn square_and_loop_is_jacobian() {
        let bq = fixtures::square_and_loop();
        let c = classify(&bq, &EngineConfig::default());
        assert_eq!(c.verdict, Verdict::Jacobian2CyTilted, "{:?}", c.failures);
        assert_eq!(
            c.potential.unwrap().display(bq.quiver()),
            "alpha.beta.gamma.delta + lambda^5"
        );
        let inv = singularity_invariants(c.decomposition.as_ref().unwrap());
        assert_eq!(inv.parameters, vec![(2, 4), (3, 1)]);
        assert_eq!(inv.total, 11);
    }

    #[test]
    fn two_cluster_d6() {
        let bq = fixtures::two_cluster_d6();
        let g = gorenstein_dimension(&bq, &EngineConfig::default()).unwrap();
        assert_eq!(g.value, 2);
        let c = classify(&bq, &EngineConfig::default());
        assert_eq!(c.verdict, Verdict::Not2CyTilted);
        assert_eq!(c.failures[0].name(), "decomposition");
    }

    #[test]
    fn linear_a4() {
        let bq = fixtures::linear_a4();
        let g = gorenstein_dimension(&bq, &EngineConfig::default()).unwrap();
        assert_eq!(g.value, 2);
        assert_eq!(g.method, GorensteinMethod::CriticalPaths);
        assert_eq!(g.dual_proj_dim, ProjDim::Finite(2));
        let c = classify(&bq, &EngineConfig::default());
        assert_eq!(c.verdict, Verdict::Not2CyTilted);
    }

    #[test]
    fn empty_decomposition_invariants() {
        let inv = singularity_invariants(&RelationCycleDecomposition::default());
        assert!(inv.parameters.is_empty());
        assert_eq!(inv.total, 0);
    }
}
