use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

use super::{canonical_rotation, names};
use crate::quiver::{ArrowId, BoundQuiver, Path};

/// One cycle `c` of the relation structure with all its length-`r` subpaths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleComponent {
    pub cycle: Vec<ArrowId>,
    pub n: usize,
    pub r: usize,
    pub relations: Vec<Path>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelationCycleDecomposition {
    pub components: Vec<CycleComponent>,
}

/// Why the relations do not split into full cycle families.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureFailure {
    #[error("relation {relation} does not lie on a cycle")]
    RelationOffCycle { relation: String },
    #[error("arrow {arrow} is followed or preceded by different arrows in different relations")]
    SharedArrow { arrow: String },
    #[error("relations over cycle {cycle} have different lengths {lengths:?}")]
    LengthMismatch { cycle: String, lengths: Vec<usize> },
    #[error("cycle {cycle} lacks the relation {missing}")]
    MissingSubpath { cycle: String, missing: String },
}

impl StructureFailure {
    pub fn kind(&self) -> &'static str {
        match self {
            StructureFailure::RelationOffCycle { .. } => "relation_off_cycle",
            StructureFailure::SharedArrow { .. } => "shared_arrow",
            StructureFailure::LengthMismatch { .. } => "length_mismatch",
            StructureFailure::MissingSubpath { .. } => "missing_subpath",
        }
    }
}

/// Splits the relations into families `F_i`, each consisting of every
/// length-`r_i` subpath of a cycle `c_i`, with distinct cycles sharing no arrow.
pub fn relation_cycle_decomposition(
    bq: &BoundQuiver,
) -> Result<RelationCycleDecomposition, StructureFailure> {
    let q = bq.quiver();
    let mut succ: BTreeMap<ArrowId, ArrowId> = BTreeMap::new();
    let mut pred: BTreeMap<ArrowId, ArrowId> = BTreeMap::new();
    for r in bq.relations() {
        for w in r.arrows().windows(2) {
            let (a, b) = (w[0], w[1]);
            if *succ.entry(a).or_insert(b) != b {
                return Err(StructureFailure::SharedArrow {
                    arrow: q.arrow(a).name.clone(),
                });
            }
            if *pred.entry(b).or_insert(a) != a {
                return Err(StructureFailure::SharedArrow {
                    arrow: q.arrow(b).name.clone(),
                });
            }
        }
    }
    // cycle of each relation, keyed by its canonical rotation
    let mut families: BTreeMap<Vec<String>, (Vec<ArrowId>, Vec<Path>)> = BTreeMap::new();
    for r in bq.relations() {
        let Some(cycle) = close_cycle(bq, &succ, &pred, r.arrows()[0]) else {
            return Err(StructureFailure::RelationOffCycle {
                relation: r.display(q).to_string(),
            });
        };
        let canon = canonical_rotation(q, &cycle);
        families
            .entry(names(q, &canon))
            .or_insert_with(|| (canon, Vec::new()))
            .1
            .push(r.clone());
    }
    let mut components = Vec::new();
    for (key, (cycle, relations)) in families {
        let label = key.join(".");
        let lengths: BTreeSet<usize> = relations.iter().map(Path::len).collect();
        if lengths.len() != 1 {
            return Err(StructureFailure::LengthMismatch {
                cycle: label,
                lengths: relations.iter().map(Path::len).collect(),
            });
        }
        let r = *lengths.iter().next().unwrap();
        let n = cycle.len();
        let present: BTreeSet<&Path> = relations.iter().collect();
        for k in 0..n {
            let arrows: Vec<ArrowId> = (0..r).map(|j| cycle[(k + j) % n]).collect();
            let p = Path::from_arrows(q, &arrows).expect("subpaths of a cycle compose");
            if !present.contains(&p) {
                return Err(StructureFailure::MissingSubpath {
                    cycle: label,
                    missing: p.display(q).to_string(),
                });
            }
        }
        let mut relations = relations;
        relations.sort();
        components.push(CycleComponent {
            cycle,
            n,
            r,
            relations,
        });
    }
    Ok(RelationCycleDecomposition { components })
}

/// A simple cycle of the quiver starting with `first`, following relation
/// successors where they are fixed and otherwise any arrow not already
/// preceded by another one in some relation.
fn close_cycle(
    bq: &BoundQuiver,
    succ: &BTreeMap<ArrowId, ArrowId>,
    pred: &BTreeMap<ArrowId, ArrowId>,
    first: ArrowId,
) -> Option<Vec<ArrowId>> {
    let q = bq.quiver();
    let mut cycle = vec![first];
    let mut seen = BTreeSet::from([first]);
    fn go(
        q: &crate::quiver::Quiver,
        succ: &BTreeMap<ArrowId, ArrowId>,
        pred: &BTreeMap<ArrowId, ArrowId>,
        first: ArrowId,
        cycle: &mut Vec<ArrowId>,
        seen: &mut BTreeSet<ArrowId>,
    ) -> bool {
        let cur = *cycle.last().unwrap();
        let options: Vec<ArrowId> = match succ.get(&cur) {
            Some(&n) => vec![n],
            None => q
                .arrows_from(q.arrow(cur).target)
                .filter(|c| pred.get(c).is_none_or(|&p| p == cur))
                .collect(),
        };
        for next in options {
            if next == first && pred.get(&first).is_none_or(|&p| p == cur) {
                return true;
            }
            if seen.contains(&next) {
                continue;
            }
            seen.insert(next);
            cycle.push(next);
            if go(q, succ, pred, first, cycle, seen) {
                return true;
            }
            cycle.pop();
            seen.remove(&next);
        }
        false
    }
    go(q, succ, pred, first, &mut cycle, &mut seen).then_some(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn square_and_loop() {
        let bq = fixtures::square_and_loop();
        let dec = relation_cycle_decomposition(&bq).unwrap();
        let got: Vec<(usize, usize, usize)> = dec
            .components
            .iter()
            .map(|c| (c.n, c.r, c.relations.len()))
            .collect();
        assert_eq!(got, vec![(4, 3, 4), (1, 4, 1)]);
        assert_eq!(
            names(bq.quiver(), &dec.components[0].cycle),
            ["alpha", "beta", "gamma", "delta"]
        );
    }

    #[test]
    fn off_cycle_relation() {
        let bq = BoundQuiver::build(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3")],
            &[&["a", "b"]],
        )
        .unwrap();
        assert_eq!(
            relation_cycle_decomposition(&bq),
            Err(StructureFailure::RelationOffCycle {
                relation: "a.b".into()
            })
        );
    }

    #[test]
    fn two_cluster_d6_length_mismatch() {
        let err = relation_cycle_decomposition(&fixtures::two_cluster_d6()).unwrap_err();
        assert!(
            matches!(err, StructureFailure::LengthMismatch { .. }),
            "{err}"
        );
    }

    #[test]
    fn missing_subpath() {
        let bq = BoundQuiver::build(
            &["1", "2", "3"],
            &[("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")],
            &[&["a", "b"], &["b", "c"]],
        )
        .unwrap();
        assert!(matches!(
            relation_cycle_decomposition(&bq),
            Err(StructureFailure::MissingSubpath { .. })
        ));
    }

    #[test]
    fn no_relations() {
        let bq = fixtures::linear_a4();
        let hereditary = BoundQuiver::build(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        assert!(relation_cycle_decomposition(&hereditary)
            .unwrap()
            .components
            .is_empty());
        assert!(relation_cycle_decomposition(&bq).is_err());
    }
}
