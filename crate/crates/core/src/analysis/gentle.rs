use std::collections::{BTreeMap, BTreeSet};

use super::{canonical_rotation, names};
use crate::quiver::{ArrowId, BoundQuiver, Path};

/// Gentleness conditions and the combinatorial invariants built on them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GentleProfile {
    pub is_gentle: bool,
    pub violations: Vec<String>,
    pub is_string: bool,
    /// Cycles whose consecutive quadratic products all lie in the ideal,
    /// each in canonical rotation.
    pub saturated_cycles: Vec<Vec<ArrowId>>,
    /// Arrows `b` with no arrow `a` such that `a b` is a relation.
    pub gentle_arrows: Vec<ArrowId>,
    /// Maximal chains of consecutive quadratic relations starting at a gentle arrow.
    pub critical_paths: Vec<Path>,
    pub n_lambda: usize,
}

/// `a -> b` whenever `a.b` is a relation of length two.
fn quadratic_successors(bq: &BoundQuiver) -> BTreeMap<ArrowId, Vec<ArrowId>> {
    let mut succ: BTreeMap<ArrowId, Vec<ArrowId>> = BTreeMap::new();
    for r in bq.relations().iter().filter(|r| r.len() == 2) {
        succ.entry(r.arrows()[0]).or_default().push(r.arrows()[1]);
    }
    succ
}

pub fn gentle_profile(bq: &BoundQuiver) -> GentleProfile {
    let q = bq.quiver();
    let mut g1 = Vec::new();
    for v in 0..q.vertex_count() {
        let out = q.arrows_from(v).count();
        let inc = q.arrows_to(v).count();
        if out > 2 {
            g1.push(format!(
                "(g1) vertex {} has {out} outgoing arrows",
                q.vertex_label(v)
            ));
        }
        if inc > 2 {
            g1.push(format!(
                "(g1) vertex {} has {inc} incoming arrows",
                q.vertex_label(v)
            ));
        }
    }
    let mut g2 = Vec::new();
    for r in bq.relations().iter().filter(|r| r.len() != 2) {
        g2.push(format!(
            "(g2) relation {} has length {}",
            r.display(q),
            r.len()
        ));
    }
    let is_rel = |a: ArrowId, b: ArrowId| {
        Path::from_arrows(q, &[a, b]).is_some_and(|p| bq.relations().contains(&p))
    };
    let mut g3 = Vec::new();
    let mut g4 = Vec::new();
    for b in 0..q.arrow_count() {
        let name = &q.arrow(b).name;
        let before: Vec<ArrowId> = q.arrows_to(q.arrow(b).source).collect();
        let after: Vec<ArrowId> = q.arrows_from(q.arrow(b).target).collect();
        let count =
            |xs: &[ArrowId], f: &dyn Fn(ArrowId) -> bool| xs.iter().filter(|&&x| f(x)).count();
        if count(&before, &|a| is_rel(a, b)) > 1 {
            g3.push(format!("(g3) several arrows a with a.{name} in I"));
        }
        if count(&after, &|c| is_rel(b, c)) > 1 {
            g3.push(format!("(g3) several arrows c with {name}.c in I"));
        }
        if count(&before, &|a| !is_rel(a, b)) > 1 {
            g4.push(format!("(g4) several arrows a with a.{name} not in I"));
        }
        if count(&after, &|c| !is_rel(b, c)) > 1 {
            g4.push(format!("(g4) several arrows c with {name}.c not in I"));
        }
    }
    let is_string = g1.is_empty() && g4.is_empty();
    let violations: Vec<String> = g1.into_iter().chain(g2).chain(g3).chain(g4).collect();

    let succ = quadratic_successors(bq);
    let saturated_cycles = saturated_cycles(bq, &succ);
    let has_pred: BTreeSet<ArrowId> = succ.values().flatten().copied().collect();
    let gentle_arrows: Vec<ArrowId> = (0..q.arrow_count())
        .filter(|a| !has_pred.contains(a))
        .collect();
    let mut critical_paths = Vec::new();
    for &a in &gentle_arrows {
        let mut chain = vec![a];
        extend_chains(&succ, &mut chain, &mut |c| {
            critical_paths.push(Path::from_arrows(q, c).expect("relations compose"))
        });
    }
    critical_paths.sort();
    let n_lambda = critical_paths.iter().map(Path::len).max().unwrap_or(0);
    GentleProfile {
        is_gentle: violations.is_empty(),
        violations,
        is_string,
        saturated_cycles,
        gentle_arrows,
        critical_paths,
        n_lambda,
    }
}

/// Reports every maximal chain extending `chain` without repeating an arrow.
fn extend_chains(
    succ: &BTreeMap<ArrowId, Vec<ArrowId>>,
    chain: &mut Vec<ArrowId>,
    emit: &mut dyn FnMut(&[ArrowId]),
) {
    let last = *chain.last().unwrap();
    let next: Vec<ArrowId> = succ
        .get(&last)
        .map(|v| v.iter().copied().filter(|c| !chain.contains(c)).collect())
        .unwrap_or_default();
    if next.is_empty() {
        emit(chain);
        return;
    }
    for c in next {
        chain.push(c);
        extend_chains(succ, chain, emit);
        chain.pop();
    }
}

/// Simple cycles of the quadratic-relation successor graph.
fn saturated_cycles(bq: &BoundQuiver, succ: &BTreeMap<ArrowId, Vec<ArrowId>>) -> Vec<Vec<ArrowId>> {
    let q = bq.quiver();
    let mut found: BTreeMap<Vec<String>, Vec<ArrowId>> = BTreeMap::new();
    for start in 0..q.arrow_count() {
        let mut stack = vec![start];
        search_cycles(succ, start, &mut stack, &mut |c| {
            let canon = canonical_rotation(q, c);
            found.insert(names(q, &canon), canon);
        });
    }
    found.into_values().collect()
}

fn search_cycles(
    succ: &BTreeMap<ArrowId, Vec<ArrowId>>,
    start: ArrowId,
    stack: &mut Vec<ArrowId>,
    emit: &mut dyn FnMut(&[ArrowId]),
) {
    let last = *stack.last().unwrap();
    for &c in succ.get(&last).map(Vec::as_slice).unwrap_or(&[]) {
        if c == start {
            emit(stack);
        } else if c > start && !stack.contains(&c) {
            stack.push(c);
            search_cycles(succ, start, stack, emit);
            stack.pop();
        }
    }
}

/// Every relation is a quadratic piece of a saturated 3-cycle or the square
/// of a saturated loop; returns the relations that are not.
pub fn gentle_2cy_relation_shape(bq: &BoundQuiver, profile: &GentleProfile) -> (bool, Vec<Path>) {
    let mut allowed: BTreeSet<(ArrowId, ArrowId)> = BTreeSet::new();
    for c in &profile.saturated_cycles {
        if c.len() == 3 || c.len() == 1 {
            for k in 0..c.len() {
                allowed.insert((c[k], c[(k + 1) % c.len()]));
            }
        }
    }
    let witnesses: Vec<Path> = bq
        .relations()
        .iter()
        .filter(|r| r.len() != 2 || !allowed.contains(&(r.arrows()[0], r.arrows()[1])))
        .cloned()
        .collect();
    (witnesses.is_empty(), witnesses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn shown(bq: &BoundQuiver, paths: &[Path]) -> Vec<String> {
        paths
            .iter()
            .map(|p| p.display(bq.quiver()).to_string())
            .collect()
    }

    #[test]
    fn linear_a4() {
        let bq = fixtures::linear_a4();
        let p = gentle_profile(&bq);
        assert!(p.is_gentle);
        assert!(p.saturated_cycles.is_empty());
        assert!(p
            .gentle_arrows
            .contains(&bq.quiver().arrow_id("beta").unwrap()));
        assert_eq!(shown(&bq, &p.critical_paths), ["gamma", "beta.alpha"]);
        assert_eq!(p.n_lambda, 2);
        let (ok, w) = gentle_2cy_relation_shape(&bq, &p);
        assert!(!ok);
        assert_eq!(shown(&bq, &w), ["beta.alpha"]);
    }

    #[test]
    fn two_cluster_d6_is_not_gentle() {
        let p = gentle_profile(&fixtures::two_cluster_d6());
        assert!(!p.is_gentle);
        assert!(p.violations.iter().any(|v| v.starts_with("(g2)")));
    }

    #[test]
    fn triangles_and_loop_cycles() {
        let bq = fixtures::triangles_and_loop();
        let p = gentle_profile(&bq);
        let lens: Vec<usize> = p.saturated_cycles.iter().map(Vec::len).collect();
        assert_eq!(lens.iter().filter(|&&l| l == 3).count(), 3);
        assert_eq!(lens.iter().filter(|&&l| l == 1).count(), 1);
        assert!(gentle_2cy_relation_shape(&bq, &p).0);
    }

    #[test]
    fn hereditary_shape_is_vacuous() {
        let bq = BoundQuiver::build(&["1", "2"], &[("a", "1", "2")], &[]).unwrap();
        let p = gentle_profile(&bq);
        assert!(p.is_gentle);
        assert!(gentle_2cy_relation_shape(&bq, &p).0);
    }
}
