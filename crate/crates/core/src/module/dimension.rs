use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use super::{Algebra, Module};
use crate::quiver::VertexId;

/// A cyclic module `P(y)/U` with `U` spanned by paths, described by the
/// paths from `y` that survive. Every path module `p kQ/I` has this shape.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalType {
    pub vertex: VertexId,
    pub surviving: Vec<usize>,
}

pub type SummandDecomposition = Vec<(LocalType, usize)>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProjDim {
    Finite(usize),
    Infinite,
    /// The fallback iteration hit its cap; the true value is at least this.
    AtLeast(usize),
}

impl ProjDim {
    pub fn is_exact(&self) -> bool {
        !matches!(self, ProjDim::AtLeast(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            ProjDim::Finite(d) => Some(*d),
            _ => None,
        }
    }

    fn shift(self, k: usize) -> ProjDim {
        match self {
            ProjDim::Finite(d) => ProjDim::Finite(d + k),
            ProjDim::AtLeast(d) => ProjDim::AtLeast(d + k),
            ProjDim::Infinite => ProjDim::Infinite,
        }
    }

    fn max(self, other: ProjDim) -> ProjDim {
        use ProjDim::*;
        match (self, other) {
            (Infinite, _) | (_, Infinite) => Infinite,
            (AtLeast(a), AtLeast(b)) | (AtLeast(a), Finite(b)) | (Finite(a), AtLeast(b)) => {
                AtLeast(a.max(b))
            }
            (Finite(a), Finite(b)) => Finite(a.max(b)),
        }
    }
}

impl std::fmt::Display for ProjDim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ProjDim::Finite(d) => write!(f, "{d}"),
            ProjDim::Infinite => write!(f, "infinite"),
            ProjDim::AtLeast(d) => write!(f, ">= {d}"),
        }
    }
}

/// Total dimension above which the fallback iteration gives up early.
const FALLBACK_DIM_LIMIT: usize = 4096;

impl Algebra {
    pub fn type_of_path(&self, p: usize) -> LocalType {
        LocalType {
            vertex: self.path(p).end(),
            surviving: self.path_annihilator_complement(p),
        }
    }

    pub fn local_module(&self, t: &LocalType) -> Module {
        self.cyclic_quotient(t.vertex, &t.surviving)
    }

    fn is_projective_type(&self, t: &LocalType) -> bool {
        t.surviving.len() == self.paths_from(t.vertex).len()
    }

    /// Summands of the syzygy of a local type: the path modules generated by
    /// the minimal killed paths.
    pub fn type_children(&self, t: &LocalType) -> Vec<LocalType> {
        let alive: BTreeSet<usize> = t.surviving.iter().copied().collect();
        let mut out = BTreeSet::new();
        for u in self.paths_from(t.vertex) {
            if alive.contains(&u) {
                continue;
            }
            let prefix = self.prefix_id(u);
            if prefix.is_some_and(|p| alive.contains(&p)) {
                out.insert(self.type_of_path(u));
            }
        }
        out.into_iter().collect()
    }

    fn prefix_id(&self, u: usize) -> Option<usize> {
        let path = self.path(u);
        let &a = path.arrows().last()?;
        let q = self.bound_quiver().quiver();
        let single = crate::quiver::Path::trivial(q.arrow(a).source).extended(q, a);
        self.path_id(&path.strip_suffix(q, &single)?)
    }

    /// Projective dimension of a local type, with cycle detection on the
    /// syzygy graph of types.
    pub fn type_proj_dimension(&self, t: &LocalType) -> ProjDim {
        let mut memo = BTreeMap::new();
        let mut on_stack = BTreeSet::new();
        self.type_pd(t, &mut memo, &mut on_stack)
    }

    fn type_pd(
        &self,
        t: &LocalType,
        memo: &mut BTreeMap<LocalType, ProjDim>,
        on_stack: &mut BTreeSet<LocalType>,
    ) -> ProjDim {
        if let Some(&d) = memo.get(t) {
            return d;
        }
        if on_stack.contains(t) {
            return ProjDim::Infinite;
        }
        if self.is_projective_type(t) {
            memo.insert(t.clone(), ProjDim::Finite(0));
            return ProjDim::Finite(0);
        }
        on_stack.insert(t.clone());
        let mut best = ProjDim::Finite(0);
        for c in self.type_children(t) {
            best = best.max(self.type_pd(&c, memo, on_stack));
        }
        on_stack.remove(t);
        let d = best.shift(1);
        memo.insert(t.clone(), d);
        d
    }

    /// Splits `K` into path modules, if it is a direct sum of them.
    pub fn decompose_into_path_modules(&self, k: &Module) -> Option<SummandDecomposition> {
        if k.is_zero() {
            return Some(Vec::new());
        }
        let top = self.top_dims(k);
        let candidates: BTreeSet<LocalType> = (0..self.paths().len())
            .map(|p| self.type_of_path(p))
            .filter(|t| top[t.vertex] > 0)
            .collect();
        let mut out = Vec::new();
        let mut dims = vec![0usize; self.vertex_count()];
        for t in candidates {
            let c = self.local_module(&t);
            if (0..self.vertex_count()).any(|v| c.dim(v) > k.dim(v)) {
                continue;
            }
            let mult = self.local_multiplicity(&c, t.vertex, 0, k);
            if mult > 0 {
                for v in 0..self.vertex_count() {
                    dims[v] += mult * c.dim(v);
                }
                out.push((t, mult));
            }
        }
        (dims == k.dims()).then_some(out)
    }

    pub fn proj_dimension(&self, m: &Module) -> ProjDim {
        if m.is_zero() || self.is_projective(m) {
            return ProjDim::Finite(0);
        }
        let mut cur = self.syzygy(m);
        let mut steps = 1;
        loop {
            if cur.is_zero() {
                return ProjDim::Finite(steps - 1);
            }
            if let Some(parts) = self.decompose_into_path_modules(&cur) {
                let mut memo = BTreeMap::new();
                let mut on_stack = BTreeSet::new();
                let d = parts.iter().fold(ProjDim::Finite(0), |acc, (t, _)| {
                    acc.max(self.type_pd(t, &mut memo, &mut on_stack))
                });
                return d.shift(steps);
            }
            if steps >= self.config().iteration_cap || cur.total_dim() > FALLBACK_DIM_LIMIT {
                return ProjDim::AtLeast(steps);
            }
            cur = self.syzygy(&cur);
            steps += 1;
        }
    }

    pub fn global_dimension(&self) -> ProjDim {
        (0..self.vertex_count()).fold(ProjDim::Finite(0), |acc, x| {
            acc.max(self.proj_dimension(&self.simple(x)))
        })
    }

    /// `max_x pd I(x)`, the projective dimension of the injective cogenerator.
    pub fn injective_cogenerator_pd(&self) -> ProjDim {
        (0..self.vertex_count()).fold(ProjDim::Finite(0), |acc, x| {
            acc.max(self.proj_dimension(&self.injective(x)))
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_have_dimension_zero() {
        for (_, bq) in fixtures::all() {
            let alg = Algebra::new(bq).unwrap();
            for x in 0..alg.vertex_count() {
                assert_eq!(alg.proj_dimension(&alg.projective(x)), ProjDim::Finite(0));
            }
        }
    }

    #[test]
    fn global_dimensions() {
        let alg = Algebra::new(fixtures::linear_a4()).unwrap();
        assert_eq!(
            alg.proj_dimension(&alg.simple(alg.vertex("3").unwrap())),
            ProjDim::Finite(2)
        );
        assert_eq!(alg.global_dimension(), ProjDim::Finite(2));
        let alg = Algebra::new(fixtures::two_cluster_d6()).unwrap();
        assert_eq!(alg.global_dimension(), ProjDim::Infinite);
    }

    #[test]
    fn decomposition_recovers_sum_of_path_modules() {
        let alg = Algebra::new(fixtures::square_and_loop()).unwrap();
        let a = alg.path_module(5);
        let b = alg.path_module(9);
        let k = alg.direct_sum(&alg.direct_sum(&a, &b), &a);
        let parts = alg.decompose_into_path_modules(&k).unwrap();
        let total: usize = parts.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 3);
    }
}
