//! Exact finite-dimensional representations of a monomial bound quiver.
//!
//! A [`Module`] stores one dimension per vertex and one matrix per arrow,
//! mapping the source space to the target space (columns index the source
//! basis). A path `a1 ... at` acts by `M(at) * ... * M(a1)`.
//!
//! All constructions go through an [`Algebra`], which caches the path basis
//! of `kQ/I` and the bookkeeping needed to build projectives and injectives.
//! The indecomposable projective `P(x)` has basis the nonzero paths starting
//! at `x` (arrows act by appending), and `I(x)` has basis the nonzero paths
//! ending at `x` (arrows act by removing a leading arrow).

mod dimension;
mod gp;
mod homology;
mod iso;
mod string;

use std::collections::HashMap;

use num_traits::One;
use thiserror::Error;

use crate::linalg::{complement, Matrix, Rational};
use crate::quiver::{ArrowId, BoundQuiver, Path, QuiverError, VertexId};

pub use dimension::{LocalType, ProjDim, SummandDecomposition};
pub use homology::{Presentation, ProjMap, ProjectiveCover, Syzygy};
pub use iso::Isomorphism;
pub use string::{Direction, StringEnumeration, StringWalk, WalkError};

/// Tunables for the module engine.
#[derive(Debug, Clone)]
pub struct EngineConfig {
    /// Seed for the randomized isomorphism search.
    pub seed: u64,
    pub path_cap: usize,
    /// Fallback cap on concrete syzygy iterations in dimension computations.
    pub iteration_cap: usize,
    /// Largest resolution length an Ext computation may build.
    pub resolution_cap: usize,
    /// Random trials per isomorphism test.
    pub iso_trials: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        EngineConfig {
            seed: 0x5eed_2c7a,
            path_cap: crate::quiver::DEFAULT_PATH_CAP,
            iteration_cap: 64,
            resolution_cap: 16,
            iso_trials: 8,
        }
    }
}

#[derive(Debug, Error)]
pub enum ModuleError {
    #[error(transparent)]
    Quiver(#[from] QuiverError),
    #[error("invalid walk: {0}")]
    InvalidWalk(#[from] WalkError),
    #[error("matrix for arrow {arrow} has shape {found:?}, expected {expected:?}")]
    Shape {
        arrow: String,
        found: (usize, usize),
        expected: (usize, usize),
    },
    #[error("relation {0} does not act as zero")]
    RelationViolated(String),
    #[error("module has a projective direct summand P({0})")]
    ProjectiveSummand(String),
    #[error("resolution would need more than {cap} steps")]
    ResolutionDepthExceeded { cap: usize },
    #[error("algebra is not gentle")]
    NotGentle,
    #[error("module is not Gorenstein-projective")]
    NotGorensteinProjective,
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
}

/// A finite-dimensional representation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Module {
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Module {
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self, v: VertexId) -> usize {
        self.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn map(&self, a: ArrowId) -> &Matrix {
        &self.maps[a]
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }
}

/// A homomorphism, stored as one matrix per vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleMap {
    blocks: Vec<Matrix>,
}

impl ModuleMap {
    pub fn new(blocks: Vec<Matrix>) -> Self {
        ModuleMap { blocks }
    }

    pub fn block(&self, v: VertexId) -> &Matrix {
        &self.blocks[v]
    }

    pub fn blocks(&self) -> &[Matrix] {
        &self.blocks
    }

    /// `self` after `first`.
    pub fn compose(&self, first: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&first.blocks)
                .map(|(a, b)| a.mul(b))
                .collect(),
        }
    }

    pub fn add(&self, other: &ModuleMap) -> ModuleMap {
        ModuleMap {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &Rational) -> ModuleMap {
        ModuleMap {
            blocks: self.blocks.iter().map(|b| b.scale(s)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(Matrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(Matrix::rank).sum()
    }

    pub fn is_isomorphism(&self) -> bool {
        self.blocks.iter().all(Matrix::is_invertible)
    }
}

/// A monomial algebra `kQ/I` with its path basis.
#[derive(Debug, Clone)]
pub struct Algebra {
    bq: BoundQuiver,
    config: EngineConfig,
    paths: Vec<Path>,
    index: HashMap<Path, usize>,
    /// `between[x][y]`: ids of nonzero paths from `x` to `y`, in path order.
    between: Vec<Vec<Vec<usize>>>,
    /// Position of each path inside its `between` list.
    local: Vec<usize>,
    /// `extend[p][a]`: the id of `p . a` when nonzero.
    extend: Vec<Vec<Option<usize>>>,
    /// Leading arrow and remainder of each nontrivial path.
    tail: Vec<Option<(ArrowId, usize)>>,
}

impl Algebra {
    pub fn new(bq: BoundQuiver) -> Result<Algebra, ModuleError> {
        Algebra::with_config(bq, EngineConfig::default())
    }

    pub fn with_config(bq: BoundQuiver, config: EngineConfig) -> Result<Algebra, ModuleError> {
        let paths = bq.nonzero_paths_capped(config.path_cap)?;
        let q = bq.quiver();
        let n = q.vertex_count();
        let index: HashMap<Path, usize> = paths
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let mut between = vec![vec![Vec::new(); n]; n];
        let mut local = vec![0; paths.len()];
        for (i, p) in paths.iter().enumerate() {
            let list = &mut between[p.start()][p.end()];
            local[i] = list.len();
            list.push(i);
        }
        let extend = paths
            .iter()
            .map(|p| {
                (0..q.arrow_count())
                    .map(|a| bq.extend(p, a).map(|pa| index[&pa]))
                    .collect()
            })
            .collect();
        let tail = paths
            .iter()
            .map(|p| {
                let first = *p.arrows().first()?;
                let rest = Path::trivial(q.arrow(first).source)
                    .extended(q, first)
                    .clone();
                let rest = p.strip_prefix(q, &rest).unwrap();
                Some((first, index[&rest]))
            })
            .collect();
        Ok(Algebra {
            bq,
            config,
            paths,
            index,
            between,
            local,
            extend,
            tail,
        })
    }

    pub fn bound_quiver(&self) -> &BoundQuiver {
        &self.bq
    }

    pub fn config(&self) -> &EngineConfig {
        &self.config
    }

    pub fn vertex_count(&self) -> usize {
        self.bq.quiver().vertex_count()
    }

    pub fn arrow_count(&self) -> usize {
        self.bq.quiver().arrow_count()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn path_id(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn path(&self, id: usize) -> &Path {
        &self.paths[id]
    }

    pub fn vertex(&self, label: &str) -> Result<VertexId, ModuleError> {
        self.bq
            .quiver()
            .vertex_id(label)
            .ok_or_else(|| ModuleError::UnknownVertex(label.to_string()))
    }

    pub fn vertex_label(&self, v: VertexId) -> &str {
        self.bq.quiver().vertex_label(v)
    }

    /// Nonzero paths from `x` to `y`.
    pub fn paths_between(&self, x: VertexId, y: VertexId) -> &[usize] {
        &self.between[x][y]
    }

    /// Nonzero paths starting at `x`, in path order.
    pub fn paths_from(&self, x: VertexId) -> Vec<usize> {
        let mut v: Vec<usize> = self.between[x].iter().flatten().copied().collect();
        v.sort_unstable();
        v
    }

    pub fn paths_to(&self, y: VertexId) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .between
            .iter()
            .flat_map(|row| row[y].iter())
            .copied()
            .collect();
        v.sort_unstable();
        v
    }

    /// Product of two nonzero paths in `kQ/I`, by id.
    pub fn mul_ids(&self, p: usize, q: usize) -> Option<usize> {
        if self.paths[p].end() != self.paths[q].start() {
            return None;
        }
        let mut cur = p;
        for &a in self.paths[q].arrows() {
            cur = self.extend[cur][a]?;
        }
        Some(cur)
    }

    pub fn extend_id(&self, p: usize, a: ArrowId) -> Option<usize> {
        self.extend[p][a]
    }

    // ----- constructors -------------------------------------------------

    /// Validates shapes and relations.
    pub fn module(&self, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Module, ModuleError> {
        let q = self.bq.quiver();
        assert_eq!(dims.len(), q.vertex_count());
        assert_eq!(maps.len(), q.arrow_count());
        for (a, m) in maps.iter().enumerate() {
            let arrow = q.arrow(a);
            let expected = (dims[arrow.target], dims[arrow.source]);
            if m.shape() != expected {
                return Err(ModuleError::Shape {
                    arrow: arrow.name.clone(),
                    found: m.shape(),
                    expected,
                });
            }
        }
        let m = Module { dims, maps };
        if let Some(r) = self.violated_relation(&m) {
            return Err(ModuleError::RelationViolated(r.display(q).to_string()));
        }
        Ok(m)
    }

    fn raw(&self, dims: Vec<usize>, maps: Vec<Matrix>) -> Module {
        let m = Module { dims, maps };
        debug_assert!(
            self.violated_relation(&m).is_none(),
            "constructed representation violates a relation"
        );
        m
    }

    /// The first relation not acting as zero, if any.
    pub fn violated_relation(&self, m: &Module) -> Option<&Path> {
        self.bq
            .relations()
            .iter()
            .find(|r| !self.path_matrix(m, r).is_zero())
    }

    pub fn zero_module(&self) -> Module {
        let q = self.bq.quiver();
        Module {
            dims: vec![0; q.vertex_count()],
            maps: q.arrows().iter().map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    pub fn simple(&self, x: VertexId) -> Module {
        let q = self.bq.quiver();
        let mut dims = vec![0; q.vertex_count()];
        dims[x] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        Module { dims, maps }
    }

    /// `P(y) / U`, where `surviving` lists the paths from `y` not in `U`.
    /// `surviving` must be closed under prefixes.
    pub fn cyclic_quotient(&self, y: VertexId, surviving: &[usize]) -> Module {
        let q = self.bq.quiver();
        let n = q.vertex_count();
        let mut pos: HashMap<usize, usize> = HashMap::new();
        let mut dims = vec![0; n];
        for &p in surviving {
            debug_assert_eq!(self.paths[p].start(), y);
            let v = self.paths[p].end();
            pos.insert(p, dims[v]);
            dims[v] += 1;
        }
        let mut maps: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        for &p in surviving {
            let v = self.paths[p].end();
            for a in q.arrows_from(v) {
                if let Some(pa) = self.extend[p][a] {
                    if let Some(&j) = pos.get(&pa) {
                        maps[a].set(j, pos[&p], Rational::one());
                    }
                }
            }
        }
        self.raw(dims, maps)
    }

    pub fn projective(&self, x: VertexId) -> Module {
        self.cyclic_quotient(x, &self.paths_from(x))
    }

    pub fn injective(&self, x: VertexId) -> Module {
        let q = self.bq.quiver();
        let n = q.vertex_count();
        let dims: Vec<usize> = (0..n).map(|y| self.between[y][x].len()).collect();
        let mut maps: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        for y in 0..n {
            for &r in &self.between[y][x] {
                if let Some((a, rest)) = self.tail[r] {
                    maps[a].set(self.local[rest], self.local[r], Rational::one());
                }
            }
        }
        self.raw(dims, maps)
    }

    /// The path module `p kQ/I`, generated by the nonzero path `p`.
    pub fn path_module(&self, p: usize) -> Module {
        let y = self.paths[p].end();
        self.cyclic_quotient(y, &self.path_annihilator_complement(p))
    }

    /// Paths `t` from the end of `p` with `p t` nonzero.
    pub(crate) fn path_annihilator_complement(&self, p: usize) -> Vec<usize> {
        let y = self.paths[p].end();
        self.paths_from(y)
            .into_iter()
            .filter(|&t| self.mul_ids(p, t).is_some())
            .collect()
    }

    pub fn direct_sum(&self, a: &Module, b: &Module) -> Module {
        let dims = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
        let maps = a
            .maps
            .iter()
            .zip(&b.maps)
            .map(|(x, y)| x.direct_sum(y))
            .collect();
        Module { dims, maps }
    }

    pub fn direct_sum_all<'a>(&self, parts: impl IntoIterator<Item = &'a Module>) -> Module {
        parts
            .into_iter()
            .fold(self.zero_module(), |acc, m| self.direct_sum(&acc, m))
    }

    pub fn projective_sum(&self, summands: &[VertexId]) -> Module {
        let parts: Vec<Module> = summands.iter().map(|&x| self.projective(x)).collect();
        self.direct_sum_all(&parts)
    }

    pub fn injective_sum(&self, summands: &[VertexId]) -> Module {
        let parts: Vec<Module> = summands.iter().map(|&x| self.injective(x)).collect();
        self.direct_sum_all(&parts)
    }

    /// The regular module `kQ/I` as the sum of all indecomposable projectives.
    pub fn regular(&self) -> Module {
        let all: Vec<VertexId> = (0..self.vertex_count()).collect();
        self.projective_sum(&all)
    }

    // ----- actions --------------------------------------------------------

    pub fn path_matrix(&self, m: &Module, p: &Path) -> Matrix {
        let mut acc = Matrix::identity(m.dims[p.start()]);
        for &a in p.arrows() {
            acc = m.maps[a].mul(&acc);
        }
        acc
    }

    /// Action matrices of every nonzero path of the algebra on `m`, by path id.
    pub fn path_matrices(&self, m: &Module) -> Vec<Matrix> {
        let mut out: Vec<Option<Matrix>> = vec![None; self.paths.len()];
        // paths are sorted by length, so prefixes come first
        for (i, p) in self.paths.iter().enumerate() {
            let mat = match p.arrows().last() {
                None => Matrix::identity(m.dims[p.start()]),
                Some(&a) => {
                    let prefix = p
                        .strip_suffix(self.bq.quiver(), &self.single_arrow(a))
                        .unwrap();
                    let pid = self.index[&prefix];
                    m.maps[a].mul(out[pid].as_ref().unwrap())
                }
            };
            out[i] = Some(mat);
        }
        out.into_iter().map(Option::unwrap).collect()
    }

    fn single_arrow(&self, a: ArrowId) -> Path {
        let q = self.bq.quiver();
        Path::trivial(q.arrow(a).source).extended(q, a)
    }

    /// Images of a vector `v` in `m` at the start of every path from `x`:
    /// returns `(path id, m(path) v)` in path order.
    pub(crate) fn orbit(
        &self,
        m: &Module,
        x: VertexId,
        v: &[Rational],
    ) -> HashMap<usize, Vec<Rational>> {
        let mut out: HashMap<usize, Vec<Rational>> = HashMap::new();
        for p in self.paths_from(x) {
            let val = match self.tail_last(p) {
                None => v.to_vec(),
                Some((prefix, a)) => m.maps[a].mul_vec(&out[&prefix]),
            };
            out.insert(p, val);
        }
        out
    }

    /// Prefix id and last arrow of a nontrivial path.
    fn tail_last(&self, p: usize) -> Option<(usize, ArrowId)> {
        let path = &self.paths[p];
        let &a = path.arrows().last()?;
        let prefix = path
            .strip_suffix(self.bq.quiver(), &self.single_arrow(a))
            .unwrap();
        Some((self.index[&prefix], a))
    }

    pub fn is_module_map(&self, f: &ModuleMap, source: &Module, target: &Module) -> bool {
        let q = self.bq.quiver();
        q.arrows().iter().enumerate().all(|(a, arrow)| {
            target.maps[a].mul(&f.blocks[arrow.source])
                == f.blocks[arrow.target].mul(&source.maps[a])
        })
    }

    pub fn identity_map(&self, m: &Module) -> ModuleMap {
        ModuleMap::new(m.dims.iter().map(|&d| Matrix::identity(d)).collect())
    }

    pub fn zero_map(&self, source: &Module, target: &Module) -> ModuleMap {
        ModuleMap::new(
            source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        )
    }

    // ----- sub and quotient modules ----------------------------------------

    /// The submodule spanned per vertex by the independent columns of
    /// `bases`, which must be stable under the arrows. Returns the module in
    /// the given basis and its inclusion.
    pub fn submodule(&self, m: &Module, bases: Vec<Matrix>) -> (Module, ModuleMap) {
        let q = self.bq.quiver();
        let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| {
                let img = m.maps[a].mul(&bases[arrow.source]);
                bases[arrow.target]
                    .solve(&img)
                    .expect("subspace is not stable under the arrow")
            })
            .collect();
        (self.raw(dims, maps), ModuleMap::new(bases))
    }

    /// `m / U` for a submodule with per-vertex bases; returns the quotient and
    /// the projection.
    pub fn quotient(&self, m: &Module, bases: &[Matrix]) -> (Module, ModuleMap) {
        let q = self.bq.quiver();
        let n = q.vertex_count();
        let mut comps = Vec::with_capacity(n);
        let mut projs = Vec::with_capacity(n);
        for v in 0..n {
            let c = complement(&bases[v]);
            let t = bases[v].hstack(&c);
            let inv = t.inverse().expect("basis plus complement is invertible");
            projs.push(inv.row_block(bases[v].cols(), m.dims[v]));
            comps.push(c);
        }
        let dims: Vec<usize> = comps.iter().map(Matrix::cols).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(a, arrow)| projs[arrow.target].mul(&m.maps[a].mul(&comps[arrow.source])))
            .collect();
        (self.raw(dims, maps), ModuleMap::new(projs))
    }

    pub fn kernel(&self, f: &ModuleMap, source: &Module) -> (Module, ModuleMap) {
        let bases = f.blocks.iter().map(Matrix::kernel).collect();
        self.submodule(source, bases)
    }

    pub fn image(&self, f: &ModuleMap, target: &Module) -> (Module, ModuleMap) {
        let bases = f.blocks.iter().map(Matrix::column_basis).collect();
        self.submodule(target, bases)
    }

    pub fn cokernel(&self, f: &ModuleMap, target: &Module) -> (Module, ModuleMap) {
        let bases: Vec<Matrix> = f.blocks.iter().map(Matrix::column_basis).collect();
        self.quotient(target, &bases)
    }

    /// Builds the map from `P(x_1) + ... + P(x_k)` to `m` sending the `i`-th
    /// generator `e_{x_i}` to `generators[i]`.
    pub fn map_from_projectives(
        &self,
        summands: &[VertexId],
        generators: &[Vec<Rational>],
        m: &Module,
    ) -> ModuleMap {
        let n = self.vertex_count();
        let mut cols: Vec<Vec<Vec<Rational>>> = vec![Vec::new(); n];
        for (&x, g) in summands.iter().zip(generators) {
            let orbit = self.orbit(m, x, g);
            for y in 0..n {
                for &p in &self.between[x][y] {
                    cols[y].push(orbit[&p].clone());
                }
            }
        }
        ModuleMap::new(
            cols.iter()
                .enumerate()
                .map(|(y, c)| Matrix::from_columns(m.dims[y], c))
                .collect(),
        )
    }

    /// Offset of summand `k` inside `(P(x_1) + ... + P(x_r))_y`.
    pub(crate) fn projective_offsets(&self, summands: &[VertexId], y: VertexId) -> Vec<usize> {
        let mut offs = Vec::with_capacity(summands.len() + 1);
        let mut acc = 0;
        for &x in summands {
            offs.push(acc);
            acc += self.between[x][y].len();
        }
        offs.push(acc);
        offs
    }

    /// Offset of summand `k` inside `(I(x_1) + ... + I(x_r))_y`.
    pub(crate) fn injective_offsets(&self, summands: &[VertexId], y: VertexId) -> Vec<usize> {
        let mut offs = Vec::with_capacity(summands.len() + 1);
        let mut acc = 0;
        for &x in summands {
            offs.push(acc);
            acc += self.between[y][x].len();
        }
        offs.push(acc);
        offs
    }

    pub(crate) fn local_index(&self, p: usize) -> usize {
        self.local[p]
    }

    /// Dimension vector rendered with vertex labels, e.g. `1:0 2:1`.
    pub fn format_dims(&self, m: &Module) -> String {
        (0..self.vertex_count())
            .map(|v| format!("{}:{}", self.vertex_label(v), m.dims[v]))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn projectives_and_injectives_of_linear_a4() {
        let alg = Algebra::new(fixtures::linear_a4()).unwrap();
        let v = |s| alg.vertex(s).unwrap();
        let p3 = alg.projective(v("3"));
        assert_eq!(p3.dims(), &[0, 1, 1, 0]);
        let i1 = alg.injective(v("1"));
        assert_eq!(i1.dims(), &[1, 1, 0, 0]);
        assert!(alg.violated_relation(&p3).is_none());
    }

    #[test]
    fn injective_of_two_cluster_d6_at_vertex_1() {
        let alg = Algebra::new(fixtures::two_cluster_d6()).unwrap();
        let i1 = alg.injective(alg.vertex("1").unwrap());
        // basis e_1, epsilon, delta.epsilon, gamma.delta.epsilon
        assert_eq!(i1.total_dim(), 4);
        for v in ["1", "2", "3", "4"] {
            assert_eq!(i1.dim(alg.vertex(v).unwrap()), 1);
        }
    }

    #[test]
    fn module_validation_catches_bad_input() {
        let alg = Algebra::new(fixtures::linear_a4()).unwrap();
        // alpha: 2 -> 1, beta: 3 -> 2, gamma: 4 -> 3 ; beta.alpha = 0
        let dims = vec![1, 1, 1, 0];
        let q = alg.bound_quiver().quiver();
        let maps: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::from_fn(dims[a.target], dims[a.source], |_, _| crate::linalg::rat(1)))
            .collect();
        assert!(matches!(
            alg.module(dims.clone(), maps),
            Err(ModuleError::RelationViolated(_))
        ));
        let mut maps: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        maps[0] = Matrix::zeros(2, 2);
        assert!(matches!(
            alg.module(dims, maps),
            Err(ModuleError::Shape { .. })
        ));
    }

    #[test]
    fn quotient_and_kernel_dimensions() {
        let alg = Algebra::new(fixtures::linear_a4()).unwrap();
        let p4 = alg.projective(alg.vertex("4").unwrap());
        let (top, proj) = alg.top(&p4);
        assert_eq!(top.total_dim(), 1);
        let (rad, _) = alg.kernel(&proj, &p4);
        assert_eq!(rad.total_dim() + 1, p4.total_dim());
    }
}
