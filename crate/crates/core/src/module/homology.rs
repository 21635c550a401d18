use num_traits::Zero;

use super::{Algebra, Module, ModuleError, ModuleMap};
use crate::linalg::{complement, span, Matrix, Rational};
use crate::quiver::VertexId;

/// A map between sums of indecomposable projectives.
///
/// Generator `k` of the source, `e` at `source[k]`, is sent to `images[k]`,
/// a vector in `(P(target[0]) + ... )` at vertex `source[k]`; its entries
/// are coefficients of paths from `target[j]` to `source[k]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjMap {
    pub source: Vec<VertexId>,
    pub target: Vec<VertexId>,
    pub images: Vec<Vec<Rational>>,
}

impl ProjMap {
    pub fn identity(alg: &Algebra, summands: &[VertexId]) -> ProjMap {
        let images = summands
            .iter()
            .enumerate()
            .map(|(k, &x)| {
                let offs = alg.projective_offsets(summands, x);
                let mut v = vec![Rational::zero(); offs[summands.len()]];
                // the trivial path is the first path from x to x
                v[offs[k]] = num_traits::One::one();
                v
            })
            .collect();
        ProjMap {
            source: summands.to_vec(),
            target: summands.to_vec(),
            images,
        }
    }

    pub fn to_module_map(&self, alg: &Algebra) -> ModuleMap {
        let target = alg.projective_sum(&self.target);
        alg.map_from_projectives(&self.source, &self.images, &target)
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().flatten().all(Zero::is_zero)
    }
}

#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    /// Vertices of the indecomposable summands of `P0`, in order.
    pub summands: Vec<VertexId>,
    /// Image of each summand's generator in the covered module.
    pub generators: Vec<Vec<Rational>>,
    pub module: Module,
    pub epi: ModuleMap,
}

#[derive(Debug, Clone)]
pub struct Syzygy {
    pub cover: ProjectiveCover,
    pub kernel: Module,
    /// Inclusion of the kernel into `P0`.
    pub inclusion: ModuleMap,
}

/// `P1 -> P0 -> M -> 0`, minimal.
#[derive(Debug, Clone)]
pub struct Presentation {
    pub p0: Vec<VertexId>,
    pub p1: Vec<VertexId>,
    pub map: ProjMap,
    pub epi: ModuleMap,
}

impl Algebra {
    fn radical_bases(&self, m: &Module) -> Vec<Matrix> {
        let q = self.bound_quiver().quiver();
        (0..self.vertex_count())
            .map(|y| {
                let images: Vec<Matrix> = q.arrows_to(y).map(|a| m.map(a).clone()).collect();
                span(m.dim(y), &images)
            })
            .collect()
    }

    /// `M / rad M` with its projection.
    pub fn top(&self, m: &Module) -> (Module, ModuleMap) {
        self.quotient(m, &self.radical_bases(m))
    }

    /// `rad M` with its inclusion.
    pub fn radical(&self, m: &Module) -> (Module, ModuleMap) {
        self.submodule(m, self.radical_bases(m))
    }

    /// Joint kernel of all arrows, with its inclusion.
    pub fn socle(&self, m: &Module) -> (Module, ModuleMap) {
        let q = self.bound_quiver().quiver();
        let bases = (0..self.vertex_count())
            .map(|y| {
                let stacked = q
                    .arrows_from(y)
                    .fold(Matrix::zeros(0, m.dim(y)), |acc, a| acc.vstack(m.map(a)));
                stacked.kernel()
            })
            .collect();
        self.submodule(m, bases)
    }

    pub fn top_dims(&self, m: &Module) -> Vec<usize> {
        self.radical_bases(m)
            .iter()
            .enumerate()
            .map(|(y, r)| m.dim(y) - r.cols())
            .collect()
    }

    pub fn projective_cover(&self, m: &Module) -> ProjectiveCover {
        let mut summands = Vec::new();
        let mut generators = Vec::new();
        for (y, rad) in self.radical_bases(m).iter().enumerate() {
            for g in complement(rad).columns() {
                summands.push(y);
                generators.push(g);
            }
        }
        let module = self.projective_sum(&summands);
        let epi = self.map_from_projectives(&summands, &generators, m);
        ProjectiveCover {
            summands,
            generators,
            module,
            epi,
        }
    }

    pub fn syzygy_data(&self, m: &Module) -> Syzygy {
        let cover = self.projective_cover(m);
        let (kernel, inclusion) = self.kernel(&cover.epi, &cover.module);
        Syzygy {
            cover,
            kernel,
            inclusion,
        }
    }

    pub fn syzygy(&self, m: &Module) -> Module {
        self.syzygy_data(m).kernel
    }

    pub fn syzygy_power(&self, m: &Module, n: usize) -> Module {
        (0..n).fold(m.clone(), |acc, _| self.syzygy(&acc))
    }

    pub fn is_projective(&self, m: &Module) -> bool {
        let cover = self.projective_cover(m);
        cover.module.total_dim() == m.total_dim()
    }

    pub fn min_proj_presentation(&self, m: &Module) -> Presentation {
        let syz = self.syzygy_data(m);
        let inner = self.projective_cover(&syz.kernel);
        let images = inner
            .summands
            .iter()
            .zip(&inner.generators)
            .map(|(&x, g)| syz.inclusion.block(x).mul_vec(g))
            .collect();
        Presentation {
            p0: syz.cover.summands.clone(),
            p1: inner.summands.clone(),
            map: ProjMap {
                source: inner.summands,
                target: syz.cover.summands,
                images,
            },
            epi: syz.cover.epi,
        }
    }

    /// Minimal projective resolution up to `P_len`, as the summand lists of
    /// `P_0 .. P_len` and the differentials `d_k: P_k -> P_{k-1}`.
    pub fn projective_resolution(
        &self,
        m: &Module,
        len: usize,
    ) -> (Vec<Vec<VertexId>>, Vec<ProjMap>) {
        let mut syz = self.syzygy_data(m);
        let mut terms = vec![syz.cover.summands.clone()];
        let mut diffs = Vec::new();
        for _ in 0..len {
            let next = self.syzygy_data(&syz.kernel);
            let images = next
                .cover
                .summands
                .iter()
                .zip(&next.cover.generators)
                .map(|(&x, g)| syz.inclusion.block(x).mul_vec(g))
                .collect();
            diffs.push(ProjMap {
                source: next.cover.summands.clone(),
                target: syz.cover.summands.clone(),
                images,
            });
            terms.push(next.cover.summands.clone());
            syz = next;
        }
        (terms, diffs)
    }

    /// The Nakayama functor on a map between projectives.
    pub fn nakayama(&self, f: &ProjMap) -> ModuleMap {
        let q = self.bound_quiver().quiver();
        let n = self.vertex_count();
        let blocks = (0..n)
            .map(|z| {
                let rows = self.injective_offsets(&f.target, z);
                let cols = self.injective_offsets(&f.source, z);
                let mut block = Matrix::zeros(rows[f.target.len()], cols[f.source.len()]);
                for (k, &x) in f.source.iter().enumerate() {
                    let segs = self.projective_offsets(&f.target, x);
                    for &r in self.paths_between(z, x) {
                        let col = cols[k] + self.local_index(r);
                        for (j, &y) in f.target.iter().enumerate() {
                            for (l, &p) in self.paths_between(y, x).iter().enumerate() {
                                let c = &f.images[k][segs[j] + l];
                                if c.is_zero() {
                                    continue;
                                }
                                if let Some(rest) = self.path(r).strip_suffix(q, self.path(p)) {
                                    let rid =
                                        self.path_id(&rest).expect("prefix of a nonzero path");
                                    let row = rows[j] + self.local_index(rid);
                                    let v = block.get(row, col) + c;
                                    block.set(row, col, v);
                                }
                            }
                        }
                    }
                }
                block
            })
            .collect();
        ModuleMap::new(blocks)
    }

    /// AR translate `ker(nu p1)`. `M` must have no projective summands.
    pub fn tau(&self, m: &Module) -> Result<Module, ModuleError> {
        if m.is_zero() {
            return Ok(self.zero_module());
        }
        if let Some((x, _)) = self.split_projective_summand(m) {
            return Err(ModuleError::ProjectiveSummand(
                self.vertex_label(x).to_string(),
            ));
        }
        Ok(self.tau_unchecked(m))
    }

    /// `ker(nu p1)` without the summand check; projective summands of `M`
    /// contribute nothing.
    pub fn tau_unchecked(&self, m: &Module) -> Module {
        let pres = self.min_proj_presentation(m);
        let nu = self.nakayama(&pres.map);
        let source = self.injective_sum(&pres.p1);
        self.kernel(&nu, &source).0
    }

    /// A basis of `Hom(M, N)`.
    pub fn hom_space(&self, m: &Module, n: &Module) -> Vec<ModuleMap> {
        let q = self.bound_quiver().quiver();
        let nv = self.vertex_count();
        let mut offs = Vec::with_capacity(nv + 1);
        let mut acc = 0;
        for y in 0..nv {
            offs.push(acc);
            acc += n.dim(y) * m.dim(y);
        }
        offs.push(acc);
        let unknowns = acc;
        if unknowns == 0 {
            return Vec::new();
        }
        let mut eqs: Vec<Vec<Rational>> = Vec::new();
        for (a, arrow) in q.arrows().iter().enumerate() {
            let (y, z) = (arrow.source, arrow.target);
            let (my, mz, nz, ny) = (m.dim(y), m.dim(z), n.dim(z), n.dim(y));
            let (na, ma) = (n.map(a), m.map(a));
            for i in 0..nz {
                for j in 0..my {
                    let mut row = vec![Rational::zero(); unknowns];
                    let mut any = false;
                    for k in 0..ny {
                        let c = na.get(i, k);
                        if !c.is_zero() {
                            row[offs[y] + k * my + j] += c;
                            any = true;
                        }
                    }
                    for k in 0..mz {
                        let c = ma.get(k, j);
                        if !c.is_zero() {
                            row[offs[z] + i * mz + k] -= c;
                            any = true;
                        }
                    }
                    if any {
                        eqs.push(row);
                    }
                }
            }
        }
        let system = Matrix::from_fn(eqs.len(), unknowns, |r, c| eqs[r][c].clone());
        let kernel = system.kernel();
        kernel
            .columns()
            .into_iter()
            .map(|v| {
                ModuleMap::new(
                    (0..nv)
                        .map(|y| {
                            Matrix::from_fn(n.dim(y), m.dim(y), |i, j| {
                                v[offs[y] + i * m.dim(y) + j].clone()
                            })
                        })
                        .collect(),
                )
            })
            .collect()
    }

    pub fn hom_dim(&self, m: &Module, n: &Module) -> usize {
        self.hom_space(m, n).len()
    }

    /// `dim Ext^i(M, N)` for `i >= 1`, from the minimal projective resolution.
    pub fn ext_dim(&self, m: &Module, n: &Module, i: usize) -> Result<usize, ModuleError> {
        assert!(i >= 1, "Ext degree starts at 1");
        let cap = self.config().resolution_cap;
        if i + 1 > cap {
            return Err(ModuleError::ResolutionDepthExceeded { cap });
        }
        let (terms, diffs) = self.projective_resolution(m, i + 1);
        let actions = self.path_matrices(n);
        let dual = |k: usize| self.dual_differential(&diffs[k - 1], n, &actions);
        let hom_dim: usize = terms[i].iter().map(|&x| n.dim(x)).sum();
        let next = dual(i + 1).rank();
        let prev = dual(i).rank();
        Ok(hom_dim - next - prev)
    }

    /// `Hom(d, N): Hom(P_{k-1}, N) -> Hom(P_k, N)`.
    fn dual_differential(&self, d: &ProjMap, n: &Module, actions: &[Matrix]) -> Matrix {
        let row_offs = prefix_sums(d.source.iter().map(|&x| n.dim(x)));
        let col_offs = prefix_sums(d.target.iter().map(|&y| n.dim(y)));
        let mut out = Matrix::zeros(row_offs[d.source.len()], col_offs[d.target.len()]);
        for (g, &x) in d.source.iter().enumerate() {
            let segs = self.projective_offsets(&d.target, x);
            for (j, &y) in d.target.iter().enumerate() {
                for (l, &p) in self.paths_between(y, x).iter().enumerate() {
                    let c = &d.images[g][segs[j] + l];
                    if c.is_zero() {
                        continue;
                    }
                    let act = &actions[p];
                    for r in 0..act.rows() {
                        for s in 0..act.cols() {
                            let e = act.get(r, s);
                            if !e.is_zero() {
                                let (rr, cc) = (row_offs[g] + r, col_offs[j] + s);
                                let v = out.get(rr, cc) + c * e;
                                out.set(rr, cc, v);
                            }
                        }
                    }
                }
            }
        }
        out
    }

    /// `dim Ext^i(M, kQ/I)`.
    pub fn ext_regular_dim(&self, m: &Module, i: usize) -> Result<usize, ModuleError> {
        self.ext_dim(m, &self.regular(), i)
    }

    /// Dimension of `Hom(X, Y)` modulo maps factoring through projectives
    /// (`through_injectives == false`) or injectives.
    pub fn stable_hom_dim(&self, x: &Module, y: &Module, through_injectives: bool) -> usize {
        let homs = self.hom_space(x, y);
        if homs.is_empty() {
            return 0;
        }
        let mut factored: Vec<Vec<Rational>> = Vec::new();
        for v in 0..self.vertex_count() {
            let mid = if through_injectives {
                self.injective(v)
            } else {
                self.projective(v)
            };
            let into = self.hom_space(x, &mid);
            if into.is_empty() {
                continue;
            }
            let out = self.hom_space(&mid, y);
            for h in &into {
                for g in &out {
                    factored.push(flatten(&g.compose(h)));
                }
            }
        }
        let len = flatten(&homs[0]).len();
        let factored_rank = Matrix::from_columns(len, &factored).rank();
        homs.len() - factored_rank
    }
}

pub(crate) fn flatten(f: &ModuleMap) -> Vec<Rational> {
    f.blocks()
        .iter()
        .flat_map(|b| {
            (0..b.rows()).flat_map(move |r| (0..b.cols()).map(move |c| b.get(r, c).clone()))
        })
        .collect()
}

fn prefix_sums(it: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for d in it {
        out.push(out.last().unwrap() + d);
    }
    out
}
