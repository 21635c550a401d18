//! Property checks over families of modules. Each returns the violations it
//! found as readable witnesses; an empty list means the property holds.

use std::collections::BTreeSet;

use crate::analysis::gentle_profile;
use crate::module::{Algebra, Module, ModuleError, ProjMap, StringWalk};

/// A module with a name for witnesses and its string, when it has one.
#[derive(Debug, Clone)]
pub struct Candidate {
    pub label: String,
    pub walk: Option<StringWalk>,
    pub module: Module,
}

impl Algebra {
    pub fn string_candidate(&self, w: &StringWalk) -> Candidate {
        let bq = self.bound_quiver();
        let label = if w.is_trivial() {
            format!("S({})", self.vertex_label(w.start()))
        } else {
            w.oriented(bq).display(bq)
        };
        Candidate {
            label,
            walk: Some(w.clone()),
            module: self.string_module(w),
        }
    }

    /// String modules when the algebra is a string algebra, otherwise simples
    /// and path modules up to isomorphism. The flag reports an incomplete
    /// enumeration.
    pub fn module_candidates(&self, max_len: Option<usize>) -> (Vec<Candidate>, bool) {
        let profile = gentle_profile(self.bound_quiver());
        if profile.is_string {
            let e = match max_len {
                Some(l) => self.enumerate_strings(l),
                None => self.all_strings(),
            };
            let partial = e.truncated || e.band.is_some();
            return (
                e.strings.iter().map(|w| self.string_candidate(w)).collect(),
                partial,
            );
        }
        let bq = self.bound_quiver();
        let mut all: Vec<Candidate> = (0..self.vertex_count())
            .map(|x| Candidate {
                label: format!("S({})", self.vertex_label(x)),
                walk: None,
                module: self.simple(x),
            })
            .collect();
        for p in 0..self.paths().len() {
            all.push(Candidate {
                label: format!("path:{}", self.path(p).display(bq.quiver())),
                walk: None,
                module: self.path_module(p),
            });
        }
        let modules: Vec<Module> = all.iter().map(|c| c.module.clone()).collect();
        let reps = self.iso_classes(&modules);
        (reps.into_iter().map(|i| all[i].clone()).collect(), false)
    }
}

/// One module on which the GP criteria disagree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GpDiscrepancy {
    pub label: String,
    pub omega_tau: bool,
    pub ext: bool,
    /// Projective or a Kalck module; `None` when the algebra is not gentle.
    pub kalck: Option<bool>,
}

/// Compares `Omega^{m+1} tau M ≅ M`, `Ext^{1..m}(M, kQ/I) = 0` and, for gentle
/// algebras, membership in the Kalck list together with the projectives.
pub fn gp_equivalence(
    alg: &Algebra,
    m: usize,
    candidates: &[Candidate],
) -> Result<Vec<GpDiscrepancy>, ModuleError> {
    let bq = alg.bound_quiver();
    let kalck: Option<BTreeSet<StringWalk>> = alg
        .kalck_gp_modules()
        .ok()
        .map(|ws| ws.iter().map(|w| w.canonical(bq)).collect());
    let mut out = Vec::new();
    for c in candidates {
        let omega_tau = alg.omega_tau_test(&c.module, m);
        let ext = alg.gp_membership_exact(&c.module, m)?;
        let listed = match (&kalck, &c.walk) {
            (Some(set), Some(w)) => {
                Some(alg.is_projective(&c.module) || set.contains(&w.canonical(bq)))
            }
            _ => None,
        };
        if omega_tau != ext || listed.is_some_and(|k| k != ext) {
            out.push(GpDiscrepancy {
                label: c.label.clone(),
                omega_tau,
                ext,
                kalck: listed,
            });
        }
    }
    Ok(out)
}

/// `nu P(x)` is `I(x)`: the Nakayama image of the identity is invertible and
/// `I(x)` is injective with simple socle `S(x)`.
pub fn nakayama_check(alg: &Algebra) -> Vec<String> {
    let mut out = Vec::new();
    for x in 0..alg.vertex_count() {
        let label = alg.vertex_label(x);
        if !alg.nakayama(&ProjMap::identity(alg, &[x])).is_isomorphism() {
            out.push(format!(
                "nu of the identity of P({label}) is not invertible"
            ));
        }
        let ix = alg.injective(x);
        let (soc, _) = alg.socle(&ix);
        if soc.dims() != alg.simple(x).dims() {
            out.push(format!("socle of I({label}) is {}", alg.format_dims(&soc)));
        }
        for y in 0..alg.vertex_count() {
            match alg.ext_dim(&alg.simple(y), &ix, 1) {
                Ok(0) => {}
                Ok(d) => out.push(format!(
                    "Ext^1(S({}), I({label})) has dimension {d}",
                    alg.vertex_label(y)
                )),
                Err(e) => out.push(format!(
                    "Ext^1(S({}), I({label})): {e}",
                    alg.vertex_label(y)
                )),
            }
        }
    }
    out
}

/// `dim Omega M + dim M = dim P0` for the projective cover `P0 -> M`.
pub fn syzygy_bookkeeping(alg: &Algebra, candidates: &[Candidate]) -> Vec<String> {
    candidates
        .iter()
        .filter_map(|c| {
            let cover = alg.projective_cover(&c.module);
            let omega = alg.syzygy(&c.module);
            let lhs = omega.total_dim() + c.module.total_dim();
            (lhs != cover.module.total_dim()).then(|| {
                format!(
                    "{}: dim Omega M + dim M = {lhs}, dim P0 = {}",
                    c.label,
                    cover.module.total_dim()
                )
            })
        })
        .collect()
}

/// Every relation acts as zero on the candidates and on their syzygies and
/// AR translates.
pub fn relation_compliance(alg: &Algebra, candidates: &[Candidate]) -> Vec<String> {
    let q = alg.bound_quiver().quiver();
    let mut out = Vec::new();
    for c in candidates {
        let derived = [
            ("M", c.module.clone()),
            ("Omega M", alg.syzygy(&c.module)),
            ("tau M", alg.tau_unchecked(&c.module)),
        ];
        for (what, m) in derived {
            if let Some(r) = alg.violated_relation(&m) {
                out.push(format!(
                    "{what} for {}: relation {} acts nonzero",
                    c.label,
                    r.display(q)
                ));
            }
        }
    }
    out
}

/// `dim Ext^1(M, X) = dim Hom(X, tau M)` modulo maps through injectives, for
/// `M` without projective summands.
pub fn ar_formula(alg: &Algebra, candidates: &[Candidate]) -> Result<Vec<String>, ModuleError> {
    let mut out = Vec::new();
    for m in candidates {
        if alg.is_projective(&m.module) {
            continue;
        }
        let tau = alg.tau(&m.module)?;
        for x in candidates {
            let ext = alg.ext_dim(&m.module, &x.module, 1)?;
            let hom = alg.stable_hom_dim(&x.module, &tau, true);
            if ext != hom {
                out.push(format!(
                    "M = {}, X = {}: dim Ext^1(M, X) = {ext}, stable Hom(X, tau M) = {hom}",
                    m.label, x.label
                ));
            }
        }
    }
    Ok(out)
}

/// Over a 1-Gorenstein algebra `Omega tau M` is Gorenstein-projective for
/// every `M`.
pub fn omega_tau_in_gp(
    alg: &Algebra,
    candidates: &[Candidate],
) -> Result<Vec<String>, ModuleError> {
    let mut out = Vec::new();
    for c in candidates {
        let omega_tau = alg.syzygy(&alg.tau_unchecked(&c.module));
        if !alg.gp_membership_exact(&omega_tau, 1)? {
            out.push(format!(
                "{}: Omega tau M is not Gorenstein-projective",
                c.label
            ));
        }
    }
    Ok(out)
}

/// Over a 2-Calabi-Yau tilted algebra `Omega^2 tau M ≅ M` exactly when `M`
/// is Gorenstein-projective.
pub fn two_cy_tilted_check(
    alg: &Algebra,
    candidates: &[Candidate],
) -> Result<Vec<String>, ModuleError> {
    let mut out = Vec::new();
    for c in candidates {
        let gp = alg.gp_membership_exact(&c.module, 1)?;
        if alg.omega_tau_test(&c.module, 1) != gp {
            out.push(format!(
                "{}: Omega^2 tau M ≅ M disagrees with Gorenstein-projectivity ({gp})",
                c.label
            ));
        }
    }
    Ok(out)
}
