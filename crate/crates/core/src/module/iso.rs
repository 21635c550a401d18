use num_bigint::BigInt;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Algebra, Module, ModuleMap};
use crate::linalg::{Matrix, Rational};
use crate::quiver::VertexId;

/// Outcome of an isomorphism test.
#[derive(Debug, Clone)]
pub enum Isomorphism {
    /// An explicit invertible homomorphism.
    Certificate(ModuleMap),
    /// Dimension vectors differ, or no basis of `Hom` exists.
    NotIsomorphic,
    /// Every random trial produced a singular map.
    ProbablyNot,
}

impl Isomorphism {
    pub fn holds(&self) -> bool {
        matches!(self, Isomorphism::Certificate(_))
    }
}

const COEFF_BOUND: i64 = 1_000_000;

impl Algebra {
    /// Decides `M ≅ N` by sampling random combinations of a basis of
    /// `Hom(M, N)`. A positive answer carries an exact certificate; a negative
    /// one after `iso_trials` singular samples is wrong with probability at
    /// most `(dim M / 2e6)^trials`.
    pub fn is_isomorphic(&self, m: &Module, n: &Module) -> Isomorphism {
        if m.dims() != n.dims() {
            return Isomorphism::NotIsomorphic;
        }
        if m.is_zero() {
            return Isomorphism::Certificate(self.identity_map(m));
        }
        if m == n {
            return Isomorphism::Certificate(self.identity_map(m));
        }
        let basis = self.hom_space(m, n);
        if basis.is_empty() {
            return Isomorphism::NotIsomorphic;
        }
        let mut rng = self.rng_for(m);
        for _ in 0..self.config().iso_trials {
            let f = random_combination(&basis, &mut rng);
            if f.is_isomorphism() {
                return Isomorphism::Certificate(f);
            }
        }
        Isomorphism::ProbablyNot
    }

    pub fn isomorphic(&self, m: &Module, n: &Module) -> bool {
        self.is_isomorphic(m, n).holds()
    }

    fn rng_for(&self, m: &Module) -> ChaCha8Rng {
        let mix = m.dims().iter().fold(self.config().seed, |h, &d| {
            h.wrapping_mul(0x100_0000_01b3).wrapping_add(d as u64 + 1)
        });
        ChaCha8Rng::seed_from_u64(mix)
    }

    /// Finds a direct summand `P(x)` of `M`: an element `m` at `x` and a map
    /// `g: M -> P(x)` whose value on `m` has nonzero `e_x` coordinate. Returns
    /// `x` and the complement `ker g`.
    pub fn split_projective_summand(&self, m: &Module) -> Option<(VertexId, Module)> {
        for x in 0..self.vertex_count() {
            if m.dim(x) == 0 {
                continue;
            }
            let px = self.projective(x);
            // e_x is the first basis vector of P(x) at x
            for g in self.hom_space(m, &px) {
                let block = g.block(x);
                if (0..block.cols()).any(|k| !block.get(0, k).is_zero()) {
                    let (rest, _) = self.kernel(&g, m);
                    return Some((x, rest));
                }
            }
        }
        None
    }

    /// Removes all projective direct summands; returns the remainder and the
    /// vertices of the removed summands in the order found.
    pub fn strip_projectives(&self, m: &Module) -> (Module, Vec<VertexId>) {
        let mut cur = m.clone();
        let mut removed = Vec::new();
        while let Some((x, rest)) = self.split_projective_summand(&cur) {
            removed.push(x);
            cur = rest;
        }
        (cur, removed)
    }

    /// Multiplicity of a module `C` with simple top at `y` as a direct summand
    /// of `K`, where `generator` is the index of the generator of `C` at `y`.
    pub fn local_multiplicity(
        &self,
        c: &Module,
        y: VertexId,
        generator: usize,
        k: &Module,
    ) -> usize {
        let into = self.hom_space(c, k);
        if into.is_empty() {
            return 0;
        }
        let back = self.hom_space(k, c);
        if back.is_empty() {
            return 0;
        }
        let pairing = Matrix::from_fn(back.len(), into.len(), |j, i| {
            let v = back[j]
                .block(y)
                .mul(&into[i].block(y).col_block(generator, generator + 1));
            v.get(generator, 0).clone()
        });
        pairing.rank()
    }
}

fn random_combination(basis: &[ModuleMap], rng: &mut ChaCha8Rng) -> ModuleMap {
    let mut acc: Option<ModuleMap> = None;
    for f in basis {
        let c = Rational::from_integer(BigInt::from(rng.gen_range(-COEFF_BOUND..=COEFF_BOUND)));
        let term = f.scale(&c);
        acc = Some(match acc {
            None => term,
            Some(a) => a.add(&term),
        });
    }
    acc.expect("nonempty basis")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn iso_basics() {
        let alg = Algebra::new(fixtures::two_cluster_d6()).unwrap();
        let s1 = alg.simple(0);
        assert!(alg.isomorphic(&s1, &s1));
        assert!(!alg.isomorphic(&alg.simple(0), &alg.simple(1)));
        let p = alg.projective(1);
        let sum = alg.direct_sum(&p, &alg.simple(2));
        let swapped = alg.direct_sum(&alg.simple(2), &p);
        assert!(alg.isomorphic(&sum, &swapped));
    }

    #[test]
    fn stripping_projectives() {
        let alg = Algebra::new(fixtures::two_cluster_d6()).unwrap();
        let s3 = alg.simple(alg.vertex("3").unwrap());
        let m = alg.direct_sum(&alg.projective(1), &s3);
        let m = alg.direct_sum(&m, &alg.projective(4));
        let (rest, removed) = alg.strip_projectives(&m);
        assert_eq!(removed.len(), 2);
        assert!(alg.isomorphic(&rest, &s3));
    }
}
