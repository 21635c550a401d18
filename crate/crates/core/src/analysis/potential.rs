use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::{canonical_rotation, names, RelationCycleDecomposition};
use crate::linalg::Rational;
use crate::quiver::{ArrowId, BoundQuiver, Path, Quiver};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("component {component} has n = {n}, r = {r}, and r + 1 is not a positive multiple of n")]
pub struct Stably3CyFailure {
    pub component: usize,
    pub n: usize,
    pub r: usize,
}

/// Exponents `b_i` with `r_i = b_i n_i - 1`.
pub fn stably_3cy_test(dec: &RelationCycleDecomposition) -> Result<Vec<usize>, Stably3CyFailure> {
    dec.components
        .iter()
        .enumerate()
        .map(|(i, c)| {
            if c.r > 0 && (c.r + 1) % c.n == 0 {
                Ok((c.r + 1) / c.n)
            } else {
                Err(Stably3CyFailure {
                    component: i,
                    n: c.n,
                    r: c.r,
                })
            }
        })
        .collect()
}

/// `coefficient * cycle^exponent`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PotentialTerm {
    pub cycle: Vec<ArrowId>,
    pub coefficient: Rational,
    pub exponent: usize,
}

/// A finite linear combination of cycles up to rotation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Potential {
    terms: Vec<PotentialTerm>,
}

impl Potential {
    /// Canonicalizes cycles, merges equal terms and drops zero coefficients.
    pub fn new(q: &Quiver, terms: Vec<PotentialTerm>) -> Potential {
        let mut merged: BTreeMap<(Vec<String>, usize), PotentialTerm> = BTreeMap::new();
        for t in terms {
            let cycle = canonical_rotation(q, &t.cycle);
            let key = (names(q, &cycle), t.exponent);
            merged
                .entry(key)
                .and_modify(|e| e.coefficient += &t.coefficient)
                .or_insert(PotentialTerm {
                    cycle,
                    coefficient: t.coefficient,
                    exponent: t.exponent,
                });
        }
        Potential {
            terms: merged
                .into_values()
                .filter(|t| !t.coefficient.is_zero())
                .collect(),
        }
    }

    pub fn terms(&self) -> &[PotentialTerm] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// E.g. `alpha.beta.gamma.delta + lambda^5`.
    pub fn display(&self, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coefficient.is_negative();
            if i > 0 {
                out.push_str(if negative { " - " } else { " + " });
            } else if negative {
                out.push('-');
            }
            let c = t.coefficient.abs();
            if !c.is_one() {
                out.push_str(&format!("{c}*"));
            }
            let body = names(q, &t.cycle).join(".");
            match (t.cycle.len(), t.exponent) {
                (_, 1) => out.push_str(&body),
                (1, e) => out.push_str(&format!("{body}^{e}")),
                (_, e) => out.push_str(&format!("({body})^{e}")),
            }
        }
        out
    }
}

/// `W = sum c_i^{b_i}`.
pub fn build_potential(q: &Quiver, dec: &RelationCycleDecomposition, b: &[usize]) -> Potential {
    let terms = dec
        .components
        .iter()
        .zip(b)
        .map(|(c, &e)| PotentialTerm {
            cycle: c.cycle.clone(),
            coefficient: Rational::one(),
            exponent: e,
        })
        .collect();
    Potential::new(q, terms)
}

/// `d_a W`: for each occurrence of `a` in each expanded term, the rest of the
/// cycle read from the arrow after it; like paths combined.
pub fn cyclic_derivative(q: &Quiver, w: &Potential, a: ArrowId) -> Vec<(Rational, Path)> {
    let mut acc: BTreeMap<Path, Rational> = BTreeMap::new();
    for t in w.terms() {
        let expanded: Vec<ArrowId> = t
            .cycle
            .iter()
            .copied()
            .cycle()
            .take(t.cycle.len() * t.exponent)
            .collect();
        let len = expanded.len();
        for k in 0..len {
            if expanded[k] != a {
                continue;
            }
            let rest: Vec<ArrowId> = (1..len).map(|j| expanded[(k + j) % len]).collect();
            let path = if rest.is_empty() {
                Path::trivial(q.arrow(a).target)
            } else {
                Path::from_arrows(q, &rest).expect("rotations of a cycle compose")
            };
            *acc.entry(path).or_insert_with(Rational::zero) += &t.coefficient;
        }
    }
    acc.into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (c, p))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("the derivative by {arrow} is a combination of several paths")]
pub struct NonMonomialDerivative {
    pub arrow: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobianReport {
    pub holds: bool,
    /// `(arrow, scalar, path)` with `d_arrow W = scalar * path`.
    pub derivatives: Vec<(ArrowId, Rational, Path)>,
    /// Relations not produced by any derivative.
    pub missing: Vec<Path>,
    /// Derivatives that are not relations.
    pub extra: Vec<Path>,
}

/// Whether the nonzero cyclic derivatives of `W`, up to scalars, are exactly
/// the relations.
pub fn jacobian_check(
    bq: &BoundQuiver,
    w: &Potential,
) -> Result<JacobianReport, NonMonomialDerivative> {
    let q = bq.quiver();
    let mut derivatives = Vec::new();
    for a in 0..q.arrow_count() {
        let d = cyclic_derivative(q, w, a);
        match d.len() {
            0 => {}
            1 => {
                let (c, p) = d.into_iter().next().unwrap();
                derivatives.push((a, c, p));
            }
            _ => {
                return Err(NonMonomialDerivative {
                    arrow: q.arrow(a).name.clone(),
                })
            }
        }
    }
    let generated: BTreeSet<&Path> = derivatives.iter().map(|(_, _, p)| p).collect();
    let relations: BTreeSet<&Path> = bq.relations().iter().collect();
    let missing: Vec<Path> = relations
        .difference(&generated)
        .map(|p| (*p).clone())
        .collect();
    let extra: Vec<Path> = generated
        .difference(&relations)
        .map(|p| (*p).clone())
        .collect();
    Ok(JacobianReport {
        holds: missing.is_empty() && extra.is_empty(),
        derivatives,
        missing,
        extra,
    })
}
