use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_traits::One;
use thiserror::Error;

use super::{Algebra, Module};
use crate::linalg::{Matrix, Rational};
use crate::quiver::{ArrowId, BoundQuiver, Path, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Forward,
    Inverse,
}

/// A walk in the quiver: a start vertex and letters. A forward letter `a`
/// moves from `s(a)` to `t(a)`; an inverse letter moves from `t(a)` to `s(a)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StringWalk {
    start: VertexId,
    letters: Vec<(ArrowId, Direction)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WalkError {
    #[error("unknown arrow {0:?}")]
    UnknownArrow(String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("empty walk")]
    Empty,
    #[error("letter {position} does not start where the previous one ends")]
    Disconnected { position: usize },
    #[error("letters {position} and {} cancel", position + 1)]
    NotReduced { position: usize },
    #[error("the walk contains the relation {0}")]
    ContainsRelation(String),
}

impl StringWalk {
    pub fn trivial(v: VertexId) -> StringWalk {
        StringWalk {
            start: v,
            letters: Vec::new(),
        }
    }

    /// Checks connectivity, reducedness and that no direct run contains a
    /// relation.
    pub fn new(
        bq: &BoundQuiver,
        start: VertexId,
        letters: Vec<(ArrowId, Direction)>,
    ) -> Result<StringWalk, WalkError> {
        let w = StringWalk { start, letters };
        w.validate(bq)?;
        Ok(w)
    }

    pub fn from_letters(
        bq: &BoundQuiver,
        letters: Vec<(ArrowId, Direction)>,
    ) -> Result<StringWalk, WalkError> {
        let q = bq.quiver();
        let &(a, d) = letters.first().ok_or(WalkError::Empty)?;
        let start = match d {
            Direction::Forward => q.arrow(a).source,
            Direction::Inverse => q.arrow(a).target,
        };
        StringWalk::new(bq, start, letters)
    }

    /// Parses `"beta~,alpha"` or `"@vertex"`.
    pub fn parse(bq: &BoundQuiver, text: &str) -> Result<StringWalk, WalkError> {
        let q = bq.quiver();
        let text = text.trim();
        if let Some(v) = text.strip_prefix('@') {
            let v = q
                .vertex_id(v.trim())
                .ok_or_else(|| WalkError::UnknownVertex(v.to_string()))?;
            return Ok(StringWalk::trivial(v));
        }
        if text.is_empty() {
            return Err(WalkError::Empty);
        }
        let mut letters = Vec::new();
        for tok in text.split(',') {
            let tok = tok.trim();
            let (name, dir) = match tok.strip_suffix('~') {
                Some(n) => (n, Direction::Inverse),
                None => (tok, Direction::Forward),
            };
            let a = q
                .arrow_id(name)
                .ok_or_else(|| WalkError::UnknownArrow(name.to_string()))?;
            letters.push((a, dir));
        }
        StringWalk::from_letters(bq, letters)
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn letters(&self) -> &[(ArrowId, Direction)] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    /// Vertices visited, `len() + 1` of them.
    pub fn vertices(&self, bq: &BoundQuiver) -> Vec<VertexId> {
        let q = bq.quiver();
        let mut out = vec![self.start];
        for &(a, d) in &self.letters {
            out.push(match d {
                Direction::Forward => q.arrow(a).target,
                Direction::Inverse => q.arrow(a).source,
            });
        }
        out
    }

    pub fn end(&self, bq: &BoundQuiver) -> VertexId {
        *self.vertices(bq).last().unwrap()
    }

    pub fn inverse(&self, bq: &BoundQuiver) -> StringWalk {
        StringWalk {
            start: self.end(bq),
            letters: self
                .letters
                .iter()
                .rev()
                .map(|&(a, d)| {
                    let d = match d {
                        Direction::Forward => Direction::Inverse,
                        Direction::Inverse => Direction::Forward,
                    };
                    (a, d)
                })
                .collect(),
        }
    }

    /// The representative of `{w, w^-1}` used for deduplication.
    pub fn canonical(&self, bq: &BoundQuiver) -> StringWalk {
        let inv = self.inverse(bq);
        if inv < *self {
            inv
        } else {
            self.clone()
        }
    }

    /// The orientation with more direct letters, ties broken by [`Self::canonical`].
    /// Used for display.
    pub fn oriented(&self, bq: &BoundQuiver) -> StringWalk {
        let c = self.canonical(bq);
        let inv = c.inverse(bq);
        let direct = |w: &StringWalk| {
            w.letters
                .iter()
                .filter(|(_, d)| *d == Direction::Forward)
                .count()
        };
        if direct(&inv) > direct(&c) {
            inv
        } else {
            c
        }
    }

    fn validate(&self, bq: &BoundQuiver) -> Result<(), WalkError> {
        let q = bq.quiver();
        let mut at = self.start;
        for (i, &(a, d)) in self.letters.iter().enumerate() {
            let arrow = q.arrow(a);
            let (from, to) = match d {
                Direction::Forward => (arrow.source, arrow.target),
                Direction::Inverse => (arrow.target, arrow.source),
            };
            if from != at {
                return Err(WalkError::Disconnected { position: i });
            }
            if i > 0 {
                let (b, e) = self.letters[i - 1];
                if b == a && e != d {
                    return Err(WalkError::NotReduced { position: i - 1 });
                }
            }
            at = to;
        }
        for run in self.direct_runs(bq) {
            if let Some(r) = bq.relations().iter().find(|r| run.contains_subpath(r)) {
                return Err(WalkError::ContainsRelation(r.display(q).to_string()));
            }
        }
        Ok(())
    }

    /// Maximal runs of equal direction, as paths of the quiver (inverse runs
    /// reversed).
    fn direct_runs(&self, bq: &BoundQuiver) -> Vec<Path> {
        let q = bq.quiver();
        let mut out = Vec::new();
        let mut i = 0;
        while i < self.letters.len() {
            let d = self.letters[i].1;
            let mut j = i;
            while j < self.letters.len() && self.letters[j].1 == d {
                j += 1;
            }
            let mut arrows: Vec<ArrowId> = self.letters[i..j].iter().map(|l| l.0).collect();
            if d == Direction::Inverse {
                arrows.reverse();
            }
            out.push(Path::from_arrows(q, &arrows).expect("runs of a connected walk compose"));
            i = j;
        }
        out
    }

    pub fn display(&self, bq: &BoundQuiver) -> String {
        let q = bq.quiver();
        if self.letters.is_empty() {
            return format!("@{}", q.vertex_label(self.start));
        }
        self.letters
            .iter()
            .map(|&(a, d)| match d {
                Direction::Forward => q.arrow(a).name.clone(),
                Direction::Inverse => format!("{}~", q.arrow(a).name),
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        })
    }
}

/// Result of [`Algebra::enumerate_strings`].
#[derive(Debug, Clone)]
pub struct StringEnumeration {
    pub strings: Vec<StringWalk>,
    /// A closed walk all of whose powers are strings, if one was met.
    pub band: Option<StringWalk>,
    /// Whether walks of the maximal length were found (so longer ones may exist).
    pub truncated: bool,
}

impl Algebra {
    /// The string module: one basis vector per position of the walk.
    pub fn string_module(&self, w: &StringWalk) -> Module {
        let bq = self.bound_quiver();
        let q = bq.quiver();
        let verts = w.vertices(bq);
        let mut dims = vec![0; self.vertex_count()];
        let pos: Vec<usize> = verts
            .iter()
            .map(|&v| {
                dims[v] += 1;
                dims[v] - 1
            })
            .collect();
        let mut maps: Vec<Matrix> = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
            .collect();
        for (k, &(a, d)) in w.letters().iter().enumerate() {
            let (from, to) = match d {
                Direction::Forward => (k, k + 1),
                Direction::Inverse => (k + 1, k),
            };
            maps[a].set(pos[to], pos[from], Rational::one());
        }
        self.raw(dims, maps)
    }

    pub fn parse_walk(&self, text: &str) -> Result<StringWalk, WalkError> {
        StringWalk::parse(self.bound_quiver(), text)
    }

    /// All strings of length at most `max_len`, one per pair `{w, w^-1}`, in
    /// order of length and then letters.
    pub fn enumerate_strings(&self, max_len: usize) -> StringEnumeration {
        let bq = self.bound_quiver();
        let q = bq.quiver();
        let mut seen: BTreeSet<StringWalk> = BTreeSet::new();
        let mut frontier: Vec<StringWalk> =
            (0..self.vertex_count()).map(StringWalk::trivial).collect();
        seen.extend(frontier.iter().cloned());
        let mut band = None;
        let mut truncated = false;
        let band_power = bq.relations().iter().map(Path::len).max().unwrap_or(1) + 1;
        for len in 1..=max_len {
            let mut next = Vec::new();
            for w in &frontier {
                let end = w.end(bq);
                let steps = q
                    .arrows_from(end)
                    .map(|a| (a, Direction::Forward))
                    .chain(q.arrows_to(end).map(|a| (a, Direction::Inverse)));
                for step in steps.collect::<Vec<_>>() {
                    let mut letters = w.letters.clone();
                    letters.push(step);
                    if let Ok(nw) = StringWalk::new(bq, w.start, letters) {
                        next.push(nw);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            if len == max_len {
                truncated = true;
            }
            for w in &next {
                if band.is_none() && w.end(bq) == w.start && self.is_band(w, band_power) {
                    band = Some(w.clone());
                }
                seen.insert(w.canonical(bq));
            }
            frontier = next;
        }
        let mut strings: Vec<StringWalk> = seen.into_iter().collect();
        strings.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        StringEnumeration {
            strings,
            band,
            truncated,
        }
    }

    fn is_band(&self, w: &StringWalk, power: usize) -> bool {
        let letters: Vec<_> = w
            .letters
            .iter()
            .copied()
            .cycle()
            .take(w.len() * power)
            .collect();
        StringWalk::new(self.bound_quiver(), w.start, letters).is_ok()
    }

    /// Every string, when the algebra has no bands. Walk lengths are then
    /// bounded by twice the number of arrows.
    pub fn all_strings(&self) -> StringEnumeration {
        self.enumerate_strings(2 * self.arrow_count() + 1)
    }

    /// String walk of a nonzero path.
    pub fn path_walk(&self, p: &Path) -> StringWalk {
        let letters = p
            .arrows()
            .iter()
            .map(|&a| (a, Direction::Forward))
            .collect();
        StringWalk {
            start: p.start(),
            letters,
        }
    }

    /// Groups candidate modules into isomorphism classes; returns
    /// representatives' indices.
    pub fn iso_classes(&self, modules: &[Module]) -> Vec<usize> {
        let mut reps: Vec<usize> = Vec::new();
        let mut by_dims: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
        for (i, m) in modules.iter().enumerate() {
            let bucket = by_dims.entry(m.dims().to_vec()).or_default();
            if bucket.iter().any(|&j| self.isomorphic(&modules[j], m)) {
                continue;
            }
            bucket.push(i);
            reps.push(i);
        }
        reps
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parse_and_build() {
        let bq = fixtures::two_cluster_d6();
        let alg = Algebra::new(bq.clone()).unwrap();
        let w = StringWalk::parse(&bq, "beta").unwrap();
        let m = alg.string_module(&w);
        assert_eq!(m.dim(bq.quiver().vertex_id("5").unwrap()), 1);
        assert_eq!(m.dim(bq.quiver().vertex_id("4").unwrap()), 1);
        assert_eq!(m.total_dim(), 2);
        let s = alg.string_module(&StringWalk::parse(&bq, "@3").unwrap());
        assert!(alg.isomorphic(&s, &alg.simple(bq.quiver().vertex_id("3").unwrap())));
    }

    #[test]
    fn invalid_walks() {
        let bq = fixtures::linear_a4();
        assert!(matches!(
            StringWalk::parse(&bq, "beta,alpha"),
            Err(WalkError::ContainsRelation(_))
        ));
        assert!(matches!(
            StringWalk::parse(&bq, "alpha~,beta~"),
            Err(WalkError::ContainsRelation(_))
        ));
        assert!(matches!(
            StringWalk::parse(&bq, "beta,beta~"),
            Err(WalkError::NotReduced { .. })
        ));
        assert!(matches!(
            StringWalk::parse(&bq, "alpha,beta"),
            Err(WalkError::Disconnected { .. })
        ));
        assert!(matches!(
            StringWalk::parse(&bq, "nope"),
            Err(WalkError::UnknownArrow(_))
        ));
    }

    #[test]
    fn enumeration_of_linear_a4() {
        let alg = Algebra::new(fixtures::linear_a4()).unwrap();
        let bq = alg.bound_quiver();
        let e = alg.all_strings();
        let shown: Vec<String> = e.strings.iter().map(|w| w.display(bq)).collect();
        for s in ["@1", "@2", "@3", "@4"] {
            assert!(shown.contains(&s.to_string()));
        }
        assert!(e.band.is_none());
        assert!(!e.truncated);
        // alpha, beta, gamma, gamma.beta ; beta.alpha excluded
        assert_eq!(e.strings.len(), 8);
        assert_eq!(alg.enumerate_strings(0).strings.len(), 4);
    }

    #[test]
    fn inverse_walk_gives_isomorphic_module() {
        let alg = Algebra::new(fixtures::square_and_loop()).unwrap();
        let bq = alg.bound_quiver();
        let w = StringWalk::parse(bq, "alpha,beta,lambda~").unwrap();
        let m = alg.string_module(&w);
        let n = alg.string_module(&w.inverse(bq));
        assert!(alg.isomorphic(&m, &n));
    }
}
