//! (m+2)-angulations of marked surfaces, given combinatorially as lists of
//! faces whose sides are listed clockwise, and their bound quivers.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::analysis::{gentle_profile, gorenstein_dimension, GorensteinError};
use crate::module::EngineConfig;
use crate::quiver::{ArrowDocument, ArrowId, BoundQuiver, QuiverDocument, QuiverError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Side {
    pub id: String,
    pub internal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Face {
    pub sides: Vec<Side>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AngulationDocument {
    pub m: usize,
    pub faces: Vec<Face>,
}

#[derive(Debug, Error)]
pub enum AngulationError {
    #[error("malformed angulation document: {0}")]
    Schema(String),
    #[error("invalid angulation: {}", .0.join("; "))]
    Validation(Vec<String>),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

/// A validated (m+2)-angulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Angulation {
    m: usize,
    faces: Vec<Face>,
}

impl Angulation {
    pub fn new(m: usize, faces: Vec<Face>) -> Result<Angulation, AngulationError> {
        let mut problems = Vec::new();
        if m == 0 {
            problems.push("m must be positive".to_string());
        }
        if faces.is_empty() {
            problems.push("no faces".to_string());
        }
        let mut internal: BTreeMap<&str, usize> = BTreeMap::new();
        let mut boundary: BTreeMap<&str, usize> = BTreeMap::new();
        for (f, face) in faces.iter().enumerate() {
            if face.sides.len() != m + 2 {
                problems.push(format!(
                    "face {f} has {} sides, expected {}",
                    face.sides.len(),
                    m + 2
                ));
            }
            let mut here = BTreeSet::new();
            for s in &face.sides {
                if s.internal && !here.insert(s.id.as_str()) {
                    problems.push(format!("arc {} bounds face {f} twice (self-folded)", s.id));
                }
                let counter = if s.internal {
                    &mut internal
                } else {
                    &mut boundary
                };
                *counter.entry(s.id.as_str()).or_insert(0) += 1;
            }
        }
        for (id, &k) in &internal {
            if k != 2 {
                problems.push(format!("arc {id} occurs in {k} face sides, expected 2"));
            }
            if boundary.contains_key(id) {
                problems.push(format!(
                    "label {id} is used both as an arc and a boundary segment"
                ));
            }
        }
        for (id, &k) in &boundary {
            if k != 1 {
                problems.push(format!(
                    "boundary segment {id} occurs {k} times, expected once"
                ));
            }
        }
        if problems.is_empty() {
            Ok(Angulation { m, faces })
        } else {
            Err(AngulationError::Validation(problems))
        }
    }

    pub fn parse_json(text: &str) -> Result<Angulation, AngulationError> {
        let doc: AngulationDocument =
            serde_json::from_str(text).map_err(|e| AngulationError::Schema(e.to_string()))?;
        Angulation::new(doc.m, doc.faces)
    }

    pub fn to_document(&self) -> AngulationDocument {
        AngulationDocument {
            m: self.m,
            faces: self.faces.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_document()).expect("serializable")
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn internal_arcs(&self) -> Vec<String> {
        let set: BTreeSet<&str> = self
            .faces
            .iter()
            .flat_map(|f| f.sides.iter())
            .filter(|s| s.internal)
            .map(|s| s.id.as_str())
            .collect();
        set.into_iter().map(str::to_string).collect()
    }
}

/// Vertices are the internal arcs. Within a face, when side `i` follows side
/// `j` clockwise and both are arcs there is an arrow `i -> j`; three
/// consecutive arcs `k, j, i` of one face give the relation `(i->j)(j->k)`.
/// Without arcs the document is empty.
pub fn quiver_document_from_angulation(t: &Angulation) -> QuiverDocument {
    let mut arrows: Vec<ArrowDocument> = Vec::new();
    let mut relations = Vec::new();
    let mut used: BTreeMap<String, usize> = BTreeMap::new();
    for face in &t.faces {
        let k = face.sides.len();
        // arrow from side t+1 to side t
        let mut arrow_at: Vec<Option<String>> = vec![None; k];
        for pos in 0..k {
            let (j, i) = (&face.sides[pos], &face.sides[(pos + 1) % k]);
            if !(i.internal && j.internal) {
                continue;
            }
            let base = format!("{}>{}", i.id, j.id);
            let n = used.entry(base.clone()).or_insert(0);
            *n += 1;
            let name = if *n == 1 { base } else { format!("{base}#{n}") };
            arrows.push(ArrowDocument {
                name: name.clone(),
                from: i.id.clone(),
                to: j.id.clone(),
            });
            arrow_at[pos] = Some(name);
        }
        for pos in 0..k {
            // (s_{pos+2} -> s_{pos+1}) then (s_{pos+1} -> s_pos)
            if let (Some(first), Some(second)) = (&arrow_at[(pos + 1) % k], &arrow_at[pos]) {
                relations.push(vec![first.clone(), second.clone()]);
            }
        }
    }
    QuiverDocument {
        vertices: t.internal_arcs(),
        arrows,
        relations,
    }
}

pub fn bound_quiver_from_angulation(t: &Angulation) -> Result<BoundQuiver, AngulationError> {
    Ok(BoundQuiver::from_document(
        &quiver_document_from_angulation(t),
    )?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AngulationReport {
    pub gentle: bool,
    pub saturated_cycle_lengths: Vec<usize>,
    /// Longest run of consecutive relations avoiding saturated cycles.
    pub max_relation_chain: usize,
    pub gorenstein_dimension: usize,
    pub m: usize,
}

#[derive(Debug, Error)]
pub enum PropertyViolation {
    #[error("not gentle: {0}")]
    NotGentle(String),
    #[error("saturated cycle {cycle} has length {len}, expected {expected}")]
    CycleLength {
        cycle: String,
        len: usize,
        expected: usize,
    },
    #[error("{relations} consecutive relations {path} outside saturated cycles, at most {allowed} allowed")]
    RelationChain {
        path: String,
        relations: usize,
        allowed: usize,
    },
    #[error("Gorenstein dimension {found} exceeds m = {m}")]
    Dimension { found: usize, m: usize },
    #[error(transparent)]
    Gorenstein(#[from] GorensteinError),
}

/// Gentle, saturated cycles of length `m+2`, at most `m-1` consecutive
/// relations outside them, and Gorenstein dimension at most `m`.
pub fn verify_angulation_properties(
    bq: &BoundQuiver,
    m: usize,
    config: &EngineConfig,
) -> Result<AngulationReport, PropertyViolation> {
    let q = bq.quiver();
    let profile = gentle_profile(bq);
    if !profile.is_gentle {
        return Err(PropertyViolation::NotGentle(profile.violations.join("; ")));
    }
    for c in &profile.saturated_cycles {
        if c.len() != m + 2 {
            return Err(PropertyViolation::CycleLength {
                cycle: crate::analysis::names(q, c).join("."),
                len: c.len(),
                expected: m + 2,
            });
        }
    }
    let on_cycle: BTreeSet<ArrowId> = profile.saturated_cycles.iter().flatten().copied().collect();
    let mut succ: BTreeMap<ArrowId, Vec<ArrowId>> = BTreeMap::new();
    for r in bq.relations() {
        let (a, b) = (r.arrows()[0], r.arrows()[1]);
        if !on_cycle.contains(&a) && !on_cycle.contains(&b) {
            succ.entry(a).or_default().push(b);
        }
    }
    let mut longest: Vec<ArrowId> = Vec::new();
    for start in 0..q.arrow_count() {
        let chain = longest_chain(&succ, start, &mut vec![start]);
        if chain.len() > longest.len() {
            longest = chain;
        }
    }
    let relations = longest.len().saturating_sub(1);
    if relations > m.saturating_sub(1) {
        return Err(PropertyViolation::RelationChain {
            path: crate::analysis::names(q, &longest).join("."),
            relations,
            allowed: m - 1,
        });
    }
    let g = gorenstein_dimension(bq, config)?;
    if g.value > m {
        return Err(PropertyViolation::Dimension { found: g.value, m });
    }
    Ok(AngulationReport {
        gentle: true,
        saturated_cycle_lengths: profile.saturated_cycles.iter().map(Vec::len).collect(),
        max_relation_chain: relations,
        gorenstein_dimension: g.value,
        m,
    })
}

fn longest_chain(
    succ: &BTreeMap<ArrowId, Vec<ArrowId>>,
    at: ArrowId,
    path: &mut Vec<ArrowId>,
) -> Vec<ArrowId> {
    let mut best = path.clone();
    for &c in succ.get(&at).map(Vec::as_slice).unwrap_or(&[]) {
        if path.contains(&c) {
            continue;
        }
        path.push(c);
        let cand = longest_chain(succ, c, path);
        if cand.len() > best.len() {
            best = cand;
        }
        path.pop();
    }
    best
}

fn crosses(a: (usize, usize), b: (usize, usize)) -> bool {
    let (a0, a1) = (a.0.min(a.1), a.0.max(a.1));
    let (b0, b1) = (b.0.min(b.1), b.0.max(b.1));
    (a0 < b0 && b0 < a1 && a1 < b1) || (b0 < a0 && a0 < b1 && b1 < a1)
}

/// Splits the polygon on vertices `0..n` (clockwise) along noncrossing
/// diagonals; each face is returned as its clockwise vertex list.
fn polygon_faces(n: usize, arcs: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, Vec<String>> {
    let mut problems = Vec::new();
    let mut seen = BTreeSet::new();
    for &(i, j) in arcs {
        let (lo, hi) = (i.min(j), i.max(j));
        if hi >= n || hi - lo < 2 || (lo == 0 && hi == n - 1) {
            problems.push(format!("({i}, {j}) is not a diagonal of the {n}-gon"));
        } else if !seen.insert((lo, hi)) {
            problems.push(format!("diagonal ({i}, {j}) listed twice"));
        }
    }
    for (x, &a) in arcs.iter().enumerate() {
        for &b in &arcs[x + 1..] {
            if crosses(a, b) {
                problems.push(format!("diagonals {a:?} and {b:?} cross"));
            }
        }
    }
    if !problems.is_empty() {
        return Err(problems);
    }
    let mut faces = vec![(0..n).collect::<Vec<usize>>()];
    for &(i, j) in seen.iter() {
        let idx = faces
            .iter()
            .position(|f| f.contains(&i) && f.contains(&j))
            .expect("noncrossing diagonals lie in one face");
        let f = faces.swap_remove(idx);
        let (pi, pj) = (
            f.iter().position(|&v| v == i).unwrap(),
            f.iter().position(|&v| v == j).unwrap(),
        );
        let (lo, hi) = (pi.min(pj), pi.max(pj));
        let inner: Vec<usize> = f[lo..=hi].to_vec();
        let outer: Vec<usize> = f[hi..].iter().chain(&f[..=lo]).copied().collect();
        faces.push(inner);
        faces.push(outer);
    }
    faces.sort();
    Ok(faces)
}

fn diagonal_label(i: usize, j: usize) -> String {
    format!("d{}-{}", i.min(j), i.max(j))
}

/// Faces of a polygon on vertices `0..n` listed clockwise, cut by the given
/// noncrossing diagonals. Boundary segment `b{i}` joins `i` and `i+1`;
/// diagonal `(i, j)` is labelled `d{i}-{j}`.
pub fn polygon_fixture(
    n: usize,
    m: usize,
    arcs: &[(usize, usize)],
) -> Result<Angulation, AngulationError> {
    let faces = polygon_faces(n, arcs).map_err(AngulationError::Validation)?;
    let faces = faces
        .into_iter()
        .map(|f| Face {
            sides: (0..f.len())
                .map(|k| {
                    let (a, b) = (f[k], f[(k + 1) % f.len()]);
                    if (a + 1) % n == b {
                        Side {
                            id: format!("b{a}"),
                            internal: false,
                        }
                    } else if (b + 1) % n == a {
                        Side {
                            id: format!("b{b}"),
                            internal: false,
                        }
                    } else {
                        Side {
                            id: diagonal_label(a, b),
                            internal: true,
                        }
                    }
                })
                .collect(),
        })
        .collect();
    Angulation::new(m, faces)
}

/// An annulus with `outer` marked points on one boundary and `inner` on the
/// other, cut open along the arc `c` from outer point 0 to inner point 0.
/// The result is a polygon on `outer + inner + 2` vertices, clockwise
/// `O0 .. O(outer-1), O0', I0', I(inner-1) .. I1, I0`; the sides `O0' I0'` and
/// `I0 O0` are both the arc `c`. `arcs` are further diagonals of this polygon.
pub fn annulus_fixture(
    outer: usize,
    inner: usize,
    m: usize,
    arcs: &[(usize, usize)],
) -> Result<Angulation, AngulationError> {
    if outer == 0 || inner == 0 {
        return Err(AngulationError::Validation(vec![
            "both boundary components need a marked point".to_string(),
        ]));
    }
    let n = outer + inner + 2;
    let cut_a = (outer, outer + 1);
    let cut_b = (n - 1, 0);
    let faces = polygon_faces(n, arcs).map_err(AngulationError::Validation)?;
    let faces = faces
        .into_iter()
        .map(|f| Face {
            sides: (0..f.len())
                .map(|k| {
                    let (a, b) = (f[k], f[(k + 1) % f.len()]);
                    let edge = if (a + 1) % n == b { Some((a, b)) } else { None };
                    match edge {
                        Some(e) if e == cut_a || e == cut_b => Side {
                            id: "c".to_string(),
                            internal: true,
                        },
                        Some((a, _)) if a < outer => Side {
                            id: format!("o{a}"),
                            internal: false,
                        },
                        Some((a, _)) => Side {
                            id: format!("i{}", a - outer - 1),
                            internal: false,
                        },
                        None => Side {
                            id: diagonal_label(a, b),
                            internal: true,
                        },
                    }
                })
                .collect(),
        })
        .collect();
    Angulation::new(m, faces)
}

/// Every (m+2)-angulation of the `n`-gon, as diagonal lists.
pub fn enumerate_polygon_angulations(n: usize, m: usize) -> Vec<Vec<(usize, usize)>> {
    let verts: Vec<usize> = (0..n).collect();
    angulate(&verts, m)
}

fn angulate(verts: &[usize], m: usize) -> Vec<Vec<(usize, usize)>> {
    let s = verts.len();
    if s == 2 {
        return vec![Vec::new()];
    }
    if s < m + 2 || !(s - 2).is_multiple_of(m) {
        return Vec::new();
    }
    if s == m + 2 {
        return vec![Vec::new()];
    }
    // the face on the side (verts[0], verts[s-1]) has m+2 corners
    let mut out = Vec::new();
    let mut corners = vec![0usize];
    choose_corners(verts, m, &mut corners, &mut out);
    out
}

fn choose_corners(
    verts: &[usize],
    m: usize,
    corners: &mut Vec<usize>,
    out: &mut Vec<Vec<(usize, usize)>>,
) {
    let s = verts.len();
    let last = *corners.last().unwrap();
    if corners.len() == m + 1 {
        let mut all = corners.clone();
        all.push(s - 1);
        let pieces: Vec<Vec<Vec<(usize, usize)>>> = all
            .windows(2)
            .map(|w| angulate(&verts[w[0]..=w[1]], m))
            .collect();
        if pieces.iter().any(Vec::is_empty) {
            return;
        }
        let own: Vec<(usize, usize)> = all
            .windows(2)
            .filter(|w| w[1] - w[0] > 1)
            .map(|w| (verts[w[0]], verts[w[1]]))
            .collect();
        let mut combos: Vec<Vec<(usize, usize)>> = vec![own];
        for piece in pieces {
            combos = combos
                .iter()
                .flat_map(|c| {
                    piece.iter().map(move |p| {
                        let mut v = c.clone();
                        v.extend_from_slice(p);
                        v
                    })
                })
                .collect();
        }
        for mut c in combos {
            c.sort();
            out.push(c);
        }
        return;
    }
    for next in last + 1..s - 1 {
        let gap = next - last;
        if gap == 1 || gap % m == 1 || m == 1 {
            corners.push(next);
            choose_corners(verts, m, corners, out);
            corners.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn side(id: &str, internal: bool) -> Side {
        Side {
            id: id.to_string(),
            internal,
        }
    }

    #[test]
    fn square_without_arcs() {
        let t = polygon_fixture(4, 2, &[]).unwrap();
        assert_eq!(t.faces().len(), 1);
        assert!(quiver_document_from_angulation(&t).vertices.is_empty());
        assert!(matches!(
            bound_quiver_from_angulation(&t),
            Err(AngulationError::Quiver(_))
        ));
    }

    #[test]
    fn hexagon_with_one_diagonal() {
        let t = polygon_fixture(6, 2, &[(0, 3)]).unwrap();
        assert_eq!(t.internal_arcs(), ["d0-3"]);
        let bq = bound_quiver_from_angulation(&t).unwrap();
        assert_eq!(bq.quiver().vertex_count(), 1);
        assert_eq!(bq.quiver().arrow_count(), 0);
    }

    #[test]
    fn pentagonal_face_rejected() {
        let faces = vec![Face {
            sides: (0..5).map(|i| side(&format!("b{i}"), false)).collect(),
        }];
        assert!(matches!(
            Angulation::new(2, faces),
            Err(AngulationError::Validation(_))
        ));
        assert!(polygon_fixture(7, 2, &[(0, 3)]).is_err());
    }

    #[test]
    fn self_folded_rejected() {
        let faces = vec![Face {
            sides: vec![side("x", true), side("x", true), side("b", false)],
        }];
        assert!(Angulation::new(1, faces).is_err());
    }

    #[test]
    fn hexagon_fan_triangulation() {
        let t = polygon_fixture(6, 1, &[(1, 3), (1, 4), (1, 5)]).unwrap();
        assert_eq!(t.faces().len(), 4);
        let bq = bound_quiver_from_angulation(&t).unwrap();
        let q = bq.quiver();
        assert_eq!(q.vertex_count(), 3);
        assert_eq!(q.arrow_count(), 2);
        assert!(bq.relations().is_empty());
        // a path quiver d1-3 <- d1-4 <- d1-5, or its reverse, depending on orientation
        let ends: BTreeSet<(String, String)> = q
            .arrows()
            .iter()
            .map(|a| {
                (
                    q.vertex_label(a.source).to_string(),
                    q.vertex_label(a.target).to_string(),
                )
            })
            .collect();
        let middle = "d1-4".to_string();
        assert!(ends.iter().all(|(s, t)| s == &middle || t == &middle));
    }

    #[test]
    fn internal_triangle_gives_saturated_cycle() {
        let t = polygon_fixture(6, 1, &[(0, 2), (2, 4), (0, 4)]).unwrap();
        let bq = bound_quiver_from_angulation(&t).unwrap();
        assert_eq!(bq.quiver().arrow_count(), 3);
        assert_eq!(bq.relations().len(), 3);
        let p = gentle_profile(&bq);
        assert_eq!(p.saturated_cycles.len(), 1);
        assert_eq!(p.saturated_cycles[0].len(), 3);
    }

    #[test]
    fn octagon_corner_arcs() {
        // two arcs bounding one middle square: one arrow, no relation
        let t = polygon_fixture(8, 2, &[(0, 3), (0, 5)]).unwrap();
        let bq = bound_quiver_from_angulation(&t).unwrap();
        assert_eq!(bq.quiver().vertex_count(), 2);
        assert_eq!(bq.quiver().arrow_count(), 1);
        assert!(bq.relations().is_empty());
        // three arcs of one square in the decagon give a relation
        let t = polygon_fixture(10, 2, &[(0, 3), (3, 6), (0, 7)]).unwrap();
        let bq = bound_quiver_from_angulation(&t).unwrap();
        assert_eq!(bq.quiver().arrow_count(), 2);
        assert_eq!(bq.relations().len(), 1);
    }

    #[test]
    fn enumeration_counts() {
        let counts: Vec<usize> = (4..=8)
            .map(|n| enumerate_polygon_angulations(n, 1).len())
            .collect();
        assert_eq!(counts, vec![2, 5, 14, 42, 132]);
        let counts: Vec<usize> = [4, 6, 8, 10]
            .iter()
            .map(|&n| enumerate_polygon_angulations(n, 2).len())
            .collect();
        assert_eq!(counts, vec![1, 3, 12, 55]);
        for arcs in enumerate_polygon_angulations(8, 2) {
            polygon_fixture(8, 2, &arcs).unwrap();
        }
    }

    #[test]
    fn annulus_four_angulation() {
        // 2 outer and 2 inner points: hexagon O0 O1 O0' I0' I1 I0 cut once more
        let t = annulus_fixture(2, 2, 2, &[(1, 4)]).unwrap();
        assert_eq!(t.faces().len(), 2);
        assert_eq!(t.internal_arcs().len(), 2);
        let bq = bound_quiver_from_angulation(&t).unwrap();
        verify_angulation_properties(&bq, 2, &EngineConfig::default()).unwrap();
    }

    #[test]
    fn json_round_trip() {
        let t = polygon_fixture(6, 1, &[(0, 2), (2, 4), (0, 4)]).unwrap();
        assert_eq!(Angulation::parse_json(&t.to_json()).unwrap(), t);
        assert!(matches!(
            Angulation::parse_json("{\"m\": 1}"),
            Err(AngulationError::Schema(_))
        ));
    }
}
