//! Indexed triangulations of unpunctured surfaces.
//!
//! A surface is described purely combinatorially: a list of triangles, each
//! giving its three sides in clockwise order. Internal arcs are numbered
//! `0..n`, boundary arcs `n..n+b`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurfaceError {
    #[error("triangle {triangle} uses arc {arc}, but only {total} arcs exist")]
    UnknownArc { triangle: usize, arc: usize, total: usize },
    #[error("triangle {triangle} repeats arc {arc} (self-folded or degenerate triangle)")]
    RepeatedSide { triangle: usize, arc: usize },
    #[error("internal arc {arc} must be a side of exactly two triangles, found {count}")]
    InternalOccurrences { arc: usize, count: usize },
    #[error("boundary arc {arc} must be a side of exactly one triangle, found {count}")]
    BoundaryOccurrences { arc: usize, count: usize },
    #[error("arc {arc} has a1 = a3 and a2 = a4 (once-punctured torus configuration)")]
    PuncturedTorus { arc: usize },
    #[error("boundary arc has no flip quadrilateral (arc {0})")]
    BoundaryArc(usize),
    #[error("arc {0} out of range")]
    ArcOutOfRange(usize),
    #[error("triangle {0} out of range")]
    TriangleOutOfRange(usize),
    #[error("crossed arc {arc} at position {position} is a boundary arc")]
    CrossesBoundary { arc: usize, position: usize },
    #[error("crossed arc {arc} at position {position} is not a side of triangle {triangle}")]
    NotASide { arc: usize, position: usize, triangle: usize },
    #[error("consecutive crossings {first} and {second} (positions {position}, {next}) share no triangle", next = position + 1)]
    NoSharedTriangle { first: usize, second: usize, position: usize },
    #[error("walk ends in triangle {found}, but end_triangle is {expected}")]
    EndTriangle { expected: usize, found: usize },
    #[error("empty crossing sequence must name the arc of the triangulation it equals")]
    EmptyWithoutArc,
}

/// Label of an arc of the triangulation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ArcId(pub usize);

impl fmt::Display for ArcId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArcKind {
    Internal,
    Boundary,
}

/// Three sides in clockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Triangle {
    pub sides: [ArcId; 3],
}

impl Triangle {
    pub fn position(&self, arc: ArcId) -> Option<usize> {
        self.sides.iter().position(|&s| s == arc)
    }

    pub fn contains(&self, arc: ArcId) -> bool {
        self.position(arc).is_some()
    }

    /// Side following `arc` clockwise.
    pub fn next_cw(&self, arc: ArcId) -> Option<ArcId> {
        self.position(arc).map(|p| self.sides[(p + 1) % 3])
    }

    /// Side preceding `arc` clockwise.
    pub fn prev_cw(&self, arc: ArcId) -> Option<ArcId> {
        self.position(arc).map(|p| self.sides[(p + 2) % 3])
    }

    /// Rotation starting at the smallest label; equal triangles have equal keys.
    pub fn canonical(&self) -> [ArcId; 3] {
        let p = (0..3).min_by_key(|&i| self.sides[i]).unwrap_or(0);
        [self.sides[p], self.sides[(p + 1) % 3], self.sides[(p + 2) % 3]]
    }
}

/// The two triangles around an internal arc `tau`: `(tau, a1, a4)` and
/// `(tau, a3, a2)` clockwise, so `a1, a3` follow `tau` clockwise and
/// `a2, a4` follow it counterclockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Quadrilateral {
    pub tau: ArcId,
    pub a1: ArcId,
    pub a2: ArcId,
    pub a3: ArcId,
    pub a4: ArcId,
    /// Triangle indices holding `(tau, a1, a4)` and `(tau, a3, a2)`.
    pub triangles: [usize; 2],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Triangulation {
    n_internal: usize,
    n_boundary: usize,
    triangles: Vec<Triangle>,
    /// For each arc, the triangles it bounds.
    incidence: Vec<Vec<usize>>,
}

impl Triangulation {
    pub fn new(n_internal: usize, n_boundary: usize, triangles: Vec<[usize; 3]>) -> Result<Self, SurfaceError> {
        let total = n_internal + n_boundary;
        let mut incidence = vec![Vec::new(); total];
        let mut tris = Vec::with_capacity(triangles.len());
        for (t, sides) in triangles.iter().enumerate() {
            for &a in sides {
                if a >= total {
                    return Err(SurfaceError::UnknownArc { triangle: t, arc: a, total });
                }
            }
            for i in 0..3 {
                if sides[i] == sides[(i + 1) % 3] {
                    return Err(SurfaceError::RepeatedSide { triangle: t, arc: sides[i] });
                }
            }
            for &a in sides {
                incidence[a].push(t);
            }
            tris.push(Triangle { sides: sides.map(ArcId) });
        }
        for (a, inc) in incidence.iter().enumerate() {
            if a < n_internal && inc.len() != 2 {
                return Err(SurfaceError::InternalOccurrences { arc: a, count: inc.len() });
            }
            if a >= n_internal && inc.len() != 1 {
                return Err(SurfaceError::BoundaryOccurrences { arc: a, count: inc.len() });
            }
        }
        let t = Triangulation { n_internal, n_boundary, triangles: tris, incidence };
        for a in 0..n_internal {
            let q = t.quadrilateral(ArcId(a))?;
            if q.a1 == q.a3 && q.a2 == q.a4 {
                return Err(SurfaceError::PuncturedTorus { arc: a });
            }
        }
        Ok(t)
    }

    pub fn n_internal(&self) -> usize {
        self.n_internal
    }

    pub fn n_boundary(&self) -> usize {
        self.n_boundary
    }

    pub fn n_arcs(&self) -> usize {
        self.n_internal + self.n_boundary
    }

    pub fn triangles(&self) -> &[Triangle] {
        &self.triangles
    }

    pub fn triangle(&self, t: usize) -> Result<&Triangle, SurfaceError> {
        self.triangles.get(t).ok_or(SurfaceError::TriangleOutOfRange(t))
    }

    pub fn kind(&self, arc: ArcId) -> ArcKind {
        if arc.0 < self.n_internal {
            ArcKind::Internal
        } else {
            ArcKind::Boundary
        }
    }

    pub fn is_internal(&self, arc: ArcId) -> bool {
        arc.0 < self.n_internal
    }

    /// Triangles bounded by `arc` (two for internal arcs, one for boundary arcs).
    pub fn triangles_of(&self, arc: ArcId) -> &[usize] {
        &self.incidence[arc.0]
    }

    /// The triangle on the other side of `arc` from triangle `t`.
    pub fn across(&self, t: usize, arc: ArcId) -> Option<usize> {
        if !self.is_internal(arc) || !self.triangles.get(t)?.contains(arc) {
            return None;
        }
        self.incidence[arc.0].iter().copied().find(|&u| u != t)
    }

    /// Triangle sides as plain indices, e.g. for serialization.
    pub fn triangle_rows(&self) -> Vec<[usize; 3]> {
        self.triangles.iter().map(|t| t.sides.map(|a| a.0)).collect()
    }

    /// Signed adjacency matrix: `b_ij` sums `+1` over triangles where `τ_j`
    /// follows `τ_i` clockwise and `−1` where `τ_i` follows `τ_j`.
    pub fn signed_adjacency(&self) -> Vec<Vec<i64>> {
        let n = self.n_internal;
        let mut b = vec![vec![0i64; n]; n];
        for tri in &self.triangles {
            for p in 0..3 {
                let (x, y) = (tri.sides[p], tri.sides[(p + 1) % 3]);
                if x.0 < n && y.0 < n {
                    b[x.0][y.0] += 1;
                    b[y.0][x.0] -= 1;
                }
            }
        }
        b
    }

    pub fn quadrilateral(&self, tau: ArcId) -> Result<Quadrilateral, SurfaceError> {
        if tau.0 >= self.n_arcs() {
            return Err(SurfaceError::ArcOutOfRange(tau.0));
        }
        if !self.is_internal(tau) {
            return Err(SurfaceError::BoundaryArc(tau.0));
        }
        let [t1, t2] = [self.incidence[tau.0][0], self.incidence[tau.0][1]];
        let (first, second) = (&self.triangles[t1], &self.triangles[t2]);
        Ok(Quadrilateral {
            tau,
            a1: first.next_cw(tau).expect("incident"),
            a4: first.prev_cw(tau).expect("incident"),
            a3: second.next_cw(tau).expect("incident"),
            a2: second.prev_cw(tau).expect("incident"),
            triangles: [t1, t2],
        })
    }

    /// Flips `tau`; the new arc reuses its index.
    ///
    /// `(τ, a1, a4)` and `(τ, a3, a2)` become `(τ', a2, a1)` and `(τ', a4, a3)`.
    pub fn flip(&self, tau: ArcId) -> Result<(Triangulation, ArcId), SurfaceError> {
        let q = self.quadrilateral(tau)?;
        let mut rows = self.triangle_rows();
        rows[q.triangles[0]] = [tau.0, q.a2.0, q.a1.0];
        rows[q.triangles[1]] = [tau.0, q.a4.0, q.a3.0];
        Ok((Triangulation::new(self.n_internal, self.n_boundary, rows)?, tau))
    }
}

/// An arc given by the internal arcs it crosses, in order, together with the
/// triangles containing its endpoints.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CrossingSequence {
    pub crossings: Vec<ArcId>,
    #[serde(default)]
    pub start_triangle: usize,
    #[serde(default)]
    pub end_triangle: usize,
    /// Required when `crossings` is empty: the arc of `T` this curve equals.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arc: Option<ArcId>,
}

impl CrossingSequence {
    pub fn new(crossings: Vec<usize>, start_triangle: usize, end_triangle: usize) -> Self {
        CrossingSequence {
            crossings: crossings.into_iter().map(ArcId).collect(),
            start_triangle,
            end_triangle,
            arc: None,
        }
    }

    /// An arc of the triangulation itself.
    pub fn of_arc(arc: ArcId) -> Self {
        CrossingSequence { crossings: Vec::new(), start_triangle: 0, end_triangle: 0, arc: Some(arc) }
    }

    pub fn len(&self) -> usize {
        self.crossings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.crossings.is_empty()
    }
}

/// A crossing sequence checked against a triangulation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidatedArc {
    pub crossings: Vec<ArcId>,
    /// `Δ_0, …, Δ_d`; `Δ_j` lies between crossings `j` and `j+1`.
    pub triangles: Vec<usize>,
    /// Third side `τ_[γ_j]` of `Δ_j` for `j = 1..d−1`.
    pub third_sides: Vec<ArcId>,
    /// Set when the arc belongs to the triangulation.
    pub arc: Option<ArcId>,
}

pub fn validate_arc(t: &Triangulation, gamma: &CrossingSequence) -> Result<ValidatedArc, SurfaceError> {
    if gamma.crossings.is_empty() {
        let arc = gamma.arc.ok_or(SurfaceError::EmptyWithoutArc)?;
        if arc.0 >= t.n_arcs() {
            return Err(SurfaceError::ArcOutOfRange(arc.0));
        }
        return Ok(ValidatedArc {
            crossings: Vec::new(),
            triangles: Vec::new(),
            third_sides: Vec::new(),
            arc: Some(arc),
        });
    }
    let mut current = gamma.start_triangle;
    t.triangle(current)?;
    let mut triangles = vec![current];
    let mut third_sides = Vec::new();
    for (pos, &arc) in gamma.crossings.iter().enumerate() {
        if arc.0 >= t.n_arcs() {
            return Err(SurfaceError::ArcOutOfRange(arc.0));
        }
        if !t.is_internal(arc) {
            return Err(SurfaceError::CrossesBoundary { arc: arc.0, position: pos });
        }
        let next =
            t.across(current, arc).ok_or(SurfaceError::NotASide { arc: arc.0, position: pos, triangle: current })?;
        if let Some(&following) = gamma.crossings.get(pos + 1) {
            let tri = &t.triangles[next];
            if following == arc || !tri.contains(following) {
                return Err(SurfaceError::NoSharedTriangle { first: arc.0, second: following.0, position: pos });
            }
            let third = tri.sides.iter().copied().find(|&s| s != arc && s != following).expect("three distinct sides");
            third_sides.push(third);
        }
        triangles.push(next);
        current = next;
    }
    if current != gamma.end_triangle {
        return Err(SurfaceError::EndTriangle { expected: gamma.end_triangle, found: current });
    }
    Ok(ValidatedArc { crossings: gamma.crossings.clone(), triangles, third_sides, arc: None })
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Square with diagonal 0 and sides 1..=4.
    pub(crate) fn square() -> Triangulation {
        Triangulation::new(1, 4, vec![[0, 1, 2], [0, 3, 4]]).unwrap()
    }

    /// Annulus, one marked point per boundary: arcs 0, 1 internal, 2 outer, 3 inner.
    pub(crate) fn annulus() -> Triangulation {
        Triangulation::new(2, 2, vec![[1, 0, 2], [1, 0, 3]]).unwrap()
    }

    /// Pentagon fan at vertex 0: diagonals 0 = (0,2), 1 = (0,3); boundary 2..=6.
    pub(crate) fn pentagon() -> Triangulation {
        // clockwise vertex order 0..4, boundary arc 2+i joins i and i+1
        Triangulation::new(2, 5, vec![[2, 3, 0], [0, 4, 1], [1, 5, 6]]).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert_eq!(square().signed_adjacency(), vec![vec![0]]);
        assert_eq!(annulus().signed_adjacency(), vec![vec![0, -2], vec![2, 0]]);
        assert_eq!(pentagon().signed_adjacency(), vec![vec![0, -1], vec![1, 0]]);
    }

    #[test]
    fn quadrilateral_of_square_diagonal() {
        let q = square().quadrilateral(ArcId(0)).unwrap();
        assert_eq!((q.a1, q.a4, q.a3, q.a2), (ArcId(1), ArcId(2), ArcId(3), ArcId(4)));
        assert_eq!(square().quadrilateral(ArcId(2)), Err(SurfaceError::BoundaryArc(2)));
    }

    #[test]
    fn annulus_quadrilateral_repeats_a_label() {
        let q = annulus().quadrilateral(ArcId(0)).unwrap();
        // both triangles read (τ2, τ1, ·) clockwise, so τ2 precedes τ1 twice
        assert_eq!((q.a2, q.a4), (ArcId(1), ArcId(1)));
        assert_eq!((q.a1, q.a3), (ArcId(2), ArcId(3)));
    }

    #[test]
    fn pentagon_quadrilateral_mixes_labels() {
        let q = pentagon().quadrilateral(ArcId(0)).unwrap();
        assert_eq!((q.a1, q.a4), (ArcId(2), ArcId(3)));
        assert_eq!((q.a3, q.a2), (ArcId(4), ArcId(1)));
    }

    #[test]
    fn flip_twice_restores_adjacency() {
        for t in [square(), annulus(), pentagon()] {
            for k in 0..t.n_internal() {
                let (once, _) = t.flip(ArcId(k)).unwrap();
                let (twice, _) = once.flip(ArcId(k)).unwrap();
                assert_eq!(twice.signed_adjacency(), t.signed_adjacency());
            }
        }
        assert_eq!(square().flip(ArcId(0)).unwrap().0.signed_adjacency(), vec![vec![0]]);
    }

    #[test]
    fn rejects_bad_triangulations() {
        assert!(matches!(Triangulation::new(1, 4, vec![[0, 1, 2]]), Err(SurfaceError::InternalOccurrences { .. })));
        assert!(matches!(Triangulation::new(1, 2, vec![[0, 0, 1], [0, 2, 1]]), Err(SurfaceError::RepeatedSide { .. })));
        assert!(matches!(Triangulation::new(1, 4, vec![[0, 1, 9], [0, 3, 4]]), Err(SurfaceError::UnknownArc { .. })));
        // once-punctured torus: three arcs, two triangles (a, b, c) and (a, b, c)
        assert!(matches!(
            Triangulation::new(3, 0, vec![[0, 1, 2], [0, 1, 2]]),
            Err(SurfaceError::PuncturedTorus { .. })
        ));
    }

    #[test]
    fn validate_examples() {
        let sq = square();
        let ok = validate_arc(&sq, &CrossingSequence::new(vec![0], 0, 1)).unwrap();
        assert_eq!(ok.triangles, vec![0, 1]);
        assert!(matches!(
            validate_arc(&sq, &CrossingSequence::new(vec![0, 0], 0, 0)),
            Err(SurfaceError::NoSharedTriangle { .. })
        ));
        assert!(matches!(
            validate_arc(&sq, &CrossingSequence::new(vec![1], 0, 0)),
            Err(SurfaceError::CrossesBoundary { .. })
        ));
        assert_eq!(validate_arc(&sq, &CrossingSequence::new(vec![], 0, 0)), Err(SurfaceError::EmptyWithoutArc));

        let an = annulus();
        let five = validate_arc(&an, &CrossingSequence::new(vec![0, 1, 0, 1, 0], 0, 1)).unwrap();
        assert_eq!(five.triangles, vec![0, 1, 0, 1, 0, 1]);
        assert_eq!(five.third_sides, vec![ArcId(3), ArcId(2), ArcId(3), ArcId(2)]);
        assert!(matches!(
            validate_arc(&an, &CrossingSequence::new(vec![0, 1, 0, 1, 0], 0, 0)),
            Err(SurfaceError::EndTriangle { .. })
        ));
    }
}
