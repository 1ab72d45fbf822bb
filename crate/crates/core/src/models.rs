//! Concrete surfaces for generating test corpora: convex polygons and annuli.
//!
//! Arcs are chords between marked points. Annuli are handled in the universal
//! cover, a strip whose top line carries the outer marked points `Outer(k)`
//! and whose bottom line carries the inner ones `Inner(k)`. The deck
//! transformation shifts outer indices by the number of outer marked points
//! and inner indices by the number of inner ones. Boundary points are ordered
//! clockwise: outer points left to right, then inner points right to left.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use thiserror::Error;

use crate::surface::{ArcId, CrossingSequence, SurfaceError, Triangulation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("expected {expected} arcs, found {found}")]
    ArcCount { expected: usize, found: usize },
    #[error("arcs {0} and {1} cross")]
    Crossing(usize, usize),
    #[error("chord {0} is not an arc of the surface")]
    InvalidArc(String),
    #[error("arc {0} does not bound two triangles")]
    Triangles(usize),
    #[error("unsupported model parameters")]
    Parameters,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MarkedPoint {
    Outer(i64),
    Inner(i64),
}

impl MarkedPoint {
    fn key(self) -> (u8, i64) {
        match self {
            MarkedPoint::Outer(k) => (0, k),
            MarkedPoint::Inner(k) => (1, -k),
        }
    }

    fn index(self) -> i64 {
        match self {
            MarkedPoint::Outer(k) | MarkedPoint::Inner(k) => k,
        }
    }

    fn same_boundary(self, other: MarkedPoint) -> bool {
        matches!(
            (self, other),
            (MarkedPoint::Outer(_), MarkedPoint::Outer(_)) | (MarkedPoint::Inner(_), MarkedPoint::Inner(_))
        )
    }
}

impl std::fmt::Display for MarkedPoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            MarkedPoint::Outer(k) => write!(f, "o{k}"),
            MarkedPoint::Inner(k) => write!(f, "i{k}"),
        }
    }
}

/// A chord with endpoints in clockwise order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chord(pub MarkedPoint, pub MarkedPoint);

impl std::fmt::Display for Chord {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({}, {})", self.0, self.1)
    }
}

impl Chord {
    pub fn new(a: MarkedPoint, b: MarkedPoint) -> Self {
        if a.key() <= b.key() {
            Chord(a, b)
        } else {
            Chord(b, a)
        }
    }

    /// Strict interleaving of endpoints.
    pub fn crosses(&self, other: &Chord) -> bool {
        let (a, b) = (self.0.key(), self.1.key());
        let inside = |p: MarkedPoint| a < p.key() && p.key() < b;
        let shared = [other.0, other.1].iter().any(|p| p.key() == a || p.key() == b);
        !shared && inside(other.0) != inside(other.1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Model {
    /// Convex polygon with marked points `Outer(0..vertices)`.
    Polygon { vertices: usize },
    /// Annulus with the given numbers of marked points on each boundary.
    Annulus { outer: usize, inner: usize },
}

impl Model {
    pub fn n_internal(&self) -> usize {
        match *self {
            Model::Polygon { vertices } => vertices - 3,
            Model::Annulus { outer, inner } => outer + inner,
        }
    }

    pub fn n_boundary(&self) -> usize {
        match *self {
            Model::Polygon { vertices } => vertices,
            Model::Annulus { outer, inner } => outer + inner,
        }
    }

    fn period(&self, p: MarkedPoint) -> Option<i64> {
        match (*self, p) {
            (Model::Polygon { .. }, _) => None,
            (Model::Annulus { outer, .. }, MarkedPoint::Outer(_)) => Some(outer as i64),
            (Model::Annulus { inner, .. }, MarkedPoint::Inner(_)) => Some(inner as i64),
        }
    }

    fn shift(&self, p: MarkedPoint, j: i64) -> MarkedPoint {
        match (*self, p) {
            (Model::Polygon { .. }, _) => p,
            (Model::Annulus { outer, .. }, MarkedPoint::Outer(k)) => MarkedPoint::Outer(k + j * outer as i64),
            (Model::Annulus { inner, .. }, MarkedPoint::Inner(k)) => MarkedPoint::Inner(k + j * inner as i64),
        }
    }

    /// Deck translation putting the first point's index in `[0, period)`.
    fn normalizing_shift(&self, first: MarkedPoint) -> i64 {
        match self.period(first) {
            Some(per) => -first.index().div_euclid(per),
            None => 0,
        }
    }

    pub fn canonical_chord(&self, c: Chord) -> Chord {
        let c = Chord::new(c.0, c.1);
        let j = self.normalizing_shift(c.0);
        Chord::new(self.shift(c.0, j), self.shift(c.1, j))
    }

    fn canonical_triangle(&self, mut pts: [MarkedPoint; 3]) -> [MarkedPoint; 3] {
        pts.sort_by_key(|p| p.key());
        let j = self.normalizing_shift(pts[0]);
        pts.map(|p| self.shift(p, j))
    }

    /// Offset (relative to the number of internal arcs) of a boundary segment.
    pub fn boundary_offset(&self, c: Chord) -> Option<usize> {
        let c = self.canonical_chord(c);
        match (*self, c.0, c.1) {
            (Model::Polygon { vertices }, MarkedPoint::Outer(a), MarkedPoint::Outer(b)) => {
                let n = vertices as i64;
                if b == a + 1 {
                    Some(a as usize)
                } else if a == 0 && b == n - 1 {
                    Some(vertices - 1)
                } else {
                    None
                }
            }
            (Model::Annulus { outer, .. }, MarkedPoint::Outer(a), MarkedPoint::Outer(b)) => {
                (b == a + 1).then(|| a.rem_euclid(outer as i64) as usize)
            }
            (Model::Annulus { outer, inner }, MarkedPoint::Inner(a), MarkedPoint::Inner(b)) => {
                // clockwise order lists inner points right to left
                (a == b + 1).then(|| outer + b.rem_euclid(inner as i64) as usize)
            }
            _ => None,
        }
    }

    fn boundary_neighbours(&self, p: MarkedPoint) -> Vec<MarkedPoint> {
        match (*self, p) {
            (Model::Polygon { vertices }, MarkedPoint::Outer(k)) => {
                let n = vertices as i64;
                vec![MarkedPoint::Outer((k + 1).rem_euclid(n)), MarkedPoint::Outer((k - 1).rem_euclid(n))]
            }
            (_, MarkedPoint::Outer(k)) => vec![MarkedPoint::Outer(k + 1), MarkedPoint::Outer(k - 1)],
            (_, MarkedPoint::Inner(k)) => vec![MarkedPoint::Inner(k + 1), MarkedPoint::Inner(k - 1)],
        }
    }

    /// Whether a chord projects to a simple arc that is not a boundary segment.
    pub fn is_arc(&self, c: Chord) -> bool {
        let c = self.canonical_chord(c);
        if c.0 == c.1 || self.boundary_offset(c).is_some() {
            return false;
        }
        match *self {
            Model::Polygon { vertices } => {
                let ok = |p: MarkedPoint| matches!(p, MarkedPoint::Outer(k) if (0..vertices as i64).contains(&k));
                ok(c.0) && ok(c.1)
            }
            Model::Annulus { .. } => {
                if c.0.same_boundary(c.1) {
                    let per = self.period(c.0).expect("annulus");
                    let span = (c.1.index() - c.0.index()).abs();
                    (2..=per).contains(&span)
                } else {
                    true
                }
            }
        }
    }

    /// Points joined to `p` by a lift of one of `arcs` or by a boundary segment.
    fn neighbours(&self, arcs: &[Chord], p: MarkedPoint) -> Vec<MarkedPoint> {
        let mut out = self.boundary_neighbours(p);
        for c in arcs {
            for (a, b) in [(c.0, c.1), (c.1, c.0)] {
                if !a.same_boundary(p) {
                    continue;
                }
                match self.period(p) {
                    None if a == p => out.push(b),
                    Some(per) if (p.index() - a.index()).rem_euclid(per) == 0 => {
                        out.push(self.shift(b, (p.index() - a.index()) / per));
                    }
                    _ => {}
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Lifts of `c` translated by `-reach..=reach`.
    fn lifts(&self, c: Chord, reach: i64) -> Vec<Chord> {
        match self {
            Model::Polygon { .. } => vec![c],
            Model::Annulus { .. } => {
                (-reach..=reach).map(|j| Chord::new(self.shift(c.0, j), self.shift(c.1, j))).collect()
            }
        }
    }

    pub fn all_diagonals(&self) -> Vec<Chord> {
        match *self {
            Model::Polygon { vertices } => {
                let n = vertices as i64;
                let mut out = Vec::new();
                for a in 0..n {
                    for b in a + 2..n {
                        let c = Chord::new(MarkedPoint::Outer(a), MarkedPoint::Outer(b));
                        if self.is_arc(c) {
                            out.push(c);
                        }
                    }
                }
                out
            }
            Model::Annulus { .. } => Vec::new(),
        }
    }

    /// A fan triangulation for polygons; for annuli a staircase of bridging
    /// arcs that advances along the outer boundary first.
    pub fn initial_arcs(&self) -> Vec<Chord> {
        match *self {
            Model::Polygon { vertices } => {
                (2..vertices as i64 - 1).map(|b| Chord::new(MarkedPoint::Outer(0), MarkedPoint::Outer(b))).collect()
            }
            Model::Annulus { outer, inner } => {
                let mut arcs = Vec::new();
                for a in 0..=outer as i64 {
                    arcs.push(Chord::new(MarkedPoint::Outer(a), MarkedPoint::Inner(0)));
                }
                for c in 1..inner as i64 {
                    arcs.push(Chord::new(MarkedPoint::Outer(outer as i64), MarkedPoint::Inner(c)));
                }
                arcs.truncate(outer + inner);
                arcs.into_iter().map(|c| self.canonical_chord(c)).collect()
            }
        }
    }
}

/// A triangulation of a model surface with its arcs realized as chords.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelTriangulation {
    model: Model,
    arcs: Vec<Chord>,
    triangulation: Triangulation,
    triangle_index: HashMap<[MarkedPoint; 3], usize>,
    arc_index: HashMap<Chord, usize>,
}

impl ModelTriangulation {
    pub fn initial(model: Model) -> Result<Self, ModelError> {
        match model {
            Model::Polygon { vertices } if vertices >= 4 => {}
            Model::Annulus { outer, inner } if outer >= 1 && inner >= 1 => {}
            _ => return Err(ModelError::Parameters),
        }
        Self::new(model, model.initial_arcs())
    }

    /// Arc `k` of the result is `arcs[k]`; boundary segments follow.
    pub fn new(model: Model, arcs: Vec<Chord>) -> Result<Self, ModelError> {
        let arcs: Vec<Chord> = arcs.into_iter().map(|c| model.canonical_chord(c)).collect();
        if arcs.len() != model.n_internal() {
            return Err(ModelError::ArcCount { expected: model.n_internal(), found: arcs.len() });
        }
        for c in &arcs {
            if !model.is_arc(*c) {
                return Err(ModelError::InvalidArc(c.to_string()));
            }
        }
        let reach = Self::reach(model, &arcs, None);
        for (i, a) in arcs.iter().enumerate() {
            for (j, b) in arcs.iter().enumerate() {
                if model.lifts(*b, reach).iter().any(|l| a.crosses(l)) || (i < j && a == b) {
                    return Err(ModelError::Crossing(i, j));
                }
            }
        }
        let arc_index: HashMap<Chord, usize> = arcs.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let n = arcs.len();
        let id_of = |c: Chord| -> Option<usize> {
            let c = model.canonical_chord(c);
            arc_index.get(&c).copied().or_else(|| model.boundary_offset(c).map(|o| n + o))
        };
        let mut keys: BTreeSet<[MarkedPoint; 3]> = BTreeSet::new();
        for (i, c) in arcs.iter().enumerate() {
            let (nu, nv) = (model.neighbours(&arcs, c.0), model.neighbours(&arcs, c.1));
            let common: Vec<MarkedPoint> =
                nu.into_iter().filter(|w| nv.contains(w) && *w != c.0 && *w != c.1).collect();
            if common.len() != 2 {
                return Err(ModelError::Triangles(i));
            }
            for w in common {
                keys.insert(model.canonical_triangle([c.0, c.1, w]));
            }
        }
        let mut rows = Vec::with_capacity(keys.len());
        let mut triangle_index = HashMap::new();
        for key in keys {
            let mut sides = [0usize; 3];
            for s in 0..3 {
                sides[s] = id_of(Chord::new(key[s], key[(s + 1) % 3]))
                    .ok_or_else(|| ModelError::InvalidArc(Chord::new(key[s], key[(s + 1) % 3]).to_string()))?;
            }
            triangle_index.insert(key, rows.len());
            rows.push(sides);
        }
        let triangulation = Triangulation::new(n, model.n_boundary(), rows)?;
        Ok(ModelTriangulation { model, arcs, triangulation, triangle_index, arc_index })
    }

    /// Number of deck translations needed to see every lift near the given chords.
    fn reach(model: Model, arcs: &[Chord], extra: Option<Chord>) -> i64 {
        let per = match model {
            Model::Polygon { .. } => return 0,
            Model::Annulus { outer, inner } => outer.min(inner) as i64,
        };
        let span =
            arcs.iter().chain(extra.iter()).flat_map(|c| [c.0.index().abs(), c.1.index().abs()]).max().unwrap_or(0);
        2 * span / per + 3
    }

    pub fn model(&self) -> Model {
        self.model
    }

    pub fn arcs(&self) -> &[Chord] {
        &self.arcs
    }

    pub fn triangulation(&self) -> &Triangulation {
        &self.triangulation
    }

    pub fn slot_of(&self, c: Chord) -> Option<usize> {
        self.arc_index.get(&self.model.canonical_chord(c)).copied()
    }

    fn triangle_of(&self, pts: [MarkedPoint; 3]) -> usize {
        self.triangle_index[&self.model.canonical_triangle(pts)]
    }

    /// Flips arc `k`, joining the two opposite corners of its quadrilateral.
    pub fn flip(&self, k: usize) -> Result<ModelTriangulation, ModelError> {
        let c = *self.arcs.get(k).ok_or(ModelError::Triangles(k))?;
        let (nu, nv) = (self.model.neighbours(&self.arcs, c.0), self.model.neighbours(&self.arcs, c.1));
        let common: Vec<MarkedPoint> = nu.into_iter().filter(|w| nv.contains(w) && *w != c.0 && *w != c.1).collect();
        if common.len() != 2 {
            return Err(ModelError::Triangles(k));
        }
        let mut arcs = self.arcs.clone();
        arcs[k] = Chord::new(common[0], common[1]);
        ModelTriangulation::new(self.model, arcs)
    }

    /// Crossing sequence of `gamma` with respect to this triangulation.
    pub fn crossing_sequence(&self, gamma: Chord) -> Result<CrossingSequence, ModelError> {
        let g = self.model.canonical_chord(gamma);
        if let Some(slot) = self.slot_of(g) {
            return Ok(CrossingSequence::of_arc(ArcId(slot)));
        }
        if let Some(o) = self.model.boundary_offset(g) {
            return Ok(CrossingSequence::of_arc(ArcId(self.arcs.len() + o)));
        }
        if !self.model.is_arc(g) {
            return Err(ModelError::InvalidArc(g.to_string()));
        }
        let reach = Self::reach(self.model, &self.arcs, Some(g));
        let (lo, hi) = (g.0.key(), g.1.key());
        let inside = |p: MarkedPoint| lo < p.key() && p.key() < hi;
        // position along the far side, walking from g.1 back round to g.0
        let far = |p: MarkedPoint| if p.key() > hi { (0u8, p.key()) } else { (1u8, p.key()) };
        // (near endpoint, far position reversed, slot, lift)
        type Hit = ((u8, i64), Reverse<(u8, (u8, i64))>, usize, Chord);
        let mut hits: Vec<Hit> = Vec::new();
        for (i, c) in self.arcs.iter().enumerate() {
            for l in self.model.lifts(*c, reach) {
                if g.crosses(&l) {
                    let (near, other) = if inside(l.0) { (l.0, l.1) } else { (l.1, l.0) };
                    hits.push((near.key(), Reverse(far(other)), i, l));
                }
            }
        }
        hits.sort();
        hits.dedup();
        let crossings: Vec<usize> = hits.iter().map(|h| h.2).collect();
        let first = hits[0].3;
        let last = hits[hits.len() - 1].3;
        let start = self.triangle_of([first.0, first.1, g.0]);
        let end = self.triangle_of([last.0, last.1, g.1]);
        Ok(CrossingSequence::new(crossings, start, end))
    }
}

/// Every arc reachable within `depth` flips of `start`, with the first flip
/// sequence that produces it and the slot it lands in.
pub fn reachable_arcs(
    start: &ModelTriangulation,
    depth: usize,
) -> Result<BTreeMap<Chord, (Vec<usize>, usize)>, ModelError> {
    let mut found: BTreeMap<Chord, (Vec<usize>, usize)> = BTreeMap::new();
    let mut seen: BTreeSet<Vec<Chord>> = BTreeSet::new();
    let mut queue: VecDeque<(ModelTriangulation, Vec<usize>)> = VecDeque::new();
    for (k, &c) in start.arcs().iter().enumerate() {
        found.entry(c).or_insert((Vec::new(), k));
    }
    seen.insert(start.arcs().to_vec());
    queue.push_back((start.clone(), Vec::new()));
    while let Some((t, path)) = queue.pop_front() {
        if path.len() == depth {
            continue;
        }
        for k in 0..t.arcs().len() {
            let next = t.flip(k)?;
            if !seen.insert(next.arcs().to_vec()) {
                continue;
            }
            let mut p = path.clone();
            p.push(k);
            found.entry(next.arcs()[k]).or_insert((p.clone(), k));
            queue.push_back((next, p));
        }
    }
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::snakegraph::SnakeGraph;

    #[test]
    fn golden_annulus_is_reproduced() {
        let t = ModelTriangulation::initial(Model::Annulus { outer: 1, inner: 1 }).unwrap();
        assert_eq!(t.triangulation().signed_adjacency(), vec![vec![0, -2], vec![2, 0]]);
        let gamma = Chord::new(MarkedPoint::Outer(4), MarkedPoint::Inner(0));
        let seq = t.crossing_sequence(gamma).unwrap();
        assert_eq!(seq.crossings, [0, 1, 0, 1, 0].map(ArcId).to_vec());
        let g = SnakeGraph::build(t.triangulation(), &seq).unwrap();
        assert_eq!(g.perfect_matchings().len(), 13);
    }

    #[test]
    fn pentagon_flip_graph_is_a_five_cycle() {
        let t = ModelTriangulation::initial(Model::Polygon { vertices: 5 }).unwrap();
        let arcs = reachable_arcs(&t, 10).unwrap();
        assert_eq!(arcs.len(), 5);
        let mut states = BTreeSet::new();
        let mut queue = VecDeque::from([t]);
        while let Some(s) = queue.pop_front() {
            let mut key = s.arcs().to_vec();
            key.sort();
            if !states.insert(key) {
                continue;
            }
            for k in 0..2 {
                queue.push_back(s.flip(k).unwrap());
            }
        }
        assert_eq!(states.len(), 5);
    }

    #[test]
    fn geometric_flip_matches_combinatorial_flip() {
        for model in [
            Model::Polygon { vertices: 6 },
            Model::Annulus { outer: 2, inner: 1 },
            Model::Annulus { outer: 2, inner: 2 },
        ] {
            let t = ModelTriangulation::initial(model).unwrap();
            for k in 0..t.arcs().len() {
                let geometric = t.flip(k).unwrap();
                let (combinatorial, _) = t.triangulation().flip(ArcId(k)).unwrap();
                assert_eq!(geometric.triangulation().signed_adjacency(), combinatorial.signed_adjacency());
            }
        }
    }

    #[test]
    fn crossing_sequences_validate() {
        let t = ModelTriangulation::initial(Model::Annulus { outer: 2, inner: 1 }).unwrap();
        for a in 0..2 {
            for c in -4..6 {
                let gamma = Chord::new(MarkedPoint::Outer(a), MarkedPoint::Inner(c));
                let seq = t.crossing_sequence(gamma).unwrap();
                SnakeGraph::build(t.triangulation(), &seq).unwrap();
            }
        }
        let peripheral = Chord::new(MarkedPoint::Outer(0), MarkedPoint::Outer(2));
        let seq = t.crossing_sequence(peripheral).unwrap();
        SnakeGraph::build(t.triangulation(), &seq).unwrap();
    }
}
