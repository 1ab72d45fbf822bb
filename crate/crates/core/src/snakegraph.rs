//! Snake graphs of arcs, their perfect matchings and twists.
//!
//! Tile `j` is a unit square with its diagonal running from the north-west to
//! the south-east corner. The lower-left half comes from the triangle before
//! the crossing and the upper-right half from the triangle after it. Tiles are
//! glued to the right or on top along the third side of the triangle between
//! consecutive crossings.
//!
//! Edges are indexed in a canonical order: tile by tile, south, west, east,
//! north, where an edge shared by two tiles belongs to the lower one.

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::surface::{validate_arc, ArcId, CrossingSequence, SurfaceError, Triangulation, ValidatedArc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnakeError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error("tile {0} out of range")]
    TileOutOfRange(usize),
    #[error("matching cannot twist on tile {0}")]
    NotTwistable(usize),
    #[error("edge set is not a perfect matching")]
    NotPerfect,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    South,
    West,
    East,
    North,
}

impl Side {
    pub const ALL: [Side; 4] = [Side::South, Side::West, Side::East, Side::North];

    fn idx(self) -> usize {
        self as usize
    }

    pub fn letter(self) -> char {
        match self {
            Side::South => 'S',
            Side::West => 'W',
            Side::East => 'E',
            Side::North => 'N',
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Glue {
    Right,
    Up,
}

pub type Point = (i64, i64);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tile {
    /// 1-based position along the arc.
    pub index: usize,
    pub diagonal: ArcId,
    /// Labels indexed by `Side` (south, west, east, north).
    pub labels: [ArcId; 4],
    /// Lower-left corner.
    pub origin: Point,
    /// Edge index of each side in the canonical order.
    pub edges: [usize; 4],
}

impl Tile {
    pub fn is_odd(&self) -> bool {
        self.index % 2 == 1
    }

    pub fn label(&self, side: Side) -> ArcId {
        self.labels[side.idx()]
    }

    pub fn edge(&self, side: Side) -> usize {
        self.edges[side.idx()]
    }

    /// Sides that follow the diagonal clockwise in their triangle.
    pub fn clockwise_sides(&self) -> [Side; 2] {
        if self.is_odd() {
            [Side::West, Side::East]
        } else {
            [Side::South, Side::North]
        }
    }

    /// Sides that follow the diagonal counterclockwise in their triangle.
    pub fn counterclockwise_sides(&self) -> [Side; 2] {
        if self.is_odd() {
            [Side::South, Side::North]
        } else {
            [Side::West, Side::East]
        }
    }

    /// Endpoints of the diagonal (north-west, south-east).
    pub fn diagonal_ends(&self) -> (Point, Point) {
        let (x, y) = self.origin;
        ((x, y + 1), (x + 1, y))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    /// Owning tile (0-based); 0 for the single edge of a graph without tiles.
    pub tile: usize,
    pub side: Side,
    pub label: ArcId,
    pub ends: (Point, Point),
    /// Shared by two tiles.
    pub interior: bool,
}

impl Edge {
    pub fn touches(&self, p: Point) -> bool {
        self.ends.0 == p || self.ends.1 == p
    }

    pub fn is_vertical(&self) -> bool {
        self.ends.0 .0 == self.ends.1 .0
    }

    pub fn shares_vertex(&self, other: &Edge) -> bool {
        self.touches(other.ends.0) || self.touches(other.ends.1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnakeGraph {
    tiles: Vec<Tile>,
    glue: Vec<(Glue, ArcId)>,
    edges: Vec<Edge>,
    vertices: Vec<Point>,
}

/// A perfect matching as a bit vector over the canonical edge order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matching {
    bits: Vec<bool>,
}

impl Matching {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Matching { bits }
    }

    pub fn from_edges(n_edges: usize, edges: &[usize]) -> Self {
        let mut bits = vec![false; n_edges];
        for &e in edges {
            bits[e] = true;
        }
        Matching { bits }
    }

    pub fn contains(&self, edge: usize) -> bool {
        self.bits.get(edge).copied().unwrap_or(false)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn edges(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i)
    }

    pub fn len(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn symmetric_difference(&self, other: &Matching) -> Vec<usize> {
        (0..self.bits.len()).filter(|&i| self.contains(i) != other.contains(i)).collect()
    }
}

impl fmt::Display for Matching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl SnakeGraph {
    pub fn build(t: &Triangulation, gamma: &CrossingSequence) -> Result<Self, SnakeError> {
        let arc = validate_arc(t, gamma)?;
        Ok(Self::from_validated(t, &arc))
    }

    pub fn from_validated(t: &Triangulation, arc: &ValidatedArc) -> Self {
        if arc.crossings.is_empty() {
            let label = arc.arc.expect("validated arcs without crossings name their arc");
            let edge = Edge { tile: 0, side: Side::South, label, ends: ((0, 0), (1, 0)), interior: false };
            return SnakeGraph {
                tiles: Vec::new(),
                glue: Vec::new(),
                edges: vec![edge],
                vertices: vec![(0, 0), (1, 0)],
            };
        }
        let d = arc.crossings.len();
        let mut tiles: Vec<Tile> = Vec::with_capacity(d);
        let mut glue = Vec::with_capacity(d.saturating_sub(1));
        let mut edges: Vec<Edge> = Vec::with_capacity(3 * d + 1);
        let mut origin: Point = (0, 0);
        for i in 0..d {
            let diag = arc.crossings[i];
            let before = &t.triangles()[arc.triangles[i]];
            let after = &t.triangles()[arc.triangles[i + 1]];
            let (c1, c2) = (before.next_cw(diag).expect("side"), before.prev_cw(diag).expect("side"));
            let (d1, d2) = (after.next_cw(diag).expect("side"), after.prev_cw(diag).expect("side"));
            // [S, W, E, N]
            let labels = if i % 2 == 0 { [c2, c1, d1, d2] } else { [c1, c2, d2, d1] };
            let (x, y) = origin;
            let geometry = [
                ((x, y), (x + 1, y)),
                ((x, y), (x, y + 1)),
                ((x + 1, y), (x + 1, y + 1)),
                ((x, y + 1), (x + 1, y + 1)),
            ];
            let mut ids = [usize::MAX; 4];
            let inherited = match glue.last() {
                Some(&(Glue::Right, _)) => Some((Side::West, tiles[i - 1].edge(Side::East))),
                Some(&(Glue::Up, _)) => Some((Side::South, tiles[i - 1].edge(Side::North))),
                None => None,
            };
            for side in Side::ALL {
                if let Some((s, e)) = inherited {
                    if s == side {
                        ids[side.idx()] = e;
                        continue;
                    }
                }
                ids[side.idx()] = edges.len();
                edges.push(Edge {
                    tile: i,
                    side,
                    label: labels[side.idx()],
                    ends: geometry[side.idx()],
                    interior: false,
                });
            }
            let tile = Tile { index: i + 1, diagonal: diag, labels, origin, edges: ids };
            if i + 1 < d {
                let third = arc.third_sides[i];
                if labels[Side::East.idx()] == third {
                    glue.push((Glue::Right, third));
                    edges[ids[Side::East.idx()]].interior = true;
                    origin = (x + 1, y);
                } else {
                    debug_assert_eq!(labels[Side::North.idx()], third);
                    glue.push((Glue::Up, third));
                    edges[ids[Side::North.idx()]].interior = true;
                    origin = (x, y + 1);
                }
            }
            tiles.push(tile);
        }
        let mut vertices: Vec<Point> = edges.iter().flat_map(|e| [e.ends.0, e.ends.1]).collect();
        vertices.sort_unstable();
        vertices.dedup();
        SnakeGraph { tiles, glue, edges, vertices }
    }

    pub fn tiles(&self) -> &[Tile] {
        &self.tiles
    }

    pub fn tile(&self, i: usize) -> Result<&Tile, SnakeError> {
        self.tiles.get(i).ok_or(SnakeError::TileOutOfRange(i))
    }

    pub fn glue(&self) -> &[(Glue, ArcId)] {
        &self.glue
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn n_tiles(&self) -> usize {
        self.tiles.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn is_perfect_matching(&self, m: &Matching) -> bool {
        if m.bits.len() != self.edges.len() {
            return false;
        }
        let mut seen: HashMap<Point, u8> = HashMap::new();
        for e in m.edges() {
            for p in [self.edges[e].ends.0, self.edges[e].ends.1] {
                *seen.entry(p).or_default() += 1;
            }
        }
        self.vertices.iter().all(|v| seen.get(v) == Some(&1))
    }

    /// All perfect matchings in canonical (bit vector) order.
    ///
    /// Dynamic programming over edges: the state is the set of vertices seen
    /// but not yet closed, together with whether each is already covered. A
    /// vertex is closed at the last edge incident to it.
    pub fn perfect_matchings(&self) -> Vec<Matching> {
        let n = self.edges.len();
        let index: HashMap<Point, usize> = self.vertices.iter().enumerate().map(|(i, &p)| (p, i)).collect();
        let mut last = vec![0usize; self.vertices.len()];
        for (e, edge) in self.edges.iter().enumerate() {
            last[index[&edge.ends.0]] = e;
            last[index[&edge.ends.1]] = e;
        }
        // state: covered flags of open vertices, as a sorted vec of (vertex, covered)
        type State = Vec<(usize, bool)>;
        let mut layer: BTreeMap<State, Vec<Vec<bool>>> = BTreeMap::new();
        layer.insert(Vec::new(), vec![Vec::new()]);
        for (e, edge) in self.edges.iter().enumerate() {
            let (a, b) = (index[&edge.ends.0], index[&edge.ends.1]);
            let mut next: BTreeMap<State, Vec<Vec<bool>>> = BTreeMap::new();
            for (state, prefixes) in layer {
                let covered = |v: usize| state.iter().find(|(u, _)| *u == v).map(|&(_, c)| c).unwrap_or(false);
                for take in [false, true] {
                    if take && (covered(a) || covered(b)) {
                        continue;
                    }
                    let mut s = state.clone();
                    for v in [a, b] {
                        if !s.iter().any(|(u, _)| *u == v) {
                            s.push((v, false));
                        }
                        if take {
                            s.iter_mut().find(|(u, _)| *u == v).expect("open").1 = true;
                        }
                    }
                    // close vertices whose last edge is e; they must be covered
                    let mut ok = true;
                    s.retain(|&(v, c)| {
                        if last[v] == e {
                            ok &= c;
                            false
                        } else {
                            true
                        }
                    });
                    if !ok {
                        continue;
                    }
                    s.sort_unstable();
                    let slot = next.entry(s).or_default();
                    for p in &prefixes {
                        let mut q = p.clone();
                        q.push(take);
                        slot.push(q);
                    }
                }
            }
            layer = next;
        }
        let mut out: Vec<Matching> =
            layer.into_iter().filter(|(s, _)| s.is_empty()).flat_map(|(_, v)| v).map(Matching::from_bits).collect();
        debug_assert!(out.iter().all(|m| m.bits.len() == n));
        out.sort();
        out
    }

    /// Non-interior edges in cyclic order around the outer face, starting with
    /// the west edge of the first tile and leaving through its lower-left corner.
    fn boundary_cycle(&self) -> Vec<usize> {
        let boundary: Vec<usize> = (0..self.edges.len()).filter(|&e| !self.edges[e].interior).collect();
        let start = self.tiles[0].edge(Side::West);
        let mut cycle = vec![start];
        let mut at = self.edges[start].ends.1;
        let mut prev = start;
        while cycle.len() < boundary.len() {
            let next = boundary
                .iter()
                .copied()
                .find(|&e| e != prev && self.edges[e].touches(at))
                .expect("outer boundary is a cycle");
            at = if self.edges[next].ends.0 == at { self.edges[next].ends.1 } else { self.edges[next].ends.0 };
            cycle.push(next);
            prev = next;
        }
        cycle
    }

    fn alternating(&self, with_first: bool) -> Matching {
        if self.tiles.is_empty() {
            return Matching::from_bits(vec![true]);
        }
        let cycle = self.boundary_cycle();
        let chosen: Vec<usize> =
            cycle.iter().enumerate().filter(|(i, _)| (i % 2 == 0) == with_first).map(|(_, &e)| e).collect();
        Matching::from_edges(self.edges.len(), &chosen)
    }

    /// The boundary matching containing the west edge of the first tile.
    pub fn minimal_matching(&self) -> Matching {
        self.alternating(true)
    }

    /// The other boundary matching.
    pub fn maximal_matching(&self) -> Matching {
        self.alternating(false)
    }

    /// The matched pair of tile `i` (0-based), if `m` can twist there.
    pub fn twist_pair(&self, m: &Matching, i: usize) -> Option<[Side; 2]> {
        let tile = self.tiles.get(i)?;
        let has = |s: Side| m.contains(tile.edge(s));
        if has(Side::West) && has(Side::East) {
            Some([Side::West, Side::East])
        } else if has(Side::South) && has(Side::North) {
            Some([Side::South, Side::North])
        } else {
            None
        }
    }

    pub fn can_twist(&self, m: &Matching, i: usize) -> bool {
        self.twist_pair(m, i).is_some()
    }

    /// Replaces the two matched edges of tile `i` (0-based) by the other two.
    pub fn twist(&self, m: &Matching, i: usize) -> Result<Matching, SnakeError> {
        let tile = self.tile(i)?;
        let pair = self.twist_pair(m, i).ok_or(SnakeError::NotTwistable(i))?;
        let mut bits = m.bits.clone();
        for side in Side::ALL {
            bits[tile.edge(side)] = !pair.contains(&side);
        }
        Ok(Matching { bits })
    }

    /// Whether the matched pair of tile `i` sits counterclockwise from the diagonal.
    pub fn has_counterclockwise_pair(&self, m: &Matching, i: usize) -> Option<bool> {
        let pair = self.twist_pair(m, i)?;
        Some(self.tiles[i].counterclockwise_sides().contains(&pair[0]))
    }

    /// Twist graph on the given matchings: adjacency lists of `(tile, neighbour)`.
    pub fn twist_graph(&self, matchings: &[Matching]) -> Vec<Vec<(usize, usize)>> {
        let index: HashMap<&Matching, usize> = matchings.iter().enumerate().map(|(i, m)| (m, i)).collect();
        matchings
            .iter()
            .map(|m| {
                (0..self.tiles.len())
                    .filter_map(|i| {
                        let twisted = self.twist(m, i).ok()?;
                        index.get(&twisted).map(|&j| (i, j))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn is_connected(adjacency: &[Vec<(usize, usize)>]) -> bool {
        if adjacency.is_empty() {
            return true;
        }
        let mut seen = vec![false; adjacency.len()];
        let mut queue = VecDeque::from([0usize]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(_, v) in &adjacency[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Tiles (0-based) enclosed by the cycles of `m` against the minimal matching.
    pub fn enclosed_tiles(&self, m: &Matching) -> Vec<usize> {
        let minimal = self.minimal_matching();
        let verticals: Vec<&Edge> =
            m.symmetric_difference(&minimal).into_iter().map(|e| &self.edges[e]).filter(|e| e.is_vertical()).collect();
        self.tiles
            .iter()
            .enumerate()
            .filter(|(_, tile)| {
                // ray from the tile centre towards +x, in doubled coordinates
                let (cx, cy) = (2 * tile.origin.0 + 1, 2 * tile.origin.1 + 1);
                let hits = verticals
                    .iter()
                    .filter(|e| {
                        let x = 2 * e.ends.0 .0;
                        let (y0, y1) = (2 * e.ends.0 .1.min(e.ends.1 .1), 2 * e.ends.0 .1.max(e.ends.1 .1));
                        x > cx && y0 < cy && cy < y1
                    })
                    .count();
                hits % 2 == 1
            })
            .map(|(i, _)| i)
            .collect()
    }

    /// Height exponent over internal arcs: enclosed tiles counted by diagonal.
    pub fn height_exponent(&self, m: &Matching, n_internal: usize) -> Vec<i64> {
        let mut h = vec![0i64; n_internal];
        for i in self.enclosed_tiles(m) {
            h[self.tiles[i].diagonal.0] += 1;
        }
        h
    }

    /// Matched labels counted over internal arcs.
    pub fn weight_exponent(&self, m: &Matching, n_internal: usize) -> Vec<i64> {
        let mut w = vec![0i64; n_internal];
        for e in m.edges() {
            let l = self.edges[e].label.0;
            if l < n_internal {
                w[l] += 1;
            }
        }
        w
    }

    /// Labels of matched edges in canonical edge order.
    pub fn ordered_edge_labels(&self, m: &Matching) -> Vec<(usize, ArcId)> {
        m.edges().map(|e| (e, self.edges[e].label)).collect()
    }

    /// The `τ`-equivalence classes: edges labeled `tau` grouped by the
    /// `tau`-labeled diagonals they touch.
    pub fn tau_classes(&self, tau: ArcId) -> Vec<TauClass> {
        let labeled: Vec<usize> = (0..self.edges.len()).filter(|&e| self.edges[e].label == tau).collect();
        let diagonals: Vec<(Point, Point)> =
            self.tiles.iter().filter(|t| t.diagonal == tau).map(|t| t.diagonal_ends()).collect();
        // union-find over labeled edges, joined through shared diagonals
        let mut parent: Vec<usize> = (0..labeled.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        let touch = |e: usize, d: &(Point, Point)| self.edges[e].touches(d.0) || self.edges[e].touches(d.1);
        for d in &diagonals {
            let members: Vec<usize> = (0..labeled.len()).filter(|&k| touch(labeled[k], d)).collect();
            for w in members.windows(2) {
                let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                parent[a] = b;
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for k in 0..labeled.len() {
            let r = find(&mut parent, k);
            groups.entry(r).or_default().push(labeled[k]);
        }
        let mut classes: Vec<TauClass> = groups
            .into_values()
            .map(|edges| {
                let incident = edges.iter().any(|&e| diagonals.iter().any(|d| touch(e, d)));
                let kind = match edges.len() {
                    1 if incident => ClassType::III,
                    1 => ClassType::IV,
                    _ if edges.windows(2).all(|w| !self.edges[w[0]].shares_vertex(&self.edges[w[1]])) => ClassType::I,
                    _ => ClassType::II,
                };
                TauClass { edges, kind }
            })
            .collect();
        classes.sort_by_key(|c| c.edges[0]);
        classes
    }

    pub fn nu_signature(&self, classes: &[TauClass], m: &Matching) -> Vec<i64> {
        classes
            .iter()
            .map(|c| {
                let matched = c.edges.iter().filter(|&&e| m.contains(e)).count() as i64;
                if c.kind == ClassType::IV {
                    matched
                } else {
                    matched - 1
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClassType {
    I,
    II,
    III,
    IV,
}

impl ClassType {
    /// Values a signature entry may take for a class of this type.
    pub fn allowed(self) -> &'static [i64] {
        match self {
            ClassType::I => &[-1, 0, 1],
            ClassType::II | ClassType::III => &[-1, 0],
            ClassType::IV => &[0, 1],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TauClass {
    pub edges: Vec<usize>,
    pub kind: ClassType,
}

impl fmt::Display for SnakeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tiles.is_empty() {
            return write!(f, "single edge {}", self.edges[0].label);
        }
        for (i, tile) in self.tiles.iter().enumerate() {
            write!(
                f,
                "tile {} diag {} S {} W {} E {} N {}",
                tile.index,
                tile.diagonal,
                tile.label(Side::South),
                tile.label(Side::West),
                tile.label(Side::East),
                tile.label(Side::North)
            )?;
            if let Some((g, l)) = self.glue.get(i) {
                write!(f, " glue {} {}", if *g == Glue::Right { "right" } else { "up" }, l)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn annulus() -> Triangulation {
        Triangulation::new(2, 2, vec![[1, 0, 2], [1, 0, 3]]).unwrap()
    }

    fn golden() -> SnakeGraph {
        SnakeGraph::build(&annulus(), &CrossingSequence::new(vec![0, 1, 0, 1, 0], 0, 1)).unwrap()
    }

    #[test]
    fn golden_ladder_shape() {
        let g = golden();
        assert_eq!(g.n_tiles(), 5);
        assert_eq!(g.n_edges(), 16);
        assert!(g.glue().iter().all(|&(d, _)| d == Glue::Right));
        let labels: Vec<_> = g.glue().iter().map(|&(_, l)| l.0).collect();
        assert_eq!(labels, vec![3, 2, 3, 2]);
        let tops: Vec<_> = g.tiles().iter().map(|t| t.label(Side::North).0).collect();
        let bottoms: Vec<_> = g.tiles().iter().map(|t| t.label(Side::South).0).collect();
        assert_eq!(tops, vec![1, 0, 1, 0, 1]);
        assert_eq!(bottoms, vec![1, 0, 1, 0, 1]);
        assert_eq!(g.tiles()[0].label(Side::West).0, 2);
        assert_eq!(g.tiles()[4].label(Side::East).0, 3);
        assert_eq!(g.perfect_matchings().len(), 13);
    }

    #[test]
    fn single_tile_matchings_are_the_boundary_pair() {
        let sq = Triangulation::new(1, 4, vec![[0, 1, 2], [0, 3, 4]]).unwrap();
        let g = SnakeGraph::build(&sq, &CrossingSequence::new(vec![0], 0, 1)).unwrap();
        let all = g.perfect_matchings();
        assert_eq!(all.len(), 2);
        let (lo, hi) = (g.minimal_matching(), g.maximal_matching());
        assert!(all.contains(&lo) && all.contains(&hi) && lo != hi);
        assert_eq!(g.twist(&lo, 0).unwrap(), hi);
        assert_eq!(g.height_exponent(&hi, 1), vec![1]);
        assert_eq!(g.height_exponent(&lo, 1), vec![0]);
    }

    #[test]
    fn arc_of_triangulation_is_one_edge() {
        let g = SnakeGraph::build(&annulus(), &CrossingSequence::of_arc(ArcId(1))).unwrap();
        assert_eq!(g.n_edges(), 1);
        assert_eq!(g.perfect_matchings(), vec![Matching::from_bits(vec![true])]);
        assert_eq!(g.weight_exponent(&g.minimal_matching(), 2), vec![0, 1]);
    }

    #[test]
    fn boundary_matchings_have_expected_sides() {
        let g = golden();
        let lo = g.minimal_matching();
        let hi = g.maximal_matching();
        assert!(g.is_perfect_matching(&lo) && g.is_perfect_matching(&hi));
        for (i, tile) in g.tiles().iter().enumerate() {
            for e in tile.edges {
                if g.edges()[e].interior {
                    continue;
                }
                let side = Side::ALL.into_iter().find(|&s| tile.edge(s) == e).unwrap();
                if lo.contains(e) && g.edges()[e].tile == i {
                    assert!(tile.clockwise_sides().contains(&side), "tile {i} side {side:?}");
                }
                if hi.contains(e) && g.edges()[e].tile == i {
                    assert!(tile.counterclockwise_sides().contains(&side), "tile {i} side {side:?}");
                }
            }
        }
        assert_eq!(g.weight_exponent(&lo, 2), vec![4, 0]);
        assert_eq!(g.weight_exponent(&hi, 2), vec![0, 6]);
        assert_eq!(g.height_exponent(&hi, 2), vec![3, 2]);
    }

    #[test]
    fn twist_graph_is_connected() {
        let g = golden();
        let all = g.perfect_matchings();
        assert!(SnakeGraph::is_connected(&g.twist_graph(&all)));
    }

    #[test]
    fn tau_classes_on_golden_ladder() {
        let g = golden();
        let classes = g.tau_classes(ArcId(0));
        assert!(!classes.is_empty());
        assert!(classes.iter().all(|c| c.edges.len() <= 2));
        for m in g.perfect_matchings() {
            for (c, v) in classes.iter().zip(g.nu_signature(&classes, &m)) {
                assert!(c.kind.allowed().contains(&v));
            }
        }
        assert!(g.tau_classes(ArcId(3)).iter().all(|c| c.kind == ClassType::IV));
    }
}
