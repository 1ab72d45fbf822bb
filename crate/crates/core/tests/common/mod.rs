#![allow(dead_code)]

use std::collections::HashMap;

use qsnake::models::{reachable_arcs, Chord, MarkedPoint, Model, ModelTriangulation};
use qsnake::seeds::QuantumSeed;
use qsnake::snakegraph::{Matching, SnakeGraph};
use qsnake::surface::CrossingSequence;

/// Every set of `d + 1` edges that covers each vertex exactly once.
///
/// Plain subset enumeration; a branch is abandoned as soon as two chosen
/// edges share a vertex.
pub fn brute_force_matchings(g: &SnakeGraph) -> Vec<Matching> {
    let index: HashMap<_, usize> = g.vertices().iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let masks: Vec<u128> =
        g.edges().iter().map(|e| (1u128 << index[&e.ends.0]) | (1u128 << index[&e.ends.1])).collect();
    let full = if g.vertices().len() == 128 { u128::MAX } else { (1u128 << g.vertices().len()) - 1 };
    let size = g.vertices().len() / 2;
    fn rec(
        masks: &[u128],
        start: usize,
        size: usize,
        covered: u128,
        full: u128,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if chosen.len() == size {
            if covered == full {
                out.push(chosen.clone());
            }
            return;
        }
        for e in start..masks.len() {
            if covered & masks[e] != 0 {
                continue;
            }
            chosen.push(e);
            rec(masks, e + 1, size, covered | masks[e], full, chosen, out);
            chosen.pop();
        }
    }
    let mut found = Vec::new();
    rec(&masks, 0, size, 0, full, &mut Vec::new(), &mut found);
    let mut out: Vec<Matching> = found.iter().map(|c| Matching::from_edges(g.n_edges(), c)).collect();
    debug_assert!(out.iter().all(|m| g.is_perfect_matching(m)));
    out.sort();
    out
}

/// An arc on a model surface, described with respect to the initial triangulation.
#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub chord: Chord,
    pub gamma: CrossingSequence,
    /// Flip sequence from the initial triangulation that creates the arc, and its slot.
    pub route: Option<(Vec<usize>, usize)>,
}

pub fn describe(model: Model) -> String {
    match model {
        Model::Polygon { vertices } => format!("{vertices}-gon"),
        Model::Annulus { outer, inner } => format!("annulus({outer},{inner})"),
    }
}

/// Every diagonal of a polygon, against the fan triangulation.
pub fn polygon_instances(vertices: usize) -> (ModelTriangulation, Vec<Instance>) {
    let model = Model::Polygon { vertices };
    let t0 = ModelTriangulation::initial(model).unwrap();
    let routes = reachable_arcs(&t0, 2 * vertices).unwrap();
    let instances = model
        .all_diagonals()
        .into_iter()
        .map(|c| Instance {
            name: format!("{} {c}", describe(model)),
            chord: c,
            gamma: t0.crossing_sequence(c).unwrap(),
            route: routes.get(&c).cloned(),
        })
        .collect();
    (t0, instances)
}

/// Annulus arcs with at most `max_crossings` crossings against the staircase triangulation.
pub fn annulus_instances(
    outer: usize,
    inner: usize,
    max_crossings: usize,
    depth: usize,
) -> (ModelTriangulation, Vec<Instance>) {
    let model = Model::Annulus { outer, inner };
    let t0 = ModelTriangulation::initial(model).unwrap();
    let routes = if depth > 0 { reachable_arcs(&t0, depth).unwrap() } else { Default::default() };
    let mut chords = Vec::new();
    let span = 2 * max_crossings as i64 + 4;
    for a in 0..outer as i64 {
        for c in -span..=span {
            chords.push(Chord::new(MarkedPoint::Outer(a), MarkedPoint::Inner(c)));
        }
        for s in 2..=outer as i64 {
            chords.push(Chord::new(MarkedPoint::Outer(a), MarkedPoint::Outer(a + s)));
        }
    }
    for a in 0..inner as i64 {
        for s in 2..=inner as i64 {
            chords.push(Chord::new(MarkedPoint::Inner(a), MarkedPoint::Inner(a + s)));
        }
    }
    let mut instances = Vec::new();
    for c in chords {
        let c = model.canonical_chord(c);
        if !model.is_arc(c) || instances.iter().any(|i: &Instance| i.chord == c) {
            continue;
        }
        let gamma = t0.crossing_sequence(c).unwrap();
        if gamma.len() <= max_crossings {
            instances.push(Instance {
                name: format!("{} {c}", describe(model)),
                chord: c,
                gamma,
                route: routes.get(&c).cloned(),
            });
        }
    }
    (t0, instances)
}

/// A straight ladder with `d` tiles from the zigzag triangulation of a `(d + 3)`-gon.
pub fn ladder(d: usize) -> SnakeGraph {
    let n = d as i64 + 3;
    let mut path = Vec::new();
    let (mut lo, mut hi) = (1, n - 1);
    while lo <= hi {
        path.push(lo);
        if lo != hi {
            path.push(hi);
        }
        lo += 1;
        hi -= 1;
    }
    let arcs: Vec<Chord> =
        path.windows(2).take(d).map(|w| Chord::new(MarkedPoint::Outer(w[0]), MarkedPoint::Outer(w[1]))).collect();
    let t = ModelTriangulation::new(Model::Polygon { vertices: n as usize }, arcs).unwrap();
    let gamma = Chord::new(MarkedPoint::Outer(0), MarkedPoint::Outer(path[path.len() - 1]));
    let seq = t.crossing_sequence(gamma).unwrap();
    assert_eq!(seq.len(), d);
    SnakeGraph::build(t.triangulation(), &seq).unwrap()
}

/// Fibonacci numbers with `F(1) = 2`, `F(2) = 3`.
pub fn fibonacci(k: usize) -> usize {
    let (mut a, mut b) = (1usize, 2usize);
    for _ in 1..k {
        (a, b) = (b, a + b);
    }
    b
}

/// A skew-symmetric `n × n` matrix with small nonzero entries.
pub fn sample_skew(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            let v = ((i + 2 * j) % 3) as i64 - 1;
            let v = if v == 0 { 1 } else { v };
            m[i][j] = v;
            m[j][i] = -v;
        }
    }
    m
}

/// The standard principal quantization, one with nonzero top-left block, and
/// the standard one doubled so that `d = 2`.
pub fn quantizations(exchange: &[Vec<i64>]) -> Vec<(&'static str, QuantumSeed)> {
    let skew = sample_skew(exchange.len());
    let principal = QuantumSeed::principal(exchange, None).unwrap();
    vec![
        ("doubled", principal.scaled(2).unwrap()),
        ("principal", principal),
        ("twisted", QuantumSeed::principal(exchange, Some(&skew)).unwrap()),
    ]
}
