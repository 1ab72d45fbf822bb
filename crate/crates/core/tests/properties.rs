mod common;

use proptest::prelude::*;

use qsnake::models::{Model, ModelTriangulation};
use qsnake::qalgebra::{ExponentVector, LambdaForm, QCoeff, QuantumLaurent};
use qsnake::seeds::{ExtendedB, QuantumSeed};
use qsnake::snakegraph::SnakeGraph;
use qsnake::surface::ArcId;
use qsnake::valuation::{omega, CrossingMultiplicities};

use common::{brute_force_matchings, sample_skew};

fn walk(model: Model, steps: &[usize]) -> Vec<ModelTriangulation> {
    let mut t = ModelTriangulation::initial(model).unwrap();
    let mut out = vec![t.clone()];
    for &k in steps {
        t = t.flip(k % t.arcs().len()).unwrap();
        out.push(t.clone());
    }
    out
}

fn model() -> impl Strategy<Value = Model> {
    prop_oneof![
        (4usize..=8).prop_map(|vertices| Model::Polygon { vertices }),
        (1usize..=3, 1usize..=3).prop_map(|(outer, inner)| Model::Annulus { outer, inner }),
    ]
}

/// A diagonal of a polygon against a triangulation reached by random flips.
fn graph(vertices: usize, steps: &[usize], pick: usize) -> (SnakeGraph, Vec<ArcId>) {
    let model = Model::Polygon { vertices };
    let t = walk(model, steps).pop().unwrap();
    let chords: Vec<_> = model.all_diagonals().into_iter().filter(|c| t.slot_of(*c).is_none()).collect();
    let gamma = t.crossing_sequence(chords[pick % chords.len()]).unwrap();
    (SnakeGraph::build(t.triangulation(), &gamma).unwrap(), gamma.crossings)
}

fn laurent(dim: usize, terms: &[(Vec<i64>, i64, i64)]) -> QuantumLaurent {
    let mut x = QuantumLaurent::zero(dim);
    for (e, p, c) in terms {
        x.add_term(ExponentVector::new(e[..dim].to_vec()), QCoeff::monomial(*p, *c));
    }
    x
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn signed_adjacency_is_skew(m in model(), steps in prop::collection::vec(0usize..8, 0..8)) {
        for t in walk(m, &steps) {
            let b = t.triangulation().signed_adjacency();
            for i in 0..b.len() {
                for j in 0..b.len() {
                    prop_assert_eq!(b[i][j], -b[j][i]);
                    prop_assert!(b[i][j].abs() <= 2);
                }
            }
        }
    }

    #[test]
    fn flip_matches_mutation(m in model(), steps in prop::collection::vec(0usize..8, 1..8)) {
        let ts = walk(m, &steps);
        let mut seed = QuantumSeed::principal(&ts[0].triangulation().signed_adjacency(), None).unwrap();
        let mut b = ExtendedB::principal(&ts[0].triangulation().signed_adjacency()).unwrap();
        for (i, &k) in steps.iter().enumerate() {
            let k = k % ts[i].arcs().len();
            let (flipped, _) = ts[i].triangulation().flip(ArcId(k)).unwrap();
            b = b.mutate(k).unwrap();
            seed = seed.mutate(k).unwrap();
            prop_assert_eq!(&b.exchange(), &flipped.signed_adjacency());
            prop_assert_eq!(&b.exchange(), &ts[i + 1].triangulation().signed_adjacency());
            prop_assert_eq!(seed.d(), 1);
        }
    }

    #[test]
    fn omega_is_antisymmetric(vertices in 4usize..=8, steps in prop::collection::vec(0usize..8, 0..10), pick in any::<usize>(), d in 1i64..=3) {
        let (g, crossings) = graph(vertices, &steps, pick);
        let mult = CrossingMultiplicities::new(&crossings);
        for m in g.perfect_matchings() {
            for s in (0..g.n_tiles()).filter(|&s| g.can_twist(&m, s)) {
                let twisted = g.twist(&m, s).unwrap();
                prop_assert_eq!(omega(&g, &mult, s, &m, d).unwrap(), -omega(&g, &mult, s, &twisted, d).unwrap());
            }
        }
    }

    #[test]
    fn twist_pair_is_adjacent_in_label_order(vertices in 4usize..=8, steps in prop::collection::vec(0usize..8, 0..10), pick in any::<usize>()) {
        let (g, _) = graph(vertices, &steps, pick);
        for m in g.perfect_matchings() {
            let labels = g.ordered_edge_labels(&m);
            for s in 0..g.n_tiles() {
                if let Some(pair) = g.twist_pair(&m, s) {
                    let pos = |side| labels.iter().position(|&(e, _)| e == g.tiles()[s].edge(side)).unwrap();
                    prop_assert_eq!(pos(pair[0]).abs_diff(pos(pair[1])), 1);
                }
            }
        }
    }

    #[test]
    fn enumeration_matches_brute_force(vertices in 4usize..=9, steps in prop::collection::vec(0usize..8, 0..10), pick in any::<usize>()) {
        let (g, _) = graph(vertices, &steps, pick);
        let mut fast = g.perfect_matchings();
        fast.sort();
        prop_assert_eq!(fast, brute_force_matchings(&g));
    }

    #[test]
    fn right_division_inverts_product(
        dim in 1usize..=4,
        a in prop::collection::vec((prop::collection::vec(-3i64..=3, 4), -2i64..=2, 1i64..=5), 1..5),
        b in prop::collection::vec((prop::collection::vec(-3i64..=3, 4), -2i64..=2, 1i64..=5), 1..4),
    ) {
        let lambda = LambdaForm::new(sample_skew(dim)).unwrap();
        let (a, b) = (laurent(dim, &a), laurent(dim, &b));
        let product = a.qmul(&b, &lambda).unwrap();
        prop_assert_eq!(product.exact_right_divide(&b, &lambda).unwrap(), a);
    }
}
