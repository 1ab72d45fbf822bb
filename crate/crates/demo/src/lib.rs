//! Browser front end for `qsnake`.
//!
//! [`Session`] holds one arc and a current perfect matching of its snake
//! graph. It renders the graph as SVG, twists tiles and prints expansions.
//! [`Demo`] exposes the same operations to JavaScript.

use std::fmt::Write;

use qsnake::expansion::{commutative_expand, quantum_expand, ExpansionError};
use qsnake::io::{parse_arc, parse_seed, parse_surface, InputError};
use qsnake::snakegraph::{Matching, SnakeError, SnakeGraph};
use qsnake::surface::{validate_arc, CrossingSequence, Triangulation};
use qsnake::valuation::{compute_valuation, ValuationError, ValuationMap};
use qsnake::{ExponentVector, QuantumSeed};
use thiserror::Error;
use wasm_bindgen::prelude::*;

pub const GOLDEN_SURFACE: &str = r#"{"n_internal":2,"n_boundary":2,"triangles":[[1,0,2],[1,0,3]]}"#;
pub const GOLDEN_ARC: &str = r#"{"crossings":[0,1,0,1,0],"start_triangle":0,"end_triangle":1}"#;

const UNIT: i64 = 64;
const MARGIN: i64 = 24;

#[derive(Debug, Error)]
pub enum DemoError {
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Snake(#[from] SnakeError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Expansion(#[from] ExpansionError),
    #[error(transparent)]
    Seed(#[from] qsnake::seeds::SeedError),
}

#[derive(Debug, Clone)]
pub struct Session {
    surface: Triangulation,
    arc: CrossingSequence,
    seed: QuantumSeed,
    graph: SnakeGraph,
    valuation: ValuationMap,
    current: Matching,
}

impl Session {
    /// An empty `seed` selects principal coefficients.
    pub fn new(surface: &str, arc: &str, seed: &str) -> Result<Self, DemoError> {
        let surface = parse_surface(surface)?;
        let arc = parse_arc(arc)?;
        let seed = if seed.trim().is_empty() {
            QuantumSeed::principal(&surface.signed_adjacency(), None)?
        } else {
            parse_seed(seed)?
        };
        let valid = validate_arc(&surface, &arc).map_err(SnakeError::from)?;
        let graph = SnakeGraph::from_validated(&surface, &valid);
        let valuation = compute_valuation(&graph, &valid.crossings, seed.d())?;
        let current = graph.minimal_matching();
        Ok(Session { surface, arc, seed, graph, valuation, current })
    }

    pub fn golden() -> Self {
        Session::new(GOLDEN_SURFACE, GOLDEN_ARC, "").expect("built-in example is valid")
    }

    pub fn graph(&self) -> &SnakeGraph {
        &self.graph
    }

    pub fn current(&self) -> &Matching {
        &self.current
    }

    pub fn matching_count(&self) -> usize {
        self.valuation.matchings().len()
    }

    pub fn value(&self) -> i64 {
        self.valuation.get(&self.current).expect("current matching is perfect")
    }

    /// 1-based tiles where the current matching can be twisted.
    pub fn twistable(&self) -> Vec<usize> {
        (0..self.graph.n_tiles()).filter(|&i| self.graph.can_twist(&self.current, i)).map(|i| i + 1).collect()
    }

    /// Twists the current matching on the 1-based `tile`.
    pub fn twist(&mut self, tile: usize) -> Result<(), DemoError> {
        let i = tile.checked_sub(1).ok_or(SnakeError::TileOutOfRange(tile))?;
        self.current = self.graph.twist(&self.current, i).map_err(|e| match e {
            SnakeError::NotTwistable(_) => SnakeError::NotTwistable(tile),
            SnakeError::TileOutOfRange(_) => SnakeError::TileOutOfRange(tile),
            other => other,
        })?;
        Ok(())
    }

    pub fn reset(&mut self) {
        self.current = self.graph.minimal_matching();
    }

    /// One line describing the current matching.
    pub fn status(&self) -> String {
        let h = self.graph.height_exponent(&self.current, self.surface.n_internal());
        format!(
            "matching {} of {}: height {}, v = {}",
            self.current,
            self.matching_count(),
            ExponentVector::new(h),
            self.value()
        )
    }

    pub fn expansion(&self, quantum: bool) -> Result<String, DemoError> {
        Ok(if quantum {
            quantum_expand(&self.surface, &self.arc, &self.seed)?.value.to_string()
        } else {
            commutative_expand(&self.surface, &self.arc, self.seed.btilde())?.to_string()
        })
    }

    /// The snake graph with matched edges drawn thick. Twistable tiles carry
    /// `class="tile twistable"` and a `data-tile` attribute.
    pub fn svg(&self) -> String {
        let g = &self.graph;
        let points = g.vertices();
        let max_x = points.iter().map(|p| p.0).max().unwrap_or(0);
        let max_y = points.iter().map(|p| p.1).max().unwrap_or(0);
        let (w, h) = (max_x * UNIT + 2 * MARGIN, max_y * UNIT + 2 * MARGIN);
        let px = |p: (i64, i64)| (MARGIN + p.0 * UNIT, h - MARGIN - p.1 * UNIT);
        let twistable = self.twistable();

        let mut s = String::new();
        let _ =
            writeln!(s, r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#);
        for tile in g.tiles() {
            let (x, y) = px((tile.origin.0, tile.origin.1 + 1));
            let class = if twistable.contains(&tile.index) { "tile twistable" } else { "tile" };
            let _ = writeln!(
                s,
                r#"<rect class="{class}" data-tile="{}" x="{x}" y="{y}" width="{UNIT}" height="{UNIT}"/>"#,
                tile.index
            );
            let (a, b) = tile.diagonal_ends();
            let ((x1, y1), (x2, y2)) = (px(a), px(b));
            let _ = writeln!(s, r#"<line class="diagonal" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            let (cx, cy) = (x + UNIT / 2, y + UNIT / 2);
            let _ =
                writeln!(s, r#"<text class="diagonal-label" x="{}" y="{}">{}</text>"#, cx + 6, cy - 6, tile.diagonal);
        }
        for (i, e) in g.edges().iter().enumerate() {
            let ((x1, y1), (x2, y2)) = (px(e.ends.0), px(e.ends.1));
            let class = if self.current.contains(i) { "edge matched" } else { "edge" };
            let _ = writeln!(s, r#"<line class="{class}" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}"/>"#);
            let (mx, my) = ((x1 + x2) / 2, (y1 + y2) / 2);
            let (lx, ly) = if e.is_vertical() { (mx + 4, my + 4) } else { (mx - 4, my - 4) };
            let _ = writeln!(s, r#"<text class="edge-label" x="{lx}" y="{ly}">{}</text>"#, e.label);
        }
        s.push_str("</svg>\n");
        s
    }
}

/// JavaScript handle on a [`Session`].
#[wasm_bindgen]
pub struct Demo {
    inner: Session,
}

#[wasm_bindgen]
impl Demo {
    /// Loads an arc; pass an empty `seed` for principal coefficients.
    #[wasm_bindgen(constructor)]
    pub fn new(surface: &str, arc: &str, seed: &str) -> Result<Demo, JsError> {
        Ok(Demo { inner: Session::new(surface, arc, seed)? })
    }

    pub fn golden() -> Demo {
        Demo { inner: Session::golden() }
    }

    pub fn svg(&self) -> String {
        self.inner.svg()
    }

    pub fn status(&self) -> String {
        self.inner.status()
    }

    pub fn twistable(&self) -> Vec<usize> {
        self.inner.twistable()
    }

    pub fn twist(&mut self, tile: usize) -> Result<(), JsError> {
        Ok(self.inner.twist(tile)?)
    }

    pub fn reset(&mut self) {
        self.inner.reset()
    }

    pub fn expansion(&self, quantum: bool) -> Result<String, JsError> {
        Ok(self.inner.expansion(quantum)?)
    }
}

#[wasm_bindgen(js_name = goldenSurface)]
pub fn golden_surface() -> String {
    GOLDEN_SURFACE.to_string()
}

#[wasm_bindgen(js_name = goldenArc)]
pub fn golden_arc() -> String {
    GOLDEN_ARC.to_string()
}
