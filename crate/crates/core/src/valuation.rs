//! The valuation map on perfect matchings.
//!
//! `Ω(p_s, P)` compares how often the crossed arc `τ_{i_s}` occurs among the
//! matched labels after and before the twistable pair of tile `s` with how
//! often it occurs among later and earlier crossings. The valuation `v` is then
//! propagated from the maximal matching along twists via
//! `v(P) − v(μ_s P) = Ω(p_s, P)`, and the result is checked for consistency.

use std::collections::{HashMap, VecDeque};

use thiserror::Error;

use crate::snakegraph::{Matching, SnakeGraph};
use crate::surface::ArcId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValuationError {
    #[error("matching cannot twist on tile {0}")]
    NotTwistable(usize),
    #[error("valuation ill-defined: twist cycle through tile {tile} disagrees by {defect}")]
    Inconsistent { tile: usize, defect: i64 },
    #[error("valuation ill-defined: v(P_-) = {0}, expected 0")]
    MinimalNonZero(i64),
    #[error("valuation ill-defined: matching not reached from P_+")]
    Unreached,
    #[error("compatibility scalar must be positive, got {0}")]
    NonPositiveScalar(i64),
}

/// Counts of `τ_{i_s}` among later (`plus`) and earlier (`minus`) crossings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossingMultiplicities {
    pub plus: Vec<usize>,
    pub minus: Vec<usize>,
}

impl CrossingMultiplicities {
    pub fn new(crossings: &[ArcId]) -> Self {
        let plus =
            (0..crossings.len()).map(|s| crossings[s + 1..].iter().filter(|&&a| a == crossings[s]).count()).collect();
        let minus =
            (0..crossings.len()).map(|s| crossings[..s].iter().filter(|&&a| a == crossings[s]).count()).collect();
        CrossingMultiplicities { plus, minus }
    }
}

/// Counts of `τ_{i_s}` among matched labels after and before the twistable pair.
pub fn label_multiplicities(g: &SnakeGraph, m: &Matching, s: usize) -> Result<(usize, usize), ValuationError> {
    let pair = g.twist_pair(m, s).ok_or(ValuationError::NotTwistable(s))?;
    let tile = &g.tiles()[s];
    let labels = g.ordered_edge_labels(m);
    let pos = |side| labels.iter().position(|&(e, _)| e == tile.edge(side)).expect("matched");
    let (a, b) = (pos(pair[0]), pos(pair[1]));
    let (lo, hi) = (a.min(b), a.max(b));
    let diag = tile.diagonal;
    let after = labels[hi + 1..].iter().filter(|&&(_, l)| l == diag).count();
    let before = labels[..lo].iter().filter(|&&(_, l)| l == diag).count();
    Ok((after, before))
}

/// `Ω(p_s, P)` for the 0-based tile `s`.
pub fn omega(
    g: &SnakeGraph,
    mult: &CrossingMultiplicities,
    s: usize,
    m: &Matching,
    d: i64,
) -> Result<i64, ValuationError> {
    let (n_plus, n_minus) = label_multiplicities(g, m, s)?;
    let core = n_plus as i64 - mult.plus[s] as i64 - n_minus as i64 + mult.minus[s] as i64;
    let ccw = g.has_counterclockwise_pair(m, s).ok_or(ValuationError::NotTwistable(s))?;
    Ok(if ccw { core * d } else { -core * d })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuationMap {
    matchings: Vec<Matching>,
    values: Vec<i64>,
    index: HashMap<Matching, usize>,
}

impl ValuationMap {
    pub fn matchings(&self) -> &[Matching] {
        &self.matchings
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, m: &Matching) -> Option<i64> {
        self.index.get(m).map(|&i| self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Matching, i64)> {
        self.matchings.iter().zip(self.values.iter().copied())
    }
}

/// Propagates `v` from `P_+` along twists, checking every twist edge and `v(P_−) = 0`.
pub fn compute_valuation(g: &SnakeGraph, crossings: &[ArcId], d: i64) -> Result<ValuationMap, ValuationError> {
    compute_valuation_ordered(g, crossings, d, false)
}

/// As [`compute_valuation`], optionally visiting tiles in reverse order.
pub fn compute_valuation_ordered(
    g: &SnakeGraph,
    crossings: &[ArcId],
    d: i64,
    reverse: bool,
) -> Result<ValuationMap, ValuationError> {
    if d <= 0 {
        return Err(ValuationError::NonPositiveScalar(d));
    }
    let matchings = g.perfect_matchings();
    let index: HashMap<Matching, usize> = matchings.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
    let mut values: Vec<Option<i64>> = vec![None; matchings.len()];
    let mult = CrossingMultiplicities::new(crossings);
    let start = index[&g.maximal_matching()];
    values[start] = Some(0);
    let mut queue = VecDeque::from([start]);
    let mut tiles: Vec<usize> = (0..g.n_tiles()).collect();
    if reverse {
        tiles.reverse();
    }
    while let Some(u) = queue.pop_front() {
        let vu = values[u].expect("visited");
        for &s in &tiles {
            let Ok(twisted) = g.twist(&matchings[u], s) else { continue };
            let w = index[&twisted];
            let expected = vu - omega(g, &mult, s, &matchings[u], d)?;
            match values[w] {
                None => {
                    values[w] = Some(expected);
                    queue.push_back(w);
                }
                Some(found) if found != expected => {
                    return Err(ValuationError::Inconsistent { tile: s, defect: found - expected });
                }
                Some(_) => {}
            }
        }
    }
    let values: Vec<i64> = values.into_iter().map(|v| v.ok_or(ValuationError::Unreached)).collect::<Result<_, _>>()?;
    let at_min = values[index[&g.minimal_matching()]];
    if at_min != 0 {
        return Err(ValuationError::MinimalNonZero(at_min));
    }
    Ok(ValuationMap { matchings, values, index })
}
