//! Laurent expansions of cluster variables and the mutation oracle.

use num_bigint::BigInt;
use thiserror::Error;

use crate::qalgebra::{AlgebraError, ExponentVector, Laurent, QCoeff, QuantumLaurent};
use crate::seeds::{ExtendedB, QuantumSeed, SeedError};
use crate::snakegraph::{Matching, SnakeError, SnakeGraph};
use crate::surface::{validate_arc, CrossingSequence, SurfaceError, Triangulation};
use crate::valuation::{compute_valuation, ValuationError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExpansionError {
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Snake(#[from] SnakeError),
    #[error(transparent)]
    Valuation(#[from] ValuationError),
    #[error(transparent)]
    Seed(#[from] SeedError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(
        "exchange matrix does not match the triangulation: entry ({row}, {col}) is {found}, adjacency gives {expected}"
    )]
    AdjacencyMismatch { row: usize, col: usize, found: i64, expected: i64 },
    #[error("exchange matrix has {found} columns, triangulation has {expected} internal arcs")]
    RankMismatch { expected: usize, found: usize },
    #[error("direction {0} out of range")]
    DirectionOutOfRange(usize),
}

fn check_adjacency(t: &Triangulation, btilde: &ExtendedB) -> Result<(), ExpansionError> {
    let n = t.n_internal();
    if btilde.cols() != n {
        return Err(ExpansionError::RankMismatch { expected: n, found: btilde.cols() });
    }
    let b = t.signed_adjacency();
    for (i, row) in b.iter().enumerate() {
        for (j, &expected) in row.iter().enumerate() {
            let found = btilde.get(i, j);
            if found != expected {
                return Err(ExpansionError::AdjacencyMismatch { row: i, col: j, found, expected });
            }
        }
    }
    Ok(())
}

/// One summand of an expansion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AuditEntry {
    pub matching: Matching,
    pub exponent: ExponentVector,
    pub height: Vec<i64>,
    /// `v(P)`; the coefficient is `q^{v/2}`.
    pub v: i64,
}

/// Exponent vectors `a(P)` for every perfect matching, in canonical order.
///
/// Internal coordinates are weight minus crossing; frozen coordinates are the
/// height monomial pushed through the coefficient rows, normalized by the
/// tropical sum (componentwise minimum) over all matchings.
pub fn exponent_vectors(
    g: &SnakeGraph,
    gamma: &CrossingSequence,
    btilde: &ExtendedB,
    matchings: &[Matching],
) -> Vec<(ExponentVector, Vec<i64>)> {
    let n = btilde.cols();
    let m = btilde.rows();
    let mut crossing = vec![0i64; n];
    for a in &gamma.crossings {
        crossing[a.0] += 1;
    }
    let rows: Vec<(Vec<i64>, Vec<i64>, Vec<i64>)> = matchings
        .iter()
        .map(|p| {
            let w = g.weight_exponent(p, n);
            let h = g.height_exponent(p, n);
            let f: Vec<i64> = (n..m).map(|i| (0..n).map(|k| h[k] * btilde.get(i, k)).sum()).collect();
            (w, h, f)
        })
        .collect();
    let floor: Vec<i64> = (0..m - n).map(|i| rows.iter().map(|r| r.2[i]).min().unwrap_or(0)).collect();
    rows.into_iter()
        .map(|(w, h, f)| {
            let mut a: Vec<i64> = (0..n).map(|k| w[k] - crossing[k]).collect();
            a.extend(f.iter().zip(&floor).map(|(x, lo)| x - lo));
            (ExponentVector::new(a), h)
        })
        .collect()
}

/// `x_γ` as a sum over perfect matchings, with geometric coefficients from `btilde`.
pub fn commutative_expand(
    t: &Triangulation,
    gamma: &CrossingSequence,
    btilde: &ExtendedB,
) -> Result<Laurent, ExpansionError> {
    check_adjacency(t, btilde)?;
    let g = SnakeGraph::build(t, gamma)?;
    let matchings = g.perfect_matchings();
    let mut out = Laurent::zero(btilde.rows());
    for (a, _) in exponent_vectors(&g, gamma, btilde, &matchings) {
        out.add_term(a, BigInt::from(1));
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuantumExpansion {
    pub value: QuantumLaurent,
    pub audit: Vec<AuditEntry>,
}

/// `X_γ = Σ_P q^{v(P)/2} X^{a(P)}` in the normalized monomial basis of `seed`.
pub fn quantum_expand(
    t: &Triangulation,
    gamma: &CrossingSequence,
    seed: &QuantumSeed,
) -> Result<QuantumExpansion, ExpansionError> {
    check_adjacency(t, seed.btilde())?;
    let arc = validate_arc(t, gamma)?;
    let g = SnakeGraph::from_validated(t, &arc);
    let valuation = compute_valuation(&g, &arc.crossings, seed.d())?;
    let exps = exponent_vectors(&g, gamma, seed.btilde(), valuation.matchings());
    let mut value = QuantumLaurent::zero(seed.dim());
    let mut audit = Vec::with_capacity(exps.len());
    for ((matching, v), (exponent, height)) in valuation.iter().zip(exps) {
        value.add_term(exponent.clone(), QCoeff::monomial(v, 1));
        audit.push(AuditEntry { matching: matching.clone(), exponent, height, v });
    }
    Ok(QuantumExpansion { value, audit })
}

/// Cluster variables after each flip in `flips`, written in the torus of `seed0`.
///
/// Returns the `m` variables of the final seed (frozen ones unchanged).
pub fn oracle_mutate_variables(seed0: &QuantumSeed, flips: &[usize]) -> Result<Vec<QuantumLaurent>, ExpansionError> {
    let m = seed0.dim();
    let lambda0 = seed0.lambda();
    let mut vars: Vec<QuantumLaurent> = (0..m).map(|i| QuantumLaurent::generator(m, i)).collect();
    let mut seed = seed0.clone();
    for &k in flips {
        if k >= seed.rank() {
            return Err(ExpansionError::DirectionOutOfRange(k));
        }
        let column = seed.btilde().column(k);
        let mut numerator = QuantumLaurent::zero(m);
        for sign in [1i64, -1] {
            let v: Vec<i64> = column.iter().map(|&b| (sign * b).max(0)).collect();
            let lam = seed.lambda();
            let shift = lam.eval(&v, ExponentVector::unit(m, k).coords()) - lam.ordered_product_shift(&v);
            let mut product = QuantumLaurent::one(m);
            for (i, &p) in v.iter().enumerate() {
                for _ in 0..p {
                    product = product.qmul(&vars[i], lambda0)?;
                }
            }
            numerator = numerator.add(&product.shift(shift))?;
        }
        vars[k] = numerator.exact_right_divide(&vars[k], lambda0)?;
        seed = seed.mutate(k)?;
    }
    Ok(vars)
}

/// Outcome of comparing an expansion with the oracle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub expansion: QuantumLaurent,
    pub oracle: QuantumLaurent,
}

impl Verification {
    pub fn is_match(&self) -> bool {
        self.expansion == self.oracle
    }

    /// Lex-largest exponent whose coefficients differ.
    pub fn first_difference(&self) -> Option<(ExponentVector, QCoeff, QCoeff)> {
        let mut keys: Vec<&ExponentVector> =
            self.expansion.terms().map(|(e, _)| e).chain(self.oracle.terms().map(|(e, _)| e)).collect();
        keys.sort();
        keys.dedup();
        keys.into_iter().rev().find_map(|e| {
            let (a, b) = (self.expansion.coefficient(e), self.oracle.coefficient(e));
            (a != b).then(|| (e.clone(), a, b))
        })
    }
}

/// Expands `gamma` on `t0` and compares with the oracle variable in `slot`
/// after applying `flips` to `seed0`.
pub fn verify_against_oracle(
    t0: &Triangulation,
    seed0: &QuantumSeed,
    flips: &[usize],
    gamma: &CrossingSequence,
    slot: usize,
) -> Result<Verification, ExpansionError> {
    let expansion = quantum_expand(t0, gamma, seed0)?.value;
    let vars = oracle_mutate_variables(seed0, flips)?;
    let oracle = vars.get(slot).cloned().ok_or(ExpansionError::DirectionOutOfRange(slot))?;
    Ok(Verification { expansion, oracle })
}
