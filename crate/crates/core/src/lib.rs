//! Commutative and quantum Laurent expansions of cluster variables attached
//! to arcs on unpunctured surfaces.
//!
//! The pipeline: a [`surface::Triangulation`] and an arc given by its
//! [`surface::CrossingSequence`] yield a [`snakegraph::SnakeGraph`]; its
//! perfect matchings carry exponent vectors and a valuation
//! ([`valuation::compute_valuation`]), which [`expansion::quantum_expand`]
//! assembles into a [`qalgebra::QuantumLaurent`]. The result can be checked
//! against direct quantum mutation with [`expansion::verify_against_oracle`].
//!
//! ```
//! use qsnake::{quantum_expand, CrossingSequence, QuantumSeed, Triangulation};
//!
//! let t = Triangulation::new(2, 2, vec![[1, 0, 2], [1, 0, 3]]).unwrap();
//! let seed = QuantumSeed::principal(&t.signed_adjacency(), None).unwrap();
//! let gamma = CrossingSequence::new(vec![0, 1, 0, 1, 0], 0, 1);
//! let x = quantum_expand(&t, &gamma, &seed).unwrap();
//! assert_eq!(x.value.len(), 7);
//! assert_eq!(x.audit.len(), 13);
//! ```

pub mod cli;
pub mod expansion;
pub mod io;
pub mod models;
pub mod qalgebra;
pub mod seeds;
pub mod snakegraph;
pub mod surface;
pub mod valuation;

pub use expansion::{
    commutative_expand, oracle_mutate_variables, quantum_expand, verify_against_oracle, QuantumExpansion,
};
pub use qalgebra::{ExponentVector, LambdaForm, Laurent, QCoeff, QuantumLaurent};
pub use seeds::{ExtendedB, QuantumSeed};
pub use snakegraph::{Matching, SnakeGraph};
pub use surface::{ArcId, CrossingSequence, Triangulation};
pub use valuation::{compute_valuation, ValuationMap};
