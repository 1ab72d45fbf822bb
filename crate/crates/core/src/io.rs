//! JSON input formats for surfaces, arcs and seeds.
//!
//! ```json
//! { "n_internal": 2, "n_boundary": 2, "triangles": [[1, 0, 2], [1, 0, 3]] }
//! { "crossings": [0, 1, 0, 1, 0], "start_triangle": 0, "end_triangle": 1 }
//! { "Btilde": [[0, -2], [2, 0], [1, 0], [0, 1]], "Lambda": [[0, 0, -1, 0], ...] }
//! ```

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qalgebra::LambdaForm;
use crate::seeds::{ExtendedB, QuantumSeed, SeedError};
use crate::surface::{CrossingSequence, SurfaceError, Triangulation};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("malformed {what}: {source}")]
    Json {
        what: &'static str,
        #[source]
        source: serde_json::Error,
    },
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Seed(#[from] SeedError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SurfaceFile {
    pub n_internal: usize,
    pub n_boundary: usize,
    pub triangles: Vec<[usize; 3]>,
}

impl SurfaceFile {
    pub fn from_triangulation(t: &Triangulation) -> Self {
        SurfaceFile { n_internal: t.n_internal(), n_boundary: t.n_boundary(), triangles: t.triangle_rows() }
    }

    pub fn build(self) -> Result<Triangulation, SurfaceError> {
        Triangulation::new(self.n_internal, self.n_boundary, self.triangles)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SeedFile {
    #[serde(rename = "Btilde")]
    pub btilde: Vec<Vec<i64>>,
    #[serde(rename = "Lambda")]
    pub lambda: Vec<Vec<i64>>,
}

impl SeedFile {
    pub fn from_seed(seed: &QuantumSeed) -> Self {
        SeedFile { btilde: seed.btilde().to_rows(), lambda: seed.lambda().rows() }
    }

    pub fn build(self) -> Result<QuantumSeed, SeedError> {
        let btilde = ExtendedB::new(self.btilde)?;
        let lambda = LambdaForm::new(self.lambda)?;
        QuantumSeed::new(btilde, lambda)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, what: &'static str) -> Result<T, InputError> {
    serde_json::from_str(text).map_err(|source| InputError::Json { what, source })
}

pub fn parse_surface(text: &str) -> Result<Triangulation, InputError> {
    Ok(parse::<SurfaceFile>(text, "surface")?.build()?)
}

pub fn parse_arc(text: &str) -> Result<CrossingSequence, InputError> {
    parse(text, "arc")
}

pub fn parse_seed(text: &str) -> Result<QuantumSeed, InputError> {
    Ok(parse::<SeedFile>(text, "seed")?.build()?)
}

pub fn surface_to_json(t: &Triangulation) -> String {
    serde_json::to_string(&SurfaceFile::from_triangulation(t)).expect("plain data serializes")
}

pub fn seed_to_json(seed: &QuantumSeed) -> String {
    serde_json::to_string(&SeedFile::from_seed(seed)).expect("plain data serializes")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips() {
        let t = parse_surface(r#"{"n_internal":2,"n_boundary":2,"triangles":[[1,0,2],[1,0,3]]}"#).unwrap();
        assert_eq!(parse_surface(&surface_to_json(&t)).unwrap(), t);
        let seed = QuantumSeed::principal(&t.signed_adjacency(), None).unwrap();
        assert_eq!(parse_seed(&seed_to_json(&seed)).unwrap(), seed);
        let arc = parse_arc(r#"{"crossings":[0,1],"start_triangle":0,"end_triangle":0}"#).unwrap();
        assert_eq!(arc.crossings.len(), 2);
        let member = parse_arc(r#"{"crossings":[],"arc":1}"#).unwrap();
        assert_eq!(member.arc.map(|a| a.0), Some(1));
    }

    #[test]
    fn reports_bad_input() {
        assert!(matches!(parse_surface("{"), Err(InputError::Json { what: "surface", .. })));
        assert!(matches!(
            parse_surface(r#"{"n_internal":1,"n_boundary":4,"triangles":[[0,1,2]]}"#),
            Err(InputError::Surface(_))
        ));
        assert!(matches!(parse_seed(r#"{"Btilde":[[0]],"Lambda":[[0]]}"#), Err(InputError::Seed(_))));
    }
}
