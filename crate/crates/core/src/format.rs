//! JSON facet file format.
//!
//! ```json
//! {"n":3,"facets":[[1,2,3],[2,3,4]],"name":"optional"}
//! ```
//!
//! `n` is the number of vertices per facet. Every facet is a strictly
//! increasing array of positive integers of length `n`. Unknown fields are
//! rejected.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::simplicial::{Complex, ComplexError, Vertex, MAX_FACET_VERTICES};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("\"n\" must be between 1 and {MAX_FACET_VERTICES}, got {0}")]
    BadN(usize),
    #[error("\"facets\" is empty")]
    NoFacets,
    #[error("facet {index} has {len} vertices, expected n = {n}")]
    WrongLength { index: usize, len: usize, n: usize },
    #[error("facet {0} is not strictly increasing")]
    NotIncreasing(usize),
    #[error("facet {0} contains vertex 0; identifiers must be positive")]
    ZeroVertex(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FacetFile {
    pub n: usize,
    pub facets: Vec<Vec<Vertex>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
}

impl FacetFile {
    pub fn from_complex(complex: &Complex, name: Option<String>) -> FacetFile {
        FacetFile {
            n: complex.n(),
            facets: complex.facet_lists(),
            name,
        }
    }

    /// Compact single-line JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("facet file serializes")
    }

    /// Structural checks beyond what the JSON schema enforces.
    pub fn validate(&self) -> Result<(), FormatError> {
        if self.n == 0 || self.n > MAX_FACET_VERTICES {
            return Err(FormatError::BadN(self.n));
        }
        if self.facets.is_empty() {
            return Err(FormatError::NoFacets);
        }
        for (index, facet) in self.facets.iter().enumerate() {
            if facet.len() != self.n {
                return Err(FormatError::WrongLength {
                    index,
                    len: facet.len(),
                    n: self.n,
                });
            }
            if facet.first() == Some(&0) {
                return Err(FormatError::ZeroVertex(index));
            }
            if facet.windows(2).any(|w| w[0] >= w[1]) {
                return Err(FormatError::NotIncreasing(index));
            }
        }
        Ok(())
    }

    pub fn to_complex(&self) -> Result<Complex, FormatError> {
        self.validate()?;
        Ok(Complex::from_facets(self.facets.iter().cloned())?)
    }
}

/// Parses and validates a facet file.
pub fn parse_facet_file(input: &[u8]) -> Result<FacetFile, FormatError> {
    let file: FacetFile = serde_json::from_slice(input)?;
    file.validate()?;
    Ok(file)
}

/// Parses a facet file straight into a [`Complex`].
pub fn parse_complex(input: &[u8]) -> Result<Complex, FormatError> {
    parse_facet_file(input)?.to_complex()
}
