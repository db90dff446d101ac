//! Exact Genocchi numbers and f-vector identities for simplicial balls.
//!
//! * [`number_theory`]: Genocchi numbers by four independent routes, Bernoulli
//!   numbers, Dumont permutation counts and the auxiliary Genocchi identities.
//! * [`simplicial`]: pure complexes, f-vectors, boundaries, interior f-vectors.
//! * [`generators`]: families of balls and spheres built deterministically.
//! * [`verifier`]: exact residuals of the interior/boundary identities.
//! * [`format`] and [`corpus`]: the JSON facet file and the corpus grid.

pub mod arith;
pub mod corpus;
pub mod format;
pub mod generators;
pub mod number_theory;
pub mod simplicial;
pub mod verifier;
