//! Genocchi and Bernoulli numbers, computed exactly by independent routes.
//!
//! Four algorithms produce a [`GenocchiTable`]:
//!
//! * [`genocchi_by_series`] expands `2t/(e^t+1)` as a rational power series;
//! * [`genocchi_by_recursion_even`] and [`genocchi_by_recursion_odd`] run the
//!   two recursions obtained by comparing even and odd coefficients of the
//!   differentiated generating function;
//! * [`genocchi_by_bernoulli`] uses `G_{2n} = 2(1 - 2^{2n}) B_{2n}`.
//!
//! Tables store signed values; `G_{2n}` has sign `(-1)^n`.

mod bernoulli;
mod dumont;
mod genocchi;
mod identities;
pub mod series;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use dumont::{dumont_count, dumont_count_bounded, DEFAULT_DUMONT_BOUND};
pub use genocchi::{
    genocchi, genocchi_by_bernoulli, genocchi_by_recursion_even, genocchi_by_recursion_odd,
    genocchi_by_series, GenocchiMethod, GenocchiTable,
};
pub use identities::{check_eqgen_identity, check_lemma_identity};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumberTheoryError {
    #[error("table size must be at least 1")]
    EmptyTable,
    #[error("{method} produced a non-integral value at G_{index}")]
    NonIntegral {
        method: GenocchiMethod,
        index: usize,
    },
    #[error("series expansion inconsistent at t^{power}")]
    SeriesInconsistent { power: usize },
    #[error("dumont_count({n}) exceeds the brute-force bound {bound}")]
    DumontBoundExceeded { n: usize, bound: usize },
    #[error("dumont_count requires n >= 1")]
    DumontIndexZero,
    #[error("identity requires n >= 2, got {0}")]
    IndexTooSmall(usize),
    #[error("Genocchi table covers indices up to {available}, need {required}")]
    InsufficientTable { required: usize, available: usize },
}
