use num_traits::Zero;

use super::{GenocchiTable, NumberTheoryError};
use crate::arith::{binomial, rat, ratio, ExactRat};

/// Residual of `((2n-1)/n) G_{2n} = -(1/2) sum_{k=1}^{n-1} C(2n-1,2k-1) ((2k-1)/k) G_{2k}`.
///
/// Returns left minus right; zero means the identity holds.
pub fn check_lemma_identity(
    n: usize,
    table: &GenocchiTable,
) -> Result<ExactRat, NumberTheoryError> {
    if n < 2 {
        return Err(NumberTheoryError::IndexTooSmall(n));
    }
    table.require(2 * n)?;
    let lhs = ratio(2 * n as i64 - 1, n as i64) * rat(table.even(n).clone());
    let sum = (1..n).fold(ExactRat::zero(), |acc, k| {
        acc + rat(binomial(2 * n as u64 - 1, 2 * k as i64 - 1))
            * ratio(2 * k as i64 - 1, k as i64)
            * rat(table.even(k).clone())
    });
    Ok(lhs + sum / rat(2))
}

/// Residual of `1 = -sum_{k=1}^{n-1} C(2n-2, 2k-1) G_{2k}/(2k)`.
pub fn check_eqgen_identity(
    n: usize,
    table: &GenocchiTable,
) -> Result<ExactRat, NumberTheoryError> {
    if n < 2 {
        return Err(NumberTheoryError::IndexTooSmall(n));
    }
    table.require(2 * (n - 1))?;
    let sum = (1..n).fold(ExactRat::zero(), |acc, k| {
        acc + ratio(
            binomial(2 * n as u64 - 2, 2 * k as i64 - 1) * table.even(k),
            2 * k as i64,
        )
    });
    Ok(rat(1) + sum)
}
