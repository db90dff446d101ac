//! Exact integer and rational helpers shared by every module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Arbitrary-precision signed integer.
pub type ExactInt = BigInt;

/// Arbitrary-precision rational, always kept in lowest terms with a positive denominator.
pub type ExactRat = BigRational;

/// Binomial coefficient `C(n, k)`.
///
/// Returns 0 when `k < 0` or `k > n`, so identity sums can run over
/// their full printed ranges without guards.
pub fn binomial(n: u64, k: i64) -> ExactInt {
    if k < 0 || k as u64 > n {
        return ExactInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut acc = ExactInt::one();
    for i in 0..k {
        // acc * (n - i) is always divisible by (i + 1) at this point.
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> ExactInt {
    (1..=n).fold(ExactInt::one(), |acc, i| acc * i)
}

/// Lifts an integer into the rationals.
pub fn rat(n: impl Into<ExactInt>) -> ExactRat {
    ExactRat::from_integer(n.into())
}

/// Exact ratio `num / den` in lowest terms.
///
/// Panics if `den` is zero.
pub fn ratio(num: impl Into<ExactInt>, den: impl Into<ExactInt>) -> ExactRat {
    ExactRat::new(num.into(), den.into())
}

/// Formats a rational as `p/q` (or `p` when `q = 1`); zero prints as `0`.
pub fn format_rational(r: &ExactRat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Returns the integer value of `r` if its denominator is 1.
pub fn as_integer(r: &ExactRat) -> Option<ExactInt> {
    r.is_integer().then(|| r.numer().clone())
}
