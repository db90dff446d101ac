use super::NumberTheoryError;
use crate::arith::ExactInt;

/// Default upper limit on `n` for [`dumont_count`]: `(2n)! = 10!` permutations.
pub const DEFAULT_DUMONT_BOUND: usize = 5;

// Positions are tracked in a u64 bitmask.
const HARD_LIMIT: usize = 31;

/// Number of permutations `t` of `{1..2n}` with `t(i) > i` exactly when `i` is odd.
///
/// Equals `|G_{2n+2}|`. Uses [`DEFAULT_DUMONT_BOUND`].
pub fn dumont_count(n: usize) -> Result<ExactInt, NumberTheoryError> {
    dumont_count_bounded(n, DEFAULT_DUMONT_BOUND)
}

/// [`dumont_count`] with an explicit brute-force bound on `n`.
pub fn dumont_count_bounded(n: usize, bound: usize) -> Result<ExactInt, NumberTheoryError> {
    if n == 0 {
        return Err(NumberTheoryError::DumontIndexZero);
    }
    if n > bound.min(HARD_LIMIT) {
        return Err(NumberTheoryError::DumontBoundExceeded {
            n,
            bound: bound.min(HARD_LIMIT),
        });
    }
    Ok(ExactInt::from(extend(1, 2 * n, 0)))
}

// Assigns t(pos), t(pos+1), ... depth-first; `used` marks taken images.
fn extend(pos: usize, size: usize, used: u64) -> u64 {
    if pos > size {
        return 1;
    }
    let candidates: Box<dyn Iterator<Item = usize>> = if pos % 2 == 1 {
        Box::new(pos + 1..=size)
    } else {
        Box::new(1..=pos)
    };
    let mut total = 0;
    for image in candidates {
        let bit = 1u64 << image;
        if used & bit == 0 {
            total += extend(pos + 1, size, used | bit);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        assert_eq!(dumont_count(1).unwrap(), ExactInt::from(1));
        assert_eq!(dumont_count(2).unwrap(), ExactInt::from(3));
        assert_eq!(dumont_count(4).unwrap(), ExactInt::from(155));
    }

    #[test]
    fn bound_enforced() {
        assert_eq!(
            dumont_count(6),
            Err(NumberTheoryError::DumontBoundExceeded { n: 6, bound: 5 })
        );
        assert_eq!(dumont_count(0), Err(NumberTheoryError::DumontIndexZero));
        assert!(dumont_count_bounded(6, 6).is_ok());
    }
}
