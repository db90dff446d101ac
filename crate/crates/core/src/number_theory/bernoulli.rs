use num_traits::Zero;

use crate::arith::{binomial, rat, ExactRat};

/// Bernoulli numbers `B_0..B_M` with the `B_1 = -1/2` convention.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<ExactRat>,
}

impl BernoulliTable {
    pub fn max_index(&self) -> usize {
        self.values.len() - 1
    }

    pub fn get(&self, m: usize) -> Option<&ExactRat> {
        self.values.get(m)
    }

    pub fn values(&self) -> &[ExactRat] {
        &self.values
    }
}

/// `B_0..B_M` from `sum_{j=0}^{m} C(m+1, j) B_j = 0` for `m >= 1`, `B_0 = 1`.
pub fn bernoulli(max_index: usize) -> BernoulliTable {
    let mut values = vec![rat(1)];
    for m in 1..=max_index {
        let sum = values
            .iter()
            .enumerate()
            .fold(ExactRat::zero(), |acc, (j, b)| {
                acc + rat(binomial(m as u64 + 1, j as i64)) * b
            });
        values.push(-sum / rat(m as i64 + 1));
    }
    BernoulliTable { values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::ratio;

    #[test]
    fn first_values() {
        let t = bernoulli(0);
        assert_eq!(t.max_index(), 0);
        assert_eq!(t.get(0), Some(&rat(1)));
        let t = bernoulli(4);
        assert_eq!(t.get(1), Some(&ratio(-1, 2)));
        assert_eq!(t.get(2), Some(&ratio(1, 6)));
        assert_eq!(t.get(3), Some(&rat(0)));
        assert_eq!(t.get(4), Some(&ratio(-1, 30)));
    }

    #[test]
    fn odd_values_vanish() {
        let t = bernoulli(41);
        for m in (3..=41).step_by(2) {
            assert!(t.get(m).unwrap().is_zero(), "B_{m}");
        }
    }

    #[test]
    fn known_b12() {
        assert_eq!(bernoulli(12).get(12), Some(&ratio(-691, 2730)));
    }
}
