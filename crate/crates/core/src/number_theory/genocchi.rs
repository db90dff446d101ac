use std::fmt;
use std::str::FromStr;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::series::genocchi_generating_function;
use super::{bernoulli, NumberTheoryError};
use crate::arith::{as_integer, binomial, factorial, rat, ratio, ExactInt, ExactRat};

/// The algorithm that produced a [`GenocchiTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenocchiMethod {
    Series,
    RecursionEven,
    RecursionOdd,
    Bernoulli,
}

impl GenocchiMethod {
    pub const ALL: [GenocchiMethod; 4] = [
        GenocchiMethod::Series,
        GenocchiMethod::RecursionEven,
        GenocchiMethod::RecursionOdd,
        GenocchiMethod::Bernoulli,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GenocchiMethod::Series => "series",
            GenocchiMethod::RecursionEven => "recursion-even",
            GenocchiMethod::RecursionOdd => "recursion-odd",
            GenocchiMethod::Bernoulli => "bernoulli",
        }
    }
}

impl fmt::Display for GenocchiMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GenocchiMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        GenocchiMethod::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| format!("unknown Genocchi method `{s}`"))
    }
}

/// Signed Genocchi numbers `G_2, G_4, ..., G_{2N}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenocchiTable {
    values: Vec<ExactInt>,
    method: GenocchiMethod,
}

impl GenocchiTable {
    /// Wraps externally supplied values `G_2, G_4, ...` without validation.
    pub fn from_values(values: Vec<ExactInt>, method: GenocchiMethod) -> Self {
        Self { values, method }
    }

    /// Largest even index `2N` covered by the table.
    pub fn max_index(&self) -> usize {
        2 * self.values.len()
    }

    pub fn method(&self) -> GenocchiMethod {
        self.method
    }

    /// `G_index` for even `2 <= index <= max_index`, and `G_1 = 1`.
    ///
    /// Odd indices above 1 are zero and return `Some(0)`; `G_0 = 0` likewise.
    pub fn get(&self, index: usize) -> Option<ExactInt> {
        match index {
            0 => Some(ExactInt::from(0)),
            1 => Some(ExactInt::from(1)),
            i if i > self.max_index() => None,
            i if i % 2 == 1 => Some(ExactInt::from(0)),
            i => Some(self.values[i / 2 - 1].clone()),
        }
    }

    /// `G_{2n}` for `1 <= n <= N`. Panics outside the table.
    pub fn even(&self, n: usize) -> &ExactInt {
        &self.values[n - 1]
    }

    /// `(2n, G_{2n})` pairs in increasing order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, &ExactInt)> + '_ {
        self.values
            .iter()
            .enumerate()
            .map(|(i, g)| (2 * (i + 1), g))
    }

    /// True when both tables hold the same values over the same range.
    pub fn same_values(&self, other: &GenocchiTable) -> bool {
        self.values == other.values
    }

    pub(crate) fn require(&self, index: usize) -> Result<(), NumberTheoryError> {
        if index > self.max_index() {
            Err(NumberTheoryError::InsufficientTable {
                required: index,
                available: self.max_index(),
            })
        } else {
            Ok(())
        }
    }
}

fn check_size(n: usize) -> Result<(), NumberTheoryError> {
    if n == 0 {
        Err(NumberTheoryError::EmptyTable)
    } else {
        Ok(())
    }
}

fn integral(
    value: ExactRat,
    method: GenocchiMethod,
    index: usize,
) -> Result<ExactInt, NumberTheoryError> {
    as_integer(&value).ok_or(NumberTheoryError::NonIntegral { method, index })
}

/// Computes `G_2..G_{2N}` with the chosen algorithm.
pub fn genocchi(n: usize, method: GenocchiMethod) -> Result<GenocchiTable, NumberTheoryError> {
    match method {
        GenocchiMethod::Series => genocchi_by_series(n),
        GenocchiMethod::RecursionEven => genocchi_by_recursion_even(n),
        GenocchiMethod::RecursionOdd => genocchi_by_recursion_odd(n),
        GenocchiMethod::Bernoulli => genocchi_by_bernoulli(n),
    }
}

/// Reads `G_{2n} = (2n)! [t^{2n}] 2t/(e^t+1)` off the series expansion.
///
/// The expansion is carried one degree further than needed so that the
/// vanishing of every odd coefficient beyond `t` is checked through `t^{2N+1}`.
pub fn genocchi_by_series(n: usize) -> Result<GenocchiTable, NumberTheoryError> {
    check_size(n)?;
    let method = GenocchiMethod::Series;
    let series = genocchi_generating_function(2 * n + 1);
    if series.coeff(0) != rat(0) {
        return Err(NumberTheoryError::SeriesInconsistent { power: 0 });
    }
    if series.coeff(1) != rat(1) {
        return Err(NumberTheoryError::SeriesInconsistent { power: 1 });
    }
    let mut values = Vec::with_capacity(n);
    for j in 1..=n {
        let odd = 2 * j + 1;
        if series.coeff(odd) != rat(0) {
            return Err(NumberTheoryError::SeriesInconsistent { power: odd });
        }
        let scaled = series.coeff(2 * j) * rat(factorial(2 * j as u64));
        values.push(integral(scaled, method, 2 * j)?);
    }
    Ok(GenocchiTable { values, method })
}

/// `G_{2n} = -n - (1/2) sum_{k=1}^{n-1} C(2n,2k) G_{2k}`.
pub fn genocchi_by_recursion_even(n: usize) -> Result<GenocchiTable, NumberTheoryError> {
    check_size(n)?;
    let method = GenocchiMethod::RecursionEven;
    let mut values: Vec<ExactInt> = Vec::with_capacity(n);
    for m in 1..=n {
        let sum: ExactInt = (1..m)
            .map(|k| binomial(2 * m as u64, 2 * k as i64) * &values[k - 1])
            .sum();
        let value = rat(-(m as i64)) - ratio(sum, 2);
        values.push(integral(value, method, 2 * m)?);
    }
    Ok(GenocchiTable { values, method })
}

/// `G_{2n} = -1 - sum_{k=1}^{n-1} C(2n,2k-1) G_{2k}/(2k)`.
pub fn genocchi_by_recursion_odd(n: usize) -> Result<GenocchiTable, NumberTheoryError> {
    check_size(n)?;
    let method = GenocchiMethod::RecursionOdd;
    let mut values: Vec<ExactInt> = Vec::with_capacity(n);
    for m in 1..=n {
        let sum: ExactRat = (1..m)
            .map(|k| {
                ratio(
                    binomial(2 * m as u64, 2 * k as i64 - 1) * &values[k - 1],
                    2 * k,
                )
            })
            .sum();
        let value = rat(-1) - sum;
        values.push(integral(value, method, 2 * m)?);
    }
    Ok(GenocchiTable { values, method })
}

/// `G_{2n} = 2 (1 - 2^{2n}) B_{2n}` with `B_1 = -1/2`.
pub fn genocchi_by_bernoulli(n: usize) -> Result<GenocchiTable, NumberTheoryError> {
    check_size(n)?;
    let method = GenocchiMethod::Bernoulli;
    let table = bernoulli(2 * n);
    let values = (1..=n)
        .map(|m| {
            let factor = ExactInt::from(1) - (ExactInt::from(1) << (2 * m));
            let value = rat(factor * 2) * table.get(2 * m).expect("table covers 2N");
            integral(value, method, 2 * m)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GenocchiTable { values, method })
}

impl GenocchiTable {
    /// Checks `sign(G_{2n}) = (-1)^n` for every entry.
    pub fn signs_alternate(&self) -> bool {
        self.iter().all(|(index, g)| {
            let n = index / 2;
            if n % 2 == 0 {
                g.is_positive()
            } else {
                g.is_negative()
            }
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<ExactInt> {
        v.iter().map(|&x| ExactInt::from(x)).collect()
    }

    fn values(t: &GenocchiTable) -> Vec<ExactInt> {
        t.iter().map(|(_, g)| g.clone()).collect()
    }

    #[test]
    fn series_small() {
        let t = genocchi_by_series(2).unwrap();
        assert_eq!(values(&t), ints(&[-1, 1]));
        assert_eq!(t.max_index(), 4);
        assert_eq!(t.get(1), Some(ExactInt::from(1)));
        assert_eq!(t.get(3), Some(ExactInt::from(0)));
        assert_eq!(t.get(6), None);
        let t = genocchi_by_series(6).unwrap();
        assert_eq!(t.even(6), &ExactInt::from(2073));
    }

    #[test]
    fn recursion_even_values() {
        assert_eq!(values(&genocchi_by_recursion_even(1).unwrap()), ints(&[-1]));
        assert_eq!(
            values(&genocchi_by_recursion_even(4).unwrap()),
            ints(&[-1, 1, -3, 17])
        );
        assert_eq!(
            genocchi_by_recursion_even(6).unwrap().even(6),
            &ExactInt::from(2073)
        );
    }

    #[test]
    fn recursion_odd_values() {
        assert_eq!(values(&genocchi_by_recursion_odd(1).unwrap()), ints(&[-1]));
        assert_eq!(
            genocchi_by_recursion_odd(3).unwrap().even(3),
            &ExactInt::from(-3)
        );
        assert!(genocchi_by_recursion_odd(10)
            .unwrap()
            .same_values(&genocchi_by_series(10).unwrap()));
    }

    #[test]
    fn bernoulli_route() {
        let t = genocchi_by_bernoulli(2).unwrap();
        assert_eq!(values(&t), ints(&[-1, 1]));
        assert!(genocchi_by_bernoulli(20)
            .unwrap()
            .same_values(&genocchi_by_series(20).unwrap()));
    }

    #[test]
    fn zero_size_rejected() {
        for m in GenocchiMethod::ALL {
            assert_eq!(genocchi(0, m), Err(NumberTheoryError::EmptyTable));
        }
    }

    #[test]
    fn method_names_round_trip() {
        for m in GenocchiMethod::ALL {
            assert_eq!(m.name().parse::<GenocchiMethod>(), Ok(m));
        }
        assert!("fast".parse::<GenocchiMethod>().is_err());
    }

    #[test]
    fn signs() {
        assert!(genocchi_by_recursion_even(30).unwrap().signs_alternate());
    }
}
