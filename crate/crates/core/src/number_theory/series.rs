//! Dense truncated power series over the rationals.

use std::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::arith::{factorial, ExactRat};

/// A power series `c_0 + c_1 t + ... + c_d t^d + O(t^{d+1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<ExactRat>,
}

impl PowerSeries {
    /// Builds a series truncated after `degree`, padding missing coefficients with zero.
    pub fn new(mut coeffs: Vec<ExactRat>, degree: usize) -> Self {
        coeffs.resize(degree + 1, ExactRat::zero());
        Self { coeffs }
    }

    /// The monomial `c * t^power`, truncated after `degree`.
    pub fn monomial(c: ExactRat, power: usize, degree: usize) -> Self {
        let mut coeffs = vec![ExactRat::zero(); degree + 1];
        if power <= degree {
            coeffs[power] = c;
        }
        Self { coeffs }
    }

    /// `e^t` through `t^degree`.
    pub fn exp(degree: usize) -> Self {
        let coeffs = (0..=degree as u64)
            .map(|k| ExactRat::new(One::one(), factorial(k)))
            .collect();
        Self { coeffs }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `t^power`; zero beyond the truncation order.
    pub fn coeff(&self, power: usize) -> ExactRat {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(ExactRat::zero)
    }

    pub fn coeffs(&self) -> &[ExactRat] {
        &self.coeffs
    }

    /// Series long division `self / divisor`.
    ///
    /// Returns `None` if the divisor has zero constant term.
    pub fn checked_div(&self, divisor: &PowerSeries) -> Option<PowerSeries> {
        let d0 = divisor.coeff(0);
        if d0.is_zero() {
            return None;
        }
        let degree = self.degree().min(divisor.degree());
        let mut quotient: Vec<ExactRat> = Vec::with_capacity(degree + 1);
        for j in 0..=degree {
            let mut acc = self.coeff(j);
            for i in 1..=j {
                acc -= divisor.coeff(i) * &quotient[j - i];
            }
            quotient.push(acc / &d0);
        }
        Some(Self { coeffs: quotient })
    }
}

impl Add for &PowerSeries {
    type Output = PowerSeries;

    fn add(self, rhs: &PowerSeries) -> PowerSeries {
        let degree = self.degree().min(rhs.degree());
        let coeffs = (0..=degree).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        PowerSeries { coeffs }
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;

    fn mul(self, rhs: &PowerSeries) -> PowerSeries {
        let degree = self.degree().min(rhs.degree());
        let coeffs = (0..=degree)
            .map(|k| {
                (0..=k).fold(ExactRat::zero(), |acc, i| {
                    acc + &self.coeffs[i] * &rhs.coeffs[k - i]
                })
            })
            .collect();
        PowerSeries { coeffs }
    }
}

/// Expansion of `2t / (e^t + 1)` through `t^degree`.
pub fn genocchi_generating_function(degree: usize) -> PowerSeries {
    let two = ExactRat::from_integer(2.into());
    let numerator = PowerSeries::monomial(two, 1, degree);
    let denominator =
        &PowerSeries::exp(degree) + &PowerSeries::monomial(ExactRat::one(), 0, degree);
    numerator
        .checked_div(&denominator)
        .expect("e^t + 1 has constant term 2")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{rat, ratio};

    #[test]
    fn hand_expansion_through_degree_four() {
        // t / (1 + t/2 + t^2/4 + t^3/12 + t^4/48): t - t^2/2 + 0 t^3 + t^4/24
        let s = genocchi_generating_function(4);
        assert_eq!(s.coeff(0), rat(0));
        assert_eq!(s.coeff(1), rat(1));
        assert_eq!(s.coeff(2), ratio(-1, 2));
        assert_eq!(s.coeff(3), rat(0));
        assert_eq!(s.coeff(4), ratio(1, 24));
    }

    #[test]
    fn division_inverts_multiplication() {
        let a = PowerSeries::exp(8);
        let b = &PowerSeries::exp(8) + &PowerSeries::monomial(rat(3), 2, 8);
        let q = (&a * &b).checked_div(&b).unwrap();
        assert_eq!(q, a);
    }

    #[test]
    fn zero_constant_term_rejected() {
        let a = PowerSeries::exp(3);
        let b = PowerSeries::monomial(rat(1), 1, 3);
        assert!(a.checked_div(&b).is_none());
    }
}
