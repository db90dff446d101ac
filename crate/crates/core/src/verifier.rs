//! Exact evaluation of the interior/boundary f-vector identities on a ball.
//!
//! Three families of residuals are computed, each as `lhs - rhs` over the
//! rationals:
//!
//! * the Genocchi identity expressing `f_k(int B)` through boundary faces
//!   and higher interior faces ([`theorem1_residual`]);
//! * the Dehn–Sommerville type relation for balls ([`klain_residual`]);
//! * the reduced identity for balls without low-dimensional interior faces
//!   ([`no_interior_faces_residual`]).
//!
//! All are checked for `0 <= k <= n-2` with `n - k` even. A pass means the
//! residual is literally zero.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arith::{binomial, format_rational, rat, ratio, ExactRat};
use crate::number_theory::GenocchiTable;
use crate::simplicial::{
    ball_check, boundary_complex, f_vector, interior_from, Complex, ComplexError, FVector,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("n - k must be even (n = {n}, k = {k})")]
    ParityError { n: usize, k: usize },
    #[error("k = {k} out of range for n = {n}")]
    KOutOfRange { n: usize, k: usize },
    #[error("Genocchi table covers indices up to {available}, need {required}")]
    InsufficientGenocchiTable { required: usize, available: usize },
    #[error("f_{k}(int B) is nonzero")]
    PreconditionViolated { k: usize },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Identity {
    /// Interior faces via Genocchi-weighted boundary and higher interior faces.
    Theorem1,
    /// Dehn–Sommerville relation for balls, with exponent `n + k + i`.
    Klain,
    /// Reduced identity when no interior faces exist up to dimension `e`.
    NoInteriorFaces,
}

impl Identity {
    pub fn name(self) -> &'static str {
        match self {
            Identity::Theorem1 => "theorem1",
            Identity::Klain => "klain",
            Identity::NoInteriorFaces => "no_interior_faces",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn check_parity(k: usize, n: usize) -> Result<(), VerifyError> {
    if k > n {
        return Err(VerifyError::KOutOfRange { n, k });
    }
    if !(n - k).is_multiple_of(2) {
        return Err(VerifyError::ParityError { n, k });
    }
    Ok(())
}

fn genocchi_weight(table: &GenocchiTable, i: usize) -> Result<ExactRat, VerifyError> {
    table
        .get(2 * i)
        .map(|g| ratio(g, 2 * i as i64))
        .ok_or(VerifyError::InsufficientGenocchiTable {
            required: 2 * i,
            available: table.max_index(),
        })
}

fn f(v: &FVector, dim: usize) -> ExactRat {
    rat(v.get(dim as i64))
}

fn c(n: usize, k: usize) -> ExactRat {
    rat(binomial(n as u64, k as i64))
}

/// The two sums of the Genocchi identity: boundary part and interior part.
fn genocchi_sums(
    k: usize,
    interior: &FVector,
    boundary: &FVector,
    n: usize,
    table: &GenocchiTable,
) -> Result<(ExactRat, ExactRat), VerifyError> {
    let top = (n - k) / 2;
    let required = 2 * top;
    if required > table.max_index() {
        return Err(VerifyError::InsufficientGenocchiTable {
            required,
            available: table.max_index(),
        });
    }
    let mut bd_sum = ExactRat::zero();
    let mut int_sum = ExactRat::zero();
    for i in 1..=top {
        let w = genocchi_weight(table, i)?;
        bd_sum += &w * c(k + 2 * i - 1, k + 1) * f(boundary, k + 2 * i - 2);
        int_sum += w * c(k + 2 * i, k + 1) * f(interior, k + 2 * i - 1);
    }
    Ok((bd_sum, int_sum))
}

/// `f_k(int B) - sum_{i=1}^{(n-k)/2} (G_{2i}/2i) [C(k+2i-1,k+1) f_{k+2i-2}(∂B) - C(k+2i,k+1) f_{k+2i-1}(int B)]`.
///
/// Requires `n - k` even and `k <= n`; `k = n` gives the empty sum.
pub fn theorem1_residual(
    k: usize,
    interior: &FVector,
    boundary: &FVector,
    n: usize,
    table: &GenocchiTable,
) -> Result<ExactRat, VerifyError> {
    check_parity(k, n)?;
    let (bd_sum, int_sum) = genocchi_sums(k, interior, boundary, n, table)?;
    Ok(f(interior, k) - (bd_sum - int_sum))
}

/// `f_k(int B) + f_k(∂B)/2 + sum_{i=1}^{n-k-1} ((-1)^{n+k+i}/2) C(k+1+i,k+1) f_{k+i}(int B)`.
pub fn klain_residual(
    k: usize,
    interior: &FVector,
    boundary: &FVector,
    n: usize,
) -> Result<ExactRat, VerifyError> {
    check_parity(k, n)?;
    if k + 2 > n {
        return Err(VerifyError::KOutOfRange { n, k });
    }
    let mut acc = f(interior, k) + f(boundary, k) / rat(2);
    for i in 1..n - k {
        let term = c(k + 1 + i, k + 1) * f(interior, k + i) / rat(2);
        if (n + k + i).is_multiple_of(2) {
            acc += term;
        } else {
            acc -= term;
        }
    }
    Ok(acc)
}

/// Boundary sum minus interior sum of the Genocchi identity, valid when `f_k(int B) = 0`.
pub fn no_interior_faces_residual(
    k: usize,
    interior: &FVector,
    boundary: &FVector,
    n: usize,
    table: &GenocchiTable,
) -> Result<ExactRat, VerifyError> {
    check_parity(k, n)?;
    if !interior.get(k as i64).is_zero() {
        return Err(VerifyError::PreconditionViolated { k });
    }
    let (bd_sum, int_sum) = genocchi_sums(k, interior, boundary, n, table)?;
    Ok(bd_sum - int_sum)
}

/// Checks `C(k+2i-1, k+1) = C(k+2i-1, 2i-2)` and `C(k+2i, k+1) = C(k+2i, 2i-1)`.
pub fn binomial_symmetry_holds(k: usize, i: usize) -> bool {
    assert!(i >= 1);
    c(k + 2 * i - 1, k + 1) == c(k + 2 * i - 1, 2 * i - 2)
        && c(k + 2 * i, k + 1) == c(k + 2 * i, 2 * i - 1)
}

/// Largest `e` with `f_j(int B) = 0` for all `j <= e`, if `f_0(int B) = 0`.
pub fn interior_free_dimension(interior: &FVector) -> Option<usize> {
    (0..interior.n())
        .take_while(|&j| interior.get(j as i64).is_zero())
        .last()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResidualEntry {
    pub identity: Identity,
    pub k: usize,
    pub residual: ExactRat,
}

impl ResidualEntry {
    pub fn pass(&self) -> bool {
        self.residual.is_zero()
    }

    pub fn record(&self, n: usize) -> ResidualRecord {
        ResidualRecord {
            identity: self.identity,
            n,
            k: self.k,
            residual_numerator: self.residual.numer().to_string(),
            residual_denominator: self.residual.denom().to_string(),
            pass: self.pass(),
        }
    }
}

/// Wire form of one residual; exact integers are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ResidualRecord {
    pub identity: Identity,
    pub n: usize,
    pub k: usize,
    pub residual_numerator: String,
    pub residual_denominator: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub f_ball: FVector,
    pub f_boundary: FVector,
    pub f_interior: FVector,
    pub entries: Vec<ResidualEntry>,
    /// `k = n`, where the Genocchi identity holds with an empty sum.
    pub trivial_k: usize,
    /// Detected `e`; `None` if the ball has interior vertices.
    pub interior_free_up_to: Option<usize>,
    pub symmetry_checks: usize,
    pub symmetry_ok: bool,
}

impl VerificationReport {
    pub fn pass(&self) -> bool {
        self.symmetry_ok && self.entries.iter().all(ResidualEntry::pass)
    }

    pub fn entries_for(&self, identity: Identity) -> impl Iterator<Item = &ResidualEntry> + '_ {
        self.entries.iter().filter(move |e| e.identity == identity)
    }

    pub fn records(&self) -> Vec<ResidualRecord> {
        self.entries.iter().map(|e| e.record(self.n)).collect()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(out, "n = {}", self.n)?;
        writeln!(out, "f(B) = {}", self.f_ball)?;
        writeln!(out, "f(∂B) = {}", self.f_boundary)?;
        writeln!(out, "f(int B) = {}", self.f_interior)?;
        for e in &self.entries {
            writeln!(
                out,
                "{:<18} k={:<3} residual={:<8} {}",
                e.identity.name(),
                e.k,
                format_rational(&e.residual),
                if e.pass() { "ok" } else { "FAIL" }
            )?;
        }
        writeln!(out, "theorem1           k={:<3} trivial", self.trivial_k)?;
        write!(
            out,
            "binomial symmetry: {} checks {}",
            self.symmetry_checks,
            if self.symmetry_ok { "ok" } else { "FAIL" }
        )
    }
}

/// Runs every identity on a ball that passes [`ball_check`].
///
/// The table must cover `G_2..G_{2⌊n/2⌋}`.
pub fn verify_ball(
    complex: &Complex,
    table: &GenocchiTable,
) -> Result<VerificationReport, VerifyError> {
    let screen = ball_check(complex);
    if !screen.passes() {
        return Err(ComplexError::NotABall(screen).into());
    }
    let n = complex.n();
    let f_ball = f_vector(complex);
    let f_boundary = f_vector(&boundary_complex(complex)?);
    let f_interior = interior_from(&f_ball, &f_boundary);
    let e = interior_free_dimension(&f_interior);

    let mut entries = Vec::new();
    let mut symmetry_checks = 0;
    let mut symmetry_ok = true;
    let ks: Vec<usize> = (0..n.saturating_sub(1))
        .filter(|k| (n - k).is_multiple_of(2))
        .collect();
    for &k in &ks {
        for i in 1..=(n - k) / 2 {
            symmetry_checks += 1;
            symmetry_ok &= binomial_symmetry_holds(k, i);
        }
        entries.push(ResidualEntry {
            identity: Identity::Theorem1,
            k,
            residual: theorem1_residual(k, &f_interior, &f_boundary, n, table)?,
        });
    }
    for &k in &ks {
        entries.push(ResidualEntry {
            identity: Identity::Klain,
            k,
            residual: klain_residual(k, &f_interior, &f_boundary, n)?,
        });
    }
    if let Some(e) = e {
        for &k in ks.iter().filter(|&&k| k <= e) {
            entries.push(ResidualEntry {
                identity: Identity::NoInteriorFaces,
                k,
                residual: no_interior_faces_residual(k, &f_interior, &f_boundary, n, table)?,
            });
        }
    }
    Ok(VerificationReport {
        n,
        f_ball,
        f_boundary,
        f_interior,
        entries,
        trivial_k: n,
        interior_free_up_to: e,
        symmetry_checks,
        symmetry_ok,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{
        boundary_sphere, cone_over_boundary, simplex_ball, sphere_minus_facet, stacked_ball,
        SphereFamily,
    };
    use crate::number_theory::genocchi_by_recursion_even;

    fn fv(c: &[i64]) -> FVector {
        FVector::from_counts(c.iter().copied())
    }

    fn table() -> GenocchiTable {
        genocchi_by_recursion_even(10).unwrap()
    }

    #[test]
    fn theorem1_hand_examples() {
        let g = table();
        let r = theorem1_residual(1, &fv(&[0, 0, 1]), &fv(&[3, 3]), 3, &g).unwrap();
        assert!(r.is_zero());
        let r = theorem1_residual(1, &fv(&[0, 1, 2]), &fv(&[4, 4]), 3, &g).unwrap();
        assert!(r.is_zero());
        let r = theorem1_residual(0, &fv(&[1, 4, 6, 4]), &fv(&[4, 6, 4]), 4, &g).unwrap();
        assert!(r.is_zero());
        // k = n: empty sum, f_n(int) = 0
        let r = theorem1_residual(4, &fv(&[1, 4, 6, 4]), &fv(&[4, 6, 4]), 4, &g).unwrap();
        assert!(r.is_zero());
    }

    #[test]
    fn theorem1_detects_wrong_counts() {
        let g = table();
        let r = theorem1_residual(1, &fv(&[0, 2, 2]), &fv(&[4, 4]), 3, &g).unwrap();
        assert_eq!(r, rat(1));
    }

    #[test]
    fn theorem1_errors() {
        let g = table();
        assert_eq!(
            theorem1_residual(0, &fv(&[0, 0, 1]), &fv(&[3, 3]), 3, &g),
            Err(VerifyError::ParityError { n: 3, k: 0 })
        );
        let small = genocchi_by_recursion_even(1).unwrap();
        assert_eq!(
            theorem1_residual(0, &fv(&[0, 0, 0, 1]), &fv(&[4, 6, 4]), 4, &small),
            Err(VerifyError::InsufficientGenocchiTable {
                required: 4,
                available: 2
            })
        );
    }

    #[test]
    fn klain_hand_examples() {
        assert!(klain_residual(1, &fv(&[0, 0, 1]), &fv(&[3, 3]), 3)
            .unwrap()
            .is_zero());
        assert!(klain_residual(2, &fv(&[0, 0, 0, 1]), &fv(&[4, 6, 4]), 4)
            .unwrap()
            .is_zero());
        assert!(klain_residual(2, &fv(&[1, 4, 6, 4]), &fv(&[4, 6, 4]), 4)
            .unwrap()
            .is_zero());
        assert_eq!(
            klain_residual(0, &fv(&[0, 0, 1]), &fv(&[3, 3]), 3),
            Err(VerifyError::ParityError { n: 3, k: 0 })
        );
        assert_eq!(
            klain_residual(3, &fv(&[0, 0, 1]), &fv(&[3, 3]), 3),
            Err(VerifyError::KOutOfRange { n: 3, k: 3 })
        );
    }

    #[test]
    fn klain_uncorrected_sign_fails() {
        // With the extra -1 in the exponent the triangle does not balance.
        let (int, bd) = (fv(&[0, 0, 1]), fv(&[3, 3]));
        let wrong = f(&int, 1) + f(&bd, 1) / rat(2) + c(3, 2) * f(&int, 2) / rat(2);
        assert!(!wrong.is_zero());
        assert!(klain_residual(1, &int, &bd, 3).unwrap().is_zero());
    }

    #[test]
    fn no_interior_examples() {
        let g = table();
        let b = stacked_ball(4, 3, 1);
        let int = crate::simplicial::interior_f_vector(&b).unwrap();
        let bd = f_vector(&boundary_complex(&b).unwrap());
        assert!(no_interior_faces_residual(0, &int, &bd, 4, &g)
            .unwrap()
            .is_zero());

        let b = stacked_ball(5, 4, 1);
        let int = crate::simplicial::interior_f_vector(&b).unwrap();
        let bd = f_vector(&boundary_complex(&b).unwrap());
        assert!(no_interior_faces_residual(1, &int, &bd, 5, &g)
            .unwrap()
            .is_zero());

        assert!(
            no_interior_faces_residual(0, &fv(&[0, 0, 0, 1]), &fv(&[4, 6, 4]), 4, &g)
                .unwrap()
                .is_zero()
        );
        assert_eq!(
            no_interior_faces_residual(0, &fv(&[1, 4, 6, 4]), &fv(&[4, 6, 4]), 4, &g),
            Err(VerifyError::PreconditionViolated { k: 0 })
        );
    }

    #[test]
    fn verify_examples() {
        let g = table();
        let r = verify_ball(&simplex_ball(6), &g).unwrap();
        assert!(r.pass());
        let ks: Vec<usize> = r.entries_for(Identity::Theorem1).map(|e| e.k).collect();
        assert_eq!(ks, vec![0, 2, 4]);
        assert_eq!(r.trivial_k, 6);
        assert_eq!(r.interior_free_up_to, Some(4));

        assert!(verify_ball(&stacked_ball(4, 10, 7), &g).unwrap().pass());

        let b = sphere_minus_facet(&boundary_sphere(SphereFamily::CrossPolytope, 3)).unwrap();
        let r = verify_ball(&b, &g).unwrap();
        assert!(r.pass());
        assert_eq!(r.f_interior, fv(&[3, 9, 7]));
        let ks: Vec<usize> = r.entries_for(Identity::Theorem1).map(|e| e.k).collect();
        assert_eq!(ks, vec![1]);
        assert_eq!(r.interior_free_up_to, None);
    }

    #[test]
    fn verify_refuses_non_balls() {
        let g = table();
        let two = Complex::from_facets(vec![vec![1, 2, 3], vec![4, 5, 6]]).unwrap();
        assert!(matches!(
            verify_ball(&two, &g),
            Err(VerifyError::Complex(ComplexError::NotABall(_)))
        ));
        let sphere = boundary_sphere(SphereFamily::Simplex, 4);
        assert!(verify_ball(&sphere, &g).is_err());
    }

    #[test]
    fn cone_has_interior_vertex() {
        let g = table();
        let cone = cone_over_boundary(&boundary_sphere(SphereFamily::Simplex, 5)).unwrap();
        let r = verify_ball(&cone, &g).unwrap();
        assert!(r.pass());
        assert_eq!(r.interior_free_up_to, None);
        assert_eq!(r.entries_for(Identity::NoInteriorFaces).count(), 0);
    }

    #[test]
    fn records_use_decimal_strings() {
        let e = ResidualEntry {
            identity: Identity::Klain,
            k: 1,
            residual: ratio(-3, 6),
        };
        let json = serde_json::to_string(&e.record(3)).unwrap();
        assert_eq!(
            json,
            r#"{"identity":"klain","n":3,"k":1,"residual_numerator":"-1","residual_denominator":"2","pass":false}"#
        );
    }

    #[test]
    fn symmetry_self_test() {
        for k in 0..12 {
            for i in 1..8 {
                assert!(binomial_symmetry_holds(k, i));
            }
        }
    }
}
