//! The built-in verification corpus and its JSON grid configuration.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::generators::{
    barycentric_subdivision, boundary_sphere, cone_over_boundary, simplex_ball, sphere_minus_facet,
    stacked_ball, SphereFamily,
};
use crate::number_theory::{genocchi_by_recursion_even, GenocchiTable};
use crate::simplicial::{Complex, MAX_FACET_VERTICES};
use crate::verifier::{verify_ball, VerificationReport, VerifyError};

const MAX_CROSS_POLYTOPE_N: usize = 12;
const MAX_STACKED_FACETS: usize = 100_000;
const MAX_BARYCENTRIC_N: usize = 7;

#[derive(Debug, Error)]
pub enum GridError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{family}: parameter {value} out of range {min}..={max}")]
    OutOfRange {
        family: &'static str,
        value: usize,
        min: usize,
        max: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StackedGrid {
    pub n: Vec<usize>,
    pub m: Vec<usize>,
    pub seeds: Vec<u64>,
}

/// Sphere parameters per family, as taken by [`boundary_sphere`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SphereGrid {
    #[serde(default)]
    pub simplex: Vec<usize>,
    #[serde(default)]
    pub cross_polytope: Vec<usize>,
}

/// Families and parameters of the corpus.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CorpusGrid {
    pub simplex: Vec<usize>,
    pub stacked: StackedGrid,
    pub cone: SphereGrid,
    pub sphere_minus_facet: SphereGrid,
    /// Every ball built above with at most this many vertices per facet is
    /// also subdivided once.
    pub barycentric_max_n: usize,
}

impl Default for CorpusGrid {
    fn default() -> Self {
        CorpusGrid {
            simplex: (2..=10).collect(),
            stacked: StackedGrid {
                n: (3..=7).collect(),
                m: vec![2, 5, 20],
                seeds: vec![1, 2, 3],
            },
            cone: SphereGrid {
                simplex: (3..=6).collect(),
                cross_polytope: (3..=6).collect(),
            },
            sphere_minus_facet: SphereGrid {
                simplex: (3..=6).collect(),
                cross_polytope: (3..=6).collect(),
            },
            barycentric_max_n: 4,
        }
    }
}

fn check(family: &'static str, value: usize, min: usize, max: usize) -> Result<(), GridError> {
    if (min..=max).contains(&value) {
        Ok(())
    } else {
        Err(GridError::OutOfRange {
            family,
            value,
            min,
            max,
        })
    }
}

impl CorpusGrid {
    pub fn from_json(input: &[u8]) -> Result<CorpusGrid, GridError> {
        let grid: CorpusGrid = serde_json::from_slice(input)?;
        grid.validate()?;
        Ok(grid)
    }

    pub fn validate(&self) -> Result<(), GridError> {
        for &n in &self.simplex {
            check("simplex", n, 2, MAX_FACET_VERTICES)?;
        }
        for &n in &self.stacked.n {
            check("stacked.n", n, 2, MAX_FACET_VERTICES)?;
        }
        for &m in &self.stacked.m {
            check("stacked.m", m, 1, MAX_STACKED_FACETS)?;
        }
        for spheres in [&self.cone, &self.sphere_minus_facet] {
            for &n in &spheres.simplex {
                check("simplex sphere", n, 2, MAX_FACET_VERTICES)?;
            }
            for &n in &spheres.cross_polytope {
                check("cross-polytope sphere", n, 2, MAX_CROSS_POLYTOPE_N)?;
            }
        }
        // cones add a vertex per facet
        for &n in self.cone.simplex.iter().chain(&self.cone.cross_polytope) {
            check("cone", n + 1, 2, MAX_FACET_VERTICES)?;
        }
        check(
            "barycentric_max_n",
            self.barycentric_max_n,
            0,
            MAX_BARYCENTRIC_N,
        )
    }
}

/// One named ball of the corpus.
#[derive(Debug, Clone)]
pub struct CorpusBall {
    pub name: String,
    pub family: &'static str,
    pub complex: Complex,
}

fn sphere_families(grid: &SphereGrid) -> impl Iterator<Item = (SphereFamily, usize)> + '_ {
    grid.simplex
        .iter()
        .map(|&n| (SphereFamily::Simplex, n))
        .chain(
            grid.cross_polytope
                .iter()
                .map(|&n| (SphereFamily::CrossPolytope, n)),
        )
}

/// Builds the corpus in a fixed order: simplices, stacked balls, cones,
/// spheres minus a facet, then subdivisions.
pub fn build_corpus(grid: &CorpusGrid) -> Vec<CorpusBall> {
    let mut balls = Vec::new();
    for &n in &grid.simplex {
        balls.push(CorpusBall {
            name: format!("simplex(n={n})"),
            family: "simplex",
            complex: simplex_ball(n),
        });
    }
    for &n in &grid.stacked.n {
        for &m in &grid.stacked.m {
            for &seed in &grid.stacked.seeds {
                balls.push(CorpusBall {
                    name: format!("stacked(n={n},m={m},seed={seed})"),
                    family: "stacked",
                    complex: stacked_ball(n, m, seed),
                });
            }
        }
    }
    for (family, n) in sphere_families(&grid.cone) {
        let sphere = boundary_sphere(family, n);
        balls.push(CorpusBall {
            name: format!("cone({family},n={n})"),
            family: "cone",
            complex: cone_over_boundary(&sphere).expect("standard spheres pass the screen"),
        });
    }
    for (family, n) in sphere_families(&grid.sphere_minus_facet) {
        let sphere = boundary_sphere(family, n);
        balls.push(CorpusBall {
            name: format!("sphere-minus-facet({family},n={n})"),
            family: "sphere-minus-facet",
            complex: sphere_minus_facet(&sphere).expect("standard spheres pass the screen"),
        });
    }
    let subdivided: Vec<CorpusBall> = balls
        .iter()
        .filter(|b| b.complex.n() <= grid.barycentric_max_n)
        .map(|b| CorpusBall {
            name: format!("barycentric({})", b.name),
            family: "barycentric",
            complex: barycentric_subdivision(&b.complex),
        })
        .collect();
    balls.extend(subdivided);
    balls
}

/// A Genocchi table large enough to verify every ball of the given sizes.
pub fn table_for(max_n: usize) -> GenocchiTable {
    genocchi_by_recursion_even((max_n / 2).max(1)).expect("recursion values are integral")
}

/// Verifies every ball in parallel; results stay in corpus order.
pub fn verify_corpus(balls: &[CorpusBall]) -> Vec<Result<VerificationReport, VerifyError>> {
    let max_n = balls.iter().map(|b| b.complex.n()).max().unwrap_or(1);
    let table = table_for(max_n);
    balls
        .par_iter()
        .map(|b| verify_ball(&b.complex, &table))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grid_validates_and_round_trips() {
        let grid = CorpusGrid::default();
        grid.validate().unwrap();
        let text = serde_json::to_vec(&grid).unwrap();
        assert_eq!(CorpusGrid::from_json(&text).unwrap(), grid);
    }

    #[test]
    fn rejects_bad_grids() {
        assert!(CorpusGrid::from_json(b"{}").is_err());
        let mut grid = CorpusGrid::default();
        grid.simplex.push(1);
        assert!(grid.validate().is_err());
        let mut grid = CorpusGrid::default();
        grid.cone.cross_polytope.push(13);
        assert!(grid.validate().is_err());
        let mut v = serde_json::to_value(CorpusGrid::default()).unwrap();
        v["surprise"] = serde_json::json!(1);
        assert!(CorpusGrid::from_json(v.to_string().as_bytes()).is_err());
    }

    #[test]
    fn default_corpus_shape() {
        let balls = build_corpus(&CorpusGrid::default());
        assert!(balls.len() >= 40);
        let families: std::collections::BTreeSet<_> = balls.iter().map(|b| b.family).collect();
        assert_eq!(families.len(), 5);
        let names: std::collections::HashSet<_> = balls.iter().map(|b| &b.name).collect();
        assert_eq!(names.len(), balls.len());
    }

    #[test]
    fn small_corpus_verifies() {
        let grid = CorpusGrid {
            simplex: vec![2, 3],
            stacked: StackedGrid {
                n: vec![3],
                m: vec![4],
                seeds: vec![1],
            },
            cone: SphereGrid {
                simplex: vec![3],
                cross_polytope: vec![],
            },
            sphere_minus_facet: SphereGrid {
                simplex: vec![],
                cross_polytope: vec![3],
            },
            barycentric_max_n: 3,
        };
        let balls = build_corpus(&grid);
        let reports = verify_corpus(&balls);
        assert_eq!(reports.len(), balls.len());
        assert!(reports.iter().all(|r| r.as_ref().unwrap().pass()));
    }
}
