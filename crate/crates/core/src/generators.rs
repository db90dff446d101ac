//! Deterministic families of simplicial balls and spheres.
//!
//! Every constructor here yields a ball (or sphere) by construction and
//! assigns vertex identifiers deterministically, so the same parameters
//! always produce byte-identical facet lists.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::simplicial::{Complex, ComplexError, Face, Vertex};

/// The full `(n-1)`-simplex on vertices `1..=n`.
pub fn simplex_ball(n: usize) -> Complex {
    assert!(n >= 1, "simplex_ball needs n >= 1");
    Complex::from_faces(n, vec![Face::from_sorted((1..=n as Vertex).collect())])
}

/// 64-bit linear congruential generator (Knuth's MMIX constants).
///
/// `state' = state * 6364136223846793005 + 1442695040888963407 (mod 2^64)`;
/// each draw advances the state once and uses its upper 31 bits
/// (`state >> 33`). The initial state is the seed itself.
#[derive(Debug, Clone)]
pub struct Lcg {
    state: u64,
}

impl Lcg {
    pub const MULTIPLIER: u64 = 6_364_136_223_846_793_005;
    pub const INCREMENT: u64 = 1_442_695_040_888_963_407;

    pub fn new(seed: u64) -> Lcg {
        Lcg { state: seed }
    }

    pub fn next_u32(&mut self) -> u32 {
        self.state = self
            .state
            .wrapping_mul(Self::MULTIPLIER)
            .wrapping_add(Self::INCREMENT);
        (self.state >> 33) as u32
    }

    /// Uniform-ish index in `0..len` by reduction modulo `len`.
    pub fn index(&mut self, len: usize) -> usize {
        self.next_u32() as usize % len
    }
}

/// Stacked `(n-1)`-ball with `m` facets.
///
/// Starts from [`simplex_ball`] and repeatedly glues a new simplex onto a
/// boundary ridge. The ridge is chosen by [`Lcg::index`] from the boundary
/// ridges in lexicographic order; the new vertex is the smallest unused
/// positive integer.
pub fn stacked_ball(n: usize, m: usize, seed: u64) -> Complex {
    assert!(n >= 2 && m >= 1, "stacked_ball needs n >= 2 and m >= 1");
    let start = Face::from_sorted((1..=n as Vertex).collect());
    let mut incidence: BTreeMap<Face, u32> = start.ridges().map(|r| (r, 1)).collect();
    let mut facets = vec![start];
    let mut rng = Lcg::new(seed);
    for next_vertex in (n as Vertex + 1..).take(m - 1) {
        let boundary: Vec<&Face> = incidence
            .iter()
            .filter(|(_, &count)| count == 1)
            .map(|(r, _)| r)
            .collect();
        let ridge = boundary[rng.index(boundary.len())].clone();
        let facet = ridge.with_vertex(next_vertex);
        for r in facet.ridges() {
            *incidence.entry(r).or_insert(0) += 1;
        }
        facets.push(facet);
    }
    Complex::from_faces(n, facets)
}

/// Cone `apex * sphere` over a sphere candidate, with a fresh apex vertex.
///
/// The result is a ball with one more vertex per facet whose boundary is `sphere`.
pub fn cone_over_boundary(sphere: &Complex) -> Result<Complex, ComplexError> {
    if !sphere.is_sphere_candidate() {
        return Err(ComplexError::SphereScreenFailed);
    }
    let apex = sphere.fresh_vertex();
    let facets = sphere
        .facets()
        .iter()
        .map(|f| f.with_vertex(apex))
        .collect();
    Ok(Complex::from_faces(sphere.n() + 1, facets))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SphereFamily {
    /// Boundary of the `(n-1)`-simplex, an `(n-2)`-sphere on `n` vertices.
    Simplex,
    /// Boundary of the `n`-dimensional cross-polytope, an `(n-1)`-sphere on `2n` vertices.
    CrossPolytope,
}

impl fmt::Display for SphereFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SphereFamily::Simplex => "simplex",
            SphereFamily::CrossPolytope => "cross-polytope",
        })
    }
}

impl FromStr for SphereFamily {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "simplex" => Ok(SphereFamily::Simplex),
            "cross-polytope" | "cross_polytope" => Ok(SphereFamily::CrossPolytope),
            other => Err(format!("unknown sphere family `{other}`")),
        }
    }
}

/// Standard sphere of the given family; `n >= 2`.
///
/// Cross-polytope vertex pair `i` (1-based) is `{2i-1, 2i}`.
pub fn boundary_sphere(family: SphereFamily, n: usize) -> Complex {
    assert!(n >= 2, "boundary_sphere needs n >= 2");
    match family {
        SphereFamily::Simplex => {
            let simplex = Face::from_sorted((1..=n as Vertex).collect());
            Complex::from_faces(n - 1, simplex.ridges().collect())
        }
        SphereFamily::CrossPolytope => {
            let facets = (0u64..1 << n)
                .map(|signs| {
                    Face::from_sorted(
                        (0..n)
                            .map(|i| 2 * i as Vertex + 1 + ((signs >> i) & 1) as Vertex)
                            .collect(),
                    )
                })
                .collect();
            Complex::from_faces(n, facets)
        }
    }
}

/// Removes the lexicographically smallest facet from a sphere candidate.
pub fn sphere_minus_facet(sphere: &Complex) -> Result<Complex, ComplexError> {
    if !sphere.is_sphere_candidate() {
        return Err(ComplexError::SphereScreenFailed);
    }
    let facets = sphere.facets()[1..].to_vec();
    Ok(Complex::from_faces(sphere.n(), facets))
}

/// Barycentric subdivision.
///
/// New vertices are the faces of `complex`, numbered from 1 in order of
/// increasing dimension and then lexicographically. Facets are the full
/// flags `F_0 ⊂ F_1 ⊂ ... ⊂ F_{n-1}`.
pub fn barycentric_subdivision(complex: &Complex) -> Complex {
    let mut label: HashMap<&Face, Vertex> = HashMap::new();
    for face in complex.all_faces().iter().flatten() {
        let id = label.len() as Vertex + 1;
        label.insert(face, id);
    }
    let n = complex.n();
    let mut facets = Vec::new();
    for facet in complex.facets() {
        let mut order: Vec<Vertex> = facet.vertices().to_vec();
        for_each_permutation(&mut order, 0, &mut |perm| {
            let mut chain: Vec<Vertex> = (1..=n)
                .map(|len| {
                    let mut prefix = perm[..len].to_vec();
                    prefix.sort_unstable();
                    label[&Face::from_sorted(prefix)]
                })
                .collect();
            chain.sort_unstable();
            facets.push(Face::from_sorted(chain));
        });
    }
    Complex::from_faces(n, facets)
}

fn for_each_permutation(items: &mut [Vertex], start: usize, visit: &mut impl FnMut(&[Vertex])) {
    if start == items.len() {
        visit(items);
        return;
    }
    for i in start..items.len() {
        items.swap(start, i);
        for_each_permutation(items, start + 1, visit);
        items.swap(start, i);
    }
}
