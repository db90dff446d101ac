//! Pure simplicial complexes, their f-vectors, boundaries and interior face counts.
//!
//! A [`Complex`] is stored as its facet list. The full face poset is
//! enumerated on first use by expanding every facet into its nonempty
//! subsets and is cached behind a [`OnceLock`], so a complex can be shared
//! across threads and queried concurrently.
//!
//! The interior of a ball is never materialized as a complex; only its
//! f-vector `f(B) - f(∂B)` is computed.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::Zero;
use thiserror::Error;

use crate::arith::ExactInt;

/// Opaque vertex identifier.
pub type Vertex = u32;

/// Largest facet size accepted; face enumeration is `2^n` per facet.
pub const MAX_FACET_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("complex has no facets")]
    EmptyInput,
    #[error("facet {0} is empty")]
    EmptyFacet(usize),
    #[error("facets have mixed sizes {expected} and {found}")]
    NonPure { expected: usize, found: usize },
    #[error("facet {facet} repeats vertex {vertex}")]
    DuplicateVertexInFacet { facet: usize, vertex: Vertex },
    #[error("facets with {0} vertices exceed the limit of {MAX_FACET_VERTICES}")]
    FacetTooLarge(usize),
    #[error("ridge {0} lies in three or more facets")]
    RidgeOverflow(Face),
    #[error("every ridge lies in exactly two facets; the complex has no boundary")]
    NoBoundary,
    #[error("boundary needs facets of at least 2 vertices, got {0}")]
    DimensionTooLow(usize),
    #[error("complex failed the sphere screen")]
    SphereScreenFailed,
    #[error("complex failed the ball screen: {0}")]
    NotABall(BallCheckReport),
}

/// A simplex given by its strictly increasing vertex list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Sorts `vertices`; fails on a repeated vertex or an empty list.
    pub fn new(mut vertices: Vec<Vertex>) -> Result<Face, ComplexError> {
        if vertices.is_empty() {
            return Err(ComplexError::EmptyFacet(0));
        }
        vertices.sort_unstable();
        if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertexInFacet {
                facet: 0,
                vertex: w[0],
            });
        }
        Ok(Face(vertices))
    }

    // Caller guarantees sorted and duplicate free.
    pub(crate) fn from_sorted(vertices: Vec<Vertex>) -> Face {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Dimension, i.e. `len - 1`.
    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        self.0.iter().all(|v| other.contains(*v))
    }

    /// The codimension-one faces, i.e. `self` with one vertex dropped.
    pub fn ridges(&self) -> impl Iterator<Item = Face> + '_ {
        (0..self.0.len()).map(move |skip| {
            let mut v = self.0.clone();
            v.remove(skip);
            Face(v)
        })
    }

    /// `self ∪ {v}`.
    pub fn with_vertex(&self, v: Vertex) -> Face {
        let mut vertices = self.0.clone();
        if let Err(pos) = vertices.binary_search(&v) {
            vertices.insert(pos, v);
        }
        Face(vertices)
    }

    fn nonempty_subsets(&self) -> impl Iterator<Item = Vec<Vertex>> + '_ {
        let n = self.0.len();
        (1u64..(1u64 << n)).map(move |mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| self.0[i])
                .collect()
        })
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// A pure simplicial complex given by its facets, all with `n` vertices.
#[derive(Debug, Clone)]
pub struct Complex {
    n: usize,
    facets: Vec<Face>,
    faces: OnceLock<Vec<Vec<Face>>>,
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.facets == other.facets
    }
}

impl Eq for Complex {}

impl Complex {
    /// Normalizes raw facet lists: sorts each facet, then sorts and deduplicates the facet list.
    pub fn from_facets<I, F>(facet_lists: I) -> Result<Complex, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut facets = Vec::new();
        let mut n = None;
        for (idx, raw) in facet_lists.into_iter().enumerate() {
            let face = Face::new(raw.into_iter().collect()).map_err(|e| match e {
                ComplexError::EmptyFacet(_) => ComplexError::EmptyFacet(idx),
                ComplexError::DuplicateVertexInFacet { vertex, .. } => {
                    ComplexError::DuplicateVertexInFacet { facet: idx, vertex }
                }
                other => other,
            })?;
            match n {
                None => {
                    if face.len() > MAX_FACET_VERTICES {
                        return Err(ComplexError::FacetTooLarge(face.len()));
                    }
                    n = Some(face.len());
                }
                Some(expected) if expected != face.len() => {
                    return Err(ComplexError::NonPure {
                        expected,
                        found: face.len(),
                    })
                }
                Some(_) => {}
            }
            facets.push(face);
        }
        let n = n.ok_or(ComplexError::EmptyInput)?;
        Ok(Complex::from_faces(n, facets))
    }

    // Facets must be nonempty, equal-sized and individually valid.
    pub(crate) fn from_faces(n: usize, mut facets: Vec<Face>) -> Complex {
        facets.sort_unstable();
        facets.dedup();
        Complex {
            n,
            facets,
            faces: OnceLock::new(),
        }
    }

    /// Number of vertices per facet; the complex has dimension `n - 1`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.n - 1
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> BTreeSet<Vertex> {
        self.facets
            .iter()
            .flat_map(|f| f.0.iter().copied())
            .collect()
    }

    /// Smallest positive integer not used as a vertex.
    pub fn fresh_vertex(&self) -> Vertex {
        let used = self.vertices();
        (1..)
            .find(|v| !used.contains(v))
            .expect("finite vertex set")
    }

    /// All faces of dimension `dim`, sorted; empty outside `0..n`.
    pub fn faces_of_dim(&self, dim: usize) -> &[Face] {
        self.all_faces().get(dim).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Faces grouped by dimension `0..n`, each group sorted.
    pub fn all_faces(&self) -> &[Vec<Face>] {
        self.faces
            .get_or_init(|| enumerate_faces(self.n, &self.facets))
    }

    /// Applies a vertex relabeling, which must be injective on the vertex set.
    pub fn relabel(&self, map: impl Fn(Vertex) -> Vertex) -> Complex {
        let facets = self
            .facets
            .iter()
            .map(|f| {
                let mut v: Vec<Vertex> = f.0.iter().map(|&x| map(x)).collect();
                v.sort_unstable();
                Face(v)
            })
            .collect();
        Complex::from_faces(self.n, facets)
    }

    /// Facet lists as plain vectors.
    pub fn facet_lists(&self) -> Vec<Vec<Vertex>> {
        self.facets.iter().map(|f| f.0.clone()).collect()
    }

    fn ridge_incidence(&self) -> HashMap<Face, Vec<usize>> {
        let mut map: HashMap<Face, Vec<usize>> = HashMap::new();
        for (idx, facet) in self.facets.iter().enumerate() {
            for ridge in facet.ridges() {
                map.entry(ridge).or_default().push(idx);
            }
        }
        map
    }

    fn boundary_ridges(incidence: &HashMap<Face, Vec<usize>>) -> Vec<Face> {
        let mut ridges: Vec<Face> = incidence
            .iter()
            .filter(|(_, owners)| owners.len() == 1)
            .map(|(r, _)| r.clone())
            .collect();
        ridges.sort_unstable();
        ridges
    }

    fn dual_graph_connected(&self, incidence: &HashMap<Face, Vec<usize>>) -> bool {
        let mut parent: Vec<usize> = (0..self.facets.len()).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for owners in incidence.values() {
            for pair in owners.windows(2) {
                let (a, b) = (find(&mut parent, pair[0]), find(&mut parent, pair[1]));
                parent[a] = b;
            }
        }
        let root = find(&mut parent, 0);
        (0..self.facets.len()).all(|i| find(&mut parent, i) == root)
    }

    /// True when the complex passes the necessary conditions for an `(n-1)`-sphere:
    /// every ridge in exactly two facets, connected dual graph, and Euler
    /// characteristic `1 + (-1)^(n-1)`. A 0-sphere is exactly two points.
    pub fn is_sphere_candidate(&self) -> bool {
        if self.n == 1 {
            return self.facets.len() == 2;
        }
        let incidence = self.ridge_incidence();
        let sphere_chi = if (self.n - 1).is_multiple_of(2) { 2 } else { 0 };
        incidence.values().all(|o| o.len() == 2)
            && self.dual_graph_connected(&incidence)
            && f_vector(self).euler_characteristic() == ExactInt::from(sphere_chi)
    }
}

fn enumerate_faces(n: usize, facets: &[Face]) -> Vec<Vec<Face>> {
    let mut by_dim: Vec<HashSet<Vec<Vertex>>> = vec![HashSet::new(); n];
    for facet in facets {
        for subset in facet.nonempty_subsets() {
            by_dim[subset.len() - 1].insert(subset);
        }
    }
    by_dim
        .into_iter()
        .map(|set| {
            let mut faces: Vec<Face> = set.into_iter().map(Face).collect();
            faces.sort_unstable();
            faces
        })
        .collect()
}

/// Face counts `f_0..f_{n-1}`; reads outside that range are 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FVector {
    n: usize,
    counts: Vec<ExactInt>,
}

impl FVector {
    /// `counts[d]` is the number of `d`-faces; `n` is the length of the vector.
    pub fn new(counts: Vec<ExactInt>) -> FVector {
        FVector {
            n: counts.len(),
            counts,
        }
    }

    pub fn from_counts<T: Into<ExactInt>>(counts: impl IntoIterator<Item = T>) -> FVector {
        FVector::new(counts.into_iter().map(Into::into).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `f_dim`, or 0 when `dim` is negative or at least `n`.
    pub fn get(&self, dim: i64) -> ExactInt {
        if dim < 0 {
            return ExactInt::zero();
        }
        self.counts
            .get(dim as usize)
            .cloned()
            .unwrap_or_else(ExactInt::zero)
    }

    pub fn counts(&self) -> &[ExactInt] {
        &self.counts
    }

    /// `sum_i (-1)^i f_i`.
    pub fn euler_characteristic(&self) -> ExactInt {
        self.counts
            .iter()
            .enumerate()
            .fold(
                ExactInt::zero(),
                |acc, (i, c)| {
                    if i % 2 == 0 {
                        acc + c
                    } else {
                        acc - c
                    }
                },
            )
    }
}

impl fmt::Display for FVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Number of distinct `i`-faces for `i = 0..n-1`.
pub fn f_vector(complex: &Complex) -> FVector {
    FVector::new(
        complex
            .all_faces()
            .iter()
            .map(|faces| ExactInt::from(faces.len()))
            .collect(),
    )
}

/// The pure `(n-2)`-complex of ridges lying in exactly one facet.
pub fn boundary_complex(complex: &Complex) -> Result<Complex, ComplexError> {
    if complex.n < 2 {
        return Err(ComplexError::DimensionTooLow(complex.n));
    }
    let incidence = complex.ridge_incidence();
    if let Some(bad) = incidence
        .iter()
        .filter(|(_, owners)| owners.len() > 2)
        .map(|(r, _)| r)
        .min()
    {
        return Err(ComplexError::RidgeOverflow(bad.clone()));
    }
    let ridges = Complex::boundary_ridges(&incidence);
    if ridges.is_empty() {
        return Err(ComplexError::NoBoundary);
    }
    Ok(Complex::from_faces(complex.n - 1, ridges))
}

/// `f(C) - f(∂C)` componentwise, with `f_{n-1}(∂C) = 0`.
pub fn interior_f_vector(complex: &Complex) -> Result<FVector, ComplexError> {
    let boundary = boundary_complex(complex)?;
    Ok(interior_from(&f_vector(complex), &f_vector(&boundary)))
}

pub(crate) fn interior_from(total: &FVector, boundary: &FVector) -> FVector {
    FVector::new(
        (0..total.n() as i64)
            .map(|d| total.get(d) - boundary.get(d))
            .collect(),
    )
}

/// Necessary conditions for a simplicial `(n-1)`-ball. Never a proof of ball-ness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallCheckReport {
    pub n: usize,
    pub is_pure: bool,
    /// Every ridge lies in at most two facets.
    pub ridge_incidence_ok: bool,
    /// Some ridge lies in exactly one facet.
    pub has_boundary: bool,
    pub dual_graph_connected: bool,
    pub euler_char_ball: ExactInt,
    pub euler_char_boundary: ExactInt,
}

impl BallCheckReport {
    /// Euler characteristic of an `(n-2)`-sphere, `1 + (-1)^n`.
    pub fn expected_boundary_euler(&self) -> ExactInt {
        ExactInt::from(if self.n.is_multiple_of(2) { 2 } else { 0 })
    }

    /// All flags hold and both Euler characteristics match a ball.
    pub fn passes(&self) -> bool {
        self.is_pure
            && self.ridge_incidence_ok
            && self.has_boundary
            && self.dual_graph_connected
            && self.euler_char_ball == ExactInt::from(1)
            && self.euler_char_boundary == self.expected_boundary_euler()
    }
}

impl fmt::Display for BallCheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "pure={} ridges<=2={} boundary={} connected={} chi(B)={} chi(dB)={} (want 1, {})",
            self.is_pure,
            self.ridge_incidence_ok,
            self.has_boundary,
            self.dual_graph_connected,
            self.euler_char_ball,
            self.euler_char_boundary,
            self.expected_boundary_euler()
        )
    }
}

pub fn ball_check(complex: &Complex) -> BallCheckReport {
    let incidence = complex.ridge_incidence();
    let ridges = Complex::boundary_ridges(&incidence);
    // Boundary faces of every dimension, excluding the empty face (n = 1 case).
    let boundary_faces = enumerate_faces(
        complex.n - 1,
        &ridges
            .into_iter()
            .filter(|r| !r.is_empty())
            .collect::<Vec<_>>(),
    );
    let boundary_f = FVector::new(
        boundary_faces
            .iter()
            .map(|faces| ExactInt::from(faces.len()))
            .collect(),
    );
    BallCheckReport {
        n: complex.n,
        is_pure: complex.facets.iter().all(|f| f.len() == complex.n),
        ridge_incidence_ok: incidence.values().all(|o| o.len() <= 2),
        has_boundary: incidence.values().any(|o| o.len() == 1),
        dual_graph_connected: complex.dual_graph_connected(&incidence),
        euler_char_ball: f_vector(complex).euler_characteristic(),
        euler_char_boundary: boundary_f.euler_characteristic(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(facets: &[&[Vertex]]) -> Complex {
        Complex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    fn fv(c: &[i64]) -> FVector {
        FVector::from_counts(c.iter().copied())
    }

    fn tetra_boundary() -> Complex {
        complex(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]])
    }

    fn tetra_cone() -> Complex {
        complex(&[&[0, 1, 2, 3], &[0, 1, 2, 4], &[0, 1, 3, 4], &[0, 2, 3, 4]])
    }

    #[test]
    fn from_facets_normalizes() {
        let c = complex(&[&[3, 2, 1]]);
        assert_eq!(c.n(), 3);
        assert_eq!(c.facet_lists(), vec![vec![1, 2, 3]]);
        let c = complex(&[&[2, 3, 4], &[1, 2, 3], &[3, 2, 1]]);
        assert_eq!(c.facet_lists(), vec![vec![1, 2, 3], vec![2, 3, 4]]);
    }

    #[test]
    fn from_facets_errors() {
        let none: Vec<Vec<Vertex>> = vec![];
        assert_eq!(Complex::from_facets(none), Err(ComplexError::EmptyInput));
        assert_eq!(
            Complex::from_facets(vec![vec![1, 2], vec![1, 2, 3]]),
            Err(ComplexError::NonPure {
                expected: 2,
                found: 3
            })
        );
        assert_eq!(
            Complex::from_facets(vec![vec![1, 2], vec![3, 3]]),
            Err(ComplexError::DuplicateVertexInFacet {
                facet: 1,
                vertex: 3
            })
        );
        assert_eq!(
            Complex::from_facets(vec![vec![1, 2], vec![]]),
            Err(ComplexError::EmptyFacet(1))
        );
        assert_eq!(
            Complex::from_facets(vec![(0..21).collect::<Vec<_>>()]),
            Err(ComplexError::FacetTooLarge(21))
        );
    }

    #[test]
    fn f_vectors() {
        assert_eq!(f_vector(&complex(&[&[1, 2, 3]])), fv(&[3, 3, 1]));
        assert_eq!(
            f_vector(&complex(&[&[1, 2, 3], &[2, 3, 4]])),
            fv(&[4, 5, 2])
        );
        assert_eq!(f_vector(&tetra_cone()), fv(&[5, 10, 10, 4]));
    }

    #[test]
    fn fvector_out_of_range_reads() {
        let f = fv(&[3, 3, 1]);
        assert_eq!(f.get(-1), ExactInt::zero());
        assert_eq!(f.get(3), ExactInt::zero());
        assert_eq!(f.get(1), ExactInt::from(3));
    }

    #[test]
    fn boundaries() {
        let b = boundary_complex(&complex(&[&[1, 2, 3]])).unwrap();
        assert_eq!(b.facet_lists(), vec![vec![1, 2], vec![1, 3], vec![2, 3]]);
        let b = boundary_complex(&complex(&[&[1, 2, 3], &[2, 3, 4]])).unwrap();
        assert_eq!(
            b.facet_lists(),
            vec![vec![1, 2], vec![1, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(
            boundary_complex(&tetra_boundary()),
            Err(ComplexError::NoBoundary)
        );
    }

    #[test]
    fn boundary_errors() {
        let fan3 = complex(&[&[1, 2, 3], &[1, 2, 4], &[1, 2, 5]]);
        assert_eq!(
            boundary_complex(&fan3),
            Err(ComplexError::RidgeOverflow(Face(vec![1, 2])))
        );
        assert_eq!(
            boundary_complex(&complex(&[&[7]])),
            Err(ComplexError::DimensionTooLow(1))
        );
    }

    #[test]
    fn interior_vectors() {
        assert_eq!(
            interior_f_vector(&complex(&[&[1, 2, 3]])).unwrap(),
            fv(&[0, 0, 1])
        );
        assert_eq!(
            interior_f_vector(&complex(&[&[1, 2, 3], &[2, 3, 4]])).unwrap(),
            fv(&[0, 1, 2])
        );
        assert_eq!(interior_f_vector(&tetra_cone()).unwrap(), fv(&[1, 4, 6, 4]));
    }

    #[test]
    fn ball_checks() {
        let r = ball_check(&complex(&[&[1, 2, 3]]));
        assert!(r.is_pure && r.ridge_incidence_ok && r.has_boundary && r.dual_graph_connected);
        assert_eq!(r.euler_char_ball, ExactInt::from(1));
        assert_eq!(r.euler_char_boundary, ExactInt::from(0));
        assert!(r.passes());

        let r = ball_check(&tetra_cone());
        assert_eq!(r.euler_char_ball, ExactInt::from(1));
        assert_eq!(r.euler_char_boundary, ExactInt::from(2));
        assert!(r.passes());

        let r = ball_check(&tetra_boundary());
        assert!(!r.has_boundary);
        assert!(!r.passes());
    }

    #[test]
    fn disjoint_triangles_fail_screen() {
        let r = ball_check(&complex(&[&[1, 2, 3], &[4, 5, 6]]));
        assert!(!r.dual_graph_connected);
        assert!(!r.passes());
    }

    #[test]
    fn point_is_a_ball() {
        let r = ball_check(&complex(&[&[4]]));
        assert!(r.passes(), "{r}");
    }

    #[test]
    fn sphere_screen() {
        assert!(tetra_boundary().is_sphere_candidate());
        assert!(complex(&[&[1, 2], &[1, 3], &[2, 3]]).is_sphere_candidate());
        assert!(complex(&[&[1], &[2]]).is_sphere_candidate());
        assert!(!complex(&[&[1, 2, 3]]).is_sphere_candidate());
        // two disjoint triangles boundaries: ridges fine, graph disconnected
        assert!(
            !complex(&[&[1, 2], &[1, 3], &[2, 3], &[4, 5], &[4, 6], &[5, 6]]).is_sphere_candidate()
        );
    }

    #[test]
    fn fresh_vertex_fills_gaps() {
        assert_eq!(complex(&[&[2, 3]]).fresh_vertex(), 1);
        assert_eq!(complex(&[&[1, 2]]).fresh_vertex(), 3);
    }

    #[test]
    fn cache_is_shareable() {
        let c = tetra_cone();
        std::thread::scope(|s| {
            for _ in 0..4 {
                s.spawn(|| assert_eq!(f_vector(&c), fv(&[5, 10, 10, 4])));
            }
        });
    }
}
