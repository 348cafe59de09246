//! Pure abstract simplicial complexes stored as facet lists.
//!
//! A [`SimplicialComplex`] is immutable once built. Every face query
//! (membership, link, star, minimal non-faces) is answered from the facet
//! list; vertex labels are global and are never re-indexed, so a link keeps
//! the labels of the complex it was taken in.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Vertex label. Labels are global across links and stars.
pub type VertexId = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error("no facets given")]
    EmptyInput,
    #[error("facet {index} is empty")]
    EmptyFacet { index: usize },
    #[error("complex is not pure: facet {first} has {first_len} vertices but facet {second} has {second_len}")]
    NotPure {
        first: usize,
        first_len: usize,
        second: usize,
        second_len: usize,
    },
    #[error("face {0} is not a face of the complex")]
    FaceNotInComplex(Face),
    #[error("vertex {0} already appears in the complex")]
    VertexCollision(VertexId),
    #[error("invalid vertex label {0:?}")]
    BadVertex(String),
}

/// A face: a strictly increasing sequence of vertex labels.
///
/// The empty face is allowed and has dimension `-1`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<VertexId>);

impl Face {
    pub fn empty() -> Self {
        Face(Vec::new())
    }

    pub fn vertex(v: VertexId) -> Self {
        Face(vec![v])
    }

    /// Builds a face from vertices already sorted and free of duplicates.
    fn from_sorted(vertices: Vec<VertexId>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Face(vertices)
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn min_vertex(&self) -> Option<VertexId> {
        self.0.first().copied()
    }

    pub fn max_vertex(&self) -> Option<VertexId> {
        self.0.last().copied()
    }

    pub fn is_subset(&self, other: &Face) -> bool {
        if self.len() > other.len() {
            return false;
        }
        let mut rest = other.0.iter();
        'outer: for v in &self.0 {
            for w in rest.by_ref() {
                match w.cmp(v) {
                    std::cmp::Ordering::Less => continue,
                    std::cmp::Ordering::Equal => continue 'outer,
                    std::cmp::Ordering::Greater => return false,
                }
            }
            return false;
        }
        true
    }

    pub fn intersection_len(&self, other: &Face) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    pub fn intersection(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| other.contains(*v)).collect())
    }

    pub fn meets<'a>(&self, set: impl IntoIterator<Item = &'a VertexId>) -> bool {
        set.into_iter().any(|v| self.contains(*v))
    }

    pub fn union(&self, other: &Face) -> Face {
        self.0.iter().chain(other.0.iter()).copied().collect()
    }

    pub fn with_vertex(&self, v: VertexId) -> Face {
        match self.0.binary_search(&v) {
            Ok(_) => self.clone(),
            Err(pos) => {
                let mut vs = self.0.clone();
                vs.insert(pos, v);
                Face(vs)
            }
        }
    }

    pub fn without_vertex(&self, v: VertexId) -> Face {
        Face(self.0.iter().copied().filter(|&w| w != v).collect())
    }

    /// `self \ other`
    pub fn difference(&self, other: &Face) -> Face {
        Face(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// All subsets of this face, including the empty face and the face itself.
    pub fn subfaces(&self) -> impl Iterator<Item = Face> + '_ {
        assert!(self.len() < 32, "face too large to enumerate subfaces");
        (0u32..(1u32 << self.len())).map(move |mask| {
            Face(
                self.0
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, v)| *v)
                    .collect(),
            )
        })
    }
}

impl FromIterator<VertexId> for Face {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        let mut vs: Vec<VertexId> = iter.into_iter().collect();
        vs.sort_unstable();
        vs.dedup();
        Face(vs)
    }
}

impl<const N: usize> From<[VertexId; N]> for Face {
    fn from(vs: [VertexId; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl From<Vec<VertexId>> for Face {
    fn from(vs: Vec<VertexId>) -> Self {
        vs.into_iter().collect()
    }
}

/// Whitespace-separated labels, the same form used by the facet-list format.
impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("{}");
        }
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Face {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<VertexId>().map_err(|_| ComplexError::BadVertex(t.to_string())))
            .collect()
    }
}

/// A pure simplicial complex given by its facets.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<VertexId>,
    dim: isize,
}

impl SimplicialComplex {
    /// Canonicalizes the given vertex sets into a pure complex.
    ///
    /// Facets are sorted and deduplicated. Non-pure input is rejected.
    pub fn from_facets<I, F>(raw: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = VertexId>,
    {
        let faces: Vec<Face> = raw.into_iter().map(|f| f.into_iter().collect()).collect();
        if faces.is_empty() {
            return Err(ComplexError::EmptyInput);
        }
        if let Some(index) = faces.iter().position(Face::is_empty) {
            return Err(ComplexError::EmptyFacet { index });
        }
        let first_len = faces[0].len();
        if let Some(second) = faces.iter().position(|f| f.len() != first_len) {
            return Err(ComplexError::NotPure {
                first: 0,
                first_len,
                second,
                second_len: faces[second].len(),
            });
        }
        Ok(Self::from_pure_faces(faces))
    }

    /// The complex whose only facet is the empty face (dimension `-1`).
    pub fn void() -> Self {
        SimplicialComplex {
            facets: vec![Face::empty()],
            vertices: Vec::new(),
            dim: -1,
        }
    }

    /// Faces must be non-empty-list and all of one size.
    fn from_pure_faces(mut facets: Vec<Face>) -> Self {
        facets.sort_unstable();
        facets.dedup();
        let dim = facets[0].dim();
        let vertices: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
        SimplicialComplex {
            facets,
            vertices: vertices.into_iter().collect(),
            dim,
        }
    }

    /// Facets in lexicographic order.
    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_count(&self) -> usize {
        self.facets.len()
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn has_vertex(&self, v: VertexId) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Number of vertices, `n`.
    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    /// Common facet dimension, `d`.
    pub fn dim(&self) -> isize {
        self.dim
    }

    /// Number of vertices in each facet, `d + 1`.
    pub fn facet_size(&self) -> usize {
        (self.dim + 1) as usize
    }

    /// The Hirsch bound `n - (d + 1)`.
    pub fn hirsch_bound(&self) -> usize {
        self.n() - self.facet_size()
    }

    pub fn is_facet(&self, f: &Face) -> bool {
        self.facets.binary_search(f).is_ok()
    }

    pub fn contains_face(&self, sigma: &Face) -> bool {
        sigma.is_empty() || self.facets.iter().any(|f| sigma.is_subset(f))
    }

    /// Every face of the complex, the empty face included, in lexicographic order.
    pub fn faces(&self) -> Vec<Face> {
        let mut all: HashSet<Face> = HashSet::new();
        for f in &self.facets {
            all.extend(f.subfaces());
        }
        let mut out: Vec<Face> = all.into_iter().collect();
        out.sort_unstable();
        out
    }

    /// Facets `F \ sigma` for every facet `F` containing `sigma`.
    ///
    /// The link of a facet is [`SimplicialComplex::void`].
    pub fn link(&self, sigma: &Face) -> Result<SimplicialComplex, ComplexError> {
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .map(|f| f.difference(sigma))
            .collect();
        if facets.is_empty() {
            return Err(ComplexError::FaceNotInComplex(sigma.clone()));
        }
        if facets[0].is_empty() {
            return Ok(Self::void());
        }
        Ok(Self::from_pure_faces(facets))
    }

    /// Facets of the complex that contain `sigma`.
    pub fn star(&self, sigma: &Face) -> Result<SimplicialComplex, ComplexError> {
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|f| sigma.is_subset(f))
            .cloned()
            .collect();
        if facets.is_empty() {
            return Err(ComplexError::FaceNotInComplex(sigma.clone()));
        }
        Ok(SimplicialComplex {
            vertices: if sigma.is_empty() {
                self.vertices.clone()
            } else {
                let vs: BTreeSet<VertexId> = facets.iter().flat_map(|f| f.0.iter().copied()).collect();
                vs.into_iter().collect()
            },
            facets,
            dim: self.dim,
        })
    }

    /// Cone over the complex with apex `v`.
    pub fn join_with_vertex(&self, v: VertexId) -> Result<SimplicialComplex, ComplexError> {
        if self.has_vertex(v) {
            return Err(ComplexError::VertexCollision(v));
        }
        Ok(Self::from_pure_faces(
            self.facets.iter().map(|f| f.with_vertex(v)).collect(),
        ))
    }

    /// Inclusion-minimal vertex sets that are not faces.
    ///
    /// Candidates are grown one vertex at a time from existing faces: a
    /// minimal non-face `N` of size at least three is found exactly once, as
    /// `(N minus its largest vertex) + largest vertex`.
    pub fn minimal_nonfaces(&self) -> Vec<Face> {
        self.collect_minimal_nonfaces(false)
    }

    /// True iff every minimal non-face has exactly two vertices.
    pub fn is_flag(&self) -> bool {
        self.collect_minimal_nonfaces(true).is_empty()
    }

    fn collect_minimal_nonfaces(&self, stop_at_first_large: bool) -> Vec<Face> {
        let faces: HashSet<Face> = self.faces().into_iter().collect();
        let mut out = Vec::new();

        if !stop_at_first_large {
            for (i, &u) in self.vertices.iter().enumerate() {
                for &v in &self.vertices[i + 1..] {
                    let edge = Face::from_sorted(vec![u, v]);
                    if !faces.contains(&edge) {
                        out.push(edge);
                    }
                }
            }
        }

        let mut grown: Vec<&Face> = faces.iter().filter(|f| f.len() >= 2).collect();
        grown.sort_unstable();
        for sigma in grown {
            let top = sigma.max_vertex().expect("non-empty face");
            let start = self.vertices.partition_point(|&w| w <= top);
            for &v in &self.vertices[start..] {
                let candidate = sigma.with_vertex(v);
                if faces.contains(&candidate) {
                    continue;
                }
                let minimal = candidate
                    .vertices()
                    .iter()
                    .all(|&u| faces.contains(&candidate.without_vertex(u)));
                if minimal {
                    out.push(candidate);
                    if stop_at_first_large {
                        return out;
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, facet) in self.facets.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{{facet}}}")?;
        }
        write!(f, "]")
    }
}
