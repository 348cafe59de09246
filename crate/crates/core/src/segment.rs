//! Combinatorial segments: non-revisiting facet paths in flag normal complexes.
//!
//! A segment is built in two parts.
//!
//! *Facet to vertex set.* Starting from a facet `X` and a target vertex set
//! `Y`, pick the pearl `x_0` of `X` closest to `Y` and walk a shortest vertex
//! path `x_0, x_1, ..., x_l` toward `Y`. Each step from `x_i` to `x_{i+1}` is
//! realised by a facet path inside the link of `x_i` (one dimension lower,
//! built recursively) that is then coned back over `x_i`. The target of the
//! recursive call is the descent set `T`: neighbours of `x_i` one step closer
//! to the current target set `Y_i`, where `Y_{i+1} = p(x_{i+1}, Y_i)`.
//!
//! *Facet to facet.* Run the first part toward the vertices of `Y`, then
//! bridge the last facet to `Y` through the link of a shared vertex.
//!
//! Every choice the construction leaves open is resolved by the smallest
//! label (or lexicographically smallest facet), so outputs are deterministic.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, VertexId};
use crate::graph::{self, GraphError, Skeleton};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("complex is not flag")]
    NotFlag,
    #[error("complex is not normal")]
    NotNormal,
    #[error("1-skeleton is disconnected between the start facet and the target set")]
    Disconnected,
    #[error("target set is empty or contains vertices outside the complex")]
    TargetOutsideComplex,
    #[error("{0} is not a facet of the complex")]
    FacetsNotInComplex(Face),
    #[error("no step of the path meets the target set")]
    TargetNeverMet,
    #[error("sequence is not a facet path of the complex")]
    InvalidPath,
    #[error("last step of the first path differs from first step of the second")]
    EndpointMismatch,
    #[error("a facet path needs at least one step")]
    EmptyPath,
    #[error("recursion depth {depth} exceeds the limit {limit}")]
    DepthExceeded { depth: usize, limit: usize },
    #[error("necklace did not reach the target after {0} pearls")]
    NoProgress(usize),
    #[error(transparent)]
    Complex(#[from] ComplexError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A non-empty sequence of facets. Validity against a complex is checked
/// separately by [`is_facet_path`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FacetPath {
    steps: Vec<Face>,
}

impl FacetPath {
    pub fn new(steps: Vec<Face>) -> Result<Self, SegmentError> {
        if steps.is_empty() {
            return Err(SegmentError::EmptyPath);
        }
        Ok(FacetPath { steps })
    }

    /// The length-zero path at `facet`.
    pub fn trivial(facet: Face) -> Self {
        FacetPath { steps: vec![facet] }
    }

    pub fn steps(&self) -> &[Face] {
        &self.steps
    }

    /// Number of steps taken, one less than the number of facets.
    /// A path always holds at least one facet, so there is no `is_empty`.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.steps.len() - 1
    }

    pub fn is_trivial(&self) -> bool {
        self.steps.len() == 1
    }

    pub fn first(&self) -> &Face {
        &self.steps[0]
    }

    pub fn last(&self) -> &Face {
        self.steps.last().expect("facet path is non-empty")
    }

    /// `self` followed by `other`, sharing the common endpoint once.
    pub fn concat(&self, other: &FacetPath) -> Result<FacetPath, SegmentError> {
        let mut out = self.clone();
        out.extend(other)?;
        Ok(out)
    }

    fn extend(&mut self, other: &FacetPath) -> Result<(), SegmentError> {
        if self.last() != other.first() {
            return Err(SegmentError::EndpointMismatch);
        }
        self.steps.extend_from_slice(&other.steps[1..]);
        Ok(())
    }

    /// Prefix ending at the first step that meets `targets`.
    pub fn truncate_at_target(&self, targets: &BTreeSet<VertexId>) -> Result<FacetPath, SegmentError> {
        let cut = self
            .steps
            .iter()
            .position(|f| f.meets(targets))
            .ok_or(SegmentError::TargetNeverMet)?;
        Ok(FacetPath {
            steps: self.steps[..=cut].to_vec(),
        })
    }

    /// Cone every step over `v`.
    pub fn join_vertex(&self, v: VertexId) -> Result<FacetPath, ComplexError> {
        if self.steps.iter().any(|f| f.contains(v)) {
            return Err(ComplexError::VertexCollision(v));
        }
        Ok(FacetPath {
            steps: self.steps.iter().map(|f| f.with_vertex(v)).collect(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SegmentKind {
    ToVertexSet,
    BetweenFacets,
}

/// Diagnostic record of one segment construction.
///
/// For `dim >= 1`, block `i` of the path (steps `breakpoints[i]` through
/// `breakpoints[i + 1]`) is the cone over pearl `pearls[i]` of the path
/// recorded in `children[i]`, which lives in the link of that pearl. A
/// facet-to-vertex-set trace has one more pearl than children; a
/// facet-to-facet trace ends with the bridging block, so both have the same
/// count. `targets[i]` is the target set `Y_i` in force at pearl `i`.
///
/// In dimension 0 there are no pearls; `breakpoints` holds the two ends.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegmentTrace {
    pub kind: SegmentKind,
    pub dim: isize,
    pub pearls: Vec<VertexId>,
    pub breakpoints: Vec<usize>,
    pub targets: Vec<BTreeSet<VertexId>>,
    pub children: Vec<SegmentTrace>,
}

impl SegmentTrace {
    /// Necklace length `l`.
    pub fn necklace_len(&self) -> usize {
        self.pearls.len().saturating_sub(1)
    }

    /// Deepest recursion level below this one.
    pub fn depth(&self) -> usize {
        self.children.iter().map(|c| c.depth() + 1).max().unwrap_or(0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Segment {
    pub path: FacetPath,
    pub trace: SegmentTrace,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SegmentOptions {
    /// Verify flagness and normality before building.
    pub precheck: bool,
}

impl Default for SegmentOptions {
    fn default() -> Self {
        SegmentOptions { precheck: true }
    }
}

/// Facet path from `from` to a facet meeting `targets`, meeting `targets`
/// only in its last facet.
pub fn segment_to_vertex_set(
    c: &SimplicialComplex,
    from: &Face,
    targets: &BTreeSet<VertexId>,
) -> Result<Segment, SegmentError> {
    segment_to_vertex_set_with(c, from, targets, SegmentOptions::default())
}

pub fn segment_to_vertex_set_with(
    c: &SimplicialComplex,
    from: &Face,
    targets: &BTreeSet<VertexId>,
    opts: SegmentOptions,
) -> Result<Segment, SegmentError> {
    check_inputs(c, from, opts)?;
    if targets.is_empty() || !targets.iter().all(|&v| c.has_vertex(v)) {
        return Err(SegmentError::TargetOutsideComplex);
    }
    Builder::new(c).to_vertex_set(c, from, targets, 0)
}

/// Non-revisiting facet path from `from` to `to`.
pub fn segment_between_facets(c: &SimplicialComplex, from: &Face, to: &Face) -> Result<Segment, SegmentError> {
    segment_between_facets_with(c, from, to, SegmentOptions::default())
}

pub fn segment_between_facets_with(
    c: &SimplicialComplex,
    from: &Face,
    to: &Face,
    opts: SegmentOptions,
) -> Result<Segment, SegmentError> {
    check_inputs(c, from, opts)?;
    if !c.is_facet(to) {
        return Err(SegmentError::FacetsNotInComplex(to.clone()));
    }
    Builder::new(c).between_facets(c, from, to, 0)
}

fn check_inputs(c: &SimplicialComplex, from: &Face, opts: SegmentOptions) -> Result<(), SegmentError> {
    if !c.is_facet(from) {
        return Err(SegmentError::FacetsNotInComplex(from.clone()));
    }
    if opts.precheck {
        if !c.is_flag() {
            return Err(SegmentError::NotFlag);
        }
        if !graph::is_normal(c) {
            return Err(SegmentError::NotNormal);
        }
    }
    Ok(())
}

/// Recursion guard: each level works in a link one dimension lower, so the
/// depth never exceeds `d + 1` on well-formed input.
struct Builder {
    depth_limit: usize,
}

impl Builder {
    fn new(c: &SimplicialComplex) -> Self {
        Builder {
            depth_limit: c.facet_size(),
        }
    }

    fn check_depth(&self, depth: usize) -> Result<(), SegmentError> {
        if depth > self.depth_limit {
            return Err(SegmentError::DepthExceeded {
                depth,
                limit: self.depth_limit,
            });
        }
        Ok(())
    }

    fn to_vertex_set(
        &self,
        c: &SimplicialComplex,
        from: &Face,
        targets: &BTreeSet<VertexId>,
        depth: usize,
    ) -> Result<Segment, SegmentError> {
        self.check_depth(depth)?;
        if c.dim() <= 0 {
            return point_segment(c, from, targets);
        }

        let skeleton = Skeleton::new(c);
        let to_targets = skeleton.distances_to(targets).map_err(|_| SegmentError::TargetOutsideComplex)?;
        let (_, x0) = from
            .vertices()
            .iter()
            .filter_map(|&v| to_targets.get(&v).map(|d| (d, v)))
            .min()
            .ok_or(SegmentError::Disconnected)?;
        let mut current = skeleton.nearest_targets(x0, targets)?;

        let mut path = FacetPath::trivial(from.clone());
        let mut pearls = vec![x0];
        let mut breakpoints = vec![0];
        let mut target_sets = vec![current.clone()];
        let mut children = Vec::new();

        while !path.last().meets(targets) {
            if pearls.len() > c.n() {
                return Err(SegmentError::NoProgress(pearls.len()));
            }
            let pearl = *pearls.last().unwrap();
            let descent = skeleton.descent_directions(pearl, &current)?;

            let pearl_face = Face::vertex(pearl);
            let link = c.link(&pearl_face)?;
            let local_start = path.last().without_vertex(pearl);
            let sub = self.to_vertex_set(&link, &local_start, &descent, depth + 1)?;
            let lifted = sub.path.truncate_at_target(&descent)?.join_vertex(pearl)?;
            path.extend(&lifted)?;

            let next = *lifted
                .last()
                .vertices()
                .iter()
                .find(|v| descent.contains(v))
                .expect("truncated path ends on the target set");
            current = skeleton.nearest_targets(next, &current)?;

            breakpoints.push(path.len());
            pearls.push(next);
            target_sets.push(current.clone());
            children.push(sub.trace);
        }

        Ok(Segment {
            path,
            trace: SegmentTrace {
                kind: SegmentKind::ToVertexSet,
                dim: c.dim(),
                pearls,
                breakpoints,
                targets: target_sets,
                children,
            },
        })
    }

    fn between_facets(
        &self,
        c: &SimplicialComplex,
        from: &Face,
        to: &Face,
        depth: usize,
    ) -> Result<Segment, SegmentError> {
        self.check_depth(depth)?;
        let to_vertices: BTreeSet<VertexId> = to.vertices().iter().copied().collect();
        let Segment { mut path, mut trace } = self.to_vertex_set(c, from, &to_vertices, depth)?;
        trace.kind = SegmentKind::BetweenFacets;
        if c.dim() <= 0 {
            return Ok(Segment { path, trace });
        }

        let bridge = path
            .last()
            .intersection(to)
            .min_vertex()
            .expect("first part ends on a facet meeting the target");
        // The last pearl already is the smallest shared vertex whenever l > 0,
        // and x_0 is when l = 0.
        debug_assert_eq!(trace.pearls.last(), Some(&bridge));
        if let Some(last) = trace.pearls.last_mut() {
            *last = bridge;
        }

        let bridge_face = Face::vertex(bridge);
        let link = c.link(&bridge_face)?;
        let sub = self.between_facets(
            &link,
            &path.last().without_vertex(bridge),
            &to.without_vertex(bridge),
            depth + 1,
        )?;
        path.extend(&sub.path.join_vertex(bridge)?)?;
        trace.breakpoints.push(path.len());
        trace.children.push(sub.trace);
        Ok(Segment { path, trace })
    }
}

/// Dimension 0 (and the void complex): stay put if `from` already meets
/// the targets, otherwise jump to the smallest facet that does.
fn point_segment(c: &SimplicialComplex, from: &Face, targets: &BTreeSet<VertexId>) -> Result<Segment, SegmentError> {
    let path = if from.meets(targets) {
        FacetPath::trivial(from.clone())
    } else {
        let hit = c
            .facets()
            .iter()
            .find(|f| f.meets(targets))
            .ok_or(SegmentError::TargetOutsideComplex)?;
        FacetPath::new(vec![from.clone(), hit.clone()])?
    };
    Ok(Segment {
        trace: SegmentTrace {
            kind: SegmentKind::ToVertexSet,
            dim: c.dim(),
            pearls: Vec::new(),
            breakpoints: vec![0, path.len()],
            targets: vec![targets.clone()],
            children: Vec::new(),
        },
        path,
    })
}

/// Every step is a facet and consecutive steps are distinct facets sharing
/// a ridge (`d` common vertices).
pub fn is_facet_path(c: &SimplicialComplex, steps: &[Face]) -> bool {
    let ridge = c.facet_size().saturating_sub(1);
    !steps.is_empty()
        && steps.iter().all(|f| c.is_facet(f))
        && steps
            .windows(2)
            .all(|w| w[0] != w[1] && w[0].intersection_len(&w[1]) == ridge)
}

/// A vertex that the path leaves and later re-enters: `vertex` lies in
/// steps `enter` and `reenter` but not in step `gap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RevisitWitness {
    pub vertex: VertexId,
    pub enter: usize,
    pub gap: usize,
    pub reenter: usize,
}

/// First revisit found, scanning vertices in label order.
///
/// In a pure complex the facets of `St(v)` are exactly the facets containing
/// `v`, so the path is non-revisiting iff for each vertex the steps
/// containing it form one contiguous run.
pub fn find_revisit(c: &SimplicialComplex, path: &FacetPath) -> Result<Option<RevisitWitness>, SegmentError> {
    if !is_facet_path(c, path.steps()) {
        return Err(SegmentError::InvalidPath);
    }
    let mut last_seen: HashMap<VertexId, usize> = HashMap::new();
    let mut witnesses: Vec<RevisitWitness> = Vec::new();
    for (k, step) in path.steps().iter().enumerate() {
        for &v in step.vertices() {
            if let Some(&prev) = last_seen.get(&v) {
                if prev + 1 < k && !witnesses.iter().any(|w| w.vertex == v) {
                    witnesses.push(RevisitWitness {
                        vertex: v,
                        enter: prev,
                        gap: prev + 1,
                        reenter: k,
                    });
                }
            }
            last_seen.insert(v, k);
        }
    }
    Ok(witnesses.into_iter().min_by_key(|w| w.vertex))
}

pub fn is_non_revisiting(c: &SimplicialComplex, path: &FacetPath) -> Result<bool, SegmentError> {
    Ok(find_revisit(c, path)?.is_none())
}
