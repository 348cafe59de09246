//! Graphs attached to a complex and the distance machinery built on them.
//!
//! Two graphs matter here: the 1-skeleton (vertices joined by edges of the
//! complex) and the facet-ridge graph, also called the dual graph (facets
//! joined when they share a ridge). Distances are unweighted BFS distances.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::hash::Hash;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{Face, SimplicialComplex, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("source set is empty")]
    EmptySourceSet,
    #[error("target set is empty")]
    EmptyTargetSet,
    #[error("vertex {0} is not in the complex")]
    UnknownVertex(VertexId),
    #[error("node is not in the graph")]
    UnknownNode,
    #[error("target set is unreachable from vertex {0}")]
    Unreachable(VertexId),
    #[error("vertex {0} already lies in the target set")]
    AlreadyAtTarget(VertexId),
    #[error("facet-ridge graph is disconnected")]
    DisconnectedDualGraph,
}

/// Simple undirected graph. Adjacency is symmetric and loop-free.
#[derive(Debug, Clone)]
pub struct Graph<N> {
    nodes: Vec<N>,
    index: HashMap<N, usize>,
    adjacency: Vec<Vec<usize>>,
}

impl<N: Clone + Eq + Hash + Ord> Graph<N> {
    /// Nodes are sorted and deduplicated; edge endpoints missing from
    /// `nodes` are added, self-loops and parallel edges are dropped.
    pub fn from_edges<I, E>(nodes: I, edges: E) -> Self
    where
        I: IntoIterator<Item = N>,
        E: IntoIterator<Item = (N, N)>,
    {
        let edges: Vec<(N, N)> = edges.into_iter().collect();
        let mut all: Vec<N> = nodes.into_iter().collect();
        all.extend(edges.iter().flat_map(|(a, b)| [a.clone(), b.clone()]));
        all.sort_unstable();
        all.dedup();
        let index: HashMap<N, usize> = all.iter().cloned().enumerate().map(|(i, n)| (n, i)).collect();
        let mut adjacency = vec![Vec::new(); all.len()];
        for (a, b) in &edges {
            let (i, j) = (index[a], index[b]);
            if i != j {
                adjacency[i].push(j);
                adjacency[j].push(i);
            }
        }
        for adj in &mut adjacency {
            adj.sort_unstable();
            adj.dedup();
        }
        Graph {
            nodes: all,
            index,
            adjacency,
        }
    }

    /// Sorted node list.
    pub fn nodes(&self) -> &[N] {
        &self.nodes
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn contains(&self, node: &N) -> bool {
        self.index.contains_key(node)
    }

    pub fn index_of(&self, node: &N) -> Option<usize> {
        self.index.get(node).copied()
    }

    pub fn neighbors<'a>(&'a self, node: &N) -> impl Iterator<Item = &'a N> + 'a {
        let adj: &[usize] = self.index.get(node).map_or(&[], |&i| &self.adjacency[i]);
        adj.iter().map(move |&j| &self.nodes[j])
    }

    pub fn degree(&self, node: &N) -> usize {
        self.index.get(node).map_or(0, |&i| self.adjacency[i].len())
    }

    pub fn has_edge(&self, a: &N, b: &N) -> bool {
        match (self.index.get(a), self.index.get(b)) {
            (Some(&i), Some(&j)) => self.adjacency[i].binary_search(&j).is_ok(),
            _ => false,
        }
    }

    /// Sorted edge list with `a < b`.
    pub fn edges(&self) -> Vec<(N, N)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (i, adj) in self.adjacency.iter().enumerate() {
            for &j in adj.iter().filter(|&&j| j > i) {
                out.push((self.nodes[i].clone(), self.nodes[j].clone()));
            }
        }
        out
    }

    /// Multi-source BFS: distance from every node to the nearest source.
    pub fn bfs_distances<'a, S>(&self, sources: S) -> Result<DistanceField<'_, N>, GraphError>
    where
        S: IntoIterator<Item = &'a N>,
        N: 'a,
    {
        let mut starts = Vec::new();
        for s in sources {
            starts.push(self.index_of(s).ok_or(GraphError::UnknownNode)?);
        }
        if starts.is_empty() {
            return Err(GraphError::EmptySourceSet);
        }
        Ok(DistanceField {
            graph: self,
            dist: self.bfs_from_indices(&starts),
        })
    }

    fn bfs_from_indices(&self, starts: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.nodes.len()];
        let mut queue = VecDeque::new();
        for &s in starts {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adjacency[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.nodes.is_empty() {
            return true;
        }
        self.bfs_from_indices(&[0]).iter().all(Option::is_some)
    }

    /// Connectivity of the subgraph induced on the nodes where `keep` is true.
    pub(crate) fn induced_connected(&self, keep: &[bool]) -> bool {
        let Some(start) = keep.iter().position(|&k| k) else {
            return true;
        };
        let mut seen = vec![false; self.nodes.len()];
        seen[start] = true;
        let mut stack = vec![start];
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adjacency[u] {
                if keep[w] && !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == keep.iter().filter(|&&k| k).count()
    }

    /// Longest shortest path, or `None` when disconnected. BFS runs from
    /// every node in parallel.
    pub fn diameter(&self) -> Option<usize>
    where
        N: Send + Sync,
    {
        (0..self.nodes.len())
            .into_par_iter()
            .map(|s| {
                self.bfs_from_indices(&[s])
                    .into_iter()
                    .try_fold(0, |acc, d| d.map(|d| acc.max(d)))
            })
            .try_reduce(|| 0, |a, b| Some(a.max(b)))
    }
}

/// Distances from a source set. `None` marks an unreachable node.
#[derive(Debug, Clone)]
pub struct DistanceField<'g, N> {
    graph: &'g Graph<N>,
    dist: Vec<Option<usize>>,
}

impl<'g, N: Clone + Eq + Hash + Ord> DistanceField<'g, N> {
    /// Distance to the nearest source; `None` if unreachable or not a node.
    pub fn get(&self, node: &N) -> Option<usize> {
        self.graph.index_of(node).and_then(|i| self.dist[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&'g N, Option<usize>)> + '_ {
        self.graph.nodes.iter().zip(self.dist.iter().copied())
    }

    /// Minimum distance over a set of nodes.
    pub fn min_over<'a, I>(&self, nodes: I) -> Option<usize>
    where
        I: IntoIterator<Item = &'a N>,
        N: 'a,
    {
        nodes.into_iter().filter_map(|n| self.get(n)).min()
    }
}

/// Nodes are the vertices; `{u, v}` is an edge iff it is a face.
pub fn skeleton_graph(c: &SimplicialComplex) -> Graph<VertexId> {
    let mut edges = Vec::new();
    for f in c.facets() {
        let vs = f.vertices();
        for (i, &u) in vs.iter().enumerate() {
            for &v in &vs[i + 1..] {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(c.vertices().iter().copied(), edges)
}

/// Facet-ridge graph: facets joined when they share `d` vertices.
///
/// For `d = 0` the shared ridge is the empty face, so the graph is complete.
pub fn dual_graph(c: &SimplicialComplex) -> Graph<Face> {
    let facets = c.facets();
    let mut by_ridge: HashMap<Face, Vec<usize>> = HashMap::new();
    for (i, f) in facets.iter().enumerate() {
        for &v in f.vertices() {
            by_ridge.entry(f.without_vertex(v)).or_default().push(i);
        }
    }
    let mut edges = Vec::new();
    for members in by_ridge.values() {
        for (k, &i) in members.iter().enumerate() {
            for &j in &members[k + 1..] {
                edges.push((facets[i].clone(), facets[j].clone()));
            }
        }
    }
    Graph::from_edges(facets.iter().cloned(), edges)
}

/// The 1-skeleton of a complex with the vertex-distance queries used by the
/// segment construction: `d(x, Y)`, the nearest targets `p(x, Y)`, and the
/// descent directions `T_x^Y`.
#[derive(Debug, Clone)]
pub struct Skeleton {
    graph: Graph<VertexId>,
}

impl Skeleton {
    pub fn new(c: &SimplicialComplex) -> Self {
        Skeleton {
            graph: skeleton_graph(c),
        }
    }

    pub fn graph(&self) -> &Graph<VertexId> {
        &self.graph
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if self.graph.contains(&v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    /// BFS distance field from the vertex set `targets`.
    pub fn distances_to(&self, targets: &BTreeSet<VertexId>) -> Result<DistanceField<'_, VertexId>, GraphError> {
        if targets.is_empty() {
            return Err(GraphError::EmptyTargetSet);
        }
        for &y in targets {
            self.check_vertex(y)?;
        }
        self.graph.bfs_distances(targets.iter())
    }

    /// Elements of `targets` closest to `x`.
    pub fn nearest_targets(&self, x: VertexId, targets: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, GraphError> {
        if targets.is_empty() {
            return Err(GraphError::EmptyTargetSet);
        }
        self.check_vertex(x)?;
        for &y in targets {
            self.check_vertex(y)?;
        }
        let from_x = self.graph.bfs_distances([x].iter())?;
        let best = from_x.min_over(targets.iter()).ok_or(GraphError::Unreachable(x))?;
        Ok(targets
            .iter()
            .copied()
            .filter(|y| from_x.get(y) == Some(best))
            .collect())
    }

    /// Neighbours `y` of `x` with `d(y, targets) + 1 = d(x, targets)`.
    pub fn descent_directions(&self, x: VertexId, targets: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, GraphError> {
        self.check_vertex(x)?;
        let field = self.distances_to(targets)?;
        match field.get(&x) {
            None => Err(GraphError::Unreachable(x)),
            Some(0) => Err(GraphError::AlreadyAtTarget(x)),
            Some(dx) => Ok(self
                .graph
                .neighbors(&x)
                .copied()
                .filter(|y| field.get(y) == Some(dx - 1))
                .collect()),
        }
    }
}

/// `p(x, Y)` in the 1-skeleton of `c`.
pub fn nearest_targets(c: &SimplicialComplex, x: VertexId, targets: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, GraphError> {
    Skeleton::new(c).nearest_targets(x, targets)
}

/// `T_x^Y` in the 1-skeleton of `c`.
pub fn descent_directions(c: &SimplicialComplex, x: VertexId, targets: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>, GraphError> {
    Skeleton::new(c).descent_directions(x, targets)
}

/// True iff the star of every face, the empty face included, has a
/// connected facet-ridge graph.
///
/// The dual graph of a star is the subgraph of the dual graph induced on
/// the facets containing the face, so one dual graph serves every face.
pub fn is_normal(c: &SimplicialComplex) -> bool {
    let dual = dual_graph(c);
    let facets = c.facets();
    c.faces().iter().all(|sigma| {
        let keep: Vec<bool> = facets.iter().map(|f| sigma.is_subset(f)).collect();
        dual.induced_connected(&keep)
    })
}

/// Diameter of the facet-ridge graph.
pub fn dual_diameter(c: &SimplicialComplex) -> Result<usize, GraphError> {
    dual_graph(c).diameter().ok_or(GraphError::DisconnectedDualGraph)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct HirschReport {
    pub bound: usize,
    pub diameter: usize,
    pub holds: bool,
}

/// Compares the dual diameter with `n - (d + 1)`.
pub fn hirsch_bound_holds(c: &SimplicialComplex) -> Result<HirschReport, GraphError> {
    let diameter = dual_diameter(c)?;
    let bound = c.hirsch_bound();
    Ok(HirschReport {
        bound,
        diameter,
        holds: diameter <= bound,
    })
}
