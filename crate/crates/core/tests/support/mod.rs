//! Brute-force oracles shared by the integration and acceptance tests.
//!
//! Nothing here goes through the crate's graph module: distances come from
//! Floyd–Warshall over adjacency read straight off the facets, the dual
//! graph from pairwise facet intersections, and non-faces from a powerset
//! scan.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::rc::Rc;

use flagpath::segment::{SegmentKind, SegmentTrace};
use flagpath::{Face, GeneratorSpec, SimplicialComplex, VertexId};

pub const INF: usize = usize::MAX / 4;

/// Complexes every acceptance criterion runs on.
pub const CORPUS: &[&str] = &[
    "cross:2",
    "cross:3",
    "cross:4",
    "cross:5",
    "cycle:4",
    "cycle:5",
    "cycle:6",
    "cycle:7",
    "cycle:8",
    "sd(simplexbd:2)",
    "sd(simplexbd:3)",
    "sd(simplexbd:4)",
    "sd(cross:3)",
    "susp(cycle:4)",
];

pub fn build(spec: &str) -> SimplicialComplex {
    spec.parse::<GeneratorSpec>().unwrap().build().unwrap()
}

pub fn corpus() -> Vec<(&'static str, SimplicialComplex)> {
    CORPUS.iter().map(|s| (*s, build(s))).collect()
}

/// All-pairs vertex distances in the 1-skeleton.
#[derive(Debug, Clone)]
pub struct VertexMetric {
    index: HashMap<VertexId, usize>,
    dist: Vec<Vec<usize>>,
}

impl VertexMetric {
    pub fn new(c: &SimplicialComplex) -> Self {
        let vs = c.vertices();
        let index: HashMap<VertexId, usize> = vs.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let n = vs.len();
        let mut dist = vec![vec![INF; n]; n];
        for (i, row) in dist.iter_mut().enumerate() {
            row[i] = 0;
        }
        for f in c.facets() {
            for &a in f.vertices() {
                for &b in f.vertices() {
                    if a != b {
                        dist[index[&a]][index[&b]] = 1;
                    }
                }
            }
        }
        floyd_warshall(&mut dist);
        VertexMetric { index, dist }
    }

    pub fn d(&self, x: VertexId, y: VertexId) -> usize {
        self.dist[self.index[&x]][self.index[&y]]
    }

    pub fn d_set(&self, x: VertexId, ys: &BTreeSet<VertexId>) -> usize {
        ys.iter().map(|&y| self.d(x, y)).min().unwrap_or(INF)
    }

    pub fn nearest(&self, x: VertexId, ys: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
        let best = self.d_set(x, ys);
        ys.iter().copied().filter(|&y| self.d(x, y) == best).collect()
    }

    pub fn descent(&self, x: VertexId, ys: &BTreeSet<VertexId>) -> BTreeSet<VertexId> {
        let dx = self.d_set(x, ys);
        self.index
            .keys()
            .copied()
            .filter(|&y| self.d(x, y) == 1 && self.d_set(y, ys) + 1 == dx)
            .collect()
    }
}

pub fn floyd_warshall(dist: &mut [Vec<usize>]) {
    let n = dist.len();
    for k in 0..n {
        for i in 0..n {
            if dist[i][k] >= INF {
                continue;
            }
            for j in 0..n {
                let through = dist[i][k] + dist[k][j];
                if through < dist[i][j] {
                    dist[i][j] = through;
                }
            }
        }
    }
}

/// All-pairs facet distances; facets adjacent iff they share `d` vertices.
pub fn dual_distances(c: &SimplicialComplex) -> Vec<Vec<usize>> {
    let fs = c.facets();
    let m = fs.len();
    let ridge = c.facet_size() - 1;
    let mut dist = vec![vec![INF; m]; m];
    for i in 0..m {
        dist[i][i] = 0;
        for j in 0..m {
            if i != j && fs[i].intersection_len(&fs[j]) == ridge {
                dist[i][j] = 1;
            }
        }
    }
    floyd_warshall(&mut dist);
    dist
}

pub fn dual_diameter_oracle(c: &SimplicialComplex) -> Option<usize> {
    let d = dual_distances(c);
    let max = d.iter().flatten().copied().max().unwrap_or(0);
    (max < INF).then_some(max)
}

/// Powerset scan over the vertex set (n <= 16).
pub fn minimal_nonfaces_oracle(c: &SimplicialComplex) -> Vec<Face> {
    let vs = c.vertices();
    assert!(vs.len() <= 16);
    let subset = |mask: u32| -> Face { vs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &v)| v).collect() };
    let is_face: Vec<bool> = (0..1u32 << vs.len()).map(|m| c.contains_face(&subset(m))).collect();
    let mut out: Vec<Face> = (0..1u32 << vs.len())
        .filter(|&m| !is_face[m as usize])
        .filter(|&m| (0..vs.len()).filter(|i| m >> i & 1 == 1).all(|i| is_face[(m & !(1 << i)) as usize]))
        .map(subset)
        .collect();
    out.sort();
    out
}

/// Every clique of the 1-skeleton (by powerset scan) is a face.
pub fn flag_by_cliques(c: &SimplicialComplex) -> bool {
    let vs = c.vertices();
    assert!(vs.len() <= 16);
    let edge = |a: VertexId, b: VertexId| c.contains_face(&Face::from([a, b]));
    (0..1u32 << vs.len()).all(|m| {
        let members: Vec<VertexId> = vs.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).map(|(_, &v)| v).collect();
        let clique = members.iter().enumerate().all(|(i, &a)| members[i + 1..].iter().all(|&b| edge(a, b)));
        !clique || c.contains_face(&members.into_iter().collect())
    })
}

/// Non-revisiting per the star definition: whenever two steps lie in the
/// star of `v`, so does every step between them.
pub fn non_revisiting_oracle(steps: &[Face]) -> bool {
    let vertices: BTreeSet<VertexId> = steps.iter().flat_map(|f| f.vertices().iter().copied()).collect();
    vertices.iter().all(|&v| {
        let hits: Vec<usize> = (0..steps.len()).filter(|&k| steps[k].contains(v)).collect();
        let (lo, hi) = (hits[0], *hits.last().unwrap());
        (lo..=hi).all(|k| steps[k].contains(v))
    })
}

/// Recursive check of a segment trace against independently computed
/// distances. `steps` is the path the trace describes, `c` the complex it
/// lives in, and `target` the vertex set (facet-to-set) or facet
/// (facet-to-facet) it was built toward.
pub struct TraceChecker {
    metrics: HashMap<SimplicialComplex, Rc<VertexMetric>>,
    pub part_one_traces: usize,
}

impl TraceChecker {
    pub fn new() -> Self {
        TraceChecker {
            metrics: HashMap::new(),
            part_one_traces: 0,
        }
    }

    fn metric(&mut self, c: &SimplicialComplex) -> Rc<VertexMetric> {
        Rc::clone(self.metrics.entry(c.clone()).or_insert_with(|| Rc::new(VertexMetric::new(c))))
    }

    pub fn check(
        &mut self,
        c: &SimplicialComplex,
        steps: &[Face],
        trace: &SegmentTrace,
        targets: &BTreeSet<VertexId>,
        to_facet: Option<&Face>,
        depth: usize,
    ) -> Result<(), String> {
        if depth > 0 && c.dim() < 0 {
            return Err(format!("recursed into the void complex at depth {depth}"));
        }
        let last = steps.len() - 1;
        if trace.breakpoints.first() != Some(&0) || trace.breakpoints.last() != Some(&last) {
            return Err(format!("breakpoints {:?} do not span 0..={last}", trace.breakpoints));
        }
        if trace.breakpoints.windows(2).any(|w| w[0] > w[1]) {
            return Err("breakpoints decrease".into());
        }
        if trace.kind == SegmentKind::BetweenFacets && to_facet.is_none() {
            return Err("facet-to-facet trace without target facet".into());
        }
        if let Some(y) = to_facet {
            if &steps[last] != y {
                return Err("facet-to-facet segment ends at the wrong facet".into());
            }
        }

        // The first part meets the targets only in its last facet.
        let part_one_end = if to_facet.is_some() && c.dim() >= 1 {
            trace.breakpoints[trace.breakpoints.len() - 2]
        } else {
            last
        };
        let hit = steps.iter().position(|f| f.meets(targets));
        if hit != Some(part_one_end) {
            return Err(format!("targets first met at {hit:?}, expected {part_one_end}"));
        }

        if c.dim() <= 0 {
            if !trace.pearls.is_empty() || !trace.children.is_empty() {
                return Err("dimension 0 trace has pearls".into());
            }
            if steps.len() > 2 {
                return Err("dimension 0 path longer than one step".into());
            }
            return Ok(());
        }
        self.part_one_traces += 1;

        let metric = self.metric(c);
        let pearls = &trace.pearls;
        let ell = pearls.len() - 1;
        let expected_children = if to_facet.is_some() { ell + 1 } else { ell };
        if trace.children.len() != expected_children || trace.breakpoints.len() != expected_children + 1 {
            return Err(format!(
                "{} pearls, {} children, {} breakpoints",
                pearls.len(),
                trace.children.len(),
                trace.breakpoints.len()
            ));
        }

        // necklace geodesy
        let start_distance = steps[0].vertices().iter().map(|&v| metric.d_set(v, targets)).min().unwrap();
        if ell != start_distance {
            return Err(format!("necklace length {ell} but d(F0(X), Y) = {start_distance}"));
        }
        if !steps[0].contains(pearls[0]) || metric.d_set(pearls[0], targets) != start_distance {
            return Err("x_0 is not a closest vertex of X".into());
        }
        let mut current = metric.nearest(pearls[0], targets);
        if trace.targets[0] != current {
            return Err("Y_0 differs from p(x_0, Y)".into());
        }
        for i in 0..ell {
            let (x, next) = (pearls[i], pearls[i + 1]);
            if metric.d_set(next, &current) + 1 != metric.d_set(x, &current) {
                return Err(format!("pearl step {x} -> {next} does not descend toward Y_{i}"));
            }
            let descent = metric.descent(x, &current);
            let (lo, hi) = (trace.breakpoints[i], trace.breakpoints[i + 1]);
            let link = c.link(&Face::vertex(x)).map_err(|e| e.to_string())?;
            let sub = self.lower(&steps[lo..=hi], x)?;
            self.check(&link, &sub, &trace.children[i], &descent, None, depth + 1)?;
            current = metric.nearest(next, &current);
            if trace.targets[i + 1] != current {
                return Err(format!("Y_{} differs from p(x_{}, Y_{i})", i + 1, i + 1));
            }
        }

        if let Some(y) = to_facet {
            let x = pearls[ell];
            let (lo, hi) = (trace.breakpoints[ell], trace.breakpoints[ell + 1]);
            if !y.contains(x) || !steps[lo].contains(x) {
                return Err("bridging pearl not shared by X_l and Y".into());
            }
            let link = c.link(&Face::vertex(x)).map_err(|e| e.to_string())?;
            let sub = self.lower(&steps[lo..=hi], x)?;
            let y_link = y.without_vertex(x);
            let y_targets: BTreeSet<VertexId> = y_link.vertices().iter().copied().collect();
            self.check(&link, &sub, &trace.children[ell], &y_targets, Some(&y_link), depth + 1)?;
        }
        Ok(())
    }

    /// Removes the pearl from a block of the path, checking every step contains it.
    fn lower(&self, block: &[Face], pearl: VertexId) -> Result<Vec<Face>, String> {
        block
            .iter()
            .map(|f| {
                if f.contains(pearl) {
                    Ok(f.without_vertex(pearl))
                } else {
                    Err(format!("pearl {pearl} missing from step {f}"))
                }
            })
            .collect()
    }
}

pub fn vertex_set(f: &Face) -> BTreeSet<VertexId> {
    f.vertices().iter().copied().collect()
}
