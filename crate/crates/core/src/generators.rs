//! Deterministic test complexes and the textual generator specs that name them.
//!
//! Spec grammar, as accepted on the command line:
//!
//! ```text
//! spec := "cross:" k | "simplexbd:" k | "simplex:" k | "cycle:" m
//!       | "susp(" spec ")" | "sd(" spec ")" | "clique(" spec ")"
//!       | "wedge(" spec "," spec ")"
//! ```
//!
//! `clique(S)` is the clique complex of the 1-skeleton of `S`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::complex::{ComplexError, Face, SimplicialComplex, VertexId};
use crate::graph::{skeleton_graph, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeneratorError {
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(isize, isize),
    #[error("maximal cliques have different sizes ({0} and {1})")]
    NotPure(usize, usize),
    #[error("bad generator spec {spec:?}: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn complex<I>(facets: I) -> SimplicialComplex
where
    I: IntoIterator<Item = Vec<VertexId>>,
{
    SimplicialComplex::from_facets(facets).expect("generator facets are pure and non-empty")
}

/// Boundary of the `k`-dimensional cross-polytope: vertices `1..=2k` in
/// antipodal pairs `{2i-1, 2i}`, one facet per transversal.
pub fn cross_polytope_boundary(k: u32) -> Result<SimplicialComplex, GeneratorError> {
    if !(1..=20).contains(&k) {
        return Err(GeneratorError::BadParameter(format!("cross-polytope needs 1 <= k <= 20, got {k}")));
    }
    let facets = (0u32..(1 << k)).map(|mask| {
        (0..k)
            .map(|i| 2 * i + 1 + ((mask >> i) & 1))
            .collect::<Vec<_>>()
    });
    Ok(complex(facets))
}

/// All `k`-subsets of `{1, ..., k+1}`: the boundary of a `k`-simplex.
pub fn simplex_boundary(k: u32) -> Result<SimplicialComplex, GeneratorError> {
    if !(2..=20).contains(&k) {
        return Err(GeneratorError::BadParameter(format!("simplex boundary needs 2 <= k <= 20, got {k}")));
    }
    let all: Vec<VertexId> = (1..=k + 1).collect();
    Ok(complex(all.iter().map(|&skip| all.iter().copied().filter(|&v| v != skip).collect())))
}

/// A single facet `{1, ..., k}`.
pub fn simplex(k: u32) -> Result<SimplicialComplex, GeneratorError> {
    if !(1..=30).contains(&k) {
        return Err(GeneratorError::BadParameter(format!("simplex needs 1 <= k <= 30, got {k}")));
    }
    Ok(complex([(1..=k).collect()]))
}

/// The `m`-cycle with edges `{i, i+1}` and `{m, 1}`.
pub fn cycle(m: u32) -> Result<SimplicialComplex, GeneratorError> {
    if m < 3 {
        return Err(GeneratorError::BadParameter(format!("cycle needs m >= 3, got {m}")));
    }
    Ok(complex((1..=m).map(|i| vec![i, i % m + 1])))
}

/// Relabels vertices to `offset + 1, offset + 2, ...` preserving order.
fn relabel_dense(c: &SimplicialComplex, offset: VertexId) -> (SimplicialComplex, BTreeMap<VertexId, VertexId>) {
    let map: BTreeMap<VertexId, VertexId> = c
        .vertices()
        .iter()
        .enumerate()
        .map(|(i, &v)| (v, offset + i as VertexId + 1))
        .collect();
    (relabel(c, &map), map)
}

fn relabel(c: &SimplicialComplex, map: &BTreeMap<VertexId, VertexId>) -> SimplicialComplex {
    complex(
        c.facets()
            .iter()
            .map(|f| f.vertices().iter().map(|v| map[v]).collect()),
    )
}

/// Double cone: relabel densely to `1..=n`, then join each facet with the
/// apex `n + 1` and separately with the apex `n + 2`.
pub fn suspension(c: &SimplicialComplex) -> SimplicialComplex {
    let (base, _) = relabel_dense(c, 0);
    let n = base.n() as VertexId;
    let (north, south) = (n + 1, n + 2);
    complex(base.facets().iter().flat_map(|f| {
        [north, south].map(|apex| f.with_vertex(apex).vertices().to_vec())
    }))
}

/// Barycentric subdivision together with the face each new vertex stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subdivision {
    pub complex: SimplicialComplex,
    /// New vertex label to the face of the original complex it subdivides.
    pub labels: BTreeMap<VertexId, Face>,
}

/// Vertices are the non-empty faces, labelled `1, 2, ...` in order of
/// (size, lexicographic vertex list); facets are the maximal chains of faces.
pub fn barycentric_subdivision(c: &SimplicialComplex) -> Subdivision {
    let mut faces: Vec<Face> = c.faces().into_iter().filter(|f| !f.is_empty()).collect();
    faces.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let label_of: BTreeMap<&Face, VertexId> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (f, i as VertexId + 1))
        .collect();

    let mut chains = Vec::new();
    for facet in c.facets() {
        for order in permutations(facet.vertices()) {
            let mut chain = Vec::with_capacity(order.len());
            let mut prefix = Face::empty();
            for v in order {
                prefix = prefix.with_vertex(v);
                chain.push(label_of[&prefix]);
            }
            chains.push(chain);
        }
    }

    let labels = faces
        .iter()
        .map(|f| (label_of[f], f.clone()))
        .collect();
    Subdivision {
        complex: complex(chains),
        labels,
    }
}

fn permutations(items: &[VertexId]) -> Vec<Vec<VertexId>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for (i, &head) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in permutations(&rest) {
            tail.insert(0, head);
            out.push(tail);
        }
    }
    out
}

/// Glues two complexes at one vertex. The first is relabelled to `1..=n1`;
/// the smallest vertex of the second becomes `1` and the rest follow from
/// `n1 + 1`.
///
/// Dimension must be at least 2: a 1-dimensional wedge is still normal,
/// since every edge at the wedge point shares the ridge made of that point.
pub fn wedge_at_vertex(a: &SimplicialComplex, b: &SimplicialComplex) -> Result<SimplicialComplex, GeneratorError> {
    if a.dim() != b.dim() {
        return Err(GeneratorError::DimensionMismatch(a.dim(), b.dim()));
    }
    if a.dim() < 2 {
        return Err(GeneratorError::BadParameter("wedge needs dimension >= 2".into()));
    }
    let (left, _) = relabel_dense(a, 0);
    let n1 = left.n() as VertexId;
    let mut map = BTreeMap::new();
    for (i, &v) in b.vertices().iter().enumerate() {
        map.insert(v, if i == 0 { 1 } else { n1 + i as VertexId });
    }
    let right = relabel(b, &map);
    Ok(complex(
        left.facets()
            .iter()
            .chain(right.facets())
            .map(|f| f.vertices().to_vec()),
    ))
}

/// Complex whose facets are the maximal cliques of `g`.
pub fn clique_complex(g: &Graph<VertexId>) -> Result<SimplicialComplex, GeneratorError> {
    let cliques = maximal_cliques(g);
    if cliques.is_empty() {
        return Err(ComplexError::EmptyInput.into());
    }
    let size = cliques[0].len();
    if let Some(other) = cliques.iter().find(|c| c.len() != size) {
        return Err(GeneratorError::NotPure(size, other.len()));
    }
    Ok(SimplicialComplex::from_facets(cliques)?)
}

/// Bron–Kerbosch with pivoting.
pub fn maximal_cliques(g: &Graph<VertexId>) -> Vec<Vec<VertexId>> {
    fn expand(
        g: &Graph<VertexId>,
        r: &mut Vec<VertexId>,
        mut p: Vec<VertexId>,
        mut x: Vec<VertexId>,
        out: &mut Vec<Vec<VertexId>>,
    ) {
        if p.is_empty() {
            if x.is_empty() {
                let mut clique = r.clone();
                clique.sort_unstable();
                out.push(clique);
            }
            return;
        }
        let pivot = *p
            .iter()
            .chain(x.iter())
            .max_by_key(|&&u| p.iter().filter(|&&v| g.has_edge(&u, &v)).count())
            .unwrap();
        let candidates: Vec<VertexId> = p.iter().copied().filter(|v| !g.has_edge(&pivot, v)).collect();
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|w| g.has_edge(&v, w)).collect();
            let nx = x.iter().copied().filter(|w| g.has_edge(&v, w)).collect();
            expand(g, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }

    let mut out = Vec::new();
    expand(g, &mut Vec::new(), g.nodes().to_vec(), Vec::new(), &mut out);
    out.sort();
    out
}

/// A named construction from the test corpus.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GeneratorSpec {
    Cross(u32),
    SimplexBoundary(u32),
    Simplex(u32),
    Cycle(u32),
    Suspension(Box<GeneratorSpec>),
    Subdivision(Box<GeneratorSpec>),
    Wedge(Box<GeneratorSpec>, Box<GeneratorSpec>),
    Clique(Box<GeneratorSpec>),
}

impl GeneratorSpec {
    pub fn build(&self) -> Result<SimplicialComplex, GeneratorError> {
        match self {
            GeneratorSpec::Cross(k) => cross_polytope_boundary(*k),
            GeneratorSpec::SimplexBoundary(k) => simplex_boundary(*k),
            GeneratorSpec::Simplex(k) => simplex(*k),
            GeneratorSpec::Cycle(m) => cycle(*m),
            GeneratorSpec::Suspension(inner) => Ok(suspension(&inner.build()?)),
            GeneratorSpec::Subdivision(inner) => Ok(barycentric_subdivision(&inner.build()?).complex),
            GeneratorSpec::Wedge(a, b) => wedge_at_vertex(&a.build()?, &b.build()?),
            GeneratorSpec::Clique(inner) => clique_complex(&skeleton_graph(&inner.build()?)),
        }
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GeneratorSpec::Cross(k) => write!(f, "cross:{k}"),
            GeneratorSpec::SimplexBoundary(k) => write!(f, "simplexbd:{k}"),
            GeneratorSpec::Simplex(k) => write!(f, "simplex:{k}"),
            GeneratorSpec::Cycle(m) => write!(f, "cycle:{m}"),
            GeneratorSpec::Suspension(s) => write!(f, "susp({s})"),
            GeneratorSpec::Subdivision(s) => write!(f, "sd({s})"),
            GeneratorSpec::Wedge(a, b) => write!(f, "wedge({a},{b})"),
            GeneratorSpec::Clique(s) => write!(f, "clique({s})"),
        }
    }
}

impl FromStr for GeneratorSpec {
    type Err = GeneratorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut parser = SpecParser {
            src: &compact,
            pos: 0,
        };
        let spec = parser.spec().map_err(|reason| GeneratorError::BadSpec {
            spec: s.to_string(),
            reason,
        })?;
        if parser.pos != compact.len() {
            return Err(GeneratorError::BadSpec {
                spec: s.to_string(),
                reason: format!("unexpected trailing input at offset {}", parser.pos),
            });
        }
        Ok(spec)
    }
}

struct SpecParser<'a> {
    src: &'a str,
    pos: usize,
}

impl SpecParser<'_> {
    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn expect(&mut self, token: char) -> Result<(), String> {
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            Ok(())
        } else {
            Err(format!("expected {token:?} at offset {}", self.pos))
        }
    }

    fn name(&mut self) -> &str {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.rest().len());
        let start = self.pos;
        self.pos += len;
        &self.src[start..start + len]
    }

    fn number(&mut self) -> Result<u32, String> {
        let len = self
            .rest()
            .find(|c: char| !c.is_ascii_digit())
            .unwrap_or(self.rest().len());
        let digits = &self.rest()[..len];
        let value = digits
            .parse()
            .map_err(|_| format!("expected a number at offset {}", self.pos))?;
        self.pos += len;
        Ok(value)
    }

    fn nested(&mut self) -> Result<Box<GeneratorSpec>, String> {
        self.expect('(')?;
        let inner = self.spec()?;
        self.expect(')')?;
        Ok(Box::new(inner))
    }

    fn spec(&mut self) -> Result<GeneratorSpec, String> {
        let name = self.name().to_string();
        match name.as_str() {
            "cross" | "simplexbd" | "simplex" | "cycle" => {
                self.expect(':')?;
                let k = self.number()?;
                Ok(match name.as_str() {
                    "cross" => GeneratorSpec::Cross(k),
                    "simplexbd" => GeneratorSpec::SimplexBoundary(k),
                    "simplex" => GeneratorSpec::Simplex(k),
                    _ => GeneratorSpec::Cycle(k),
                })
            }
            "susp" => Ok(GeneratorSpec::Suspension(self.nested()?)),
            "sd" => Ok(GeneratorSpec::Subdivision(self.nested()?)),
            "clique" => Ok(GeneratorSpec::Clique(self.nested()?)),
            "wedge" => {
                self.expect('(')?;
                let a = self.spec()?;
                self.expect(',')?;
                let b = self.spec()?;
                self.expect(')')?;
                Ok(GeneratorSpec::Wedge(Box::new(a), Box::new(b)))
            }
            "" => Err(format!("expected a generator name at offset {}", self.pos)),
            other => Err(format!("unknown generator {other:?}")),
        }
    }
}
