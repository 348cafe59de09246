//! Non-revisiting facet paths in flag normal simplicial complexes.
//!
//! The crate builds the recursive *combinatorial segment* between any two
//! facets of a pure, flag, normal simplicial complex and checks that the
//! resulting facet path never re-enters the star of a vertex it has left.
//! Around that construction it provides the complex data model, graph
//! metrics on the 1-skeleton and the facet-ridge graph, deterministic
//! generators for test complexes, a facet-list file format, and a batch
//! audit that compares segment lengths and the dual diameter against the
//! Hirsch bound `n - (d + 1)`.
//!
//! ```
//! use flagpath::{generators, segment};
//!
//! let octahedron = generators::cross_polytope_boundary(3).unwrap();
//! let from = "1 3 5".parse().unwrap();
//! let to = "2 4 6".parse().unwrap();
//! let seg = segment::segment_between_facets(&octahedron, &from, &to).unwrap();
//! assert_eq!(seg.path.len(), 3);
//! assert!(segment::is_non_revisiting(&octahedron, &seg.path).unwrap());
//! ```

#![forbid(unsafe_code)]

pub mod audit;
pub mod complex;
pub mod generators;
pub mod graph;
pub mod io;
pub mod segment;

pub use audit::{AuditOptions, AuditReport, AuditStatus, PairSelection, Violation};
pub use complex::{ComplexError, Face, SimplicialComplex, VertexId};
pub use generators::{GeneratorError, GeneratorSpec};
pub use graph::{DistanceField, Graph, GraphError, HirschReport};
pub use io::{InputError, ParseError};
pub use segment::{FacetPath, RevisitWitness, Segment, SegmentError, SegmentKind, SegmentTrace};
