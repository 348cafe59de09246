//! Fixtures shared by the criterion benches.

use flagpath::{GeneratorSpec, SimplicialComplex};

/// Complexes the benches run on, smallest first.
pub const FIXTURES: &[&str] = &["cross:5", "sd(cross:3)", "sd(simplexbd:4)", "sd(susp(cycle:6))"];

pub fn build(spec: &str) -> SimplicialComplex {
    spec.parse::<GeneratorSpec>()
        .and_then(|s| s.build())
        .unwrap_or_else(|e| panic!("bad fixture {spec}: {e}"))
}

pub fn fixtures() -> Vec<(&'static str, SimplicialComplex)> {
    FIXTURES.iter().map(|s| (*s, build(s))).collect()
}
