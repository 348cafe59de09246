//! Batch verification of segments over facet pairs of one complex.
//!
//! For every selected pair the audit builds the facet-to-facet segment and
//! checks that it starts and ends at the right facets, is a facet path,
//! never revisits a vertex star, and is no longer than `n - (d + 1)`. It also
//! compares the dual diameter with the same bound. Failures are collected
//! as [`Violation`]s rather than raised.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::graph::{dual_diameter, is_normal};
use crate::segment::{self, FacetPath, RevisitWitness, SegmentOptions};

/// Version tag written into every JSON report.
pub const SCHEMA_VERSION: &str = "flagpath.audit.v1";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairSelection {
    /// Every unordered pair of distinct facets, built from the smaller facet
    /// to the larger one.
    All,
    /// `count` ordered pairs of distinct facets drawn uniformly with
    /// replacement from a ChaCha8 stream seeded with `seed`.
    Sample { count: usize, seed: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AuditOptions {
    pub pairs: PairSelection,
    /// Worker threads for the pair loop; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions {
            pairs: PairSelection::All,
            jobs: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ViolationKind {
    ConstructionFailed { error: String },
    WrongEndpoints,
    InvalidPath,
    Revisits { witness: RevisitWitness },
    ExceedsBound { length: usize, bound: usize },
    DiameterExceedsBound { diameter: usize, bound: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub from: Option<Face>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub to: Option<Face>,
    #[serde(flatten)]
    pub kind: ViolationKind,
}

/// Field order here is the key order of the JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub schema: String,
    pub complex: String,
    pub n: usize,
    pub d: isize,
    pub facets: usize,
    pub flag: bool,
    pub normal: bool,
    pub bound: usize,
    pub diameter: Option<usize>,
    pub pairs_checked: usize,
    pub max_segment_length: usize,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditStatus {
    Pass,
    Violation,
    Precondition,
}

impl AuditStatus {
    /// 0 pass, 1 verified violation, 2 precondition failure.
    pub fn exit_code(self) -> i32 {
        match self {
            AuditStatus::Pass => 0,
            AuditStatus::Violation => 1,
            AuditStatus::Precondition => 2,
        }
    }
}

impl AuditReport {
    /// Flagness, normality and counts only; no pairs are checked.
    pub fn structural(name: &str, c: &SimplicialComplex) -> Self {
        AuditReport {
            schema: SCHEMA_VERSION.to_string(),
            complex: name.to_string(),
            n: c.n(),
            d: c.dim(),
            facets: c.facet_count(),
            flag: c.is_flag(),
            normal: is_normal(c),
            bound: c.hirsch_bound(),
            diameter: None,
            pairs_checked: 0,
            max_segment_length: 0,
            violations: Vec::new(),
        }
    }

    pub fn status(&self) -> AuditStatus {
        if !(self.flag && self.normal) {
            AuditStatus::Precondition
        } else if !self.violations.is_empty() {
            AuditStatus::Violation
        } else {
            AuditStatus::Pass
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

/// Everything wrong with `path` as a segment from `from` to `to`.
pub fn verify_segment(c: &SimplicialComplex, from: &Face, to: &Face, path: &FacetPath) -> Vec<ViolationKind> {
    let mut found = Vec::new();
    if path.first() != from || path.last() != to {
        found.push(ViolationKind::WrongEndpoints);
    }
    match segment::find_revisit(c, path) {
        Err(_) => found.push(ViolationKind::InvalidPath),
        Ok(Some(witness)) => found.push(ViolationKind::Revisits { witness }),
        Ok(None) => {}
    }
    let bound = c.hirsch_bound();
    if path.len() > bound {
        found.push(ViolationKind::ExceedsBound {
            length: path.len(),
            bound,
        });
    }
    found
}

/// Builds and verifies one segment; returns its length and any violations.
pub fn check_pair(c: &SimplicialComplex, from: &Face, to: &Face) -> (Option<usize>, Vec<ViolationKind>) {
    let opts = SegmentOptions { precheck: false };
    match segment::segment_between_facets_with(c, from, to, opts) {
        Ok(seg) => (Some(seg.path.len()), verify_segment(c, from, to, &seg.path)),
        Err(e) => (
            None,
            vec![ViolationKind::ConstructionFailed { error: e.to_string() }],
        ),
    }
}

/// Facet index pairs selected for an audit of a complex with `m` facets.
pub fn select_pairs(m: usize, selection: PairSelection) -> Vec<(usize, usize)> {
    match selection {
        PairSelection::All => (0..m)
            .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
            .collect(),
        PairSelection::Sample { count, seed } => {
            if m < 2 {
                return Vec::new();
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let m64 = m as u64;
            (0..count)
                .map(|_| {
                    // draw u64s so the stream does not depend on usize width
                    let i = rng.gen_range(0..m64);
                    let j = (i + rng.gen_range(1..m64)) % m64;
                    (i as usize, j as usize)
                })
                .collect()
        }
    }
}

pub fn run_audit(name: &str, c: &SimplicialComplex, opts: &AuditOptions) -> AuditReport {
    let mut report = AuditReport::structural(name, c);
    if report.status() == AuditStatus::Precondition {
        return report;
    }

    let work = || {
        let diameter = dual_diameter(c).ok();
        let facets = c.facets();
        let pairs = select_pairs(facets.len(), opts.pairs);
        let results: Vec<(usize, usize, Option<usize>, Vec<ViolationKind>)> = pairs
            .par_iter()
            .map(|&(i, j)| {
                let (len, v) = check_pair(c, &facets[i], &facets[j]);
                (i, j, len, v)
            })
            .collect();
        (diameter, results)
    };
    let (diameter, mut results) = match opts.jobs {
        Some(j) if j > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build()
            .expect("thread pool")
            .install(work),
        _ => work(),
    };

    results.sort_by_key(|r| (r.0, r.1));
    let facets = c.facets();
    report.diameter = diameter;
    report.pairs_checked = results.len();
    report.max_segment_length = results.iter().filter_map(|r| r.2).max().unwrap_or(0);
    match diameter {
        Some(d) if d > report.bound => report.violations.push(Violation {
            from: None,
            to: None,
            kind: ViolationKind::DiameterExceedsBound {
                diameter: d,
                bound: report.bound,
            },
        }),
        Some(_) => {}
        None => report.violations.push(Violation {
            from: None,
            to: None,
            kind: ViolationKind::ConstructionFailed {
                error: "facet-ridge graph is disconnected".into(),
            },
        }),
    }
    for (i, j, _, kinds) in results {
        for kind in kinds {
            report.violations.push(Violation {
                from: Some(facets[i].clone()),
                to: Some(facets[j].clone()),
                kind,
            });
        }
    }
    report
}
