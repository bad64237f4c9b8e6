//! Executable audits of the extremal statements. Each audit recomputes the
//! objects a proof talks about, emits witnesses that can be re-checked, and
//! reports a violation whenever a claimed structure fails to materialize.

mod cherry;
mod k4;
mod monotone;
mod report;
mod star;
mod watcher;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use thiserror::Error;

use crate::budget::DEFAULT_NODE_BUDGET;
use crate::generators::{Family, Seed};
use crate::geometry::{segment_avoids_exterior, GeometryError, Point, Polygon};
use crate::graph::Edge;
use crate::ordered::KttWitness;
use crate::visibility::SiteError;

pub use cherry::{audit_double_cherry, capoyleas_pach_audit, capoyleas_pach_bound};
pub use k4::check_k4_theorem;
pub use monotone::monotone_theorem_audit;
pub use report::{report_row, KttColumn, ReportRow};
pub use star::star_theorem_audit;
pub use watcher::{find_common_watcher, polygon_mt_audit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum TheoremId {
    /// More than `2n - 3` visibility edges force a `K_4`.
    K4,
    /// A common neighbour of interleaved rows exists between two columns.
    CommonWatcher,
    /// Double cherries and two-way crossing sequences force adjacency.
    DoubleCherry,
    /// No `k + 1` pairwise crossing edges bound the edge count.
    CapoyleasPach,
    /// Star-shaped halves: crossing pairs force an edge; `2t` pairwise
    /// crossing edges force a `K_{t,t}`.
    StarShaped,
    /// Chain matrices of x-monotone polygons: a pattern occurrence forces a
    /// `K_{t,t}`.
    XMonotone,
    /// Simple polygons: an occurrence of the extended pattern forces a
    /// `K_{t,t}`.
    PolygonMt,
}

impl TheoremId {
    pub fn name(self) -> &'static str {
        match self {
            TheoremId::K4 => "k4",
            TheoremId::CommonWatcher => "common-watcher",
            TheoremId::DoubleCherry => "double-cherry",
            TheoremId::CapoyleasPach => "capoyleas-pach",
            TheoremId::StarShaped => "star",
            TheoremId::XMonotone => "monotone",
            TheoremId::PolygonMt => "polygon-mt",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Pass,
    Violation,
    Inconclusive,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Violation => "violation",
            Verdict::Inconclusive => "inconclusive",
        }
    }
}

/// Which instance an audit ran on. Audits fill in `n` and `t`; callers that
/// generated the polygon add the family and seed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Instance {
    pub family: Option<Family>,
    pub n: usize,
    pub seed: Option<Seed>,
    pub t: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Witness {
    /// Four pairwise visible points `a < c < b < d`.
    K4([usize; 4]),
    Ktt(KttWitness),
    /// A point in the prescribed range that sees every `r`.
    Watcher {
        r: Vec<usize>,
        c: Vec<usize>,
        vertex: usize,
    },
    CrossingFamily(Vec<Edge>),
}

/// Counterexample payloads. Indices refer to the audited point list
/// (polygon vertices, or boundary sites in clockwise order).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Violation {
    /// A side of the minimum-area crossing quadrilateral is not visible.
    K4SideMissing {
        quad: [usize; 4],
        side: Edge,
    },
    DenseWithoutCrossing {
        edges: usize,
        bound: usize,
    },
    NoCommonWatcher {
        r: Vec<usize>,
        c: Vec<usize>,
    },
    /// An edge read off a matrix occurrence is not a visibility edge.
    OccurrenceEdgeMissing {
        edge: Edge,
    },
    NonAdjacentDoubleCherry {
        u: usize,
        v: usize,
    },
    NonAdjacentCrossingSequences {
        u: usize,
        v: usize,
    },
    CapoyleasPach {
        k: usize,
        edges: usize,
        bound: usize,
    },
    /// Crossing edges `(a, b)`, `(c, d)` with `a < c < b < d` in a half but
    /// `(a, d)` missing.
    StarMissingEdge {
        ab: Edge,
        cd: Edge,
    },
    /// A half has at least `2t` pairwise crossing edges although the whole
    /// graph was found `K_{t,t}`-free.
    StarTooManyCrossings {
        family: Vec<Edge>,
    },
    /// A claimed `K_{t,t}` has a non-visible pair.
    KttNotVerified {
        a: Vec<usize>,
        b: Vec<usize>,
        missing: Edge,
    },
}

impl Violation {
    /// Re-derives the failure from scratch with exact visibility tests on
    /// `points` (which must lie on `polygon`). Returns `true` when the payload
    /// is a genuine counterexample.
    pub fn confirm(&self, polygon: &Polygon, points: &[Point]) -> bool {
        let sees = |e: &Edge| {
            segment_avoids_exterior(polygon, &points[e.lo], &points[e.hi]).expect("points lie on the polygon")
        };
        let crossing = crate::graph::edges_cross;
        match self {
            Violation::K4SideMissing { quad, side } => {
                let [a, c, b, d] = *quad;
                sees(&Edge::new(a, b)) && sees(&Edge::new(c, d)) && !sees(side)
            }
            Violation::DenseWithoutCrossing { edges, bound } => edges > bound,
            Violation::OccurrenceEdgeMissing { edge } => !sees(edge),
            Violation::StarMissingEdge { ab, cd } => {
                crossing(*ab, *cd) && sees(ab) && sees(cd) && !sees(&Edge::new(ab.lo.min(cd.lo), ab.hi.max(cd.hi)))
            }
            Violation::KttNotVerified { missing, .. } => !sees(missing),
            Violation::NonAdjacentDoubleCherry { u, v } | Violation::NonAdjacentCrossingSequences { u, v } => {
                !sees(&Edge::new(*u, *v))
            }
            Violation::CapoyleasPach { edges, bound, .. } => edges > bound,
            Violation::StarTooManyCrossings { family } => {
                family.iter().all(sees)
                    && family.iter().enumerate().all(|(i, &e)| family[i + 1..].iter().all(|&f| crossing(e, f)))
            }
            Violation::NoCommonWatcher { r, c } => {
                let k = r.len();
                let n = points.len();
                let mut v = c[k - 1];
                loop {
                    if r.iter().all(|&x| sees(&Edge::new(x, v))) {
                        return false;
                    }
                    if v == c[k] {
                        return true;
                    }
                    v = (v + 1) % n;
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuditReport {
    pub theorem: TheoremId,
    pub instance: Instance,
    pub verdict: Verdict,
    pub witnesses: Vec<Witness>,
    pub violations: Vec<Violation>,
    /// Named integer counters in insertion order.
    pub counters: Vec<(&'static str, i64)>,
    pub notes: Vec<String>,
}

impl AuditReport {
    fn new(theorem: TheoremId, n: usize) -> Self {
        AuditReport {
            theorem,
            instance: Instance { n, ..Instance::default() },
            verdict: Verdict::Pass,
            witnesses: Vec::new(),
            violations: Vec::new(),
            counters: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn count(&mut self, name: &'static str, value: impl TryInto<i64>) {
        self.counters.push((name, value.try_into().unwrap_or(i64::MAX)));
    }

    fn note(&mut self, s: &str) {
        self.notes.push(s.into());
    }

    /// Verdict from the collected violations; `inconclusive` only matters
    /// when nothing failed.
    fn finish(mut self, inconclusive: bool) -> Self {
        self.verdict = if !self.violations.is_empty() {
            Verdict::Violation
        } else if inconclusive {
            Verdict::Inconclusive
        } else {
            Verdict::Pass
        };
        self
    }

    pub fn counter(&self, name: &str) -> Option<i64> {
        self.counters.iter().find(|(k, _)| *k == name).map(|&(_, v)| v)
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn with_instance(mut self, family: Option<Family>, seed: Option<Seed>) -> Self {
        self.instance.family = family;
        self.instance.seed = seed;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum AuditError {
    #[error("polygon is not star-shaped")]
    NotStarShaped,
    #[error("polygon is not x-monotone")]
    NotMonotone,
    #[error("t must be at least 1")]
    InvalidT,
    #[error("{r} does not see {c}")]
    WatcherPrecondition { r: usize, c: usize },
    #[error("watcher input needs k >= 1 rows and 2k columns in clockwise order")]
    WatcherShape,
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Sites(#[from] SiteError),
}

/// Limits shared by the pattern-based audits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AuditOptions {
    /// Maximum number of matrix occurrences examined per matrix.
    pub occurrence_cap: usize,
    /// Node budget for each exhaustive `K_{t,t}` search.
    pub node_budget: u64,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { occurrence_cap: 200, node_budget: DEFAULT_NODE_BUDGET }
    }
}

fn sees(polygon: &Polygon, points: &[Point], i: usize, j: usize) -> bool {
    i == j || segment_avoids_exterior(polygon, &points[i], &points[j]).expect("points lie on the polygon")
}

/// Geometric re-checks with the independent predicate, memoized per pair.
struct Verifier<'a> {
    polygon: &'a Polygon,
    points: &'a [Point],
    cache: BTreeMap<(usize, usize), bool>,
}

impl<'a> Verifier<'a> {
    fn new(polygon: &'a Polygon, points: &'a [Point]) -> Self {
        Verifier { polygon, points, cache: BTreeMap::new() }
    }

    fn sees(&mut self, i: usize, j: usize) -> bool {
        let key = (i.min(j), i.max(j));
        let (polygon, points) = (self.polygon, self.points);
        *self.cache.entry(key).or_insert_with(|| sees(polygon, points, key.0, key.1))
    }

    /// Re-checks every pair of a claimed `K_{t,t}`.
    fn ktt(&mut self, a: &[usize], b: &[usize]) -> Result<(), Violation> {
        for &x in a {
            for &y in b {
                if x == y || !self.sees(x, y) {
                    let missing = Edge { lo: x.min(y), hi: x.max(y) };
                    return Err(Violation::KttNotVerified { a: a.to_vec(), b: b.to_vec(), missing });
                }
            }
        }
        Ok(())
    }
}
