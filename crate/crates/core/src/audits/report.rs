use crate::budget::Budget;
use crate::ds::inverse_ackermann;
use crate::generators::{generate, Family, GeneratorError, Seed};
use crate::ordered::{find_complete_bipartite, KttSearch};
use crate::visibility::vertex_visibility_graph;

use super::{
    capoyleas_pach_audit, capoyleas_pach_bound, check_k4_theorem, monotone_theorem_audit, polygon_mt_audit,
    star_theorem_audit, AuditOptions, AuditReport, Verdict, Witness,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KttColumn {
    Free,
    Found,
    Inconclusive,
}

impl KttColumn {
    pub fn name(self) -> &'static str {
        match self {
            KttColumn::Free => "free",
            KttColumn::Found => "found",
            KttColumn::Inconclusive => "inconclusive",
        }
    }
}

/// One instance of the edge-count experiment, plus the audits run on it.
#[derive(Clone, Debug, PartialEq)]
pub struct ReportRow {
    pub family: Family,
    pub n: usize,
    pub seed: Seed,
    pub t: usize,
    pub edges: usize,
    pub k4: bool,
    pub ktt: KttColumn,
    pub bound2n3: usize,
    pub maxcross: usize,
    pub cpbound: Option<usize>,
    pub alpha: usize,
    pub e_over_n: f64,
    pub e_over_nalpha: f64,
    /// Audits run on the instance; all should pass.
    pub audits: alloc::vec::Vec<AuditReport>,
}

impl ReportRow {
    pub fn audits_pass(&self) -> bool {
        self.audits.iter().all(|a| a.verdict != Verdict::Violation)
    }
}

/// Generates the instance and runs the audits that apply to its family:
/// the `K_4` and crossing-number audits always, the star audit for star and
/// fan polygons, the chain audit for x-monotone and fan polygons, and the
/// pattern audit for the rest.
pub fn report_row(
    family: Family,
    n: usize,
    seed: Seed,
    t: usize,
    opts: &AuditOptions,
) -> Result<ReportRow, GeneratorError> {
    let polygon = generate(family, n, seed)?;
    let g = vertex_visibility_graph(&polygon);
    let edges = g.edge_count();
    let tag = |r: AuditReport| r.with_instance(Some(family), Some(seed));

    let k4 = tag(check_k4_theorem(&polygon));
    let has_k4 = k4.witnesses.iter().any(|w| matches!(w, Witness::K4(_)));
    let cp = tag(capoyleas_pach_audit(&g));
    let maxcross = cp.counter("maxcross").unwrap_or(0) as usize;
    let ktt = match find_complete_bipartite(&g, t.max(1), &mut Budget::new(opts.node_budget)).expect("t >= 1") {
        KttSearch::Found(_) => KttColumn::Found,
        KttSearch::Free => KttColumn::Free,
        KttSearch::Inconclusive => KttColumn::Inconclusive,
    };
    let mut audits = alloc::vec![k4, cp];
    let t = t.max(1);
    if matches!(family, Family::Star | Family::Fan | Family::Convex) {
        if let Ok(r) = star_theorem_audit(&polygon, None, t, opts) {
            audits.push(tag(r));
        }
    }
    if matches!(family, Family::XMonotone | Family::Fan) {
        if let Ok(r) = monotone_theorem_audit(&polygon, None, t, opts) {
            audits.push(tag(r));
        }
    }
    if matches!(family, Family::Random | Family::Convex) {
        audits.push(tag(polygon_mt_audit(&polygon, t, opts).expect("t >= 1")));
    }
    let alpha = inverse_ackermann(n as u64);
    Ok(ReportRow {
        family,
        n,
        seed,
        t,
        edges,
        k4: has_k4,
        ktt,
        bound2n3: 2 * n - 3,
        maxcross,
        cpbound: capoyleas_pach_bound(n, maxcross),
        alpha,
        e_over_n: edges as f64 / n as f64,
        e_over_nalpha: edges as f64 / (n * alpha) as f64,
        audits,
    })
}
