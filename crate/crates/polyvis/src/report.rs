//! The edge-count experiment: instance grid, parallel evaluation and CSV.

use std::io;

use polyvis_core::audits::{report_row, AuditOptions, AuditReport, ReportRow, Verdict};
use polyvis_core::generators::{Family, GeneratorError, Seed};
use rayon::prelude::*;
use thiserror::Error;

pub const CSV_HEADER: [&str; 13] = [
    "family",
    "n",
    "seed",
    "t",
    "edges",
    "k4",
    "ktt",
    "bound2n3",
    "maxcross",
    "cpbound",
    "alpha",
    "e_over_n",
    "e_over_nalpha",
];

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("bad seed list {0:?}: expected `a..b`, `a,b,c` or a single seed")]
    Seeds(String),
    #[error("empty vertex range {nmin}..={nmax}")]
    EmptyRange { nmin: usize, nmax: usize },
    #[error(transparent)]
    Generator(#[from] GeneratorError),
    #[error("thread pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Parses `a..b` (inclusive), a comma-separated list, or one seed.
pub fn parse_seeds(s: &str) -> Result<Vec<Seed>, ReportError> {
    let bad = || ReportError::Seeds(s.to_string());
    let s = s.trim();
    if let Some((a, b)) = s.split_once("..") {
        let b = b.strip_prefix('=').unwrap_or(b);
        let a: Seed = a.trim().parse().map_err(|_| bad())?;
        let b: Seed = b.trim().parse().map_err(|_| bad())?;
        if a > b {
            return Err(bad());
        }
        return Ok((a..=b).collect());
    }
    s.split(',').map(|x| x.trim().parse().map_err(|_| bad())).collect()
}

#[derive(Clone, Debug)]
pub struct ReportPlan {
    pub families: Vec<Family>,
    pub nmin: usize,
    pub nmax: usize,
    pub seeds: Vec<Seed>,
    pub t: usize,
    pub opts: AuditOptions,
}

impl ReportPlan {
    /// Instances in output order: family, then n, then seed. Unseeded
    /// families get a single row with the first seed, and sizes below a
    /// family's minimum are skipped.
    pub fn instances(&self) -> Vec<(Family, usize, Seed)> {
        let mut out = Vec::new();
        for &f in &self.families {
            for n in self.nmin.max(f.min_vertices())..=self.nmax {
                let seeds = if f.is_seeded() { &self.seeds[..] } else { &self.seeds[..self.seeds.len().min(1)] };
                out.extend(seeds.iter().map(|&s| (f, n, s)));
            }
        }
        out
    }
}

pub struct ReportOutput {
    pub rows: Vec<ReportRow>,
}

impl ReportOutput {
    /// Audits that ended in a violation, in row order.
    pub fn failures(&self) -> impl Iterator<Item = &AuditReport> {
        self.rows.iter().flat_map(|r| &r.audits).filter(|a| a.verdict == Verdict::Violation)
    }

    pub fn has_violation(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn write_csv<W: io::Write>(&self, out: W) -> Result<(), ReportError> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(CSV_HEADER)?;
        for r in &self.rows {
            w.write_record([
                r.family.name().to_string(),
                r.n.to_string(),
                r.seed.to_string(),
                r.t.to_string(),
                r.edges.to_string(),
                r.k4.to_string(),
                r.ktt.name().to_string(),
                r.bound2n3.to_string(),
                r.maxcross.to_string(),
                r.cpbound.map(|b| b.to_string()).unwrap_or_default(),
                r.alpha.to_string(),
                format!("{:.6}", r.e_over_n),
                format!("{:.6}", r.e_over_nalpha),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Runs every instance of the plan. `threads == 0` uses the rayon default.
/// Rows come back in plan order regardless of scheduling.
pub fn run_report(plan: &ReportPlan, threads: usize) -> Result<ReportOutput, ReportError> {
    let instances = plan.instances();
    if instances.is_empty() {
        return Err(ReportError::EmptyRange { nmin: plan.nmin, nmax: plan.nmax });
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    let rows: Result<Vec<_>, _> =
        pool.install(|| instances.par_iter().map(|&(f, n, seed)| report_row(f, n, seed, plan.t, &plan.opts)).collect());
    Ok(ReportOutput { rows: rows? })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seed_lists() {
        assert_eq!(parse_seeds("1..5").unwrap(), vec![1, 2, 3, 4, 5]);
        assert_eq!(parse_seeds("2..=3").unwrap(), vec![2, 3]);
        assert_eq!(parse_seeds("7").unwrap(), vec![7]);
        assert_eq!(parse_seeds("4, 1").unwrap(), vec![4, 1]);
        assert!(parse_seeds("5..1").is_err());
        assert!(parse_seeds("x").is_err());
    }

    #[test]
    fn csv_is_ordered_and_thread_independent() {
        let plan = ReportPlan {
            families: vec![Family::Fan, Family::Star],
            nmin: 3,
            nmax: 7,
            seeds: vec![1, 2],
            t: 2,
            opts: AuditOptions::default(),
        };
        let mut one = Vec::new();
        run_report(&plan, 1).unwrap().write_csv(&mut one).unwrap();
        let mut many = Vec::new();
        let out = run_report(&plan, 4).unwrap();
        out.write_csv(&mut many).unwrap();
        assert_eq!(one, many);
        assert!(!out.has_violation());
        let text = String::from_utf8(one).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], CSV_HEADER.join(","));
        assert!(lines[1].starts_with("fan,4,1,2,5,false,"));
        assert_eq!(lines.len(), 1 + 4 + 2 * 5);
        assert!(!text.contains('\r'));
    }
}
