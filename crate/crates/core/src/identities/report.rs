//! Running cases over parameter grids and reporting the outcome.

use std::sync::atomic::{AtomicBool, Ordering};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use super::{IdentityCase, Mode, Params};
use crate::series::{CompareMode, QSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
    Error,
}

/// Coefficients are decimal strings so that big values survive JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MismatchReport {
    pub exponent: i64,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub id: String,
    pub params: Params,
    pub mode: String,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<MismatchReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub lhs_degree: Option<i64>,
    pub rhs_degree: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub millis: Option<u64>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RunSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub errors: usize,
    pub cancelled: bool,
}

impl RunSummary {
    pub fn all_passed(&self) -> bool {
        self.passed == self.total && !self.cancelled
    }
}

fn mode_label(case: &IdentityCase, p: &Params, cmp: Option<CompareMode>) -> String {
    match (case.mode, cmp) {
        (_, Some(CompareMode::UpTo(n))) => format!("truncated:{n}"),
        (Mode::TruncatedSeries, _) => match p.get("N") {
            Ok(n) => format!("truncated:{n}"),
            Err(_) => "truncated".into(),
        },
        _ => "exact".into(),
    }
}

fn degree(s: &QSeries) -> Option<i64> {
    s.degree()
}

/// Evaluate one case at one parameter point.
pub fn evaluate(case: &IdentityCase, params: &Params, timing: bool) -> Report {
    let start = Instant::now();
    let outcome = case.sides(params);
    let millis = timing.then(|| start.elapsed().as_millis() as u64);
    let base = |verdict, cmp| Report {
        id: case.id.to_string(),
        params: case.resolve(params).unwrap_or_else(|_| params.clone()),
        mode: mode_label(case, params, cmp),
        verdict,
        first_mismatch: None,
        error: None,
        lhs_degree: None,
        rhs_degree: None,
        millis,
    };
    match outcome {
        Err(e) => Report { error: Some(e.to_string()), ..base(Verdict::Error, None) },
        Ok((lhs, rhs)) => {
            let cmp = lhs.compare(&rhs);
            let verdict = if cmp.agrees() { Verdict::Pass } else { Verdict::Fail };
            Report {
                first_mismatch: cmp.mismatch.map(|m| MismatchReport {
                    exponent: m.exponent,
                    lhs: m.left.to_string(),
                    rhs: m.right.to_string(),
                }),
                lhs_degree: degree(&lhs),
                rhs_degree: degree(&rhs),
                ..base(verdict, Some(cmp.mode))
            }
        }
    }
}

/// Evaluate every `(case, params)` job on a pool of `threads` workers.
///
/// Jobs not started before `cancel` is raised are skipped and the summary
/// is marked cancelled. Reports are sorted by id, then parameters.
pub fn run(
    jobs: &[(&'static IdentityCase, Params)],
    threads: usize,
    cancel: &AtomicBool,
    timing: bool,
) -> (Vec<Report>, RunSummary) {
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads.max(1)).build().expect("thread pool");
    let mut reports: Vec<Report> = pool.install(|| {
        jobs.par_iter()
            .filter_map(|(case, p)| (!cancel.load(Ordering::Relaxed)).then(|| evaluate(case, p, timing)))
            .collect()
    });
    reports.sort_by(|a, b| (a.id.as_str(), &a.params).cmp(&(b.id.as_str(), &b.params)));
    let summary = RunSummary {
        total: jobs.len(),
        passed: reports.iter().filter(|r| r.verdict == Verdict::Pass).count(),
        failed: reports.iter().filter(|r| r.verdict == Verdict::Fail).count(),
        errors: reports.iter().filter(|r| r.verdict == Verdict::Error).count(),
        cancelled: reports.len() < jobs.len(),
    };
    (reports, summary)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::find_case;

    #[test]
    fn pass_and_error_reports() {
        let case = find_case("new_fin_cap_1").unwrap();
        let r = evaluate(case, &Params::new().with("L", 3), false);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.mode, "exact");
        assert!(r.millis.is_none());
        let r = evaluate(case, &Params::new(), false);
        assert_eq!(r.verdict, Verdict::Error);
        assert!(r.error.unwrap().contains("L"));
    }

    #[test]
    fn truncated_mode_label() {
        let case = find_case("jtp").unwrap();
        let r = evaluate(case, &Params::new().with("z_shift", 1).with("N", 12), false);
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.mode, "truncated:12");
    }

    #[test]
    fn run_sorts_and_counts() {
        let case = find_case("new_fin_cap_2").unwrap();
        let jobs: Vec<_> = (0..4).rev().map(|l| (case, Params::new().with("L", l))).collect();
        let cancel = AtomicBool::new(false);
        let (reports, summary) = run(&jobs, 2, &cancel, false);
        assert_eq!(summary.passed, 4);
        assert!(summary.all_passed());
        let ls: Vec<i64> = reports.iter().map(|r| r.params.get("L").unwrap()).collect();
        assert_eq!(ls, vec![0, 1, 2, 3]);
    }

    #[test]
    fn cancelled_run() {
        let case = find_case("new_fin_cap_2").unwrap();
        let jobs = vec![(case, Params::new().with("L", 1))];
        let cancel = AtomicBool::new(true);
        let (reports, summary) = run(&jobs, 1, &cancel, false);
        assert!(reports.is_empty());
        assert!(summary.cancelled);
        assert!(!summary.all_passed());
    }

    #[test]
    fn json_line_shape() {
        let case = find_case("new_fin_cap_1").unwrap();
        let r = evaluate(case, &Params::new().with("L", 2), false);
        let v: serde_json::Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["id"], "new_fin_cap_1");
        assert_eq!(v["params"]["L"], 2);
        assert_eq!(v["verdict"], "pass");
        assert!(v.get("millis").is_none());
    }
}
