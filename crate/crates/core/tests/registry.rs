use std::sync::atomic::AtomicBool;

use qcap::identities::{registry, run, GridConfig, Verdict};

#[test]
fn default_grid_passes() {
    let cfg = GridConfig { l_max: 5, m_max: 5, f_max: 2, nu_max: 2, trunc: 20, ..GridConfig::default() };
    let jobs: Vec<_> = registry().iter().flat_map(|c| c.grid(&cfg).into_iter().map(move |p| (c, p))).collect();
    let (reports, summary) = run(&jobs, 4, &AtomicBool::new(false), true);
    let bad: Vec<String> = reports.iter().filter(|r| r.verdict != Verdict::Pass).map(|r| r.to_json_line()).collect();
    assert!(bad.is_empty(), "{}", bad.join("\n"));
    assert!(summary.all_passed());
}
