//! The acceptance matrix: one line per criterion, full profile.

use std::io::Write;
use std::time::Instant;

use tiedbox::report::{Report, Status};
use tiedbox::verify::{criterion, VerifyConfig, CRITERIA};

#[test]
fn acceptance_criteria() {
    let cfg = VerifyConfig::default();
    let results: Vec<(Report, f64)> = std::thread::scope(|s| {
        let handles: Vec<_> = (1..=CRITERIA.len())
            .map(|k| {
                let cfg = &cfg;
                s.spawn(move || {
                    let t = Instant::now();
                    let r = criterion(k, cfg);
                    (r, t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles.into_iter().map(|h| h.join().unwrap()).collect()
    });

    // written to the stdout handle directly so the matrix shows up without --nocapture
    let mut out = std::io::stdout().lock();
    let mut failing = Vec::new();
    for (k, (rep, secs)) in results.iter().enumerate() {
        let ok = rep.records.iter().filter(|r| r.status == Status::Pass).count();
        let verdict = if rep.status() == Status::Pass { "PASS" } else { "FAIL" };
        writeln!(
            out,
            "criterion {:>2} {:<26} {verdict}  ({ok}/{} checks, {secs:.1}s)",
            k + 1,
            CRITERIA[k],
            rep.records.len()
        )
        .unwrap();
        for r in rep.records.iter().filter(|r| r.status != Status::Pass) {
            let wit = r.witness.as_deref().unwrap_or("");
            writeln!(out, "    {} expected {} got {} {wit}", r.name, r.expected, r.got).unwrap();
            failing.push(r.name.clone());
        }
    }
    assert!(failing.is_empty(), "failing checks: {failing:?}");
}
