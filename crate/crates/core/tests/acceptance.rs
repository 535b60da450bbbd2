//! Acceptance suite: one line per criterion, `[PASS]` or `[FAIL]`.
//!
//! Runs under `cargo test` as a plain binary. `ACCEPTANCE_ONLY=a,b` runs the
//! named criteria only; `ACCEPTANCE_SKIP_SCALING=1` reports the timing
//! criterion as failed without running it.

use std::process::ExitCode;
use std::time::Instant;

use dawg_core::check::{doubling_ratios, measure, run_suite, spread, Suite, SuiteConfig, SuiteReport, SWEEP_STRUCTURES};
use dawg_core::maw::{compute_maws, decode_maws};
use dawg_core::pipeline::{build, StructureKind};
use dawg_core::text::Text;

struct Outcome {
    name: &'static str,
    passed: bool,
    detail: String,
}

fn report(name: &'static str, passed: bool, detail: String) -> Outcome {
    let tag = if passed { "[PASS]" } else { "[FAIL]" };
    println!("{tag} {name}: {detail}");
    Outcome { name, passed, detail }
}

fn within(reports: &[SuiteReport], limit_s: f64) -> (bool, String) {
    let total: f64 = reports.iter().map(|r| r.elapsed_ms).sum::<f64>() / 1e3;
    let cases: usize = reports.iter().map(|r| r.cases).sum();
    let failure = reports.iter().find_map(|r| r.failure.as_ref().map(|(core, why)| format!("{}: {core:?}: {why}", r.name)));
    match failure {
        Some(f) => (false, format!("{cases} cases, counterexample {f}")),
        None if total > limit_s => (false, format!("{cases} cases in {total:.1}s, over the {limit_s}s budget")),
        None => (true, format!("{cases} cases in {total:.1}s")),
    }
}

fn suites(name: &'static str, list: &[Suite], limit_s: f64) -> Outcome {
    let cfg = SuiteConfig::default();
    let reports: Vec<SuiteReport> = list.iter().map(|&s| run_suite(s, &cfg)).collect();
    let (ok, detail) = within(&reports, limit_s);
    report(name, ok, detail)
}

fn worked_example() -> Outcome {
    let start = Instant::now();
    let run = || -> dawg_core::error::Result<Vec<String>> {
        let t = Text::from_bytes_with_sigma(b"abaab", 3)?;
        let b = build(&t, &[StructureKind::Dawg])?;
        let ms = compute_maws(&b.dawg.unwrap().dawg, &t)?;
        Ok(decode_maws(&ms, &t, true)?.iter().map(|w| t.render_values(w)).collect())
    };
    let words = run().unwrap_or_default();
    let secs = start.elapsed().as_secs_f64();
    let passed = words == ["c", "bb", "aaa", "bab", "aaba"] && secs < 1.0;
    report("maw-worked-example", passed, format!("{{{}}} in {:.3}s", words.join(", "), secs))
}

fn scaling() -> Outcome {
    let name = "scaling";
    if std::env::var_os("ACCEPTANCE_SKIP_SCALING").is_some() {
        return report(name, false, "skipped by ACCEPTANCE_SKIP_SCALING".into());
    }
    let run = || -> dawg_core::error::Result<(bool, String)> {
        let sizes = [(250_000, 256), (500_000, 256), (1_000_000, 256)];
        let rows = measure(&sizes, 5, 1, &StructureKind::ALL, Some(1_000_000))?;
        let ratios = doubling_ratios(&rows);
        let worst = ratios.iter().copied().fold((StructureKind::St, 0.0), |a, b| if b.1 > a.1 { b } else { a });
        let pipeline_s = rows[2].pipeline_ms.unwrap_or(f64::INFINITY) / 1e3;
        let n = 250_000;
        let sweep = measure(&[(n, 2), (n, 256), (n, n as u64)], 3, 2, &SWEEP_STRUCTURES, None)?;
        let spreads = spread(&sweep);
        let widest = spreads.iter().copied().fold((StructureKind::St, 0.0), |a, b| if b.1 > a.1 { b } else { a });
        let ok = worst.1 <= 2.5 && pipeline_s < 10.0 && widest.1 < 3.0;
        Ok((
            ok,
            format!(
                "worst doubling ratio {:.2} ({}), pipeline at 1e6 {:.2}s, widest sigma spread {:.2} ({})",
                worst.1, worst.0, pipeline_s, widest.1, widest.0
            ),
        ))
    };
    match run() {
        Ok((ok, detail)) => report(name, ok, detail),
        Err(e) => report(name, false, e.to_string()),
    }
}

fn main() -> ExitCode {
    // Skip when the test runner only lists tests.
    if std::env::args().any(|a| a == "--list") {
        return ExitCode::SUCCESS;
    }
    let only = std::env::var("ACCEPTANCE_ONLY").ok();
    let criteria: [(&str, Box<dyn Fn() -> Outcome>); 10] = [
        ("maw-worked-example", Box::new(worked_example)),
        ("dawg-oracle", Box::new(|| suites("dawg-oracle", &[Suite::Dawg], 180.0))),
        ("reversed-dawg", Box::new(|| suites("reversed-dawg", &[Suite::Rdawg], 120.0))),
        ("size-bounds", Box::new(|| suites("size-bounds", &[Suite::Bounds], f64::INFINITY))),
        ("maw-oracle", Box::new(|| suites("maw-oracle", &[Suite::Maw], 180.0))),
        ("maw-accounting", Box::new(|| suites("maw-accounting", &[Suite::Accounting], f64::INFINITY))),
        ("affix-tree", Box::new(|| suites("affix-tree", &[Suite::AffixNodes, Suite::AffixWalks], f64::INFINITY))),
        ("cdawg", Box::new(|| suites("cdawg", &[Suite::Cdawg, Suite::SymmetricCdawg], f64::INFINITY))),
        ("lstrie", Box::new(|| suites("lstrie", &[Suite::Lstrie], f64::INFINITY))),
        ("scaling", Box::new(scaling)),
    ];
    let outcomes: Vec<Outcome> = criteria
        .iter()
        .filter(|(name, _)| only.as_deref().map_or(true, |o| o.split(',').any(|p| p == *name)))
        .map(|(_, run)| run())
        .collect();
    let failed: Vec<&Outcome> = outcomes.iter().filter(|o| !o.passed).collect();
    println!("{} of {} criteria passed", outcomes.len() - failed.len(), outcomes.len());
    for o in &failed {
        eprintln!("failed: {} ({})", o.name, o.detail);
    }
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
