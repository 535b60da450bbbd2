//! `dawg verify`.

use anyhow::{bail, Result};
use dawg_core::check::{run_suite, Suite, SuiteConfig};

use crate::{VerifyArgs, EXIT_VERIFY};

pub fn run(args: &VerifyArgs) -> Result<u8> {
    let mut suites: Vec<Suite> = if args.only.is_empty() {
        Suite::ALL.to_vec()
    } else {
        args.only.iter().flat_map(|p| Suite::matching(p)).collect()
    };
    suites.dedup();
    if suites.is_empty() {
        bail!("no suite matches {:?}", args.only);
    }
    if !(args.scale > 0.0) {
        bail!("--scale must be positive");
    }
    let cfg = SuiteConfig { seed: args.seed, max_n: args.max_n, scale: args.scale };
    let mut failed = 0;
    for s in suites {
        let r = run_suite(s, &cfg);
        match &r.failure {
            None => println!("[PASS] {}: {} cases in {:.1}s", r.name, r.cases, r.elapsed_ms / 1e3),
            Some((core, why)) => {
                failed += 1;
                println!("[FAIL] {}: after {} cases", r.name, r.cases);
                println!("       counterexample {core:?}: {why}");
            }
        }
    }
    Ok(if failed == 0 { 0 } else { EXIT_VERIFY })
}
