//! `dawg bench`.

use anyhow::{bail, Context, Result};
use dawg_core::check::{doubling_ratios, measure, spread, ScalingRow, SWEEP_STRUCTURES};
use dawg_core::StructureKind;
use serde_json::json;

use crate::BenchArgs;

fn print_rows(rows: &[ScalingRow]) {
    let Some(first) = rows.first() else { return };
    print!("{:>10} {:>8}", "n", "sigma");
    for (k, _) in &first.times {
        print!(" {:>9}", k.name());
    }
    println!();
    for r in rows {
        print!("{:>10} {:>8}", r.n, r.sigma);
        for (_, ms) in &r.times {
            print!(" {ms:>9.1}");
        }
        println!();
    }
}

fn print_factors(label: &str, factors: &[(StructureKind, f64)]) {
    let parts: Vec<String> = factors.iter().map(|(k, f)| format!("{k} {f:.2}")).collect();
    println!("{label}: {}", parts.join(", "));
}

pub fn run(args: &BenchArgs) -> Result<u8> {
    let mut sizes = args.sizes.clone();
    sizes.sort_unstable();
    let sweep_n = sizes[0];
    let sweep_sigmas = args
        .sweep
        .iter()
        .map(|s| if s == "n" { Ok(sweep_n as u64) } else { s.parse::<u64>().with_context(|| format!("bad sigma '{s}'")) })
        .collect::<Result<Vec<u64>>>()?;
    if args.sigma == 0 || sweep_sigmas.contains(&0) {
        bail!("alphabet sizes must be positive");
    }

    let points: Vec<(usize, u64)> = sizes.iter().map(|&n| (n, args.sigma)).collect();
    let rows = measure(&points, args.runs, args.seed, &StructureKind::ALL, None)?;
    println!("median build time in ms over {} interleaved runs", args.runs.max(1));
    print_rows(&rows);
    let ratios = doubling_ratios(&rows);
    if rows.len() > 1 {
        print_factors("worst growth per doubling", &ratios);
    }

    let points: Vec<(usize, u64)> = sweep_sigmas.iter().map(|&sigma| (sweep_n, sigma)).collect();
    let sweep = if points.is_empty() {
        Vec::new()
    } else {
        measure(&points, args.runs, args.seed, &SWEEP_STRUCTURES, None)?
    };
    let spreads = spread(&sweep);
    if !sweep.is_empty() {
        println!("alphabet sweep at n = {sweep_n}");
        print_rows(&sweep);
        print_factors("slowest over fastest", &spreads);
    }

    if let Some(path) = &args.json {
        let doc = json!({ "rows": rows, "doubling": ratios, "sweep": sweep, "spread": spreads });
        std::fs::write(path, serde_json::to_string_pretty(&doc)? + "\n")
            .with_context(|| format!("cannot write {}", path.display()))?;
    }
    Ok(0)
}
