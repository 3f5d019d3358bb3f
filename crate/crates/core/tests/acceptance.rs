//! Acceptance criteria 1 to 8. Each criterion prints one PASS/FAIL line
//! with its elapsed time against its budget; any failure exits nonzero.

use std::process::ExitCode;

use patchspec::verify::{entries, run_one, summarize, SuiteItem, DEFAULT_SEED};

fn main() -> ExitCode {
    // Sequential, so the timings are not inflated by sibling items.
    let items: Vec<SuiteItem> = entries().iter().map(|e| run_one(e.id, DEFAULT_SEED).expect("listed entry")).collect();
    for item in &items {
        println!(
            "  [{}] criterion {} {:<22} {:>6} ms  {} cases  {}",
            if item.passed { "ok" } else { "FAIL" },
            item.criterion,
            item.id,
            item.elapsed_ms,
            item.cases,
            item.detail
        );
    }
    let lines = summarize(&items);
    for line in &lines {
        println!(
            "criterion {}: {} ({} ms, budget {} ms)",
            line.criterion,
            if line.passed { "PASS" } else { "FAIL" },
            line.elapsed_ms,
            line.budget_ms
        );
    }
    let failed: Vec<u8> = lines.iter().filter(|l| !l.passed).map(|l| l.criterion).collect();
    if lines.len() != 8 || !failed.is_empty() {
        eprintln!("acceptance failed: {} criteria reported, failing {failed:?}", lines.len());
        return ExitCode::FAILURE;
    }
    println!("acceptance: all 8 criteria pass");
    ExitCode::SUCCESS
}
