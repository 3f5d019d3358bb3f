//! The invariant and acceptance suite behind `patchspec verify`.
//!
//! Every item is deterministic given the seed. Items run on scoped threads
//! and the report lists them in declaration order.

mod acceptance;
mod gen;
mod props;

use std::time::Instant;

use serde::Serialize;

use crate::Result;

pub use acceptance::{
    criterion_agreement_suite, hochster_poset_oracle, ho_replication, int_instance_suite, intersection_theorems,
    spec_z_closure_exactness, star_oracle_equivalence,
};
pub use gen::all_posets;

/// What a single check established.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub passed: bool,
    /// Instances examined.
    pub cases: usize,
    pub detail: String,
}

impl CheckOutcome {
    pub(crate) fn from_failures(cases: usize, failures: Vec<String>, ok_detail: impl Into<String>) -> Self {
        match failures.first() {
            None => CheckOutcome { passed: true, cases, detail: ok_detail.into() },
            Some(first) => CheckOutcome { passed: false, cases, detail: format!("{} failures, first: {first}", failures.len()) },
        }
    }
}

type Check = fn(u64) -> Result<CheckOutcome>;

/// A suite entry. `criterion` ties it to a numbered acceptance criterion;
/// property suites all count toward criterion 8.
#[derive(Debug, Clone, Copy)]
pub struct SuiteEntry {
    pub id: &'static str,
    pub criterion: u8,
    pub title: &'static str,
    /// Time limit for the item alone; property items share criterion 8's.
    pub budget_ms: Option<u64>,
    pub run: Check,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteItem {
    pub id: String,
    pub criterion: u8,
    pub title: String,
    pub passed: bool,
    pub cases: usize,
    pub detail: String,
    pub elapsed_ms: u64,
    pub budget_ms: Option<u64>,
    pub within_budget: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionLine {
    pub criterion: u8,
    pub passed: bool,
    pub elapsed_ms: u64,
    pub budget_ms: u64,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub items: Vec<SuiteItem>,
    pub criteria: Vec<CriterionLine>,
    pub all_passed: bool,
}

/// Per-criterion time limits.
pub const CRITERION_BUDGET_MS: [(u8, u64); 8] =
    [(1, 5_000), (2, 1_000), (3, 10_000), (4, 30_000), (5, 5_000), (6, 2_000), (7, 10_000), (8, 60_000)];

pub fn entries() -> Vec<SuiteEntry> {
    let acceptance = |id, criterion: u8, title, run| SuiteEntry {
        id,
        criterion,
        title,
        budget_ms: CRITERION_BUDGET_MS.iter().find(|(c, _)| *c == criterion).map(|(_, b)| *b),
        run,
    };
    let prop = |id, title, run| SuiteEntry { id, criterion: 8, title, budget_ms: None, run };
    vec![
        acceptance("poset-oracle", 1, "patch closure = ultrafilter limits = Y on all posets with at most 4 points", hochster_poset_oracle as Check),
        acceptance("spec-z-closure", 2, "patch closure on Spec(Z) adds exactly (0) to infinite sets", spec_z_closure_exactness),
        acceptance("heinzer-ohm", 3, "FIP, core in limit, non-valuation certificate, NOT PvMD at n = 2, 4, 8", ho_replication),
        acceptance("star-oracle", 4, "gcd-rule v-closure against double-colon oracles over Z and Z[X]", star_oracle_equivalence),
        acceptance("criterion-agreement", 5, "all applicable PvMD criteria agree over the catalog", criterion_agreement_suite),
        acceptance("intersections", 6, "finite and indexed intersection theorems on local rings of Z", intersection_theorems),
        acceptance("int-instances", 7, "Λ tables, decomposition, contractions, instance checks over Int(D)", int_instance_suite),
        prop("arith-ring-laws", "MultiPoly associativity and distributivity, 1000 triples", props::ring_laws),
        prop("arith-valuation", "monomial valuations multiplicative and ultrametric, 1000 pairs", props::valuation_laws),
        prop("arith-gcd", "univariate and multivariate gcd divide and absorb common divisors", props::gcd_laws),
        prop("spectra-closure-laws", "extensive, idempotent, monotone closures; Zariski-closed sets patch-closed", props::closure_laws),
        prop("spectra-ultrafilters", "ultrafilter axioms and limits of principal and nonprincipal descriptors", props::ultrafilter_laws),
        prop("spectra-fip", "extended ultrafilters contain explicit and sampled cofinite members", props::fip_extension),
        prop("star-closure-laws", "I ⊆ I^v, idempotence and principal scaling in each UFD", props::star_closure_laws),
        prop("star-t-ideals", "t-ideal iff principal, 500 instances", props::t_ideal_principal),
        prop("star-essential", "essential primes are t-primes; contractions of t-ideals", props::essential_in_t_spec),
        prop("pvmd-soundness", "negative certificates sound, Prüfer implies PvMD, 20 pullbacks", props::pvmd_soundness),
        prop("ho-valuations", "v_i on polynomials without X_i, core consistency, FIP", props::ho_laws),
        prop("int-ring", "Int(D) closed under +, −, ×; D[X] ⊆ Int(D)", props::int_ring_laws),
        prop("int-soundness", "evaluation at 200 domain elements of 200 members", props::int_soundness),
        prop("int-precision", "m_{p,α} verdicts stable under refinement, 500 cases", props::precision_monotonicity),
        prop("int-lambda", "finite residue fields on Λ₀ and the tabulated prime correspondence", props::lambda_laws),
    ]
}

fn run_entry(e: &SuiteEntry, seed: u64) -> SuiteItem {
    let start = Instant::now();
    let outcome = (e.run)(seed).unwrap_or_else(|err| CheckOutcome { passed: false, cases: 0, detail: format!("error: {err}") });
    let elapsed_ms = start.elapsed().as_millis() as u64;
    SuiteItem {
        id: e.id.into(),
        criterion: e.criterion,
        title: e.title.into(),
        passed: outcome.passed,
        cases: outcome.cases,
        detail: outcome.detail,
        elapsed_ms,
        budget_ms: e.budget_ms,
        within_budget: e.budget_ms.is_none_or(|b| elapsed_ms <= b),
    }
}

/// Runs the selected entries (all when `only` is empty) concurrently.
pub fn run_suite(seed: u64, only: &[&str]) -> SuiteReport {
    let chosen: Vec<SuiteEntry> = entries().into_iter().filter(|e| only.is_empty() || only.contains(&e.id)).collect();
    let items: Vec<SuiteItem> = std::thread::scope(|s| {
        let handles: Vec<_> = chosen.iter().map(|e| s.spawn(move || run_entry(e, seed))).collect();
        handles.into_iter().map(|h| h.join().expect("suite item panicked")).collect()
    });
    let criteria = summarize(&items);
    let all_passed = items.iter().all(|i| i.passed) && criteria.iter().all(|c| c.passed);
    SuiteReport { seed, items, criteria, all_passed }
}

/// One line per criterion present in `items`. Property items are summed
/// against criterion 8's total budget.
pub fn summarize(items: &[SuiteItem]) -> Vec<CriterionLine> {
    CRITERION_BUDGET_MS
        .iter()
        .filter_map(|&(criterion, budget_ms)| {
            let mine: Vec<&SuiteItem> = items.iter().filter(|i| i.criterion == criterion).collect();
            if mine.is_empty() {
                return None;
            }
            let elapsed_ms = mine.iter().map(|i| i.elapsed_ms).sum();
            let passed = mine.iter().all(|i| i.passed && i.within_budget) && elapsed_ms <= budget_ms;
            Some(CriterionLine { criterion, passed, elapsed_ms, budget_ms })
        })
        .collect()
}

/// Runs a single entry by id.
pub fn run_one(id: &str, seed: u64) -> Option<SuiteItem> {
    entries().iter().find(|e| e.id == id).map(|e| run_entry(e, seed))
}

/// Seed used when neither a flag nor `PATCHSPEC_SEED` supplies one.
pub const DEFAULT_SEED: u64 = 20_240_611;
