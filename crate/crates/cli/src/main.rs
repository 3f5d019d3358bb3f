//! `patchspec` command-line front end.
//!
//! Exit status: 0 for an affirmative answer, 1 for a sound negative verdict,
//! 2 for errors and undecided cases.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use patchspec::arith::PAdicApprox;
use patchspec::ho::{ho_demo, HoConfig, HoDemo};
use patchspec::intpoly::{
    binomial_coordinates, int_membership, lambda_classify, mpalpha_contract_zx, mpalpha_membership, IntDomain, IntPoly,
    LambdaClassification, MpMembership,
};
use patchspec::pvmd::{catalog_ids, check, check_auto, descriptor_for_id, Criterion, Verdict};
use patchspec::spectra::file::{parse_model, parse_subset};
use patchspec::spectra::{patch_closure, zariski_closure};
use patchspec::verify::{run_suite, SuiteReport, DEFAULT_SEED};

#[derive(Parser)]
#[command(name = "patchspec", version, about = "Patch topology, star operations and PvMD verdicts on a domain catalog")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// Seed for sampled checks.
    #[arg(long, global = true, env = "PATCHSPEC_SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Output {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Topology {
    Patch,
    Zariski,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CriterionArg {
    Thm24,
    Cor26,
    Cor27,
    Griffin,
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Closure of a subset of a model spectrum.
    Closure {
        #[arg(long)]
        model: PathBuf,
        #[arg(long)]
        subset: PathBuf,
        #[arg(long, value_enum, default_value_t = Topology::Patch)]
        topology: Topology,
    },
    /// PvMD decisions.
    Pvmd {
        #[command(subcommand)]
        command: PvmdCommand,
    },
    /// The finite-level Heinzer-Ohm construction.
    Ho {
        #[command(subcommand)]
        command: HoCommand,
    },
    /// Integer-valued polynomials.
    Intpoly {
        #[command(subcommand)]
        command: IntpolyCommand,
    },
    /// List the domain catalog.
    Catalog,
    /// Run the acceptance and property suite.
    Verify {
        /// Restrict to these suite item ids.
        #[arg(long)]
        only: Vec<String>,
    },
}

#[derive(Subcommand)]
enum PvmdCommand {
    Check {
        #[arg(long)]
        domain: String,
        #[arg(long, value_enum, default_value_t = CriterionArg::Auto)]
        criterion: CriterionArg,
    },
}

#[derive(Subcommand)]
enum HoCommand {
    Demo {
        #[arg(long)]
        level: usize,
        /// Comma-separated core elements.
        #[arg(long)]
        family: String,
    },
}

#[derive(Subcommand)]
enum IntpolyCommand {
    /// Membership of `f` in `Int(D)`.
    Member {
        #[arg(long)]
        f: String,
        #[arg(long)]
        domain: String,
    },
    /// Membership of `f` in the maximal ideal `m_{p,α}` of `Int(Z)`.
    Prime {
        #[arg(long)]
        p: u64,
        #[arg(long, allow_hyphen_values = true)]
        alpha: i64,
        #[arg(long)]
        precision: u32,
        #[arg(long)]
        f: String,
    },
    /// The `Λ₀`/`Λ₁` split of a catalog domain.
    Classify {
        #[arg(long)]
        domain: String,
    },
}

/// Rendered output plus exit status.
struct Outcome {
    json: Value,
    text: String,
    code: u8,
    /// One-line note on stderr for undecided answers.
    note: Option<String>,
}

type Run = Result<Outcome, String>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let seed = cli.seed.unwrap_or(DEFAULT_SEED);
    match run(cli.command, seed) {
        Ok(o) => {
            match cli.output {
                Output::Json => println!("{}", serde_json::to_string_pretty(&o.json).expect("json values serialize")),
                Output::Text => print!("{}", o.text),
            }
            if let Some(n) = o.note {
                eprintln!("patchspec: {n}");
            }
            ExitCode::from(o.code)
        }
        Err(e) => {
            eprintln!("patchspec: error: {}", e.replace('\n', " "));
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Command, seed: u64) -> Run {
    match cmd {
        Command::Closure { model, subset, topology } => closure(&model, &subset, topology),
        Command::Pvmd { command: PvmdCommand::Check { domain, criterion } } => pvmd_check(&domain, criterion),
        Command::Ho { command: HoCommand::Demo { level, family } } => ho(level, &family, seed),
        Command::Intpoly { command } => match command {
            IntpolyCommand::Member { f, domain } => member(&f, &domain),
            IntpolyCommand::Prime { p, alpha, precision, f } => prime(p, alpha, precision, &f),
            IntpolyCommand::Classify { domain } => classify(&domain),
        },
        Command::Catalog => catalog(),
        Command::Verify { only } => verify(seed, &only),
    }
}

fn to_json<T: serde::Serialize>(v: &T) -> Result<Value, String> {
    serde_json::to_value(v).map_err(|e| e.to_string())
}

fn read(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn closure(model: &PathBuf, subset: &PathBuf, topology: Topology) -> Run {
    let m = parse_model(&read(model)?).map_err(|e| e.to_string())?;
    let y = parse_subset(&read(subset)?, &m).map_err(|e| e.to_string())?;
    let (name, c) = match topology {
        Topology::Patch => ("patch", patch_closure(&m, &y)),
        Topology::Zariski => ("zariski", zariski_closure(&m, &y)),
    };
    let c = c.map_err(|e| e.to_string())?;
    let (input, closure) = (m.describe(&y), m.describe(&c));
    let added = m.describe(&c.difference(&y).map_err(|e| e.to_string())?);
    let text = format!("model: {}\ntopology: {name}\nsubset: {input}\nclosure: {closure}\nadded: {added}\n", m.name);
    let json = json!({
        "model": m.name,
        "topology": name,
        "subset": input,
        "closure": closure,
        "added": added,
        "closure_desc": to_json(&c)?,
    });
    Ok(Outcome { json, text, code: 0, note: None })
}

fn verdict_code(v: &Verdict) -> (u8, Option<String>) {
    match v.is_pvmd {
        Some(true) => (0, None),
        Some(false) => (1, None),
        None => (2, Some(format!("unknown: {}", v.certificate.trace.join("; ")))),
    }
}

fn pvmd_check(domain: &str, c: CriterionArg) -> Run {
    let d = descriptor_for_id(domain).map_err(|e| e.to_string())?;
    let v = match c {
        CriterionArg::Auto => check_auto(&d),
        CriterionArg::Thm24 => check(&d, Criterion::Thm24),
        CriterionArg::Cor26 => check(&d, Criterion::Cor26),
        CriterionArg::Cor27 => check(&d, Criterion::Cor27),
        CriterionArg::Griffin => check(&d, Criterion::Griffin),
    }
    .map_err(|e| e.to_string())?;
    let (code, note) = verdict_code(&v);
    let answer = match v.is_pvmd {
        Some(true) => "PvMD",
        Some(false) => "not a PvMD",
        None => "unknown",
    };
    let mut text = format!("domain: {}\ncriterion: {}\nverdict: {answer}\n", d.id, v.criterion);
    let cert = &v.certificate;
    if let Some(c) = &cert.closure {
        let _ = writeln!(text, "closure: {c}");
    }
    if let Some(o) = &cert.offending {
        let _ = writeln!(text, "offending: {o}");
    }
    if let Some(lf) = &cert.locally_finite {
        let _ = writeln!(text, "locally finite: {}", to_json(lf)?);
    }
    for t in &cert.trace {
        let _ = writeln!(text, "  {t}");
    }
    Ok(Outcome { json: to_json(&v)?, text, code, note })
}

fn yn(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ho_text(d: &HoDemo) -> String {
    let mut t = format!("level: {}\nfip bound: {} (tail holds: {})\n", d.level, d.fip.bound, yn(d.fip.tail_holds));
    let _ = writeln!(t, "membership (in D, in core, m_0..m_{}, tail):", d.level - 1);
    for r in &d.table {
        let mi: Vec<&str> = r.in_mi.iter().map(|&b| if b { "1" } else { "0" }).collect();
        let _ = writeln!(t, "  {}: {} {} [{}] {}", r.element, yn(r.in_d), yn(r.in_core), mi.join(" "), yn(r.in_tail));
    }
    let limit: Vec<String> = d.limit_members.iter().map(ToString::to_string).collect();
    let _ = writeln!(t, "limit lower bound members: {}", if limit.is_empty() { "∅".into() } else { limit.join(", ") });
    let c = &d.certificate;
    let _ = writeln!(t, "non-valuation certificate for ({}, {}), seed {}:", c.pair.0, c.pair.1, c.seed);
    for s in &c.steps {
        let _ = writeln!(
            t,
            "  {}: {} samples, {} instances, {} violations",
            s.statement,
            s.samples,
            s.instances,
            s.violations.len()
        );
    }
    let _ = writeln!(t, "  {}", c.conclusion);
    t
}

fn ho(level: usize, family: &str, seed: u64) -> Run {
    let cfg = HoConfig::new(level).map_err(|e| e.to_string())?;
    let fs = family
        .split(',')
        .map(|s| cfg.parse(s.trim()).map_err(|e| e.to_string()))
        .collect::<Result<Vec<_>, _>>()?;
    let demo = ho_demo(&cfg, &fs, seed).map_err(|e| e.to_string())?;
    let code = if demo.certificate.steps.iter().all(|s| s.violations.is_empty()) { 0 } else { 1 };
    Ok(Outcome { json: to_json(&demo)?, text: ho_text(&demo), code, note: None })
}

fn member(f: &str, domain: &str) -> Run {
    let d = IntDomain::parse_id(domain).map_err(|e| e.to_string())?;
    let poly = IntPoly::parse(f, &d).map_err(|e| e.to_string())?;
    let is_member = int_membership(&poly, &d).map_err(|e| e.to_string())?;
    let coords: Vec<String> = binomial_coordinates(&poly).iter().map(ToString::to_string).collect();
    let text = format!(
        "f: {poly}\ndomain: {}\nin Int(D): {}\nbinomial coordinates: [{}]\n",
        d.id(),
        yn(is_member),
        coords.join(", ")
    );
    let json = json!({ "f": poly.to_string(), "domain": d.id(), "member": is_member, "binomial_coordinates": coords });
    Ok(Outcome { json, text, code: if is_member { 0 } else { 1 }, note: None })
}

fn prime(p: u64, alpha: i64, precision: u32, f: &str) -> Run {
    let a = PAdicApprox::new(p, precision, alpha).map_err(|e| e.to_string())?;
    let poly = IntPoly::parse(f, &IntDomain::integers()).map_err(|e| e.to_string())?;
    let q = poly.to_q().ok_or_else(|| format!("{f} does not have rational coefficients"))?;
    let m = mpalpha_membership(&q, &a).map_err(|e| e.to_string())?;
    let zx = mpalpha_contract_zx(&a);
    let (code, note) = match m {
        MpMembership::In => (0, None),
        MpMembership::Out => (1, None),
        MpMembership::NeedsPrecision => (2, Some(format!("precision {precision} does not decide membership"))),
    };
    let text = format!(
        "f: {q}\nprime: m_{{{p},α}} with α ≡ {} mod {p}^{precision}\nmembership: {m}\ncontraction to Z[X]: {}\n",
        a.residue(),
        zx.ideal
    );
    let json = json!({
        "f": q.to_string(),
        "p": p,
        "alpha": a.residue().to_string(),
        "precision": precision,
        "membership": to_json(&m)?,
        "contraction": to_json(&zx)?,
    });
    Ok(Outcome { json, text, code, note })
}

fn classify_text(c: &LambdaClassification) -> String {
    let mut t = format!(
        "domain: {}\nΛ₀: {}\nΛ₁: {}\nD₀: {}\nD₁: {}\n",
        c.domain,
        c.lambda0_text,
        c.lambda1_text,
        c.d0.id(),
        c.d1.id()
    );
    for s in &c.sampled {
        let _ = writeln!(
            t,
            "  {} (residue field of size {}): witness {} integer-valued {}, in D_P[X] {}",
            s.prime,
            s.residue_size,
            s.witness,
            yn(s.witness_integer_valued),
            yn(s.witness_in_polynomial_ring)
        );
    }
    let _ = writeln!(t, "{}", c.reason);
    t
}

fn classify(domain: &str) -> Run {
    let d = IntDomain::parse_id(domain).map_err(|e| e.to_string())?;
    let c = lambda_classify(&d).map_err(|e| e.to_string())?;
    Ok(Outcome { json: to_json(&c)?, text: classify_text(&c), code: 0, note: None })
}

fn catalog() -> Run {
    let mut text = String::new();
    let mut rows = Vec::new();
    for id in catalog_ids() {
        let s = descriptor_for_id(id).map_err(|e| format!("{id}: {e}"))?.summary();
        let _ = writeln!(text, "{}\n  fraction field: {}\n  Y: {}\n  E(D): {}\n  t-Spec: {}", s.id, s.fraction_field, s.y, s.essential, s.t_spec);
        rows.push(to_json(&s)?);
    }
    let _ = writeln!(text, "HO:<n>\n  the level-n Heinzer-Ohm construction, n ≥ 2");
    Ok(Outcome { json: Value::Array(rows), text, code: 0, note: None })
}

fn verify_text(r: &SuiteReport) -> String {
    let mut t = format!("seed: {}\n", r.seed);
    for i in &r.items {
        let _ = writeln!(
            t,
            "  [{}] c{} {}: {} cases, {} ms  {}",
            if i.passed && i.within_budget { "PASS" } else { "FAIL" },
            i.criterion,
            i.id,
            i.cases,
            i.elapsed_ms,
            i.detail
        );
    }
    for c in &r.criteria {
        let _ =
            writeln!(t, "criterion {}: {} ({} ms, budget {} ms)", c.criterion, if c.passed { "PASS" } else { "FAIL" }, c.elapsed_ms, c.budget_ms);
    }
    t
}

fn verify(seed: u64, only: &[String]) -> Run {
    let only: Vec<&str> = only.iter().map(String::as_str).collect();
    let r = run_suite(seed, &only);
    if r.items.is_empty() {
        return Err(format!("no suite item matches {}", only.join(", ")));
    }
    let code = if r.all_passed { 0 } else { 1 };
    Ok(Outcome { json: to_json(&r)?, text: verify_text(&r), code, note: None })
}
