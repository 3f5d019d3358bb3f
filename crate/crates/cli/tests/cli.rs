use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_patchspec"));
    c.args(args).env_remove("PATCHSPEC_SEED");
    for (k, v) in env {
        c.env(k, v);
    }
    c.output().expect("binary runs")
}

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--output", "json"]);
    let o = run(&all);
    (code(&o), serde_json::from_str(&stdout(&o)).expect("valid json"))
}

#[test]
fn golden_exit_codes() {
    let z = data("spec_z.model");
    let y = data("cofinite.subset");
    let corpus: &[(&[&str], i32)] = &[
        (&["pvmd", "check", "--domain", "ZX"], 0),
        (&["pvmd", "check", "--domain", "HO:4"], 1),
        (&["pvmd", "check", "--domain", "Z", "--criterion", "cor26"], 0),
        (&["pvmd", "check", "--domain", "nope"], 2),
        // Griffin needs Y of finite character, which this pullback lacks.
        (&["pvmd", "check", "--domain", "pullback:1:Z", "--criterion", "griffin"], 2),
        (&["ho", "demo", "--level", "4", "--family", "T,U"], 0),
        (&["ho", "demo", "--level", "4", "--family", "1"], 2),
        (&["closure", "--model", &z, "--subset", &y, "--topology", "patch"], 0),
        (&["closure", "--model", "/nonexistent", "--subset", &y], 2),
        (&["intpoly", "member", "--f", "1/2*X^2 + 1/2*X", "--domain", "Z"], 0),
        (&["intpoly", "member", "--f", "1/2*X", "--domain", "Zloc:2,3"], 1),
        (&["intpoly", "prime", "--p", "2", "--alpha", "0", "--precision", "3", "--f", "1/2*X^2 + 1/2*X"], 0),
        (&["intpoly", "prime", "--p", "2", "--alpha", "1", "--precision", "3", "--f", "X"], 1),
        (&["intpoly", "prime", "--p", "2", "--alpha", "0", "--precision", "1", "--f", "1/2*X"], 2),
        (&["intpoly", "classify", "--domain", "Z"], 0),
        (&["catalog"], 0),
        (&["pvmd", "check", "--domain", "Z", "--bogus"], 2),
        (&["pvmd", "check", "--domain", "Z", "--criterion", "thm99"], 2),
        (&["pvmd", "check", "--domain", "Z", "--output", "yaml"], 2),
    ];
    for (args, want) in corpus {
        let o = run(args);
        assert_eq!(code(&o), *want, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        if *want == 2 {
            let err = String::from_utf8_lossy(&o.stderr);
            assert!(!err.trim().is_empty(), "{args:?} gave no diagnostic");
        }
    }
}

#[test]
fn errors_are_one_line() {
    for args in [&["pvmd", "check", "--domain", "nope"][..], &["intpoly", "member", "--f", "X^", "--domain", "Z"]] {
        let o = run(args);
        assert_eq!(code(&o), 2);
        assert_eq!(String::from_utf8_lossy(&o.stderr).trim_end().lines().count(), 1, "{args:?}");
    }
}

#[test]
fn infinite_subset_gains_the_generic_point() {
    let o = run(&["closure", "--model", &data("spec_z.model"), "--subset", &data("cofinite.subset")]);
    let out = stdout(&o);
    assert!(out.contains("closure: (0), all closed points of Z except {(5), (7)}"), "{out}");
    assert!(out.contains("added: (0)\n"), "{out}");
    let o = run(&["closure", "--model", &data("spec_z.model"), "--subset", &data("finite.subset")]);
    assert!(stdout(&o).contains("added: ∅\n"), "{}", stdout(&o));
    let o = run(&["closure", "--model", &data("spec_z.model"), "--subset", &data("finite.subset"), "--topology", "zariski"]);
    assert!(stdout(&o).contains("closure: (2), (3)\n"), "{}", stdout(&o));
}

#[test]
fn poset_points_print_sorted() {
    let args = ["closure", "--model", &data("diamond.model"), "--subset", &data("diamond.subset"), "--topology", "zariski"];
    let out = stdout(&run(&args));
    assert!(out.contains("subset: p, q\n"), "{out}");
    assert!(out.contains("closure: m, p, q\n"), "{out}");
}

#[test]
fn json_round_trips_byte_identically() {
    let z = data("spec_z.model");
    let y = data("cofinite.subset");
    let cases: Vec<Vec<&str>> = vec![
        vec!["pvmd", "check", "--domain", "ZX"],
        vec!["pvmd", "check", "--domain", "HO:4"],
        vec!["pvmd", "check", "--domain", "pullback:1:Z"],
        vec!["ho", "demo", "--level", "3", "--family", "T,U,T + X0*U"],
        vec!["closure", "--model", &z, "--subset", &y],
        vec!["intpoly", "member", "--f", "1/6*X^3 - 1/6*X", "--domain", "Z"],
        vec!["intpoly", "prime", "--p", "3", "--alpha", "4", "--precision", "2", "--f", "1/3*X^3 - 1/3*X"],
        vec!["intpoly", "classify", "--domain", "QX"],
        vec!["catalog"],
    ];
    for mut args in cases {
        args.extend(["--output", "json"]);
        let out = stdout(&run(&args));
        let v: Value = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{args:?}: {e}"));
        assert_eq!(serde_json::to_string_pretty(&v).unwrap() + "\n", out, "{args:?}");
    }
}

#[test]
fn pvmd_json_shape() {
    let (c, v) = json(&["pvmd", "check", "--domain", "HO:4"]);
    assert_eq!(c, 1);
    let keys: Vec<&String> = v.as_object().unwrap().keys().collect();
    assert_eq!(keys, ["is_pvmd", "criterion", "certificate"]);
    assert_eq!(v["is_pvmd"], Value::Bool(false));
    assert_eq!(v["certificate"]["offending"], "Y_U");
    let (c, v) = json(&["pvmd", "check", "--domain", "Q", "--criterion", "cor27"]);
    assert_eq!(c, 0);
    assert_eq!(v["criterion"], "cor27");
}

#[test]
fn seed_comes_from_flag_then_environment() {
    let args = ["ho", "demo", "--level", "2", "--family", "T", "--output", "json"];
    let seed = |o: Output| -> u64 {
        let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
        v["certificate"]["seed"].as_u64().unwrap()
    };
    assert_eq!(seed(run_env(&args, &[("PATCHSPEC_SEED", "77")])), 77);
    let mut with_flag = args.to_vec();
    with_flag.extend(["--seed", "5"]);
    assert_eq!(seed(run_env(&with_flag, &[("PATCHSPEC_SEED", "77")])), 5);
    let a = stdout(&run_env(&args, &[("PATCHSPEC_SEED", "9")]));
    let b = stdout(&run_env(&args, &[("PATCHSPEC_SEED", "9")]));
    assert_eq!(a, b);
}

#[test]
fn verify_subset_of_the_suite() {
    let o = run(&["verify", "--only", "poset-oracle", "--only", "spec-z-closure"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("criterion 1: PASS") && out.contains("criterion 2: PASS"), "{out}");
    assert_eq!(code(&run(&["verify", "--only", "no-such-item"])), 2);
}
