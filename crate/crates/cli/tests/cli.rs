use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::{json, Value};

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_structura")).args(args).env_remove("STRUCTURA_MAX_SEARCH").output().unwrap()
}

fn run_path(args: &[&str], paths: &[&Path]) -> Output {
    let mut all: Vec<String> = args.iter().map(|s| s.to_string()).collect();
    all.extend(paths.iter().map(|p| p.display().to_string()));
    let refs: Vec<&str> = all.iter().map(String::as_str).collect();
    run(&refs)
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_reports() {
    let out = run_path(&["analyze"], &[&fixture("identity2.json")]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!((r["rank"].clone(), r["degree"].clone()), (json!(2), json!(0)));
    for key in ["colspan_indices", "rowspan_indices", "inf_partial_mults"] {
        assert_eq!(r[key], json!([0, 0]), "{key}");
    }
    assert_eq!(r["version"], json!(env!("CARGO_PKG_VERSION")));

    let r = stdout_json(&run_path(&["analyze"], &[&fixture("jordan.json")]));
    assert_eq!(r["invariant_factors"], json!([["1"], ["0", "0", "1"]]));
    assert_eq!(r["inf_partial_mults"], json!([0, 0]));
    for label in ["eqf1", "eqsums_left", "eqsums_right", "eqsumklfa", "eqIST"] {
        assert_eq!(r["identities"][label]["pass"], json!(true), "{label}");
    }

    let r = stdout_json(&run_path(&["analyze"], &[&fixture("one_over_s.json")]));
    assert_eq!(r["numerators"], json!([["1"]]));
    assert_eq!(r["denominators"], json!([["0", "1"]]));
    assert_eq!(r["inf_orders"], json!([1]));
    assert_eq!(r["identities"]["eqIST"]["pass"], json!(true));
}

#[test]
fn analyze_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let zero = dir.path().join("zero.json");
    std::fs::write(&zero, r#"{"m": 1, "n": 1, "entries": [[[]]]}"#).unwrap();
    assert_eq!(code(&run_path(&["analyze"], &[&zero])), 2);
    let garbage = dir.path().join("garbage.json");
    std::fs::write(&garbage, "not json").unwrap();
    assert_eq!(code(&run_path(&["analyze"], &[&garbage])), 2);
}

#[test]
fn check_worked_example() {
    let out = run_path(&["check"], &[&fixture("worked_example.json")]);
    assert_eq!(code(&out), 0);
    let r = stdout_json(&out);
    assert_eq!(r["feasible"], json!(true));
    assert_eq!(r["g_sequence"], json!([6, 4]));
    for label in ["eqf1", "eqprec", "eqx>0", "eqy>0"] {
        assert_eq!(r["conditions"][label]["verdict"], json!("pass"), "{label}");
    }
    // (3, 1) ≺ (4, 0) through partial sums
    assert_eq!(r["conditions"]["eqprec"]["lhs"], json!([3, 4]));
    assert_eq!(r["conditions"]["eqprec"]["rhs"], json!([4, 4]));

    let out = run_path(&["check"], &[&fixture("worked_example_d6.json")]);
    assert_eq!(code(&out), 1);
    let r = stdout_json(&out);
    assert_eq!(r["failing"], json!(["eqprec"]));
    let (lhs, rhs) = (&r["conditions"]["eqprec"]["lhs"], &r["conditions"]["eqprec"]["rhs"]);
    assert_ne!(lhs[1], rhs[1]);

    assert_eq!(code(&run_path(&["check"], &[&fixture("unsorted_k.json")])), 2);
}

#[test]
fn construct_exit_codes() {
    let out = run_path(&["construct"], &[&fixture("worked_example.json")]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("algebraically closed"));

    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("out.json");
    let out = run_path(&["construct"], &[&fixture("worked_example_d6.json"), Path::new("-o"), &target]);
    assert_eq!(code(&out), 1);
    assert!(!target.exists());

    let eigen = dir.path().join("eigen.json");
    std::fs::write(
        &eigen,
        r#"{"variant": "eigenstructure", "m": 2, "n": 2, "r": 1, "d": 1, "alpha": [[1]], "f": [0], "right": [1], "left": [0]}"#,
    )
    .unwrap();
    assert_eq!(code(&run_path(&["check"], &[&eigen])), 0);
    assert_eq!(code(&run_path(&["construct"], &[&eigen])), 2);

    let out = Command::new(env!("CARGO_BIN_EXE_structura"))
        .args(["construct", fixture("p3_split.json").to_str().unwrap()])
        .env("STRUCTURA_MAX_SEARCH", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 4);
}

fn assert_round_trip(name: &str) {
    let dir = tempfile::tempdir().unwrap();
    let built = dir.path().join("built.json");
    let out = run_path(&["construct"], &[&fixture(name), Path::new("-o"), &built]);
    assert_eq!(code(&out), 0, "{name}: {}", String::from_utf8_lossy(&out.stderr));
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&built).unwrap()).unwrap();
    assert_eq!(report["verification"]["pass"], json!(true));

    let p: Value = serde_json::from_str(&std::fs::read_to_string(fixture(name)).unwrap()).unwrap();
    let a = stdout_json(&run_path(&["analyze"], &[&built]));
    let pairs: &[(&str, &str)] = if p.get("eps").is_some() {
        &[("q", "inf_orders"), ("k", "colspan_indices"), ("l", "rowspan_indices")]
    } else {
        &[("d", "degree"), ("f", "inf_partial_mults"), ("k", "colspan_indices"), ("l", "rowspan_indices"), ("right", "right_indices"), ("left", "left_indices")]
    };
    for (pkey, akey) in pairs {
        if let Some(want) = p.get(*pkey) {
            assert_eq!(&a[*akey], want, "{name}: {pkey}");
        }
    }
    assert_eq!(code(&run_path(&["verify"], &[&built, &fixture(name)])), 0);
}

#[test]
fn construct_round_trips() {
    for name in ["p3_split.json", "p1_bases.json", "r2_rational.json"] {
        assert_round_trip(name);
    }
}

#[test]
fn construct_is_deterministic() {
    let first = run_path(&["construct"], &[&fixture("p3_split.json")]);
    let second = run_path(&["construct"], &[&fixture("p3_split.json")]);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    let seeded = run_path(&["construct", "--seed", "3", "--no-verify"], &[&fixture("p3_split.json")]);
    let r = stdout_json(&seeded);
    assert_eq!(r["seed"], json!(3));
    assert_eq!(r["verification"], Value::Null);
}

#[test]
fn verify_detects_mismatch() {
    let out = run_path(&["verify"], &[&fixture("jordan.json"), &fixture("p3_split.json")]);
    assert_eq!(code(&out), 2);
    let dir = tempfile::tempdir().unwrap();
    let wrong = dir.path().join("wrong.json");
    std::fs::write(
        &wrong,
        r#"{"variant": "P2_span_indices", "m": 2, "n": 2, "r": 2, "d": 1, "alpha": [[1], [0, 1]], "f": [0, 1], "k": [0, 0], "l": [0, 0]}"#,
    )
    .unwrap();
    let out = run_path(&["verify"], &[&fixture("jordan.json"), &wrong]);
    assert_eq!(code(&out), 1);
    let fields: Vec<String> =
        stdout_json(&out)["mismatches"].as_array().unwrap().iter().map(|m| m["field"].as_str().unwrap().to_string()).collect();
    assert_eq!(fields, vec!["invariant_factors", "inf_partial_mults"]);
}

#[test]
fn minor_select_examples() {
    let r = stdout_json(&run_path(&["minor-select", "--z", "1"], &[&fixture("identity2.json")]));
    assert_eq!((r["rows"].clone(), r["cols"].clone(), r["minor"].clone()), (json!([1]), json!([1]), json!(["1"])));

    let r = stdout_json(&run_path(&["minor-select", "--z", "1,3,4", "--brute"], &[&fixture("minor5.json")]));
    assert_eq!(r["z_star"], json!([2, 3, 5]));
    let (rows, cols) = (r["rows"].as_array().unwrap(), r["cols"].as_array().unwrap());
    for (x, b) in cols.iter().zip([1, 3, 4]) {
        assert!(x.as_u64().unwrap() <= b);
    }
    for (x, b) in rows.iter().zip([2, 3, 5]) {
        assert!(x.as_u64().unwrap() <= b);
    }
    assert_eq!(r["selection_admissible"], json!(true));

    let dir = tempfile::tempdir().unwrap();
    let singular = dir.path().join("singular.json");
    std::fs::write(&singular, r#"{"m": 2, "n": 2, "entries": [[[1], [1]], [[1], [1]]]}"#).unwrap();
    assert_eq!(code(&run_path(&["minor-select", "--z", "1"], &[&singular])), 1);
}

#[test]
fn minor_select_matches_brute_force() {
    let dir = tempfile::tempdir().unwrap();
    let mut tested = 0;
    for seed in 0..12u64 {
        let entries: Vec<Vec<Value>> = (0..4u64)
            .map(|i| {
                (0..4u64)
                    .map(|j| {
                        let x = (seed * 31 + i * 7 + j * 13 + i * j * seed) % 5;
                        if x == 0 { json!([]) } else { json!([x as i64 - 2, (i + j + seed) % 2]) }
                    })
                    .collect()
            })
            .collect();
        let path = dir.path().join(format!("m{seed}.json"));
        std::fs::write(&path, json!({ "m": 4, "n": 4, "entries": entries }).to_string()).unwrap();
        for z in ["1,2", "1,3", "1,4", "2,3", "2,4", "3,4"] {
            let out = run_path(&["minor-select", "--z", z, "--brute"], &[&path]);
            if code(&out) == 1 {
                break;
            }
            assert_eq!(stdout_json(&out)["selection_admissible"], json!(true), "seed {seed} z {z}");
            tested += 1;
        }
    }
    assert!(tested >= 30, "only {tested} nonsingular cases");
}
