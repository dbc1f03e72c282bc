use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data").join(name)
}

fn hyperlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlab")).args(args).output().expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn paper() -> String {
    data("paper_24.json").display().to_string()
}

fn example() -> String {
    data("paper_24_fuzzy.json").display().to_string()
}

#[test]
fn validate_exit_codes() {
    let ok = hyperlab(&["validate", &paper()]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));
    assert!(stdout(&ok).contains("all axioms hold"));

    let mut file: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(data("paper_24.json")).unwrap()).unwrap();
    let entry = file["f"]
        .as_array_mut()
        .unwrap()
        .iter_mut()
        .find(|e| e["args"] == serde_json::json!([1, 2]))
        .unwrap();
    entry["out"] = serde_json::json!([2]);
    let dir = tempfile::tempdir().unwrap();
    let mutated = dir.path().join("mutated.json");
    std::fs::write(&mutated, file.to_string()).unwrap();
    let bad = hyperlab(&["validate", mutated.to_str().unwrap()]);
    assert_eq!(code(&bad), 1);
    assert!(stdout(&bad).contains("FAIL"));

    let json = hyperlab(&["--json", "validate", mutated.to_str().unwrap()]);
    let report: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let failing: Vec<_> = report.as_object().unwrap().values().filter(|c| c["holds"] == false).collect();
    assert!(!failing.is_empty());
    assert!(failing.iter().all(|c| c["counterexample"].is_array()));

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{ nope").unwrap();
    assert_eq!(code(&hyperlab(&["validate", broken.to_str().unwrap()])), 2);
    assert_eq!(code(&hyperlab(&["validate", "no/such/file.json"])), 2);
}

#[test]
fn catalog_names_work_as_structures() {
    assert_eq!(code(&hyperlab(&["validate", "zmod(4,2,4)"])), 0);
    let out = hyperlab(&["--json", "ideals", "paper_24"]);
    assert_eq!(code(&out), 0);
    let found: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(found["ideals"], serde_json::json!([[0], [0, 1], [0, 2], [0, 1, 2, 3]]));
}

#[test]
fn classify_the_example() {
    let (p, e) = (paper(), example());
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "alphabeta", "--alpha", "in", "--beta", "invq"])), 0);
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "invq", "--variant", "paper-literal"])), 0);

    let ord = hyperlab(&["classify", &p, &e, "--kind", "ordinary"]);
    assert_eq!(code(&ord), 1);
    assert!(stdout(&ord).contains("(1, 2) -> 3"), "{}", stdout(&ord));

    let json = hyperlab(&["--json", "classify", &p, &e, "--kind", "ordinary"]);
    let report: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(report["verdict"], false);
    assert_eq!(report["violation"]["elements"], serde_json::json!([1, 2]));
    assert_eq!(report["violation"]["target"], 3);

    let imp = hyperlab(&["classify", &p, &e, "--kind", "implication", "--op", "Igr", "--t", "1/2,1/2"]);
    assert_eq!(code(&imp), 1);
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "implication", "--op", "Ig"])), 0);

    let domain = ["--kind", "alphabeta", "--domain", "interval"];
    assert_eq!(code(&hyperlab(&[&["classify", p.as_str(), e.as_str()][..], &domain[..]].concat())), 1);
}

#[test]
fn classify_input_errors() {
    let (p, e) = (paper(), example());
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "alphabeta", "--alpha", "inandq"])), 2);
    let swapped = ["classify", &p, &e, "--kind", "threshold", "--s1", "1,1", "--s2", "0,0"];
    assert_eq!(code(&hyperlab(&swapped)), 2);
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "threshold"])), 2);
    assert_eq!(code(&hyperlab(&["classify", "zmod(5,2,2)", &e, "--kind", "ordinary"])), 2);
    assert_eq!(code(&hyperlab(&["classify", &p, &e, "--kind", "implication", "--op", "Ig", "--t", "0,0"])), 2);
}

#[test]
fn level_table() {
    let out = hyperlab(&["levels", &paper(), &example()]);
    assert_eq!(code(&out), 1);
    let text = stdout(&out);
    assert!(text.contains("{0,1,2}"), "{text}");
    assert_eq!(code(&hyperlab(&["levels", &paper(), &example(), "--range", "lower"])), 0);
}

#[test]
fn verify_runs() {
    let t3 = hyperlab(&["verify", "--theorems", "T3", "--structures", "paper_24"]);
    assert_eq!(code(&t3), 0);
    assert!(stdout(&t3).contains("PASS T3 (16 trials"));

    let literal = ["verify", "--theorems", "T9", "--variant", "paper-literal", "--count", "30", "--structures", "paper_24"];
    let out = hyperlab(&literal);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL T9"));

    assert_eq!(code(&hyperlab(&["verify", "--theorems", "T42"])), 2);
}

#[test]
fn verify_json_is_reproducible() {
    let args = ["--json", "verify", "--theorems", "T1,T5", "--count", "20", "--structures", "paper_24,zmod(4,2,4)"];
    let first = hyperlab(&args);
    let second = hyperlab(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
    for line in stdout(&first).lines() {
        let res: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(res["seed"], 42);
        assert_eq!(res["variant"], "corrected");
        assert_eq!(res["failures"], serde_json::json!([]));
    }
}

#[test]
fn generated_sets_load_back() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().join("sets");
    let out = hyperlab(&["gen", "paper_24", "--count", "4", "--seed", "3", "--out-dir", out_dir.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let mut files: Vec<_> = std::fs::read_dir(&out_dir).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert_eq!(files.len(), 4);
    for f in files {
        let c = code(&hyperlab(&["classify", "paper_24", f.to_str().unwrap(), "--kind", "ordinary"]));
        assert!(c == 0 || c == 1);
    }
    let a = hyperlab(&["--json", "gen", "paper_24", "--count", "3", "--chain-only"]);
    let b = hyperlab(&["--json", "gen", "paper_24", "--count", "3", "--chain-only"]);
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(code(&hyperlab(&["gen", "paper_24", "--q", "1"])), 2);
}
