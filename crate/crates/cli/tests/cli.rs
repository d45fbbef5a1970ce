use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_positroid"));
    c.env_remove("POSITROID_MAX_N");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("spawn")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{args:?}: {}", stderr(&o));
    serde_json::from_slice(&o.stdout).unwrap()
}

fn fixture(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "fixtures", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn hstar(v: &Value, method: &str) -> Vec<i64> {
    v["hstar"][method]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_i64().unwrap())
        .collect()
}

#[test]
fn convert_examples() {
    let v = json(&["convert", "12,23,13,14"]);
    assert_eq!(v["positroid"]["decorated"], "3142");
    assert_eq!(v["positroid"]["bases"].as_array().unwrap().len(), 5);
    assert_eq!(v["positroid"]["connected"], true);
    assert_eq!(v["inputKind"], "necklace");

    let o = run(&["convert", r#"{"pi":[2,1,4,3],"colors":{}}"#, "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("disconnected: components {1,2},{3,4}"), "{}", stdout(&o));

    let v = json(&["convert", r#"{"n":4,"bases":[[1,2],[1,3],[1,4],[2,3],[2,4]]}"#]);
    assert_eq!(v["positroid"]["decorated"], "3142");
    assert_eq!(v["inputKind"], "bases");
}

#[test]
fn malformed_input_exits_2() {
    let o = run(&["convert", "1 2 2"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["convert", "{\"necklace\": [[1,2],\n [2,3],]}"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));
    let o = run(&["hstar", "12,23,13,14", "--method", "sideways"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["hstar", "12,23,13,14", "--method", "descents"]);
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["hstar", "12,23,13,14", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn hstar_examples() {
    let v = json(&["hstar", "123,235,345,145,125", "--method", "shelling"]);
    assert_eq!(hstar(&v, "shelling"), [1, 4, 3]);
    assert_eq!(v["labels"], 8);

    let v = json(&["hstar", "124,234,134,145,125", "--method", "all"]);
    for m in ["shelling", "inclusion-exclusion", "oracle"] {
        assert_eq!(hstar(&v, m), [1, 3, 1]);
    }
    assert_eq!(v["verdict"], "PASS");

    let v = json(&["hstar", "12,23,13,14", "--half-open", "--method", "descents"]);
    assert_eq!(hstar(&v, "descents"), [0, 0, 2]);

    let v = json(&["hstar", "12,23,34,45,51", "--w0", "31425"]);
    assert_eq!(hstar(&v, "shelling"), [1, 5, 5]);
    assert_eq!(v["w0"], "31425");
}

#[test]
fn disconnected_exits_3_for_connected_only_methods() {
    let o = run(&["hstar", "13,23,13,14"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stderr(&o).contains("decompose_direct_sum"));
    let v = json(&["hstar", "13,23,13,14", "--method", "oracle"]);
    assert_eq!(hstar(&v, "oracle"), [1, 1]);
    assert_eq!(hstar(&v, "direct"), [1, 1]);
    assert_eq!(v["positroid"]["dimension"], 2);
}

#[test]
fn input_sources() {
    let dir = std::env::temp_dir().join(format!("positroid-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let input = dir.join("pyramid.json");
    std::fs::write(&input, r#"{"n":4,"necklace":[[1,2],[2,3],[1,3],[1,4]]}"#).unwrap();
    let out = dir.join("out.json");
    let o = run(&[
        "hstar",
        "--input",
        input.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(o.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(hstar(&v, "shelling"), [1, 1]);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn ehrhart_and_triangulate() {
    let v = json(&["ehrhart", "12,23,13,14", "--tmax", "3"]);
    assert_eq!(v["counts"], serde_json::json!([1, 5, 14, 30]));
    let v = json(&["triangulate", "12,23,34,45,51", "--w0", "31425"]);
    assert_eq!(v["labels"].as_array().unwrap().len(), 11);
    assert_eq!(v["edges"].as_array().unwrap().len(), 15);
    let l = v["labels"].as_array().unwrap().iter().find(|l| l["w"] == "14235").unwrap();
    assert_eq!(l["window"], serde_json::json!([0, 2, 3, 4, 6]));
    assert_eq!(v["affineConsistent"], true);
}

#[test]
fn tree_examples() {
    let three_cell = r#"{"n":5,"cells":[{"color":"black","vertices":[1,2,3]},{"color":"white","vertices":[1,3,4]},{"color":"black","vertices":[1,4,5]}]}"#;
    let v = json(&["tree", three_cell]);
    assert_eq!(v["chains"], serde_json::json!([[3, 2, 1], [1, 3, 4], [5, 4, 1]]));
    assert_eq!(v["hstarTree"], serde_json::json!([1, 3, 1]));
    assert_eq!(v["verdict"], "PASS");
    let clash = r#"{"n":4,"cells":[{"color":"black","vertices":[1,2,3]},{"color":"black","vertices":[1,3,4]}]}"#;
    assert_eq!(run(&["tree", clash]).status.code(), Some(2));
}

fn atlas_lines(args: &[&str]) -> Vec<Value> {
    let o = run(args);
    assert!(o.status.success(), "{}", stderr(&o));
    stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn atlas_examples() {
    let find = |rows: &[Value], necklace: &str| -> Vec<i64> {
        let r = rows.iter().find(|r| r["positroid"]["necklace"] == necklace).unwrap();
        assert_eq!(r["verdict"], "PASS");
        hstar(r, "oracle")
    };
    let rows = atlas_lines(&["atlas", "2", "4"]);
    assert_eq!(find(&rows, "(12,23,31,41)"), [1, 1]);
    let rows = atlas_lines(&["atlas", "2", "5"]);
    assert_eq!(find(&rows, "(12,23,34,45,51)"), [1, 5, 5]);
    let rows = atlas_lines(&["atlas", "1", "3"]);
    assert_eq!(rows.len(), 1);
    assert_eq!(hstar(&rows[0], "shelling"), [1]);
    let all = atlas_lines(&["atlas", "2", "4", "--include-disconnected"]);
    assert!(all.len() > atlas_lines(&["atlas", "2", "4"]).len());
    let o = run(&["atlas", "2", "4", "--format", "csv"]);
    assert!(stdout(&o).starts_with("n,rank,necklace,decorated,connected,labels,hstar,verdict\n"));
}

#[test]
fn atlas_size_cap() {
    let o = bin().args(["atlas", "2", "5"]).env("POSITROID_MAX_N", "4").output().unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = run(&["atlas", "3", "8"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_byte_stable() {
    let a = run(&["atlas", "3", "6", "--jobs", "1"]);
    let b = run(&["atlas", "3", "6", "--jobs", "4"]);
    let c = run(&["atlas", "3", "6", "--jobs", "4"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(b.stdout, c.stdout);
}

#[test]
fn verify_scopes() {
    let o = run(&["verify"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let o = run(&["verify", "--scope", "fixtures", "--fixtures", &fixture("examples.json")]);
    assert!(o.status.success(), "{}", stderr(&o));
    let o = run(&["verify", "--scope", "exhaustive", "--max-n", "5", "--samples", "40", "--format", "text"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stdout(&o).contains("w0-independence"));
}

#[test]
fn corrupted_fixture_exits_1() {
    let o = run(&["verify", "--scope", "fixtures", "--fixtures", &fixture("corrupted.json")]);
    assert_eq!(o.status.code(), Some(1));
    let err = stderr(&o);
    assert!(err.contains("first counterexample"), "{err}");
    assert!(err.contains("12,23,34,45,51"), "{err}");
}

/// h* lists start with 1 for closed polytopes and 0 for half-open ones.
#[test]
fn coefficient_conventions() {
    for r in atlas_lines(&["atlas", "2", "5", "--include-disconnected"]) {
        for (_, c) in r["hstar"].as_object().unwrap() {
            assert_eq!(c[0], 1, "{r}");
            assert!(c.as_array().unwrap().iter().all(|x| x.as_i64().unwrap() >= 0));
        }
    }
    let v = json(&["hstar", "124,234,134,145,125", "--half-open", "--method", "all"]);
    for (_, c) in v["hstar"].as_object().unwrap() {
        assert_eq!(c[0], 0);
    }
}

/// Validates every kind of report against docs/report.schema.json using the
/// Python `jsonschema` package.
#[test]
fn reports_match_schema() {
    let probe = Command::new("python3").args(["-c", "import jsonschema"]).output();
    if !probe.is_ok_and(|o| o.status.success()) {
        eprintln!("python3 with jsonschema not available; schema validation not run");
        return;
    }
    let two_cell = r#"{"n":4,"cells":[{"color":"black","vertices":[1,2,3]},{"color":"white","vertices":[1,3,4]}]}"#;
    let mut docs: Vec<Value> = vec![
        json(&["convert", "12,23,13,14"]),
        json(&["hstar", "124,234,134,145,125", "--method", "all", "--timing"]),
        json(&["hstar", "12,23,13,14", "--half-open", "--method", "all"]),
        json(&["hstar", "13,23,13,14", "--method", "all"]),
        json(&["ehrhart", "13,23,13,14"]),
        json(&["triangulate", "12,23,34,45,51"]),
        json(&["tree", two_cell]),
        json(&["verify"]),
    ];
    docs.extend(atlas_lines(&["atlas", "2", "4", "--include-disconnected"]));
    let schema: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "docs", "report.schema.json"].iter().collect();
    let script = r#"
import json, sys, jsonschema
schema = json.load(open(sys.argv[1]))
jsonschema.Draft202012Validator.check_schema(schema)
v = jsonschema.Draft202012Validator(schema)
bad = 0
for i, doc in enumerate(json.load(sys.stdin)):
    for e in v.iter_errors(doc):
        bad += 1
        print(i, e.message, file=sys.stderr)
sys.exit(1 if bad else 0)
"#;
    let mut child = Command::new("python3")
        .args(["-c", script, schema.to_str().unwrap()])
        .stdin(std::process::Stdio::piped())
        .stderr(std::process::Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child
        .stdin
        .take()
        .unwrap()
        .write_all(serde_json::to_string(&docs).unwrap().as_bytes())
        .unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let bogus = serde_json::json!([{"positroid": 1}]);
    let mut child = Command::new("python3")
        .args(["-c", script, schema.to_str().unwrap()])
        .stdin(std::process::Stdio::piped())
        .stderr(std::process::Stdio::null())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(bogus.to_string().as_bytes()).unwrap();
    assert!(!child.wait().unwrap().success());
}
