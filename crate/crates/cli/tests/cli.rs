use std::process::{Command, Output};

fn soergel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_soergel"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

#[test]
fn normalize_square() {
    let o = soergel(&["alg", "normalize", "C1*C1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(v + v^-1)*C1\n");
}

#[test]
fn verify_all_a2_succeeds() {
    let o = soergel(&["verify-all", "--group", "a2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn structure_table_csv() {
    let o = soergel(&["grot", "table", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("a,b,c,coefficient"));
    assert_eq!(out.lines().count(), 8001);
}

#[test]
fn parse_errors_exit_2_with_column() {
    let o = soergel(&["grot", "mul", "B:t1 * Q"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("column 8"), "{err}");
    assert!(err.contains("^"));

    let o = soergel(&["alg", "normalize", "C1*C7"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("column 5"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(soergel(&["grot", "table", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(soergel(&["hilbert", "--group", "i2:99"]).status.code(), Some(2));
    assert_eq!(soergel(&["explore", "closure", "--group", "b2", "--generators", "B:st"]).status.code(), Some(2));
}

#[test]
fn failed_verification_prints_json_witness() {
    let o = soergel(&["explore", "a3-checks"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("json on stdout");
    let failed: Vec<_> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == false)
        .collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(v["data"]["square_shape_witnesses"].as_array().unwrap().len(), 4);
}

#[test]
fn json_output_is_stable() {
    let a = stdout(&soergel(&["grot", "table", "--variant", "extended", "--format", "json"]));
    let b = stdout(&soergel(&["grot", "table", "--variant", "extended", "--format", "json"]));
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["rank"], 25);
}

#[test]
fn hilbert_csv() {
    let o = soergel(&["hilbert", "--group", "b2", "--set", "W", "--maxdeg", "12", "--format", "csv"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("set,degree,dim"));
    let dims: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    assert_eq!(dims.len(), 7);
    assert_eq!(dims[0], "1");
}

#[test]
fn characters_and_products() {
    let o = soergel(&["char", "word", "B:tst * B:s * B:t", "--group", "b2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_object().unwrap().len(), 8);
    assert!(v.as_object().unwrap().values().all(|m| m == 1));

    let o = soergel(&["grot", "mul", "B:t1"]);
    assert_eq!(stdout(&o), "v*R{e,s1}\n");
}

#[test]
fn b2_and_closure_reports() {
    let o = soergel(&["explore", "b2-counterexample"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = soergel(&["explore", "closure", "--group", "a2", "--generators", "B:t1,B:t2,B:t3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reached"].as_array().unwrap().len(), 20);
    assert!(v["opaque"].as_array().unwrap().is_empty());
}
