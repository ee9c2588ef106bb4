use std::process::Command;

fn asw(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_asw")).args(args).env_remove("ASW_FIELD").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn zoo_build_reports_dimension() {
    let dir = std::env::temp_dir().join(format!("asw-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("a42.json");
    let (code, out) = asw(&["zoo", "build", "--family", "a", "--n", "4", "--d", "2", "--out", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.contains("\"dim\": 15"));
    let (code, back) = asw(&["import", "algebra", file.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(back, std::fs::read_to_string(&file).unwrap());
}

#[test]
fn verify_is_deterministic() {
    let a = asw(&["verify", "quotient", "--n", "4", "--d", "2"]);
    let b = asw(&["verify", "mainthm2", "--n", "4", "--d", "2"]);
    assert_eq!(a.0, 0);
    assert_eq!(a, b);
    assert!(a.1.contains("\"passed\": true"));
    let (code, out) = asw(&["verify", "auslander-step", "--n", "4", "--d", "1"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"end_dim\": 35"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(asw(&["verify", "no-such-suite"]).0, 2);
    assert_eq!(asw(&["export", "nothing:1,1"]).0, 2);
    assert_eq!(asw(&["zoo", "build", "--n", "2", "--d", "5"]).0, 2);
    assert_eq!(asw(&["bogus"]).0, 2);
}

#[test]
fn exports() {
    let (code, dot) = asw(&["export", "g:4,2", "--dot"]);
    assert_eq!(code, 0);
    assert_eq!(dot.matches("->").count(), 6);
    let (_, cartan) = asw(&["export", "a:4,2:cartan"]);
    let v: serde_json::Value = serde_json::from_str(&cartan).unwrap();
    assert_eq!(v["cartan"].as_array().unwrap().len(), 6);
}

#[test]
fn field_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_asw")).args(["verify", "cartan", "--max-n", "3"]).env("ASW_FIELD", "Fp:3").output().unwrap();
    assert!(String::from_utf8(out.stdout).unwrap().contains("\"field\": \"Fp:3\""));
    let out = Command::new(env!("CARGO_BIN_EXE_asw")).args(["--char", "4", "verify", "cartan"]).env_remove("ASW_FIELD").output().unwrap();
    assert_eq!(out.status.code(), Some(2));
}
