use std::io::Write;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_roughdial")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().expect("exit code")
}

#[test]
fn eval_prints_class_with_bounds() {
    assert_eq!(stdout(&["eval", "abcq (.) [q]"]).trim(), "[q] bounds=(q,q)");
    assert_eq!(stdout(&["eval", "~ 0"]).trim(), "[S] bounds=(S,S)");
}

#[test]
fn space_listing() {
    assert_eq!(stdout(&["space", "classes"]).lines().count(), 17);
    assert_eq!(stdout(&["space", "triples"]).lines().count(), 63);
    let csv = stdout(&["--format", "csv", "space", "triples"]);
    assert_eq!(csv.lines().next(), Some("x,lower,upper"));
    assert!(csv.contains("\nabce,abc,abcef\n"));
}

#[test]
fn json_output_parses() {
    let v: serde_json::Value = serde_json::from_str(&stdout(&["--format", "json", "crad", "plus", "(a,[a])", "(b,[b])"])).unwrap();
    assert_eq!(v[0]["value"], "(ab,[a])");
}

#[test]
fn counting_and_tsr() {
    let out = stdout(&["count", "ipc", "--seq", "f,b,c,a,k,i,n,h,e,l,g,m", "--pairs", "a-b,b-c,e-f,i-k,l-m,m-n,g-h"]);
    assert_eq!(out.trim(), "1_1 2_1 1_2 1_3 2_3 1_4 2_4 3_4 4_4 5_4 6_4 7_4");
    assert_eq!(stdout(&["opposition", "tsr", "--evidence", "-,-"]).trim(), "T -> F^- -> F_-");
}

#[test]
fn opposition_commands() {
    assert!(stdout(&["opposition", "classify", "--case", "weather", "rain", "dry"]).starts_with("Contradiction"));
    assert!(stdout(&["opposition", "tables", "--joint", "15,16,17"]).starts_with("unsatisfiable"));
    assert!(stdout(&["opposition", "hexagon", "ab"]).contains("L/Lc: Contradiction"));
}

#[test]
fn checks_pass_on_example() {
    for suite in ["gos", "admissible", "cera", "prerough", "essential"] {
        let out = stdout(&["check", suite, "--random", "2", "--seed", "7"]);
        assert!(!out.contains("fail"), "{suite}: {out}");
    }
    assert!(stdout(&["negation", "check"]).contains("g^4 = g^2: true"));
}

#[test]
fn exit_codes() {
    assert_eq!(code(&["eval", "bc (+"]), 2);
    assert_eq!(code(&["eval", "neg bc"]), 1);
    assert_eq!(code(&["eval", "bz"]), 2);
    assert_eq!(code(&["crad", "times", "(afq,[0])", "(a,[eq])"]), 1);
    assert_eq!(code(&["--cap", "9", "negation", "falsify"]), 4);
    assert_eq!(code(&["--cap", "10", "parthood", "analyze", "natural"]), 4);
    assert_eq!(code(&["opposition", "classify", "--case", "nope", "a", "b"]), 3);

    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"universe":["a","b"],"partition":["a"]}}"#).unwrap();
    let path = f.path().to_str().unwrap();
    assert_eq!(code(&["--model", path, "space", "show"]), 3);
    let mut g = tempfile::NamedTempFile::new().unwrap();
    write!(g, r#"{{"universe":["a"],"surprise":true}}"#).unwrap();
    assert_eq!(code(&["--model", g.path().to_str().unwrap(), "space", "show"]), 3);
}

#[test]
fn negation_profile_lists_failed_axioms() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"universe":["x"],"poset":{{"elements":["0","1"],"leq":[["0","1"]]}},"negation":["0","1"]}}"#).unwrap();
    let out = run(&["--model", f.path().to_str().unwrap(), "negation", "check"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("fail"));
}

#[test]
fn failing_check_exits_one() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    // An upper table that is not extensive.
    write!(f, r#"{{"universe":["a","b"],"granules":["a","b"],
        "lower":{{"0":"0","a":"a","b":"b","ab":"ab"}},
        "upper":{{"0":"0","a":"0","b":"b","ab":"ab"}}}}"#).unwrap();
    assert_eq!(code(&["--model", f.path().to_str().unwrap(), "check", "gos"]), 1);
}
