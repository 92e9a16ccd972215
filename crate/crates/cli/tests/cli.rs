use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = vec![];
    let mut err = vec![];
    let mut argv = vec!["smallchar"];
    argv.extend_from_slice(args);
    let code = smallchar_cli::run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn lines(s: &str) -> Vec<Value> {
    s.lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn verify_cor_hl_lists_h_and_l() {
    let (code, out, _) = run(&["verify", "cor-hl"]);
    assert_eq!(code, 0);
    let r = &lines(&out)[0];
    assert_eq!(r["claim_id"], "cor-hl/G2-p2-a1");
    assert_eq!(r["status"], "verified");
    assert_eq!(r["witness"]["h"].as_array().unwrap().len(), 10);
    assert_eq!(r["witness"]["l"].as_array().unwrap().len(), 11);
}

#[test]
fn classify_c3_at_3_is_empty() {
    let (code, out, _) = run(&["classify", "--type", "C", "--rank", "3", "--p", "3", "--alpha", "3"]);
    assert_eq!(code, 0);
    let r = &lines(&out)[0];
    assert_eq!(r["witness"]["intermediates"], Value::Array(vec![]));
    let (_, out, _) = run(&["classify", "--type", "C3", "--p", "2", "--alpha", "3"]);
    assert_eq!(lines(&out)[0]["witness"]["shape"], "plus_short");
}

#[test]
fn usage_errors_exit_2() {
    let (code, out, err) = run(&["verify", "unknown-id"]);
    assert_eq!(code, 2);
    assert!(out.is_empty() && err.contains("unknown claim id"));
    assert_eq!(run(&["classify", "--type", "G2", "--p", "2", "--alpha", "3"]).0, 2);
    assert_eq!(run(&["classify", "--type", "C", "--p", "2", "--alpha", "1"]).0, 2);
    assert_eq!(run(&["rank2-pairs", "--type", "X9", "--p", "2"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
}

#[test]
fn failures_exit_1() {
    // Λ³V gives a 9-dimensional stabilizer rather than 𝔩
    let (code, out, _) = run(&["verify", "stabilizers"]);
    assert_eq!(code, 1);
    assert!(lines(&out).iter().any(|r| r["status"] == "failed"));
    let (code, _, err) = run(&["rank2-pairs", "--type", "G2", "--p", "2"]);
    assert_eq!(code, 1);
    assert!(err.contains("edge hypothesis"));
    let (code, _, err) = run(&["--cap", "3", "classify", "--type", "F4", "--p", "2", "--alpha", "1"]);
    assert_eq!(code, 1);
    assert!(err.contains("resource"));
}

#[test]
fn rank2_pairs_f4() {
    let (code, out, _) = run(&["rank2-pairs", "--type", "F4", "--p", "2"]);
    assert_eq!(code, 0);
    let pairs = &lines(&out)[0]["witness"]["pairs"];
    assert_eq!(pairs, &serde_json::json!([[1, 4], [2, 1], [2, 4], [3, 1], [3, 4], [4, 1]]));
}

#[test]
fn tables_in_both_formats() {
    let (_, md, _) = run(&["tables"]);
    assert!(md.contains("| E8 |") && md.contains(" 57 |"));
    let (_, js, _) = run(&["tables", "--format", "json"]);
    let v: Value = serde_json::from_str(js.trim()).unwrap();
    assert_eq!(v[2]["rows"][6]["dim"], 57);
}

#[test]
fn seeded_output_is_stable() {
    let strip = |s: String| -> Vec<Value> {
        lines(&s)
            .into_iter()
            .map(|mut r| {
                r.as_object_mut().unwrap().remove("runtime_ms");
                r
            })
            .collect()
    };
    let a = strip(run(&["--seed", "11", "verify", "factorisation"]).1);
    let b = strip(run(&["verify", "factorisation", "--seed", "11"]).1);
    assert_eq!(a, b);
    assert_eq!(a[0]["witness"]["seed"], 11);
}

#[test]
fn binary_honours_cap_env() {
    let bin = env!("CARGO_BIN_EXE_smallchar");
    let o = Command::new(bin)
        .args(["classify", "--type", "B3", "--p", "2", "--alpha", "1"])
        .env("SMALLCHAR_CAP", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(1));
    let o = Command::new(bin).args(["verify", "lemma-chevalley", "quadric"]).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    let ids: Vec<String> = String::from_utf8(o.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["claim_id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids.first().unwrap(), "lemma-chevalley/A3");
    assert_eq!(ids.last().unwrap(), "quadric/quadric");
}
