use std::process::{Command, Output};

use serde_json::Value;

fn cubix(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cubix"))
        .args(args)
        .output()
        .expect("run cubix")
}

fn json(args: &[&str]) -> (i32, Value) {
    let out = cubix(args);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{args:?}: {e}\n{}", String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

#[test]
fn classify_example() {
    let (code, v) = json(&["classify", "--field", "rat", "--cubic", "1,0,6,-7"]);
    assert_eq!(code, 0);
    assert_eq!(v["stratum"], "GenericSquare");
    assert_eq!(v["qn"], "81");
    assert_eq!(v["reducible"], true);
    assert_eq!(v["invariant"]["q"], "9");
}

#[test]
fn classify_nonsquare_and_extension_fields() {
    let (_, v) = json(&["classify", "--field", "rat", "--cubic", "1,0,-3,1"]);
    assert_eq!(v["stratum"], "GenericNonSquare");
    assert_eq!(v["qn"], "-3");
    assert_eq!(v["extension"], "quad:rat:-3");
    assert_eq!(v["reducible"], false);
    let (code, v) = json(&["classify", "--field", "quad:fp:7:3", "--cubic", "1,2,3,4+w"]);
    assert_eq!(code, 0);
    assert_eq!(v["cubic"]["field"], "quad:fp:7:3");
}

#[test]
fn census_totals() {
    let (code, v) = json(&["census", "--field", "fp:5"]);
    assert_eq!(code, 0);
    assert_eq!(v["totals"]["sl_nonzero_disc"], 8);
    assert_eq!(v["totals"]["gl_nonzero_disc"], 3);
    let (code, v) = json(&["census", "--field", "fp:7"]);
    assert_eq!(code, 0);
    assert_eq!(v["totals"]["sl_nonzero_disc"], 12);
    assert_eq!(v["totals"]["gl_nonzero_disc"], 9);
    assert_eq!(v["strata"]["TripleRoot"]["cubics"], 48);
}

#[test]
fn census_rejects_large_and_non_prime_fields() {
    let (code, v) = json(&["census", "--field", "fp:17"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "FieldTooLarge");
    let (code, v) = json(&["census", "--field", "rat"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "NotPrimeField");
}

#[test]
fn root_examples() {
    let (code, v) = json(&["root", "--field", "rat", "--p", "6", "--q", "-7"]);
    assert_eq!(code, 0);
    assert_eq!(v["root"], "1");
    let (_, v) = json(&["root", "--field", "rat", "--p", "-7", "--q", "6"]);
    assert!(["1", "2", "-3"].contains(&v["root"].as_str().unwrap()));
    let (code, v) = json(&["root", "--field", "rat", "--p", "3", "--q", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["root"], Value::Null);
}

#[test]
fn factor_check_round_trips() {
    for (field, c) in [
        ("rat", "1,0,6,-7"),
        ("rat", "0,3,0,0"),
        ("rat", "1,0,0,2"),
        ("rat", "2,-3,-3,2"),
        ("fp:7", "1,3,3,1"),
        ("fp:11", "5,0,1,4"),
    ] {
        let (code, v) = json(&["factor", "--field", field, "--cubic", c, "--check"]);
        assert_eq!(code, 0, "{field} {c}");
        assert_eq!(v["check"], true, "{field} {c}");
        let degrees: u64 = v["factors"]
            .as_array()
            .unwrap()
            .iter()
            .map(|f| f["degree"].as_u64().unwrap() * f["multiplicity"].as_u64().unwrap())
            .sum();
        assert_eq!(degrees, 3);
    }
    let (_, v) = json(&["factor", "--field", "rat", "--cubic", "0,3,0,0"]);
    assert_eq!(v["unit"], "3");
    assert!(v.get("check").is_none());
}

#[test]
fn orbit_comparison_and_composition() {
    let (_, v) = json(&["same-orbit", "--field", "rat", "--cubic", "1,0,0,1", "--cubic2", "1,0,0,8"]);
    assert_eq!(v["same"], false);
    let (_, v) = json(&[
        "same-orbit", "--field", "rat", "--cubic", "1,0,0,1", "--cubic2", "1,0,0,8", "--group", "gl2",
    ]);
    assert_eq!(v["same"], true);
    // x²y + 5y³ over F_7 has Q_n = 1 and is reducible: the identity orbit.
    let (code, v) = json(&[
        "compose", "--field", "fp:7", "--disc", "1", "--cubic", "0,1,0,5", "--cubic2", "0,1,0,5",
    ]);
    assert_eq!(code, 0);
    assert_eq!(v["invariant"]["cube_class"], "1");
    let (code, v) = json(&[
        "compose", "--field", "fp:7", "--disc", "2", "--cubic", "0,1,0,5", "--cubic2", "0,1,0,5",
    ]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "DiscriminantMismatch");
}

#[test]
fn invariant_groups() {
    let (_, sl) = json(&["invariant", "--field", "rat", "--cubic", "2,0,0,0"]);
    assert_eq!(sl["stratum"], "TripleRoot");
    assert_eq!(sl["invariant"]["cube_class"], "2");
    let (_, gl) = json(&["invariant", "--field", "fp:7", "--cubic", "1,0,3,0", "--group", "gl2"]);
    assert_eq!(gl["group"], "gl2");
}

#[test]
fn domain_errors_are_json() {
    let (code, v) = json(&["classify", "--field", "rat", "--cubic", "0,0,0,0"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"], "ZeroCubic");
    assert!(v["message"].is_string());
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["classify", "--field", "rat"],
        vec!["classify", "--field", "real", "--cubic", "1,2,3,4"],
        vec!["classify", "--field", "fp:9", "--cubic", "1,2,3,4"],
        vec!["classify", "--field", "rat", "--cubic", "1,2,3"],
        vec!["classify", "--field", "rat", "--cubic", "1,2,3,x"],
        vec!["same-orbit", "--field", "rat", "--cubic", "1,0,0,1", "--cubic2", "1,0,0,1", "--group", "sl3"],
        vec!["verify", "--field", "rat", "--suite", "nonsense"],
        vec!["frobnicate"],
    ] {
        let out = cubix(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn verify_suite_runs() {
    let (code, v) = json(&["verify", "--field", "rat", "--trials", "50", "--seed", "42"]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 42);
    assert_eq!(v["identities"].as_array().unwrap().len(), 10);
    let (code, v) = json(&["verify", "--field", "fp:7", "--suite", "eisenstein_symplectic", "--trials", "30"]);
    assert_eq!(code, 0);
    assert_eq!(v["identities"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_byte_stable() {
    for args in [
        vec!["classify", "--field", "rat", "--cubic", "1,0,6,-7"],
        vec!["census", "--field", "fp:5"],
        vec!["root", "--field", "rat", "--p", "6", "--q", "-7"],
        vec!["verify", "--field", "fp:5", "--trials", "20", "--seed", "7"],
    ] {
        assert_eq!(cubix(&args).stdout, cubix(&args).stdout, "{args:?}");
    }
}

#[test]
fn json_file_and_pretty() {
    let dir = std::env::temp_dir().join(format!("cubix-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("out.json");
    let out = cubix(&["census", "--field", "fp:5", "--json", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["totals"]["gl_nonzero_disc"], 3);
    std::fs::remove_dir_all(&dir).unwrap();

    let out = cubix(&["classify", "--field", "rat", "--cubic", "1,0,6,-7", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("GenericSquare"));
    assert!(text.contains("reducible  true"));
}
