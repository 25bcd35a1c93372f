use dtl_cli::{parse_point_str, run_cli, Param};
use dtl_field::Fe;

fn run(args: &[&str]) -> (i32, String, String) {
    let argv: Vec<String> = std::iter::once("dtl").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_cli(&argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

#[test]
fn solve_two_matches_golden_components() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi2.json");
    let (code, out, _) = run(&["solve", "-L", "2", "--out", path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    let v = json(&std::fs::read_to_string(&path).unwrap());
    assert_eq!(v["L"], 2);
    assert_eq!(v["components"].as_object().unwrap().len(), 9);
    let gold = json(dtl_verify::golden::GOLDEN_L2);
    for (k, c) in gold["components"].as_object().unwrap() {
        assert_eq!(&v["components"][k], c, "{k}");
    }
}

#[test]
fn solve_round_trips_through_eval() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("psi1.json");
    assert_eq!(run(&["solve", "-L", "1", "--out", path.to_str().unwrap()]).0, 0);
    let (c1, fresh, _) = run(&["eval", "-L", "1", "--at", "2,3,5"]);
    let (c2, loaded, _) = run(&["eval", "-L", "1", "--at", "2,3,5", "--in", path.to_str().unwrap()]);
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(fresh, loaded);
}

#[test]
fn verify_golden_passes() {
    let (code, out, err) = run(&["verify", "golden"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(json(&out)["pass"], true);
}

#[test]
fn verify_qkz_three() {
    let (code, out, err) = run(&["verify", "qkz", "-L", "3"]);
    assert_eq!(code, 0);
    assert!(err.contains(" s (seed 1)"), "runtime goes to stderr: {err}");
    assert!(json(&out)["reports"][0]["samples"].as_u64().unwrap() > 0);
}

#[test]
fn seed_is_echoed_and_output_is_deterministic() {
    let a = run(&["verify", "merge", "--seed", "77", "--samples", "3"]);
    let b = run(&["verify", "merge", "--seed", "77", "--samples", "3"]);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert_eq!(json(&a.1)["seed"], 77);
    let c = run(&["eval", "-L", "2", "--seed", "5"]);
    assert_eq!(c.1, run(&["eval", "-L", "2", "--seed", "5"]).1);
    assert_eq!(json(&c.1)["seed"], 5);
}

#[test]
fn small_checks_pass() {
    for args in [
        &["verify", "ybe", "--samples", "8"][..],
        &["verify", "byb", "--samples", "8"],
        &["verify", "factor", "--samples", "4"],
        &["verify", "recurrence", "-L", "3"],
        &["verify", "eigen", "-L", "1", "--samples", "2"],
        &["sum", "-L", "2"],
    ] {
        let (code, out, err) = run(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert!(out.ends_with("}\n"));
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["solve", "-L", "6"]).0, 2);
    assert_eq!(run(&["solve", "-L", "0"]).0, 2);
    assert_eq!(run(&["verify", "eigen", "-L", "5"]).0, 2);
    assert_eq!(run(&["verify", "recurrence", "-L", "1"]).0, 2);
    assert_eq!(run(&["eval", "-L", "1", "--at", "1,2"]).0, 2);
    assert_eq!(run(&["eval", "-L", "1", "--at", "1,2,x"]).0, 2);
    assert_eq!(run(&["eval", "-L", "1", "--param", "theta"]).0, 2);
    let (code, _, err) = run(&["eval", "-L", "1", "--param", "zeta", "--at", "1,2,1"]);
    assert_eq!(code, 2);
    assert!(err.contains("no x"));
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn zeta_parametrization_converts_exactly() {
    let x = Fe::frac(2, 3);
    let zeta = dtl_diagram::weights::zeta_of_x(&x).unwrap();
    let p = parse_point_str(1, &format!("{zeta},5,{zeta}"), Param::Zeta).unwrap();
    for xi in [&p[0], &p[2]] {
        assert!(*xi == x || *xi == Fe::frac(3, 2), "{xi}");
        assert_eq!(dtl_diagram::weights::zeta_of_x(xi).unwrap(), zeta);
    }
    let (code, out, _) = run(&["eval", "-L", "1", "--param", "zeta", "--at", &format!("{zeta},5,{zeta}")]);
    assert_eq!(code, 0);
    assert_eq!(json(&out)["zeta_l"], zeta.to_string());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_dtl");
    let ok = std::process::Command::new(bin).args(["verify", "golden"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = std::process::Command::new(bin).args(["solve", "-L", "9"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
