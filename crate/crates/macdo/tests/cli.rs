use std::process::{Command, Output};

use macdo::json::{frac_from_json, poly_from_json, FracJson, OperatorJson, PolyJson, TableJson};
use macdo_core::algebra::{Frac, MPoly, Monomial, MonomialMap, Var, VarUniverse};
use serde_json::Value;

fn macdo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdo")).args(args).output().expect("binary runs")
}

fn macdo_env(args: &[&str], threads: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macdo"))
        .args(args)
        .env("MACDO_THREADS", threads)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("one object per line")).collect()
}

#[test]
fn poly_j_single_box() {
    let o = macdo(&["poly", "J", "--lambda", "1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "J[1] in 2 variables, monomial basis:\n  m[1]: -t + 1\n");
}

#[test]
fn poly_p_column() {
    let o = macdo(&["poly", "p", "--lambda", "1,1", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "P[1,1] in 2 variables, monomial basis:\n  m[1,1]: 1\n");
}

#[test]
fn poly_p_row_json() {
    let o = macdo(&["poly", "P", "--lambda", "2", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let t: TableJson<FracJson> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!((t.n, t.lambda.as_str(), t.basis.as_str()), (2, "2", "monomial"));
    let qt = VarUniverse::scalars();
    let one = MPoly::one(qt);
    let q = MPoly::var(qt, Var::Q);
    let t_ = MPoly::var(qt, Var::T);
    // (1+q)(1-t)/(1-qt)
    let expect = Frac::new(&(&one + &q) * &(&one - &t_), &(&one - &(&q * &t_))).unwrap();
    assert!(frac_from_json(&t.coeffs["1,1"]).unwrap().frac_eq(&expect));
    assert!(frac_from_json(&t.coeffs["2"]).unwrap().frac_eq(&Frac::one(qt)));
}

#[test]
fn poly_json_is_identical_through_out_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("j.json");
    let a = macdo(&["poly", "J", "--lambda", "2,1", "--n", "3", "--format", "json"]);
    let b = macdo(&["poly", "J", "--lambda", "2,1", "--n", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(b.status.code(), Some(0));
    assert!(b.stdout.is_empty());
    assert_eq!(std::fs::read(&path).unwrap(), a.stdout);
    let t: TableJson<PolyJson> = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(t.coeffs.keys().collect::<Vec<_>>(), ["1,1,1", "2,1"]);
    for p in t.coeffs.values() {
        poly_from_json(p).unwrap();
    }
}

#[test]
fn operator_zero_is_identity() {
    let o = macdo(&["operator", "--m", "0", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let op: OperatorJson = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(op.coeffs.len(), 1);
    assert_eq!(op.coeffs[0].gamma, [0, 0]);
    assert!(poly_from_json(&op.coeffs[0].num).unwrap().is_one());
    assert!(poly_from_json(&op.coeffs[0].den).unwrap().is_one());
}

#[test]
fn operator_one_variable_text() {
    let o = macdo(&["operator", "--m", "1", "--n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "B_1 in 1 variables, 2 terms:\n  T^[1]: (t*x1 + -x1)/(q + -1)\n  T^[0]: (-q*t*x1 + q*x1)/(q + -1)\n"
    );
}

#[test]
fn operator_two_variables_is_symmetric() {
    let o = macdo(&["operator", "--m", "1", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let op: OperatorJson = serde_json::from_str(&stdout(&o)).unwrap();
    let get = |g: [u32; 2]| {
        let c = op.coeffs.iter().find(|c| c.gamma == g).expect("key present");
        frac_from_json(&FracJson {
            num: c.num.clone(),
            den: c.den.clone(),
        })
        .unwrap()
    };
    let uni = VarUniverse::new(2, 0).unwrap();
    let mut swap = MonomialMap::identity(uni);
    swap.set(Var::X(0), false, Monomial::var(&uni, Var::X(1), 1));
    swap.set(Var::X(1), false, Monomial::var(&uni, Var::X(0), 1));
    assert!(get([1, 0]).apply_map(&swap).unwrap().frac_eq(&get([0, 1])));
    assert!(get([0, 0]).apply_map(&swap).unwrap().frac_eq(&get([0, 0])));
    assert_eq!(op.coeffs.len(), 3);
}

#[test]
fn verify_qbinom_small() {
    let o = macdo(&["verify", "--suite", "qbinom", "--max-weight", "3", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["passed"] == Value::Bool(true) && l["detail"].is_null()));
}

#[test]
fn verify_raising_small() {
    let o = macdo(&["verify", "--suite", "raising", "--m", "2", "--n", "2", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_lines(&o).iter().all(|l| l["passed"] == Value::Bool(true)));
}

#[test]
fn verify_raising_reaches_the_zero_branch() {
    let o = macdo(&["verify", "--suite", "raising", "--n", "1", "--m", "1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    let zero = lines.iter().find(|l| {
        l["identity"] == "raising" && l["params"]["lambda"] == "1" && l["params"]["m"] == "1" && l["params"]["n"] == "1"
    });
    assert_eq!(zero.expect("lambda = (1) at n = 1 is in the grid")["passed"], Value::Bool(true));
}

#[test]
fn verify_output_ignores_seed_and_pool_size() {
    let args = ["verify", "--suite", "oracles", "--n", "2", "--m", "2", "--format", "json"];
    let base = macdo_env(&args, "1");
    let mut seeded = args.to_vec();
    seeded.extend(["--seed", "12345"]);
    let other = macdo_env(&seeded, "4");
    assert_eq!(base.status.code(), Some(0));
    assert_eq!(base.stdout, other.stdout);
}

#[test]
fn verify_all_default_limits() {
    let o = macdo(&["verify"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    assert!(text.lines().all(|l| l.starts_with("PASS ")));
    assert!(String::from_utf8_lossy(&o.stderr).contains("0 failed"));
}

#[test]
fn identity_pass_and_fail_codes() {
    let ok = macdo(&["identity", "raising", "--m", "2", "--lambda", "1", "--n", "2", "--format", "json"]);
    assert_eq!(ok.status.code(), Some(0));
    let line = &json_lines(&ok)[0];
    assert_eq!(line["identity"], "raising");
    assert_eq!(line["params"]["lambda"], "1");

    let chu = macdo(&["identity", "chu-vandermonde2", "--alpha", "1,1", "--beta", "0,1", "--k", "2"]);
    assert_eq!(chu.status.code(), Some(0));
    assert!(stdout(&chu).starts_with("PASS chu_vandermonde2"));

    // λ_1 > m violates the hypothesis, so the check itself reports failure
    let bad = macdo(&["identity", "raising", "--m", "1", "--lambda", "2", "--n", "2"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).starts_with("FAIL raising"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["poly", "J", "--lambda", "x", "--n", "2"][..],
        &["poly", "J", "--lambda", "1,1,1", "--n", "2"],
        &["poly", "J", "--lambda", "1", "--n", "0"],
        &["operator", "--m", "5", "--n", "2"],
        &["verify", "--n", "5"],
        &["verify", "--suite", "nope"],
        &["verify", "--max-weight", "6"],
        &["identity", "chu-vandermonde", "--alpha", "1,1"],
        &["frobnicate"],
    ] {
        assert_eq!(macdo(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn unsafe_limits_lifts_the_cap() {
    let o = macdo(&["verify", "--suite", "chu", "--n", "5", "--max-weight", "1", "--m", "0", "--unsafe-limits"]);
    assert_eq!(o.status.code(), Some(0));
}
