use std::io::Write;
use std::process::{Command, Stdio};

use serde_json::Value;
use tensorwalk::{run, EXIT_CHECK_FAILED, EXIT_OK, EXIT_USAGE};
use tensorwalk_core::Guards;

struct Run {
    code: u8,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("bad JSON {e}: {}", self.stdout))
    }
}

fn tw_stdin(args: &[&str], stdin: &str) -> Run {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("tensorwalk").chain(args.iter().copied());
    let code = run(argv, &Guards::default(), &mut stdin.as_bytes(), &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn tw(args: &[&str]) -> Run {
    tw_stdin(args, "")
}

fn strings(v: &[i64]) -> Value {
    Value::from(v.iter().map(ToString::to_string).collect::<Vec<_>>())
}

const T3: [i64; 10] = [1, 0, 1, 1, 4, 10, 35, 120, 455, 1792];
const E3: [i64; 10] = [1, 1, 2, 5, 15, 51, 191, 772, 3320, 15032];
const S2: [i64; 9] = [1, 2, 6, 22, 92, 422, 2074, 10754, 58202];

#[test]
fn seq_examples() {
    let r = tw(&["seq", "T3", "--terms", "10"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json(), strings(&T3));
    assert_eq!(tw(&["seq", "S2", "--terms", "9"]).json(), strings(&S2));
}

#[test]
fn seq_engines_and_aliases_agree() {
    for engine in ["walk", "ct", "rec", "bt", "formula"] {
        assert_eq!(tw(&["seq", "a001181", "--terms", "9", "--engine", engine]).json(), strings(&S2), "{engine}");
    }
    let r = tw(&["seq", "E3", "--engine", "formula"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("no `formula` engine"), "{}", r.stderr);
}

#[test]
fn seq_lists_registry() {
    let list = tw(&["seq"]).json();
    let names: Vec<&str> = list.as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    assert_eq!(names, ["T3", "E3", "NC3", "S0", "S1", "S2", "S3", "catalan", "catalan3d", "c2spin"]);
}

#[test]
fn bt_inverts_e3_to_t3() {
    let e3 = serde_json::to_string(&strings(&E3)).unwrap();
    let r = tw_stdin(&["bt", "--power", "-1"], &e3);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r.json(), strings(&T3));
    // Plain JSON numbers are accepted as input as well.
    assert_eq!(tw_stdin(&["bt", "--power", "1"], "[1,0,1,1,4,10]").json(), strings(&E3[..6]));
}

#[test]
fn bt_rejects_bad_input() {
    let r = tw_stdin(&["bt", "--power", "1"], "[1, \"x\"]");
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.starts_with("error:"));
}

#[test]
fn csv_output() {
    let r = tw(&["--format", "csv", "seq", "T3", "--terms", "3"]);
    assert_eq!(r.stdout, "n,value\n0,1\n1,0\n2,1\n");
    let r = tw(&["branch", "table", "--max-deg", "1", "--format", "csv"]);
    assert!(r.stdout.starts_with("r,s,p,q,m\n0,0,0,0,1\n"), "{}", r.stdout);
}

#[test]
fn walk_commands() {
    let r = tw(&["walk", "excursions", "--builtin", "octant_g2", "--k", "1", "--n", "9"]);
    assert_eq!(r.json(), strings(&E3));
    let r = tw(&["walk", "axis", "--builtin", "octant_g2", "--n", "8", "--axis", "0"]);
    assert_eq!(r.json(), strings(&[1, 1, 3, 9, 33, 131, 561, 2535, 11971]));
    assert_eq!(tw(&["walk", "axis", "--n", "3", "--axis", "2"]).code, EXIT_USAGE);
    assert_eq!(tw(&["walk", "excursions", "--builtin", "nope", "--n", "3"]).code, EXIT_USAGE);
}

#[test]
fn walk_brute_matches_transfer_counts() {
    let dp = tw(&["walk", "endpoints", "--n", "4"]).json();
    let brute = tw(&["walk", "brute", "--n", "4"]).json();
    assert_eq!(dp[4]["counts"], brute["counts"]);
    assert_eq!(dp[4]["length"], 4);
}

#[test]
fn walk_config_round_trip() {
    let shown = tw(&["walk", "show", "--builtin", "quadrant_sl3", "--k", "2"]);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quadrant.json");
    std::fs::write(&path, &shown.stdout).unwrap();
    let r = tw(&["walk", "excursions", "--n", "8", "--config", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r.json(), strings(&S2));
}

#[test]
fn handwritten_walk_config() {
    // Dyck paths: steps ±1 on y = 0, x ≥ 0.
    let cfg = r#"{
        "domain": [{"coeffs": [1, 0], "bound": 0}, {"coeffs": [0, 1], "bound": 0, "relation": "eq"}],
        "steps": [{"vector": [1, 0]}, {"vector": [-1, 0]}]
    }"#;
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("dyck.json");
    std::fs::write(&path, cfg).unwrap();
    let r = tw(&["walk", "excursions", "--n", "8", "--config", path.to_str().unwrap()]);
    assert_eq!(r.json(), strings(&[1, 0, 1, 0, 2, 0, 5, 0, 14]));

    std::fs::write(&path, r#"{"domain": [], "steps": [], "bogus": 1}"#).unwrap();
    assert_eq!(tw(&["walk", "excursions", "--n", "2", "--config", path.to_str().unwrap()]).code, EXIT_USAGE);
}

#[test]
fn ct_builtins_and_config() {
    assert_eq!(tw(&["ct", "--n", "9"]).json(), strings(&T3));
    let r = tw(&["ct", "--builtin", "quadrant", "--k", "3", "--n", "8"]);
    assert_eq!(r.json(), strings(&[1, 3, 11, 47, 225, 1173, 6529, 38265, 233795]));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ct.json");
    std::fs::write(&path, tw(&["ct", "--show", "--builtin", "quadrant", "--k", "2"]).stdout).unwrap();
    let r = tw(&["ct", "--n", "8", "--config", path.to_str().unwrap()]);
    assert_eq!(r.json(), strings(&S2));
}

#[test]
fn rec_unroll_and_verify() {
    let r = tw(&["rec", "unroll", "--name", "t3_rec", "--initial", "1,0,1", "--n", "9"]);
    assert_eq!(r.json(), strings(&T3));
    let r = tw(&["rec", "verify", "--name", "uniform_rec", "--k", "3", "--seq", "S3", "--terms", "30"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["satisfied"], true);

    let mut bad = T3;
    bad[5] += 1;
    let input = serde_json::to_string(&strings(&bad)).unwrap();
    let r = tw_stdin(&["rec", "verify", "--name", "t3_rec"], &input);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert_eq!(r.json()["satisfied"], false);
    assert_eq!(r.json()["n"], 2);
}

#[test]
fn rec_config_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rec.json");
    std::fs::write(&path, tw(&["rec", "show", "--name", "e3_rec"]).stdout).unwrap();
    let r = tw(&["rec", "unroll", "--initial", "1,1", "--n", "9", "--config", path.to_str().unwrap()]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert_eq!(r.json(), strings(&E3));
    assert_eq!(tw(&["rec", "show"]).code, EXIT_USAGE);
    assert_eq!(tw(&["rec", "show", "--name", "L3"]).code, EXIT_USAGE);
}

#[test]
fn rec_guess_finds_baxter_order_two() {
    let r = tw(&["rec", "guess", "--seq", "S2", "--terms", "40", "--max-order", "2", "--max-degree", "2"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    let doc = r.json();
    assert_eq!(doc["order"], 2);
    let guessed = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(guessed.path(), &r.stdout).unwrap();
    let check = tw(&["rec", "verify", "--seq", "S2", "--terms", "60", "--config", guessed.path().to_str().unwrap()]);
    assert_eq!(check.json()["satisfied"], true);
}

#[test]
fn rec_divide() {
    let r = tw(&["rec", "divide", "--left", "uniform_rec", "--left-k", "3", "--right", "s3_rec"]);
    assert_eq!(r.json()["divisible"], true);
    assert_eq!(r.json()["quotient_order"], 2);
    let r = tw(&["rec", "divide", "--left", "t3_rec", "--right", "e3_rec"]);
    assert_eq!(r.json()["divisible"], false);
}

#[test]
fn ode_commands() {
    let l6 = tw(&["ode", "show", "--name", "L6"]).json();
    assert_eq!(tw(&["ode", "mul", "--left", "Q", "--right", "L3"]).json()["coeffs"], l6["coeffs"]);

    let r = tw(&["ode", "apply", "--name", "L3", "--seq", "T3", "--terms", "40"]);
    assert_eq!(r.code, EXIT_OK, "{}", r.stderr);
    assert!(r.json()["coeffs"].as_array().unwrap().iter().all(|c| c == "0"));

    let rec = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(rec.path(), tw(&["ode", "to-rec", "--name", "L3"]).stdout).unwrap();
    let r = tw(&["rec", "verify", "--seq", "T3", "--terms", "30", "--config", rec.path().to_str().unwrap()]);
    assert_eq!(r.json()["satisfied"], true);
}

#[test]
fn ode_custom_operator() {
    // ∂ - 1 annihilates exp(t); its recurrence is (n+1) a(n+1) - a(n) = 0.
    let op = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(op.path(), r#"{"coeffs": [[-1], [1]]}"#).unwrap();
    let r = tw(&["ode", "to-rec", "--config", op.path().to_str().unwrap()]);
    assert_eq!(r.json()["coeffs"], serde_json::json!([["-1"], ["1", "1"]]));
}

#[test]
fn closedform_verify() {
    let r = tw(&["closedform", "verify", "--name", "t3_hypergeometric_simple", "--order", "30"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["success"], true);
    let r = tw(&["closedform", "verify", "--name", "nope"]);
    assert_eq!(r.code, EXIT_USAGE);
    let r = tw(&["closedform", "series", "--name", "baxter_gf", "--order", "5"]);
    assert_eq!(r.json(), strings(&[0, 1, 2, 6, 22, 92]));
}

#[test]
fn asym_report() {
    let doc = tw(&["asym", "--samples", "200,400"]).json();
    assert_eq!(doc["samples"].as_array().unwrap().len(), 2);
    let c = doc["constant"].as_f64().unwrap();
    assert!((c - 2627.6).abs() < 0.1);
    let dev = doc["samples"][1]["relative_deviation"].as_f64().unwrap();
    assert!(dev < 0.01, "{dev}");
}

#[test]
fn oracle_counts() {
    let count = |args: &[&str]| tw(args).json()["count"].as_str().unwrap().to_string();
    assert_eq!(count(&["oracle", "partitions", "--n", "5", "--max-enhanced-crossing", "3"]), "51");
    assert_eq!(count(&["oracle", "partitions", "--n", "5", "--max-enhanced-crossing", "3", "--forbid-singletons"]), "10");
    assert_eq!(count(&["oracle", "partitions", "--n", "5", "--max-crossing", "3"]), "52");
    assert_eq!(count(&["oracle", "inversions", "--n", "5", "--forbid-wdec3"]), "51");
    assert_eq!(count(&["oracle", "tableaux", "--kind", "hesitating", "--n", "5"]), "51");
    assert_eq!(count(&["oracle", "tableaux", "--kind", "vacillating", "--n", "4"]), "52");
    assert_eq!(count(&["oracle", "sst", "--m", "1", "--content", "1,2"]), "1");
    assert_eq!(count(&["oracle", "sst", "--m", "1", "--content", "1,2", "--exhaustive"]), "1");
    assert_eq!(count(&["oracle", "quadrant", "--variant", "s2", "--n", "4"]), "92");
    assert_eq!(count(&["oracle", "quadrant", "--variant", "s1b", "--n", "3", "--exhaustive"]), "9");
}

#[test]
fn oracle_guard_is_enforced() {
    let r = tw(&["oracle", "partitions", "--n", "13"]);
    assert_eq!(r.code, EXIT_USAGE);
    assert!(r.stderr.contains("guard"), "{}", r.stderr);
}

#[test]
fn branch_verifications() {
    let r = tw(&["branch", "verify-axis", "--k", "1", "--n", "8"]);
    assert_eq!(r.code, EXIT_OK);
    assert_eq!(r.json()["lhs"], strings(&S2));
    let r = tw(&["branch", "verify-restriction", "--k", "1", "--p", "0", "--q", "1", "--n", "8"]);
    assert_eq!(r.json()["holds"], true);
    assert_eq!(tw(&["branch", "verify-axis", "--k", "0", "--n", "99"]).code, EXIT_USAGE);
}

#[test]
fn branch_minus_table_goes_negative() {
    let doc = tw(&["branch", "table", "--max-deg", "2", "--minus"]).json();
    let negative = doc["entries"].as_array().unwrap().iter().any(|e| e[4].as_str().unwrap().starts_with('-'));
    assert!(negative);
}

#[test]
fn branch_polynomials_reports_known_cell() {
    let r = tw(&["branch", "polynomials", "--n", "2"]);
    assert_eq!(r.code, EXIT_OK);
    let r = tw(&["branch", "polynomials", "--n", "3"]);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    let doc = r.json();
    let cells: Vec<&Value> = doc["mismatches"].as_array().unwrap().iter().map(|m| &m["cell"]).collect();
    assert!(cells.iter().all(|c| **c == serde_json::json!([1, 1])));
}

#[test]
fn check_only_and_corrupt() {
    let r = tw(&["check", "--only", "t3rec,closedform"]);
    assert_eq!(r.code, EXIT_OK);
    let names: Vec<String> =
        r.json().as_array().unwrap().iter().map(|c| c["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names, ["closedform", "t3rec"]);

    let r = tw(&["check", "--only", "t3rec", "--corrupt", "t3rec"]);
    assert_eq!(r.code, EXIT_CHECK_FAILED);
    assert_eq!(r.json()[0]["status"], "fail");

    assert_eq!(tw(&["check", "--only", "bogus"]).code, EXIT_USAGE);
    assert_eq!(tw(&["check", "--list"]).json().as_array().unwrap().len(), 12);
}

#[test]
fn usage_errors_exit_two() {
    for args in [&["frobnicate"][..], &["seq", "T3", "--terms"], &["bt"], &["--format", "xml", "seq"]] {
        let r = tw(args);
        assert_eq!(r.code, EXIT_USAGE, "{args:?}");
        assert!(!r.stderr.is_empty());
        assert!(r.stdout.is_empty());
    }
    let r = tw(&["--help"]);
    assert_eq!(r.code, EXIT_OK);
    assert!(r.stdout.contains("Usage"));
}

#[test]
fn output_is_deterministic() {
    for args in [&["walk", "endpoints", "--n", "5"][..], &["branch", "table", "--max-deg", "3"], &["seq"]] {
        assert_eq!(tw(args).stdout, tw(args).stdout);
    }
}

fn binary(args: &[&str], env: Option<&str>, stdin: &str) -> (i32, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tensorwalk"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    match env {
        Some(v) => cmd.env("TENSORWALK_MAX_N", v),
        None => cmd.env_remove("TENSORWALK_MAX_N"),
    };
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn binary_exit_codes_and_env_guard() {
    assert_eq!(binary(&["seq", "T3", "--terms", "4"], None, ""), (0, "[\"1\",\"0\",\"1\",\"1\"]\n".to_string()));
    assert_eq!(binary(&["bt", "--power", "-1"], None, "[1,1,2,5]").1, "[\"1\",\"0\",\"1\",\"1\"]\n");
    assert_eq!(binary(&["nope"], None, "").0, 2);
    assert_eq!(binary(&["oracle", "inversions", "--n", "13"], None, "").0, 2);
    let (code, out) = binary(&["oracle", "inversions", "--n", "13", "--forbid-wdec3"], Some("13"), "");
    assert_eq!(code, 0);
    assert!(out.contains("count"));
    assert_eq!(binary(&["seq", "T3"], Some("lots"), "").0, 2);
}

#[test]
fn operator_show_round_trip() {
    let shown = tw(&["ode", "show", "--name", "L2"]);
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), &shown.stdout).unwrap();
    let back = tw(&["ode", "show", "--config", file.path().to_str().unwrap()]);
    assert_eq!(back.code, EXIT_OK, "{}", back.stderr);
    assert_eq!(back.stdout, shown.stdout);
}
