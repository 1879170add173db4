//! End-to-end tests driving the compiled binary: output text, JSON
//! shapes, exit codes, and environment-variable seeding.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_deficitlab"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8 stderr")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is JSON")
}

#[test]
fn deficit_reports_the_quintic_scan() {
    let out = run(&[
        "deficit",
        "--field",
        "Q(sqrt 3)",
        "x^5 + 2*x^4 - sqrt(3)*x^2 + x - 7",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("degree = 5"), "got: {text}");
    assert!(text.contains("top_non_F_index = 2"), "got: {text}");
    assert!(text.contains("deficit = 3"), "got: {text}");
}

#[test]
fn deficit_of_a_subfield_polynomial_equals_its_degree() {
    let out = run(&["deficit", "--field", "Q", "--json", "x^2 + 1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["in_F"], true);
    assert_eq!(v["deficit"], 2);
    assert_eq!(v["top_non_F_index"], serde_json::Value::Null);
    assert_eq!(v["field"], "Q");
}

#[test]
fn deficit_of_zero_is_a_usage_error() {
    let out = run(&["deficit", "--field", "Q", "0"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("ZERO_POLYNOMIAL"));
}

#[test]
fn compose_emits_exact_coefficients_as_json() {
    let out = run(&[
        "compose",
        "--field",
        "Q(sqrt 2, sqrt 3)",
        "--json",
        "x^3 + 2*x^2 - sqrt(2)*x + 1",
        "x^2 + sqrt(3)*x + 5",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["deficit_p"], 2);
    assert_eq!(v["deficit_q"], 1);
    assert_eq!(v["deficit_composed"], 1);
    let composed = v["composed"].as_str().unwrap();
    assert!(
        composed.starts_with("x^6 + 3*sqrt(3)*x^5 + 26*x^4 +"),
        "got: {composed}"
    );
    assert!(composed.ends_with("(176 - 5*sqrt(2))"), "got: {composed}");

    // The printed composition round-trips through the parser.
    let parse = run(&[
        "deficit",
        "--field",
        "Q(sqrt 2, sqrt 3)",
        "--json",
        composed,
    ]);
    assert!(parse.status.success());
    assert_eq!(json(&parse)["degree"], 6);
    assert_eq!(json(&parse)["deficit"], 1);
}

#[test]
fn iterate_reports_the_stable_deficit() {
    let out = run(&[
        "iterate",
        "--field",
        "Q(sqrt 2)",
        "--json",
        "x^2 + sqrt(2)",
        "3",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["r"], 3);
    assert_eq!(v["deficit_p"], 2);
    assert_eq!(v["deficit_composed"], 2);
    assert!(v["composed"].as_str().unwrap().starts_with("x^8 +"));
}

#[test]
fn iterate_overflowing_the_cap_exits_three() {
    let out = run(&["iterate", "--field", "Q", "--max-coeffs", "10", "x^2", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("DEGREE_OVERFLOW"));
}

#[test]
fn compose_respects_the_coefficient_cap() {
    let out = run(&[
        "compose",
        "--field",
        "Q",
        "--max-coeffs",
        "10",
        "x^5",
        "x^5",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("DEGREE_OVERFLOW"));
}

#[test]
fn deficit2_uses_total_degree() {
    let out = run(&[
        "deficit2",
        "--field",
        "Q(sqrt 2)",
        "--json",
        "x^2*y + sqrt(2)*x*y + y",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["deficit"], 1);
}

#[test]
fn compose2_substitutes_a_bivariate_inner() {
    let out = run(&[
        "compose2",
        "--field",
        "Q(sqrt 2)",
        "--json",
        "x^2 + 1",
        "x^2 + y^2 + sqrt(2)*x",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["deficit_p"], 2);
    assert_eq!(v["deficit_q"], 1);
    assert_eq!(v["deficit_composed"], 1);
    assert_eq!(
        v["composed"],
        "x^4 + 2*x^2*y^2 + y^4 + 2*sqrt(2)*x^3 + 2*sqrt(2)*x*y^2 + 2*x^2 + 1"
    );
}

#[test]
fn diag_accepts_univariate_or_bivariate_inner() {
    let uni = run(&[
        "diag",
        "--field",
        "Q(sqrt -1)",
        "--json",
        "x^2 - y^2 + 1",
        "x^2 + i*x",
    ]);
    assert!(uni.status.success());
    assert_eq!(json(&uni)["composed"], "1");

    let bi = run(&["diag", "--field", "Q(sqrt 2)", "--json", "x*y + 1", "x + y"]);
    assert!(bi.status.success());
}

#[test]
fn verify_single_statement_succeeds_quietly() {
    let out = run(&[
        "verify",
        "T1",
        "--field",
        "Q(sqrt 2)",
        "--trials",
        "25",
        "--seed",
        "7",
    ]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("T1 on Q(sqrt 2): 25 trials"), "got: {text}");
    assert!(text.contains("0 counterexamples"), "got: {text}");
}

#[test]
fn verify_rejects_an_inadmissible_context() {
    let out = run(&["verify", "FF", "--field", "Q", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("INADMISSIBLE_CONTEXT"));
}

#[test]
fn verify_rejects_an_unknown_statement() {
    let out = run(&["verify", "T99", "--field", "Q", "--trials", "5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown statement id"));
}

#[test]
fn verify_examples_runs_the_fixture_deck() {
    let out = run(&["verify", "--examples"]);
    assert!(out.status.success(), "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("PASS").count(), 15, "got: {text}");
    assert!(!text.contains("FAIL"), "got: {text}");
}

#[test]
fn examples_subcommand_is_the_same_deck() {
    let out = run(&["examples", "--json"]);
    assert!(out.status.success());
    let v = json(&out);
    let fixtures = v.as_array().unwrap();
    assert_eq!(fixtures.len(), 15);
    assert!(fixtures.iter().all(|f| f["passed"] == true));
    assert!(fixtures.iter().any(|f| f["name"] == "quintic-deficit-scan"));
}

#[test]
fn seed_flag_and_environment_agree() {
    let flagged = run(&[
        "verify",
        "T2",
        "--field",
        "Q(sqrt 2)",
        "--trials",
        "10",
        "--seed",
        "99",
        "--json",
    ]);
    assert!(flagged.status.success());

    let env = bin()
        .args([
            "verify",
            "T2",
            "--field",
            "Q(sqrt 2)",
            "--trials",
            "10",
            "--json",
        ])
        .env("DEFICITLAB_SEED", "99")
        .output()
        .expect("binary runs");
    assert!(env.status.success());

    // Everything except wall-clock runtime must be identical.
    let mut a = json(&flagged);
    let mut b = json(&env);
    for v in [&mut a, &mut b] {
        v["suites"][0].as_object_mut().unwrap().remove("runtime_ms");
    }
    assert_eq!(a, b);
    assert_eq!(a["suites"][0]["seed"], 99);
}

#[test]
fn flag_seed_wins_over_environment() {
    let out = bin()
        .args([
            "verify",
            "T2",
            "--field",
            "Q(sqrt 2)",
            "--trials",
            "5",
            "--seed",
            "1",
            "--json",
        ])
        .env("DEFICITLAB_SEED", "2")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert_eq!(json(&out)["suites"][0]["seed"], 1);
}

#[test]
fn malformed_seed_environment_is_rejected() {
    let out = bin()
        .args(["verify", "T2", "--field", "Q(sqrt 2)", "--trials", "5"])
        .env("DEFICITLAB_SEED", "not-a-number")
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("DEFICITLAB_SEED"));
}

#[test]
fn bad_field_spec_and_bad_flags_exit_two() {
    let bad_field = run(&["deficit", "--field", "Q(sqrt 0)", "x"]);
    assert_eq!(bad_field.status.code(), Some(2));

    let bad_flag = run(&["deficit", "--no-such-flag", "x"]);
    assert_eq!(bad_flag.status.code(), Some(2));

    let bad_poly = run(&["deficit", "--field", "Q", "x +"]);
    assert_eq!(bad_poly.status.code(), Some(2));
    assert!(stderr(&bad_poly).contains("SYNTAX_ERROR"));
}

#[test]
fn help_and_version_exit_zero() {
    let help = run(&["--help"]);
    assert_eq!(help.status.code(), Some(0));
    let version = run(&["--version"]);
    assert_eq!(version.status.code(), Some(0));
}

#[test]
fn out_flag_writes_the_json_report_to_a_file() {
    let dir = std::env::temp_dir().join(format!("deficitlab-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = run(&[
        "deficit",
        "--field",
        "Q(sqrt 3)",
        "--out",
        path.to_str().unwrap(),
        "x^5 + 2*x^4 - sqrt(3)*x^2 + x - 7",
    ]);
    assert!(out.status.success());
    let contents = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(&contents).unwrap();
    assert_eq!(v["deficit"], 3);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn verify_json_shape_carries_suites_and_fixtures() {
    let out = run(&[
        "verify", "RING", "--field", "Z<Q", "--trials", "20", "--seed", "3", "--json",
    ]);
    assert!(out.status.success());
    let v = json(&out);
    let suite = &v["suites"][0];
    assert_eq!(suite["theorem"], "RING");
    assert_eq!(suite["context"], "Z<Q");
    assert_eq!(suite["trials"], 20);
    assert_eq!(suite["counterexamples"].as_array().unwrap().len(), 0);
    assert_eq!(v["blocking_counterexamples"], 0);
}

#[test]
fn set_context_counterexamples_do_not_block() {
    // The set-context suite reports empirical counterexamples without
    // failing the run.
    let out = run(&[
        "verify",
        "DEFICIT_SET_T1",
        "--field",
        "set:realsUnionImag",
        "--trials",
        "60",
        "--seed",
        "42",
        "--json",
    ]);
    assert!(
        out.status.success(),
        "set-context suite must not block: {}",
        stderr(&out)
    );
    let v = json(&out);
    assert_eq!(v["blocking_counterexamples"], 0);
}
