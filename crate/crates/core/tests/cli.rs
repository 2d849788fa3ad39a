//! End-to-end checks of the bratteli binary: exit codes, schema-valid json,
//! deterministic output, format switches.

use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_bratteli");
const SCHEMA: &str = concat!(
    env!("CARGO_MANIFEST_DIR"),
    "/../../schemas/cli-output.schema.json"
);

fn run(args: &[&str]) -> Output {
    run_env(args, &[])
}

fn run_env(args: &[&str], envs: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(BIN);
    cmd.args(args).env_remove("BRATTELI_MAX_CELLS");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_of(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn validator() -> jsonschema::Validator {
    let schema: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(SCHEMA).expect("schema file"))
            .expect("schema parses");
    jsonschema::validator_for(&schema).expect("schema compiles")
}

fn assert_valid(validator: &jsonschema::Validator, text: &str, what: &str) {
    let value: serde_json::Value =
        serde_json::from_str(text).unwrap_or_else(|e| panic!("{what}: bad json: {e}\n{text}"));
    let errors: Vec<String> = validator
        .iter_errors(&value)
        .map(|e| e.to_string())
        .collect();
    assert!(errors.is_empty(), "{what}: schema violations: {errors:?}");
}

#[test]
fn every_json_payload_validates_against_the_published_schema() {
    let v = validator();
    let invocations: Vec<Vec<&str>> = vec![
        vec!["graph", "build", "--kind", "young", "--levels", "3"],
        vec!["graph", "build", "--kind", "multidim", "--d", "3", "--levels", "3"],
        vec!["graph", "info", "--kind", "solvable", "--levels", "2"],
        vec!["dim", "--graph", "young", "--level", "3", "--vertex", "[2,1]"],
        vec![
            "dim", "--graph", "young", "--level", "4", "--vertex", "[2,2]", "--from", "[1]",
            "--from-level", "1", "--float",
        ],
        vec!["character", "eval", "--alpha", "1/2", "--beta", "1/4,1/8", "--cycles", "3,2"],
        vec!["character", "eval", "--alpha", "1/2,1/2", "--cycles", "2", "--float"],
        vec!["character", "table", "--n", "4"],
        vec!["measure", "thoma", "--alpha", "2/3,1/6", "--levels", "3"],
        vec!["measure", "thoma", "--alpha", "1/2,1/2", "--levels", "2", "--float"],
        vec![
            "measure", "compare", "--alpha", "1/2,1/2", "--N", "8,12", "--cylinder-level", "2",
        ],
        vec![
            "measure", "sample", "--alpha", "1/2", "--beta", "1/2", "--length", "3", "--count",
            "4", "--seed", "5",
        ],
        vec!["adic", "orbit", "--graph", "pascal", "--level", "3", "--vertex", "1,2"],
        vec!["adic", "check", "--graph", "pascal", "--level", "4"],
        vec!["adic", "check", "--graph", "young", "--level", "3", "--alpha", "1/2,1/2"],
        vec![
            "diagnose", "poulsen", "--target", "bernoulli", "--cylinder-level", "1", "--eps", "0",
        ],
        vec![
            "diagnose", "poulsen", "--target", "zeros", "--cylinder-level", "2", "--eps", "1/16",
            "--float",
        ],
        vec!["diagnose", "separation", "--alphas", "1;1/2,1/2;0", "--level", "4"],
        vec![
            "diagnose", "separation", "--alphas", "1;0", "--betas", "0;1/3,1/3", "--level", "3",
            "--float",
        ],
    ];
    for mut args in invocations {
        args.push("--emit");
        args.push("json");
        let out = run(&args);
        assert_eq!(code(&out), 0, "{args:?} failed: {}", stderr_of(&out));
        assert_valid(&v, &stdout_of(&out), &format!("{args:?}"));
    }
}

#[test]
fn character_eval_prints_the_exact_rational() {
    let out = run(&["character", "eval", "--alpha", "1/2,1/2", "--cycles", "2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout_of(&out), "1/2\n");
}

#[test]
fn graph_build_json_succeeds_for_young_six() {
    let out = run(&["graph", "build", "--kind", "young", "--levels", "6", "--emit", "json"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["levels"][6].as_array().unwrap().len(), 11);
}

#[test]
fn resource_limits_exit_three() {
    let out = run(&["graph", "build", "--kind", "solvable", "--levels", "9"]);
    assert_eq!(code(&out), 3);
    assert!(stderr_of(&out).contains("resource"));
}

#[test]
fn input_errors_exit_two() {
    let out = run(&["dim", "--graph", "young", "--level", "3", "--vertex", "[9]"]);
    assert_eq!(code(&out), 2);
    let out = run(&["bogus"]);
    assert_eq!(code(&out), 2);
    let out = run(&["character", "eval", "--alpha", "2/1", "--cycles", "2"]);
    assert_eq!(code(&out), 2, "frequencies above one are rejected");
}

#[test]
fn json_errors_go_to_stderr_and_validate() {
    let v = validator();
    let out = run(&["graph", "build", "--kind", "solvable", "--levels", "9", "--emit", "json"]);
    assert_eq!(code(&out), 3);
    assert!(stdout_of(&out).is_empty());
    assert_valid(&v, &stderr_of(&out), "resource error object");

    let out = run(&["character", "eval", "--alpha", "x", "--cycles", "2", "--emit", "json"]);
    assert_eq!(code(&out), 2);
    assert_valid(&v, &stderr_of(&out), "input error object");
}

#[test]
fn reruns_are_byte_identical() {
    let args = [
        "diagnose", "poulsen", "--target", "bernoulli", "--cylinder-level", "2", "--eps",
        "1/16", "--emit", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);

    let args = [
        "measure", "sample", "--alpha", "1/2,1/2", "--length", "5", "--count", "10", "--seed",
        "9", "--emit", "json",
    ];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn float_flag_adds_decimal_fields() {
    let out = run(&[
        "character", "eval", "--alpha", "1/2,1/2", "--cycles", "2", "--emit", "json", "--float",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["value"], "1/2");
    assert_eq!(value["value_float"], 0.5);

    let out = run(&[
        "character", "eval", "--alpha", "1/2,1/2", "--cycles", "2", "--emit", "csv", "--float",
    ]);
    let text = stdout_of(&out);
    assert!(text.starts_with("alpha,beta,cycles,value,value_float\n"), "{text}");
}

#[test]
fn csv_quotes_labels_containing_commas() {
    let out = run(&["measure", "thoma", "--alpha", "1/2,1/2", "--levels", "2", "--emit", "csv"]);
    let text = stdout_of(&out);
    assert!(text.contains("2,\"[1,1]\",1/4,1/4"), "{text}");
}

#[test]
fn env_budget_caps_enumeration() {
    let out = run_env(
        &["graph", "build", "--kind", "multidim", "--d", "3", "--levels", "4"],
        &[("BRATTELI_MAX_CELLS", "10")],
    );
    assert_eq!(code(&out), 3);
    assert!(stderr_of(&out).contains("BRATTELI_MAX_CELLS"));

    let out = run_env(
        &["graph", "info", "--kind", "young", "--levels", "2"],
        &[("BRATTELI_MAX_CELLS", "plenty")],
    );
    assert_eq!(code(&out), 2);
}

#[test]
fn adic_orbit_enumerates_the_full_class() {
    let out = run(&[
        "adic", "orbit", "--graph", "pascal", "--level", "4", "--vertex", "2,2", "--emit", "json",
    ]);
    let value: serde_json::Value = serde_json::from_str(&stdout_of(&out)).unwrap();
    assert_eq!(value["dimension"], "6");
    assert_eq!(value["paths"].as_array().unwrap().len(), 6);
    for path in value["paths"].as_array().unwrap() {
        assert_eq!(path.as_array().unwrap().last().unwrap(), "2,2");
    }
}

#[test]
fn export_round_trips_via_file() {
    let build = run(&["graph", "build", "--kind", "pascal", "--levels", "3", "--emit", "json"]);
    let dir = std::env::temp_dir().join(format!("bratteli-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let file = dir.join("p3.json");
    std::fs::write(&file, stdout_of(&build)).unwrap();

    let json = run(&["graph", "export", "--input", file.to_str().unwrap(), "--emit", "json"]);
    assert_eq!(build.stdout, json.stdout);

    let dot = run(&["graph", "export", "--input", file.to_str().unwrap(), "--emit", "dot"]);
    assert!(stdout_of(&dot).starts_with("digraph"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn dot_is_rejected_outside_graph_commands() {
    let out = run(&["character", "eval", "--alpha", "1/2", "--cycles", "1", "--emit", "dot"]);
    assert_eq!(code(&out), 2);
}
