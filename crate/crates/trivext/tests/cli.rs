use std::path::PathBuf;
use std::process::Command as Process;

use serde_json::Value;
use trivext::cli::{run_on_text, Command, Options, COMMANDS, EXIT_BOUND, EXIT_INPUT, EXIT_NEGATIVE, EXIT_OK};
use trivext::report::SCHEMA;

const FIXTURES: [&str; 5] = ["loop", "three_paths", "four_paths", "two_arms", "two_arms_base"];

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

fn read(name: &str) -> String {
    std::fs::read_to_string(dir().join(format!("{name}.txt"))).unwrap()
}

fn json() -> Options {
    Options { json: true, ..Options::default() }
}

/// Set `TRIVEXT_BLESS=1` to rewrite the expected files.
#[test]
fn reports_match_expected() {
    let bless = std::env::var_os("TRIVEXT_BLESS").is_some();
    let mut stale = Vec::new();
    for name in FIXTURES {
        let text = read(name);
        for cmd in COMMANDS {
            let (out, err, _) = run_on_text(cmd, &json(), &text);
            assert!(err.is_empty(), "{name} {}: {err}", cmd.name());
            let path = dir().join("expected").join(format!("{name}.{}.json", cmd.name()));
            if bless {
                std::fs::write(&path, &out).unwrap();
            } else if std::fs::read_to_string(&path).ok().as_deref() != Some(out.as_str()) {
                stale.push(path.display().to_string());
            }
        }
    }
    assert!(stale.is_empty(), "reports differ from {stale:?}");
}

#[test]
fn reports_validate_against_schema() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    for name in FIXTURES {
        let text = read(name);
        for cmd in COMMANDS {
            let report: Value = serde_json::from_str(&run_on_text(cmd, &json(), &text).0).unwrap();
            let errors: Vec<String> = validator.iter_errors(&report).map(|e| e.to_string()).collect();
            assert!(errors.is_empty(), "{name} {}: {errors:?}", cmd.name());
            assert_eq!(report["command"], cmd.name());
        }
    }
}

#[test]
fn schema_rejects_a_wrong_result() {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let validator = jsonschema::validator_for(&schema).unwrap();
    let mut report: Value = serde_json::from_str(&run_on_text(Command::Basis, &json(), &read("loop")).0).unwrap();
    report["result"]["dim"] = Value::from("seven");
    assert!(!validator.is_valid(&report));
}

#[test]
fn text_output() {
    let (out, _, code) = run_on_text(Command::Cycles, &Options::default(), &read("loop"));
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "1 elementary cycles\na.a.b.beta1  weight 1\n");
    let (out, _, code) = run_on_text(Command::Check, &Options::default(), &read("two_arms_base"));
    assert_eq!((out.as_str(), code), ("not a trivial extension\n", EXIT_NEGATIVE));
    let quiet = Options { quiet: true, ..Options::default() };
    assert_eq!(run_on_text(Command::Basis, &quiet, &read("loop")).0, "");
}

#[test]
fn field_option() {
    let text = "vertex 1 2 3\narrow a 1 2\narrow b 2 3\nrel 3*a.b\n";
    let fp3 = Options { field: trivext_core::Field::prime(3).unwrap(), ..Options::default() };
    assert!(run_on_text(Command::Basis, &Options::default(), text).0.starts_with("dim 5\n"));
    assert!(run_on_text(Command::Basis, &fp3, text).0.starts_with("dim 6\n"));
    let fixed = format!("field q\n{text}");
    assert!(run_on_text(Command::Basis, &fp3, &fixed).0.starts_with("dim 5\n"));
}

#[test]
fn errors_and_bounds() {
    let (out, err, code) = run_on_text(Command::Basis, &Options::default(), "vertex 1\narrow a 1 x\n");
    assert_eq!((out.as_str(), code), ("", EXIT_INPUT));
    assert!(err.starts_with("error: 2:11:"), "{err}");
    let (_, err, code) = run_on_text(Command::Basis, &Options::default(), "vertex 1\narrow a 1 1\n");
    assert_eq!(code, EXIT_BOUND, "{err}");
}

fn binary(args: &[&str]) -> (String, i32) {
    let out = Process::new(env!("CARGO_BIN_EXE_trivext")).args(args).output().unwrap();
    (String::from_utf8(out.stdout).unwrap(), out.status.code().unwrap())
}

#[test]
fn binary_exit_codes() {
    let f = |n: &str| dir().join(format!("{n}.txt")).display().to_string();
    assert_eq!(binary(&["check", &f("two_arms")]).1, EXIT_OK);
    assert_eq!(binary(&["check", &f("two_arms_base")]).1, EXIT_NEGATIVE);
    assert_eq!(binary(&["verify", &f("loop")]).1, EXIT_OK);
    assert_eq!(binary(&["basis", "no/such/file"]).1, EXIT_INPUT);
    assert_eq!(binary(&["basis", "--field", "fp:4", &f("loop")]).1, EXIT_INPUT);
    assert_eq!(binary(&["frobnicate", &f("loop")]).1, EXIT_INPUT);
    let (out, code) = binary(&["--json", "socle", &f("loop")]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, std::fs::read_to_string(dir().join("expected/loop.socle.json")).unwrap());
}

#[test]
fn trivext_then_check_recovers_the_input() {
    let limits = trivext_core::cuts::SearchLimits::default();
    for name in ["loop", "three_paths", "two_arms"] {
        let input = trivext::parse_presentation(&read(name)).unwrap();
        let (t, _, code) = run_on_text(Command::Trivext, &Options::default(), &read(name));
        assert_eq!(code, EXIT_OK);
        let (out, _, code) = run_on_text(Command::Check, &Options::default(), &t);
        assert_eq!(code, EXIT_OK, "{name}");
        let base: String =
            out.lines().skip(1).take_while(|l| !l.starts_with("cut:")).map(|l| format!("{l}\n")).collect();
        let base = trivext::parse_presentation(&base).unwrap();
        assert!(trivext_core::cuts::presentation_match(&base, &input, &limits).unwrap().is_some(), "{name}");
    }
}
