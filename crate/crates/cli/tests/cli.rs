use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use frobsep_cli::{load_spec, parse_spec, resolve_options, run_command, verify_report, Command as Cmd, Report, SpecBody, Verdict};
use frobsep_core::algebra::builtin;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_frobsep"))
}

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn spec(name: &str) -> PathBuf {
    root().join("specs").join(name)
}

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn exported_builtin_round_trips() {
    for name in ["field", "cyclic:2", "matrix:2", "truncated:3", "upper_triangular:2", "diagonal:3"] {
        let out = run(&["export-builtin", name]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let spec = parse_spec(&text, "x").unwrap();
        match spec.body {
            SpecBody::Algebra { algebra, .. } => assert_eq!(algebra, builtin(name).unwrap()),
            _ => panic!("wrong kind"),
        }
    }
    assert_eq!(run(&["export-builtin", "nonsense:2"]).status.code(), Some(2));
}

#[test]
fn nonassociative_table_names_the_instance() {
    let out = run(&["check-frobenius", data("nonassociative.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    let err = stderr(&out);
    assert!(err.contains("associativity at (1,1,1,"), "{err}");
}

#[test]
fn parse_errors_carry_positions() {
    let err = parse_spec("kind = \"algebra\"\n[algebra]\ndim = \"two\"\n", "x").unwrap_err();
    assert_eq!(err.exit_code(), 2);
    assert!(err.to_string().contains("line 3"), "{err}");
    let out = run(&["check-frobenius", data("bad_rational.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("zero denominator"));
    let err = parse_spec("kind = \"algebra\"\ncolour = 1\n", "x").unwrap_err();
    assert!(err.to_string().contains("unknown field `colour`"), "{err}");
    assert_eq!(run(&["check-frobenius", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn validation_errors_exit_with_three() {
    let out = run(&["check-wreath", data("bad_action.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3), "{}", stderr(&out));
    let out = run(&["check-wreath", spec("cyclic2.toml").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("does not accept"));
    let err = parse_spec("kind = \"algebra\"\nfunctional = [\"1\"]\n[algebra]\nbuiltin = \"cyclic:2\"\n", "x").unwrap_err();
    assert_eq!(err.exit_code(), 3);
}

#[test]
fn unknown_command_is_a_usage_error() {
    assert_eq!(run(&["check-everything", "x.toml"]).status.code(), Some(2));
}

#[test]
fn reports_are_deterministic_and_reverify() {
    let dir = std::env::temp_dir().join(format!("frobsep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("check-separable", "truncated2.toml"),
        ("crosscheck", "cyclic2_in_cyclic4.toml"),
        ("check-wreath", "smash_c2_dual_numbers.toml"),
        ("nakayama", "matrix2_twisted.toml"),
        ("check-frobenius", "upper_triangular2.toml"),
    ];
    for (cmd, file) in cases {
        let s = spec(file);
        let a = run(&[cmd, s.to_str().unwrap(), "--format", "structured", "--seed", "99"]);
        let b = run(&[cmd, s.to_str().unwrap(), "--format", "structured", "--seed", "99"]);
        assert!(a.status.success(), "{cmd} {file}: {}", stderr(&a));
        assert_eq!(a.stdout, b.stdout, "{cmd} {file}");
        let path = dir.join(format!("{cmd}.json"));
        std::fs::write(&path, &a.stdout).unwrap();
        let v = run(&["verify", s.to_str().unwrap(), path.to_str().unwrap()]);
        assert!(v.status.success(), "{cmd} {file}: {}", String::from_utf8_lossy(&v.stdout));
    }
}

#[test]
fn tampered_witness_fails_verification() {
    let s = spec("cyclic2.toml");
    let spec_file = load_spec(&s).unwrap();
    let opts = resolve_options(&spec_file, None, None, None);
    let report = run_command(Cmd::CheckSeparable, &spec_file, &opts).unwrap();
    let mut json = report.to_json();
    json = json.replacen("\"1/2\"", "\"1/3\"", 1);
    let tampered = Report::from_json(&json).unwrap();
    let results = verify_report(&spec_file, &tampered).unwrap();
    assert!(results.iter().any(|r| !r.ok));

    let dir = std::env::temp_dir().join(format!("frobsep-tamper-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("r.json");
    std::fs::write(&path, json).unwrap();
    assert_eq!(run(&["verify", s.to_str().unwrap(), path.to_str().unwrap()]).status.code(), Some(3));
}

#[test]
fn command_examples() {
    let opts = |f: &frobsep_cli::SpecFile| resolve_options(f, None, None, None);

    let t2 = load_spec(&spec("truncated2.toml")).unwrap();
    let r = run_command(Cmd::CheckFrobenius, &t2, &opts(&t2)).unwrap();
    assert_eq!(r.check("frobenius").unwrap().verdict, Verdict::Yes);
    assert!(r.check("separable").is_none());

    let tw = load_spec(&spec("trivial_wreath.toml")).unwrap();
    let r = run_command(Cmd::CheckWreath, &tw, &opts(&tw)).unwrap();
    for law in ["wr1a", "wr1b", "wr2", "wr3", "wr4", "wr5", "wr6"] {
        assert_eq!(r.check(&format!("wreath.{law}")).unwrap().verdict, Verdict::Pass, "{law}");
    }
    assert_eq!(r.check("wreath.product_laws").unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check("wreath.iota_morphism").unwrap().verdict, Verdict::Pass);
    assert_eq!(r.check("frobenius.wreath_route").unwrap().verdict, Verdict::No);

    let ext = load_spec(&spec("cyclic2_in_cyclic4.toml")).unwrap();
    let r = run_command(Cmd::Crosscheck, &ext, &opts(&ext)).unwrap();
    assert!(r.consistent());
    assert_eq!(r.check("frobenius.extension_route").unwrap().verdict, Verdict::Yes);
    assert_eq!(r.check("separable.bimodule_algebra_route").unwrap().verdict, Verdict::Yes);

    let sm = load_spec(&spec("smash_c2_dual_numbers.toml")).unwrap();
    assert!(matches!(sm.body, SpecBody::Wreath(_)));
}

#[test]
fn flags_override_spec_seed() {
    let m = load_spec(&spec("matrix2_twisted.toml")).unwrap();
    assert_eq!(resolve_options(&m, None, None, None).seed, 7);
    let o = resolve_options(&m, Some(3), Some(11), Some(4));
    assert_eq!((o.trials, o.seed, o.symbolic_cap), (3, 11, 4));
    let out = run(&["nakayama", spec("matrix2_twisted.toml").to_str().unwrap(), "--timing"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("elapsed:"));
}
