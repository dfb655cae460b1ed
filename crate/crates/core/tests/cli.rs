//! Integration tests for the command-line interface: determinism, exit
//! codes, and the derive/tensor/probe flows.

use std::path::{Path, PathBuf};
use std::process::Command;

use mbm::builders::catalog_instance;
use mbm::file::{FileBuilder, ResolvedStructure, StructureFile};
use mbm::repcat::RegModule;
use mbm::scalar::FieldSpec;

fn exe() -> &'static str {
    env!("CARGO_BIN_EXE_mbm")
}

fn run(args: &[&str], paths: &[&Path]) -> (Option<i32>, String) {
    let mut c = Command::new(exe());
    c.args(args);
    for p in paths {
        c.arg(p);
    }
    let out = c.output().unwrap();
    (
        out.status.code(),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn derive_semigroup(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    let st = Command::new(exe())
        .args(["derive", "semigroup", name, "--out"])
        .arg(&path)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    path
}

#[test]
fn derive_and_check_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let f1 = derive_semigroup(dir.path(), "cyclic-3");
    let f2 = dir.path().join("again.json");
    let st = Command::new(exe())
        .args(["derive", "semigroup", "cyclic-3", "--out"])
        .arg(&f2)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    assert_eq!(
        std::fs::read(&f1).unwrap(),
        std::fs::read(&f2).unwrap()
    );
    let (c1, serial) = run(&["check"], &[&f1]);
    let (c2, parallel) = run(&["check", "--parallel"], &[&f1]);
    assert_eq!(c1, Some(0));
    assert_eq!(c2, Some(0));
    assert_eq!(serial, parallel);
}

#[test]
fn text_format_and_informational_entries() {
    let dir = tempfile::tempdir().unwrap();
    let f = derive_semigroup(dir.path(), "semilattice-2");
    let (code, text) = run(&["check", "--format", "text"], &[&f]);
    assert_eq!(code, Some(0));
    assert!(text.contains("PASS semilattice-2 (regular)"));
    assert!(text.ends_with("OVERALL PASS\n"));
    let (_, plain) = run(&["check"], &[&f]);
    assert!(!plain.contains("\"informational\": true"));
    let (code, with_info) = run(&["check", "--informational"], &[&f]);
    assert_eq!(code, Some(0));
    assert!(with_info.contains("\"informational\": true"));
}

#[test]
fn derive_bimonoid_and_dual_check_clean() {
    let dir = tempfile::tempdir().unwrap();
    for args in [
        ["derive", "bimonoid", "exterior-line"],
        ["derive", "bimonoid", "cyclic-2"],
        ["derive", "dual-monoid", "cyclic-3"],
    ] {
        let f = dir.path().join("out.json");
        let st = Command::new(exe()).args(args).arg("--out").arg(&f).status().unwrap();
        assert_eq!(st.code(), Some(0), "{args:?}");
        let (code, _) = run(&["check"], &[&f]);
        assert_eq!(code, Some(0), "{args:?}");
    }
    // Characteristic 2 has no sign grading: the construction's
    // precondition fails, which is an axiom failure, not a parse error.
    let f = dir.path().join("bad.json");
    let st = Command::new(exe())
        .args(["derive", "bimonoid", "exterior-line", "--field", "prime:2", "--out"])
        .arg(&f)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(1));
}

#[test]
fn probe_reports_pass_for_group_spans() {
    let dir = tempfile::tempdir().unwrap();
    let f = derive_semigroup(dir.path(), "cyclic-2");
    let (code, out) = run(
        &["probe", "--probes", "2", "--max-dim", "200", "--seed", "5"],
        &[&f],
    );
    assert_eq!(code, Some(0));
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["command"], "probe");
    assert_eq!(v["overall"], true);
    let (code2, out2) = run(
        &["probe", "--probes", "2", "--max-dim", "200", "--seed", "5", "--parallel"],
        &[&f],
    );
    assert_eq!(code2, Some(0));
    assert_eq!(out, out2);
}

#[test]
fn tensor_requires_equal_underlying_structures() {
    let dir = tempfile::tempdir().unwrap();
    let r2 = catalog_instance("semigroup-z2", FieldSpec::Rational).unwrap();
    let r3 = catalog_instance("semigroup-z3", FieldSpec::Rational).unwrap();
    let mut b = FileBuilder::new(&r2.ctx).unwrap();
    b.add_regular("z2", &r2).unwrap();
    b.add_module("m1", "z2", &RegModule::regular(&r2)).unwrap();
    b.add_module("m2", "z2", &RegModule::regular(&r2)).unwrap();
    b.add_regular("z3", &r3).unwrap();
    b.add_module("other", "z3", &RegModule::regular(&r3)).unwrap();
    let f = dir.path().join("modules.json");
    std::fs::write(&f, b.finish().to_canonical_json()).unwrap();

    let out_file = dir.path().join("tensored.json");
    let st = Command::new(exe())
        .args(["tensor"])
        .arg(&f)
        .args(["m1", "m2", "--name", "m1m2", "--out"])
        .arg(&out_file)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    let parsed = StructureFile::from_json(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let resolved = parsed.resolve().unwrap();
    assert!(resolved
        .structures
        .iter()
        .any(|(n, s)| n == "m1m2" && matches!(s, ResolvedStructure::Module(_))));
    let (code, _) = run(&["check"], &[&out_file]);
    assert_eq!(code, Some(0));

    // Mismatched underlying structures are an input error.
    let st = Command::new(exe())
        .args(["tensor"])
        .arg(&f)
        .args(["m1", "other", "--name", "bad", "--out"])
        .arg(dir.path().join("unused.json"))
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(2));
}

#[test]
fn module_from_action_solves_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let r = catalog_instance("semigroup-z3", FieldSpec::Rational).unwrap();
    let md = RegModule::regular(&r);
    let act = mbm::repcat::extract_action_vec(&md);
    let mut b = FileBuilder::new(&r.ctx).unwrap();
    b.add_regular("z3", &r).unwrap();
    b.add_object("Q", &act.q_obj).unwrap();
    b.add_morphism("act", &["z3.A", "Q"], &["Q"], &act.q).unwrap();
    let f = dir.path().join("action.json");
    std::fs::write(&f, b.finish().to_canonical_json()).unwrap();

    let out_file = dir.path().join("with-module.json");
    let st = Command::new(exe())
        .args(["derive", "module-from-action"])
        .arg(&f)
        .args(["--structure", "z3", "--action", "act", "--name", "solved", "--out"])
        .arg(&out_file)
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    let parsed = StructureFile::from_json(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
    let resolved = parsed.resolve().unwrap();
    let solved = resolved
        .structures
        .iter()
        .find_map(|(n, s)| match s {
            ResolvedStructure::Module(m) if n == "solved" => Some(m),
            _ => None,
        })
        .expect("solved module present");
    assert_eq!(solved.q1, md.q1);
    assert_eq!(solved.q4, md.q4);
}

#[test]
fn missing_file_is_an_input_error() {
    let (code, _) = run(&["check"], &[Path::new("/nonexistent/nope.json")]);
    assert_eq!(code, Some(2));
}
