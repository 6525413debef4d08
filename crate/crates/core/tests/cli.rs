use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use lck_lab::catalog::build;
use lck_lab::io::file::AlgebraDocument;
use lck_lab::io::report::{Report, Status};
use lck_lab::linalg::int;
use lck_lab::{CatalogKey, Cochain};

fn lck_lab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lck-lab"))
        .args(args)
        .env_remove("LCK_LAB_THREADS")
        .output()
        .expect("binary runs")
}

fn write_doc(dir: &Path, name: &str, doc: &AlgebraDocument) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, doc.to_toml()).unwrap();
    path
}

fn doc(key: &str) -> AlgebraDocument {
    AlgebraDocument::from(&build(&key.parse().unwrap()).unwrap())
}

fn machine(out: &Output) -> Report {
    Report::from_jsonl(std::str::from_utf8(&out.stdout).unwrap()).unwrap()
}

#[test]
fn check_passes_on_emitted_hopf_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hopf.toml");
    let emit = lck_lab(&[
        "catalog",
        "emit",
        "surface(6)",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert!(emit.status.success());
    let out = lck_lab(&["check", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let r = machine(&out);
    assert_eq!(r.get("theta_computed").unwrap().value, "w");
    assert_eq!(r.get("vaisman").unwrap().value, "true");
    assert_eq!(r.get("reeb_form").unwrap().value, "z");
}

#[test]
fn check_fails_when_theta_is_doubled() {
    let dir = tempfile::tempdir().unwrap();
    let mut d = doc("surface(6)");
    let t = d.forms["theta"].scale(&int(2));
    d.forms.insert("theta".into(), t);
    let path = write_doc(dir.path(), "bad.toml", &d);
    let out = lck_lab(&["check", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(1));
    let r = machine(&out);
    let item = r.get("d_omega_equals_theta_wedge_omega").unwrap();
    assert_eq!(item.status, Some(Status::Fail));
    assert_eq!(r.get("theta_given").unwrap().value, "2*w");
    assert_eq!(r.get("theta_computed").unwrap().value, "w");
}

#[test]
fn malformed_rational_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let text = doc("surface(6)").to_toml().replacen("\"1\"", "\"1/0\"", 1);
    let path = dir.path().join("broken.toml");
    std::fs::write(&path, text).unwrap();
    let out = lck_lab(&["check", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("1/0"), "{err}");
}

#[test]
fn missing_file_and_unknown_key_are_input_errors() {
    assert_eq!(
        lck_lab(&["check", "/nonexistent/x.toml"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lck_lab(&["catalog", "emit", "surface(9)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        lck_lab(&["catalog", "emit", "nonsense"]).status.code(),
        Some(2)
    );
}

#[test]
fn every_catalog_key_round_trips_through_the_binary() {
    let dir = tempfile::tempdir().unwrap();
    for key in CatalogKey::defaults() {
        let path = dir.path().join("entry.toml");
        let out = lck_lab(&[
            "catalog",
            "emit",
            &key.to_string(),
            "-o",
            path.to_str().unwrap(),
        ]);
        assert!(out.status.success(), "{key}");
        let text = std::fs::read_to_string(&path).unwrap();
        let parsed = AlgebraDocument::from_toml(&text).unwrap();
        assert_eq!(
            parsed,
            AlgebraDocument::from(&build(&key).unwrap()),
            "{key}"
        );
        let stdout = lck_lab(&["catalog", "emit", &key.to_string()]);
        assert_eq!(String::from_utf8(stdout.stdout).unwrap(), text);
    }
}

#[test]
fn catalog_list_names_every_default_key() {
    let out = lck_lab(&["catalog", "list", "--format", "machine"]);
    assert!(out.status.success());
    let r = machine(&out);
    assert_eq!(r.entries.len(), CatalogKey::defaults().len());
    assert_eq!(r.get("surface(1)").unwrap().value, "Prop4-3ii");
}

#[test]
fn cohomology_tables() {
    let dir = tempfile::tempdir().unwrap();
    for key in ["heisenberg_type(2)", "surface(6)"] {
        let path = write_doc(dir.path(), "a.toml", &doc(key));
        let out = lck_lab(&["cohomology", path.to_str().unwrap(), "--format", "machine"]);
        assert_eq!(out.status.code(), Some(0));
        let r = machine(&out);
        for p in 0..=4 {
            assert_eq!(r.get(&format!("H^{p}")).unwrap().value, "0", "{key} H^{p}");
        }
        let out = lck_lab(&[
            "cohomology",
            path.to_str().unwrap(),
            "--theta",
            "0",
            "--p",
            "0",
            "--format",
            "machine",
        ]);
        assert_eq!(machine(&out).get("H^0").unwrap().value, "1");
    }
}

#[test]
fn cohomology_with_non_closed_form_is_a_domain_failure() {
    let dir = tempfile::tempdir().unwrap();
    let mut d = doc("surface(6)");
    let z = d.algebra.index_of("Z").unwrap();
    d.forms
        .insert("theta".into(), Cochain::monomial(4, &[z], int(1)).unwrap());
    let path = write_doc(dir.path(), "z.toml", &d);
    let out = lck_lab(&["cohomology", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not closed"));
}

#[test]
fn classify_emitted_surface() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s1.toml");
    lck_lab(&[
        "catalog",
        "emit",
        "surface(1)",
        "-o",
        path.to_str().unwrap(),
    ]);
    let out = lck_lab(&["classify", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(machine(&out).get("class").unwrap().value, "Prop4-3ii");
}

#[test]
fn double_root_reports_exact_roots() {
    let out = lck_lab(&["double-root", "--m", "3", "--n", "3", "--format", "machine"]);
    assert_eq!(machine(&out).get("double_root").unwrap().value, "1");
    let out = lck_lab(&[
        "double-root",
        "--m",
        "-1",
        "--n",
        "-1",
        "--format",
        "machine",
    ]);
    assert_eq!(machine(&out).get("double_root").unwrap().value, "-1");
    let out = lck_lab(&["double-root", "--m", "2", "--n", "2", "--format", "machine"]);
    assert_eq!(machine(&out).get("double_root").unwrap().value, "none");
}

#[test]
fn search_without_witness_echoes_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(dir.path(), "filiform.toml", &doc("prop4_family(3i)"));
    let out = lck_lab(&["search", path.to_str().unwrap(), "--format", "machine"]);
    assert_eq!(out.status.code(), Some(1));
    let r = machine(&out);
    assert_eq!(r.get("grid").unwrap().value, "-3:3:1/2");
    assert_eq!(r.get("witness").unwrap().value, "no witness on grid");
    assert!(r.get("evidence").unwrap().value.contains("not a proof"));
}

#[test]
fn search_finds_hopf_witness() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_doc(dir.path(), "hopf.toml", &doc("surface(6)"));
    let out = lck_lab(&[
        "search",
        path.to_str().unwrap(),
        "--grid",
        "-1:1:1",
        "--format",
        "machine",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        machine(&out).get("witness").unwrap().status,
        Some(Status::Pass)
    );
}

#[test]
fn thread_variable_is_validated() {
    let run = |value: &str| {
        Command::new(env!("CARGO_BIN_EXE_lck-lab"))
            .args(["double-root", "--m", "3", "--n", "3"])
            .env("LCK_LAB_THREADS", value)
            .output()
            .unwrap()
            .status
            .code()
    };
    assert_eq!(run("2"), Some(0));
    assert_eq!(run("0"), Some(2));
    assert_eq!(run("many"), Some(2));
}

#[test]
fn human_output_marks_failures() {
    let dir = tempfile::tempdir().unwrap();
    let mut d = doc("surface(6)");
    let t = d.forms["theta"].scale(&int(2));
    d.forms.insert("theta".into(), t);
    let path = write_doc(dir.path(), "bad.toml", &d);
    let out = lck_lab(&["check", path.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text
        .lines()
        .any(|l| l.contains("FAIL") && l.contains("d_omega_equals_theta_wedge_omega")));
    assert!(!text.contains('.'), "no decimal approximations: {text}");
}
