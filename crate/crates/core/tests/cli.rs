use std::process::{Command, Output};

use hjtype::cli::from_structured;

const WORKED: &str = "1/4 1/6 1/6 ; 3/8 5/12 7/12";

fn hjtype(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hjtype")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn default_emits_type() {
    let o = hjtype(&["--exponents", "1/4 1/6 1/6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "type matrix:\n  [ 1 -1 -1]\n  [ 0  2 -4]\n  [ 0  0  6]\n");
}

#[test]
fn surface_outputs() {
    let o = hjtype(&["--exponents", "1/7 4/7", "--emit", "type,nq,hj-string"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(n,q) = (7,3)"), "{out}");
    assert!(out.contains("[-3, -2, -2]"), "{out}");
}

#[test]
fn invalid_input_exits_2() {
    for args in [
        &["--exponents", "1/2 1/2 ; 1/3 2/3"][..],
        &["--exponents", "1/2 x"],
        &["--exponents", "1/4 1/6 1/6", "--emit", "nq"],
        &["--exponents", "1/2 1/2", "--dim", "3"],
        &["--exponents", "1/2 1/2 ; 3/2 3/2", "--strict"],
    ] {
        let o = hjtype(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(String::from_utf8_lossy(&o.stderr).contains("error"), "{args:?}");
    }
}

#[test]
fn trivial_step_warns_without_strict() {
    let o = hjtype(&["--exponents", "1/2 1/2 ; 3/2 3/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("N_k = 1"));
}

#[test]
fn structured_matches_text() {
    let o = hjtype(&["--exponents", WORKED, "--emit", "type,invariants,all-orderings", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let report = from_structured(&stdout(&o)).unwrap();
    assert_eq!(report.dimension, 3);
    assert_eq!(report.steps.len(), 2);
    assert_eq!(report.invariant_factors, ["1", "4", "4"]);
    assert_eq!(report.all_orderings.as_ref().unwrap().len(), 6);

    let text = stdout(&hjtype(&["--exponents", WORKED]));
    let rows: Vec<String> = report
        .type_matrix
        .iter()
        .map(|r| r.join(" "))
        .collect();
    let text_rows: Vec<String> = text
        .lines()
        .skip(1)
        .map(|l| l.trim().trim_matches(['[', ']']).split_whitespace().collect::<Vec<_>>().join(" "))
        .collect();
    assert_eq!(rows, text_rows);
}

#[test]
fn exponents_from_file() {
    let path = std::env::temp_dir().join(format!("hjtype-{}.txt", std::process::id()));
    std::fs::write(&path, "1/4 1/6 1/6\n3/8 5/12 7/12\n").unwrap();
    let from_file = hjtype(&["--exponents", &format!("@{}", path.display())]);
    std::fs::remove_file(&path).unwrap();
    assert_eq!(from_file.status.code(), Some(0));
    assert_eq!(stdout(&from_file), stdout(&hjtype(&["--exponents", WORKED])));

    let missing = hjtype(&["--exponents", "@/nonexistent/exponents.txt"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn empty_exponents_need_dim() {
    let o = hjtype(&["--dim", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("smooth"));
    assert_eq!(hjtype(&[]).status.code(), Some(2));
}

#[test]
fn characters_respect_bound() {
    let o = hjtype(&["--exponents", WORKED, "--emit", "characters", "--max-enumeration", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = hjtype(&["--exponents", WORKED, "--emit", "characters", "--format", "structured"]);
    let report = from_structured(&stdout(&o)).unwrap();
    assert_eq!(report.characters.unwrap().len(), 16);
}
