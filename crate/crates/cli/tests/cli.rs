use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn lndcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lndcert")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn model_file(dir: &Path, text: &str) -> PathBuf {
    let p = dir.join("model.lnd");
    fs::write(&p, text).unwrap();
    p
}

fn repo_models() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

#[test]
fn check_lnd_on_delta1() {
    let dir = tempfile::tempdir().unwrap();
    let p = model_file(
        dir.path(),
        "vars { params: t; main: x, y; }\nalgebra B { gens: x, y, t*x, t*y; }\nderivation d1 { x -> y; }\n",
    );
    let o = lndcert(&["check-lnd", p.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("\"result\": \"stable\""), "{out}");
    assert!(out.contains("\"result\": \"nilpotent\""), "{out}");
}

#[test]
fn ml_certificate_on_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let p = model_file(dir.path(), "use counterexample(m=1)\n");
    let o = lndcert(&["ml-certificate", p.to_str().unwrap(), "--L", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"result\": \"constants_only\""));
}

#[test]
fn lndrank_find_on_xytxty() {
    let dir = tempfile::tempdir().unwrap();
    let p = model_file(
        dir.path(),
        "vars { params: t; main: x, y; }\nalgebra B { gens: x, y, t*x, t*y; }\n\
         derivation D1 { x -> y; }\nderivation D2 { y -> x; }\nderivation D3 { t -> 1; }\n",
    );
    let o = lndcert(&["lndrank", p.to_str().unwrap(), "--find", "--cap", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"determinant\": \"x^2*y\""), "{}", stdout(&o));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = model_file(dir.path(), "vars { main: x; }\nderivation D { x -> q; }\n");
    let o = lndcert(&["run", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("2:21: unknown variable `q`"));

    let failing = model_file(dir.path(), "vars { main: x, y; }\nderivation D { y -> x; }\ncheck kernel { derivations: D; degree: 2; expect: dim(2); }\n");
    assert_eq!(lndcert(&["run", failing.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(lndcert(&["run", failing.to_str().unwrap(), "--degree", "1"]).status.code(), Some(0));
    assert_eq!(lndcert(&["chain", failing.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn catalog_is_green_and_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("a.json");
    let o = lndcert(&["catalog", "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let first = fs::read_to_string(&out).unwrap();
    let again = stdout(&lndcert(&["catalog"]));
    assert_eq!(first, again);
    assert!(first.contains("\"failed\": 0"));
}

#[test]
fn printed_catalog_reruns() {
    let dir = tempfile::tempdir().unwrap();
    let o = lndcert(&["catalog", "--entry", "xytxty", "--print"]);
    let p = model_file(dir.path(), &stdout(&o));
    assert_eq!(lndcert(&["run", p.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn shipped_models_pass() {
    let mut n = 0;
    for entry in fs::read_dir(repo_models()).unwrap() {
        let path = entry.unwrap().path();
        if path.extension().and_then(|e| e.to_str()) != Some("lnd") {
            continue;
        }
        let o = lndcert(&["run", path.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0), "{}: {}", path.display(), String::from_utf8_lossy(&o.stderr));
        n += 1;
    }
    assert!(n >= 5);
}
