use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use dialgebra::action::DialgebraAction;
use dialgebra::corpus::{corpus_entry, Profile};
use dialgebra::fleet::{identity_matrix_algebra, regular_fleet};
use dialgebra::format::{parse_dialgebra, write_action, write_cochains, write_dialgebra, write_operator};
use dialgebra::cohomology::{coboundary, CochainPair};
use dialgebra::operators::LinearOperator;
use dialgebra::scalar::{qi, Q};
use dialgebra::Matrix;
use serde_json::Value;
use tempfile::TempDir;

const ALG3: &str = "dialgebra alg3\ndim 2\nleft 1 2 1 1\nright 1 2 1 1\nright 2 1 1 1\nright 2 2 1 1\nalpha 2 1 1\nbeta 2 1 1\n";

fn dialg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dialg")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json report")
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn check_passes_on_alg3() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "alg3.dlg", ALG3);
    let out = dialg(&["check", "--algebra", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["pass"], true);
    let axioms: Vec<&str> = v["report"]["axioms"].as_array().unwrap().iter().map(|a| a["axiom"].as_str().unwrap()).collect();
    assert_eq!(axioms, ["commute", "eq4", "eq5", "eq6", "eq7", "eq8"]);
}

#[test]
fn check_reports_mutant_witness() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "mut.dlg", &format!("{ALG3}left 1 1 1 1\n"));
    let out = dialg(&["check", "--algebra", s(&f)]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    let eq4 = &v["report"]["axioms"][1];
    assert_eq!(eq4["axiom"], "eq4");
    assert_eq!(eq4["witness"], serde_json::json!([1, 1, 2]));
    let text = dialg(&["check", "--algebra", s(&f), "--text"]);
    assert!(String::from_utf8_lossy(&text.stdout).contains("witness=(1,1,2)"));
}

#[test]
fn derive_alg3_is_zero_dimensional() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "alg3.dlg", ALG3);
    let out = dialg(&["derive", "--algebra", s(&f), "--k", "0", "--l", "0"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["dim"], 0);
    let text = dialg(&["derive", "--algebra", s(&f), "--text"]);
    assert_eq!(String::from_utf8_lossy(&text.stdout).lines().next(), Some("dim 0"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    let dir = TempDir::new().unwrap();
    let bad = write(&dir, "bad.dlg", "dialgebra x\ndim 2\nleft 1 3 1 1\n");
    let out = dialg(&["check", "--algebra", s(&bad)]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3, column 8"));
    assert_eq!(dialg(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(dialg(&["check", "--algebra", "/nonexistent/x.dlg"]).status.code(), Some(2));
    assert_eq!(dialg(&["corpus", "export", "dim9/Alg1"]).status.code(), Some(2));
}

#[test]
fn export_roundtrips() {
    let out = dialg(&["corpus", "list"]);
    let ids: Vec<String> = json(&out)["entries"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["id"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(ids.len(), 26);
    for id in &ids {
        let exp = dialg(&["corpus", "export", id, "--profile", "mixed"]);
        assert_eq!(exp.status.code(), Some(0));
        let parsed = parse_dialgebra(&String::from_utf8(exp.stdout).unwrap()).unwrap();
        let built = corpus_entry(id).unwrap().build_profile(Profile::Mixed).unwrap();
        assert_eq!(parsed.left(), built.left());
        assert_eq!(parsed.right(), built.right());
        assert_eq!(parsed.alpha(), built.alpha());
        assert_eq!(parsed.beta(), built.beta());
    }
    let custom = dialg(&["corpus", "export", "dim2/Alg3", "--param", "a=1/2"]);
    assert!(String::from_utf8_lossy(&custom.stdout).contains("left 1 2 1 1/2"));
}

#[test]
fn corpus_verify_is_deterministic() {
    let a = dialg(&["corpus", "verify"]);
    let b = dialg(&["corpus", "verify"]);
    assert_eq!(a.stdout, b.stdout);
    // the dim-4 table entries are flagged
    assert_eq!(a.status.code(), Some(1));
    let v = json(&a);
    assert_eq!(v["entries"].as_array().unwrap().len(), 26);
    assert_eq!(v["table_discrepancies"].as_array().unwrap().len(), 16);
    assert_eq!(v["dim2_alpha_equals_beta"], true);
}

#[test]
fn yau_twist_writes_a_valid_algebra() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "alg3.dlg", ALG3);
    let a = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]);
    let op = write(&dir, "a.op", &write_operator(&LinearOperator::new("a", a)));
    let target = dir.path().join("out.dlg");
    let out = dialg(&["twist", "--algebra", s(&f), "--kind", "yau", "--op", s(&op), "--op2", s(&op), "--output", s(&target)]);
    assert_eq!(out.status.code(), Some(0));
    let d = parse_dialgebra(&std::fs::read_to_string(&target).unwrap()).unwrap();
    assert!(dialgebra::check_axioms(&d).passed());
    assert_eq!(dialg(&["twist", "--algebra", s(&f), "--kind", "yau", "--op", s(&op)]).status.code(), Some(2));
}

#[test]
fn morphism_and_operator_verbs() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "alg3.dlg", ALG3);
    let a = Matrix::from_rows(vec![vec![qi(0), qi(1)], vec![qi(0), qi(0)]]);
    let op = write(&dir, "a.op", &write_operator(&LinearOperator::new("a", a)));
    assert_eq!(dialg(&["morphism", "--map", s(&op), "--source", s(&f), "--target", s(&f)]).status.code(), Some(0));
    let id = write(&dir, "id.op", &write_operator(&LinearOperator::new("id", Matrix::<Q>::identity(2))));
    assert_eq!(dialg(&["operator", "--algebra", s(&f), "--kind", "rota-baxter", "--op", s(&id)]).status.code(), Some(1));
    let search = dialg(&["operator", "--algebra", s(&f), "--kind", "nijenhuis", "--search", "--field", "gf2"]);
    assert_eq!(search.status.code(), Some(0));
    assert!(json(&search)["count"].as_u64().unwrap() > 0);
    assert_eq!(dialg(&["operator", "--algebra", s(&f), "--kind", "nijenhuis", "--search"]).status.code(), Some(2));
    assert_eq!(dialg(&["check", "--algebra", s(&f), "--field", "gf3"]).status.code(), Some(0));
}

#[test]
fn brackets_poisson_and_actions_on_matrix_algebra() {
    let dir = TempDir::new().unwrap();
    let m2 = identity_matrix_algebra::<Q>(2).unwrap();
    let f = write(&dir, "m2.dlg", &write_dialgebra(&m2));
    for kind in ["lb", "lr", "lie"] {
        assert_eq!(dialg(&["bracket", "--algebra", s(&f), "--kind", kind]).status.code(), Some(0), "{kind}");
    }
    assert_eq!(dialg(&["poisson", "--algebra", s(&f)]).status.code(), Some(0));
    let tw = &regular_fleet::<Q>(1).unwrap()[3];
    let act = write(&dir, "self.act", &write_action(&DialgebraAction::regular(tw.clone()).unwrap()));
    let out = dialg(&["action", "--action", s(&act)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["functor_commutes"], true);
    let alg3 = write(&dir, "alg3.dlg", ALG3);
    let out = dialg(&["bracket", "--algebra", s(&alg3)]);
    assert_eq!(out.status.code(), Some(1));
    assert!(json(&out)["error"].as_str().unwrap().contains("not regular"));
}

#[test]
fn cohomology_dims_and_equivalence() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "alg3.dlg", ALG3);
    let out = dialg(&["cohomology", "--algebra", s(&f)]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!((v["z2"].clone(), v["b2"].clone(), v["h2"].clone()), (6.into(), 1.into(), 5.into()));

    let d = parse_dialgebra(ALG3).unwrap();
    let zero = write(&dir, "zero.coc", &write_cochains(&CochainPair::<Q>::zero(2, 1)));
    let nu = Matrix::from_rows(vec![vec![qi(0), qi(3)]]);
    let module = write(&dir, "m.mod", "module\ndim 1\nalpha 1 1 0\nbeta 1 1 0\n");
    let cb = write(&dir, "cb.coc", &write_cochains(&coboundary(&nu, &d).unwrap()));
    let out = dialg(&[
        "cohomology", "--algebra", s(&f), "--module", s(&module), "--cochains", s(&zero), "--against", s(&cb),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["equivalent"], true);
    // products land in span(e1), which an intertwining ν must kill
    assert!(v["witness"].as_str().unwrap().starts_with("operator nu\ndim 1 2\n"));
    let junk = write(&dir, "junk.coc", "cochains\ndim 2 1\ncochain 1 1 1 1 1\n");
    assert_eq!(dialg(&["cohomology", "--algebra", s(&f), "--cochains", s(&junk)]).status.code(), Some(1));
}
