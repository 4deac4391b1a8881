use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "data", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn wlpkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlpkit")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn structured(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.extend(["--format", "structured"]);
    let o = wlpkit(&all);
    (o.status.code().expect("exit code"), serde_json::from_slice(&o.stdout).expect("json on stdout"))
}

#[test]
fn fvector_of_boundary_simplex() {
    let o = wlpkit(&["fvector", &data("boundary_simplex_3.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "seed=0 field=q\nf=4,6,4 h=1,1,1,1 g=1,0\n");
    let (code, v) = structured(&["fvector", &data("boundary_simplex_3.txt")]);
    assert_eq!(code, 0);
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"], "fvector");
    assert_eq!(v["result"]["f"]["entries"], serde_json::json!([4, 6, 4]));
}

#[test]
fn torus_fails_dehn_sommerville() {
    let o = wlpkit(&["gcheck", &data("torus.txt")]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stdout(&o).contains("dehn_sommerville=false"));
    let o = wlpkit(&["gcheck", &data("octahedron.txt")]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn malformed_input_reports_the_line() {
    let (code, v) = structured(&["fvector", &data("malformed.txt")]);
    assert_eq!(code, 3);
    assert_eq!(v["error"]["kind"], "parse");
    assert_eq!(v["error"]["line"], 3);
    assert_eq!(wlpkit(&["fvector", "/nonexistent/complex.txt"]).status.code(), Some(3));
    assert_eq!(wlpkit(&["fvector"]).status.code(), Some(3));
    assert_eq!(wlpkit(&["--help"]).status.code(), Some(0));
}

#[test]
fn classify_flags() {
    let (_, s) = structured(&["classify", &data("boundary_simplex_3.txt")]);
    for flag in
        ["pure", "homology_manifold", "homology_sphere", "cohen_macaulay", "gorenstein_star", "buchsbaum", "orientable"]
    {
        assert_eq!(s["result"][flag], true, "{flag}");
    }
    let (_, t) = structured(&["classify", &data("torus.txt")]);
    assert_eq!(t["result"]["homology_manifold"], true);
    assert_eq!(t["result"]["buchsbaum"], true);
    assert_eq!(t["result"]["orientable"], true);
    assert_eq!(t["result"]["cohen_macaulay"], false);
    let (_, n) = structured(&["classify", &data("nonpure.txt")]);
    assert_eq!(n["result"]["buchsbaum"], false);
}

#[test]
fn wlp_echoes_seed_and_certifies() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_string_lossy().into_owned();
    let s3 = data("boundary_simplex_4.txt");
    let (code, v) = structured(&["wlp", &s3, "--field", "fp", "--seed", "11", "--certify", "--out", &out]);
    assert_eq!(code, 0);
    assert_eq!(v["seed"], 11);
    assert_eq!(v["result"]["certificate"]["seed"], 11);
    assert_eq!(v["result"]["certified"]["certified_over_q"], true);
    let cert = dir.path().join("certificate.json");
    assert!(cert.exists());
    let o = wlpkit(&["verify", &s3, &cert.to_string_lossy()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("weak Lefschetz element: yes"));
    // The certificate does not belong to a different complex.
    assert_ne!(wlpkit(&["verify", &data("octahedron.txt"), &cert.to_string_lossy()]).status.code(), Some(0));
}

#[test]
fn exhausted_search_exits_4() {
    let (code, v) = structured(&["wlp", &data("octahedron.txt"), "--max-tries", "0"]);
    assert_eq!(code, 4);
    assert_eq!(v["error"]["kind"], "search_exhausted");
}

#[test]
fn walk_on_three_sphere() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("walk");
    let (code, v) = structured(&[
        "walk",
        &data("boundary_simplex_4.txt"),
        "--steps",
        "50",
        "--seed",
        "2024",
        "--out",
        &out.to_string_lossy(),
    ]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["complexes"], 51);
    assert_eq!(r["all_laws_hold"], true);
    let ledger = r["ledger"].as_array().unwrap();
    assert_eq!(ledger.len(), 51);
    assert!(ledger.iter().all(|s| s["ledger_matches"] == true));
    let last = &ledger[50];
    let direct: Vec<String> = last["g"]["entries"].as_array().unwrap().iter().map(|x| x.to_string()).collect();
    let tracked: Vec<String> =
        last["g_ledger"].as_array().unwrap().iter().map(|x| x.as_str().unwrap().to_string()).collect();
    assert_eq!(direct, tracked);
    assert!(out.join("step_0050.txt").exists());
    assert!(out.join("walk.json").exists());
    let final_step = std::fs::read_to_string(out.join("step_0050.txt")).unwrap();
    let f = stdout(&wlpkit(&["fvector", &out.join("step_0050.txt").to_string_lossy()]));
    assert!(f.contains(&format!("f={}", csv(&last["f"]["entries"]))), "{final_step}");
}

fn csv(v: &Value) -> String {
    v.as_array().unwrap().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

#[test]
fn empty_walk_echoes_input() {
    let (code, v) = structured(&["walk", &data("boundary_simplex_3.txt"), "--steps", "0"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["complexes"], 1);
    assert_eq!(v["result"]["final"], serde_json::json!([[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]));
}

#[test]
fn manifold_g_on_torus() {
    let (code, v) = structured(&["manifold-g", &data("torus.txt")]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["g_doubleprime"]["entries"], serde_json::json!([1, 3]));
    assert_eq!(r["m_check"]["is_m"], true);
    assert_eq!(r["socle"]["socle"][2], 6);
    assert_eq!(r["socle"]["nondegenerate"], true);
    let (_, s) = structured(&["manifold-g", &data("boundary_simplex_4.txt")]);
    assert_eq!(s["result"]["h_doubleprime"]["entries"], s["result"]["h_prime"]["h"]["entries"]);
    assert_eq!(wlpkit(&["manifold-g", &data("nonpure.txt")]).status.code(), Some(3));
}

#[test]
fn toric_fans() {
    let (code, v) = structured(&["toric", &data("cp2.fan")]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["report"]["betti"]["entries"], serde_json::json!([1, 1, 1]));
    assert_eq!(v["result"]["wle"]["verdicts"].as_array().unwrap().len(), 2);
    let (_, p) = structured(&["toric", &data("p1xp1.fan")]);
    assert_eq!(p["result"]["report"]["betti"]["entries"], serde_json::json!([1, 2, 1]));
    let (code, e) = structured(&["toric", &data("incomplete.fan")]);
    assert_eq!(code, 3);
    assert_eq!(e["error"]["kind"], "invalid_fan");
}

#[test]
fn reduce_hilbert_and_socle() {
    let (_, r) = structured(&["reduce", &data("octahedron.txt"), "--field", "fp:32003"]);
    assert_eq!(r["field"], "fp:32003");
    assert_eq!(r["result"]["dims"], serde_json::json!([1, 3, 3, 1]));
    let (_, h) = structured(&["hilbert", &data("torus.txt"), "--degree", "3"]);
    assert_eq!(h["result"]["values"]["entries"], serde_json::json!([1, 7, 28, 63]));
    let (_, s) = structured(&["socle", &data("boundary_simplex_3.txt")]);
    assert_eq!(s["result"]["socle"], serde_json::json!([0, 0, 0, 1]));
}

#[test]
fn structured_output_is_deterministic() {
    for args in [
        vec!["wlp", "octahedron.txt", "--seed", "5"],
        vec!["walk", "octahedron.txt", "--steps", "12", "--seed", "9"],
        vec!["reduce", "torus.txt", "--field", "fp", "--seed", "3"],
    ] {
        let mut a: Vec<String> = args.iter().map(|s| s.to_string()).collect();
        a[1] = data(args[1]);
        a.extend(["--format".into(), "structured".into()]);
        let refs: Vec<&str> = a.iter().map(String::as_str).collect();
        let first = wlpkit(&refs);
        let second = wlpkit(&refs);
        assert_eq!(first.status.code(), Some(0), "{args:?}");
        assert_eq!(second.status.code(), Some(0));
        assert_eq!(first.stdout, second.stdout, "{args:?}");
    }
}
