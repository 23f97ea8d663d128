use std::fs;
use std::process::{Command, Output};

fn covpauli(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_covpauli"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn field<'a>(text: &'a str, key: &str) -> &'a str {
    text.lines()
        .find_map(|l| {
            let (k, v) = l.split_once(" = ")?;
            (k.trim() == key).then_some(v)
        })
        .unwrap_or_else(|| panic!("no field {key} in\n{text}"))
}

#[test]
fn point_identity_channel() {
    let o = covpauli(&["point", "--p0", "1", "--p3", "0"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(field(&text, "C_cl"), "1");
    assert_eq!(field(&text, "C_E"), "2");
    assert_eq!(field(&text, "best_upper"), "1");
    assert_eq!(field(&text, "lower"), "1");
}

#[test]
fn point_boundary_and_square() {
    let text = stdout(&covpauli(&["point", "--p0", "0.5", "--p3", "0.5"]));
    assert_eq!(field(&text, "A"), "0");
    assert_eq!(field(&text, "known_zero"), "true");

    let text = stdout(&covpauli(&["point", "--p0", "0.4", "--p3", "0.4"]));
    assert_eq!(field(&text, "eb"), "true");
    assert_eq!(field(&text, "ad"), "true");
    assert_eq!(field(&text, "lower"), "0");
}

#[test]
fn point_json() {
    let o = covpauli(&["point", "--p0", "0.5", "--p3", "0", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).expect("valid JSON");
    assert_eq!(v["branch"], "equatorial");
    assert_eq!(v["xi"], 0.75);
    assert_eq!(v["c_cl"], 0.1887218755);
    assert_eq!(v["c_e"], 0.5);
    assert_eq!(v["best_upper_source"], "Ccl");
}

#[test]
fn invalid_parameters_exit_2_naming_the_constraint() {
    let o = covpauli(&["point", "--p0", "0.7", "--p3", "0.6"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("p0 + p3"));

    let o = covpauli(&["point", "--p0", "-0.1", "--p3", "0.2"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains(">= 0"));

    assert_eq!(covpauli(&["point", "--p0", "x", "--p3", "0"]).status.code(), Some(2));
    assert_eq!(covpauli(&["bogus"]).status.code(), Some(2));
}

#[test]
fn scan_small_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = covpauli(&["scan", "--grid", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    let csv = fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = csv.lines().collect();
    assert_eq!(
        lines[0],
        "p0,p3,p1,C_cl,xi,branch,C_E,A,B,best_upper,best_upper_source,lower,eb,ad,known_zero"
    );
    assert_eq!(lines.len(), 7);
    let keys: Vec<(f64, f64)> = lines[1..]
        .iter()
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort_by(|a, b| a.partial_cmp(b).unwrap());
    assert_eq!(keys, sorted);
}

#[test]
fn scan_skip_lower_is_fast_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let o = covpauli(&["scan", "--grid", "201", "--skip-lower", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes, fs::read(&b).unwrap());
    let csv = String::from_utf8(bytes).unwrap();
    assert!(!csv.lines().next().unwrap().contains("lower"));
    assert_eq!(csv.lines().count(), 1 + 201 * 202 / 2);
    let row = csv.lines().find(|l| l.starts_with("0.5,0.5,")).expect("row (0.5, 0.5)");
    assert_eq!(row.split(',').nth(7), Some("0"));
}

#[test]
fn scan_unwritable_path_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("scan.csv");
    let o = covpauli(&["scan", "--grid", "3", "--skip-lower", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn scan_rejects_degenerate_grid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("scan.csv");
    let o = covpauli(&["scan", "--grid", "1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figure_unknown_id_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let o = covpauli(&["figure", "fig7", "--out", dir.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn figure_region_maps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_str().unwrap();
    for fig in ["fig2", "fig3", "fig4"] {
        assert!(covpauli(&["figure", fig, "--out", out, "--grid", "51"]).status.success());
    }

    let fig3 = fs::read_to_string(dir.path().join("fig3.csv")).unwrap();
    for line in fig3.lines().skip(1) {
        let f: Vec<&str> = line.split(',').collect();
        assert!(f[2] == "false" || f[3] == "true", "EB without AD: {line}");
    }
    assert!(dir.path().join("fig3_contour.csv").exists());

    let fig4 = fs::read_to_string(dir.path().join("fig4.csv")).unwrap();
    assert!(fig4.lines().skip(1).all(|l| l.split(',').nth(3) != Some("B")));
    assert!(dir.path().join("fig4_boundary.csv").exists());

    let fig2 = fs::read_to_string(dir.path().join("fig2.csv")).unwrap();
    assert_eq!(fig2.lines().next(), Some("p0,p3,xi,branch,C_cl"));
}

#[test]
fn figure_fig5_corner_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let args = |d: &str| {
        covpauli(&[
            "figure",
            "fig5",
            "--out",
            d,
            "--eps",
            "1.0",
            "--samples",
            "11",
            "--opt-grid",
            "51",
        ])
    };
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    assert!(args(a.to_str().unwrap()).status.success());
    assert!(args(b.to_str().unwrap()).status.success());
    let first = fs::read(a.join("fig5_eps_1.csv")).unwrap();
    assert_eq!(first, fs::read(b.join("fig5_eps_1.csv")).unwrap());
    let csv = String::from_utf8(first).unwrap();
    assert_eq!(csv.lines().next(), Some("s,upper,lower"));
    assert_eq!(csv.lines().last(), Some("1,1,1"));
}

#[test]
fn verify_is_deterministic() {
    let a = covpauli(&["verify", "--samples", "10", "--seed", "7"]);
    let b = covpauli(&["verify", "--samples", "10", "--seed", "7"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    assert_eq!(text.lines().count(), 5);
    assert!(text.lines().all(|l| l.contains(" PASS ")));
}
