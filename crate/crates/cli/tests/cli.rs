use std::path::Path;
use std::process::{Command, Output};

fn perzeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perzeta"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn value(out: &Output) -> f64 {
    stdout(out).trim().parse().unwrap()
}

fn read_csv(path: &Path) -> (Vec<String>, Vec<Vec<f64>>) {
    let text = std::fs::read_to_string(path).unwrap();
    let mut lines = text.lines();
    let header = lines.next().unwrap().split(',').map(String::from).collect();
    let rows = lines
        .map(|l| l.split(',').map(|f| f.parse().unwrap()).collect())
        .collect();
    (header, rows)
}

#[test]
fn eval_examples() {
    let out = perzeta(&["eval", "--kernel", "--nu", "0.5", "--x", "0.5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!((value(&out) + 0.5).abs() < 1e-14);

    let out = perzeta(&["eval", "--raw", "--s", "3", "--x", "0"]);
    assert_eq!(value(&out), perzeta_core::riemann_zeta(3.0).unwrap());
    // 17 significant digits
    let text = stdout(&out);
    let mantissa = text
        .trim()
        .split('e')
        .next()
        .unwrap()
        .replace(['.', '-'], "");
    assert_eq!(mantissa.len(), 17, "{text}");

    let out = perzeta(&["eval", "--kernel", "--nu", "0", "--x", "0.3"]);
    assert_eq!(value(&out), 0.0);
}

#[test]
fn eval_exit_codes() {
    let out = perzeta(&["eval", "--raw", "--s", "-1", "--x", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&out.stderr).lines().count(), 1);
    let out = perzeta(&["eval", "--raw", "--s", "0.5", "--x", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = perzeta(&["eval", "--kernel", "--nu", "1", "--x", "0.3", "--unknown"]);
    assert_eq!(out.status.code(), Some(2));
    let out = perzeta(&["eval", "--x", "0.3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn table_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let out = perzeta(&["table", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let (header, rows) = read_csv(&path);
    assert_eq!(
        header,
        ["x", "z_nu_0.25", "z_nu_0.5", "z_nu_1", "z_nu_2", "z_nu_5"]
    );
    assert_eq!(rows.len(), 513);
    assert!(rows[0][1..].iter().all(|v| *v == 1.0));
    let half = &rows[256];
    assert_eq!(half[0], 0.5);
    assert!((half[3] + 0.75).abs() < 1e-14);
    for r in &rows {
        let c = (std::f64::consts::TAU * r[0]).cos();
        assert!((r[5] - c).abs() <= 3.0 * 2f64.powi(-11));
    }
    assert!(std::fs::read_to_string(&path).unwrap().ends_with('\n'));
}

#[test]
fn table_errors() {
    let out = perzeta(&["table", "--grid-points", "1"]);
    assert_eq!(out.status.code(), Some(2));
    let out = perzeta(&["table", "--output", "/nonexistent-dir/t.csv"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn accuracy_direct_branch() {
    let out = perzeta(&["accuracy", "--s-min", "10"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stderr).to_string();
    let max: f64 = text
        .lines()
        .find_map(|l| l.strip_prefix("max_ulp="))
        .unwrap()
        .parse()
        .unwrap();
    assert!(max <= 4.0, "{max}");
}

#[test]
fn accuracy_bound_and_config() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("acc.csv");
    let out = perzeta(&[
        "accuracy",
        "--bound",
        "1",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).contains("max_ulp="));
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        text.lines().next().unwrap(),
        "x,s,oracle,computed,err_ulp,terms,branch"
    );

    let out = perzeta(&["accuracy", "--precision-bits", "20"]);
    assert_eq!(out.status.code(), Some(5));
}

#[test]
fn psd_check_examples() {
    let out = perzeta(&[
        "psd-check",
        "--kernel",
        "circle",
        "--nu",
        "0.5",
        "--trials",
        "200",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = perzeta(&[
        "psd-check",
        "--kernel",
        "sphere",
        "--a",
        "1",
        "--nu",
        "1",
        "--trials",
        "100",
        "--max-size",
        "32",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let out = perzeta(&["psd-check", "--kernel", "sphere", "--a", "0.5", "--nu", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gp_demo_interpolates() {
    let dir = tempfile::tempdir().unwrap();
    let post = dir.path().join("post.csv");
    let train = dir.path().join("train.csv");
    let out = perzeta(&[
        "gp-demo",
        "--noise",
        "0",
        "--n-points",
        "8",
        "--query-points",
        "17",
        "--output",
        post.to_str().unwrap(),
        "--train-output",
        train.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("log_marginal_likelihood="));
    let (_, post_rows) = read_csv(&post);
    let (_, train_rows) = read_csv(&train);
    for t in &train_rows {
        let row = post_rows.iter().find(|r| r[0] == t[0]).unwrap();
        assert!((row[1] - t[1]).abs() < 1e-6);
    }
}

#[test]
fn gp_demo_periodic_and_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let args = |p: &Path| {
        vec![
            "gp-demo".to_string(),
            "--seed".into(),
            "42".into(),
            "--x-max".into(),
            "2".into(),
            "--query-points".into(),
            "41".into(),
            "--output".into(),
            p.to_str().unwrap().into(),
        ]
    };
    let run = |p: &Path| {
        let a = args(p);
        perzeta(&a.iter().map(String::as_str).collect::<Vec<_>>())
    };
    assert_eq!(run(&a).status.code(), Some(0));
    assert_eq!(run(&b).status.code(), Some(0));
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    let (_, rows) = read_csv(&a);
    // x = k/20, so rows k and k + 20 are one period apart. Where both are
    // exact binary fractions the rows agree bit for bit.
    for k in 0..=20 {
        let (a, b) = (&rows[k][1..], &rows[k + 20][1..]);
        if k % 5 == 0 {
            assert_eq!(a, b, "k = {k}");
        }
        for (u, v) in a.iter().zip(b) {
            assert!((u - v).abs() <= 1e-9, "k = {k}");
        }
    }
}
