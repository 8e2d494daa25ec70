use std::path::Path;
use std::process::{Command, Output};

fn fractel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fractel")).args(args).output().expect("binary runs")
}

fn fractel_threads(threads: &str, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fractel"))
        .env("FRACTEL_THREADS", threads)
        .args(args)
        .output()
        .expect("binary runs")
}

fn path(dir: &Path, name: &str) -> String {
    dir.join(name).to_str().unwrap().to_owned()
}

#[test]
fn out_of_range_order_exits_with_parameter_error() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "cf.csv");
    let o = fractel(&["cf", "hadamard", "--nu", "1.5", "--t", "2", "--out", &out]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"], "parameter");
    assert_eq!(err["name"], "nu");
    assert!(!dir.path().join("cf.csv").exists());
}

#[test]
fn simulation_is_byte_identical_across_runs_and_threads() {
    let dir = tempfile::tempdir().unwrap();
    let a = path(dir.path(), "a.csv");
    let b = path(dir.path(), "b.csv");
    let args = |out: &str| -> Vec<String> {
        ["simulate", "telegraph", "--lambda", "1", "--c", "1", "--t", "2", "--n", "1000", "--seed", "7", "--out", out]
            .iter()
            .map(|s| s.to_string())
            .collect()
    };
    let a_args = args(&a);
    let b_args = args(&b);
    let oa = fractel_threads("1", &a_args.iter().map(String::as_str).collect::<Vec<_>>());
    let ob = fractel_threads("3", &b_args.iter().map(String::as_str).collect::<Vec<_>>());
    assert!(oa.status.success() && ob.status.success());
    let ca = std::fs::read(&a).unwrap();
    let cb = std::fs::read(&b).unwrap();
    let strip = |c: &[u8]| c.splitn(2, |&x| x == b'\n').nth(1).unwrap().to_vec();
    assert_eq!(strip(&ca), strip(&cb));

    let again = path(dir.path(), "a2.csv");
    let o = fractel(&args(&again).iter().map(String::as_str).collect::<Vec<_>>());
    assert!(o.status.success());
    let c2 = std::fs::read(&again).unwrap();
    assert_eq!(strip(&ca), strip(&c2));

    let text = String::from_utf8(ca).unwrap();
    let mut lines = text.lines();
    let header: serde_json::Value = serde_json::from_str(lines.next().unwrap().trim_start_matches("# ")).unwrap();
    assert_eq!(header["seed"], 7);
    assert_eq!(header["n"], 1000);
    assert_eq!(lines.next(), Some("value"));
    assert_eq!(lines.count(), 1000);
    assert!(dir.path().join("a.csv.config.json").exists());
}

#[test]
fn same_output_path_gives_identical_bytes() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "s.csv");
    let args =
        ["simulate", "telegraph", "--lambda", "1", "--c", "1", "--t", "2", "--n", "1000", "--seed", "7", "--out", &out];
    assert!(fractel(&args).status.success());
    let first = std::fs::read(&out).unwrap();
    assert!(fractel(&args).status.success());
    assert_eq!(first, std::fs::read(&out).unwrap());
}

#[test]
fn cf_csv_schema() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "cf.csv");
    let o = fractel(&[
        "cf",
        "space-hadamard",
        "--nu",
        "0.5",
        "--alpha",
        "1.5",
        "--t",
        "2",
        "--n-beta",
        "11",
        "--out",
        &out,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let mut r = csv::Reader::from_path(&out).unwrap();
    assert_eq!(r.headers().unwrap(), vec!["beta", "re", "im"]);
    let rows: Vec<csv::StringRecord> = r.records().map(Result::unwrap).collect();
    assert_eq!(rows.len(), 11);
    assert_eq!(&rows[5][0], "0");
    assert_eq!(&rows[5][1], "1");
    let cfg: serde_json::Value = serde_json::from_slice(&std::fs::read(format!("{out}.config.json")).unwrap()).unwrap();
    assert_eq!(cfg["params"]["flags"]["probabilistic"], true);
}

#[test]
fn density_outputs_and_atoms_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "d.csv");
    let o = fractel(&["density", "telegraph", "--lambda", "1", "--c", "1", "--t", "1", "--n-x", "21", "--out", &out]);
    assert!(o.status.success());
    let mut r = csv::Reader::from_path(&out).unwrap();
    assert_eq!(r.headers().unwrap(), vec!["x", "pdf"]);
    assert_eq!(r.records().count(), 21);
    let side: serde_json::Value = serde_json::from_slice(&std::fs::read(format!("{out}.atoms.json")).unwrap()).unwrap();
    let atoms = side["atoms"].as_array().unwrap();
    assert_eq!(atoms.len(), 2);
    assert!((atoms[1]["mass"].as_f64().unwrap() - 0.5 * (-1.0_f64).exp()).abs() < 1e-15);
}

#[test]
fn hilfer_conventions_and_extended_range() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "h.csv");
    let base =
        ["cf", "hilfer", "--gamma", "0.5", "--delta", "1.5", "--t", "1", "--f2", "0", "--n-beta", "5", "--out", &out];
    assert_eq!(fractel(&base).status.code(), Some(2));
    let mut ext = base.to_vec();
    ext.push("--extended");
    let o = fractel(&ext);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn ml_prints_json() {
    let o = fractel(&["ml", "--alpha", "2", "--z-re", "-2.4674011002723395"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v["value"]["re"].as_f64().unwrap().abs() < 1e-12);
    assert_eq!(fractel(&["ml", "--alpha", "3", "--z-re", "1"]).status.code(), Some(2));
    assert_eq!(fractel(&["ml", "--alpha", "0.5", "--z-re", "-2e4"]).status.code(), Some(1));
}

#[test]
fn validate_kernels_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = path(dir.path(), "k.json");
    let o = fractel(&["validate", "kernels", "--seed", "42", "--out", &out]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let v: serde_json::Value = serde_json::from_slice(&std::fs::read(&out).unwrap()).unwrap();
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 23);
    for r in reports {
        assert_eq!(r["passed"], true);
        for key in ["name", "points", "worst_ratio"] {
            assert!(r.get(key).is_some());
        }
    }
}
