use std::process::{Command, Output};

use lie4::report::Report;
use lie4::spec_file::AlgebraSpecFile;
use serde_json::Value;

fn lie4(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie4")).args(args).output().expect("binary runs")
}

fn report(out: &Output) -> Report {
    Report::from_json(std::str::from_utf8(&out.stdout).unwrap()).expect("JSON report")
}

fn write_spec(dir: &tempfile::TempDir, name: &str, body: &str) -> String {
    let path = dir.path().join(name);
    std::fs::write(&path, body).unwrap();
    path.display().to_string()
}

#[test]
fn family_ricci33_exact() {
    let out = lie4(&["family", "--s", "0", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert!(rep.ok);
    assert_eq!(rep.data["ricci33"], "-3/2");
    assert_eq!(rep.data["trace_ad_e4"], "1");
    assert_eq!(rep.data["gray"]["g2"], true);
    assert_eq!(rep.data["strictly_almost_kahler"], true);
}

#[test]
fn family_zero_t_exits_4() {
    assert_eq!(lie4(&["family", "--s", "1", "--t", "0"]).status.code(), Some(4));
    assert_eq!(lie4(&["family", "--s", "1", "--t", "0/3"]).status.code(), Some(4));
}

#[test]
fn family_negative_and_fractional_arguments() {
    let rep = report(&lie4(&["family", "--s", "-1/2", "--t", "-3"]));
    // (t² + s²)² / t² = (37/4)² / 9
    assert_eq!(rep.data["ricci33"], "-1369/96");
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let a = lie4(&["family", "--s", "2", "--t", "3"]).stdout;
    let b = lie4(&["family", "--s", "2", "--t", "3"]).stdout;
    assert_eq!(a, b);
}

#[test]
fn report_round_trip() {
    let out = lie4(&["classify", "--branch", "16"]);
    let text = String::from_utf8(out.stdout).unwrap();
    let rep = Report::from_json(&text).unwrap();
    assert_eq!(rep.to_json(), text);
    assert_eq!(Report::from_json(&rep.to_json()).unwrap(), rep);
}

#[test]
fn check_abelian_passes() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(&dir, "abelian.json", r#"{"structure_constants": []}"#);
    let out = lie4(&["check", &path]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    assert_eq!(rep.data["curvature"]["scal"], "0");
    assert_eq!(rep.data["unimodular"], true);
}

#[test]
fn check_family_with_structure() {
    let dir = tempfile::tempdir().unwrap();
    let spec = lie4(&["family", "--s", "1", "--t", "1", "--emit-spec"]).stdout;
    let path = write_spec(&dir, "f11.json", std::str::from_utf8(&spec).unwrap());
    for backend in ["--exact", "--float"] {
        let out = lie4(&["check", &path, backend, "--require", "g2,w2,w3,ricci-j-invariant"]);
        assert_eq!(out.status.code(), Some(0), "{backend}");
        let rep = report(&out);
        assert_eq!(rep.data["gray"]["g2_holds"], true);
        assert_eq!(rep.data["nijenhuis"]["integrable"], false);
    }
    let rep = report(&lie4(&["check", &path]));
    let ricci = &rep.data["curvature"]["ricci"];
    assert_eq!(ricci[2][2], "-6");
    assert_eq!(ricci[3][3], "-6");
    assert_eq!(ricci[0][0], "0");
    // the family is not Kähler, so requiring integrability fails
    assert_eq!(lie4(&["check", &path, "--require", "integrable"]).status.code(), Some(1));
}

#[test]
fn check_derives_omega_from_j() {
    let dir = tempfile::tempdir().unwrap();
    let mut spec: Value = serde_json::from_slice(&lie4(&["family", "--s", "0", "--t", "1", "--emit-spec"]).stdout).unwrap();
    spec.as_object_mut().unwrap().remove("omega");
    let path = write_spec(&dir, "j_only.json", &spec.to_string());
    let rep = report(&lie4(&["check", &path]));
    assert_eq!(rep.data["structure"]["almost_kahler"], true);
}

#[test]
fn check_broken_jacobi_exits_3() {
    let dir = tempfile::tempdir().unwrap();
    let path = write_spec(
        &dir,
        "bad.json",
        r#"{"structure_constants": [{"i": 1, "j": 2, "k": 3, "value": "1"}, {"i": 1, "j": 3, "k": 1, "value": "1"}]}"#,
    );
    let out = lie4(&["check", &path]);
    assert_eq!(out.status.code(), Some(3));
    let rep = report(&out);
    assert_eq!(rep.data["jacobi"]["violations"], serde_json::json!([[1, 2, 3]]));
}

#[test]
fn check_parse_failures_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("zero_den.json", r#"{"coframe_d": [["1/0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"]]}"#),
        ("both.json", r#"{"structure_constants": [], "coframe_d": [["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"],["0","0","0","0","0","0"]]}"#),
        ("neither.json", r#"{}"#),
        ("index.json", r#"{"structure_constants": [{"i": 2, "j": 1, "k": 3, "value": "1"}]}"#),
        ("unknown.json", r#"{"structure_constants": [], "extra": 1}"#),
        ("not_json.json", "not json"),
    ];
    for (name, body) in cases {
        let path = write_spec(&dir, name, body);
        assert_eq!(lie4(&["check", &path]).status.code(), Some(2), "{name}");
    }
    assert_eq!(lie4(&["check", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn classify_all() {
    let out = lie4(&["classify", "--branch", "all"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    let certs = rep.data["certificates"].as_array().unwrap();
    assert_eq!(certs.len(), 17);
    for (n, c) in certs.iter().enumerate() {
        assert_eq!(c["id"], n + 1);
        assert_eq!(c["residual_count"], 22);
        assert_eq!(c["all_zero"], true);
        for key in ["integrable", "reduction_target", "basis_change"] {
            assert!(c.get(key).is_some());
        }
    }
    assert_eq!(rep.data["non_integrable"], serde_json::json!([5, 11, 14, 16]));
    assert_eq!(certs[13]["reduction_target"], 5);
    assert_eq!(certs[16]["reduction_target"], 16);
    assert_eq!(rep.data["flags_match_listed"], false);
}

#[test]
fn classify_out_of_range_exits_2() {
    for bad in ["0", "18", "x"] {
        assert_eq!(lie4(&["classify", "--branch", bad]).status.code(), Some(2), "{bad}");
    }
}

#[test]
fn model_g49_half() {
    let out = lie4(&["model", "g49", "--alpha", "1/2"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    let coframe: Vec<String> = serde_json::from_value(rep.data["coframe"].clone()).unwrap();
    assert_eq!(coframe[1], "df2 = 1/2 f1∧f2");
    assert_eq!(coframe[3], "df4 = -1/2 f1∧f4 - 1 f2∧f3");
    assert_eq!(rep.data["isomorphism_to_r2sol2"]["holds"], true);
    let rep2 = report(&lie4(&["model", "g49", "--alpha", "2"]));
    assert_eq!(rep2.data["coframe"][1], "df2 = -1 f1∧f2");
}

#[test]
fn model_r2sol2() {
    let rep = report(&lie4(&["model", "r2sol2"]));
    assert_eq!(rep.data["ricci_j_invariant"], false);
    assert_eq!(rep.data["ricci"][2][2], "-6");
}

#[test]
fn model_kowalski() {
    let out = lie4(&["model", "kowalski", "--lambda", "2", "--points", "3", "--s", "0", "--t", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let rep = report(&out);
    let r = rep.data["summary"]["nonzero_eigenvalue"].as_f64().unwrap();
    assert!((r + 3.0 / 8.0).abs() < 1e-6, "{r}");
    let lambda = rep.data["cross_validation"]["lambda"].as_f64().unwrap();
    assert!((lambda - 1.0).abs() < 1e-6);
    assert_eq!(lie4(&["model", "kowalski", "--lambda=-1"]).status.code(), Some(2));
    assert_eq!(lie4(&["model", "kowalski", "--lambda", "0"]).status.code(), Some(2));
}

#[test]
fn text_format() {
    let out = lie4(&["family", "--s", "0", "--t", "1", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("family: PASS\n"));
    assert!(text.contains("  ricci33: -3/2\n"));
}

#[test]
fn sweep_csv_is_deterministic_across_thread_counts() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_lie4"))
            .args(["sweep", "--s-range", "-1:1", "--t-range", "-2:2", "--grid", "5"])
            .env("LIE4_THREADS", threads)
            .output()
            .unwrap()
    };
    let one = run("1");
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, run("4").stdout);
    let text = String::from_utf8(one.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("s,t,ricci33,trace_ad_e4,g2_residual,w2_residual,w3_residual,nijenhuis_norm"));
    // t = 0 is skipped: 5 s-values × 4 t-values
    assert_eq!(lines.count(), 20);
    assert!(!text.contains('\r'));
}

#[test]
fn sweep_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.csv");
    let out = lie4(&["sweep", "--s-range", "0:0", "--t-range", "1:1", "--grid", "1", "--output", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<lie4::commands::SweepRow> = rdr.deserialize().collect::<Result<_, _>>().unwrap();
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0].ricci33, -1.5);
    assert_eq!(rows[0].trace_ad_e4, 1.0);
    assert_eq!(lie4(&["sweep", "--s-range", "0", "--t-range", "1:2"]).status.code(), Some(2));
}

#[test]
fn spec_file_round_trip() {
    let spec = AlgebraSpecFile::from_json(
        r#"{"structure_constants": [{"i": 1, "j": 4, "k": 1, "value": "1/2"}], "metric": [["2","0","0","0"],["0","1","0","0"],["0","0","1","0"],["0","0","0","1"]]}"#,
    )
    .unwrap();
    assert_eq!(AlgebraSpecFile::from_json(&spec.to_json()).unwrap(), spec);
    let parsed = spec.parse().unwrap();
    assert_eq!(parsed.alg.c(0, 3, 0), lie4_core::rat(1, 2));
    let back = AlgebraSpecFile::from_parts(&parsed.alg, Some(&parsed.metric), None, None).parse().unwrap();
    assert_eq!(back, parsed);
}
