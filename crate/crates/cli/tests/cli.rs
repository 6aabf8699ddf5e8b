use octachain::ChainGraph;
use octachain_cli::{run, run_verify_with, ExportRow, Format};

fn invoke(args: &[&str]) -> (u8, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let mut full = vec!["octachain"];
    full.extend_from_slice(args);
    let code = run(full, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn kf_table_rows() {
    let (code, out, _) = invoke(&["table", "kf", "--n-max", "17"]);
    assert_eq!(code, 0);
    let row = out.lines().find(|l| l.starts_with("17 ")).unwrap();
    assert!(row.trim_end().ends_with("24639.33"), "{row}");

    let (code, out, _) = invoke(&["table", "kf", "--n-max", "1"]);
    assert_eq!(code, 0);
    let body: Vec<&str> = out.lines().skip(2).collect();
    assert_eq!(body.len(), 1);
    assert!(body[0].ends_with("18.00"));
}

#[test]
fn tau_table_defaults_to_eight_rows() {
    let (code, out, _) = invoke(&["table", "tau"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 2 + 8);
    assert!(out.lines().any(|l| l == "7  210119944214597861376"));
}

#[test]
fn kfstar_table_as_csv_and_json() {
    let (_, csv, _) = invoke(&["table", "kfstar", "--n-max", "3", "--format", "csv"]);
    assert_eq!(
        csv,
        "n,num,den,2dp\n1,213,1,213.00\n2,1118,1,1118.00\n3,9670,3,3223.33\n"
    );
    let (_, json, _) = invoke(&["table", "kfstar", "--n-max", "2", "--format", "json"]);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed[1]["num"], "1118");
}

#[test]
fn export_csv_rows() {
    let (code, out, _) = invoke(&["export", "--n-max", "2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(
        lines[0],
        "n,kf_num,kf_den,kf_2dp,kfstar_num,kfstar_den,kfstar_2dp,tau,wiener,gutman"
    );
    assert_eq!(lines[1], "1,18,1,18.00,213,1,213.00,1024,46,542");
    assert_eq!(lines[2].split(',').nth(7), Some("786432"));
}

#[test]
fn export_json_round_trips() {
    let (code, out, _) = invoke(&["export", "--n-max", "4", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<ExportRow> = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3].tau, "463856467968");
    assert_eq!(rows[1].kf_num, "238");
    assert_eq!(rows[1].kf_den, "3");
    assert_eq!(serde_json::to_string_pretty(&rows).unwrap() + "\n", out);
    let raw: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(raw[0]["tau"].is_string());
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["export", "--n-max", "5", "--format", "json"][..],
        &["ratio", "--n-max", "12"][..],
        &["verify", "--n-max", "3"][..],
    ] {
        assert_eq!(invoke(args), invoke(args), "{args:?}");
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("table.csv");
    let path_text = path.to_str().unwrap();
    let (code, out, _) = invoke(&[
        "table", "tau", "--n-max", "2", "--format", "csv", "--out", path_text,
    ]);
    assert_eq!(code, 0);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "n,tau\n1,1024\n2,786432\n"
    );

    let bad = dir.path().join("missing").join("x.csv");
    let (code, _, err) = invoke(&["export", "--n-max", "1", "--out", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("cannot write"));
}

#[test]
fn resistance_queries() {
    let (code, out, _) = invoke(&["resistance", "--n", "1", "--u", "1", "--v", "1'"]);
    assert_eq!(code, 0);
    assert_eq!(out, "r(1, 1') on O_1 = 1/2 ~ 0.500000\n");
    let (_, json, _) = invoke(&[
        "resistance",
        "--n",
        "1",
        "--u",
        "1",
        "--v",
        "4'",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(
        (v["num"].as_str(), v["den"].as_str()),
        (Some("1"), Some("1"))
    );
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["resistance", "--n", "1", "--u", "2", "--v", "2"][..],
        &["resistance", "--n", "1", "--u", "5", "--v", "1"][..],
        &["resistance", "--n", "0", "--u", "1", "--v", "2"][..],
        &["table", "kf", "--n-max", "0"][..],
        &["table", "wiener"][..],
        &["table", "kf", "--format", "xml"][..],
        &["frobnicate"][..],
    ] {
        let (code, _, err) = invoke(args);
        assert_eq!(code, 2, "{args:?}: {err}");
        assert!(!err.is_empty());
    }
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify"));
}

#[test]
fn verify_warns_on_distance_cubics() {
    let (code, out, _) = invoke(&["verify", "--n-max", "2"]);
    assert_eq!(code, 0);
    let warns: Vec<&str> = out.lines().filter(|l| l.starts_with("WARN")).collect();
    assert_eq!(warns.len(), 4);
    assert!(warns[0].contains("paper_wiener") && warns[0].contains("50"));
    assert!(out.lines().last().unwrap().ends_with("0 fail"));
}

#[test]
fn verify_fails_on_a_mutated_chain() {
    let broken = |n: u32| {
        let g = ChainGraph::build(n as i64)?;
        let mut edges = g.edge_labels();
        edges.retain(|(a, b)| !(a.to_string() == "1" && b.to_string() == "2'"));
        ChainGraph::from_edges(n, &edges)
    };
    let outcome = run_verify_with(2, 14, &broken, Format::Table).unwrap();
    assert_ne!(outcome.code, 0);
    assert!(outcome.text.lines().any(|l| l.starts_with("FAIL")));
}

#[test]
fn ratio_rows() {
    let (code, out, _) = invoke(&["ratio", "--n-max", "1"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("0.391304"));

    let (_, csv, _) = invoke(&["ratio", "--n-max", "52", "--format", "csv"]);
    let last = csv.lines().last().unwrap();
    assert!(last.starts_with("52,extrapolated,"), "{last}");
    let decimals: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert!(decimals.windows(2).all(|w| w[1] <= w[0]));
    assert!((decimals[49] - 0.25).abs() < 0.02);
}
