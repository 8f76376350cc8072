//! End-to-end checks of the `croissant` binary: output schemas, CSV/JSON
//! parity, exit codes, and byte-level determinism of seeded commands.

use std::collections::HashMap;
use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_croissant"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

/// Parses a two-line CSV (header + one row) into a field map.
fn csv_record(text: &str) -> HashMap<String, String> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let row = rdr.records().next().expect("one record").unwrap();
    headers
        .iter()
        .map(str::to_string)
        .zip(row.iter().map(str::to_string))
        .collect()
}

fn write_star4(dir: &Path) -> std::path::PathBuf {
    let path = dir.join("star4.edges");
    fs::write(&path, "n 4\n0 1\n0 2\n0 3\n").unwrap();
    path
}

#[test]
fn analyze_reports_the_star_point() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_star4(dir.path());
    let out = run(&["analyze", input.to_str().unwrap()]);
    let rec = csv_record(&stdout(&out));
    assert_eq!(rec["n"], "4");
    assert_eq!(rec["m"], "3");
    assert_eq!(rec["rho"], "0.5");
    let c_raw: f64 = rec["c_raw"].parse().unwrap();
    assert!((c_raw - 18.0).abs() <= 1e-9);
    let c_norm: f64 = rec["c_norm"].parse().unwrap();
    assert!((c_norm - 1.0).abs() <= 1e-9);
    let spectrum: Vec<f64> = rec["spectrum"]
        .split(' ')
        .map(|t| t.parse().unwrap())
        .collect();
    assert_eq!(spectrum.len(), 4);
    assert!((spectrum[3] + 4.0).abs() <= 1e-9);
}

#[test]
fn analyze_of_a_complete_graph_reports_zero_complexity() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k4.edges");
    fs::write(&path, "n 4\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    let rec = csv_record(&stdout(&out));
    assert_eq!(rec["rho"], "1");
    let c_raw: f64 = rec["c_raw"].parse().unwrap();
    assert!(c_raw.abs() <= 1e-9);
}

#[test]
fn analyze_malformed_line_exits_2_with_the_line_number() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.edges");
    fs::write(&path, "n 3\na b\n").unwrap();
    let out = run(&["analyze", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("line 2"), "stderr: {err}");
}

#[test]
fn analyze_missing_file_exits_2() {
    let out = run(&["analyze", "/nonexistent/g.edges"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn csv_and_json_analyze_records_are_field_identical() {
    let dir = tempfile::tempdir().unwrap();
    let input = write_star4(dir.path());
    let input = input.to_str().unwrap();
    let rec = csv_record(&stdout(&run(&["analyze", input])));
    let json_text = stdout(&run(&["analyze", input, "--format", "json"]));
    let parsed: serde_json::Value = serde_json::from_str(json_text.trim()).unwrap();
    let obj = parsed.as_object().unwrap();

    assert_eq!(obj.len(), rec.len());
    for (name, value) in obj {
        let cell = &rec[name];
        match value {
            serde_json::Value::Array(xs) => {
                let csv_vals: Vec<f64> = cell.split(' ').map(|t| t.parse().unwrap()).collect();
                assert_eq!(csv_vals.len(), xs.len());
                for (a, b) in csv_vals.iter().zip(xs) {
                    assert_eq!(*a, b.as_f64().unwrap(), "field {name}");
                }
            }
            serde_json::Value::Number(x) => {
                assert_eq!(cell.parse::<f64>().unwrap(), x.as_f64().unwrap(), "field {name}");
            }
            serde_json::Value::String(s) => assert_eq!(cell, s),
            other => panic!("unexpected JSON value for {name}: {other}"),
        }
    }
}

#[test]
fn generate_ba_with_full_attachment_writes_a_star() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ba.edges");
    let out = run(&[
        "generate", "--model", "ba", "--n", "10", "--ell", "9", "--seed", "7", "-o",
        path.to_str().unwrap(),
    ]);
    let rec = csv_record(&stdout(&out));
    assert_eq!(rec["m"], "9");
    assert_eq!(rec["seed"], "7");
    let text = fs::read_to_string(&path).unwrap();
    let mut degree = [0usize; 10];
    for line in text.lines().skip(1) {
        let mut it = line.split(' ');
        let i: usize = it.next().unwrap().parse().unwrap();
        let j: usize = it.next().unwrap().parse().unwrap();
        degree[i] += 1;
        degree[j] += 1;
    }
    let mut sorted = degree.to_vec();
    sorted.sort_unstable();
    assert_eq!(&sorted[..9], &[1; 9]);
    assert_eq!(sorted[9], 9);
}

#[test]
fn generate_ws_at_beta_zero_is_the_ring_lattice() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ws.edges");
    let out = run(&[
        "generate", "--model", "ws", "--n", "10", "--k", "2", "--beta", "0", "--seed", "1",
        "-o", path.to_str().unwrap(),
    ]);
    stdout(&out);
    let text = fs::read_to_string(&path).unwrap();
    let mut edges: Vec<(usize, usize)> = text
        .lines()
        .skip(1)
        .map(|l| {
            let mut it = l.split(' ');
            (
                it.next().unwrap().parse().unwrap(),
                it.next().unwrap().parse().unwrap(),
            )
        })
        .collect();
    edges.sort_unstable();
    let mut expect = Vec::new();
    for d in 1..=2usize {
        for i in 0..10usize {
            let j = (i + d) % 10;
            expect.push((i.min(j), i.max(j)));
        }
    }
    expect.sort_unstable();
    expect.dedup();
    assert_eq!(edges, expect);
}

#[test]
fn generate_er_p_zero_writes_an_empty_edge_list() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("er.edges");
    let out = run(&[
        "generate", "--model", "er", "--n", "10", "--p", "0", "--seed", "1", "-o",
        path.to_str().unwrap(),
    ]);
    let rec = csv_record(&stdout(&out));
    assert_eq!(rec["m"], "0");
    assert_eq!(fs::read_to_string(&path).unwrap(), "n 10\n");
}

#[test]
fn generate_without_a_seed_reports_a_usable_one() {
    let dir = tempfile::tempdir().unwrap();
    let first = dir.path().join("a.edges");
    let out = run(&[
        "generate", "--model", "er", "--n", "12", "--p", "0.4", "-o",
        first.to_str().unwrap(),
    ]);
    let rec = csv_record(&stdout(&out));
    let seed = &rec["seed"];
    let second = dir.path().join("b.edges");
    let out2 = run(&[
        "generate", "--model", "er", "--n", "12", "--p", "0.4", "--seed", seed, "-o",
        second.to_str().unwrap(),
    ]);
    stdout(&out2);
    assert_eq!(
        fs::read(&first).unwrap(),
        fs::read(&second).unwrap(),
        "the reported seed reproduces the file"
    );
}

#[test]
fn generate_flag_mismatches_exit_2_before_writing() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.edges");
    let path = path.to_str().unwrap();
    for args in [
        vec!["generate", "--model", "er", "--n", "10", "-o", path],
        vec!["generate", "--model", "er", "--n", "10", "--p", "0.5", "--k", "2", "-o", path],
        vec!["generate", "--model", "ws", "--n", "10", "--k", "2", "-o", path],
        vec![
            "generate", "--model", "multistar", "--n", "10", "--k", "2", "--seed", "1", "-o",
            path,
        ],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
        assert!(!Path::new(path).exists(), "no file on usage error");
    }
}

#[test]
fn boundary_contains_the_star_vertex_and_reruns_identically() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    stdout(&run(&["boundary", "--n", "4", "-o", a.to_str().unwrap()]));
    stdout(&run(&["boundary", "--n", "4", "-o", b.to_str().unwrap()]));
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(fs::read_to_string(&b).unwrap(), text);

    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    let star = rows
        .iter()
        .find(|r| &r[0] == "upper" && &r[1] == "0.5")
        .expect("upper vertex at rho 0.5");
    let c: f64 = star[2].parse().unwrap();
    assert!((c - 18.0).abs() <= 1e-9);
    for kind in ["upper", "lower"] {
        let pts: Vec<&csv::StringRecord> = rows.iter().filter(|r| &r[0] == kind).collect();
        assert_eq!(&pts.first().unwrap()[1], "0");
        assert_eq!(&pts.last().unwrap()[1], "1");
    }
}

#[test]
fn boundary_below_three_nodes_exits_2() {
    let out = run(&["boundary", "--n", "2", "-o", "/tmp/never-written.csv"]);
    assert_eq!(exit_code(&out), 2);
    assert!(!Path::new("/tmp/never-written.csv").exists());
}

#[test]
fn boundary_emit_plot_writes_a_script_referencing_the_csv() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("bnd.csv");
    stdout(&run(&[
        "boundary", "--n", "5", "-o", csv_path.to_str().unwrap(), "--emit-plot",
    ]));
    let script = fs::read_to_string(dir.path().join("bnd_plot.py")).unwrap();
    assert!(script.contains("bnd.csv"));
    assert!(script.contains("matplotlib"));
}

#[test]
fn seeded_sweeps_are_byte_identical_across_runs() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for path in [&a, &b] {
        stdout(&run(&[
            "sweep", "--model", "er", "--n", "12", "--replicates", "2", "--p-step", "0.5",
            "--seed", "99", "-o", path.to_str().unwrap(),
        ]));
    }
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes, fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert!(
        text.starts_with("# croissant "),
        "header comment present: {text}"
    );
    assert!(text.contains("base_seed=99"));
}

#[test]
fn sweep_records_match_between_csv_and_json() {
    let dir = tempfile::tempdir().unwrap();
    let csv_path = dir.path().join("s.csv");
    let json_path = dir.path().join("s.json");
    let base = [
        "sweep", "--model", "ws", "--n", "10", "--k", "1,2", "--beta-step", "0.5",
        "--replicates", "2", "--seed", "4", "-o",
    ];
    let mut args = base.to_vec();
    args.push(csv_path.to_str().unwrap());
    stdout(&run(&args));
    let mut args = base.to_vec();
    args.push(json_path.to_str().unwrap());
    args.extend(["--format", "json"]);
    stdout(&run(&args));

    let csv_text = fs::read_to_string(&csv_path).unwrap();
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .from_reader(csv_text.as_bytes());
    let headers = rdr.headers().unwrap().clone();
    let csv_rows: Vec<HashMap<String, String>> = rdr
        .records()
        .map(|r| {
            headers
                .iter()
                .map(str::to_string)
                .zip(r.unwrap().iter().map(str::to_string))
                .collect()
        })
        .collect();

    let json_text = fs::read_to_string(&json_path).unwrap();
    let json_rows: Vec<serde_json::Value> = json_text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();

    assert_eq!(csv_rows.len(), json_rows.len());
    assert_eq!(csv_rows.len(), 6, "2 ring widths x 3 beta values");
    for (c, j) in csv_rows.iter().zip(&json_rows) {
        let obj = j.as_object().unwrap();
        assert_eq!(obj.len(), c.len());
        for (name, value) in obj {
            match value {
                serde_json::Value::String(s) => assert_eq!(&c[name], s),
                serde_json::Value::Number(x) => {
                    assert_eq!(
                        c[name].parse::<f64>().unwrap(),
                        x.as_f64().unwrap(),
                        "field {name}"
                    );
                }
                other => panic!("unexpected JSON value for {name}: {other}"),
            }
        }
    }
}

#[test]
fn sweep_flag_mismatches_and_bad_grids_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s.csv");
    let path = path.to_str().unwrap();
    for args in [
        vec!["sweep", "--model", "er", "--n", "10", "--k", "2", "-o", path],
        vec!["sweep", "--model", "ba", "--n", "10", "--ell", "12", "-o", path],
        vec!["sweep", "--model", "ws", "--n", "10", "--k", "7", "-o", path],
        vec!["sweep", "--model", "er", "--n", "10", "--p-step", "0", "-o", path],
        vec!["sweep", "--model", "er", "--n", "10", "--replicates", "0", "-o", path],
    ] {
        let out = run(&args);
        assert_eq!(exit_code(&out), 2, "args: {args:?}");
        assert!(!Path::new(path).exists(), "no file on usage error");
    }
}

#[test]
fn ingest_identical_epochs_report_zero_spread() {
    let dir = tempfile::tempdir().unwrap();
    let matrix = "0 1 0\n1 0 0\n0 0 0\n";
    for name in ["m1.txt", "m2.txt", "m3.txt"] {
        fs::write(dir.path().join(name), matrix).unwrap();
    }
    let manifest = dir.path().join("manifest.csv");
    let lines: String = ["m1.txt", "m2.txt", "m3.txt"]
        .iter()
        .map(|n| format!("rest,{}\n", dir.path().join(n).display()))
        .collect();
    fs::write(&manifest, lines).unwrap();
    let out = run(&["ingest", manifest.to_str().unwrap()]);
    let rec = csv_record(&stdout(&out));
    assert_eq!(rec["label"], "rest");
    assert_eq!(rec["epochs"], "3");
    assert_eq!(rec["rho_std"], "0");
    assert_eq!(rec["c_std"], "0");
}

#[test]
fn ingest_distinguishes_parse_from_numeric_failures() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.csv");

    let bad_token = dir.path().join("tok.txt");
    fs::write(&bad_token, "0 x\nx 0\n").unwrap();
    fs::write(&manifest, format!("a,{}\n", bad_token.display())).unwrap();
    let out = run(&["ingest", manifest.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);

    let non_finite = dir.path().join("nan.txt");
    fs::write(&non_finite, "0 nan\nnan 0\n").unwrap();
    fs::write(&manifest, format!("a,{}\n", non_finite.display())).unwrap();
    let out = run(&["ingest", manifest.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn ingest_empty_manifest_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let manifest = dir.path().join("manifest.csv");
    fs::write(&manifest, "# comments only\n").unwrap();
    let out = run(&["ingest", manifest.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn ingest_applies_per_entry_thresholds() {
    let dir = tempfile::tempdir().unwrap();
    // One edge at weight 0.6: visible at threshold 0.5, gone at 0.7.
    let matrix = "0 0.6 0\n0.6 0 0\n0 0 0\n";
    let m = dir.path().join("m.txt");
    fs::write(&m, matrix).unwrap();
    let manifest = dir.path().join("manifest.csv");
    fs::write(
        &manifest,
        format!("low,{p}\nhigh,{p},0.7\n", p = m.display()),
    )
    .unwrap();
    let out = run(&["ingest", manifest.to_str().unwrap()]);
    let text = stdout(&out);
    let mut rdr = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = rdr.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 2);
    assert_eq!(&rows[0][0], "low");
    assert!(rows[0][4].parse::<f64>().unwrap() > 0.0, "edge kept at 0.5");
    assert_eq!(&rows[1][0], "high");
    assert_eq!(&rows[1][4], "0", "edge dropped at 0.7");
}

#[test]
fn unknown_flags_and_missing_subcommands_exit_2() {
    let out = run(&["analyze"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&["--bogus"]);
    assert_eq!(exit_code(&out), 2);
    let out = run(&[]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn help_and_version_exit_0() {
    let out = run(&["--help"]);
    assert_eq!(exit_code(&out), 0);
    let out = run(&["--version"]);
    assert_eq!(exit_code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).contains("croissant"));
}
