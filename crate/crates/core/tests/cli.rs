use std::process::{Command, Output};

use radial_core::report::{parse_json, render_records, render_table, reproduce_table, ComparisonRow, Format, TableId};

const GOLDEN_TABLE1: &str = include_str!("fixtures/part2_table1.txt");

fn radial(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_radial"))
        .args(args)
        .env_remove("RADIAL_UNITS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn table1_text_matches_golden_file() {
    let table = reproduce_table(TableId::Part2Table1).unwrap();
    assert_eq!(
        String::from_utf8(render_table(&table, Format::Text).unwrap()).unwrap(),
        GOLDEN_TABLE1
    );
    assert_eq!(stdout(&radial(&["tables", "--which", "part2_table1"])), GOLDEN_TABLE1);
}

#[test]
fn json_output_round_trips() {
    let out = radial(&["tables", "--which", "part2_table2", "--format", "json"]);
    let bytes = out.stdout.clone();
    stdout(&out);
    let doc = parse_json::<ComparisonRow>(&bytes).unwrap();
    assert_eq!(doc.rows.len(), 6);
    assert_eq!(doc.meta.config.get("which").map(String::as_str), Some("part2_table2"));
    assert_eq!(render_records(&doc.meta, &doc.rows, Format::Json).unwrap(), bytes);
}

#[test]
fn exit_codes() {
    assert_eq!(radial(&["tables", "--which", "hydrogen"]).status.code(), Some(0));
    // Unknown flag, unknown table, unknown potential parameter: usage errors.
    assert_eq!(radial(&["tables", "--bogus"]).status.code(), Some(2));
    assert_eq!(radial(&["tables", "--which", "table9"]).status.code(), Some(2));
    assert_eq!(
        radial(&["spectrum", "--potential", "ho:omega=1,beta=2"]).status.code(),
        Some(2)
    );
    // Energy below the centrifugal barrier: a domain error.
    let out = radial(&[
        "turning-points",
        "--potential",
        "ho:omega=1",
        "--l",
        "1",
        "--energy",
        "0.1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("centrifugal"));
}

#[test]
fn config_file_with_flag_override() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("run.conf");
    std::fs::write(
        &path,
        "# levels\npotential = ho:omega=1\nl = 0..1\nn = 1\nformat = json\n",
    )
    .unwrap();
    let from_file = stdout(&radial(&["spectrum", "--config", path.to_str().unwrap()]));
    assert!(from_file.trim_start().starts_with('{'));
    let overridden = stdout(&radial(&[
        "spectrum",
        "--config",
        path.to_str().unwrap(),
        "--format",
        "csv",
    ]));
    assert_eq!(overridden.lines().count(), 3);
    assert!(overridden.starts_with("l,j,branch,energy"));

    std::fs::write(&path, "potential = ho:omega=1\ncolour = blue\n").unwrap();
    let out = radial(&["spectrum", "--config", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("colour"));
}

#[test]
fn environment_sets_units_only() {
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_radial"));
        cmd.args([
            "spectrum",
            "--potential",
            "hydrogen",
            "--branch",
            "ground",
            "--format",
            "csv",
        ])
        .args(extra);
        match env {
            Some(v) => cmd.env("RADIAL_UNITS", v),
            None => cmd.env_remove("RADIAL_UNITS"),
        };
        let line = stdout(&cmd.output().unwrap()).lines().nth(1).unwrap().to_string();
        line.split(',').nth(3).unwrap().parse::<f64>().unwrap()
    };
    let natural = run(None, &[]);
    assert!((natural + 0.5).abs() < 1e-9, "{natural}");
    let ev = run(Some("ev-nm"), &[]);
    assert!((ev + 13.6).abs() < 0.1, "{ev}");
    assert_eq!(run(Some("ev-nm"), &["--units", "natural"]), natural);
}

#[test]
fn wavefunction_written_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("wf.csv");
    let args = [
        "wavefunction",
        "--potential",
        "ho:omega=1",
        "--l",
        "1",
        "--n",
        "1",
        "--parity",
        "antisymmetric",
        "--samples",
        "101",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ];
    let out = radial(&args);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let first = std::fs::read(&path).unwrap();
    let text = String::from_utf8(first.clone()).unwrap();
    assert_eq!(text.lines().next(), Some("r,re,im,below_r1"));
    assert_eq!(text.lines().count(), 102);
    // The antisymmetric state changes sign at the midpoint sample.
    let values: Vec<f64> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().parse().unwrap())
        .collect();
    assert!(values[25] * values[75] < 0.0);
    assert!(values[50].abs() < 1e-12);
    radial(&args);
    assert_eq!(std::fs::read(&path).unwrap(), first);
}

#[test]
fn free_particle_samples_flag_the_inner_region() {
    let out = stdout(&radial(&[
        "wavefunction",
        "--potential",
        "free",
        "--l",
        "2",
        "--k",
        "1",
        "--carrier",
        "sin",
        "--samples",
        "20",
        "--rmax",
        "5",
        "--format",
        "csv",
    ]));
    let flags: Vec<&str> = out.lines().skip(1).map(|l| l.rsplit(',').next().unwrap()).collect();
    // r₁ = √6 ≈ 2.449: samples at 0.25 … 2.25 lie inside it.
    assert_eq!(flags.iter().filter(|f| **f == "true").count(), 9);
}

#[test]
fn oracle_verbs() {
    let zeros = stdout(&radial(&[
        "oracle",
        "bessel-zeros",
        "--l",
        "0..2",
        "--n",
        "1..2",
        "--format",
        "csv",
    ]));
    assert_eq!(zeros.lines().count(), 7);
    let ho = stdout(&radial(&[
        "oracle",
        "ho",
        "--l",
        "1",
        "--n",
        "2",
        "--indexing",
        "from-one",
        "--format",
        "csv",
    ]));
    assert!(ho.lines().nth(1).unwrap().ends_with(",6.5"));
    let well = stdout(&radial(&[
        "oracle", "well", "--L", "2", "--l", "0", "--n", "1", "--format", "csv",
    ]));
    let e: f64 = well
        .lines()
        .nth(1)
        .unwrap()
        .rsplit(',')
        .next()
        .unwrap()
        .parse()
        .unwrap();
    assert!((e - std::f64::consts::PI.powi(2) / 8.0).abs() < 1e-12);
}
