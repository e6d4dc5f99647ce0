use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use apdr::harness::parse_trace_csv;
use apdr::problem_file::ProblemFile;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_apdr"))
}

fn problem(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("problems").join(name)
}

fn run(cmd: &mut Command) -> (i32, String, String) {
    let Output { status, stdout, stderr } = cmd.output().unwrap();
    (
        status.code().unwrap(),
        String::from_utf8(stdout).unwrap(),
        String::from_utf8(stderr).unwrap(),
    )
}

fn summary_value(stdout: &str, key: &str) -> String {
    stdout
        .lines()
        .find_map(|l| l.strip_prefix(key))
        .map(|v| v.trim().to_string())
        .unwrap_or_else(|| panic!("no {key} in {stdout}"))
}

#[test]
fn bundled_problems_solve_and_match_the_benchmarks() {
    let dir = tempfile::tempdir().unwrap();
    for (file, name) in [
        ("e1_e2.problem", "E2"),
        ("e1_e3.problem", "E3"),
        ("e1_h1.problem", "H1"),
        ("e1_h2.problem", "H2"),
    ] {
        let out = dir.path().join(name);
        let (code, stdout, stderr) = run(bin().arg("solve").arg(problem(file)).arg("--output").arg(&out));
        assert_eq!(code, 0, "{file}: {stderr}");
        let expected = apdr::harness::published_count(name, apdr::harness::Row::Epsilon(0.245)).unwrap();
        assert_eq!(summary_value(&stdout, "iterations"), expected.iters.to_string());
        assert!(out.join("trace.csv").exists());
        assert!(out.join("summary.json").exists());
    }
}

#[test]
fn bundled_problems_describe_the_benchmark_sets() {
    for (file, name) in [
        ("e1_e2.problem", "E2"),
        ("e1_e3.problem", "E3"),
        ("e1_h1.problem", "H1"),
        ("e1_h2.problem", "H2"),
    ] {
        let f = ProblemFile::load(&problem(file)).unwrap();
        let (p, _) = f.instance().unwrap();
        let reference = apdr::harness::paper_problem(name).unwrap();
        assert_eq!(p.start, reference.start);
        assert_eq!(p.mode_b, reference.mode_b);
        for (a, b) in [(&p.set_a, &reference.set_a), (&p.set_b, &reference.set_b)] {
            match (a, b) {
                (apdr::ConvexSet::Ellipsoid(x), apdr::ConvexSet::Ellipsoid(y)) => {
                    assert!((x.shape.matrix() - y.shape.matrix()).amax() < 1e-12);
                    assert_eq!(x.center, y.center);
                }
                (apdr::ConvexSet::HalfSpace(x), apdr::ConvexSet::HalfSpace(y)) => {
                    assert_eq!(x.normal, y.normal);
                    assert!((x.offset - y.offset).abs() < 1e-14);
                }
                _ => panic!("{name}: set kinds differ"),
            }
        }
        assert_eq!(ProblemFile::parse(&f.to_toml().unwrap()).unwrap(), f);
    }
}

#[test]
fn epsilon_flag_overrides_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(bin()
        .args(["solve", "--epsilon", "0.12", "--output"])
        .arg(dir.path())
        .arg(problem("e1_h1.problem")));
    assert_eq!(code, 0);
    assert_eq!(summary_value(&stdout, "iterations"), "12");
    assert_eq!(summary_value(&stdout, "first hit"), "3");
}

#[test]
fn one_set_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.problem");
    std::fs::write(
        &path,
        "start = [0.0, 0.0]\n\n[[sets]]\nkind = \"ball\"\ncenter = [0.0, 0.0]\nradius = 1.0\n",
    )
    .unwrap();
    let (code, _, stderr) = run(bin().arg("solve").arg(&path).arg("--output").arg(dir.path()));
    assert_eq!(code, 1);
    assert!(stderr.contains("[[sets]]"), "{stderr}");

    let (code, _, stderr) = run(bin().arg("solve").arg(dir.path().join("missing.problem")));
    assert_eq!(code, 1);
    assert!(stderr.contains("missing.problem"), "{stderr}");
}

#[test]
fn distant_balls_hit_the_outer_cap() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("far.problem");
    std::fs::write(
        &path,
        r#"start = [0.0, 0.0]

[[sets]]
kind = "ball"
center = [0.0, 0.0]
radius = 1.0

[[sets]]
kind = "ball"
center = [10.0, 0.0]
radius = 1.0

[solver]
max_outer = 20
"#,
    )
    .unwrap();
    let (code, stdout, _) = run(bin().arg("solve").arg(&path).arg("--output").arg(dir.path()));
    assert_eq!(code, 2);
    assert_eq!(summary_value(&stdout, "status"), "max_outer_reached");
}

#[test]
fn trace_csv_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(bin()
        .arg("solve")
        .arg(problem("e1_e3.problem"))
        .arg("--output")
        .arg(dir.path()));
    assert_eq!(code, 0);
    let text = std::fs::read_to_string(dir.path().join("trace.csv")).unwrap();
    let records = parse_trace_csv(&text).unwrap();

    let (p, cfg) = ProblemFile::load(&problem("e1_e3.problem"))
        .unwrap()
        .instance()
        .unwrap();
    let direct = apdr::solve(&p, &cfg).unwrap();
    assert_eq!(records.len(), direct.records.len());
    for (a, b) in records.iter().zip(&direct.records) {
        assert_eq!(a.x, b.x);
        assert_eq!(a.ya, b.ya);
        assert_eq!(a.yb, b.yb);
        assert_eq!(a.residual.to_bits(), b.residual.to_bits());
    }
}

#[test]
fn json_trace_format() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _, _) = run(bin()
        .args(["solve", "--format", "json", "--output"])
        .arg(dir.path())
        .arg(problem("e1_h2.problem")));
    assert_eq!(code, 0);
    let trace: apdr::ApDRTrace =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("trace.json")).unwrap()).unwrap();
    assert_eq!(trace.iterations(), 5);
}

#[test]
fn reproduce_targets() {
    let dir = tempfile::tempdir().unwrap();
    let (code, stdout, _) = run(bin().args(["reproduce", "table1", "--output"]).arg(dir.path()));
    assert_eq!(code, 0);
    assert!(stdout.contains("Exact"));
    let csv = std::fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    assert_eq!(csv.lines().count(), 4);
    assert_eq!(csv.lines().nth(1).unwrap(), "0.245,52 (2),14,10 (4),5 (4)");

    let (code, _, _) = run(bin().args(["reproduce", "figures", "--output"]).arg(dir.path()));
    assert_eq!(code, 0);
    assert!(dir.path().join("h1_exact_path.csv").exists());
    assert!(dir.path().join("e3_eps120_residuals.csv").exists());

    let (code, _, stderr) = run(bin().args(["reproduce", "table3"]));
    assert_eq!(code, 1);
    assert!(stderr.contains("table1"), "{stderr}");
}

#[test]
fn verify_exit_codes_and_determinism() {
    let (code, first, _) = run(bin().args(["verify", "--seed", "7", "--instances", "40"]));
    assert_eq!(code, 0, "{first}");
    let (_, second, _) = run(bin().args(["verify", "--seed", "7", "--instances", "40"]));
    assert_eq!(first, second);
    let (code, _, _) = run(bin().args(["verify", "--instances", "40", "--force-failure"]));
    assert_eq!(code, 3);
}
