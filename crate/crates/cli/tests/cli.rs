//! End-to-end subcommand tests against the compiled binary.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use udg_dom::approx::{verify_tds, verify_trdf, RomanAssignment, TotalDominatingSet};
use udg_dom::geometry::UnitDiskGraph;
use udg_dom::io::{self, SolutionFile};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_udg-dom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn stderr(out: &Output) -> String {
    String::from_utf8_lossy(&out.stderr).into_owned()
}

fn write_path3(dir: &Path) -> PathBuf {
    let p = dir.join("path3.json");
    fs::write(&p, r#"{"radius":1,"points":[[0,0],[1,0],[2,0]]}"#).unwrap();
    p
}

#[test]
fn generate_is_deterministic_per_seed() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for out in [&a, &b] {
        let r = run(&[
            "generate",
            "--n",
            "10",
            "--seed",
            "42",
            "--out",
            out.to_str().unwrap(),
        ]);
        assert!(r.status.success(), "{}", stderr(&r));
    }
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
}

#[test]
fn generate_single_vertex_exhausts_retries() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("one.json");
    let r = run(&[
        "generate",
        "--n",
        "1",
        "--problem",
        "tds",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(!r.status.success());
    assert!(stderr(&r).contains("attempts"), "{}", stderr(&r));
}

#[test]
fn generate_rejects_degenerate_boxes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("z.json");
    let r = run(&[
        "generate",
        "--n",
        "5",
        "--width",
        "0",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn generated_instances_round_trip_through_the_builder() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("inst.json");
    let r = run(&[
        "generate",
        "--n",
        "30",
        "--width",
        "4",
        "--height",
        "4",
        "--seed",
        "5",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success(), "{}", stderr(&r));
    let ps = io::read_instance(&out).unwrap();
    assert_eq!(ps.len(), 30);
    let g = UnitDiskGraph::build(ps).unwrap();
    assert!(g.isolated_vertices().is_clean());
}

#[test]
fn solve_prints_objectives_and_writes_verifiable_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_path3(dir.path());

    let tds_out = dir.path().join("sol.tds.json");
    let r = run(&[
        "solve",
        "--problem",
        "tds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        tds_out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).trim(), "3");

    let trds_out = dir.path().join("sol.trds.json");
    let r = run(&[
        "solve",
        "--problem",
        "trds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        trds_out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).trim(), "5");

    // re-read both files and run the matching verifiers
    let g = UnitDiskGraph::build(io::read_instance(&inst).unwrap()).unwrap();
    match io::read_solution(&tds_out).unwrap() {
        SolutionFile::Tds { members } => {
            assert!(verify_tds(&g, &TotalDominatingSet { members }))
        }
        other => panic!("unexpected solution {other:?}"),
    }
    match io::read_solution(&trds_out).unwrap() {
        SolutionFile::Trds { values, weight } => {
            let f = RomanAssignment::new(values);
            assert_eq!(f.weight(), weight);
            assert!(verify_trdf(&g, &f));
        }
        other => panic!("unexpected solution {other:?}"),
    }
}

#[test]
fn solve_rejects_isolated_vertices_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("far.json");
    fs::write(&inst, r#"{"radius":1,"points":[[0,0],[3,0],[3.5,0]]}"#).unwrap();
    let out = dir.path().join("sol.json");
    let r = run(&[
        "solve",
        "--problem",
        "tds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
    // the diagnostic names the isolated vertex
    assert!(stderr(&r).contains("[0]"), "{}", stderr(&r));
}

#[test]
fn solve_rejects_malformed_instances_with_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("bad.json");
    fs::write(&inst, "{not json").unwrap();
    let r = run(&[
        "solve",
        "--problem",
        "tds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        dir.path().join("x.json").to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn exact_solves_the_path_and_enforces_limits() {
    let dir = tempfile::tempdir().unwrap();
    let inst = write_path3(dir.path());

    let r = run(&[
        "exact",
        "--problem",
        "ds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        dir.path().join("ds.json").to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).trim(), "1");

    let r = run(&[
        "exact",
        "--problem",
        "trds",
        "--in",
        inst.to_str().unwrap(),
        "--out",
        dir.path().join("trds.json").to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).trim(), "3");

    // 25 vertices against the default subset limit of 20
    let coords: Vec<String> = (0..25).map(|i| format!("[{},0]", i as f64 * 0.5)).collect();
    let big = dir.path().join("big.json");
    fs::write(
        &big,
        format!(r#"{{"radius":1,"points":[{}]}}"#, coords.join(",")),
    )
    .unwrap();
    let r = run(&[
        "exact",
        "--problem",
        "ds",
        "--in",
        big.to_str().unwrap(),
        "--out",
        dir.path().join("big.ds.json").to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(3));
}

#[test]
fn reduce_writes_gadget_and_roles_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("p2.json");
    fs::write(&grid, r#"{"vertices":[[0,0],[1,0]]}"#).unwrap();
    let out = dir.path().join("gadget.json");
    let r = run(&[
        "reduce",
        "--grid",
        grid.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).trim(), "4");

    let ps = io::read_instance(&out).unwrap();
    assert_eq!(ps.len(), 4);
    assert_eq!(ps.radius, 0.5);
    let roles = io::read_roles(&dir.path().join("gadget.roles.json")).unwrap();
    assert_eq!(roles.len(), 4);

    // the L-shaped path gets 3 + 2*2 vertices
    let grid = dir.path().join("l3.json");
    fs::write(&grid, r#"{"vertices":[[0,0],[1,0],[1,1]]}"#).unwrap();
    let out = dir.path().join("l3.out.json");
    let r = run(&[
        "reduce",
        "--grid",
        grid.to_str().unwrap(),
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    assert_eq!(io::read_instance(&out).unwrap().len(), 7);
}

#[test]
fn reduce_scale2_doubles_coordinates() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("p2.json");
    fs::write(&grid, r#"{"vertices":[[0,0],[1,0]]}"#).unwrap();
    let out = dir.path().join("gadget2.json");
    let r = run(&[
        "reduce",
        "--grid",
        grid.to_str().unwrap(),
        "--scale2",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success());
    let ps = io::read_instance(&out).unwrap();
    assert_eq!(ps.radius, 1.0);
    assert_eq!(ps.points[1].x, 2.0);
}

#[test]
fn reduce_rejects_isolated_grid_vertices() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("iso.json");
    fs::write(&grid, r#"{"vertices":[[0,0],[1,0],[5,5]]}"#).unwrap();
    let r = run(&[
        "reduce",
        "--grid",
        grid.to_str().unwrap(),
        "--out",
        dir.path().join("x.json").to_str().unwrap(),
    ]);
    assert_eq!(r.status.code(), Some(2));
}

#[test]
fn ratio_report_is_deterministic_and_worker_independent() {
    let dir = tempfile::tempdir().unwrap();
    let args = |out: &Path| {
        vec![
            "ratio".to_string(),
            "--problem".into(),
            "tds".into(),
            "--trials".into(),
            "10".into(),
            "--n".into(),
            "10".into(),
            "--seed".into(),
            "3".into(),
            "--out".into(),
            out.to_str().unwrap().to_string(),
        ]
    };
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let r = run(&args(&a).iter().map(String::as_str).collect::<Vec<_>>());
    assert!(r.status.success(), "{}", stderr(&r));

    // a second run on four workers must produce the same bytes
    let r = Command::new(env!("CARGO_BIN_EXE_udg-dom"))
        .args(args(&b))
        .env("UDG_DOM_WORKERS", "4")
        .output()
        .unwrap();
    assert!(r.status.success(), "{}", stderr(&r));
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());

    let body = fs::read_to_string(&a).unwrap();
    assert!(body.starts_with("trial,n,edges,approx,exact,ratio,bound,verified\n"));
    assert!(body.lines().count() == 12); // header + 10 rows + summary
    assert!(!body.contains('\r'));
}

#[test]
fn ratio_reports_na_past_the_exact_limit() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("na.csv");
    let r = run(&[
        "ratio",
        "--problem",
        "tds",
        "--trials",
        "3",
        "--n",
        "24",
        "--width",
        "6",
        "--height",
        "6",
        "--seed",
        "11",
        "--exact-limit",
        "18",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert!(r.status.success(), "{}", stderr(&r));
    let body = fs::read_to_string(&out).unwrap();
    for line in body.lines().skip(1).take(3) {
        assert!(line.contains(",NA,NA,"), "{line}");
    }
}

#[test]
fn verify_claim_passes_small_sizes_and_enforces_the_cap() {
    let r = run(&["verify-claim", "--max-n", "2"]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).matches("PASS").count(), 2);

    let r = run(&["verify-claim", "--max-n", "3"]);
    assert!(r.status.success());
    assert_eq!(stdout(&r).matches("PASS").count(), 2 + 6);

    let r = run(&["verify-claim", "--max-n", "5"]);
    assert_eq!(r.status.code(), Some(3));
}
