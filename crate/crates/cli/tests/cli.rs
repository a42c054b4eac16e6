use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use arborescence::{is_arborescence, parse_edge_list};

const TRI: &str = "3 4 0\n0 1 5\n0 2 7\n1 2 1\n2 1 1\n";
const BAD: &str = "2 0 0\n";

fn arbo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_arbo")).args(args).output().unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn solve_triangle_with_every_algorithm() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", TRI);
    let out = dir.path().join("edges.txt");
    for algo in ["ggst", "tarjan-matrix", "tarjan-heap", "tarjan-sil"] {
        let o = arbo(&["solve", "--algo", algo, "--in", &input, "--out", out.to_str().unwrap()]);
        assert!(o.status.success(), "{algo}: {}", String::from_utf8_lossy(&o.stderr));
        assert_eq!(String::from_utf8(o.stdout).unwrap().lines().next(), Some("6"));
        let mut ids: Vec<usize> = fs::read_to_string(&out).unwrap().lines().map(|l| l.parse().unwrap()).collect();
        ids.sort();
        assert_eq!(ids, vec![0, 2]);
    }
}

#[test]
fn solve_without_out_prints_ids() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", TRI);
    let o = arbo(&["solve", "--algo", "ggst", "--in", &input]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert_eq!(text.lines().count(), 3);
}

#[test]
fn root_override() {
    // Rooted at 1 the tree is 1 -> 0 and 1 -> 2.
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.txt", "3 3 0\n0 1 5\n1 2 1\n1 0 4\n");
    let o = arbo(&["solve", "--algo", "tarjan-sil", "--in", &input, "--root", "1"]);
    assert_eq!(String::from_utf8(o.stdout).unwrap().lines().next(), Some("5"));
}

#[test]
fn infeasible_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", BAD);
    let o = arbo(&["solve", "--algo", "ggst", "--in", &input]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no arborescence"));
}

#[test]
fn usage_and_io_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", TRI);
    assert_eq!(arbo(&["solve", "--algo", "foo", "--in", &input]).status.code(), Some(64));
    assert_eq!(arbo(&["frobnicate"]).status.code(), Some(64));
    let missing = dir.path().join("missing.txt");
    assert_eq!(arbo(&["solve", "--algo", "ggst", "--in", missing.to_str().unwrap()]).status.code(), Some(1));
    let broken = write(dir.path(), "broken.txt", "2 1 0\n0 5 1\n");
    let o = arbo(&["solve", "--algo", "ggst", "--in", &broken]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    assert!(arbo(&["--help"]).status.success());
}

#[test]
fn konect_input_gets_a_super_root() {
    let dir = tempfile::tempdir().unwrap();
    // Two components; the larger one {0, 1, 2} is kept.
    let input = write(dir.path(), "k.txt", "% comment\n0 1\n1 2\n2 0\n4 5\n");
    let o = arbo(&["solve", "--algo", "ggst", "--in", &input, "--format", "konect", "--seed", "1", "--max-w", "9"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    let weight: i64 = lines.next().unwrap().parse().unwrap();
    assert!((2..=18).contains(&weight));
    assert_eq!(lines.count(), 2);
}

fn read_csv(path: &Path) -> Vec<Vec<String>> {
    fs::read_to_string(path).unwrap().lines().map(|l| l.split(',').map(String::from).collect()).collect()
}

#[test]
fn bench_writes_rows_and_appends() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", TRI);
    let csv = dir.path().join("out.csv");
    let csv_s = csv.to_str().unwrap();
    let o = arbo(&[
        "bench",
        "--algos",
        "ggst,tarjan-sil",
        "--in",
        &input,
        "--reps",
        "1",
        "--timeout",
        "60",
        "--csv",
        csv_s,
    ]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    let rows = read_csv(&csv);
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0].join(","), "instance,algorithm,n,m,weight,init_ms,exec_ms,recon_ms,teardown_ms,status");
    for row in &rows[1..] {
        assert_eq!(row[4], "6");
        assert_eq!(row[9], "ok");
        assert!(row[5..9].iter().all(|x| x.parse::<u64>().is_ok()));
    }

    let o =
        arbo(&["bench", "--algos", "tarjan-heap", "--in", &input, "--reps", "2", "--timeout", "60", "--csv", csv_s]);
    assert!(o.status.success());
    let rows = read_csv(&csv);
    assert_eq!(rows.len(), 5);
    assert_eq!(rows.iter().filter(|r| r[0] == "instance").count(), 1);
}

#[test]
fn bench_zero_timeout_and_errors() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "tri.txt", TRI);
    let broken = write(dir.path(), "broken.txt", "nonsense");
    let csv = dir.path().join("out.csv");
    let o = arbo(&[
        "bench",
        "--algos",
        "ggst,tarjan-matrix",
        "--in",
        &input,
        &broken,
        "--timeout",
        "0",
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let rows = read_csv(&csv);
    assert_eq!(rows.len(), 5);
    assert!(rows[1..3].iter().all(|r| r[9] == "timeout"));
    assert!(rows[3..5].iter().all(|r| r[9] == "error"));
}

#[test]
fn gen_families() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.txt");
    assert!(arbo(&["gen", "antilemon", "--k", "3", "--out", a.to_str().unwrap()]).status.success());
    let g = parse_edge_list(&fs::read_to_string(&a).unwrap()).unwrap();
    assert_eq!((g.n(), g.m()), (4, 5));

    let e1 = dir.path().join("e1.txt");
    let e2 = dir.path().join("e2.txt");
    for p in [&e1, &e2] {
        let o = arbo(&["gen", "er-rooted", "--n", "10", "--m", "9", "--seed", "4", "--out", p.to_str().unwrap()]);
        assert!(o.status.success());
    }
    let t1 = fs::read_to_string(&e1).unwrap();
    assert_eq!(t1, fs::read_to_string(&e2).unwrap());
    let g = parse_edge_list(&t1).unwrap();
    let tree = arborescence::solve_arborescence(&g, arborescence::Algorithm::Ggst).unwrap();
    assert!(is_arborescence(&g, &tree.edges));

    let bad = dir.path().join("bad.txt");
    assert_eq!(arbo(&["gen", "antilemon", "--k", "2", "--out", bad.to_str().unwrap()]).status.code(), Some(64));
    assert_eq!(arbo(&["gen", "er-rooted", "--n", "10", "--out", bad.to_str().unwrap()]).status.code(), Some(64));
    assert_eq!(arbo(&["gen", "lemon", "--out", bad.to_str().unwrap()]).status.code(), Some(64));
}
