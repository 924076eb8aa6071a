use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn modfair(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_modfair"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    fs::write(&path, text).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Blue path 0-1-2 and red path 3-4-5.
const TWO_PATHS: &str = "p fce 6 4\nv 0 B\nv 1 B\nv 2 B\nv 3 R\nv 4 R\nv 5 R\ne 0 1\ne 1 2\ne 3 4\ne 4 5\n";

#[test]
fn solve_reports_size_and_writes_the_set() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", TWO_PATHS);
    let out_file = dir.path().join("s.txt");
    for mode in ["fpt", "brute"] {
        let out = modfair(&[
            "solve",
            s(&inst),
            "--k",
            "2",
            "--delta",
            "0",
            "--mode",
            mode,
            "--out",
            s(&out_file),
        ]);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        assert!(stdout(&out).contains("size 2"));
        assert_eq!(fs::read_to_string(&out_file).unwrap().lines().count(), 2);
    }
    let out = modfair(&[
        "solve",
        s(&inst),
        "--k",
        "2",
        "--delta",
        "0",
        "--mode",
        "xp",
        "--mu",
        "2",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("size 2"));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", TWO_PATHS);
    assert_eq!(code(&modfair(&["solve", s(&inst), "--k", "1", "--delta", "0"])), 2);
    assert_eq!(
        code(&modfair(&[
            "solve",
            s(&inst),
            "--k",
            "2",
            "--delta",
            "0",
            "--node-limit",
            "1"
        ])),
        3
    );
    assert_eq!(code(&modfair(&["solve", s(&inst), "--delta", "0"])), 64);
    assert_eq!(code(&modfair(&["solve", s(&inst), "--k", "2", "--delta", "x"])), 64);
    assert_eq!(code(&modfair(&["frobnicate"])), 64);
    assert_eq!(
        code(&modfair(&[
            "solve",
            s(&inst),
            "--k",
            "2",
            "--delta",
            "0",
            "--mode",
            "xp"
        ])),
        64
    );
    let bad = write(&dir, "bad.txt", "p fce 1 0\nv 0 G\n");
    let out = modfair(&["solve", s(&bad), "--k", "1", "--delta", "0"]);
    assert_eq!(code(&out), 65);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(code(&modfair(&["--help"])), 0);
}

#[test]
fn sidecar_lines_supply_defaults() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", &format!("{TWO_PATHS}k 2\ndelta 1/2\n"));
    let out = modfair(&["solve", s(&inst)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("size 2"));
}

#[test]
fn classic_solve() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", TWO_PATHS);
    let out = modfair(&["solve-classic", s(&inst)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("size 2"));
}

#[test]
fn export_and_verify() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", "p fce 3 2\nv 0 R\nv 1 B\nv 2 B\ne 0 1\ne 1 2\n");
    let lp = dir.path().join("m.lp");
    let out = modfair(&["export-lp", s(&inst), "--k", "1", "--delta", "1", "--out", s(&lp)]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&lp).unwrap();
    assert!(text.starts_with("Minimize"));
    assert!(text.contains("Subject To") && text.contains("Binary") && text.trim_end().ends_with("End"));

    // Deleting {1, 2} leaves the edge 0-1 and the isolated 2.
    let good = write(&dir, "good.sol", "x_0_1 1\nx_0_2 0\nx_1_2 0\n");
    let out = modfair(&["verify", s(&inst), "--lp-solution", s(&good)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("size 1"));
    let p3 = write(&dir, "p3.sol", "# unchanged\nx_0_1 1\nx_0_2 0\nx_1_2 1\n");
    let out = modfair(&["verify", s(&inst), "--lp-solution", s(&p3)]);
    assert_eq!(code(&out), 65);
    let out = modfair(&["verify", s(&inst), "--lp-solution", s(&good), "--delta", "0"]);
    assert_eq!(code(&out), 65);
}

#[test]
fn generators() {
    let dir = TempDir::new().unwrap();
    let p3 = write(&dir, "p3.txt", "p fce 3 2\nv 0 B\nv 1 B\nv 2 B\ne 0 1\ne 1 2\n");
    let out = modfair(&["gen", "p3-padding", s(&p3), "--k", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("p fce 6 4\n"));
    assert!(text.contains("k 2\n") && text.contains("variant editing\n"));

    let n3dm = write(&dir, "m.txt", "6 1 2 3 | 1 2 3 | 1 2 3\n");
    let out = modfair(&["gen", "cta", s(&n3dm), "--d", "1"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("p cta 9\nc 10\nc 11\nc 12\nc 28\n"));

    let unbalanced = write(&dir, "u.txt", "6 1 2 3 | 1 2 3 | 1 2 2\n");
    assert_eq!(code(&modfair(&["gen", "cta", s(&unbalanced)])), 65);

    let singles = write(&dir, "c.txt", "p cta 6\nc 1\nc 1\nc 1\nc 1\nc 1\nc 1\nk 3\n");
    let out = modfair(&["gen", "fcc", s(&singles), "--delta", "1/3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("p fce 12 11\n"));
    assert!(text.contains("k 7\n") && text.contains("variant completion-mono-only\n"));

    let wheel = write(&dir, "w.txt", "p fce 3 0\nv 0 B\nv 1 B\nv 2 B\n");
    assert_eq!(code(&modfair(&["gen", "single-red", s(&wheel), "--k", "5"])), 65);
}

#[test]
fn sample_and_bench() {
    let dir = TempDir::new().unwrap();
    let inst = write(&dir, "g.txt", TWO_PATHS);
    let out = modfair(&["sample", s(&inst), "--n", "3", "--seed", "4"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("p fce 3 2\n"));
    assert_eq!(code(&modfair(&["sample", s(&inst), "--n", "9"])), 65);

    let csv = dir.path().join("out.csv");
    let out = modfair(&[
        "bench",
        s(&inst),
        "--sweep",
        "0,0.5",
        "--factor",
        "10",
        "--threads",
        "2",
        "--out",
        s(&csv),
    ]);
    assert_eq!(code(&out), 0);
    let text = fs::read_to_string(&csv).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert!(lines[0]
        .starts_with("instance,n,m,reds,blues,delta_norm_cap,k,diff,delta_norm,elapsed_ms,status,k_ratio,t_ratio"));
    assert!(lines[2].contains(",Opt,"));
}
