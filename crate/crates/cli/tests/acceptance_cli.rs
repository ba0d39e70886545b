//! Criterion 8 fixtures: pinned byte-exact outputs for the known instances,
//! plus round-trip and byte-stability checks on the command-line surface.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_trifree"))
}

fn write_fixture(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("trifree-acceptance");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn cycle_file(n: usize) -> PathBuf {
    let mut text = format!("p edge {n} {n}\n");
    for i in 1..n {
        text.push_str(&format!("e {} {}\n", i, i + 1));
    }
    text.push_str(&format!("e {n} 1\n"));
    write_fixture(&format!("c{n}.col"), &text)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn criterion_8_known_fixtures() {
    let c5 = cycle_file(5);
    let out = run(&["solve", c5.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 3\nv 4 2\nv 5 3\n"
    );

    let c6 = cycle_file(6);
    let out = run(&["solve", c6.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 1\nv 4 2\nv 5 1\nv 6 2\n"
    );

    let c7 = cycle_file(7);
    let out = run(&["solve", c7.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 1\nv 4 2\nv 5 1\nv 6 2\nv 7 3\n"
    );

    let petersen = write_fixture(
        "petersen.col",
        "p edge 10 15\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\ne 1 6\ne 2 7\ne 3 8\ne 4 9\ne 5 10\ne 6 8\ne 8 10\ne 10 7\ne 7 9\ne 9 6\n",
    );
    let out = run(&["solve", petersen.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 3\nv 4 1\nv 5 2\nv 6 3\nv 7 3\nv 8 2\nv 9 2\nv 10 1\n"
    );

    let k3 = write_fixture("k3.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let out = run(&["solve", k3.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(stdout_of(&out), "s OUTSIDECLASS\nw triangle 1 2 3\n");

    let k4 = write_fixture(
        "k4.col",
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    );
    let out = run(&["solve", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(stdout_of(&out), "s OUTSIDECLASS\nw triangle 1 2 3\n");

    // Even cycles land in the bipartite stage and use two colors. C4 and C6
    // are the in-class even cycles; C8 contains an induced P7, so it only
    // reaches the bipartite stage with the promise check disabled.
    let c4 = cycle_file(4);
    let out = run(&["solve", c4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_of(&out), "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 1\nv 4 2\n");

    let c8 = cycle_file(8);
    let out = run(&["solve", c8.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(64));
    assert_eq!(stdout_of(&out), "s OUTSIDECLASS\nw p7 1 2 3 4 5 6 7\n");
    let out = run(&["solve", "--no-promise-check", c8.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout_of(&out),
        "s 3COLORABLE\nv 1 1\nv 2 2\nv 3 1\nv 4 2\nv 5 1\nv 6 2\nv 7 1\nv 8 2\n"
    );

    println!("[PASS] criterion 8: pinned fixture outputs match byte for byte");
}

#[test]
fn solve_then_check_round_trip() {
    for n in [5usize, 6, 7] {
        let graph = cycle_file(n);
        let out = run(&["solve", graph.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
        let sol = write_fixture(&format!("c{n}.sol"), &stdout_of(&out));
        let check = run(&["check", graph.to_str().unwrap(), sol.to_str().unwrap()]);
        assert_eq!(check.status.code(), Some(0), "check rejected the solver's output");
    }
    println!("[PASS] solve output always passes check");
}

#[test]
fn check_rejects_bad_coloring() {
    let graph = cycle_file(7);
    let bad = write_fixture(
        "bad7.sol",
        "s 3COLORABLE\nv 1 1\nv 2 1\nv 3 1\nv 4 2\nv 5 1\nv 6 2\nv 7 3\n",
    );
    let check = run(&["check", graph.to_str().unwrap(), bad.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(1));
    assert!(stdout_of(&check).starts_with("violation"));
}

#[test]
fn output_is_stable_across_runs_and_parallelism() {
    let spec = ["gen", "--family", "shell-decorated", "--n", "14", "--seed", "9"];
    let gen1 = run(&spec);
    let gen2 = run(&spec);
    assert_eq!(stdout_of(&gen1), stdout_of(&gen2), "generator not deterministic");
    let graph = write_fixture("stable.col", &stdout_of(&gen1));
    let a = run(&["solve", graph.to_str().unwrap()]);
    let b = run(&["solve", graph.to_str().unwrap()]);
    let c = run(&["solve", "--parallel", "4", graph.to_str().unwrap()]);
    assert_eq!(stdout_of(&a), stdout_of(&b));
    assert_eq!(stdout_of(&a), stdout_of(&c), "parallelism changed the output");
    println!("[PASS] output bytes stable across runs and parallelism levels");
}

#[test]
fn dimacs_round_trip_through_gen() {
    for seed in 0..5u64 {
        let out = run(&[
            "gen",
            "--family",
            "cycle-decorated",
            "--n",
            "12",
            "--seed",
            &seed.to_string(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let text = stdout_of(&out);
        let path = write_fixture(&format!("rt{seed}.col"), &text);
        // Solving the regenerated file gives some verdict without fallback
        // noise on stderr; parse/write stability is covered by identical
        // regeneration.
        let solved = run(&["solve", path.to_str().unwrap()]);
        assert!(matches!(solved.status.code(), Some(0) | Some(20)));
    }
}

#[test]
fn oracle_agrees_on_fixtures() {
    let c7 = cycle_file(7);
    let solve_out = run(&["solve", c7.to_str().unwrap()]);
    let oracle_out = run(&["oracle", c7.to_str().unwrap()]);
    assert_eq!(solve_out.status.code(), oracle_out.status.code());

    let k4 = write_fixture(
        "k4o.col",
        "p edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n",
    );
    let out = run(&["oracle", k4.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(20));
    assert_eq!(stdout_of(&out), "s NOT3COLORABLE\n");
}
