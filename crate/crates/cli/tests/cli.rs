use std::io::Write;
use std::process::{Command, Output};

fn bhcycle(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bhcycle"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn edge_lines(text: &str) -> Vec<&str> {
    text.lines().filter(|l| !l.starts_with('#')).collect()
}

#[test]
fn gen_bh1_is_a_four_cycle() {
    let o = bhcycle(&["gen", "-n", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(edge_lines(&stdout(&o)), ["0-1", "0-3", "1-2", "2-3"]);
}

#[test]
fn gen_bh2_has_32_edges() {
    let o = bhcycle(&["gen", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(edge_lines(&stdout(&o)).len(), 32);
}

#[test]
fn gen_rejects_zero() {
    let o = bhcycle(&["gen", "-n", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(!stderr(&o).is_empty());
}

#[test]
fn embed_prints_a_six_cycle() {
    let o = bhcycle(&["embed", "-n", "2", "-e", "00-10", "-l", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["n"], 2);
    assert_eq!(v["edge"], "00-10");
    assert_eq!(v["length"], 6);
    assert_eq!(v["cycle"].as_array().unwrap().len(), 6);
    assert!(!v["trace"].as_array().unwrap().is_empty());
}

#[test]
fn embed_rejects_length_four() {
    let o = bhcycle(&["embed", "-n", "2", "-e", "00-10", "-l", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("length 4 not guaranteed"));
}

#[test]
fn embed_rejects_a_faulty_edge() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "# one fault\n00-10").unwrap();
    let path = f.path().to_str().unwrap();
    let o = bhcycle(&[
        "embed", "-n", "2", "-e", "00-10", "-l", "6", "--faults", path,
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("edge is faulty"));
}

#[test]
fn embed_rejects_bad_input() {
    for args in [
        &["embed", "-n", "2", "-e", "00-11x", "-l", "6"][..],
        &["embed", "-n", "2", "-e", "00-20", "-l", "6"][..],
        &["embed", "-n", "2", "-e", "00-10", "-l", "7"][..],
        &["embed", "-n", "2", "-e", "00-10"][..],
        &[
            "embed",
            "-n",
            "2",
            "-e",
            "00-10",
            "-l",
            "6",
            "--faults",
            "/nonexistent/file",
        ][..],
    ] {
        assert_eq!(bhcycle(args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn duplicate_faults_are_rejected() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "01-12\n12-01").unwrap();
    let o = bhcycle(&[
        "embed",
        "-n",
        "2",
        "-e",
        "00-10",
        "-l",
        "6",
        "--faults",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn printed_cycle_round_trips() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "000-310\n001-102").unwrap();
    let o = bhcycle(&[
        "embed",
        "-n",
        "3",
        "-e",
        "000-100",
        "-l",
        "40",
        "--faults",
        f.path().to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let labels: Vec<String> = v["cycle"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| x.as_str().unwrap().to_owned())
        .collect();
    let g = bh_core::BalancedHypercube::new(3).unwrap();
    let c = bh_core::CyclePath::parse(&g, &labels, true).unwrap();
    let faults = bh_core::FaultSet::parse_text(&g, "000-310\n001-102\n").unwrap();
    let e = g.parse_edge("000-100").unwrap();
    assert_eq!(
        bh_core::oracle::validate_cycle(3, &c, e, 40, &faults),
        Ok(())
    );
}

#[test]
fn verify_exhaustive_bh2() {
    let o = bhcycle(&["verify", "-n", "2", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["total"], 95424);
}

#[test]
fn verify_exhaustive_refuses_bh3() {
    let o = bhcycle(&["verify", "-n", "3", "--exhaustive"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("only feasible for n = 2"));
}

#[test]
fn stress_is_reproducible() {
    let args = ["stress", "-n", "3", "--trials", "300", "--seed", "42"];
    let a = bhcycle(&args);
    let b = bhcycle(&[&args[..], &["--workers", "1"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_str(&stdout(&a)).unwrap();
    assert_eq!(v["failed"], 0);
    assert_eq!(v["seed"], 42);
    assert!(v.get("elapsed_seconds").is_none());
}

#[test]
fn timing_is_opt_in() {
    let o = bhcycle(&["stress", "-n", "2", "--trials", "10", "--timing"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(v["elapsed_seconds"].is_number());
}

#[test]
fn counterexample_bh2() {
    let o = bhcycle(&["counterexample", "-n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["four_cycle"]["four_cycle"], "no");
    assert_eq!(v["four_cycle"]["six_cycle"], "yes");
    assert_eq!(v["optimality"]["holds"], true);
}

#[test]
fn lemma_suites_pass() {
    for n in ["2", "3"] {
        let o = bhcycle(&["lemmas", "-n", n, "--trials", "200", "--format", "text"]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
        assert!(!stdout(&o).contains("FAIL"));
    }
}

#[test]
fn help_lists_every_subcommand() {
    let o = bhcycle(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for cmd in [
        "gen",
        "embed",
        "verify",
        "stress",
        "counterexample",
        "lemmas",
    ] {
        assert!(text.contains(cmd), "{cmd}");
    }
}
