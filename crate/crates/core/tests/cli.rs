use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

fn eac(args: &[&str]) -> Output {
    eac_with_input(args, "")
}

fn eac_with_input(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_eac"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn chain_file() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../paper_chain.transcript")
}

#[test]
fn verify_paper_chain() {
    let o = eac(&["verify", chain_file().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("final: < c | 1 >"), "{out}");
    assert!(out.contains("canonical: < a | 1 >"), "{out}");
}

#[test]
fn strict_verify_rejects_rotate() {
    let o = eac(&["verify", "--strict", chain_file().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invariants_text() {
    let o = eac(&["invariants", "< a,b,c | a b, b c, a c^-1 >"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "abs_det: 0\nmod2_rank: 2\n101\n011\n");
    let o = eac(&["invariants", "< a, b | a >"]);
    assert!(stdout(&o).starts_with("abs_det: n/a\n"));
}

#[test]
fn parse_errors_are_positioned() {
    let o = eac(&["parse", "< a | a a"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("line 1, column 10"), "{err}");
}

#[test]
fn parse_round_trip_and_stdin() {
    let o = eac_with_input(&["parse", "-"], "<x,y|x y^-1 , 1>\n");
    assert_eq!(stdout(&o), "< x, y | x y^-1, 1 >\n");
    let again = eac(&["parse", stdout(&o).trim()]);
    assert_eq!(stdout(&again), stdout(&o));
}

#[test]
fn normalize_and_apply() {
    let o = eac(&["normalize", "< a, b, c | c, 1, c c >"]);
    assert_eq!(stdout(&o), "< a, b, c | 1, a, a a >\n");
    let o = eac(&[
        "apply",
        "< a, b | a b, b >",
        "invert 2",
        "compose 1 2",
        "cancel 1 2",
    ]);
    assert_eq!(stdout(&o), "< a, b | a, b^-1 >\n");
    let o = eac(&["apply", "< a, b | a b, b >", "compose 1 1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn gen_and_tc() {
    assert_eq!(
        stdout(&eac(&["gen", "--family", "ak:2"])),
        "< x, y | x x y^-1 y^-1 y^-1, x y x y^-1 x^-1 y^-1 >\n"
    );
    assert_eq!(eac(&["gen", "--family", "nope:1"]).status.code(), Some(2));
    assert_eq!(stdout(&eac(&["tc", "< a | a >"])), "order=1\n");
    let o = eac(&["tc", "< a | 1 >", "--max-cosets", "50"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn search_emits_verifiable_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("found.transcript");
    let o = eac(&[
        "search",
        "< b, c | b c, b^-1 c^-1 >",
        "--moves",
        "eac",
        "--goal",
        "rank:1",
        "--deterministic",
        "--emit",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = eac(&["verify", path.to_str().unwrap()]);
    assert_eq!(v.status.code(), Some(0));
    assert!(
        stdout(&v).contains("canonical: < a | 1 >"),
        "{}",
        stdout(&v)
    );
}

#[test]
fn search_exit_codes() {
    let o = eac(&[
        "search",
        "< a, b, c | a b, b c, a c^-1 >",
        "--moves",
        "sac",
        "--goal",
        "below:3",
        "--max-length",
        "8",
    ]);
    assert_eq!(o.status.code(), Some(4), "{}", stdout(&o));
    let o = eac(&[
        "search",
        "< a, b, c | a b, b c, a c^-1 >",
        "--goal",
        "rank:1",
        "--budget",
        "10",
    ]);
    assert_eq!(o.status.code(), Some(5));
}

#[test]
fn heegaard_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("lens.hd");
    std::fs::write(
        &path,
        "component 1 genus 1 alphas 1 betas 1\nbeta 1: +1@0 +1@1 +1@2\n",
    )
    .unwrap();
    let o = eac(&["heegaard", path.to_str().unwrap()]);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    assert_eq!(stdout(&o), "< a | a a a >\n");
}

#[test]
fn repl_records_transcript() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("session.transcript");
    let script = "replace 1 2 -1\ncancel 1 2\ninvert 3\ncompose 3 1\ncancel 3 3\ncompose 1 1\ninvert 3\ndestab 1 1\n\
                  replace 1 2 -1\ncancel 1 2\nrotate 2 1\ncancel 2 2\ncompose 2 1\ncancel 2 1\ndestab 1 1\nquit\n";
    let o = eac_with_input(
        &[
            "repl",
            "< a, b, c | a b, b c, a c^-1 >",
            "--save",
            path.to_str().unwrap(),
        ],
        script,
    );
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).matches("error:").count(), 1);
    let v = eac(&["verify", path.to_str().unwrap()]);
    assert!(stdout(&v).contains("final: < c | 1 >"), "{}", stdout(&v));
}

#[test]
fn json_output() {
    let o = eac(&["--format", "json", "invariants", "< a, b | a^2 b, b >"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["abs_det"], "2");
    assert_eq!(v["mod2_rank"], 1);
    let o = eac(&["--format", "json", "tc", "< a | a^3 >"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["order"], 3);
}
