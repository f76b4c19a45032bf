use std::process::Command;

use hopfgal::cli::run;
use hopfgal::report::{Report, Status};

fn hopfgal(args: &str) -> (String, i32) {
    run(std::iter::once("hopfgal").chain(args.split_whitespace()))
}

fn json(args: &str) -> Report {
    let (out, code) = hopfgal(&format!("{args} --json"));
    let r: Report = serde_json::from_str(&out).unwrap_or_else(|e| panic!("{e}: {out}"));
    assert_eq!(r.exit_code, code);
    r
}

fn value<'a>(r: &'a Report, key: &str) -> &'a str {
    r.lines
        .iter()
        .find(|l| l.key == key)
        .map(|l| l.value.as_str())
        .unwrap_or_else(|| panic!("no line `{key}` in {}", r.render_text()))
}

#[test]
fn verify_exit_codes() {
    assert_eq!(hopfgal("verify fixtures/sweedler.json").1, 0);
    let (out, code) = hopfgal("verify fixtures/corrupted_antipode.json");
    assert_eq!(code, 1);
    assert!(
        out.contains("[FAIL] antipode: antipode fails at (s)"),
        "{out}"
    );
    assert_eq!(hopfgal("verify fixtures/malformed.json").1, 2);
    assert_eq!(hopfgal("verify fixtures/missing.json").1, 2);
    assert_eq!(hopfgal("frobnicate fixtures/sweedler.json").1, 2);
}

#[test]
fn integrals() {
    let r = json("integrals fixtures/qc2.json");
    assert_eq!(value(&r, "left integral"), "1 + σ");
    assert_eq!(value(&r, "semisimple"), "true");
    let r = json("integrals fixtures/sweedler.json");
    assert_eq!(value(&r, "left integral"), "x + g·x");
    assert_eq!(value(&r, "semisimple"), "false");
    let r = json("integrals fixtures/f2c2.json");
    assert_eq!(value(&r, "left integral"), "1 + σ");
    assert_eq!(value(&r, "semisimple"), "false");
}

#[test]
fn extension_expectations() {
    assert_eq!(
        hopfgal("tame fixtures/f4_frobenius.json --expect tame").1,
        0
    );
    assert_eq!(
        hopfgal("tame fixtures/trivial_action.json --expect tame").1,
        1
    );
    assert_eq!(
        hopfgal("galois fixtures/gaussian.json --expect hopf-galois").1,
        0
    );
    assert_eq!(
        hopfgal("galois fixtures/trivial_action.json --expect not-an-extension").1,
        0
    );
    let r = json("tame fixtures/truncated_derivation.json");
    assert_eq!(value(&r, "H_0 dimension"), "0");
    assert!(value(&r, "total integral").starts_with("present"));
    assert!(r.checks.iter().all(|c| c.passed));
}

#[test]
fn homology() {
    let r = json("homology fixtures/f2c2_trivial.json");
    assert_eq!(value(&r, "H_0 dimension"), "1");
    let r = json("homology fixtures/qc2_regular.json");
    assert_eq!(value(&r, "H_0 dimension"), "0");
    let r = json("homology fixtures/gaussian_integers.json");
    assert_eq!(value(&r, "invariant factors"), "[2]");
    let r = json("homology fixtures/eisenstein_integers.json");
    assert_eq!(value(&r, "invariant factors"), "[]");
}

#[test]
fn cyclic() {
    let r = json("cyclic fixtures/graded_q.json --module fixtures/group_like.json --levels 3");
    assert_eq!(r.status, Status::Pass);
    assert_eq!(
        value(&r, "level 3"),
        "dim 32, cotensor 16, (a) pass, (b) pass, (c) pass"
    );
    // non-AYD coefficients: informational only
    let r = json("cyclic fixtures/graded_q.json --module fixtures/group_like_swap.json --levels 2");
    assert_eq!(r.exit_code, 0);
    assert_eq!(r.warnings.len(), 3);
    assert!(value(&r, "level 1").ends_with("(c) fail"));
    let (_, code) =
        hopfgal("cyclic fixtures/graded_q.json --module fixtures/group_like.json --levels 9");
    assert_eq!(code, 3);
    let (_, code) = hopfgal(
        "cyclic fixtures/graded_q.json --module fixtures/group_like.json --levels 3 --max-dim 10",
    );
    assert_eq!(code, 3);
}

#[test]
fn bar_shift() {
    let r = json("bar-shift fixtures/gaussian.json --module regular");
    assert_eq!(r.status, Status::Pass);
    assert_eq!(
        value(&r, "degree 4"),
        "64 vs 64, isomorphism yes, differential compatible yes"
    );
    let r = json("bar-shift fixtures/gaussian.json --module base");
    assert_eq!(value(&r, "dim M^H"), "1");
    let (out, code) = hopfgal("bar-shift fixtures/trivial_action.json");
    assert_eq!(code, 1);
    assert!(out.contains("not bijective"), "{out}");
}

#[test]
fn t_shift() {
    let r = json("t-shift fixtures/graded_f2.json --module cofree:2");
    assert_eq!(r.status, Status::Pass);
    assert_eq!(value(&r, "dim M^co"), "2");
    let (out, code) = hopfgal("t-shift fixtures/graded_nilpotent.json");
    assert_eq!(code, 1);
    assert!(out.contains("singular (rank 3 of 4)"), "{out}");
    assert_eq!(
        hopfgal("t-shift fixtures/graded_f3.json --module cofree").1,
        2
    );
}

#[test]
fn assoc_order() {
    let r = json("assoc-order fixtures/gaussian_integers.json");
    assert_eq!(value(&r, "order"), "ℤ⟨1/2 + 1/2·σ, σ⟩");
    assert_eq!(value(&r, "Hopf order"), "yes");
    assert_eq!(value(&r, "integral"), "1/2 + 1/2·σ");
    assert_eq!(value(&r, "tame"), "yes");
    assert_eq!(value(&r, "generator"), "1 + i");
    let r = json("assoc-order fixtures/gaussian_integers.json --order group-ring");
    assert_eq!(value(&r, "tame"), "no");
    assert_eq!(value(&r, "invariant factors"), "[2]");
    let r = json("assoc-order fixtures/eisenstein_integers.json --order group-ring");
    assert_eq!(value(&r, "tame"), "yes");
    // candidates on the command line replace those in the file
    let r = json("assoc-order fixtures/gaussian_integers.json --candidates 1,0;0,1");
    assert_eq!(
        value(&r, "generator"),
        "none among the candidates (inconclusive)"
    );
    assert_eq!(
        hopfgal("assoc-order fixtures/gaussian_integers.json --order file").1,
        2
    );
}

#[test]
fn json_renders_the_same_text() {
    for args in [
        "verify fixtures/corrupted_antipode.json",
        "tame fixtures/f4_frobenius.json",
        "assoc-order fixtures/gaussian_integers.json",
        "verify fixtures/malformed.json",
    ] {
        let (text, _) = hopfgal(args);
        assert_eq!(json(args).render_text(), text, "{args}");
    }
}

#[test]
fn timing_is_opt_in() {
    assert!(json("verify fixtures/qc2.json").timing_ms.is_none());
    assert!(json("verify fixtures/qc2.json --timing")
        .timing_ms
        .is_some());
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_hopfgal");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["verify", "fixtures/sweedler.json"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).ends_with("status: pass\n"));
    let bad = status(&["verify", "fixtures/malformed.json"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(!bad.stderr.is_empty());
    assert_eq!(
        status(&["verify", "fixtures/corrupted_antipode.json"])
            .status
            .code(),
        Some(1)
    );
}
