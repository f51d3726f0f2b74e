mod common;

use std::fs;
use std::path::PathBuf;
use std::process::Command;

use pogamma::cli::{
    parse_structure, run_command, DiagnosticKind, FuzzyFile, Outcome, StructureFile,
};
use pogamma::generator::sample_fuzzy_subset;
use proptest::prelude::*;
use tempfile::TempDir;

/// Null semigroup on three elements with zero 0: every product is 0.
const NULL3: &str = "\
pogs 1
S 3
G 1
T 0 0 0 0
T 0 0 1 0
T 0 0 2 0
T 1 0 0 0
T 1 0 1 0
T 1 0 2 0
T 2 0 0 0
T 2 0 1 0
T 2 0 2 0
";

/// Left-zero semigroup on two elements with `0 <= 1`.
const LEFT_ZERO: &str = "\
pogs 1
S 2  # carrier
G 1
NS 0 e
NS 1 f
T 0 0 0 0
T 0 0 1 0
T 1 0 0 1
T 1 0 1 1
O 0 1
";

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(TempDir::new().unwrap())
    }

    fn file(&self, name: &str, text: &str) -> String {
        let path: PathBuf = self.0.path().join(name);
        fs::write(&path, text).unwrap();
        path.to_str().unwrap().to_owned()
    }
}

fn pogs(args: &[&str]) -> Outcome {
    run_command(std::iter::once("pogs").chain(args.iter().copied()))
}

fn fz(grades: &[&str]) -> String {
    let mut out = format!("fz 1\nS {}\n", grades.len());
    for (i, g) in grades.iter().enumerate() {
        out.push_str(&format!("F {i} {g}\n"));
    }
    out
}

#[test]
fn validate_accepts_and_canonicalizes() {
    let d = Dir::new();
    let path = d.file("lz.pogs", LEFT_ZERO);
    let out = pogs(&["validate", &path]);
    assert_eq!(out.code, 0, "{}", out.text);
    assert!(out.text.contains("valid: n = 2, m = 1, order pairs = 1"));

    let canonical = pogs(&["validate", "--canonical", &path]);
    let rendered = canonical.text.split_once('\n').unwrap().1;
    let again = d.file("again.pogs", rendered);
    assert_eq!(pogs(&["validate", "--canonical", &again]), canonical);
    assert!(rendered.contains("NS 0 e"));
}

#[test]
fn validate_separates_algebraic_failures_from_input_errors() {
    let d = Dir::new();
    let cases = [
        // (text, exit code, diagnostic code)
        (LEFT_ZERO.replace("pogs 1", "pogs 2"), 2, "E001"),
        (LEFT_ZERO.replace("T 1 0 1 1", "T 1 0 1 7"), 2, "E002"),
        (LEFT_ZERO.replace("T 1 0 1 1\n", ""), 2, "E003"),
        (format!("{LEFT_ZERO}T 1 0 1 1\n"), 2, "E004"),
        (LEFT_ZERO.replace("T 1 0 1 1", "T 1 0 1 0"), 1, "E005"),
        (format!("{LEFT_ZERO}O 1 0\n"), 1, "E006"),
        (NULL3.replace("T 1 0 1 0", "T 1 0 1 0\nO 0 1"), 0, ""),
        (format!("{}O 1 0\n", NULL3), 0, ""),
        (
            "pogs 1\nS 2\nG 1\nT 0 0 0 0\nT 0 0 1 1\nT 1 0 0 1\nT 1 0 1 0\nO 0 1\n".to_owned(),
            1,
            "E007",
        ),
    ];
    for (i, (text, code, diag)) in cases.iter().enumerate() {
        let path = d.file(&format!("case{i}.pogs"), text);
        let out = pogs(&["validate", &path]);
        assert_eq!(out.code, *code, "case {i}: {}", out.text);
        assert!(out.text.contains(diag), "case {i}: {}", out.text);
    }
}

#[test]
fn diagnostics_carry_line_numbers() {
    let text = LEFT_ZERO.replace("T 1 0 0 1", "T 1 0 0 x");
    let err = StructureFile::parse(&text).unwrap_err();
    assert_eq!(err.kind, DiagnosticKind::Syntax);
    assert_eq!(err.line, Some(8));
    assert!(err.to_string().starts_with("line 8: error[E001]"));
}

#[test]
fn automorphisms_and_ideals_of_the_null_semigroup() {
    let d = Dir::new();
    let path = d.file("null.pogs", NULL3);
    let auts = pogs(&["auts", &path]);
    assert_eq!(auts.code, 0);
    assert_eq!(auts.text, "automorphisms: 2\n[0 1 2]\n[0 2 1]\n");

    let ideals = pogs(&["ideals", "--interior", "--characteristic", &path]);
    assert_eq!(ideals.code, 0);
    assert_eq!(
        ideals.text,
        "interior ideals: 4\n{0}\n{0, 1}\n{0, 2}\n{0, 1, 2}\n\
         characteristic interior ideals: 2\n{0}\n{0, 1, 2}\n"
    );

    let check = pogs(&["check", "characteristic", &path, "0,1"]);
    assert_eq!(check.code, 1);
    assert!(check.text.contains("result: FAIL"));
    assert!(check.text.contains("[0 2 1]"), "{}", check.text);
    assert_eq!(pogs(&["check", "interior", &path, "0,1"]).code, 0);
}

#[test]
fn check_takes_crisp_lists_and_fuzzy_files() {
    let d = Dir::new();
    let s = d.file("lz.pogs", LEFT_ZERO);
    let out = pogs(&["check", "interior", &s, "1"]);
    assert_eq!(out.code, 1);
    assert!(out.text.contains("clause: interior"), "{}", out.text);
    assert_eq!(pogs(&["check", "subsemigroup", &s, "1"]).code, 0);

    // closed under products but 1 <= 2 is missing
    let ordered = d.file("null.pogs", &format!("{NULL3}O 1 2\n"));
    let out = pogs(&["check", "interior", &ordered, "0,2"]);
    assert_eq!(out.code, 1);
    assert!(
        out.text.contains("clause: downward-closure"),
        "{}",
        out.text
    );
    assert_eq!(pogs(&["check", "interior", &s, "0,1"]).code, 0);

    // x a y = x here, so only constant grades pass
    let constant = d.file("c.fz", &fz(&["1/2", "1/2"]));
    let rising = d.file("r.fz", &fz(&["1/2", "1/1"]));
    assert_eq!(pogs(&["check", "fuzzy-interior", &s, &constant]).code, 0);
    let out = pogs(&["check", "fuzzy-interior", &s, &rising]);
    assert_eq!(out.code, 1);
    assert!(out.text.contains("result: FAIL"));

    assert_eq!(pogs(&["check", "interior", &s, "0,5"]).code, 2);
    assert_eq!(pogs(&["check", "interior", &s, "zero"]).code, 2);
    let wide = d.file("w.fz", &fz(&["1/1", "1/2", "0/1"]));
    let out = pogs(&["check", "fuzzy-interior", &s, &wide]);
    assert_eq!(out.code, 2);
    assert!(out.text.contains("E008"));
}

#[test]
fn cuts_and_witness() {
    let d = Dir::new();
    let s = d.file("null.pogs", NULL3);
    let mu = d.file("mu.fz", &fz(&["1/3", "1/1", "0/1"]));
    let cuts = pogs(&["cuts", &mu]);
    assert_eq!(cuts.code, 0);
    assert_eq!(
        cuts.text,
        "cut at 0/1: {0, 1, 2}\ncut at 1/3: {0, 1}\ncut at 1/1: {1}\n"
    );
    assert_eq!(
        pogs(&["cuts", "--levels", &mu]).text,
        "levels: 0/1 1/3 1/1\n"
    );

    // 1 · 1 = 0 drops from 1 to 1/3, so the midpoint is 2/3
    let w = pogs(&["witness", &s, &mu]);
    assert_eq!(w.code, 1);
    assert!(w.text.contains("t0 = 2/3, cut at t0 = {1}"), "{}", w.text);

    let fine = d.file("fine.fz", &fz(&["1/1", "1/3", "1/3"]));
    let w = pogs(&["witness", &s, &fine]);
    assert_eq!(w.code, 0);
    assert!(w.text.contains("no violation"));

    let bad = d.file("bad.fz", "fz 1\nS 2\nF 0 3/2\nF 1 1/1\n");
    assert_eq!(pogs(&["cuts", &bad]).code, 2);
    let decimal = d.file("dec.fz", "fz 1\nS 1\nF 0 0.5\n");
    assert_eq!(pogs(&["cuts", &decimal]).code, 2);
}

#[test]
fn verify_reports_fixed_counts() {
    let out = pogs(&["verify", "all", "--max-n", "2", "--max-m", "1"]);
    assert_eq!(out.code, 0, "{}", out.text);
    for line in [
        "structures: 21",
        "level-criterion checks: 162",
        "midpoint witnesses: 84",
        "char-function-criterion checks: 61",
        "char-function-lemma checks: 61",
        "refutations: 0",
        "result: CONSISTENT",
    ] {
        assert!(out.text.contains(line), "missing {line:?} in\n{}", out.text);
    }

    let discrete = pogs(&[
        "verify", "thm34", "--max-n", "2", "--max-m", "1", "--orders", "discrete",
    ]);
    assert_eq!(discrete.code, 0);
    assert!(discrete.text.contains("structures: 9"), "{}", discrete.text);
    assert!(
        !discrete.text.contains("level-criterion checks"),
        "{}",
        discrete.text
    );
}

#[test]
fn verify_rejects_bad_requests() {
    for args in [
        &["verify", "all", "--max-n", "5"][..],
        &["verify", "all", "--grades", "0,1/2"],
        &["verify", "all", "--grades", "0,2,1"],
        &["verify", "everything"],
        &["verify", "all", "--max-n", "0"],
    ] {
        assert_eq!(pogs(args).code, 2, "{args:?}");
    }
    assert!(pogs(&["verify", "all", "--max-n", "5"])
        .text
        .contains("POGS_CEILING"));
}

#[test]
fn missing_files_are_input_errors() {
    let d = Dir::new();
    let gone = d.0.path().join("gone.pogs");
    let out = pogs(&["validate", gone.to_str().unwrap()]);
    assert_eq!(out.code, 2);
}

#[test]
fn binary_exit_codes_and_streams() {
    let d = Dir::new();
    let ok = d.file("ok.pogs", LEFT_ZERO);
    let bad = d.file("bad.pogs", &LEFT_ZERO.replace("T 1 0 1 1", "T 1 0 1 0"));
    let broken = d.file("broken.pogs", "pogs 1\nS two\n");
    let bin = env!("CARGO_BIN_EXE_pogs");
    let run = |p: &str| Command::new(bin).arg("validate").arg(p).output().unwrap();

    let out = run(&ok);
    assert_eq!(out.status.code(), Some(0));
    assert!(!out.stdout.is_empty() && out.stderr.is_empty());
    let out = run(&bad);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("E005"));
    let out = run(&broken);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("E001"));
}

proptest! {
    #[test]
    fn structure_files_round_trip(idx in 0usize..4230) {
        let s = &common::corpus(3, 2)[idx];
        let file = StructureFile::from_structure(s);
        let text = file.render();
        prop_assert_eq!(&StructureFile::parse(&text).unwrap(), &file);
        prop_assert_eq!(&parse_structure(&text).unwrap(), s);
    }

    #[test]
    fn fuzzy_files_round_trip(n in 1usize..=6, seed in any::<u64>()) {
        let mu = sample_fuzzy_subset(n, &common::grades("0,1/7,2/5,1/2,11/12,1"), seed).unwrap();
        let file = FuzzyFile::from_subset(&mu);
        let parsed = FuzzyFile::parse(&file.render()).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.to_subset(), mu);
    }
}
