use std::process::{Command, Output};

use graham::automaton::{Automaton, AutomatonJson};
use graham::oracle::{count_report, figures_4x6, SweepOptions};
use graham::series::{resolvent_sum, series_terms, GfJson, RationalFunction};
use graham::{formats, reference_gf};

fn graham(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_graham"))
        .args(args)
        .env_remove("GRAHAM_BUDGET")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = graham(args);
    assert!(
        out.status.success(),
        "{args:?}: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn count_examples() {
    assert_eq!(stdout(&["count", "--n", "6"]), "54\n");
    assert_eq!(stdout(&["count", "--n", "0"]), "0\n");
    assert_eq!(stdout(&["count", "--n", "1..3"]), "1 1\n2 3\n3 5\n");
    assert_eq!(stdout(&["count", "--n", "2", "--mode", "general"]), "4\n");
}

#[test]
fn output_is_identical_across_worker_counts() {
    let one = stdout(&[
        "enumerate",
        "--n",
        "8",
        "--format",
        "json",
        "--workers",
        "1",
    ]);
    let two = stdout(&[
        "enumerate",
        "--n",
        "8",
        "--format",
        "json",
        "--workers",
        "3",
    ]);
    assert_eq!(one, two);
    let a = stdout(&["count", "--n", "1..9", "--format", "json", "--workers", "1"]);
    let b = stdout(&["count", "--n", "1..9", "--format", "json", "--workers", "2"]);
    assert_eq!(a, b);
}

#[test]
fn terms_as_bfile() {
    let text = stdout(&["terms", "--limit", "30", "--format", "bfile"]);
    assert_eq!(text.lines().last(), Some("30 126217718"));
    let parsed = formats::from_bfile(&text).unwrap();
    assert_eq!(parsed.len(), 30);
    assert_eq!(stdout(&["terms", "--limit", "1"]), "1 1\n");
}

#[test]
fn gf_json_is_the_published_function() {
    let text = stdout(&["gf", "--format", "json"]);
    let json: GfJson = serde_json::from_str(&text).unwrap();
    assert_eq!(
        RationalFunction::from_json(&json).unwrap(),
        reference_gf().normalize()
    );
}

#[test]
fn enumerate_svg_contains_the_twelve_figures() {
    let text = stdout(&["enumerate", "--n", "6", "--format", "svg"]);
    let boards = formats::from_svg_list(&text).unwrap();
    assert_eq!(boards.len(), 54);
    for fig in figures_4x6() {
        assert!(boards.contains(&fig));
    }
    let ascii = stdout(&["enumerate", "--n", "6", "--format", "ascii", "--limit", "5"]);
    assert_eq!(formats::from_ascii_list(&ascii).unwrap(), boards[..5]);
}

#[test]
fn automaton_reports_similarity() {
    let text = stdout(&["automaton"]);
    assert!(text.starts_with("9 states"));
    assert!(text.contains("similar to reference matrix: true"));
    assert!(stdout(&["automaton", "--format", "dot"]).starts_with("digraph"));
}

#[test]
fn general_three_row_machine_matches_oracle() {
    let text = stdout(&[
        "automaton",
        "--mode",
        "general",
        "--m",
        "3",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    let json: AutomatonJson = serde_json::from_value(v["automaton"].clone()).unwrap();
    let a = Automaton::from_json(&json).unwrap();
    let terms = series_terms(&resolvent_sum(&a.transfer_matrix()).unwrap(), 10).unwrap();
    for (i, t) in terms.iter().enumerate() {
        let cuts = count_report(3, i + 1, &SweepOptions::default())
            .unwrap()
            .cuts;
        assert_eq!(*t, cuts.into(), "n = {}", i + 1);
    }
}

#[test]
fn exit_codes() {
    assert_eq!(
        graham(&["count", "--n", "12", "--budget", "10"])
            .status
            .code(),
        Some(2)
    );
    let env_budget = Command::new(env!("CARGO_BIN_EXE_graham"))
        .args(["count", "--n", "8"])
        .env("GRAHAM_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(env_budget.status.code(), Some(2));
    assert_eq!(graham(&["gf", "--m", "3"]).status.code(), Some(2));
    assert_eq!(graham(&["gf", "--format", "svg"]).status.code(), Some(2));
}

#[test]
fn verify_single_criterion_as_json() {
    let text = stdout(&["verify", "--criterion", "7", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["criteria"][0]["name"], "cross-convention-counts");
}

#[test]
fn writes_to_out_file() {
    let path = std::env::temp_dir().join(format!("graham-cli-{}.txt", std::process::id()));
    let p = path.to_str().unwrap();
    assert_eq!(stdout(&["recurrence", "--out", p]), "");
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).ok();
    assert!(text.starts_with("c(n) = 2*c(n-1)"));
}
