//! End-to-end tests of the command-line binary: golden stdout, file formats,
//! exit codes, and cache behavior.
//!
//! Exit code contract: 0 success, 2 usage/parse/domain errors, 3 integrity
//! failures, 4 resource guards.  Code 3 signals an internal cross-check
//! failure and has no honest end-to-end trigger from valid inputs; its
//! mapping is covered by the error-type unit tests instead.

use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn ffbias(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffbias"))
        .args(args)
        .env_remove("FFBIAS_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn ffbias_with_cache(args: &[&str], cache_dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffbias"))
        .args(args)
        .env("FFBIAS_CACHE_DIR", cache_dir)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is UTF-8")
}

#[test]
fn lfunc_reports_reference_l_polynomial() {
    let out = ffbias(&["--no-cache", "lfunc", "--q", "5", "--m", "T^3+T+4"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("L(u, chi_m) = 1 + 3u + 5u^2"), "{text}");
    assert!(text.contains("inverse-zero angles theta_j: 2.306110779612"), "{text}");
    assert!(text.contains("angle verdict: plausibly-irrational"), "{text}");
    assert!(text.contains("central value L(q^(-1/2)) = 3.341640786500"), "{text}");
}

#[test]
fn lfunc_rejects_non_squarefree_modulus() {
    let out = ffbias(&["--no-cache", "lfunc", "--q", "5", "--m", "T^2+2T+1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("squarefree"), "{}", stderr(&out));
}

#[test]
fn lfunc_guards_oversized_enumeration() {
    let out = ffbias(&["--no-cache", "lfunc", "--q", "499", "--m", "T^5+T+2"]);
    assert_eq!(out.status.code(), Some(4));
    assert!(stderr(&out).contains("resource guard"), "{}", stderr(&out));
}

#[test]
fn lfunc_over_extension_field() {
    let out = ffbias(&[
        "--no-cache",
        "lfunc",
        "--q",
        "9",
        "--ext-modulus",
        "T^2+1",
        "--m",
        "T^3+2T+1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("L(u, chi_m) = 1 - 3u + 9u^2"), "{text}");
    assert!(text.contains("angle verdict: rational-multiple-of-pi"), "{text}");
}

#[test]
fn prime_power_without_extension_modulus_suggests_the_flag() {
    let out = ffbias(&["--no-cache", "lfunc", "--q", "9", "--m", "T"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("--ext-modulus"), "{}", stderr(&out));
}

#[test]
fn bias_writes_golden_csv() {
    let out = ffbias(&[
        "--no-cache",
        "bias",
        "--q",
        "5",
        "--m",
        "T^3+T+4",
        "--kind",
        "liouville",
        "-n",
        "6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "n,b,B,sign_b,sign_B\n\
         1,-3,-3,-1,-1\n\
         2,9,6,1,1\n\
         3,-12,-6,-1,-1\n\
         4,16,10,1,1\n\
         5,12,22,1,1\n\
         6,8,30,1,1\n"
    );
}

#[test]
fn bias_fast_matches_expansion() {
    let out = ffbias(&[
        "--no-cache",
        "bias",
        "--q",
        "5",
        "--m",
        "T^3+T+4",
        "--kind",
        "liouville",
        "--fast",
        "14",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,b\n14,20768\n");
}

#[test]
fn density_model_emits_sorted_json_with_frozen_values() {
    let out = ffbias(&[
        "--no-cache",
        "density",
        "--q",
        "5",
        "--m",
        "T^3+T+4",
        "--kind",
        "liouville",
        "--model",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let reports: serde_json::Value = serde_json::from_str(&text).expect("valid JSON");
    let reports = reports.as_array().expect("array of two reports");
    assert_eq!(reports.len(), 2);
    assert_eq!(reports[0]["cumulative"], false);
    assert_eq!(reports[0]["source"], "model-closed-form");
    assert!((reports[0]["delta_plus"].as_f64().unwrap() - 0.6168229716661128).abs() < 1e-12);
    assert_eq!(reports[1]["cumulative"], true);
    assert!((reports[1]["delta_plus"].as_f64().unwrap() - 0.6891865183726871).abs() < 1e-12);
    // serde_json emits maps with sorted keys; spot-check the first two.
    let cumulative_pos = text.find("\"cumulative\"").unwrap();
    let delta_pos = text.find("\"delta_minus\"").unwrap();
    assert!(cumulative_pos < delta_pos, "keys are sorted");
}

#[test]
fn density_on_rational_angle_modulus_is_periodic_exact() {
    let out = ffbias(&[
        "--no-cache",
        "density",
        "--q",
        "3",
        "--m",
        "T^3+2T+1",
        "--kind",
        "liouville",
        "--model",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let reports: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(reports[0]["source"], "periodic-exact");
    assert_eq!(reports[0]["delta_plus"], 0.75);
    assert_eq!(reports[0]["error_bound"], 0.0);
    assert_eq!(reports[1]["delta_plus"], 1.0);
}

#[test]
fn density_empirical_and_model_flags_conflict() {
    let out = ffbias(&[
        "--no-cache",
        "density",
        "--q",
        "5",
        "--m",
        "T^3+T+4",
        "--kind",
        "liouville",
        "--model",
        "--empirical",
        "100",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn reproduce_tables_golden_output() {
    let out = ffbias(&["--no-cache", "reproduce-tables"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        stdout(&out),
        "table,modulus,q,horizon,lambda_nc,lambda_cum,mu_nc,mu_cum\n\
         1,T^3+T+4,5,10,0.6000,0.6000,0.5000,0.4000\n\
         1,T^3+T+4,5,100,0.6200,0.6800,0.4900,0.4900\n\
         1,T^3+T+4,5,1000,0.6160,0.6900,0.4990,0.5000\n\
         1,T^3+T+4,5,10000,0.6168,0.6891,0.4999,0.4999\n\
         2,T^5+T^2+2T+1,3,10,0.7000,0.6000,0.5000,0.5000\n\
         2,T^5+T^2+2T+1,3,100,0.5500,0.7100,0.5500,0.4800\n\
         2,T^5+T^2+2T+1,3,1000,0.5820,0.7360,0.5000,0.5010\n\
         2,T^5+T^2+2T+1,3,10000,0.5849,0.7382,0.5005,0.4991\n"
    );
}

#[test]
fn scan_degree_one_golden_output() {
    let out = ffbias(&["--no-cache", "scan", "--q", "5", "--degree", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 6);
    assert_eq!(
        lines[0],
        "modulus,degree,l_coeffs,angles,gsh,central_value,delta_plus_lambda_nc,\
         delta_plus_lambda_cum,delta_plus_mu_nc,delta_plus_mu_cum"
    );
    assert_eq!(
        lines[1],
        "T,1,1,,plausibly-irrational,1.000000,0.500000,1.000000,0.000000,0.000000"
    );
    assert_eq!(
        lines[5],
        "T+4,1,1,,plausibly-irrational,1.000000,0.500000,1.000000,0.000000,0.000000"
    );
}

#[test]
fn unknown_flag_is_a_usage_error() {
    let out = ffbias(&["lfunc", "--q", "5", "--m", "T", "--frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn cache_stores_once_and_serves_repeat_queries() {
    let dir = TempDir::new().unwrap();
    let args = ["lfunc", "--q", "5", "--m", "T^3+T+4"];
    let first = ffbias_with_cache(&args, dir.path());
    assert_eq!(first.status.code(), Some(0));
    let records = dir.path().join("records.jsonl");
    let line_count = |p: &Path| std::fs::read_to_string(p).unwrap().lines().count();
    assert_eq!(line_count(&records), 1);

    // A repeat query is served from the cache without appending a record.
    let second = ffbias_with_cache(&args, dir.path());
    assert_eq!(second.status.code(), Some(0));
    assert_eq!(stdout(&second), stdout(&first));
    assert_eq!(line_count(&records), 1);
}

#[test]
fn no_cache_flag_leaves_no_files_behind() {
    let dir = TempDir::new().unwrap();
    let out = ffbias_with_cache(
        &["--no-cache", "lfunc", "--q", "5", "--m", "T^3+T+4"],
        dir.path(),
    );
    assert_eq!(out.status.code(), Some(0));
    assert!(!dir.path().join("records.jsonl").exists());
}

#[test]
fn density_results_merge_into_the_cached_record() {
    let dir = TempDir::new().unwrap();
    let model = ffbias_with_cache(
        &["density", "--q", "5", "--m", "T^3+T+4", "--kind", "liouville", "--model"],
        dir.path(),
    );
    assert_eq!(model.status.code(), Some(0));
    let empirical = ffbias_with_cache(
        &[
            "density",
            "--q",
            "5",
            "--m",
            "T^3+T+4",
            "--kind",
            "liouville",
            "--empirical",
            "100",
        ],
        dir.path(),
    );
    assert_eq!(empirical.status.code(), Some(0));

    let records = std::fs::read_to_string(dir.path().join("records.jsonl")).unwrap();
    let last = records.lines().last().unwrap();
    let record: serde_json::Value = serde_json::from_str(last).unwrap();
    let reports = record["density_reports"].as_array().unwrap();
    assert_eq!(reports.len(), 4, "model and empirical reports coexist");

    // The model results are now cache hits: no further lines appear.
    let lines_before = records.lines().count();
    let repeat = ffbias_with_cache(
        &["density", "--q", "5", "--m", "T^3+T+4", "--kind", "liouville", "--model"],
        dir.path(),
    );
    assert_eq!(repeat.status.code(), Some(0));
    let records_after = std::fs::read_to_string(dir.path().join("records.jsonl")).unwrap();
    assert_eq!(records_after.lines().count(), lines_before);
}
