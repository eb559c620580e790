use std::path::PathBuf;
use std::process::Command;

use symquot::cli::{run, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, EXIT_VERIFICATION_FAILED};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("symquot").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name].iter().collect();
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("reading {}: {e}", path.display()))
}

const GOLDEN: &[(&str, &[&str])] = &[
    (
        "betti_quot_g2_r2_d2.json",
        &[
            "betti", "quot", "--genus", "2", "--rank", "2", "--degree", "2", "--format", "json",
        ],
    ),
    (
        "betti_sym_g2_d3.txt",
        &["betti", "sym", "--genus", "2", "--degree", "3"],
    ),
    (
        "betti_sym_g3_d4.csv",
        &["betti", "sym", "--genus", "3", "--degree", "4", "--format", "csv"],
    ),
    (
        "poincare_quot_g1_r2_d2.txt",
        &["poincare", "quot", "--genus", "1", "--rank", "2", "--degree", "2"],
    ),
    (
        "poincare_sym_g2_d2.json",
        &["poincare", "sym", "--genus", "2", "--degree", "2", "--format", "json"],
    ),
    (
        "brauer_g2_r2_d2.json",
        &[
            "brauer", "--genus", "2", "--rank", "2", "--degree", "2", "--format", "json",
        ],
    ),
    (
        "pairing_g1_d2.csv",
        &["pairing", "--genus", "1", "--degree", "2", "--format", "csv"],
    ),
    (
        "verify_macdonald_g2_d2.json",
        &[
            "verify",
            "macdonald",
            "--genus",
            "2",
            "--degree",
            "2",
            "--format",
            "json",
        ],
    ),
    (
        "verify_divisor_g2_d2.json",
        &["verify", "divisor", "--genus", "2", "--degree", "2", "--format", "json"],
    ),
    (
        "verify_chern_g2_d2.json",
        &["verify", "chern", "--genus", "2", "--degree", "2", "--format", "json"],
    ),
    (
        "verify_pullback_g2_d2.json",
        &[
            "verify", "pullback", "--genus", "2", "--degree", "2", "--format", "json",
        ],
    ),
    (
        "verify_theorem1_g2_d2_r2.json",
        &[
            "verify", "theorem1", "--genus", "2", "--degree", "2", "--rank", "2", "--format", "json",
        ],
    ),
    ("verify_all.txt", &["verify", "all"]),
    ("verify_all.csv", &["verify", "all", "--format", "csv"]),
];

#[test]
fn outputs_match_golden_files() {
    for (file, args) in GOLDEN {
        let (code, out, err) = invoke(args);
        assert_eq!(code, EXIT_OK, "{args:?}: {err}");
        assert_eq!(out, golden(file), "{args:?} differs from {file}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "divisor", "--format", "json"];
    assert_eq!(invoke(&args).1, invoke(&args).1);
}

#[test]
fn quot_example_in_json() {
    let (code, out, _) = invoke(&[
        "betti", "quot", "--genus", "2", "--rank", "2", "--degree", "2", "--format", "json",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "{\"dim\":4,\"betti\":[1,4,8,12,20,12,8,4,1]}\n");
    let parsed: symquot::quot::PoincarePolynomial = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap() + "\n", out);
}

#[test]
fn single_betti_number() {
    let (code, out, _) = invoke(&["betti", "sym", "--genus", "3", "--degree", "4", "--k", "3"]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "26\n"));
    let (code, out, _) = invoke(&[
        "betti", "quot", "--genus", "2", "--rank", "3", "--degree", "2", "--k", "2", "--format", "json",
    ]);
    assert_eq!((code, out.as_str()), (EXIT_OK, "{\"betti\":8,\"k\":2}\n"));
    let (code, _, err) = invoke(&["betti", "sym", "--genus", "1", "--degree", "2", "--k", "5"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.starts_with("error[index_out_of_range]"));
}

#[test]
fn resource_guard() {
    let (code, out, err) = invoke(&["betti", "sym", "--genus", "1", "--degree", "99"]);
    assert_eq!(code, EXIT_RESOURCE);
    assert!(out.is_empty());
    assert!(err.starts_with("error[resource_limit]"));
    let (code, _, err) = invoke(&["betti", "sym", "--genus", "1", "--degree", "99", "--format", "json"]);
    assert_eq!(code, EXIT_RESOURCE);
    let v: serde_json::Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"]["kind"], "resource_limit");
    // Raising the limit lifts the refusal for moderate sizes.
    let (code, _, _) = invoke(&["betti", "sym", "--genus", "1", "--degree", "8", "--max-basis", "10"]);
    assert_eq!(code, EXIT_RESOURCE);
    let (code, out, _) = invoke(&["betti", "sym", "--genus", "1", "--degree", "8", "--max-basis", "100000"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("1 2 2 2 2"));
}

#[test]
fn usage_errors() {
    assert_eq!(invoke(&[]).0, EXIT_USAGE);
    assert_eq!(invoke(&["betti", "sym", "--genus", "x", "--degree", "1"]).0, EXIT_USAGE);
    assert_eq!(invoke(&["verify", "nothing"]).0, EXIT_USAGE);
    assert_eq!(
        invoke(&["betti", "sym", "--genus", "1", "--degree", "1", "--format", "xml"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        invoke(&["brauer", "--genus", "2", "--rank", "1", "--degree", "2"]).0,
        EXIT_USAGE
    );
    assert_eq!(
        invoke(&["brauer", "--genus", "2", "--rank", "2", "--degree", "2", "--rho", "5"]).0,
        EXIT_USAGE
    );
    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verify"));
}

#[test]
fn failing_verification_exits_one() {
    // d = 1 has no H^2 basis of Sym^1 X for g ≥ 1, so the pullback suite
    // reports a change-of-basis failure.
    let (code, _, err) = invoke(&["verify", "pullback", "--genus", "1", "--degree", "1"]);
    assert_eq!(code, EXIT_VERIFICATION_FAILED);
    assert!(err.starts_with("error[change_of_basis]"));
}

#[test]
fn json_tables_round_trip() {
    let (_, out, _) = invoke(&["pairing", "--genus", "2", "--degree", "2", "--format", "json"]);
    let table: symquot::divisor::PairingTable = serde_json::from_str(&out).unwrap();
    assert_eq!(serde_json::to_string(&table).unwrap() + "\n", out);
    let (_, out, _) = invoke(&[
        "brauer", "--genus", "3", "--rank", "3", "--degree", "4", "--rho", "2", "--format", "json",
    ]);
    let report: symquot::brauer::BrauerRanksReport = serde_json::from_str(&out).unwrap();
    assert_eq!(report.rank_quot, 13);
    assert_eq!(serde_json::to_string(&report).unwrap() + "\n", out);
    let (_, out, _) = invoke(&["verify", "all", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", out);
}

#[test]
fn binary_exit_codes() {
    let bin = env!("CARGO_BIN_EXE_symquot");
    let status = |args: &[&str]| Command::new(bin).args(args).output().unwrap();
    let ok = status(&["verify", "divisor", "--genus", "2", "--degree", "2"]);
    assert_eq!(ok.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&ok.stdout).ends_with("4 of 4 checks passed\n"));
    assert_eq!(
        status(&["betti", "sym", "--genus", "1", "--degree", "99"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(status(&["betti"]).status.code(), Some(2));
    assert_eq!(status(&["verify", "all"]).status.code(), Some(0));
}
