//! End-to-end runs of the `gradord` binary: exit codes, determinism,
//! round trips and golden outputs.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use gradord_cli::report::{ConductorOracleReport, ConductorReport, MatrixReport, RChiRow, RowsReport, SChiRow};
use gradord_core::formats::{parse_order, OrderFile};

fn data(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn gradord(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gradord")).args(args).output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = gradord(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

fn path(name: &str) -> String {
    data(name).display().to_string()
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "backend = \"dvr\"\nblocks = [1, 1]\nideals = [[\"m^0\", \"m^-1\"], [\"m^0\", \"m^0\"]]\n").unwrap();
    let out = gradord(&["order", "validate", "--in", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("not in standard form"));

    let syntax = dir.path().join("syntax.toml");
    std::fs::write(&syntax, "backend = \"dvr\"\nblocks = [1]\nideals = [[\"zz\"]]\n").unwrap();
    assert_eq!(gradord(&["order", "validate", "--in", syntax.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(gradord(&["order", "radical", "--in", "/nonexistent/order.toml"]).status.code(), Some(2));
    assert_eq!(gradord(&["order", "frobnicate"]).status.code(), Some(2));
    let c3 = path("c3.grp");
    assert_eq!(gradord(&["group", "orbits", "--group", &c3, "--prime", "9"]).status.code(), Some(2));
    assert_eq!(gradord(&["group", "orbits", "--group", &c3, "--prime", "2"]).status.code(), Some(2));
    let low = gradord(&["group", "conductor-oracle", "--group", &c3, "--prime", "3", "--precision", "3"]);
    assert_eq!(low.status.code(), Some(2));

    let q8 = dir.path().join("q8.grp");
    std::fs::write(&q8, "bundled = \"Q8\"\n").unwrap();
    let out = gradord(&["group", "conductor-oracle", "--group", q8.to_str().unwrap(), "--prime", "3"]);
    assert_eq!(out.status.code(), Some(1));

    let profile = dir.path().join("bad.chi");
    std::fs::write(
        &profile,
        "prime = 3\n[[chi]]\neta_degree = 1\nw_chi = 3\nv_chi = 9\ne_eta_chi = 1\nd_eta_chi = 0\nd_chi_F = 0\nram_F_chi = 1\norder_H = 3\n",
    )
    .unwrap();
    let out = gradord(&["iwasawa", "s-chi", "--profile", profile.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("does not divide"));
}

#[test]
fn every_subcommand_is_deterministic() {
    let order = path("staircase3.toml");
    let runs: Vec<Vec<String>> = [
        "validate",
        "radical",
        "quotient",
        "different",
        "conductor",
        "hull",
        "extremal",
        "hereditary",
        "principalize",
    ]
    .iter()
    .map(|c| vec!["order".into(), c.to_string(), "--in".into(), order.clone()])
    .chain(std::iter::once(vec![
        "order".into(),
        "intersect".into(),
        "--in".into(),
        order.clone(),
        "--in2".into(),
        path("coarse.toml"),
    ]))
    .chain(["validate", "radical", "different", "extremal", "hereditary", "principalize"].iter().map(|c| {
        vec!["order".into(), c.to_string(), "--in".into(), path("monomial2.toml")]
    }))
    .chain(["orbits", "idempotents", "invariants", "conductor-oracle"].iter().map(|c| {
        vec!["group".into(), c.to_string(), "--group".into(), path("s3.grp"), "--prime".into(), "3".into()]
    }))
    .chain(["r-chi", "s-chi", "central-conductor"].iter().map(|c| {
        vec!["iwasawa".into(), c.to_string(), "--profile".into(), path("rchi.chi")]
    }))
    .chain(std::iter::once(vec![
        "iwasawa".into(),
        "tower-check".into(),
        "--profile".into(),
        path("tower9.chi"),
    ]))
    .collect();
    for args in runs {
        for format in ["text", "json"] {
            let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
            full.extend(["--format", format]);
            let out = gradord(&full);
            // the monomial order has no invertible inverse different
            if full[1] == "different" && full[3].ends_with("monomial2.toml") {
                assert_eq!(out.status.code(), Some(1), "{full:?}");
                assert_eq!(out.stderr, gradord(&full).stderr);
                continue;
            }
            assert!(out.status.success(), "{full:?}: {}", String::from_utf8_lossy(&out.stderr));
            assert_eq!(out.stdout, gradord(&full).stdout, "{full:?}");
        }
    }
}

#[test]
fn order_outputs_reparse() {
    let order = path("staircase3.toml");
    for cmd in ["hull", "intersect"] {
        let mut args = vec!["order", cmd, "--in", &order, "--format", "json"];
        if cmd == "intersect" {
            args.extend(["--in2", &order]);
        }
        let json = stdout(&args);
        let file: OrderFile = serde_json::from_str(&json).unwrap();
        let original = parse_order(&std::fs::read_to_string(&order).unwrap()).unwrap();
        assert_eq!(parse_order(&json).unwrap(), original, "{cmd}");
        assert_eq!(file, OrderFile::from_order(&original));
    }
    let radical: MatrixReport = serde_json::from_str(&stdout(&["order", "radical", "--in", &order, "--format", "json"])).unwrap();
    assert_eq!(radical.ideals[0], ["m^1", "m^1", "m^1"]);
    assert_eq!(radical.ideals[2], ["m^0", "m^0", "m^1"]);
}

#[test]
fn out_flag_writes_the_report() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("r.json");
    let profile = path("rchi.chi");
    let out = gradord(&["iwasawa", "r-chi", "--profile", &profile, "--format", "json", "--out", target.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&target).unwrap(), golden("r_chi.json"));
}

#[test]
fn golden_conductor_oracle() {
    // p ∤ #H gives a maximal group ring; C3 at 3 has valuation 1 on both orbits
    for (group, p, expected) in [("c2", 3, vec![0, 0]), ("c3", 3, vec![1, 1]), ("c5", 3, vec![0, 0]), ("s3", 5, vec![0, 0, 0])] {
        let json = stdout(&[
            "group",
            "conductor-oracle",
            "--group",
            &path(&format!("{group}.grp")),
            "--prime",
            &p.to_string(),
            "--precision",
            "8",
            "--format",
            "json",
        ]);
        assert_eq!(json, golden(&format!("conductor_{group}_p{p}.json")), "{group}");
        let report: ConductorOracleReport = serde_json::from_str(&json).unwrap();
        let vals: Vec<i64> = report.orbits.iter().map(|o| o.valuation).collect();
        assert_eq!(vals, expected, "{group}");
        assert!(report.all_agree);
    }
}

#[test]
fn golden_r_chi() {
    let json = stdout(&["iwasawa", "r-chi", "--profile", &path("rchi.chi"), "--format", "json"]);
    assert_eq!(json, golden("r_chi.json"));
    let report: RowsReport<RChiRow> = serde_json::from_str(&json).unwrap();
    let r: Vec<i64> = report.rows.iter().map(|row| row.r_chi).collect();
    assert_eq!(r, [0, 0, -1]);
}

#[test]
fn golden_c7_squaring() {
    let json = stdout(&["iwasawa", "central-conductor", "--profile", &path("c7_square.chi"), "--format", "json"]);
    assert_eq!(json, golden("c7_square.json"));
    let report: ConductorReport = serde_json::from_str(&json).unwrap();
    assert_eq!(report.rows.len(), 1);
    assert_eq!(report.rows[0].s_chi, 3);
    assert_eq!(report.rows[0].r_chi, 0);
    let s: RowsReport<SChiRow> =
        serde_json::from_str(&stdout(&["iwasawa", "s-chi", "--profile", &path("c7_square.chi"), "--format", "json"])).unwrap();
    assert_eq!((s.rows[0].w_chi, s.rows[0].v_chi), (3, 1));
}

#[test]
fn prime_flag_overrides_profile_prime() {
    // 3 and 9 are prime to 5, so the tower is unramified at 5
    let text = stdout(&["iwasawa", "tower-check", "--profile", &path("tower9.chi"), "--prime", "5"]);
    assert!(text.contains("prime: 5") && text.contains("d_upper_lower: 0"), "{text}");
    let text = stdout(&["iwasawa", "tower-check", "--profile", &path("tower9.chi")]);
    assert!(text.contains("holds: true"), "{text}");
}
