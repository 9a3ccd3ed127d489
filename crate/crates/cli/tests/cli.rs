use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use heffter::{fixtures, verify, Classification, GridFile};

fn heffter(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heffter"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn p(path: &Path) -> &str {
    path.to_str().unwrap()
}

fn entries(dir: &Path) -> usize {
    fs::read_dir(dir).unwrap().count()
}

#[test]
fn construct_then_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("a.grid");
    let out = heffter(&["construct", "10", "8", "--out", p(&grid)]);
    assert_eq!(code(&out), 0);
    let manifest = fs::read_to_string(dir.path().join("a.grid.manifest")).unwrap();
    assert!(manifest.starts_with("#fmt 1\n"));
    assert!(manifest.contains("classification=GloballySimpleStar"));

    let text = fs::read_to_string(&grid).unwrap();
    assert!(text.starts_with("#fmt 1\n"));
    let g: GridFile = text.parse().unwrap();
    assert_eq!(g.array, fixtures::sh_star_10_8());
    let in_memory = verify(&fixtures::sh_star_10_8(), 8).classification;

    let out = heffter(&[
        "verify",
        p(&grid),
        "--format",
        "structured",
        "--threshold",
        "star",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains(&format!("classification={in_memory}")));
    assert_eq!(in_memory, Classification::GloballySimpleStar);
}

#[test]
fn delegated_size_needs_fixture_and_writes_nothing() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("b.grid");
    let out = heffter(&["construct", "8", "7", "--out", p(&grid)]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("[web]"));
    assert_eq!(entries(dir.path()), 0);
}

#[test]
fn fixture_is_verified_before_use() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("h87.grid");
    fs::write(&bad, fixtures::h8_7().to_grid_text(7)).unwrap();
    let out = heffter(&[
        "construct",
        "8",
        "7",
        "--fixture",
        p(&bad),
        "--out",
        p(&dir.path().join("x")),
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(entries(dir.path()), 1);

    let good = dir.path().join("sh10.grid");
    fs::write(&good, fixtures::sh_star_10_8().to_grid_text(8)).unwrap();
    let out = heffter(&["construct", "10", "8", "--fixture", p(&good)]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("family=fixture"));
}

#[test]
fn verify_threshold_controls_exit() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("h87.grid");
    fs::write(&grid, fixtures::h8_7().to_grid_text(7)).unwrap();
    assert_eq!(code(&heffter(&["verify", p(&grid)])), 0);
    assert_eq!(
        code(&heffter(&["verify", p(&grid), "--threshold", "simple"])),
        1
    );
}

#[test]
fn decompose_cocktail_writes_both_sets() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("a.grid");
    fs::write(&grid, fixtures::sh_star_10_8().to_grid_text(8)).unwrap();
    let prefix = dir.path().join("d");
    let out = heffter(&[
        "decompose",
        p(&grid),
        "--kind",
        "cocktail",
        "--out",
        p(&prefix),
        "--format",
        "structured",
    ]);
    assert_eq!(code(&out), 0);
    let cert = fs::read_to_string(dir.path().join("d.cert")).unwrap();
    for line in [
        "v=162",
        "row_cycles=10",
        "col_cycles=10",
        "rows_base_cycles=true",
        "cols_base_cycles=true",
        "orthogonal=true",
    ] {
        assert!(cert.contains(line), "missing {line}");
    }
    let rows = fs::read_to_string(dir.path().join("d.rows.cycles")).unwrap();
    assert!(rows.starts_with("#fmt 1\n162 8 10 cocktail\n"));

    let out = heffter(&[
        "orthogonal",
        p(&dir.path().join("d.rows.cycles")),
        p(&dir.path().join("d.cols.cycles")),
        "--naive",
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("naive oracle agrees"));
}

#[test]
fn decompose_non_simple_fails_without_output() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("h87.grid");
    fs::write(&grid, fixtures::h8_7().to_grid_text(7)).unwrap();
    let out = heffter(&[
        "decompose",
        p(&grid),
        "--kind",
        "complete",
        "--out",
        p(&dir.path().join("d")),
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(entries(dir.path()), 1);
}

#[test]
fn biembed_report() {
    let dir = tempfile::tempdir().unwrap();
    let grid = dir.path().join("d.grid");
    fs::write(&grid, fixtures::diagonal_9_5().to_grid_text(5)).unwrap();
    let out = heffter(&[
        "biembed",
        p(&grid),
        "--show-cycle",
        "--format",
        "structured",
    ]);
    let text = stdout(&out);
    assert!(text.contains("compatible=true"));
    assert!(text.contains("composition cycle 1: ("));
    assert!(!text.contains("composition cycle 2"));

    fs::write(&grid, fixtures::h8_7().to_grid_text(7)).unwrap();
    assert_eq!(code(&heffter(&["biembed", p(&grid)])), 1);
}

#[test]
fn search_statuses() {
    let out = heffter(&["search", "3", "3", "3", "3"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("status=ProvenAbsent"));

    let out = heffter(&["search", "4", "4", "3", "3"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let grid = &text[text.find("#fmt").unwrap()..];
    let g: GridFile = grid.parse().unwrap();
    assert!(verify(&g.array, 3).is_heffter());

    let out = heffter(&["search", "4", "4", "4", "4", "--nodes", "3"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("status=Unknown"));
}

#[test]
fn simple_ordering_command() {
    let out = heffter(&["simple-ordering", "-v", "25", "1", "2", "3", "-6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("ordering: 1 2 3 -6"));
    assert_eq!(
        code(&heffter(&["simple-ordering", "-v", "25", "1", "-1", "4"])),
        2
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&heffter(&["frobnicate"])), 2);
    assert_eq!(code(&heffter(&["construct", "12", "11"])), 2);
    assert_eq!(code(&heffter(&["verify", "/definitely/not/here"])), 2);
    assert_eq!(code(&heffter(&["decompose", "x", "--kind", "star"])), 2);
}

#[test]
fn nonexistent_parameters_exit_one() {
    let out = heffter(&["construct", "9", "9"]);
    assert_eq!(code(&out), 1);
}
