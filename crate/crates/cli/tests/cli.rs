use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hasse-paths"))
        .args(args)
        .env_remove("HASSE_PATHS_MAX_CELLS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn table_matches_golden_fixtures() {
    let csv = run(&["table", "--format", "csv"]);
    assert_eq!(code(&csv), 0);
    assert_eq!(stdout(&csv), include_str!("fixtures/edge_table.csv"));
    let text = run(&["table", "--max-n", "10"]);
    assert_eq!(stdout(&text), include_str!("fixtures/edge_table.txt"));
}

#[test]
fn table_edge_cases() {
    let zero = stdout(&run(&["table", "--max-n", "0", "--format", "csv"]));
    for line in zero.lines().skip(1) {
        assert!(line.ends_with(",0"), "{line}");
    }
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["table", "--format", "json"]))).unwrap();
    assert_eq!(json[7]["class"], "GS");
    assert_eq!(json[7]["edges"][10], "47800080");
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["table", "--format", "json"][..],
        &["verify", "all", "--max-n", "4"],
        &["series", "delta", "--class", "GM", "-N", "5"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn verify_routes_agree() {
    let out = run(&["verify", "all", "--max-n", "6"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).ends_with("all 56 cells agree\n"));
    let out = run(&["verify", "DD", "--max-n", "10", "--routes", "enum,formula"]);
    assert_eq!(code(&out), 0);
    let out = run(&["verify", "FF", "--max-n", "7", "--routes", "order,formula"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn exit_codes() {
    let fault = run(&["verify", "MM", "--max-n", "5", "--inject-fault", "MM:4"]);
    assert_eq!(code(&fault), 1);
    assert!(String::from_utf8_lossy(&fault.stderr).contains("MM n=4"));

    assert_eq!(code(&run(&["verify", "GS", "--max-n", "9"])), 3);
    assert_eq!(
        code(&run(&["verify", "GD", "--max-n", "6", "--routes", "order"])),
        3
    );
    assert_eq!(
        code(&run(&["distribution", "--class", "DD", "-n", "11"])),
        3
    );
    assert_eq!(
        code(&run(&[
            "distribution",
            "--class",
            "DD",
            "-n",
            "11",
            "--force"
        ])),
        0
    );

    assert_eq!(code(&run(&["young", "--partition", "1,2"])), 2);
    assert_eq!(code(&run(&["young", "--partition", "2,x"])), 2);
    assert_eq!(code(&run(&["index", "--class", "XX", "-n", "3"])), 2);
    assert_eq!(code(&run(&["index", "--class", "DD", "-n", "-1"])), 2);
    assert_eq!(code(&run(&["series", "base:Q"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(code(&run(&["verify", "DD", "--inject-fault", "DD"])), 2);
}

#[test]
fn brute_force_cap_from_environment() {
    let lambda = "12,10,10,8,6,6,6,2,1";
    let capped = Command::new(env!("CARGO_BIN_EXE_hasse-paths"))
        .args(["young", "--partition", lambda, "--brute"])
        .env("HASSE_PATHS_MAX_CELLS", "1000")
        .output()
        .unwrap();
    assert_eq!(code(&capped), 3);
    let fast = stdout(&run(&["young", "--partition", lambda]));
    let brute = stdout(&run(&["young", "--partition", lambda, "--brute"]));
    assert_eq!(fast, brute);
}

#[test]
fn series_examples() {
    assert_eq!(
        stdout(&run(&["series", "edge", "--class", "GM", "-N", "6"])),
        "0,0,2,8,30,104,350\n"
    );
    assert_eq!(
        stdout(&run(&["series", "base:C", "-N", "4"])),
        "1,1,2,5,14\n"
    );
    let delta = stdout(&run(&["series", "delta", "--class", "DD", "-N", "3"]));
    assert_eq!(delta, "1\n1\n1 + q\n1 + 3q + q^2\n");
    let via = stdout(&run(&[
        "series",
        "edge-via-delta",
        "--class",
        "SS",
        "-N",
        "5",
    ]));
    assert_eq!(via, "0,1,6,34,190,1058\n");
}

#[test]
fn young_index_and_distribution() {
    assert_eq!(stdout(&run(&["young", "--partition", "2,1"])), "5\n");
    let full: serde_json::Value =
        serde_json::from_str(&stdout(&run(&["young", "--partition", "3,3", "--full"]))).unwrap();
    assert_eq!(full["ideal_size"], "10");
    assert_eq!(full["edges"], "12");
    assert_eq!(full["corner_cells"], serde_json::json!([[2, 3]]));

    assert_eq!(
        stdout(&run(&["index", "--class", "GD", "-n", "9"])),
        "9/2 (Boolean)\n"
    );
    let ff = stdout(&run(&[
        "index",
        "--class",
        "FF",
        "-n",
        "20",
        "--asymptotic",
    ]));
    assert!(ff.contains("(not quasi Boolean)"), "{ff}");
    assert!(ff.contains("tamed: no"), "{ff}");

    let dist = stdout(&run(&["distribution", "--class", "DD", "-n", "3"]));
    assert_eq!(dist, "Δ: 1 + 3q + q^2\n∇: 1 + 3q + q^2\n");
}
