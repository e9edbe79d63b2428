use std::path::Path;
use std::process::{Command, Output};

fn thetamd(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_thetamd"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Drops the trailing `ms` column so runs can be compared byte for byte.
fn without_ms(csv: &str) -> String {
    csv.lines()
        .map(|l| l.rsplit_once(',').unwrap().0.to_string() + "\n")
        .collect()
}

#[test]
fn beta_examples() {
    let o = thetamd(&["beta", "theta:1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).lines().next(),
        Some("beta=2 predicted=2 (thm:GTGEndResult)")
    );
    let o = thetamd(&["beta", "theta:2,2,2,4"]);
    assert_eq!(
        stdout(&o).lines().next(),
        Some("beta=4 predicted=4 (thm:onedifferents1>s2)")
    );
    let o = thetamd(&["beta", "theta:1,1"]);
    assert_eq!(stdout(&o).lines().next(), Some("beta=2 (cycle C4)"));
}

#[test]
fn all_witnesses_lists_bases_in_order() {
    let o = thetamd(&["beta", "theta:1,1,1", "--all-witnesses"]);
    let text = stdout(&o);
    assert!(text.contains("bases 6\n"), "{text}");
    let listed: Vec<&str> = text.lines().filter(|l| l.starts_with("  {")).collect();
    assert_eq!(listed.len(), 6);
    assert_eq!(listed[0], "  {c1, v:1:1, v:2:1}");
}

#[test]
fn verify_examples() {
    let o = thetamd(&["verify", "theta:1,1,1", "v:1:1", "v:2:1"]);
    assert_eq!(stdout(&o), "NOT resolving: c1 ~ c2 both (1,1)\n");
    assert_eq!(o.status.code(), Some(1));
    let o = thetamd(&["verify", "theta:2,2,6", "v:2:1", "v:3:1"]);
    assert_eq!(
        (stdout(&o).as_str(), o.status.code()),
        ("resolving\n", Some(0))
    );
    let o = thetamd(&["verify", "theta:3,3", "c1", "c2"]);
    assert!(stdout(&o).starts_with("NOT resolving:") && stdout(&o).ends_with("(cycle C8)\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(thetamd(&["beta", "theta:1,x"]).status.code(), Some(2));
    assert_eq!(thetamd(&["beta", "1,2,3"]).status.code(), Some(2));
    assert_eq!(
        thetamd(&["verify", "theta:1,2,3", "v:7:1"]).status.code(),
        Some(2)
    );
    assert_eq!(
        thetamd(&["verify", "theta:1,2,3", "w"]).status.code(),
        Some(2)
    );
    assert_eq!(thetamd(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(thetamd(&["beta", "theta:8,8,8,8"]).status.code(), Some(3));
    assert_eq!(
        thetamd(&["beta", "theta:8,8,8,8", "--guard-n", "40"])
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        thetamd(&["sweep", "--max-m", "3", "--max-s", "3"])
            .status
            .code(),
        Some(0)
    );
}

#[test]
fn sweep_reports_are_reproducible() {
    let args = ["sweep", "--max-m", "4", "--max-s", "3", "--format", "csv"];
    let a = stdout(&thetamd(&args));
    let b = stdout(&thetamd(&[&args[..], &["--jobs", "1"]].concat()));
    assert_eq!(without_ms(&a), without_ms(&b));

    let json = |jobs: &str| {
        let text = stdout(&thetamd(&[
            "sweep", "--max-m", "3", "--max-s", "3", "--jobs", jobs,
        ]));
        let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["schema"], 1);
        v["generated_at"] = 0.into();
        for row in v["rows"].as_array_mut().unwrap() {
            row["ms"] = 0.into();
        }
        v
    };
    assert_eq!(json("1"), json("2"));
}

#[test]
fn sweep_matches_golden_corpus() {
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/sweep_m2-4_s3.csv");
    let out = stdout(&thetamd(&[
        "sweep", "--max-m", "4", "--max-s", "3", "--format", "csv",
    ]));
    let expected = std::fs::read_to_string(&golden).expect("golden file present");
    assert_eq!(
        without_ms(&out),
        expected,
        "regenerate {} if the change is intended",
        golden.display()
    );
}

#[test]
fn sweep_writes_to_out_path() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("sweep.json");
    let o = thetamd(&[
        "sweep",
        "--max-m",
        "3",
        "--max-s",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(std::fs::read_to_string(&path)
        .unwrap()
        .contains("\"schema\": 1"));
    let bad = thetamd(&[
        "sweep",
        "--max-m",
        "3",
        "--max-s",
        "2",
        "--out",
        "/nonexistent/dir/x.json",
    ]);
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn open_cases_table() {
    let o = thetamd(&[
        "open-cases",
        "--min-m",
        "5",
        "--max-m",
        "5",
        "--max-s",
        "4",
        "--format",
        "csv",
    ]);
    let text = stdout(&o);
    assert!(text.starts_with("spec,n,m,lo,hi,theorem,beta\n"));
    assert!(
        text.contains("\"theta:2,4,4,4,4\",20,5,3,4,thm:Boundfors2<s1OneDifferent,"),
        "{text}"
    );
    assert!(!text.contains("\"theta:2,2,2,2,2\""));
}

#[test]
fn cycles_table() {
    let o = thetamd(&["cycles", "--max-n", "10"]);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 8);
    assert!(rows
        .iter()
        .all(|r| r["beta"] == 2 && r["mmd_characterization_ok"] == true));
}
