use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_intposet"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn intervals_sorted_by_length() {
    let o = run(&["intervals", "21"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "{1} {2} [1,2]\n");
}

#[test]
fn classify_line() {
    let o = run(&["classify", "4253716"]);
    assert_eq!(
        stdout(&o),
        "simple: false, block-wise simple: true, tree poset: true\n"
    );
}

#[test]
fn poset_lists_hasse_edges() {
    let text = stdout(&run(&["poset", "2413"]));
    assert!(text.starts_with("n 4\n"));
    assert_eq!(text.matches("# [1,4] -> ").count(), 4);
}

#[test]
fn phi_then_inverse() {
    let phi = stdout(&run(&["phi", "5123647"]));
    let chords: Vec<String> = phi.lines().skip(1).map(|l| l.replace(' ', ",")).collect();
    let mut args = vec!["inverse", "8"];
    args.extend(chords.iter().map(String::as_str));
    let back = stdout(&run(&args));
    let poset = stdout(&run(&["poset", "5123647"]));
    assert!(back.starts_with(poset.split("# hasse").next().unwrap()));
    assert!(back.contains("# validate: pass"));
}

#[test]
fn inverse_reports_failed_validation() {
    let o = run(&["inverse", "5", "1,3", "2,4"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("# validate: fail: closure"));
}

#[test]
fn realize_from_file() {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR"));
    let path = dir.join("family.txt");
    std::fs::write(&path, "n 7\n1 2\n2 3\n1 3\n1 6\n").unwrap();
    let o = run(&["realize", "--n", "7", "--intervals", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "4612357\n");

    std::fs::write(&path, "1 3\n2 4\n").unwrap();
    let o = run(&["realize", "--n", "4", "--intervals", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "none\n");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(run(&["classify", "1223"]).status.code(), Some(1));
    assert_eq!(
        run(&["render", "--poset", "--format", "svg", "3142"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["census", "--class", "tree", "--max-n", "9"])
            .status
            .code(),
        Some(3)
    );
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn census_json_output() {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join("census.json");
    let o = run(&[
        "census",
        "--class",
        "all",
        "--max-n",
        "5",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let counts: Vec<u64> = v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["poset_count"].as_u64().unwrap())
        .collect();
    assert_eq!(counts, [1, 1, 3, 12, 52]);
    assert_eq!(v["rows"][0]["class"], "all");
}

#[test]
fn verify_small() {
    let o = run(&["verify", "--max-n", "5"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}
