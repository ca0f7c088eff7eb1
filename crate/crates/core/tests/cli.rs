use std::process::{Command, Output};

fn stabq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabq"))
        .args(args)
        .env_remove("STABQ_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn help_documents_default_seed() {
    let o = stabq(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("0xD15EA5E"));
}

#[test]
fn indec_counts() {
    let o = stabq(&["indec", "--type", "D4", "--orientation", "010"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 13);
    assert_eq!(text.lines().last(), Some("count 12"));
}

#[test]
fn input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cyclic = dir.path().join("cyclic.json");
    std::fs::write(&cyclic, r#"{"vertices": 3, "arrows": [[1,2],[2,3],[3,1]]}"#).unwrap();
    let affine = dir.path().join("affine.json");
    std::fs::write(
        &affine,
        r#"{"vertices": 5, "arrows": [[1,5],[2,5],[3,5],[4,5]]}"#,
    )
    .unwrap();
    for args in [
        vec!["solve", "--quiver", cyclic.to_str().unwrap()],
        vec!["solve", "--quiver", affine.to_str().unwrap()],
        vec!["solve", "--quiver", "/nonexistent.json"],
        vec!["solve", "--type", "E9"],
        vec!["solve", "--type", "E7", "--orientation", "11111"],
        vec!["solve", "--type", "A3", "--seed", "banana"],
        vec!["solve", "--type", "A3", "--format", "yaml"],
    ] {
        assert_eq!(stabq(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn solve_and_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("result.json");
    let o = stabq(&[
        "solve",
        "--type",
        "D4",
        "--format",
        "json",
        "--out",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["status"], "feasible");

    let theta = dir.path().join("theta.json");
    std::fs::write(&theta, serde_json::to_string(&v["witness"]).unwrap()).unwrap();
    let o = stabq(&["verify", "--type", "D4", "--theta", theta.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));

    std::fs::write(&theta, r#"["0", "0", "0", "0"]"#).unwrap();
    let o = stabq(&["verify", "--type", "D4", "--theta", theta.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("violated"));

    std::fs::write(&theta, r#"["1", "2"]"#).unwrap();
    let o = stabq(&["verify", "--type", "D4", "--theta", theta.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn seed_from_environment() {
    let run = |seed: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_stabq"));
        cmd.args(["inequalities", "--type", "D5", "--format", "json"]);
        match seed {
            Some(s) => cmd.env("STABQ_SEED", s),
            None => cmd.env_remove("STABQ_SEED"),
        };
        cmd.output().unwrap()
    };
    let a = run(None);
    let b = run(Some("0xD15EA5E"));
    let c = run(Some("12345"));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let json = |o: &Output| -> serde_json::Value { serde_json::from_slice(&o.stdout).unwrap() };
    assert_eq!(json(&a)["seed"], 0xD15EA5E);
    assert_eq!(json(&c)["seed"], 12345);
    // Randomness only decides embeddings; the system itself is seed independent.
    assert_eq!(json(&a)["rows"], json(&c)["rows"]);
    assert_eq!(run(Some("nope")).status.code(), Some(2));
}

#[test]
fn inequalities_and_ar_exports() {
    let o = stabq(&["inequalities", "--type", "A2"]);
    assert_eq!(stdout(&o), "0 < x1 - x2    # [0,1] < [1,1]\n");
    let o = stabq(&["ar", "--type", "A3", "--format", "dot"]);
    assert!(stdout(&o).starts_with("digraph"));
    let o = stabq(&["ar", "--type", "A3"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["nodes"].as_array().unwrap().len(), 6);
}

#[test]
fn sweep_is_deterministic() {
    let a = stabq(&["sweep", "--type", "D5"]);
    let b = stabq(&["sweep", "--type", "D5"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("orientation,status,rows,digest"));
    assert_eq!(lines.filter(|l| l.contains(",feasible,")).count(), 16);
}
