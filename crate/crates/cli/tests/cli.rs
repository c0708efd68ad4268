use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

const EXE: &str = env!("CARGO_BIN_EXE_dyadgen");

fn run(args: &[&str]) -> Output {
    Command::new(EXE)
        .args(args)
        .env_remove("DYADGEN_WORKERS")
        .output()
        .expect("spawn dyadgen")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("../core/tests/fixtures")
        .join(name)
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

const PARAMS: [&str; 8] = [
    "--alpha",
    "1",
    "--theta-in",
    "0.5",
    "--theta-out",
    "0.25",
    "--seed",
    "7",
];

fn sample(dir: &Path, name: &str, extra: &[&str]) -> (PathBuf, Output) {
    let path = dir.join(name);
    let mut args = vec!["sample"];
    args.extend(PARAMS);
    args.extend(extra);
    args.extend(["--out", path_str(&path)]);
    let out = run(&args);
    (path, out)
}

#[test]
fn enumerate_counts_and_files() {
    let out = run(&["enumerate", "--closed"]);
    assert_eq!(code(&out), 0);
    let lines: Vec<String> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines.len(), 21);
    assert_eq!(lines[0], "∅");
    assert!(lines.contains(&"Old/Near (Mid/Path/Far/Hub)".to_string()));

    let out = run(&["enumerate"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out).lines().count(), 96);

    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("hasse.dot");
    let csv = dir.path().join("table.csv");
    let out = run(&[
        "enumerate",
        "--closed",
        "--hasse",
        path_str(&dot),
        "--table",
        path_str(&csv),
    ]);
    assert_eq!(code(&out), 0);
    let dot = fs::read_to_string(dot).unwrap();
    assert_eq!(dot.matches("label=").count(), 21);
    assert_eq!(dot.matches("->").count(), 33);
    let csv = fs::read_to_string(csv).unwrap();
    assert_eq!(csv.lines().count(), 9);
}

#[test]
fn usage_errors_exit_1() {
    let dir = tempfile::tempdir().unwrap();
    let same = dir.path().join("x");
    assert_eq!(
        code(&run(&[
            "enumerate",
            "--hasse",
            path_str(&same),
            "--table",
            path_str(&same)
        ])),
        1
    );
    assert_eq!(code(&run(&["enumerate", "--bogus"])), 1);
    assert_eq!(code(&run(&["frobnicate"])), 1);
    let (_, out) = sample(dir.path(), "a", &["--n", "10", "--events"]);
    assert_eq!(code(&out), 1, "{}", stderr(&out));
    let (_, out) = sample(
        dir.path(),
        "a",
        &["--n", "10", "--model", "dorpa", "--workers", "2"],
    );
    assert_eq!(code(&out), 1);
    let (_, out) = sample(dir.path(), "a", &["--n", "10", "--block-size", "3"]);
    assert_eq!(code(&out), 1);
    assert_eq!(code(&run(&["verify", "--criteria", "12"])), 1);
    assert_eq!(code(&run(&["--help"])), 0);
}

#[test]
fn validation_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "sample",
        "--alpha",
        "1",
        "--theta-in",
        "1.5",
        "--theta-out",
        "0",
        "--n",
        "10",
        "--out",
        path_str(&dir.path().join("x")),
    ]);
    assert_eq!(code(&out), 2);
    assert!(
        stderr(&out).contains("theta_in must lie in [0, 1]"),
        "{}",
        stderr(&out)
    );
    let out = run(&[
        "sample",
        "--alpha",
        "0",
        "--theta-in",
        "0.5",
        "--theta-out",
        "0",
        "--n",
        "10",
        "--out",
        path_str(&dir.path().join("x")),
    ]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("alpha must be > 0"));

    let bad = dir.path().join("bad.txt");
    fs::write(
        &bad,
        "dyadgen-net v1 n=4 alpha=1 beta=1 theta_in=0 theta_out=0 seed=1 model=dapa\n1 2\n3 2\n",
    )
    .unwrap();
    let out = run(&["analyze", path_str(&bad), "--out-dir", path_str(dir.path())]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("line 3"), "{}", stderr(&out));
}

#[test]
fn sampling_is_reproducible_and_worker_independent() {
    let dir = tempfile::tempdir().unwrap();
    let (a, out) = sample(dir.path(), "a.txt", &["--n", "20000"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let (b, _) = sample(dir.path(), "b.txt", &["--n", "20000"]);
    let (w1, _) = sample(dir.path(), "w1.txt", &["--n", "20000", "--workers", "1"]);
    let (w4, _) = sample(dir.path(), "w4.txt", &["--n", "20000", "--workers", "4"]);
    let bytes = fs::read(&a).unwrap();
    assert_eq!(bytes, fs::read(b).unwrap());
    assert_eq!(bytes, fs::read(w1).unwrap());
    assert_eq!(bytes, fs::read(&w4).unwrap());

    let manifest = fs::read_to_string(dir.path().join("w4.txt.manifest")).unwrap();
    for key in [
        "seed=7",
        "workers=4",
        "block_size=5000",
        "rounds=7",
        "model=dapa",
        "version=",
    ] {
        assert!(manifest.contains(key), "{key} missing from\n{manifest}");
    }

    // worker count from the environment
    let env_out = dir.path().join("env.txt");
    let mut args = vec!["sample"];
    args.extend(PARAMS);
    args.extend(["--n", "20000", "--out", path_str(&env_out)]);
    let out = Command::new(EXE)
        .args(&args)
        .env("DYADGEN_WORKERS", "3")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
    assert_eq!(bytes, fs::read(&env_out).unwrap());
    let manifest = fs::read_to_string(dir.path().join("env.txt.manifest")).unwrap();
    assert!(manifest.contains("workers=3"));
}

#[test]
fn dorpa_events_match_sequential() {
    let dir = tempfile::tempdir().unwrap();
    let (seq, out) = sample(dir.path(), "seq.txt", &["--n", "3000", "--model", "dorpa"]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let want = fs::read(seq).unwrap();
    for order in ["fifo", "lifo", "random"] {
        let (ev, out) = sample(
            dir.path(),
            &format!("ev-{order}.txt"),
            &[
                "--n",
                "3000",
                "--model",
                "dorpa",
                "--events",
                "--pop-order",
                order,
            ],
        );
        assert_eq!(code(&out), 0);
        assert_eq!(fs::read(ev).unwrap(), want, "{order}");
    }
    let manifest = fs::read_to_string(dir.path().join("ev-random.txt.manifest")).unwrap();
    assert!(manifest.contains("sampler=events"));
    assert!(manifest.contains("pop_order=random"));
}

#[test]
fn analyze_golden_fixture() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&[
        "analyze",
        path_str(&fixture("dapa_n64_seed7.txt")),
        "--out-dir",
        path_str(dir.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let golden = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden/dapa_n64");
    for name in [
        "degree_hist.csv",
        "ccdf.csv",
        "avg_degree.csv",
        "regime_report.csv",
    ] {
        assert_eq!(
            fs::read_to_string(dir.path().join(name)).unwrap(),
            fs::read_to_string(golden.join(name)).unwrap(),
            "{name}"
        );
    }
}

#[test]
fn analyze_empty_network() {
    let dir = tempfile::tempdir().unwrap();
    let input = dir.path().join("empty.txt");
    fs::write(
        &input,
        "dyadgen-net v1 n=10 alpha=1 beta=1 theta_in=0.6 theta_out=0.6 seed=0 model=dapa\n",
    )
    .unwrap();
    let out = run(&[
        "analyze",
        path_str(&input),
        "--out-dir",
        path_str(dir.path()),
    ]);
    assert_eq!(code(&out), 0, "{}", stderr(&out));
    let report = fs::read_to_string(dir.path().join("regime_report.csv")).unwrap();
    assert!(report.contains("\navg_degree,,0,,,\n"), "{report}");
    let gamma_line = report.lines().find(|l| l.starts_with("gamma,")).unwrap();
    assert_eq!(gamma_line.matches(',').count(), 5);
    let predicted: f64 = gamma_line.split(',').nth(1).unwrap().parse().unwrap();
    assert!((predicted - 3.5).abs() < 1e-12, "{report}");
    assert!(
        gamma_line.ends_with(",,,,"),
        "no tail fit expected: {report}"
    );
    assert!(!report.contains("tail_dmin"));
    let hist = fs::read_to_string(dir.path().join("degree_hist.csv")).unwrap();
    assert_eq!(hist, "degree,count\n0,10\n");
}

#[test]
fn verify_subset() {
    let out = run(&["verify", "--criteria", "1,2,3,9,11"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    let text = stdout(&out);
    assert_eq!(text.matches("[PASS]").count(), 5);
    assert!(text.contains("5 of 5 criteria passed"));
}

#[test]
fn closure_query() {
    let out = run(&["closure", "Old,Mid"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "{Path,Old,Far,Mid}\tOld/Mid (Path/Far)\n");
    assert_eq!(code(&run(&["closure", "Hub,Bogus"])), 2);
}
