use std::path::Path;
use std::process::{Command, Output};

fn hyperlag(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperlag"))
        .args(args)
        .env_remove("HYPERLAG_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

#[test]
fn gen_writes_canonical_files() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c.txt");
    let out = hyperlag(&["gen", "colex", "--r", "3", "--m", "5", "-o", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "3 5 5\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 2 5\n");

    let out = hyperlag(&["gen", "complete", "--r", "2", "--t", "3"]);
    assert_eq!(stdout(&out), "2 3 3\n1 2\n1 3\n2 3\n");
}

#[test]
fn compress_round_trips_through_files() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "g.txt", "2 4 2\n3 4\n1 4\n");
    let output = dir.path().join("out.txt");
    let out = hyperlag(&["compress", &input, "-o", output.to_str().unwrap()]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(std::fs::read_to_string(&output).unwrap(), "2 4 2\n1 2\n1 3\n");
    let again = hyperlag(&["compress", output.to_str().unwrap()]);
    assert_eq!(stdout(&again), "2 4 2\n1 2\n1 3\n");
}

#[test]
fn eval_accepts_fractions_and_decimals() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k3.txt", "2 3 3\n1 2\n1 3\n2 3\n");
    let out = hyperlag(&["eval", &g, "--weights", "1/3,1/3,1/3"]);
    assert_eq!(stdout(&out), "0.333333333333333\n");
    let out = hyperlag(&["eval", &g, "--weights", "0.5,0.5,0"]);
    assert_eq!(stdout(&out), "0.25\n");
    let out = hyperlag(&["eval", &g, "--weights", "0.5,0.6,0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn solve_reports_json() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "k4.txt", "3 4 4\n1 2 3\n1 2 4\n1 3 4\n2 3 4\n");
    let out = hyperlag(&["solve", &g]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert!((v["value"].as_f64().unwrap() - 4.0 / 64.0).abs() < 1e-12);
    assert_eq!(v["converged"], true);
    let text = hyperlag(&["solve", &g, "--format", "text"]);
    assert!(stdout(&text).starts_with("value        0.0625\n"));
}

#[test]
fn clique_and_link() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "2 4 4\n1 2\n1 3\n2 3\n3 4\n");
    let out = hyperlag(&["clique", &g, "--vertices"]);
    assert_eq!(stdout(&out), "3\n1 2 3\n");
    let out = hyperlag(&["link", &g, "--pin", "3"]);
    assert_eq!(stdout(&out), "1\n2\n4\n");
    let out = hyperlag(&["link", &g, "--pin", "4", "--complement"]);
    assert_eq!(stdout(&out), "1\n2\n");
}

#[test]
fn verify_exit_codes() {
    let out = hyperlag(&["verify", "lemma-2.2", "--r", "3", "--t", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["verdict"], "pass");

    let out = hyperlag(&[
        "--restarts", "1", "--max-iterations", "1", "--kkt-tolerance", "1e-300",
        "verify", "lemma-2.2", "--r", "3", "--t", "6",
    ]);
    assert_eq!(out.status.code(), Some(3));

    for bad in [
        &["verify", "no-such-claim", "--t", "6"][..],
        &["verify", "theorem-3.1", "--t", "5"],
        &["verify", "lemma-2.2", "--t", "6", "--m", "40"],
        &["verify", "conjecture-2.2", "--t", "6", "--budget", "max-instances=5"],
        &["solve", "/nonexistent/graph.txt"],
    ] {
        let out = hyperlag(bad);
        assert_eq!(out.status.code(), Some(2), "{bad:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn parse_errors_name_the_line() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "bad.txt", "3 4 2\n1 2 3\n1 2 9\n");
    let out = hyperlag(&["solve", &g]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("bad.txt"), "{err}");
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn verify_output_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for path in [&a, &b] {
        let out = hyperlag(&["verify", "theorem-3.1", "--t", "6", "-o", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let csv = hyperlag(&["verify", "lemma-2.2", "--r", "3", "--t", "5", "--format", "csv"]);
    let text = stdout(&csv);
    assert!(text.starts_with("m,n,edge_hash,value,reference,bound,margin,verdict\n"));
    assert_eq!(text.lines().count(), 1 + 4);
}

#[test]
fn seed_comes_from_environment_unless_overridden() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(dir.path(), "g.txt", "3 5 4\n1 2 3\n1 2 4\n3 4 5\n1 4 5\n");
    let run = |env: Option<&str>, extra: &[&str]| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_hyperlag"));
        cmd.env_remove("HYPERLAG_SEED");
        if let Some(seed) = env {
            cmd.env("HYPERLAG_SEED", seed);
        }
        let out = cmd.args(extra).args(["solve", &g]).output().unwrap();
        assert!(out.status.success());
        serde_json::from_slice::<serde_json::Value>(&out.stdout).unwrap()
    };
    let base = run(None, &[]);
    assert_eq!(run(Some("0"), &[]), base);
    assert_eq!(run(Some("7"), &[]), run(None, &["--seed", "7"]));
    assert_eq!(run(Some("7"), &["--seed", "0"]), base);

    let bad = Command::new(env!("CARGO_BIN_EXE_hyperlag"))
        .env("HYPERLAG_SEED", "seven")
        .args(["solve", &g])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn config_file_sets_solver_and_budget() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = write(dir.path(), "c.toml", "[budget]\nmax-instances = 5\n");
    let out = hyperlag(&["--config", &cfg, "verify", "conjecture-2.2", "--t", "6"]);
    assert_eq!(out.status.code(), Some(2));
    let cfg = write(dir.path(), "d.toml", "[solver]\nrestarts = 8\nunknown = 1\n");
    let out = hyperlag(&["--config", &cfg, "verify", "lemma-2.2", "--t", "5"]);
    assert_eq!(out.status.code(), Some(2));
}
