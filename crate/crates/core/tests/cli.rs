use std::io::Write;
use std::process::{Command, Output, Stdio};

const TOY: &str = r#"{"factors":[{"family":"bernoulli","degree":1,"order":"1","scale":"1","shift":"0"},{"family":"euler","degree":1,"order":"1","scale":"1","shift":"0"}],"upper":"1"}"#;

fn bepoly() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_bepoly"));
    c.env_remove("BEPOLY_THREADS");
    c
}

fn run(args: &[&str]) -> Output {
    bepoly().args(args).output().expect("spawn bepoly")
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bepoly()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn bepoly");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim_end().to_string()
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("NDJSON line")).collect()
}

#[test]
fn poly_and_number() {
    let o = run(&["poly", "euler", "1", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "x - 3/2");
    assert_eq!(stdout(&run(&["poly", "bernoulli", "0", "5/2"])), "1");
    assert_eq!(stdout(&run(&["poly", "euler", "3", "1/2", "--at", "1/4"])), "0");
    assert_eq!(stdout(&run(&["poly", "bernoulli", "2", "1", "--json"])), r#"["1/6","-1","1"]"#);
    assert_eq!(stdout(&run(&["number", "bernoulli", "4"])), "-1/30");
    assert_eq!(stdout(&run(&["number", "euler", "4"])), "5");
    assert_eq!(stdout(&run(&["number", "euler", "1", "--order", "-2"])), "1");
}

#[test]
fn integral_inputs() {
    assert_eq!(stdout(&run(&["integral", TOY])), "1/12");
    assert_eq!(stdout(&run(&["integral", TOY, "--oracle"])), "1/12");
    assert_eq!(stdout(&run_stdin(&["integral"], TOY)), "1/12");
    assert_eq!(stdout(&run_stdin(&["integral", "-", "--oracle"], TOY)), "1/12");

    let path = std::env::temp_dir().join(format!("bepoly-cli-{}.json", std::process::id()));
    std::fs::write(&path, TOY).unwrap();
    let o = run(&["integral", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1/12");
}

#[test]
fn integral_truncation_order() {
    let spec = r#"{"factors":[{"family":"euler","degree":2,"order":"3","scale":"3","shift":"0"},{"family":"euler","degree":10,"order":"5","scale":"-3","shift":"4"}],"upper":"1"}"#;
    let closed = stdout(&run(&["integral", spec]));
    for mu in ["0", "1", "2"] {
        assert_eq!(stdout(&run(&["integral", spec, "--mu", mu])), closed, "mu={mu}");
    }
    assert_eq!(run(&["integral", spec, "--mu", "3"]).status.code(), Some(2));
    // the mixed toy has a Bernoulli factor, which the truncated form rejects
    assert_eq!(run(&["integral", TOY, "--mu", "0"]).status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["poly", "euler", "2", "1/0"]).status.code(), Some(2));
    assert_eq!(run(&["poly", "legendre", "2", "1"]).status.code(), Some(2));
    assert_eq!(run(&["integral", "{not json"]).status.code(), Some(2));
    assert_eq!(run(&["integral", "/nonexistent/spec.json"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    let o = bepoly().env("BEPOLY_THREADS", "zero").args(["poly", "euler", "1", "1"]).output().unwrap();
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_suite_and_summary() {
    let o = run(&["verify", "eq31"]);
    assert_eq!(o.status.code(), Some(0));
    let lines = json_lines(&o);
    assert!(lines.len() >= 200);
    assert!(lines.iter().all(|v| v["pass"] == true && v["identity_id"] == "eq31"));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains(&format!("{} checks, 0 failures", lines.len())), "{err}");

    let listed = stdout(&run(&["verify", "list"]));
    assert!(listed.lines().any(|l| l.starts_with("eq31\t")));
}

#[test]
fn single_case_and_failures() {
    let o = run(&["verify", "eq47c", "--r", "1", "--c", "3", "--d", "5"]);
    let lines = json_lines(&o);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["params"]["c"], "3");
    // (3,5) lies outside the odd-reciprocity domain
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(run(&["verify", "eq47c", "--r", "1", "--c", "1", "--d", "1"]).status.code(), Some(0));
}

#[test]
fn thread_count_does_not_change_output() {
    let default = run(&["verify", "eq33"]);
    let single = bepoly().env("BEPOLY_THREADS", "1").args(["verify", "eq33"]).output().unwrap();
    assert_eq!(default.status.code(), Some(0));
    assert_eq!(default.stdout, single.stdout);
}

#[test]
fn sum_and_transform_commands() {
    let o = run(&["dedekind", "--r", "1", "--c", "1", "--d", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json_lines(&o)[0]["params"]["t"].is_string());

    let o = run(&["hardy", "--r", "3", "--c", "3", "--d", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let v = &json_lines(&o)[0];
    assert!(v["params"]["s3"].is_string() && v["params"]["s4"].is_string());

    let o = run(&["reciprocity", "--m", "2", "--n", "3", "--b1", "2", "--b2", "3", "--x", "1/3", "--y1", "-1/2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 3);

    let o = run(&["laplace", "--n", "3", "--s", "2", "--t", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json_lines(&o).len(), 1);
}
