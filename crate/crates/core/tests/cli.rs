use std::path::{Path, PathBuf};
use std::process::{Command, Output};

struct Fixture {
    dir: tempfile::TempDir,
}

impl Fixture {
    fn example() -> Self {
        let f = Fixture { dir: tempfile::tempdir().unwrap() };
        f.write("text.txt", "adaaaabaabbaac\n");
        f.write("dict.txt", "3 4\n3 6\n9 12\n14 14\n4 5\n");
        f.write("queries.txt", "5 12\n2 6\n2 12\n");
        f
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, body: &str) -> PathBuf {
        let p = self.path(name);
        std::fs::write(&p, body).unwrap();
        p
    }
}

fn run(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_idmatch"))
        .args(args.iter().map(|a| a.as_ref()))
        .output()
        .unwrap()
}

fn query(f: &Fixture, queries: &Path, extra: &[&str]) -> Output {
    let mut args: Vec<&dyn AsRef<std::ffi::OsStr>> = vec![&"query"];
    let (t, d) = (f.path("text.txt"), f.path("dict.txt"));
    args.push(&t);
    args.push(&d);
    args.push(&queries);
    for e in extra {
        args.push(e);
    }
    run(&args)
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn example_answers() {
    let f = Fixture::example();
    let q = f.path("queries.txt");
    assert_eq!(stdout(&query(&f, &q, &["--mode", "squares"])), "3\n2\n4\n");
    assert_eq!(stdout(&query(&f, &q, &["--mode", "exact-pathset", "--m", "2"])), "2\n2\n3\n");
    assert_eq!(stdout(&query(&f, &q, &["--mode", "exact-canonical", "--m", "3", "--threads", "2"])), "2\n2\n3\n");
    assert_eq!(stdout(&query(&f, &q, &["--mode", "count"])), "3\n4\n6\n");
}

#[test]
fn squares_mode_ignores_dictionary() {
    let f = Fixture::example();
    let q = f.path("queries.txt");
    let missing = f.path("no-such-file");
    let o = run(&[&"query", &f.path("text.txt"), &missing, &q, &"--mode", &"squares"]);
    assert_eq!(stdout(&o), "3\n2\n4\n");
}

#[test]
fn empty_queries_give_empty_output() {
    let f = Fixture::example();
    let q = f.write("empty.txt", "");
    assert_eq!(stdout(&query(&f, &q, &["--mode", "approx2"])), "");
}

#[test]
fn errors_are_reported() {
    let f = Fixture::example();
    let q = f.path("queries.txt");
    let o = query(&f, &q, &["--mode", "approx2", "--m", "4"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not take --m"));
    let o = query(&f, &q, &["--mode", "exact-canonical"]);
    assert!(!o.status.success());
    let bad = f.write("bad.txt", "1 2\n3\n");
    let o = query(&f, &bad, &["--mode", "count"]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn dynamic_scripts() {
    let f = Fixture::example();
    let (t, d) = (f.path("text.txt"), f.path("dict.txt"));
    let approx = stdout(&query(&f, &f.path("queries.txt"), &["--mode", "approx2"]));
    let plain = f.write("plain.txt", "? 5 12\n? 2 6\n? 2 12\n");
    assert_eq!(stdout(&run(&[&"dynamic", &t, &d, &plain])), approx);

    let ins = f.write("ins.txt", "? 1 2\n+ 1 2\n? 1 2\n? 1 1\n");
    assert_eq!(stdout(&run(&[&"dynamic", &t, &d, &ins, &"--k", &"1"])), "0\n1\n0\n");

    let wipe = f.write("wipe.txt", "- 3 4\n- 3 6\n- 9 12\n- 14 14\n? 1 14\n? 5 12\n");
    assert_eq!(stdout(&run(&[&"dynamic", &t, &d, &wipe, &"--k", &"3"])), "0\n0\n");

    let bad = f.write("bad-ops.txt", "? 1 2\n* 1 2\n");
    let o = run(&[&"dynamic", &t, &d, &bad]);
    assert!(!o.status.success());
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn verify_and_bench() {
    let o = run(&[&"--seed", &"3", &"verify", &"--sizes", &"5,12", &"--trials", &"2"]);
    assert!(stdout(&o).contains("result=ok"));
    let o = run(&[&"bench", &"--n", &"300", &"--d", &"30", &"--m", &"8,32", &"--queries", &"20"]);
    let csv = stdout(&o);
    assert_eq!(csv.lines().next().unwrap(), idmatch::bench::CSV_HEADER);
    assert_eq!(csv.lines().count(), 1 + 3 + 2 * 2);
}
