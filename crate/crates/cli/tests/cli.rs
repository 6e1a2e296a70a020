use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use tempfile::TempDir;

fn upto(args: &[&str], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_upto"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

struct Files(TempDir);

impl Files {
    fn new() -> Self {
        Files(TempDir::new().unwrap())
    }

    fn put(&self, name: &str, body: &str) -> String {
        let p: PathBuf = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_owned()
    }
}

// 0 deadlocks, 1 loops on a, 2 and 3 form an a-cycle.
const ZOO: &str = "des (0, 3, 4)\n(1, \"a\", 1)\n(2, \"a\", 3)\n(3, \"a\", 2)\n";

#[test]
fn gallery_output_feeds_strata() {
    let t3 = upto(&["gallery", "3"], None);
    assert_eq!(t3.status.code(), Some(0));
    let s = upto(&["strata", "-"], Some(&stdout(&t3)));
    assert_eq!(s.status.code(), Some(0));
    let out = stdout(&s);
    assert!(out.starts_with("epsilon: 3\n"), "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with('~')).count(), 4);
}

#[test]
fn gallery_verify_passes() {
    let o = upto(&["gallery", "5", "--verify"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "T_5: epsilon = 5\npass\n");
}

#[test]
fn bisim_of_loop_and_cycle() {
    let f = Files::new();
    let lts = f.put("zoo.aut", ZOO);
    let o = upto(&["bisim", &lts], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    for pair in ["(0,0)", "(1,2)", "(2,3)", "(3,1)"] {
        assert!(out.contains(pair), "{pair} missing from {out}");
    }
    assert!(!out.contains("(0,1)"));
}

#[test]
fn companion_reports_stratum() {
    let f = Files::new();
    let t2 = f.put("t2.aut", &stdout(&upto(&["gallery", "2"], None)));
    let rel = f.put("r.rel", "name: R\n(1,2)\n");
    let o = upto(&["companion", &t2, &rel], None);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("stratum: 1\n"), "{out}");
    assert!(out.contains("(1,2)") && out.contains("(2,1)") && !out.contains("(0,1)"));
}

#[test]
fn check_upto_exit_codes() {
    let f = Files::new();
    let lts = f.put("zoo.aut", ZOO);
    let empty = f.put("empty.rel", "name: Empty\n");
    let o = upto(&["check-upto", &lts, &empty], None);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("conclusion: contained_in_bisimilarity"));

    let bad = f.put("bad.rel", "name: Bad\n(0,1)\n");
    let o = upto(&["check-upto", &lts, &bad], None);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("progression: fails"), "{out}");
    assert!(out.contains("conclusion: inconclusive"));

    let cyc = f.put("cyc.json", r#"{"name": "Cyc", "pairs": [[1, 2], [1, 3]]}"#);
    let o = upto(&["check-upto", &lts, &cyc, "--fn", "upto_bisim"], None);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let f = Files::new();
    let lts = f.put("zoo.aut", ZOO);
    let rel = f.put("r.rel", "(0,0)\n");
    let o = upto(&["check-upto", &lts, &rel, "--fn", "no_such_fn"], None);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("no_such_fn"));

    let broken = f.put("broken.aut", "des (0, 1, 2)\n(0, \"a\"\n");
    assert_eq!(upto(&["strata", &broken], None).status.code(), Some(2));

    let out_of_range = f.put("oor.rel", "(0,9)\n");
    assert_eq!(upto(&["companion", &lts, &out_of_range], None).status.code(), Some(2));

    assert_eq!(upto(&["bisim", "/nonexistent/x.aut"], None).status.code(), Some(2));
}

#[test]
fn functions_lists_the_catalog() {
    let out = stdout(&upto(&["functions"], None));
    let names: Vec<&str> = out.lines().collect();
    assert_eq!(names.len(), 27);
    for n in ["lrf", "identity", "upto_bisim", "upto_bisim.union_bisim"] {
        assert!(names.contains(&n), "{n}");
    }
}

#[test]
fn export_dot_marks_initial_state() {
    let f = Files::new();
    let lts = f.put("zoo.aut", ZOO);
    let out = stdout(&upto(&["export-dot", &lts], None));
    assert!(out.starts_with("digraph"));
    assert!(out.contains("doublecircle"));
    assert_eq!(out.matches("label=\"a\"").count(), 3);
}

#[test]
fn lattice_companion_on_diamond() {
    let f = Files::new();
    let lat = f.put(
        "diamond.lat",
        "order: cover\nelements: bot x y top\n(bot,x)\n(bot,y)\n(x,top)\n(y,top)\n",
    );
    // s(bot) = bot, s(b) = top otherwise.
    let mut pairs = String::from("(bot,bot)\n");
    for a in ["bot", "x", "y", "top"] {
        for b in ["x", "y", "top"] {
            pairs.push_str(&format!("({a},{b})\n"));
        }
    }
    let prog = f.put("p.rel", &pairs);
    let o = upto(&["lattice-companion", &lat, &prog], None);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let out = stdout(&o);
    assert!(out.contains("z0: top"), "{out}");
    assert!(out.contains("  top -> top"));

    let not_prog = f.put("q.rel", "(top,bot)\n");
    assert_eq!(upto(&["lattice-companion", &lat, &not_prog], None).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let args = ["verify", "--seed", "7", "--samples", "50"];
    let a = upto(&args, None);
    let b = upto(&args, None);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let out = stdout(&a);
    assert!(out.contains("\"seed\": 7"));
    assert!(out.contains("\"passed\": true"));
}
